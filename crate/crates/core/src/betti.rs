//! Betti number containers: graded tables indexed by (homological degree,
//! standard degree) and multigraded maps indexed by (homological degree,
//! multidegree). Absent entries are zero.

use std::collections::BTreeMap;

use crate::monomial::{Monomial, Multidegree};

/// Graded Betti numbers: `(i, j) -> b_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new() -> Self {
        BettiTable::default()
    }

    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(entries: I) -> Self {
        let mut t = BettiTable::new();
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_homological_degree(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    /// Total Betti numbers: the row sums `b_i = sum_j b_{i,j}`.
    pub fn totals(&self) -> BTreeMap<usize, u64> {
        let mut out = BTreeMap::new();
        for (&(i, _), &v) in &self.entries {
            *out.entry(i).or_insert(0) += v;
        }
        out
    }

    /// Converts ideal Betti numbers to quotient-ring Betti numbers:
    /// shifts every homological degree up by one and records the rank-one
    /// free module in position (0, 0).
    pub fn to_quotient(&self) -> BettiTable {
        let mut out = BettiTable::new();
        out.add(0, 0, 1);
        for (&(i, j), &v) in &self.entries {
            out.add(i + 1, j, v);
        }
        out
    }

    /// Inverse of [`to_quotient`]: drops the (0, 0) entry and shifts every
    /// homological degree down by one.
    ///
    /// [`to_quotient`]: BettiTable::to_quotient
    pub fn to_ideal(&self) -> BettiTable {
        debug_assert_eq!(self.get(0, 0), 1, "quotient tables start with b_{{0,0}} = 1");
        let mut out = BettiTable::new();
        for (&(i, j), &v) in &self.entries {
            if i > 0 {
                out.add(i - 1, j, v);
            }
        }
        out
    }
}

/// Multigraded Betti numbers: `(i, m) -> b_{i,m}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultigradedBettiMap {
    entries: BTreeMap<(usize, Multidegree), u64>,
}

impl MultigradedBettiMap {
    pub fn new() -> Self {
        MultigradedBettiMap::default()
    }

    pub fn get(&self, i: usize, m: &Multidegree) -> u64 {
        self.entries.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, m: Multidegree, value: u64) {
        if value > 0 {
            *self.entries.entry((i, m)).or_insert(0) += value;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Multidegree, u64)> + '_ {
        self.entries.iter().map(|(&(i, ref m), &v)| (i, m, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The distinct multidegrees with a nonzero entry.
    pub fn multidegrees(&self) -> Vec<&Multidegree> {
        let mut out: Vec<&Multidegree> = self.entries.keys().map(|(_, m)| m).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Collapses the multigrading: `b_{i,j} = sum over deg(m) = j of b_{i,m}`.
    pub fn graded(&self) -> BettiTable {
        let mut out = BettiTable::new();
        for (&(i, ref m), &v) in &self.entries {
            out.add(i, m.degree(), v);
        }
        out
    }

    /// Quotient-ring shift; see [`BettiTable::to_quotient`].
    pub fn to_quotient(&self) -> MultigradedBettiMap {
        let mut out = MultigradedBettiMap::new();
        out.add(0, Monomial::identity(), 1);
        for (&(i, ref m), &v) in &self.entries {
            out.add(i + 1, m.clone(), v);
        }
        out
    }

    /// Inverse of [`to_quotient`].
    ///
    /// [`to_quotient`]: MultigradedBettiMap::to_quotient
    pub fn to_ideal(&self) -> MultigradedBettiMap {
        let mut out = MultigradedBettiMap::new();
        for (&(i, ref m), &v) in &self.entries {
            if i > 0 {
                out.add(i - 1, m.clone(), v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_collapse_sums_by_degree() {
        let mut map = MultigradedBettiMap::new();
        let abe = Monomial::squarefree([0, 1, 2]);
        let cde = Monomial::squarefree([3, 4, 2]);
        map.add(1, abe, 2);
        map.add(1, cde, 2);
        let t = map.graded();
        assert_eq!(t.get(1, 3), 4);

        let mut principal = MultigradedBettiMap::new();
        principal.add(0, Monomial::squarefree([0, 1]), 1);
        assert_eq!(
            principal.graded(),
            BettiTable::from_entries([((0, 2), 1)])
        );

        assert!(MultigradedBettiMap::new().graded().is_empty());
    }

    #[test]
    fn totals_are_row_sums() {
        let t = BettiTable::from_entries([((0, 2), 2), ((1, 3), 1)]);
        let totals = t.totals();
        assert_eq!(totals[&0], 2);
        assert_eq!(totals[&1], 1);
        assert!(BettiTable::new().totals().is_empty());
    }

    #[test]
    fn quotient_shift_and_inverse() {
        let t = BettiTable::from_entries([((0, 2), 2), ((1, 3), 1)]);
        let q = t.to_quotient();
        assert_eq!(
            q,
            BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 3), 1)])
        );
        assert_eq!(q.to_ideal(), t);

        // The zero ideal resolves to the free module S alone.
        assert_eq!(
            BettiTable::new().to_quotient(),
            BettiTable::from_entries([((0, 0), 1)])
        );
    }

    #[test]
    fn multigraded_quotient_round_trip() {
        let mut map = MultigradedBettiMap::new();
        map.add(0, Monomial::squarefree([0, 1]), 1);
        map.add(1, Monomial::squarefree([0, 1, 2]), 1);
        assert_eq!(map.to_quotient().to_ideal(), map);
    }
}
