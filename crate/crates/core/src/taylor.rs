//! The homology oracle: subcomplexes of the Taylor simplex and the Betti
//! numbers they compute.
//!
//! For an ideal minimally generated by `m_1, ..., m_s`, the Taylor simplex
//! is the full simplex on vertices labeled by the generators, and for a
//! monomial `m` the subcomplex below `m` keeps exactly the faces whose lcm
//! strictly divides `m`. The multigraded Betti number `b_{i,m}` is the
//! dimension of the reduced homology of that subcomplex in degree `i - 1`
//! whenever `m` divides the lcm of all generators, and zero otherwise.

use std::collections::BTreeMap;

use crate::betti::MultigradedBettiMap;
use crate::error::{Error, Result};
use crate::field::{DenseMatrix, PrimeField};
use crate::monomial::{Monomial, MonomialIdeal};

/// Default cap on the generator count for whole-ideal scans.
pub const DEFAULT_GENERATOR_CAP: usize = 20;

/// A downward-closed set of faces of a Taylor simplex, each face a bitmask
/// of generator indices. The void complex (no faces at all) is distinct
/// from the empty complex (only the empty face).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorFaceSet {
    num_generators: usize,
    faces: Vec<u64>,
}

impl TaylorFaceSet {
    /// Builds a face set from masks; sorts and deduplicates. Debug builds
    /// assert downward closure.
    pub fn from_faces(num_generators: usize, mut faces: Vec<u64>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        let t = TaylorFaceSet {
            num_generators,
            faces,
        };
        debug_assert!(t.is_downward_closed());
        t
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// No faces at all, not even the empty face.
    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.faces.binary_search(&mask).is_ok()
    }

    pub fn faces(&self) -> &[u64] {
        &self.faces
    }

    /// Faces with exactly `k` vertices (dimension `k - 1`).
    pub fn faces_of_size(&self, k: usize) -> Vec<u64> {
        self.faces
            .iter()
            .copied()
            .filter(|m| m.count_ones() as usize == k)
            .collect()
    }

    /// The largest face dimension, with the empty face at dimension -1.
    pub fn max_dimension(&self) -> Option<i32> {
        self.faces
            .iter()
            .map(|m| m.count_ones() as i32 - 1)
            .max()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&mask| {
            (0..self.num_generators)
                .filter(|&g| mask >> g & 1 == 1)
                .all(|g| self.contains(mask & !(1 << g)))
        })
    }
}

/// The subcomplex of the Taylor simplex of `ideal` whose faces have lcm
/// strictly dividing `m`. Void exactly when nothing strictly divides `m`
/// (e.g. `m = 1`); otherwise contains at least the empty face.
pub fn taylor_subcomplex_below(ideal: &MonomialIdeal, m: &Monomial) -> Result<TaylorFaceSet> {
    if ideal.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    let gens = ideal.generators();
    let s = gens.len();
    if s > 64 {
        return Err(Error::TooLarge(format!(
            "{s} generators exceeds the 64-generator face-mask limit"
        )));
    }

    let mut faces: Vec<u64> = Vec::new();
    if !Monomial::identity().strictly_divides(m) {
        // Nothing strictly divides m, so not even the empty face survives.
        return Ok(TaylorFaceSet::from_faces(s, faces));
    }
    // Depth-first extension by ascending generator index. The lcm grows
    // with the face, so a failing face cannot have surviving supersets.
    let mut stack: Vec<(u64, Monomial, usize)> = vec![(0, Monomial::identity(), 0)];
    faces.push(0);
    while let Some((mask, lcm, start)) = stack.pop() {
        for (g, generator) in gens.iter().enumerate().skip(start) {
            let bigger = lcm.lcm(generator);
            if bigger.strictly_divides(m) {
                let next = mask | (1 << g);
                faces.push(next);
                stack.push((next, bigger, g + 1));
            }
        }
    }
    Ok(TaylorFaceSet::from_faces(s, faces))
}

/// Dimensions of the reduced homology of a Taylor face set over a prime
/// field, as a map from homology degree to dimension (zeros omitted). The
/// empty face sits in degree -1, so the empty complex has one dimension of
/// homology in degree -1 and the void complex has none anywhere.
pub fn reduced_homology_dims(t: &TaylorFaceSet, field: &PrimeField) -> BTreeMap<i32, usize> {
    let mut dims = BTreeMap::new();
    if t.is_void() {
        return dims;
    }
    let max_dim = t.max_dimension().expect("nonvoid complex has faces");

    // Faces per dimension, sorted; positions index chain-group bases.
    let by_dim: Vec<Vec<u64>> = (0..=(max_dim + 1) as usize)
        .map(|k| t.faces_of_size(k))
        .collect();

    // rank of the boundary map leaving dimension d, for d in 0..=max_dim.
    let mut ranks: Vec<usize> = Vec::new();
    for d in 0..=max_dim {
        let sources = &by_dim[(d + 1) as usize];
        let targets = &by_dim[d as usize];
        let mut matrix = DenseMatrix::zeros(targets.len(), sources.len());
        for (col, &mask) in sources.iter().enumerate() {
            let mut sign_positive = true;
            for g in 0..t.num_generators() {
                if mask >> g & 1 == 0 {
                    continue;
                }
                let face = mask & !(1 << g);
                let row = targets
                    .binary_search(&face)
                    .expect("downward closure provides the boundary face");
                matrix.set(row, col, if sign_positive { 1 } else { field.neg(1) });
                sign_positive = !sign_positive;
            }
        }
        ranks.push(matrix.rank(field));
    }

    for d in -1..=max_dim {
        let count = by_dim[(d + 1) as usize].len();
        let rank_out = if d < 0 { 0 } else { ranks[d as usize] };
        let rank_in = if d < max_dim { ranks[(d + 1) as usize] } else { 0 };
        let h = count - rank_out - rank_in;
        if h > 0 {
            dims.insert(d, h);
        }
    }
    dims
}

/// The multigraded Betti numbers `i -> b_{i,m}` of the ideal at a single
/// multidegree, computed from Taylor-complex homology. All zeros when `m`
/// does not divide the lcm of the generators or lies outside the ideal.
///
/// The membership guard matters: for `m` divisible by no generator the
/// subcomplex below `m` degenerates to the bare empty face, whose homology
/// would overcount `b_{0,m}` by one even though `m` indexes nothing in a
/// minimal resolution.
pub fn multigraded_betti_oracle(
    ideal: &MonomialIdeal,
    m: &Monomial,
    field: &PrimeField,
) -> Result<BTreeMap<usize, u64>> {
    if ideal.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    if !m.divides(&ideal.lcm_of_generators()) {
        return Ok(BTreeMap::new());
    }
    if !ideal.generators().iter().any(|g| g.divides(m)) {
        return Ok(BTreeMap::new());
    }
    let theta = taylor_subcomplex_below(ideal, m)?;
    let dims = reduced_homology_dims(&theta, field);
    Ok(dims
        .into_iter()
        .map(|(d, h)| ((d + 1) as usize, h as u64))
        .collect())
}

/// The lcm lattice: every lcm of a nonempty subset of the generators,
/// deduplicated and sorted. Betti numbers vanish away from these degrees.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut lattice: std::collections::BTreeSet<Monomial> = std::collections::BTreeSet::new();
    for g in ideal.generators() {
        let mut batch: Vec<Monomial> = vec![g.clone()];
        batch.extend(lattice.iter().map(|x| x.lcm(g)));
        lattice.extend(batch);
    }
    lattice.into_iter().collect()
}

/// All nonzero multigraded Betti numbers of the ideal, by evaluating the
/// oracle at every lcm-lattice multidegree.
pub fn all_multigraded_betti(
    ideal: &MonomialIdeal,
    field: &PrimeField,
) -> Result<MultigradedBettiMap> {
    all_multigraded_betti_with_cap(ideal, field, DEFAULT_GENERATOR_CAP)
}

pub fn all_multigraded_betti_with_cap(
    ideal: &MonomialIdeal,
    field: &PrimeField,
    cap: usize,
) -> Result<MultigradedBettiMap> {
    if ideal.is_zero() {
        return Err(Error::EmptyIdeal);
    }
    let s = ideal.generators().len();
    if s > cap {
        return Err(Error::TooLarge(format!(
            "{s} generators exceeds the cap of {cap}"
        )));
    }
    let mut out = MultigradedBettiMap::new();
    for m in lcm_lattice(ideal) {
        for (i, v) in multigraded_betti_oracle(ideal, &m, field)? {
            out.add(i, m.clone(), v);
        }
    }
    Ok(out)
}
