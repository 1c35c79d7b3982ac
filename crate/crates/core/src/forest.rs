//! The fast path for forests: a recursion over good leaf orders computes
//! graded Betti numbers of tree facet ideals, disjoint components combine
//! by a graded convolution of quotient tables, and multigraded values come
//! from induced subcollections. A verifier checks the characteristic
//! output shape on forests (every multigraded Betti number 0 or 1, each
//! multidegree nonzero in at most one homological degree), optionally
//! cross-checking the Taylor-homology oracle entry for entry.

use std::collections::{BTreeMap, HashMap};

use crate::betti::BettiTable;
use crate::complex::{ComponentPartition, FacetOrder, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::monomial::{facet_ideal, Monomial};
use crate::taylor::{lcm_lattice, multigraded_betti_oracle};

/// Witness that a complex is a forest: a leaf order whose prefixes all end
/// in a leaf, plus the component partition.
#[derive(Clone, Debug)]
pub struct ForestCertificate {
    complex: SimplicialComplex,
    order: FacetOrder,
    components: ComponentPartition,
}

impl ForestCertificate {
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn order(&self) -> &FacetOrder {
        &self.order
    }

    pub fn components(&self) -> &ComponentPartition {
        &self.components
    }
}

/// Certifies that `g` is a forest, or fails with [`Error::NotAForest`].
pub fn certify_forest(g: &SimplicialComplex) -> Result<ForestCertificate> {
    let order = g.leaf_order().ok_or(Error::NotAForest)?;
    Ok(ForestCertificate {
        complex: g.clone(),
        order,
        components: g.connected_components(),
    })
}

/// Memo for the recursion, keyed by relabeling-normalized facet lists.
/// Reduced-component subproblems repeat across multidegrees.
#[derive(Debug, Default)]
pub struct BettiCache {
    tables: HashMap<Vec<Vec<u32>>, BettiTable>,
}

impl BettiCache {
    pub fn new() -> Self {
        BettiCache::default()
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }
}

/// Graded convolution of quotient-ring Betti tables over variable-disjoint
/// ideals: `b_{i,j}` of the combined quotient is the sum over splittings
/// `i = u_1 + ... + u_N`, `j = v_1 + ... + v_N` of the entry products.
/// Every input must carry its `(0, 0) -> 1` entry; so does the output.
pub fn product_betti(tables: &[BettiTable]) -> BettiTable {
    for t in tables {
        debug_assert_eq!(t.get(0, 0), 1, "inputs must be quotient tables");
    }
    let mut acc = BettiTable::from_entries([((0, 0), 1)]);
    for t in tables {
        let mut next = BettiTable::new();
        for ((ia, ja), va) in acc.entries() {
            for ((ib, jb), vb) in t.entries() {
                next.add(ia + ib, ja + jb, va * vb);
            }
        }
        acc = next;
    }
    acc
}

/// Graded Betti numbers of a tree facet ideal via the leaf-order recursion:
/// the degree-0 row counts one generator per facet, and for `i >= 1`
///
/// ```text
/// b_{i,j} = sum over u of b_{i-1, j - |F_u|} of the facet ideal of the
///           reduced connected component of F_u inside <F_0, ..., F_u>
/// ```
///
/// with the base facet `F_0` contributing only its degree-0 generator.
pub fn tree_graded_betti(g: &SimplicialComplex) -> Result<BettiTable> {
    let mut cache = BettiCache::new();
    tree_graded_betti_with_cache(g, &mut cache)
}

pub fn tree_graded_betti_with_cache(
    g: &SimplicialComplex,
    cache: &mut BettiCache,
) -> Result<BettiTable> {
    if g.connected_components().len() != 1 {
        return Err(Error::NotATree);
    }
    let order = g.leaf_order().ok_or(Error::NotATree)?;
    tree_recursion(g, &order, cache)
}

fn tree_recursion(
    g: &SimplicialComplex,
    order: &FacetOrder,
    cache: &mut BettiCache,
) -> Result<BettiTable> {
    let mut table = BettiTable::new();
    for f in g.facets() {
        table.add(0, f.len(), 1);
    }
    for u in 1..order.len() {
        let prefix = g.subcollection(&order.indices()[..=u])?;
        // The facet F_u sits at position u of the prefix.
        let facet_size = prefix.facet(u)?.len();
        let reduced = prefix.reduced_connected_component(u)?;
        let inner = forest_recursion(&reduced, cache)?;
        for ((i, j), v) in inner.entries() {
            table.add(i + 1, j + facet_size, v);
        }
    }
    Ok(table)
}

/// Graded Betti numbers of a forest facet ideal: each connected component
/// goes through the tree recursion and the components combine through
/// [`product_betti`] on quotient tables. The empty complex yields the
/// empty table.
pub fn forest_graded_betti(g: &SimplicialComplex) -> Result<BettiTable> {
    let mut cache = BettiCache::new();
    forest_graded_betti_with_cache(g, &mut cache)
}

pub fn forest_graded_betti_with_cache(
    g: &SimplicialComplex,
    cache: &mut BettiCache,
) -> Result<BettiTable> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    forest_recursion(g, cache)
}

fn forest_recursion(g: &SimplicialComplex, cache: &mut BettiCache) -> Result<BettiTable> {
    let key = g.canonical_key();
    if let Some(t) = cache.tables.get(&key) {
        return Ok(t.clone());
    }
    let components = g.connected_components();
    let mut quotients = Vec::with_capacity(components.len());
    for block in components.blocks() {
        let tree = g.subcollection(block)?;
        let order = tree.leaf_order().ok_or(Error::NotAForest)?;
        quotients.push(tree_recursion(&tree, &order, cache)?.to_quotient());
    }
    let table = product_betti(&quotients).to_ideal();
    cache.tables.insert(key, table.clone());
    Ok(table)
}

/// Multigraded Betti numbers `i -> b_{i,m}` of a forest facet ideal at a
/// squarefree multidegree: the degree-`deg m` column of the graded table
/// of the subcollection induced on the support of `m`, and all zeros when
/// that subcollection misses part of the support.
pub fn forest_multigraded_betti(
    g: &SimplicialComplex,
    m: &Monomial,
) -> Result<BTreeMap<usize, u64>> {
    let mut cache = BettiCache::new();
    forest_multigraded_betti_with_cache(g, m, &mut cache)
}

pub fn forest_multigraded_betti_with_cache(
    g: &SimplicialComplex,
    m: &Monomial,
    cache: &mut BettiCache,
) -> Result<BTreeMap<usize, u64>> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    if !m.is_squarefree() {
        return Err(Error::NotSquarefree(format!("{m:?}")));
    }
    let support = m.support();
    if let Some(&bad) = support.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::InvalidIndex(bad));
    }
    let induced = g.induced_subcollection(&support);
    if induced.vertex_count() != m.degree() {
        // The degree exceeds the vertex count of the induced subcollection,
        // which caps the possible grades.
        return Ok(BTreeMap::new());
    }
    let j = m.degree();
    let table = forest_recursion(&induced, cache)?;
    Ok(table
        .entries()
        .filter(|&((_, jj), _)| jj == j)
        .map(|((i, _), v)| (i, v))
        .collect())
}

/// One verified multidegree: its nonzero homological degrees and values,
/// and whether the oracle agreed (when it ran).
#[derive(Clone, Debug)]
pub struct MultidegreeRecord {
    pub multidegree: Monomial,
    pub label: String,
    pub entries: BTreeMap<usize, u64>,
    pub oracle_agrees: Option<bool>,
}

/// Outcome of a verification run over a set of candidate multidegrees.
/// `holds` is true exactly when every recorded value is 0 or 1 and every
/// multidegree is nonzero in at most one homological degree.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub records: Vec<MultidegreeRecord>,
    pub candidates_checked: usize,
    pub holds: bool,
}

impl TheoremReport {
    /// `Some(true)` when the oracle ran everywhere and always agreed,
    /// `Some(false)` on any disagreement, `None` when it never ran.
    pub fn oracle_agreement(&self) -> Option<bool> {
        let flags: Vec<bool> = self
            .records
            .iter()
            .filter_map(|r| r.oracle_agrees)
            .collect();
        if flags.is_empty() {
            None
        } else {
            Some(flags.iter().all(|&b| b))
        }
    }

    /// Records that break the 0/1-value or single-degree shape.
    pub fn violations(&self) -> Vec<&MultidegreeRecord> {
        self.records
            .iter()
            .filter(|r| r.entries.len() > 1 || r.entries.values().any(|&v| v > 1))
            .collect()
    }

    fn conclude(mut records: Vec<MultidegreeRecord>, candidates_checked: usize) -> Self {
        records.sort_by(|a, b| {
            (a.multidegree.degree(), &a.label).cmp(&(b.multidegree.degree(), &b.label))
        });
        let holds = records
            .iter()
            .all(|r| r.entries.len() <= 1 && r.entries.values().all(|&v| v <= 1));
        TheoremReport {
            records,
            candidates_checked,
            holds,
        }
    }
}

/// Options for [`verify_main_theorem`].
#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Also run the Taylor-homology oracle at every candidate and record
    /// entry-for-entry agreement with the fast path.
    pub use_oracle: bool,
    /// Scan every nonempty squarefree multidegree over the vertex set
    /// instead of just the lcm lattice. Capped at 20 vertices.
    pub exhaustive_candidates: bool,
}

/// Cap on the vertex count for the exhaustive candidate scan.
pub const EXHAUSTIVE_VERTEX_CAP: usize = 20;

/// Checks, over every candidate multidegree of a forest facet ideal, that
/// the fast-path multigraded Betti numbers are 0 or 1 and concentrated in
/// a single homological degree, optionally cross-checking the oracle.
pub fn verify_main_theorem(
    g: &SimplicialComplex,
    field: &PrimeField,
    options: VerifyOptions,
) -> Result<TheoremReport> {
    if !g.is_forest() {
        return Err(Error::NotAForest);
    }
    let ideal = facet_ideal(g);
    let candidates = if options.exhaustive_candidates {
        let n = g.vertex_count();
        if n > EXHAUSTIVE_VERTEX_CAP {
            return Err(Error::TooLarge(format!(
                "{n} vertices exceeds the exhaustive-candidate cap of {EXHAUSTIVE_VERTEX_CAP}"
            )));
        }
        let mut all = Vec::with_capacity((1usize << n) - 1);
        for mask in 1u64..(1 << n) {
            all.push(Monomial::squarefree(
                (0..n).filter(|&v| mask >> v & 1 == 1),
            ));
        }
        all
    } else {
        lcm_lattice(&ideal)
    };

    let mut cache = BettiCache::new();
    let mut records = Vec::new();
    let candidates_checked = candidates.len();
    for m in candidates {
        let fast = forest_multigraded_betti_with_cache(g, &m, &mut cache)?;
        let oracle_agrees = if options.use_oracle {
            // Vertex ids of the complex coincide with the variable ids of
            // its facet ideal, so m transfers directly.
            let oracle = multigraded_betti_oracle(&ideal, &m, field)?;
            Some(oracle == fast)
        } else {
            None
        };
        if !fast.is_empty() || oracle_agrees == Some(false) {
            records.push(MultidegreeRecord {
                label: ideal.monomial_to_string(&m),
                multidegree: m,
                entries: fast,
                oracle_agrees,
            });
        }
    }
    Ok(TheoremReport::conclude(records, candidates_checked))
}

/// Oracle-only verification of the 0/1 and single-degree shape over the
/// lcm lattice of an arbitrary monomial ideal. Non-forest ideals are
/// allowed; this is how counterexamples are exhibited.
pub fn verify_ideal_via_oracle(
    ideal: &crate::monomial::MonomialIdeal,
    field: &PrimeField,
) -> Result<TheoremReport> {
    if ideal.is_zero() {
        return Ok(TheoremReport::conclude(Vec::new(), 0));
    }
    let candidates = lcm_lattice(ideal);
    let mut records = Vec::new();
    let candidates_checked = candidates.len();
    for m in candidates {
        let entries = multigraded_betti_oracle(ideal, &m, field)?;
        if !entries.is_empty() {
            records.push(MultidegreeRecord {
                label: ideal.monomial_to_string(&m),
                multidegree: m,
                entries,
                oracle_agrees: None,
            });
        }
    }
    Ok(TheoremReport::conclude(records, candidates_checked))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::taylor::all_multigraded_betti;

    fn complex(text: &str) -> SimplicialComplex {
        SimplicialComplex::parse_text(text).unwrap()
    }

    #[test]
    fn single_facet_tree() {
        let t = tree_graded_betti(&complex("1 2")).unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 2), 1)]));
    }

    #[test]
    fn two_edge_path_tree() {
        let t = tree_graded_betti(&complex("1 2\n2 3")).unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 2), 2), ((1, 3), 1)]));
    }

    #[test]
    fn three_edge_path_matches_oracle() {
        let g = complex("1 2\n2 3\n3 4");
        let fast = tree_graded_betti(&g).unwrap();
        let oracle = all_multigraded_betti(&facet_ideal(&g), &PrimeField::gf2())
            .unwrap()
            .graded();
        assert_eq!(fast, oracle);
        assert_eq!(fast, BettiTable::from_entries([((0, 2), 3), ((1, 3), 2)]));
    }

    #[test]
    fn tree_rejects_disconnected_and_non_forest_input() {
        assert_eq!(
            tree_graded_betti(&complex("1 2\n3 4")).unwrap_err(),
            Error::NotATree
        );
        assert_eq!(
            tree_graded_betti(&complex("1 2\n2 3\n1 3")).unwrap_err(),
            Error::NotATree
        );
    }

    #[test]
    fn product_of_single_table_is_itself() {
        let q = BettiTable::from_entries([((0, 0), 1), ((1, 2), 1)]);
        assert_eq!(product_betti(std::slice::from_ref(&q)), q);
        assert_eq!(
            product_betti(&[]),
            BettiTable::from_entries([((0, 0), 1)])
        );
    }

    #[test]
    fn product_of_two_principal_quotients() {
        let q = BettiTable::from_entries([((0, 2), 1)]).to_quotient();
        let prod = product_betti(&[q.clone(), q]);
        assert_eq!(
            prod,
            BettiTable::from_entries([((0, 0), 1), ((1, 2), 2), ((2, 4), 1)])
        );
        assert_eq!(
            prod.to_ideal(),
            BettiTable::from_entries([((0, 2), 2), ((1, 4), 1)])
        );
    }

    #[test]
    fn forest_of_two_disjoint_edges() {
        let t = forest_graded_betti(&complex("1 2\n3 4")).unwrap();
        assert_eq!(t, BettiTable::from_entries([((0, 2), 2), ((1, 4), 1)]));
    }

    #[test]
    fn forest_with_mixed_facet_sizes() {
        let g = complex("1 2 3\n3 4");
        let t = forest_graded_betti(&g).unwrap();
        assert_eq!(
            t,
            BettiTable::from_entries([((0, 2), 1), ((0, 3), 1), ((1, 4), 1)])
        );
        let oracle = all_multigraded_betti(&facet_ideal(&g), &PrimeField::gf2())
            .unwrap()
            .graded();
        assert_eq!(t, oracle);
    }

    #[test]
    fn forest_of_empty_complex() {
        let t = forest_graded_betti(&SimplicialComplex::empty()).unwrap();
        assert!(t.is_empty());
    }

    #[test]
    fn forest_rejects_non_forest() {
        assert_eq!(
            forest_graded_betti(&complex("1 2\n2 3\n1 3")).unwrap_err(),
            Error::NotAForest
        );
    }

    #[test]
    fn multigraded_on_two_edge_path() {
        let g = complex("1 2\n2 3");
        let full = Monomial::squarefree([0, 1, 2]);
        assert_eq!(
            forest_multigraded_betti(&g, &full).unwrap(),
            BTreeMap::from([(1, 1)])
        );
        let edge = Monomial::squarefree([0, 1]);
        assert_eq!(
            forest_multigraded_betti(&g, &edge).unwrap(),
            BTreeMap::from([(0, 1)])
        );
        // Vertices 1 and 3 span no facet.
        let gap = Monomial::squarefree([0, 2]);
        assert!(forest_multigraded_betti(&g, &gap).unwrap().is_empty());
    }

    #[test]
    fn multigraded_rejects_bad_input() {
        let g = complex("1 2\n2 3");
        let square = Monomial::from_exponents([(0, 2)]);
        assert!(matches!(
            forest_multigraded_betti(&g, &square).unwrap_err(),
            Error::NotSquarefree(_)
        ));
        let out_of_range = Monomial::squarefree([7]);
        assert_eq!(
            forest_multigraded_betti(&g, &out_of_range).unwrap_err(),
            Error::InvalidIndex(7)
        );
    }

    #[test]
    fn verify_single_facet_holds() {
        let report = verify_main_theorem(
            &complex("1 2 3"),
            &PrimeField::gf2(),
            VerifyOptions {
                use_oracle: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(report.holds);
        assert_eq!(report.oracle_agreement(), Some(true));
        assert_eq!(report.records.len(), 1);
    }

    #[test]
    fn verify_forest_with_oracle_and_exhaustive_candidates() {
        let g = complex("1 2 3\n3 4\n4 5\n6 7");
        let lattice_report = verify_main_theorem(
            &g,
            &PrimeField::gf2(),
            VerifyOptions {
                use_oracle: true,
                exhaustive_candidates: false,
            },
        )
        .unwrap();
        assert!(lattice_report.holds);
        assert_eq!(lattice_report.oracle_agreement(), Some(true));

        let exhaustive_report = verify_main_theorem(
            &g,
            &PrimeField::gf2(),
            VerifyOptions {
                use_oracle: true,
                exhaustive_candidates: true,
            },
        )
        .unwrap();
        assert!(exhaustive_report.holds);
        // Fast path and oracle agree at every squarefree multidegree, not
        // just on the lcm lattice.
        assert_eq!(exhaustive_report.oracle_agreement(), Some(true));
        assert_eq!(exhaustive_report.candidates_checked, (1 << 7) - 1);
        // The nonzero records must coincide between candidate strategies.
        let lattice_set: BTreeMap<_, _> = lattice_report
            .records
            .iter()
            .map(|r| (r.multidegree.clone(), r.entries.clone()))
            .collect();
        let exhaustive_set: BTreeMap<_, _> = exhaustive_report
            .records
            .iter()
            .map(|r| (r.multidegree.clone(), r.entries.clone()))
            .collect();
        assert_eq!(lattice_set, exhaustive_set);
    }

    #[test]
    fn verify_rejects_non_forest_but_oracle_mode_reports_violations() {
        let g = complex("a b\na e\nb e\nc d\nc e\nd e");
        assert_eq!(
            verify_main_theorem(&g, &PrimeField::gf2(), VerifyOptions::default()).unwrap_err(),
            Error::NotAForest
        );
        let report = verify_ideal_via_oracle(&facet_ideal(&g), &PrimeField::gf2()).unwrap();
        assert!(!report.holds);
        let labels: Vec<&str> = report.violations().iter().map(|r| r.label.as_str()).collect();
        assert!(labels.contains(&"abe"), "violations: {labels:?}");
        assert!(labels.contains(&"abcde"), "violations: {labels:?}");
    }

    #[test]
    fn certificates_carry_a_validated_order() {
        let g = complex("1 2 3\n3 4\n5 6");
        let cert = certify_forest(&g).unwrap();
        assert_eq!(cert.components().len(), 2);
        assert_eq!(cert.order().len(), 3);
        for i in 0..cert.order().len() {
            let prefix = cert
                .complex()
                .subcollection(&cert.order().indices()[..=i])
                .unwrap();
            assert!(prefix.is_leaf(i).unwrap());
        }
        assert_eq!(
            certify_forest(&complex("1 2\n2 3\n1 3")).unwrap_err(),
            Error::NotAForest
        );
    }

    #[test]
    fn cache_is_reused_across_multidegrees() {
        let g = complex("1 2\n2 3\n3 4\n4 5");
        let mut cache = BettiCache::new();
        for m in lcm_lattice(&facet_ideal(&g)) {
            forest_multigraded_betti_with_cache(&g, &m, &mut cache).unwrap();
        }
        assert!(!cache.is_empty());
    }
}
