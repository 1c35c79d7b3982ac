//! Exact Betti numbers of monomial ideals.
//!
//! The crate computes multigraded, graded, and total Betti numbers of a
//! monomial ideal from the reduced homology of subcomplexes of its Taylor
//! simplex, and provides a fast recursive computation for facet ideals of
//! simplicial forests together with a harness that checks the forest
//! outputs (every multigraded value 0 or 1, concentrated in a single
//! homological degree) against the homology oracle.
//!
//! ```
//! use betti_core::{all_multigraded_betti, facet_ideal, forest_graded_betti};
//! use betti_core::{PrimeField, SimplicialComplex};
//!
//! let path = SimplicialComplex::parse_text("1 2\n2 3\n3 4")?;
//! assert!(path.is_forest());
//!
//! let fast = forest_graded_betti(&path)?;
//! let oracle = all_multigraded_betti(&facet_ideal(&path), &PrimeField::gf2())?.graded();
//! assert_eq!(fast, oracle);
//! assert_eq!(fast.get(0, 2), 3);
//! assert_eq!(fast.get(1, 3), 2);
//! # Ok::<(), betti_core::Error>(())
//! ```

pub mod betti;
pub mod complex;
pub mod error;
pub mod field;
pub mod forest;
pub mod monomial;
pub mod random;
pub mod taylor;

pub use betti::{BettiTable, MultigradedBettiMap};
pub use complex::{ComponentPartition, FacetOrder, SimplicialComplex, VertexId, VertexSet};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use forest::{
    certify_forest, forest_graded_betti, forest_multigraded_betti, product_betti,
    tree_graded_betti, verify_ideal_via_oracle, verify_main_theorem, BettiCache,
    ForestCertificate, MultidegreeRecord, TheoremReport, VerifyOptions,
};
pub use monomial::{facet_ideal, Monomial, MonomialIdeal, Multidegree};
pub use random::{random_forest, ForestParams};
pub use taylor::{
    all_multigraded_betti, lcm_lattice, multigraded_betti_oracle, reduced_homology_dims,
    taylor_subcomplex_below, TaylorFaceSet,
};
