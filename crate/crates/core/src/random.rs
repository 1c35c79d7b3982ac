//! Seeded random forest generation.
//!
//! Forests grow facet by facet: each new facet takes at least one fresh
//! vertex, and its old vertices come from the private part of a single
//! existing facet (vertices belonging to that facet and no other). The new
//! facet then meets every other facet in a chain of intersections, so the
//! reversed construction order removes good leaves one at a time and the
//! result is always a forest.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;

/// Size caps for generated forests.
#[derive(Clone, Copy, Debug)]
pub struct ForestParams {
    pub max_vertices: usize,
    pub max_facets: usize,
}

impl Default for ForestParams {
    fn default() -> Self {
        ForestParams {
            max_vertices: 10,
            max_facets: 8,
        }
    }
}

/// Generates a forest, deterministically in `seed` and the caps. Vertex
/// names are `v1, v2, ...` in creation order.
pub fn random_forest(seed: u64, params: &ForestParams) -> SimplicialComplex {
    let max_vertices = params.max_vertices.max(1);
    let max_facets = params.max_facets.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let target_facets = rng.random_range(1..=max_facets);
    let mut next_vertex = 0usize;
    let fresh = |count: usize, next: &mut usize| -> Vec<usize> {
        let ids: Vec<usize> = (*next..*next + count).collect();
        *next += count;
        ids
    };

    let mut facets: Vec<BTreeSet<usize>> = Vec::new();
    let first_size = rng.random_range(1..=max_vertices.min(3));
    facets.push(fresh(first_size, &mut next_vertex).into_iter().collect());

    while facets.len() < target_facets && next_vertex < max_vertices {
        let host = rng.random_range(0..facets.len());
        // Vertices of the host facet that no other facet touches.
        let mut private: BTreeSet<usize> = facets[host].clone();
        for (j, f) in facets.iter().enumerate() {
            if j != host {
                private = private.difference(f).copied().collect();
            }
        }
        let mut old: BTreeSet<usize> =
            private.iter().copied().filter(|_| rng.random_bool(0.5)).collect();
        // A proper subset, or the host facet would stop being maximal.
        if old.len() == facets[host].len() {
            let drop = *old.iter().nth(rng.random_range(0..old.len())).unwrap();
            old.remove(&drop);
        }
        let budget = max_vertices - next_vertex;
        let fresh_count = rng.random_range(1..=budget.min(3));
        old.extend(fresh(fresh_count, &mut next_vertex));
        facets.push(old);
    }

    let raw: Vec<Vec<String>> = facets
        .iter()
        .map(|f| f.iter().map(|v| format!("v{}", v + 1)).collect())
        .collect();
    let complex = SimplicialComplex::from_named_facets(raw).expect("facets are nonempty");
    debug_assert_eq!(complex.facet_count(), facets.len(), "facets stay maximal");
    complex
}
