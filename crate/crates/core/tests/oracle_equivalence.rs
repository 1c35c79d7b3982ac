//! The whole-ideal scan restricts candidate multidegrees to the lcm
//! lattice. These tests check that restriction against an exhaustive scan
//! over every divisor of the lcm of the generators: exhaustively for all
//! squarefree ideals on up to 5 variables, and on random squarefree ideals
//! with up to 7 variables.

use betti_core::monomial::{Monomial, MonomialIdeal};
use betti_core::taylor::{all_multigraded_betti, multigraded_betti_oracle};
use betti_core::{MultigradedBettiMap, PrimeField};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every divisor of `m`, by independent exponent choice per variable.
fn divisors(m: &Monomial) -> Vec<Monomial> {
    let vars: Vec<(usize, u32)> = m.exponents().collect();
    let mut out = vec![Monomial::identity()];
    for &(v, max_e) in &vars {
        let mut next = Vec::with_capacity(out.len() * (max_e as usize + 1));
        for d in &out {
            for e in 0..=max_e {
                let mut exps: Vec<(usize, u32)> = d.exponents().collect();
                exps.push((v, e));
                next.push(Monomial::from_exponents(exps));
            }
        }
        out = next;
    }
    out
}

/// The scan the library avoids: evaluate the oracle at every divisor.
fn divisor_exhaustive_scan(ideal: &MonomialIdeal, field: &PrimeField) -> MultigradedBettiMap {
    let mut out = MultigradedBettiMap::new();
    for m in divisors(&ideal.lcm_of_generators()) {
        for (i, v) in multigraded_betti_oracle(ideal, &m, field).unwrap() {
            out.add(i, m.clone(), v);
        }
    }
    out
}

fn squarefree_ideal_from_masks(num_vars: usize, masks: &[u32]) -> MonomialIdeal {
    let vars: Vec<String> = (0..num_vars).map(|v| format!("x{v}")).collect();
    let gens: Vec<Monomial> = masks
        .iter()
        .map(|&mask| Monomial::squarefree((0..num_vars).filter(|&v| mask >> v & 1 == 1)))
        .collect();
    MonomialIdeal::minimalize(vars, gens)
}

/// All antichains of nonempty subsets of an `n`-set, as mask lists.
fn antichains(n: usize) -> Vec<Vec<u32>> {
    fn comparable(a: u32, b: u32) -> bool {
        a & b == a || a & b == b
    }
    fn extend(n: usize, chosen: &mut Vec<u32>, from: u32, out: &mut Vec<Vec<u32>>) {
        for mask in from..(1u32 << n) {
            if chosen.iter().any(|&c| comparable(c, mask)) {
                continue;
            }
            chosen.push(mask);
            out.push(chosen.clone());
            extend(n, chosen, mask + 1, out);
            chosen.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), 1, &mut out);
    out
}

#[test]
fn lattice_scan_matches_divisor_scan_on_all_small_squarefree_ideals() {
    let field = PrimeField::gf2();
    let mut checked = 0usize;
    for masks in antichains(5) {
        let ideal = squarefree_ideal_from_masks(5, &masks);
        let restricted = all_multigraded_betti(&ideal, &field).unwrap();
        let exhaustive = divisor_exhaustive_scan(&ideal, &field);
        assert_eq!(
            restricted, exhaustive,
            "mismatch for ideal:\n{}",
            ideal.to_text()
        );
        checked += 1;
    }
    // Antichains of nonempty subsets of a 5-set.
    assert_eq!(checked, 7579);
}

#[test]
fn lattice_scan_matches_divisor_scan_on_random_seven_variable_ideals() {
    let field = PrimeField::gf2();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..200 {
        let num_gens = rng.random_range(1..=6);
        let masks: Vec<u32> = (0..num_gens)
            .map(|_| rng.random_range(1u32..(1 << 7)))
            .collect();
        let ideal = squarefree_ideal_from_masks(7, &masks);
        let restricted = all_multigraded_betti(&ideal, &field).unwrap();
        let exhaustive = divisor_exhaustive_scan(&ideal, &field);
        assert_eq!(
            restricted, exhaustive,
            "mismatch for ideal:\n{}",
            ideal.to_text()
        );
    }
}

#[test]
fn lattice_scan_matches_divisor_scan_on_a_non_squarefree_ideal() {
    let field = PrimeField::new(3).unwrap();
    let ideal = MonomialIdeal::parse_text("x^2*y\ny^2*z\nx*z^2\nx*y*z").unwrap();
    let restricted = all_multigraded_betti(&ideal, &field).unwrap();
    let exhaustive = divisor_exhaustive_scan(&ideal, &field);
    assert_eq!(restricted, exhaustive);
}
