//! Prime field arithmetic and exact rank computation.

use crate::error::{Error, Result};

/// The field `GF(p)` for a prime `p`. Elements are `u64` values in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub const fn gf2() -> Self {
        PrimeField { p: 2 }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse");
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField::gf2()
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense row-major matrix over a prime field, for rank computation.
#[derive(Clone, Debug)]
pub(crate) struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl DenseMatrix {
    pub(crate) fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, value: u64) {
        self.data[r * self.cols + c] = value;
    }

    /// Rank by Gaussian elimination; consumes the matrix.
    pub(crate) fn rank(mut self, field: &PrimeField) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows)
                .find(|&r| self.data[r * self.cols + col] != 0)
            else {
                continue;
            };
            if pivot != rank {
                for c in 0..self.cols {
                    self.data.swap(pivot * self.cols + c, rank * self.cols + c);
                }
            }
            let inv = field.inv(self.data[rank * self.cols + col]);
            for r in rank + 1..self.rows {
                let factor = self.data[r * self.cols + col];
                if factor == 0 {
                    continue;
                }
                let scale = field.mul(factor, inv);
                for c in col..self.cols {
                    let sub = field.mul(scale, self.data[rank * self.cols + c]);
                    let cell = &mut self.data[r * self.cols + c];
                    *cell = field.sub(*cell, sub);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}
