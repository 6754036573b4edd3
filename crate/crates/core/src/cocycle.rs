//! 3-cochains on `Z/n` with values in the `n²`-th roots of unity.
//!
//! The cocycle condition is
//! `c(j,k,l) c(i,j+k,l) c(i,j,k) = c(i+j,k,l) c(i,j,k+l)`, and the coboundary
//! of a 2-cochain is `db(i,j,k) = b(j,k) b(i,j+k) b(i+j,k)⁻¹ b(i,j)⁻¹`.
//! The product `∏_j c(1,j,1)` is unchanged by coboundaries (both halves
//! telescope around `Z/n`), so it detects nontrivial classes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cyclotomic::CycNumber;
use crate::taft::TaftAlgebra;
use crate::tensor::TensorElement;
use crate::twist::phi_exponent;
use crate::verify::CheckResult;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeCochain {
    n: usize,
    conductor: u32,
    values: Vec<CycNumber>,
}

impl ThreeCochain {
    pub fn from_fn(n: usize, conductor: u32, mut f: impl FnMut(usize, usize, usize) -> CycNumber) -> Self {
        let mut values = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    values.push(f(i, j, k));
                }
            }
        }
        ThreeCochain { n, conductor, values }
    }

    pub fn constant_one(n: usize, conductor: u32) -> Self {
        Self::from_fn(n, conductor, |_, _, _| CycNumber::one(conductor))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: i64, j: i64, k: i64) -> &CycNumber {
        let n = self.n as i64;
        let (i, j, k) = (i.rem_euclid(n), j.rem_euclid(n), k.rem_euclid(n));
        &self.values[((i * n + j) * n + k) as usize]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: CycNumber) {
        let n = self.n;
        self.values[(i * n + j) * n + k] = v;
    }

    /// Pointwise product.
    pub fn mul(&self, other: &ThreeCochain) -> ThreeCochain {
        assert_eq!(self.n, other.n);
        ThreeCochain {
            n: self.n,
            conductor: self.conductor,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    /// Reads `c(i,j,k)` off the coefficients of `B_i⊗B_j⊗B_k` of an associator
    /// in `A^{⊗3}`.
    pub fn from_associator(t: &TaftAlgebra, phi: &TensorElement) -> Self {
        Self::from_fn(t.n(), t.conductor(), |i, j, k| {
            phi.coefficient(&[
                t.bold_index(i as i64, 0),
                t.bold_index(j as i64, 0),
                t.bold_index(k as i64, 0),
            ])
        })
    }
}

/// `ω_l(i,j,k) = q^{l·i(j+k-(j+k)')}` for `q = ζ_{n²}^e`.
pub fn omega(n: usize, e: i64, l: i64) -> ThreeCochain {
    let m = (n * n) as u32;
    let ni = n as i64;
    ThreeCochain::from_fn(n, m, |i, j, k| {
        CycNumber::root_of_unity(m, e * phi_exponent(ni, l, i as i64, j as i64, k as i64))
    })
}

/// Exhaustive cocycle condition over all `n⁴` quadruples and normalization.
pub fn check_3cocycle(c: &ThreeCochain) -> CheckResult {
    let name = "3-cocycle";
    let n = c.n as i64;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if (i == 0 || j == 0 || k == 0) && !c.get(i, j, k).is_one() {
                    return CheckResult::fail(name, format!("not normalized at ({i},{j},{k}): {}", c.get(i, j, k)));
                }
                for l in 0..n {
                    let lhs = &(c.get(j, k, l) * c.get(i, j + k, l)) * c.get(i, j, k);
                    let rhs = c.get(i + j, k, l) * c.get(i, j, k + l);
                    if lhs != rhs {
                        return CheckResult::fail(
                            name,
                            format!("cocycle condition fails at (i,j,k,l) = ({i},{j},{k},{l}): {lhs} vs {rhs}"),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass(name).with_detail(format!("{} quadruples", n.pow(4)))
}

/// `∏_{j<n} c(1,j,1)`; refuses non-cocycles.
pub fn class_invariant(c: &ThreeCochain) -> Result<CycNumber, String> {
    let check = check_3cocycle(c);
    if let Some(w) = check.witness {
        return Err(w);
    }
    let mut acc = CycNumber::one(c.conductor);
    for j in 0..c.n as i64 {
        acc = &acc * c.get(1, j, 1);
    }
    Ok(acc)
}

/// A normalized 2-cochain with seeded values in the `n²`-th roots of unity.
pub fn random_two_cochain(n: usize, seed: u64) -> Vec<Vec<CycNumber>> {
    let m = (n * n) as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == 0 || j == 0 {
                        CycNumber::one(m)
                    } else {
                        CycNumber::root_of_unity(m, rng.gen_range(0..m as i64))
                    }
                })
                .collect()
        })
        .collect()
}

/// `db` for a 2-cochain `b` on `Z/n`.
pub fn coboundary_of(n: usize, b: &[Vec<CycNumber>]) -> ThreeCochain {
    let m = b[0][0].conductor();
    let at = |i: usize, j: usize| &b[i % n][j % n];
    ThreeCochain::from_fn(n, m, |i, j, k| {
        let num = at(j, k) * at(i, j + k);
        let den = at(i + j, k) * at(i, j);
        num.div(&den).expect("roots of unity are invertible")
    })
}

pub fn random_coboundary(n: usize, seed: u64) -> ThreeCochain {
    coboundary_of(n, &random_two_cochain(n, seed))
}
