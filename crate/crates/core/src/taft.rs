//! The Taft Hopf algebra `H(q)` of dimension `n⁴` and its subalgebra `A(q)`.
//!
//! Three bases are used:
//! * monomial `g^i x^j` (index `i·n² + j`), where `gx = qxg`;
//! * idempotent `1_z x^j` (index `z·n² + j`), with `g 1_z = q^z 1_z`;
//! * the carrier of `A`, `B_s x^j` (index `s·n² + j`, `s < n`) where
//!   `B_s = Σ_i 1_{s+ni}` is the bold idempotent of `k[Z/n]`.
//!
//! In the idempotent bases products are monomial with coefficient one:
//! `x 1_w = 1_{w+1} x`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use crate::algebra::{Algebra, AlgebraRef, BasisProduct};
use crate::cyclotomic::CycNumber;
use crate::error::ConstructionError;
use crate::tensor::{index, Index, TensorElement, MAX_RANK};

pub const MAX_N: usize = 15;

fn modn(v: i64, m: usize) -> usize {
    v.rem_euclid(m as i64) as usize
}

/// Powers `q^k`, `0 ≤ k < n²`.
#[derive(Clone)]
pub struct QPowers {
    n2: usize,
    table: Arc<Vec<CycNumber>>,
}

impl QPowers {
    fn new(n2: usize, e: i64) -> Self {
        let q = CycNumber::root_of_unity(n2 as u32, e);
        let mut table = Vec::with_capacity(n2);
        let mut cur = CycNumber::one(n2 as u32);
        for _ in 0..n2 {
            table.push(cur.clone());
            cur = &cur * &q;
        }
        QPowers {
            n2,
            table: Arc::new(table),
        }
    }

    pub fn get(&self, k: i64) -> &CycNumber {
        &self.table[modn(k, self.n2)]
    }
}

/// `H(q)` on the monomial basis `g^i x^j`.
pub struct TaftMonomial {
    name: String,
    n: usize,
    q: QPowers,
}

/// `H(q)` on the idempotent basis `1_z x^j`.
pub struct TaftIdempotent {
    name: String,
    n: usize,
}

/// `A(q)` on the basis `B_s x^j`.
pub struct BoldSubalgebra {
    name: String,
    n: usize,
}

macro_rules! debug_by_name {
    ($t:ty) => {
        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.name)
            }
        }
    };
}
debug_by_name!(TaftMonomial);
debug_by_name!(TaftIdempotent);
debug_by_name!(BoldSubalgebra);

fn x_label(j: usize) -> String {
    match j {
        0 => String::new(),
        1 => "x".into(),
        _ => format!("x^{j}"),
    }
}

fn join_label(head: String, j: usize) -> String {
    let tail = x_label(j);
    match (head.is_empty(), tail.is_empty()) {
        (true, true) => "1".into(),
        (true, false) => tail,
        (false, true) => head,
        (false, false) => format!("{head} {tail}"),
    }
}

impl Algebra for TaftMonomial {
    fn name(&self) -> &str {
        &self.name
    }
    fn dim(&self) -> usize {
        self.n.pow(4)
    }
    fn conductor(&self) -> u32 {
        (self.n * self.n) as u32
    }
    fn label(&self, b: usize) -> String {
        let n2 = self.n * self.n;
        let (i, j) = (b / n2, b % n2);
        let head = match i {
            0 => String::new(),
            1 => "g".into(),
            _ => format!("g^{i}"),
        };
        join_label(head, j)
    }
    fn unit(&self) -> BasisProduct {
        vec![(0, CycNumber::one(self.conductor()))]
    }
    fn mul_basis(&self, a: usize, b: usize) -> BasisProduct {
        let n2 = self.n * self.n;
        let (i, j) = (a / n2, a % n2);
        let (k, l) = (b / n2, b % n2);
        if j + l >= n2 {
            return vec![];
        }
        let coeff = self.q.get(-((j * k) as i64)).clone();
        vec![(((i + k) % n2) * n2 + j + l, coeff)]
    }
}

impl Algebra for TaftIdempotent {
    fn name(&self) -> &str {
        &self.name
    }
    fn dim(&self) -> usize {
        self.n.pow(4)
    }
    fn conductor(&self) -> u32 {
        (self.n * self.n) as u32
    }
    fn label(&self, b: usize) -> String {
        let n2 = self.n * self.n;
        join_label(format!("1_{}", b / n2), b % n2)
    }
    fn unit(&self) -> BasisProduct {
        let n2 = self.n * self.n;
        (0..n2)
            .map(|z| (z * n2, CycNumber::one(self.conductor())))
            .collect()
    }
    fn mul_basis(&self, a: usize, b: usize) -> BasisProduct {
        let n2 = self.n * self.n;
        let (z, j) = (a / n2, a % n2);
        let (w, l) = (b / n2, b % n2);
        if (w + j) % n2 != z || j + l >= n2 {
            return vec![];
        }
        vec![(z * n2 + j + l, CycNumber::one(self.conductor()))]
    }
    fn peirce(&self, b: usize) -> Option<(usize, usize)> {
        let n2 = self.n * self.n;
        let (z, j) = (b / n2, b % n2);
        Some((z, modn(z as i64 - j as i64, n2)))
    }
    fn idempotents(&self) -> Option<Vec<usize>> {
        let n2 = self.n * self.n;
        Some((0..n2).map(|z| z * n2).collect())
    }
    fn mul_basis_unit(&self, a: usize, b: usize) -> Option<Option<usize>> {
        let n2 = self.n * self.n;
        let (z, j) = (a / n2, a % n2);
        let (w, l) = (b / n2, b % n2);
        Some(((w + j) % n2 == z && j + l < n2).then_some(z * n2 + j + l))
    }
}

impl Algebra for BoldSubalgebra {
    fn name(&self) -> &str {
        &self.name
    }
    fn dim(&self) -> usize {
        self.n.pow(3)
    }
    fn conductor(&self) -> u32 {
        (self.n * self.n) as u32
    }
    fn label(&self, b: usize) -> String {
        let n2 = self.n * self.n;
        join_label(format!("B_{}", b / n2), b % n2)
    }
    fn unit(&self) -> BasisProduct {
        let n2 = self.n * self.n;
        (0..self.n)
            .map(|s| (s * n2, CycNumber::one(self.conductor())))
            .collect()
    }
    fn mul_basis(&self, a: usize, b: usize) -> BasisProduct {
        let n = self.n;
        let n2 = n * n;
        let (s, j) = (a / n2, a % n2);
        let (t, l) = (b / n2, b % n2);
        if (t + j) % n != s || j + l >= n2 {
            return vec![];
        }
        vec![(s * n2 + j + l, CycNumber::one(self.conductor()))]
    }
    fn peirce(&self, b: usize) -> Option<(usize, usize)> {
        let n2 = self.n * self.n;
        let (s, j) = (b / n2, b % n2);
        Some((s, modn(s as i64 - j as i64, self.n)))
    }
    fn idempotents(&self) -> Option<Vec<usize>> {
        let n2 = self.n * self.n;
        Some((0..self.n).map(|s| s * n2).collect())
    }
    fn mul_basis_unit(&self, a: usize, b: usize) -> Option<Option<usize>> {
        let n = self.n;
        let n2 = n * n;
        let (s, j) = (a / n2, a % n2);
        let (t, l) = (b / n2, b % n2);
        Some(((t + j) % n == s && j + l < n2).then_some(s * n2 + j + l))
    }
}

struct MonomialHopf {
    delta: Vec<TensorElement>,
    antipode: Vec<TensorElement>,
}

/// `H(q)` with `q = ζ_{n²}^e`, together with the carrier of `A(q)`.
pub struct TaftAlgebra {
    n: usize,
    e: i64,
    q: QPowers,
    mono: AlgebraRef,
    idem: AlgebraRef,
    bold: AlgebraRef,
    mono_hopf: OnceLock<MonomialHopf>,
}

impl fmt::Debug for TaftAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TaftAlgebra(n={}, e={})", self.n, self.e)
    }
}

impl TaftAlgebra {
    pub fn new(n: usize, e: i64) -> Result<Arc<Self>, ConstructionError> {
        if !(2..=MAX_N).contains(&n) {
            return Err(ConstructionError::InvalidN(n));
        }
        let n2 = n * n;
        let e = e.rem_euclid(n2 as i64);
        if e.gcd(&(n2 as i64)) != 1 {
            return Err(ConstructionError::NotPrimitive { e, modulus: n2 });
        }
        let q = QPowers::new(n2, e);
        let tag = format!("n={n},e={e}");
        Ok(Arc::new(TaftAlgebra {
            n,
            e,
            q: q.clone(),
            mono: Arc::new(TaftMonomial {
                name: format!("H[{tag}]"),
                n,
                q,
            }),
            idem: Arc::new(TaftIdempotent {
                name: format!("H[{tag}]/idempotent"),
                n,
            }),
            bold: Arc::new(BoldSubalgebra {
                name: format!("A[{tag}]"),
                n,
            }),
            mono_hopf: OnceLock::new(),
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn n2(&self) -> usize {
        self.n * self.n
    }

    /// Exponent `e` of `q = ζ_{n²}^e`, reduced to `[0, n²)`.
    pub fn exponent(&self) -> i64 {
        self.e
    }

    pub fn conductor(&self) -> u32 {
        self.n2() as u32
    }

    pub fn q(&self) -> CycNumber {
        self.q.get(1).clone()
    }

    /// `q^k` for any integer `k`.
    pub fn qpow(&self, k: i64) -> CycNumber {
        self.q.get(k).clone()
    }

    /// `Q = q^n`, a primitive `n`-th root of unity.
    pub fn big_q(&self) -> CycNumber {
        self.qpow(self.n as i64)
    }

    pub fn monomial(&self) -> &AlgebraRef {
        &self.mono
    }

    pub fn idempotent_basis(&self) -> &AlgebraRef {
        &self.idem
    }

    /// The carrier of `A(q)`.
    pub fn subalgebra(&self) -> &AlgebraRef {
        &self.bold
    }

    pub fn mono_index(&self, i: i64, j: usize) -> usize {
        modn(i, self.n2()) * self.n2() + j
    }

    pub fn idem_index(&self, z: i64, j: usize) -> usize {
        modn(z, self.n2()) * self.n2() + j
    }

    pub fn bold_index(&self, s: i64, j: usize) -> usize {
        modn(s, self.n) * self.n2() + j
    }

    /// Splits an index of any of the three bases into `(group part, x-degree)`.
    pub fn split(&self, b: usize) -> (usize, usize) {
        (b / self.n2(), b % self.n2())
    }

    fn one(&self) -> CycNumber {
        CycNumber::one(self.conductor())
    }

    fn zero(&self) -> CycNumber {
        CycNumber::zero(self.conductor())
    }

    /// `(g^i x^j)(g^k x^l)`.
    pub fn taft_mul(&self, i: i64, j: usize, k: i64, l: usize) -> TensorElement {
        let prod = self
            .mono
            .mul_basis(self.mono_index(i, j), self.mono_index(k, l));
        TensorElement::element(&self.mono, prod)
    }

    pub fn g(&self) -> TensorElement {
        TensorElement::basis(&self.mono, &[self.mono_index(1, 0)])
    }

    pub fn x(&self) -> TensorElement {
        TensorElement::basis(&self.mono, &[self.mono_index(0, 1)])
    }

    fn mono_hopf(&self) -> &MonomialHopf {
        self.mono_hopf.get_or_init(|| {
            let n2 = self.n2();
            let mono = &self.mono;
            let g = self.g();
            let x = self.x();
            let one = TensorElement::one(mono, 1);
            let gg = g.tensor(&g).unwrap();
            let dx = x.tensor(&g).unwrap().add(&one.tensor(&x).unwrap()).unwrap();
            // S(x) = -x g^{-1}, S(g) = g^{-1}
            let ginv = TensorElement::basis(mono, &[self.mono_index(-1, 0)]);
            let sx = x.mul(&ginv).unwrap().neg();

            let mut dx_pows = vec![TensorElement::one(mono, 2)];
            let mut sx_pows = vec![one.clone()];
            for j in 1..n2 {
                dx_pows.push(dx_pows[j - 1].mul(&dx).unwrap());
                sx_pows.push(sx_pows[j - 1].mul(&sx).unwrap());
            }
            let mut gg_pows = vec![TensorElement::one(mono, 2)];
            let mut ginv_pows = vec![one];
            for i in 1..n2 {
                gg_pows.push(gg_pows[i - 1].mul(&gg).unwrap());
                ginv_pows.push(ginv_pows[i - 1].mul(&ginv).unwrap());
            }
            let mut delta = Vec::with_capacity(n2 * n2);
            let mut antipode = Vec::with_capacity(n2 * n2);
            for i in 0..n2 {
                for j in 0..n2 {
                    delta.push(gg_pows[i].mul(&dx_pows[j]).unwrap());
                    antipode.push(sx_pows[j].mul(&ginv_pows[i]).unwrap());
                }
            }
            MonomialHopf { delta, antipode }
        })
    }

    /// Coproduct on the monomial basis, `Δ(g^i x^j) = (g⊗g)^i (x⊗g + 1⊗x)^j`.
    pub fn delta_basis(&self, b: usize) -> TensorElement {
        self.mono_hopf().delta[b].clone()
    }

    /// Coproduct of a monomial-basis element.
    pub fn delta(&self, u: &TensorElement) -> TensorElement {
        assert_eq!(u.rank(), 1);
        u.apply_on_factor(0, 2, |b| self.delta_basis(b)).unwrap()
    }

    pub fn epsilon_basis(&self, b: usize) -> CycNumber {
        if b % self.n2() == 0 {
            self.one()
        } else {
            self.zero()
        }
    }

    pub fn epsilon(&self, u: &TensorElement) -> CycNumber {
        assert_eq!(u.rank(), 1);
        u.apply_on_factor(0, 0, |b| TensorElement::scalar(&self.mono, self.epsilon_basis(b)))
            .unwrap()
            .as_scalar()
    }

    /// `S(g^i x^j) = (-x g^{-1})^j g^{-i}`.
    pub fn antipode_basis(&self, b: usize) -> TensorElement {
        self.mono_hopf().antipode[b].clone()
    }

    pub fn antipode(&self, u: &TensorElement) -> TensorElement {
        assert_eq!(u.rank(), 1);
        u.apply_on_factor(0, 1, |b| self.antipode_basis(b)).unwrap()
    }

    /// `1_z = (1/n²) Σ_t q^{-zt} g^t` on the monomial basis.
    pub fn idempotent(&self, z: i64) -> TensorElement {
        self.idem_to_mono(self.idem_index(z, 0))
    }

    /// `B_s = Σ_i 1_{s+ni}` on the monomial basis.
    pub fn bold_idempotent(&self, s: i64) -> TensorElement {
        self.bold_to_mono(self.bold_index(s, 0))
    }

    /// `1_z x^j = (1/n²) Σ_t q^{-zt} g^t x^j`.
    pub fn idem_to_mono(&self, b: usize) -> TensorElement {
        let n2 = self.n2();
        let (z, j) = self.split(b);
        let inv = CycNumber::from_ratio(self.conductor(), 1, n2 as i64);
        TensorElement::element(
            &self.mono,
            (0..n2).map(|t| {
                (
                    self.mono_index(t as i64, j),
                    &self.qpow(-((z * t) as i64)) * &inv,
                )
            }),
        )
    }

    /// `g^i x^j = Σ_z q^{zi} 1_z x^j`.
    pub fn mono_to_idem(&self, b: usize) -> TensorElement {
        let n2 = self.n2();
        let (i, j) = self.split(b);
        TensorElement::element(
            &self.idem,
            (0..n2).map(|z| (self.idem_index(z as i64, j), self.qpow((z * i) as i64))),
        )
    }

    /// `B_s x^j = Σ_i 1_{s+ni} x^j` on the idempotent basis.
    pub fn bold_to_idem(&self, b: usize) -> TensorElement {
        let (s, j) = self.split(b);
        TensorElement::element(
            &self.idem,
            (0..self.n).map(|i| (self.idem_index((s + self.n * i) as i64, j), self.one())),
        )
    }

    pub fn bold_to_mono(&self, b: usize) -> TensorElement {
        self.bold_to_idem(b)
            .map_factors(&self.mono, |c| self.idem_to_mono(c))
    }

    /// Re-expresses an element of `H^{⊗r}` (idempotent basis) in `A^{⊗r}`.
    ///
    /// Membership means the coefficient of `1_{z_1} x^{j_1} ⊗ …` depends on
    /// the `z_k` only modulo `n`. Fails with the first offending term.
    pub fn restrict_to_a(&self, u: &TensorElement) -> Result<TensorElement, String> {
        assert_eq!(u.parent().name(), self.idem.name(), "expects the idempotent basis");
        let r = u.rank();
        let n = self.n;
        let n2 = self.n2();
        let fiber = n.pow(r as u32);
        let mut groups: HashMap<Index, (CycNumber, usize, Index)> = HashMap::new();
        for (k, c) in u.terms() {
            let mut key = [0u16; MAX_RANK];
            for s in 0..r {
                let (z, j) = self.split(k[s] as usize);
                key[s] = ((z % n) * n2 + j) as u16;
            }
            match groups.get_mut(&key) {
                Some((c0, count, first)) => {
                    if c0 != c {
                        return Err(format!(
                            "{} has coefficient {} but {} has {}",
                            u.render_index(k),
                            c,
                            u.render_index(first),
                            c0
                        ));
                    }
                    *count += 1;
                }
                None => {
                    groups.insert(key, (c.clone(), 1, *k));
                }
            }
        }
        let mut out = TensorElement::zero(&self.bold, r);
        let mut keys: Vec<_> = groups.into_iter().collect();
        keys.sort_by(|a, b| a.0.cmp(&b.0));
        for (key, (c, count, first)) in keys {
            if count != fiber {
                return Err(format!(
                    "{} ({} of {} translates by n present)",
                    u.render_index(&first),
                    count,
                    fiber
                ));
            }
            out.add_term(key, &c);
        }
        Ok(out)
    }

    /// Embeds an element of `A^{⊗r}` into `H^{⊗r}` (idempotent basis).
    pub fn embed_a(&self, u: &TensorElement) -> TensorElement {
        u.map_factors(&self.idem, |b| self.bold_to_idem(b))
    }

    /// `a^i = Σ_s Q^{si} B_s` in `A`.
    pub fn a_power(&self, i: i64) -> TensorElement {
        let n = self.n as i64;
        TensorElement::element(
            &self.bold,
            (0..n).map(|s| (self.bold_index(s, 0), self.qpow(n * s * i))),
        )
    }

    /// `x^j` in `A`.
    pub fn a_x_power(&self, j: usize) -> TensorElement {
        if j >= self.n2() {
            return TensorElement::zero(&self.bold, 1);
        }
        TensorElement::element(
            &self.bold,
            (0..self.n).map(|s| (self.bold_index(s as i64, j), self.one())),
        )
    }

    /// `a^i x^j` in `A`.
    pub fn a_monomial(&self, i: i64, j: usize) -> TensorElement {
        self.a_power(i).mul(&self.a_x_power(j)).unwrap()
    }

    /// `Δ(x) = x⊗g + 1⊗x` on the idempotent basis:
    /// `Σ_{u,v} q^v 1_u x ⊗ 1_v + Σ_{u,v} 1_u ⊗ 1_v x`.
    pub fn delta_x_idem(&self) -> TensorElement {
        let n2 = self.n2() as i64;
        let mut out = TensorElement::zero(&self.idem, 2);
        for u in 0..n2 {
            for v in 0..n2 {
                out.add_term(
                    index(&[self.idem_index(u, 1), self.idem_index(v, 0)]),
                    &self.qpow(v),
                );
                out.add_term(
                    index(&[self.idem_index(u, 0), self.idem_index(v, 1)]),
                    &self.one(),
                );
            }
        }
        out
    }

    /// `Δ(1_z) = Σ_{u+v=z} 1_u ⊗ 1_v`.
    pub fn delta_idempotent(&self, z: i64) -> TensorElement {
        let n2 = self.n2() as i64;
        TensorElement::from_terms(
            &self.idem,
            2,
            (0..n2).map(|u| {
                (
                    index(&[self.idem_index(u, 0), self.idem_index(z - u, 0)]),
                    self.one(),
                )
            }),
        )
    }

    /// Coproduct on the idempotent basis, `Δ(1_z x^j) = Δ(1_z) Δ(x)^j`.
    pub fn delta_idem_basis(&self, b: usize) -> TensorElement {
        let (z, j) = self.split(b);
        let mut out = self.delta_idempotent(z as i64);
        if j > 0 {
            let dx = self.delta_x_idem();
            for _ in 0..j {
                out = out.mul(&dx).unwrap();
            }
        }
        out
    }

    /// `ε(1_z x^j) = δ_{z,0} δ_{j,0}`.
    pub fn epsilon_idem_basis(&self, b: usize) -> CycNumber {
        if b == 0 {
            self.one()
        } else {
            self.zero()
        }
    }

    /// `S(x) = -x g^{-1} = -Σ_z q^{-z} 1_{z+1} x` on the idempotent basis.
    pub fn antipode_x_idem(&self) -> TensorElement {
        let n2 = self.n2() as i64;
        TensorElement::element(
            &self.idem,
            (0..n2).map(|z| (self.idem_index(z + 1, 1), -&self.qpow(-z))),
        )
    }

    /// `S(1_z x^j) = S(x)^j 1_{-z}`.
    pub fn antipode_idem_basis(&self, b: usize) -> TensorElement {
        let (z, j) = self.split(b);
        let sx = self.antipode_x_idem();
        let mut out = TensorElement::one(&self.idem, 1);
        for _ in 0..j {
            out = out.mul(&sx).unwrap();
        }
        let s1 = TensorElement::basis(&self.idem, &[self.idem_index(-(z as i64), 0)]);
        out.mul(&s1).unwrap()
    }

    /// `S` on the carrier of `A` viewed inside `H` (idempotent basis):
    /// `S(B_s x^j) = S(x)^j B_{-s}`.
    pub fn antipode_bold_in_h(&self, b: usize) -> TensorElement {
        let (s, j) = self.split(b);
        let sx = self.antipode_x_idem();
        let mut out = TensorElement::one(&self.idem, 1);
        for _ in 0..j {
            out = out.mul(&sx).unwrap();
        }
        out.mul(&self.bold_to_idem(self.bold_index(-(s as i64), 0)))
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{associativity_violation, unit_violation};

    fn taft(n: usize, e: i64) -> Arc<TaftAlgebra> {
        TaftAlgebra::new(n, e).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(TaftAlgebra::new(1, 1), Err(ConstructionError::InvalidN(1))));
        assert!(matches!(
            TaftAlgebra::new(3, 3),
            Err(ConstructionError::NotPrimitive { e: 3, modulus: 9 })
        ));
        assert_eq!(taft(3, -1).exponent(), 8);
    }

    #[test]
    fn product_examples() {
        let h = taft(2, 1);
        let q = h.q();
        assert_eq!(h.taft_mul(0, 0, 1, 2), TensorElement::basis(h.monomial(), &[h.mono_index(1, 2)]));
        let gx2 = h.taft_mul(1, 1, 1, 1);
        let expect = TensorElement::element(h.monomial(), [(h.mono_index(2, 2), q.inv().unwrap())]);
        assert_eq!(gx2, expect);
        assert!(h.taft_mul(0, 3, 0, 1).is_zero());
    }

    #[test]
    fn relations_hold() {
        for (n, e) in [(2, 1), (3, 2)] {
            let h = taft(n, e);
            let n2 = h.n2();
            let (g, x) = (h.g(), h.x());
            let gx = g.mul(&x).unwrap();
            let qxg = x.mul(&g).unwrap().scale(&h.q());
            assert_eq!(gx, qxg);
            let mut xp = TensorElement::one(h.monomial(), 1);
            let mut gp = xp.clone();
            for _ in 0..n2 {
                xp = xp.mul(&x).unwrap();
                gp = gp.mul(&g).unwrap();
            }
            assert!(xp.is_zero());
            assert_eq!(gp, TensorElement::one(h.monomial(), 1));
        }
    }

    #[test]
    fn bases_are_associative_with_unit() {
        let h = taft(2, 3);
        for alg in [h.monomial(), h.idempotent_basis(), h.subalgebra()] {
            let d = alg.dim();
            let all = (0..d).flat_map(|a| (0..d).flat_map(move |b| (0..d).map(move |c| (a, b, c))));
            assert_eq!(associativity_violation(alg.as_ref(), all), None, "{}", alg.name());
            assert_eq!(unit_violation(alg.as_ref()), None);
        }
    }

    #[test]
    fn change_of_basis_is_an_algebra_isomorphism() {
        for (n, e) in [(2, 1), (3, 4)] {
            let h = taft(n, e);
            let d = h.monomial().dim();
            for b in 0..d {
                let back = h
                    .idem_to_mono(b)
                    .map_factors(h.idempotent_basis(), |c| h.mono_to_idem(c));
                assert_eq!(back, TensorElement::basis(h.idempotent_basis(), &[b]));
            }
            let to_mono = |u: &TensorElement| u.map_factors(h.monomial(), |c| h.idem_to_mono(c));
            for (a, b) in [(1, 5), (n * n + 1, 3), (7, 2 * n * n + 1)] {
                let ea = TensorElement::basis(h.idempotent_basis(), &[a % d]);
                let eb = TensorElement::basis(h.idempotent_basis(), &[b % d]);
                let lhs = to_mono(&ea.mul(&eb).unwrap());
                let rhs = to_mono(&ea).mul(&to_mono(&eb)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn idempotent_examples() {
        let h = taft(3, 1);
        let mono = h.monomial();
        let mut total = TensorElement::zero(mono, 1);
        for z in 0..9 {
            total = total.add(&h.idempotent(z)).unwrap();
        }
        assert_eq!(total, TensorElement::one(mono, 1));
        let (e1, e2) = (h.idempotent(1), h.idempotent(2));
        assert_eq!(e1.mul(&e1).unwrap(), e1);
        assert!(e1.mul(&e2).unwrap().is_zero());
        assert_eq!(h.g().mul(&e1).unwrap(), e1.scale(&h.q()));

        let b1 = h.bold_idempotent(1);
        let a = TensorElement::basis(mono, &[h.mono_index(3, 0)]);
        assert_eq!(a.mul(&b1).unwrap(), b1.scale(&h.big_q()));
        let b0 = h.bold_idempotent(0);
        assert_eq!(
            b0.mul(&h.x()).unwrap(),
            h.x().mul(&h.bold_idempotent(2)).unwrap()
        );
        for w in 0..9 {
            let lhs = h.idempotent(w).mul(&h.x()).unwrap();
            let rhs = h.x().mul(&h.idempotent(w - 1)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coproduct_examples() {
        let h = taft(2, 1);
        let mono = h.monomial();
        let g = h.g();
        assert_eq!(h.delta(&g), g.tensor(&g).unwrap());
        let x2 = TensorElement::basis(mono, &[h.mono_index(0, 2)]);
        let g2 = TensorElement::basis(mono, &[h.mono_index(2, 0)]);
        let gx = TensorElement::basis(mono, &[h.mono_index(1, 1)]);
        let one = TensorElement::one(mono, 1);
        // in g-before-x normal form the middle coefficient is 1 + q^{-1}
        let one_plus_qinv = &CycNumber::one(4) + &h.qpow(-1);
        let expect = x2
            .tensor(&g2)
            .unwrap()
            .add(&h.x().tensor(&gx).unwrap().scale(&one_plus_qinv))
            .unwrap()
            .add(&one.tensor(&x2).unwrap())
            .unwrap();
        assert_eq!(h.delta(&x2), expect);
        // equivalently (1 + q) x ⊗ xg
        let xg = h.x().mul(&h.g()).unwrap();
        let one_plus_q = &CycNumber::one(4) + &h.q();
        let middle = h.x().tensor(&xg).unwrap().scale(&one_plus_q);
        assert_eq!(h.x().tensor(&gx).unwrap().scale(&one_plus_qinv), middle);
    }

    #[test]
    fn counit_and_antipode_examples() {
        let h = taft(2, 1);
        let mono = h.monomial();
        assert!(h.epsilon(&TensorElement::one(mono, 1)).is_one());
        assert!(h.epsilon(&TensorElement::basis(mono, &[h.mono_index(3, 0)])).is_one());
        assert!(h.epsilon(&TensorElement::basis(mono, &[h.mono_index(1, 1)])).is_zero());
        let ginv = TensorElement::basis(mono, &[h.mono_index(3, 0)]);
        assert_eq!(h.antipode(&h.g()), ginv);
        let sx = h.x().mul(&ginv).unwrap().neg();
        assert_eq!(h.antipode(&h.x()), sx);
        let gx = TensorElement::basis(mono, &[h.mono_index(1, 1)]);
        let g2inv = TensorElement::basis(mono, &[h.mono_index(-2, 0)]);
        assert_eq!(h.antipode(&gx), h.x().mul(&g2inv).unwrap().neg());
    }

    #[test]
    fn idempotent_basis_hopf_maps_match_monomial_ones() {
        for (n, e) in [(2, 3), (3, 2)] {
            let h = taft(n, e);
            let to_mono = |u: &TensorElement| u.map_factors(h.monomial(), |c| h.idem_to_mono(c));
            let d = h.idempotent_basis().dim();
            for b in 0..d {
                let m = h.idem_to_mono(b);
                assert_eq!(to_mono(&h.delta_idem_basis(b)), h.delta(&m), "delta at {b}");
                assert_eq!(to_mono(&h.antipode_idem_basis(b)), h.antipode(&m), "S at {b}");
                assert_eq!(h.epsilon_idem_basis(b), h.epsilon(&m));
            }
        }
    }

    #[test]
    fn subalgebra_closure_and_restriction() {
        let h = taft(3, 1);
        let a = h.subalgebra();
        let mono_basis: Vec<usize> = (0..3)
            .flat_map(|i| (0..9).map(move |j| (i, j)))
            .map(|(i, j)| h.mono_index(3 * i, j))
            .collect();
        for &u in &mono_basis {
            for &v in &mono_basis {
                let p = TensorElement::element(h.monomial(), h.monomial().mul_basis(u, v));
                assert!(p.in_span(&mono_basis));
            }
        }
        for b in 0..a.dim() {
            let e = TensorElement::basis(a, &[b]);
            assert_eq!(h.restrict_to_a(&h.embed_a(&e)).unwrap(), e);
        }
        let g = h.mono_to_idem(h.mono_index(1, 0));
        assert!(h.restrict_to_a(&g).is_err());
        let dx = h.delta_x_idem();
        let err = h.restrict_to_a(&dx).unwrap_err();
        assert!(!err.is_empty());
        // a^i x^j round trip through the monomial basis
        let amon = h.a_monomial(2, 4);
        let via = TensorElement::basis(h.monomial(), &[h.mono_index(6, 4)]);
        assert_eq!(h.embed_a(&amon), via.map_factors(h.idempotent_basis(), |c| h.mono_to_idem(c)));
    }
}
