//! The twist `J`, the twisted structure on `H(q)` and its restriction to `A(q)`.
//!
//! Everything here is computed from the defining formulas:
//! `Δ_J = J Δ J⁻¹`,
//! `Φ_J = (1⊗J)(id⊗Δ)(J)(Δ⊗id)(J⁻¹)(J⊗1)⁻¹`,
//! `α_J = Σ S(f̄) ḡ` for `J⁻¹ = Σ f̄⊗ḡ`, `β_J = Σ f S(g)` for `J = Σ f⊗g`,
//! `S_J = β_J S(·) β_J⁻¹`. The closed forms live in separate functions and
//! are only ever compared against.

use std::fmt;
use std::sync::Arc;

use crate::algebra::AlgebraRef;
use crate::cyclotomic::CycNumber;
use crate::error::ConstructionError;
use crate::taft::TaftAlgebra;
use crate::tensor::{index, TensorElement};
use crate::verify::CheckResult;

/// A quasi-Hopf algebra `(A, Δ, ε, Φ, S, α, β)` given by tables on a basis.
#[derive(Clone)]
pub struct QuasiHopfStructure {
    pub name: String,
    pub carrier: AlgebraRef,
    pub coproduct: Vec<TensorElement>,
    pub counit: Vec<CycNumber>,
    pub antipode: Vec<TensorElement>,
    pub associator: TensorElement,
    pub alpha: TensorElement,
    pub beta: TensorElement,
    /// Algebra generators, checked first by the sampled checks.
    pub generators: Vec<(String, TensorElement)>,
}

impl fmt::Debug for QuasiHopfStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuasiHopfStructure({}, dim {})", self.name, self.carrier.dim())
    }
}

impl QuasiHopfStructure {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn conductor(&self) -> u32 {
        self.carrier.conductor()
    }

    pub fn delta(&self, u: &TensorElement) -> TensorElement {
        self.delta_on(u, 0)
    }

    /// Applies `Δ` to tensor slot `slot`.
    pub fn delta_on(&self, u: &TensorElement, slot: usize) -> TensorElement {
        u.apply_on_factor(slot, 2, |b| self.coproduct[b].clone())
            .expect("slot within rank")
    }

    pub fn epsilon(&self, u: &TensorElement) -> CycNumber {
        self.epsilon_on(u, 0).as_scalar()
    }

    /// Applies `ε` to tensor slot `slot`.
    pub fn epsilon_on(&self, u: &TensorElement, slot: usize) -> TensorElement {
        u.apply_on_factor(slot, 0, |b| {
            TensorElement::scalar(&self.carrier, self.counit[b].clone())
        })
        .expect("slot within rank")
    }

    pub fn antipode_of(&self, u: &TensorElement) -> TensorElement {
        assert_eq!(u.rank(), 1);
        u.apply_on_factor(0, 1, |b| self.antipode[b].clone())
            .expect("rank 1")
    }

    pub fn basis(&self, b: usize) -> TensorElement {
        TensorElement::basis(&self.carrier, &[b])
    }

    pub fn with_associator(&self, phi: TensorElement) -> Self {
        let mut s = self.clone();
        s.associator = phi;
        s
    }

    pub fn with_alpha(&self, alpha: TensorElement) -> Self {
        let mut s = self.clone();
        s.alpha = alpha;
        s
    }

    pub fn with_coproduct(&self, b: usize, value: TensorElement) -> Self {
        let mut s = self.clone();
        s.coproduct[b] = value;
        s
    }

    pub fn with_counit(&self, b: usize, value: CycNumber) -> Self {
        let mut s = self.clone();
        s.counit[b] = value;
        s
    }

    pub fn with_antipode(&self, b: usize, value: TensorElement) -> Self {
        let mut s = self.clone();
        s.antipode[b] = value;
        s
    }
}

/// `u` with the coefficient of its lexicographically first term negated.
pub fn negate_first_term(u: &TensorElement) -> TensorElement {
    let mut out = u.clone();
    if let Some((k, c)) = u.terms().iter().next() {
        let twice = c + c;
        out.add_term(*k, &-&twice);
    }
    out
}

/// `u` without its lexicographically first term.
pub fn drop_first_term(u: &TensorElement) -> TensorElement {
    let mut out = u.clone();
    if let Some((k, c)) = u.terms().iter().next() {
        out.add_term(*k, &-c);
    }
    out
}

/// `c(z, y) = q^{-z(y - y')}`, `y'` the remainder of `y` mod `n`.
pub fn j_coefficient(t: &TaftAlgebra, z: i64, y: i64) -> CycNumber {
    let n = t.n() as i64;
    let n2 = t.n2() as i64;
    let (z, y) = (z.rem_euclid(n2), y.rem_euclid(n2));
    t.qpow(-z * (y - y.rem_euclid(n)))
}

/// `J = Σ_{z,y} c(z,y) 1_z ⊗ 1_y` in `H⊗H` (idempotent basis).
pub fn build_j(t: &TaftAlgebra) -> TensorElement {
    let n2 = t.n2() as i64;
    let mut out = TensorElement::zero(t.idempotent_basis(), 2);
    for z in 0..n2 {
        for y in 0..n2 {
            out.add_term(
                index(&[t.idem_index(z, 0), t.idem_index(y, 0)]),
                &j_coefficient(t, z, y),
            );
        }
    }
    out
}

fn delta_h(t: &TaftAlgebra) -> impl Fn(usize) -> TensorElement + '_ {
    move |b| t.delta_idem_basis(b)
}

/// The coboundary `(1⊗J)(id⊗Δ)(J)(Δ⊗id)(J⁻¹)(J⊗1)⁻¹` in `H^{⊗3}`.
pub fn coboundary(t: &TaftAlgebra, j: &TensorElement) -> Result<TensorElement, ConstructionError> {
    let h = t.idempotent_basis();
    let one = TensorElement::one(h, 1);
    let j_inv = j.invert()?;
    let one_j = one.tensor(j)?;
    let id_delta_j = j.apply_on_factor(1, 2, delta_h(t))?;
    let delta_id_jinv = j_inv.apply_on_factor(0, 2, delta_h(t))?;
    let j_one_inv = j.tensor(&one)?.invert()?;
    Ok(one_j.mul(&id_delta_j)?.mul(&delta_id_jinv)?.mul(&j_one_inv)?)
}

/// `Φ_J` restricted to `A^{⊗3}`; leaving `A^{⊗3}` is a construction error.
pub fn associator_phi_j(t: &TaftAlgebra, j: &TensorElement) -> Result<TensorElement, ConstructionError> {
    let phi = coboundary(t, j)?;
    t.restrict_to_a(&phi).map_err(|witness| ConstructionError::Closure {
        what: "associator".into(),
        witness,
    })
}

/// Exponent `l·i·(j+k-(j+k)')` of `Φ_l` and `ω`.
pub fn phi_exponent(n: i64, l: i64, i: i64, j: i64, k: i64) -> i64 {
    let (i, j, k) = (i.rem_euclid(n), j.rem_euclid(n), k.rem_euclid(n));
    l * i * (j + k - (j + k) % n)
}

/// `Φ_l = Σ_{i,j,k<n} q^{il(j+k-(j+k)')} B_i⊗B_j⊗B_k` in `A^{⊗3}`.
pub fn phi_l(t: &TaftAlgebra, l: i64) -> TensorElement {
    let n = t.n() as i64;
    let mut out = TensorElement::zero(t.subalgebra(), 3);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out.add_term(
                    index(&[t.bold_index(i, 0), t.bold_index(j, 0), t.bold_index(k, 0)]),
                    &t.qpow(phi_exponent(n, l, i, j, k)),
                );
            }
        }
    }
    out
}

/// `Δ_J(u) = J Δ(u) J⁻¹` for `u ∈ H` (idempotent basis).
pub fn delta_j(t: &TaftAlgebra, j: &TensorElement, u: &TensorElement) -> Result<TensorElement, ConstructionError> {
    let d = u.apply_on_factor(0, 2, delta_h(t))?;
    Ok(j.mul(&d)?.mul(&j.invert()?)?)
}

/// `(α_J, β_J)` with `α = β = 1` in `H`.
pub fn alpha_beta_j(t: &TaftAlgebra, j: &TensorElement) -> Result<(TensorElement, TensorElement), ConstructionError> {
    let h = t.idempotent_basis();
    let s = |b: usize| t.antipode_idem_basis(b);
    let mut beta = TensorElement::zero(h, 1);
    for (k, c) in j.terms() {
        let f = TensorElement::basis(h, &[k[0] as usize]);
        beta = beta.add(&f.mul(&s(k[1] as usize))?.scale(c))?;
    }
    let mut alpha = TensorElement::zero(h, 1);
    for (k, c) in j.invert()?.terms() {
        let g = TensorElement::basis(h, &[k[1] as usize]);
        alpha = alpha.add(&s(k[0] as usize).mul(&g)?.scale(c))?;
    }
    for (name, e) in [("alpha_J", &alpha), ("beta_J", &beta)] {
        e.invert().map_err(|err| ConstructionError::Closure {
            what: format!("{name} invertibility"),
            witness: err.to_string(),
        })?;
    }
    Ok((alpha, beta))
}

/// `S_J(u) = β_J S(u) β_J⁻¹` for `u ∈ H` (idempotent basis).
pub fn s_j(t: &TaftAlgebra, beta_j: &TensorElement, u: &TensorElement) -> Result<TensorElement, ConstructionError> {
    let su = u.apply_on_factor(0, 1, |b| t.antipode_idem_basis(b))?;
    Ok(beta_j.mul(&su)?.mul(&beta_j.invert()?)?)
}

fn diagonal_h(t: &TaftAlgebra, exponent: impl Fn(i64) -> i64) -> TensorElement {
    let n2 = t.n2() as i64;
    TensorElement::element(
        t.idempotent_basis(),
        (0..n2).map(|z| (t.idem_index(z, 0), t.qpow(exponent(z)))),
    )
}

/// `β_J = Σ_z q^{(z-z'+n)z} 1_z`.
pub fn beta_j_closed(t: &TaftAlgebra) -> TensorElement {
    let n = t.n() as i64;
    diagonal_h(t, |z| (z - z % n + n) * z)
}

/// `α_J = Σ_z q^{-(z-z')z} 1_z`.
pub fn alpha_j_closed(t: &TaftAlgebra) -> TensorElement {
    let n = t.n() as i64;
    diagonal_h(t, |z| -(z - z % n) * z)
}

/// `Σ_z q^{nz} 1_z`.
pub fn alpha_beta_closed(t: &TaftAlgebra) -> TensorElement {
    let n = t.n() as i64;
    diagonal_h(t, |z| n * z)
}

/// `a^k = g^{nk}` in `H` (idempotent basis).
pub fn a_power_h(t: &TaftAlgebra, k: i64) -> TensorElement {
    let n = t.n() as i64;
    diagonal_h(t, |z| n * k * z)
}

/// `x ⊗ Σ_{y<n} q^y B_y + 1 ⊗ (1 - B_0) x + a⁻¹ ⊗ B_0 x` in `A⊗A`.
pub fn delta_j_x_closed(t: &TaftAlgebra) -> TensorElement {
    let a = t.subalgebra();
    let n = t.n() as i64;
    let x = t.a_x_power(1);
    let one = TensorElement::one(a, 1);
    let b0 = TensorElement::basis(a, &[t.bold_index(0, 0)]);
    let weights = TensorElement::element(a, (0..n).map(|y| (t.bold_index(y, 0), t.qpow(y))));
    let first = x.tensor(&weights).unwrap();
    let second = one.tensor(&one.sub(&b0).unwrap().mul(&x).unwrap()).unwrap();
    let third = t.a_power(-1).tensor(&b0.mul(&x).unwrap()).unwrap();
    first.add(&second).unwrap().add(&third).unwrap()
}

/// `-x Σ_{z<n} q^{n-z} B_z` in `A`.
pub fn s_j_x_closed(t: &TaftAlgebra) -> TensorElement {
    let a = t.subalgebra();
    let n = t.n() as i64;
    let weights = TensorElement::element(a, (0..n).map(|z| (t.bold_index(z, 0), t.qpow(n - z))));
    t.a_x_power(1).mul(&weights).unwrap().neg()
}

/// Which grouplike of `⟨a⟩` the computed `α_J β_J` is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaIdentity {
    /// Equals `a` and `a⁻¹` (only when `a² = 1`).
    Both,
    A,
    AInverse,
    Neither,
}

impl AlphaIdentity {
    /// Compares an element of `H` (idempotent basis) with `a` and `a⁻¹`.
    pub fn of(t: &TaftAlgebra, u: &TensorElement) -> Self {
        let is_a = *u == a_power_h(t, 1);
        let is_ainv = *u == a_power_h(t, -1);
        match (is_a, is_ainv) {
            (true, true) => AlphaIdentity::Both,
            (true, false) => AlphaIdentity::A,
            (false, true) => AlphaIdentity::AInverse,
            (false, false) => AlphaIdentity::Neither,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            AlphaIdentity::Both => "a = a^-1",
            AlphaIdentity::A => "a",
            AlphaIdentity::AInverse => "a^-1",
            AlphaIdentity::Neither => "neither a nor a^-1",
        }
    }
}

/// `A(q)` with every intermediate of its construction.
pub struct AqConstruction {
    pub taft: Arc<TaftAlgebra>,
    pub j: TensorElement,
    pub j_inv: TensorElement,
    /// `Φ_J` in `H^{⊗3}` before restriction.
    pub phi_h: TensorElement,
    pub alpha_j: TensorElement,
    pub beta_j: TensorElement,
    pub structure: QuasiHopfStructure,
}

impl fmt::Debug for AqConstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AqConstruction(n={}, e={})", self.taft.n(), self.taft.exponent())
    }
}

impl AqConstruction {
    pub fn n(&self) -> usize {
        self.taft.n()
    }

    /// `α_J β_J` in `H` (idempotent basis).
    pub fn alpha_beta_h(&self) -> TensorElement {
        self.alpha_j.mul(&self.beta_j).expect("same parent")
    }

    pub fn alpha_identity(&self) -> AlphaIdentity {
        AlphaIdentity::of(&self.taft, &self.alpha_beta_h())
    }

    /// `Δ_J(x)` computed by conjugation in `H⊗H`, restricted to `A⊗A`.
    pub fn delta_j_x(&self) -> Result<TensorElement, ConstructionError> {
        let t = &self.taft;
        let x = t.embed_a(&t.a_x_power(1));
        let d = delta_j(t, &self.j, &x)?;
        t.restrict_to_a(&d).map_err(|witness| ConstructionError::Closure {
            what: "Delta_J(x)".into(),
            witness,
        })
    }

    /// `S_J(x)` computed by conjugation in `H`, restricted to `A`.
    pub fn s_j_x(&self) -> Result<TensorElement, ConstructionError> {
        let t = &self.taft;
        let x = t.embed_a(&t.a_x_power(1));
        let s = s_j(t, &self.beta_j, &x)?;
        t.restrict_to_a(&s).map_err(|witness| ConstructionError::Closure {
            what: "S_J(x)".into(),
            witness,
        })
    }
}

/// `Δ_J` on every basis element `B_s x^j` of `A`, conjugating in `H⊗H`.
fn twisted_coproduct_table(
    t: &TaftAlgebra,
    j: &TensorElement,
    j_inv: &TensorElement,
) -> Result<Vec<TensorElement>, ConstructionError> {
    twisted_coproducts(t, j, j_inv, t.n2() - 1)
}

/// `Δ_J(B_s x^j)` for `j ≤ max_degree`, indexed by the `A` basis; entries of
/// higher degree are left zero.
pub fn twisted_coproducts(
    t: &TaftAlgebra,
    j: &TensorElement,
    j_inv: &TensorElement,
    max_degree: usize,
) -> Result<Vec<TensorElement>, ConstructionError> {
    let n = t.n();
    let n2 = t.n2();
    let dx = t.delta_x_idem();
    let mut table = vec![TensorElement::zero(t.subalgebra(), 2); n * n2];
    for s in 0..n {
        let mut d = TensorElement::zero(t.idempotent_basis(), 2);
        for i in 0..n {
            d = d.add(&t.delta_idempotent((s + n * i) as i64))?;
        }
        for deg in 0..=max_degree.min(n2 - 1) {
            let conj = d.conjugate_diagonal(j, j_inv)?;
            let b = t.bold_index(s as i64, deg);
            table[b] = t.restrict_to_a(&conj).map_err(|witness| ConstructionError::Closure {
                what: format!("Delta_J({})", t.subalgebra().label(b)),
                witness,
            })?;
            if deg < max_degree.min(n2 - 1) {
                d = d.mul(&dx)?;
            }
        }
    }
    Ok(table)
}

/// Assembles `(A(q), Δ_J, ε, Φ_J, S_J, α_J β_J, 1)` for `q = ζ_{n²}^e`.
pub fn build_aq(n: usize, e: i64) -> Result<AqConstruction, ConstructionError> {
    let taft = TaftAlgebra::new(n, e)?;
    build_aq_from(taft)
}

pub fn build_aq_from(taft: Arc<TaftAlgebra>) -> Result<AqConstruction, ConstructionError> {
    let t = taft.as_ref();
    let a = t.subalgebra().clone();
    let j = build_j(t);
    let j_inv = j.invert()?;
    let phi_h = coboundary(t, &j)?;
    let associator = t.restrict_to_a(&phi_h).map_err(|witness| ConstructionError::Closure {
        what: "associator".into(),
        witness,
    })?;
    let coproduct = twisted_coproduct_table(t, &j, &j_inv)?;
    let counit = (0..a.dim())
        .map(|b| {
            if b == 0 {
                CycNumber::one(t.conductor())
            } else {
                CycNumber::zero(t.conductor())
            }
        })
        .collect();
    let (alpha_j, beta_j) = alpha_beta_j(t, &j)?;
    let beta_inv = beta_j.invert()?;
    let mut antipode = Vec::with_capacity(a.dim());
    for b in 0..a.dim() {
        let s = beta_j.mul(&t.antipode_bold_in_h(b))?.mul(&beta_inv)?;
        antipode.push(t.restrict_to_a(&s).map_err(|witness| ConstructionError::Closure {
            what: format!("S_J({})", a.label(b)),
            witness,
        })?);
    }
    let alpha = t
        .restrict_to_a(&alpha_j.mul(&beta_j)?)
        .map_err(|witness| ConstructionError::Closure {
            what: "alpha_J beta_J".into(),
            witness,
        })?;
    let structure = QuasiHopfStructure {
        name: format!("A(q), n={}, q=z^{}", t.n(), t.exponent()),
        carrier: a.clone(),
        coproduct,
        counit,
        antipode,
        associator,
        alpha,
        beta: TensorElement::one(&a, 1),
        generators: vec![("a".into(), t.a_power(1)), ("x".into(), t.a_x_power(1))],
    };
    Ok(AqConstruction {
        taft,
        j,
        j_inv,
        phi_h,
        alpha_j,
        beta_j,
        structure,
    })
}

/// `H(q)` as an ordinary Hopf algebra on the monomial basis
/// (`Φ = 1⊗1⊗1`, `α = β = 1`).
pub fn taft_structure(t: &TaftAlgebra) -> QuasiHopfStructure {
    let h = t.monomial().clone();
    let d = h.dim();
    QuasiHopfStructure {
        name: format!("H(q), n={}, q=z^{}", t.n(), t.exponent()),
        carrier: h.clone(),
        coproduct: (0..d).map(|b| t.delta_basis(b)).collect(),
        counit: (0..d).map(|b| t.epsilon_basis(b)).collect(),
        antipode: (0..d).map(|b| t.antipode_basis(b)).collect(),
        associator: TensorElement::one(&h, 3),
        alpha: TensorElement::one(&h, 1),
        beta: TensorElement::one(&h, 1),
        generators: vec![("g".into(), t.g()), ("x".into(), t.x())],
    }
}

fn compare(name: &str, computed: &TensorElement, expected: &TensorElement) -> Result<(), String> {
    match computed.first_difference(expected) {
        None => Ok(()),
        Some(d) => Err(format!("{name}: {d}")),
    }
}

/// `J J⁻¹ = J⁻¹ J = 1⊗1` and `(ε⊗id)(J) = (id⊗ε)(J) = 1`.
pub fn check_twist(t: &TaftAlgebra) -> CheckResult {
    let outcome = (|| {
        let h = t.idempotent_basis();
        let j = build_j(t);
        let j_inv = j.invert().map_err(|e| e.to_string())?;
        let one2 = TensorElement::one(h, 2);
        compare("J J^-1", &j.mul(&j_inv).map_err(|e| e.to_string())?, &one2)?;
        compare("J^-1 J", &j_inv.mul(&j).map_err(|e| e.to_string())?, &one2)?;
        let eps = |b: usize| TensorElement::scalar(h, t.epsilon_idem_basis(b));
        let one = TensorElement::one(h, 1);
        for slot in 0..2 {
            let r = j.apply_on_factor(slot, 0, eps).map_err(|e| e.to_string())?;
            compare(&format!("counit on slot {slot} of J"), &r, &one)?;
        }
        Ok(())
    })();
    CheckResult::from_outcome("twist", outcome)
}

/// `Φ_J` equals `Φ_{-1}` term for term and lies in `A^{⊗3}`.
pub fn check_associator(c: &AqConstruction) -> CheckResult {
    let t = &c.taft;
    let outcome = t
        .restrict_to_a(&c.phi_h)
        .map_err(|w| format!("Phi_J leaves A^(x)3: {w}"))
        .and_then(|phi| compare("Phi_J vs Phi_-1", &phi, &phi_l(t, -1)));
    CheckResult::from_outcome("associator", outcome)
}

/// `Δ_J(x)` by conjugation equals its closed form; the coproduct table of
/// `A(q)` exists only if every `Δ_J(B_s x^j)` lies in `A⊗A`.
pub fn check_delta_x(c: &AqConstruction) -> CheckResult {
    let closed = delta_j_x_closed(&c.taft);
    let outcome = c
        .delta_j_x()
        .map_err(|e| e.to_string())
        .and_then(|d| compare("Delta_J(x)", &d, &closed))
        .and_then(|_| compare("table Delta_J(x)", &c.structure.delta(&c.taft.a_x_power(1)), &closed));
    match outcome {
        Ok(()) => CheckResult::pass("delta_x")
            .with_detail(format!("Delta_J(u) in A(x)A for all {} basis elements", c.structure.dim())),
        Err(w) => CheckResult::fail("delta_x", w),
    }
}

/// `S_J(x)` equals its closed form.
pub fn check_antipode_x(c: &AqConstruction) -> CheckResult {
    let outcome = c
        .s_j_x()
        .map_err(|e| e.to_string())
        .and_then(|s| compare("S_J(x)", &s, &s_j_x_closed(&c.taft)));
    CheckResult::from_outcome("antipode_x", outcome)
}

/// `α_J`, `β_J` and `α_Jβ_J = Σ_z q^{nz} 1_z` match their closed forms; the
/// detail records which of `a`, `a⁻¹` the product is.
pub fn check_alpha_beta(c: &AqConstruction) -> CheckResult {
    let t = &c.taft;
    let outcome = compare("beta_J", &c.beta_j, &beta_j_closed(t))
        .and_then(|_| compare("alpha_J", &c.alpha_j, &alpha_j_closed(t)))
        .and_then(|_| compare("alpha_J beta_J", &c.alpha_beta_h(), &alpha_beta_closed(t)));
    CheckResult::from_outcome("alpha_beta", outcome)
        .with_detail(format!("alpha_J beta_J = {}", c.alpha_identity().describe()))
}
