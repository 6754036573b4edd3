//! The operators `ξ_l = (χ^l⊗id)Δ` and `η_l = (id⊗χ^l)Δ` on the degree-one
//! layer `A[1] = span{B_i x}` and the modules `V_q` of the algebra they generate.

use crate::cocycle::{class_invariant, ThreeCochain};
use crate::cyclotomic::CycNumber;
use crate::error::ConstructionError;
use crate::linalg::Matrix;
use crate::taft::TaftAlgebra;
use crate::tensor::TensorElement;
use crate::twist::{associator_phi_j, build_j, twisted_coproducts, QuasiHopfStructure};
use crate::verify::{character_value, CheckResult};

/// `a`, `ξ`, `η` acting on `V_q` in the basis `B_0 x, ..., B_{n-1} x`
/// (column `i` is the image of `B_i x`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeOneModule {
    pub n: usize,
    /// `q` as an element of `Q(ζ_{n²})`.
    pub q: CycNumber,
    pub a: Matrix,
    pub xi: Matrix,
    pub eta: Matrix,
}

impl DegreeOneModule {
    pub fn conductor(&self) -> u32 {
        self.q.conductor()
    }

    /// `Q = q^n`.
    pub fn big_q(&self) -> CycNumber {
        self.q.pow(self.n as i64).expect("q is a root of unity")
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.n, self.conductor())
    }

    /// `E_r = Σ_{k=0}^{n-2} B_{k-r} + Q B_{n-1-r}` acting by left
    /// multiplication, i.e. diagonally with `Q` in position `n-1-r`.
    pub fn e_r(&self, r: i64) -> Matrix {
        let n = self.n as i64;
        let m = self.conductor();
        let special = (n - 1 - r).rem_euclid(n) as usize;
        let entries: Vec<CycNumber> = (0..self.n)
            .map(|i| if i == special { self.big_q() } else { CycNumber::one(m) })
            .collect();
        Matrix::diagonal(&entries)
    }
}

/// `A[1]` basis indices `B_i x` inside `A`.
fn degree_one_basis(t: &TaftAlgebra) -> Vec<usize> {
    (0..t.n()).map(|i| t.bold_index(i as i64, 1)).collect()
}

/// Reads an element of `A` supported on `A[1]` as a coordinate vector.
fn degree_one_coords(t: &TaftAlgebra, u: &TensorElement, what: &str) -> Result<Vec<CycNumber>, String> {
    let basis = degree_one_basis(t);
    if let Some(w) = u.first_outside(&basis) {
        return Err(format!("{what} leaves A[1]: {w}"));
    }
    Ok(basis.iter().map(|&b| u.coefficient(&[b])).collect())
}

fn operator_from_columns(t: &TaftAlgebra, cols: &[Vec<CycNumber>]) -> Matrix {
    Matrix::from_fn(t.n(), t.n(), t.conductor(), |r, c| cols[c][r].clone())
}

/// `(ξ_l, η_l)` on `A[1]` from `Δ(B_i x)`; `delta(b)` must return the
/// coproduct of the `A` basis element `b`.
pub fn xi_eta_from_coproduct(
    t: &TaftAlgebra,
    delta: impl Fn(usize) -> TensorElement,
    l: i64,
) -> Result<(Matrix, Matrix), String> {
    let a = t.subalgebra();
    let chi: Vec<CycNumber> = (0..a.dim()).map(|b| character_value(t, l, b)).collect();
    let mut xi_cols = Vec::new();
    let mut eta_cols = Vec::new();
    for &b in &degree_one_basis(t) {
        let d = delta(b);
        let left = d
            .apply_on_factor(0, 0, |u| TensorElement::scalar(a, chi[u].clone()))
            .map_err(|e| e.to_string())?;
        let right = d
            .apply_on_factor(1, 0, |u| TensorElement::scalar(a, chi[u].clone()))
            .map_err(|e| e.to_string())?;
        let label = a.label(b);
        xi_cols.push(degree_one_coords(t, &left, &format!("xi_{l}({label})"))?);
        eta_cols.push(degree_one_coords(t, &right, &format!("eta_{l}({label})"))?);
    }
    Ok((operator_from_columns(t, &xi_cols), operator_from_columns(t, &eta_cols)))
}

/// `(ξ_l, η_l)` from the coproduct of a constructed `A(q)`.
pub fn xi_eta_operators(t: &TaftAlgebra, s: &QuasiHopfStructure, l: i64) -> Result<(Matrix, Matrix), String> {
    xi_eta_from_coproduct(t, |b| s.coproduct[b].clone(), l)
}

/// Left multiplication by `a` on `A[1]`, computed in `A`.
pub fn a_operator(t: &TaftAlgebra) -> Result<Matrix, String> {
    let a = t.a_power(1);
    let cols = degree_one_basis(t)
        .iter()
        .map(|&b| {
            let u = a.mul(&TensorElement::basis(t.subalgebra(), &[b])).map_err(|e| e.to_string())?;
            degree_one_coords(t, &u, "a B_i x")
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(operator_from_columns(t, &cols))
}

fn module_from(t: &TaftAlgebra, xi: Matrix, eta: Matrix) -> Result<DegreeOneModule, String> {
    Ok(DegreeOneModule {
        n: t.n(),
        q: t.q(),
        a: a_operator(t)?,
        xi,
        eta,
    })
}

/// `A(q)[1]` with the operators induced by the coproduct of `s`.
pub fn degree_one_module(t: &TaftAlgebra, s: &QuasiHopfStructure) -> Result<DegreeOneModule, String> {
    let (xi, eta) = xi_eta_operators(t, s, 1)?;
    module_from(t, xi, eta)
}

/// `Δ_J` on `A[0] ⊕ A[1]` only, by conjugation with `J`.
pub fn low_degree_coproducts(t: &TaftAlgebra) -> Result<Vec<TensorElement>, String> {
    let j = build_j(t);
    let j_inv = j.invert().map_err(|e| e.to_string())?;
    twisted_coproducts(t, &j, &j_inv, 1).map_err(|e| e.to_string())
}

/// `A(q)[1]` from the twisted coproduct, without assembling all of `A(q)`.
pub fn degree_one_module_direct(t: &TaftAlgebra) -> Result<DegreeOneModule, String> {
    let table = low_degree_coproducts(t)?;
    let (xi, eta) = xi_eta_from_coproduct(t, |b| table[b].clone(), 1)?;
    module_from(t, xi, eta)
}

fn cyclic_shift_down(n: usize, m: u32, entry: impl Fn(usize) -> CycNumber) -> Matrix {
    Matrix::from_fn(n, n, m, |r, c| {
        if r == (c + n - 1) % n {
            entry(c)
        } else {
            CycNumber::zero(m)
        }
    })
}

/// `V_q` from the action formulas `a B_i x = Q^i B_i x`,
/// `η(B_i x) = q B_{i-1} x`, `ξ(B_i x) = Q^{-δ_{i,k}} B_{i-1} x`, where `k` is
/// the position of the `Q^{-1}` correction.
pub fn vq_module_with_correction(n: usize, e: i64, k: usize) -> DegreeOneModule {
    let m = (n * n) as u32;
    let q = CycNumber::root_of_unity(m, e);
    let big_q = q.pow(n as i64).expect("root of unity");
    let big_q_inv = big_q.inv().expect("root of unity");
    let a = Matrix::diagonal(&(0..n).map(|i| big_q.pow(i as i64).expect("root of unity")).collect::<Vec<_>>());
    let eta = cyclic_shift_down(n, m, |_| q.clone());
    let xi = cyclic_shift_down(n, m, |i| if i == k { big_q_inv.clone() } else { CycNumber::one(m) });
    DegreeOneModule { n, q, a, xi, eta }
}

/// `V_q` with the correction in the position produced by `Δ_J`.
pub fn vq_module(n: usize, e: i64) -> DegreeOneModule {
    vq_module_with_correction(n, e, 1 % n)
}

/// `(r_ξ, r_η)` with `(ζ^{r_ξ} ξ)^n = (ζ^{r_η} η)^n = 1`, each the smallest
/// nonnegative exponent that works.
pub fn rescaling_exponents(d: &DegreeOneModule) -> Option<(i64, i64)> {
    let m = d.conductor() as i64;
    let one = d.identity();
    let find = |op: &Matrix| {
        (0..m).find(|&r| op.scale(&CycNumber::root_of_unity(m as u32, r)).pow(d.n as u32) == one)
    };
    Some((find(&d.xi)?, find(&d.eta)?))
}

/// The module with `ξ, η` rescaled so that `ξ^n = η^n = 1`.
pub fn rescaled(d: &DegreeOneModule) -> Option<DegreeOneModule> {
    let (rx, re) = rescaling_exponents(d)?;
    let m = d.conductor();
    Some(DegreeOneModule {
        xi: d.xi.scale(&CycNumber::root_of_unity(m, rx)),
        eta: d.eta.scale(&CycNumber::root_of_unity(m, re)),
        ..d.clone()
    })
}

fn relation(name: &str, lhs: &Matrix, rhs: &Matrix) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{name}: {lhs} vs {rhs}"))
    }
}

/// `a^n = 1`, `ξ^n = Q^{-1}`, `η^n = Q`, `ξa = Qaξ`, `ηa = Qaη`; `a` diagonal
/// with entries `Q^i`; `ξ`, `η` monomial.
fn power_and_grading_relations(d: &DegreeOneModule) -> Result<(), String> {
    let n = d.n as u32;
    let big_q = d.big_q();
    let big_q_inv = big_q.inv().map_err(|e| e.to_string())?;
    let id = d.identity();
    let a_expected = Matrix::diagonal(&(0..d.n).map(|i| big_q.pow(i as i64).unwrap()).collect::<Vec<_>>());
    relation("a = diag(Q^i)", &d.a, &a_expected)?;
    if !d.xi.is_monomial() || !d.eta.is_monomial() {
        return Err("xi or eta is not a monomial matrix".into());
    }
    relation("a^n = 1", &d.a.pow(n), &id)?;
    relation("xi^n = Q^-1", &d.xi.pow(n), &id.scale(&big_q_inv))?;
    relation("eta^n = Q", &d.eta.pow(n), &id.scale(&big_q))?;
    relation("xi a = Q a xi", &d.xi.mul(&d.a), &d.a.mul(&d.xi).scale(&big_q))?;
    relation("eta a = Q a eta", &d.eta.mul(&d.a), &d.a.mul(&d.eta).scale(&big_q))?;
    Ok(())
}

/// `ξη = E_0^{-1} E_{-1} ηξ`.
pub fn commutation_as_stated(d: &DegreeOneModule) -> Result<(), String> {
    let e0_inv = d.e_r(0).inverse().map_err(|e| e.to_string())?;
    let rhs = e0_inv.mul(&d.e_r(-1)).mul(&d.eta.mul(&d.xi));
    relation("xi eta = E_0^-1 E_-1 eta xi", &d.xi.mul(&d.eta), &rhs)
}

/// `ηξ = E_0^{-1} E_{-1} ξη`, the form satisfied by the operators from `Δ_J`.
pub fn commutation_computed(d: &DegreeOneModule) -> Result<(), String> {
    let e0_inv = d.e_r(0).inverse().map_err(|e| e.to_string())?;
    let rhs = e0_inv.mul(&d.e_r(-1)).mul(&d.xi.mul(&d.eta));
    relation("eta xi = E_0^-1 E_-1 xi eta", &d.eta.mul(&d.xi), &rhs)
}

/// All defining relations, with the commutation relation in its literal form.
pub fn check_bq_relations(d: &DegreeOneModule) -> CheckResult {
    CheckResult::from_outcome("bq_relations", power_and_grading_relations(d).and_then(|_| commutation_as_stated(d)))
}

/// All defining relations, with the commutation relation in the form the
/// twisted coproduct produces.
pub fn check_bq_relations_computed(d: &DegreeOneModule) -> CheckResult {
    CheckResult::from_outcome(
        "bq_relations_computed",
        power_and_grading_relations(d).and_then(|_| commutation_computed(d)),
    )
}

/// Spectrum of `ηξ^{-1}`: its diagonal (ordered by the `a`-eigenvalue `Q^i`)
/// and the same values as a sorted multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub graded: Vec<CycNumber>,
    pub multiset: Vec<CycNumber>,
}

pub fn spectrum_eta_xi_inv(d: &DegreeOneModule) -> Result<Spectrum, String> {
    let xi_inv = d.xi.inverse().map_err(|_| "xi is singular".to_string())?;
    let op = d.eta.mul(&xi_inv);
    if !op.is_diagonal() {
        return Err(format!("eta xi^-1 is not diagonal: {op}"));
    }
    let graded = op.diag();
    let mut multiset = graded.clone();
    multiset.sort_by(|a, b| a.canonical_cmp(b));
    Ok(Spectrum { graded, multiset })
}

fn render_values(v: &[CycNumber]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}

/// The expected multiset `{q ×(n-1), Qq ×1}`.
pub fn expected_spectrum(d: &DegreeOneModule) -> Vec<CycNumber> {
    let mut v = vec![d.q.clone(); d.n - 1];
    v.push(&d.big_q() * &d.q);
    v.sort_by(|a, b| a.canonical_cmp(b));
    v
}

pub fn check_spectrum(d: &DegreeOneModule) -> CheckResult {
    let name = "spectrum";
    match spectrum_eta_xi_inv(d) {
        Err(w) => CheckResult::fail(name, w),
        Ok(s) if s.multiset != expected_spectrum(d) => CheckResult::fail(
            name,
            format!("spectrum [{}] differs from {{q x(n-1), Qq}}", render_values(&s.multiset)),
        ),
        Ok(_) => CheckResult::pass(name),
    }
}

/// Dimension of `{ X : X a = a X, X ξ = ξ X, X η = η X }`.
pub fn commutant_dimension(d: &DegreeOneModule) -> usize {
    let n = d.n;
    let m = d.conductor();
    let gens = [&d.a, &d.xi, &d.eta];
    // unknown X[r][c] at column r*n + c; one row per entry of XG - GX
    let mut rows = Vec::new();
    for g in gens {
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![CycNumber::zero(m); n * n];
                for k in 0..n {
                    row[r * n + k] += g.get(k, c);
                    row[k * n + c] = &row[k * n + c] - g.get(r, k);
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_fn(rows.len(), n * n, m, |r, c| rows[r][c].clone());
    n * n - sys.rank()
}

/// The `q` with `q^n = Q` for `Q = ζ_n^{k}`, as exponents of `ζ_{n²}`:
/// `q = ζ_{n²}^{k + n t}`.
pub fn roots_over(n: usize, big_q_exponent: i64) -> Vec<i64> {
    (0..n as i64).map(|t| (big_q_exponent + n as i64 * t).rem_euclid((n * n) as i64)).collect()
}

/// `B(Q) ≅ ⊕_{q^n = Q} End(V_q)`: every `V_q` is irreducible, the spectra of
/// `ηξ^{-1}` on the `a`-eigenspaces are pairwise distinct, and the `n³` products `a^i ξ^j η^k` are
/// linearly independent in `⊕ End(V_q)`.
pub fn check_bq_semisimple(n: usize, big_q_exponent: i64) -> CheckResult {
    let name = "bq_semisimple";
    if num_integer::gcd(big_q_exponent, n as i64) != 1 {
        return CheckResult::fail(name, format!("Q = zeta_{n}^{big_q_exponent} is not primitive"));
    }
    let modules: Vec<DegreeOneModule> = roots_over(n, big_q_exponent).into_iter().map(|e| vq_module(n, e)).collect();
    for d in &modules {
        if let Err(w) = power_and_grading_relations(d).and_then(|_| commutation_computed(d)) {
            return CheckResult::fail(name, format!("V_q for q = {}: {w}", d.q));
        }
        let c = commutant_dimension(d);
        if c != 1 {
            return CheckResult::fail(name, format!("V_q for q = {} has commutant of dimension {c}", d.q));
        }
    }
    let mut spectra = Vec::new();
    for d in &modules {
        match spectrum_eta_xi_inv(d) {
            Ok(s) => spectra.push(s),
            Err(w) => return CheckResult::fail(name, w),
        }
    }
    for i in 0..spectra.len() {
        for j in i + 1..spectra.len() {
            if spectra[i].graded == spectra[j].graded {
                return CheckResult::fail(
                    name,
                    format!("V_q for q = {} and q = {} share a spectrum", modules[i].q, modules[j].q),
                );
            }
        }
    }
    let rank = product_span_rank(&modules);
    let dims: usize = modules.iter().map(|d| d.n * d.n).sum();
    if rank != n * n * n || dims != n * n * n {
        return CheckResult::fail(name, format!("span of a^i xi^j eta^k has rank {rank}, sum of dim^2 is {dims}"));
    }
    CheckResult::pass(name).with_detail(format!("rank {rank}, {} irreducible modules", modules.len()))
}

/// Rank of `{a^i ξ^j η^k : 0 ≤ i,j,k < n}` acting on `⊕ V_q`, each product
/// flattened to the concatenation of its blocks.
pub fn product_span_rank(modules: &[DegreeOneModule]) -> usize {
    let n = modules[0].n;
    let m = modules[0].conductor();
    let mut rows: Vec<Vec<CycNumber>> = Vec::new();
    let powers = |op: &Matrix| {
        let mut v = vec![Matrix::identity(n, m)];
        for _ in 1..n {
            let next = v.last().unwrap().mul(op);
            v.push(next);
        }
        v
    };
    let per_module: Vec<_> = modules.iter().map(|d| (powers(&d.a), powers(&d.xi), powers(&d.eta))).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut row = Vec::with_capacity(modules.len() * n * n);
                for (pa, px, pe) in &per_module {
                    row.extend(pa[i].mul(&px[j]).mul(&pe[k]).entries().iter().cloned());
                }
                rows.push(row);
            }
        }
    }
    Matrix::from_fn(rows.len(), rows[0].len(), m, |r, c| rows[r][c].clone()).rank()
}

/// Isomorphism invariants of `A(q)`: the class invariant of the associator
/// cochain and the spectrum of `ηξ^{-1}` on `A[1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraInvariant {
    pub class: CycNumber,
    pub spectrum: Spectrum,
}

pub fn algebra_invariant(t: &TaftAlgebra) -> Result<AlgebraInvariant, String> {
    let phi = associator_phi_j(t, &build_j(t)).map_err(|e| e.to_string())?;
    let class = class_invariant(&ThreeCochain::from_associator(t, &phi))?;
    let spectrum = spectrum_eta_xi_inv(&degree_one_module_direct(t)?)?;
    Ok(AlgebraInvariant { class, spectrum })
}

/// Compares the invariants of `A(ζ^{e1})` and `A(ζ^{e2})`; passes iff they
/// differ.
pub fn nonisomorphism_invariant(n: usize, e1: i64, e2: i64) -> Result<CheckResult, ConstructionError> {
    let name = "nonisomorphism";
    let t1 = TaftAlgebra::new(n, e1)?;
    let t2 = TaftAlgebra::new(n, e2)?;
    let (i1, i2) = match (algebra_invariant(&t1), algebra_invariant(&t2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(w), _) | (_, Err(w)) => return Ok(CheckResult::fail(name, w)),
    };
    let render = |i: &AlgebraInvariant| {
        format!("class {}, spectrum [{}]", i.class, render_values(&i.spectrum.graded))
    };
    Ok(if i1 == i2 {
        CheckResult::fail(name, format!("e={e1} and e={e2} share invariants: {}", render(&i1)))
    } else {
        CheckResult::pass(name).with_detail(format!("e={e1}: {}; e={e2}: {}", render(&i1), render(&i2)))
    })
}
