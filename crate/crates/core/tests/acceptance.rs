//! Acceptance criteria 1-12, exact arithmetic throughout. Each test writes one
//! `criterion N: PASS|FAIL` line to stderr, bypassing output capture.

use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use qhf_core::bq::{
    algebra_invariant, check_bq_relations, check_bq_semisimple, check_spectrum, degree_one_module,
};
use qhf_core::cocycle::{check_3cocycle, class_invariant, omega, random_coboundary, ThreeCochain};
use qhf_core::harness::{parse_checks, run_suite, valid_exponents, RunConfig};
use qhf_core::taft::TaftAlgebra;
use qhf_core::tensor::TensorElement;
use qhf_core::twist::{
    build_aq, check_alpha_beta, check_antipode_x, check_associator, check_delta_x, check_twist, drop_first_term,
    negate_first_term, phi_l, taft_structure, AqConstruction,
};
use qhf_core::verify::{
    check_antipode, check_basic, check_counit, check_grading, check_pentagon, check_quasi_coassoc,
    check_radical_is_quasihopf_ideal, CheckResult, SampleConfig,
};
use qhf_core::CycNumber;

const NS: [usize; 4] = [2, 3, 4, 5];

fn pairs() -> Vec<(usize, i64)> {
    NS.iter()
        .flat_map(|&n| valid_exponents(n).into_iter().map(move |e| (n, e)))
        .collect()
}

fn constructions() -> &'static [AqConstruction] {
    static CELL: OnceLock<Vec<AqConstruction>> = OnceLock::new();
    CELL.get_or_init(|| pairs().into_iter().map(|(n, e)| build_aq(n, e).unwrap()).collect())
}

fn tag(c: &AqConstruction) -> String {
    format!("n={} e={}", c.n(), c.taft.exponent())
}

/// Prints the criterion line and fails the test on any failure.
fn conclude(number: u32, title: &str, failures: Vec<String>) {
    let line = if failures.is_empty() {
        format!("criterion {number}: PASS  {title}\n")
    } else {
        format!(
            "criterion {number}: FAIL  {title} ({} failures; first: {})\n",
            failures.len(),
            failures[0]
        )
    };
    std::io::stderr().write_all(line.as_bytes()).unwrap();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

fn record(failures: &mut Vec<String>, context: &str, r: &CheckResult) {
    if !r.passed() {
        failures.push(format!("{context} {}: {}", r.name, r.witness.clone().unwrap_or_default()));
    }
}

#[test]
fn criterion_01_taft_hopf_algebra() {
    let cfg = SampleConfig::default();
    let mut failures = Vec::new();
    for (n, e) in pairs() {
        let start = Instant::now();
        let t = TaftAlgebra::new(n, e).unwrap();
        let h = taft_structure(&t);
        if h.dim() != n.pow(4) {
            failures.push(format!("n={n} e={e}: dim H = {}", h.dim()));
        }
        let ctx = format!("n={n} e={e}");
        record(&mut failures, &ctx, &check_quasi_coassoc(&h, &cfg));
        record(&mut failures, &ctx, &check_counit(&h, &cfg));
        record(&mut failures, &ctx, &check_antipode(&h, &cfg));
        let limit = if n <= 3 { Duration::from_secs(5) } else { Duration::from_secs(120) };
        let elapsed = start.elapsed();
        if elapsed >= limit {
            failures.push(format!("{ctx}: took {elapsed:?}, limit {limit:?}"));
        }
    }
    conclude(1, "Taft Hopf axioms, dim n^4, runtime bounds", failures);
}

#[test]
fn criterion_02_twist_invertible_and_counital() {
    let mut failures = Vec::new();
    for (n, e) in pairs() {
        let t = TaftAlgebra::new(n, e).unwrap();
        record(&mut failures, &format!("n={n} e={e}"), &check_twist(&t));
    }
    conclude(2, "J J^-1 = 1(x)1, counit of J", failures);
}

#[test]
fn criterion_03_associator_is_phi_minus_one() {
    let mut failures = Vec::new();
    for c in constructions() {
        record(&mut failures, &tag(c), &check_associator(c));
        if c.structure.associator != phi_l(&c.taft, -1) {
            failures.push(format!("{}: stored associator differs from Phi_-1", tag(c)));
        }
        let bold: Vec<usize> = (0..c.n()).map(|s| c.taft.bold_index(s as i64, 0)).collect();
        if let Some(w) = c.structure.associator.first_outside(&bold) {
            failures.push(format!("{}: associator term outside bold idempotent triples: {w}", tag(c)));
        }
    }
    conclude(3, "Phi_J = Phi_-1 on bold idempotent triples", failures);
}

#[test]
fn criterion_04_twisted_coproduct_of_x() {
    let mut failures = Vec::new();
    for c in constructions() {
        record(&mut failures, &tag(c), &check_delta_x(c));
        let n = c.n();
        if c.structure.coproduct.len() != n.pow(3) {
            failures.push(format!("{}: coproduct table has {} entries", tag(c), c.structure.coproduct.len()));
        }
    }
    conclude(4, "Delta_J(x) closed form, Delta_J(A) in A(x)A", failures);
}

#[test]
fn criterion_05_antipode_and_alpha() {
    let cfg = SampleConfig::default();
    let mut failures = Vec::new();
    for c in constructions() {
        record(&mut failures, &tag(c), &check_antipode_x(c));
        let ab = check_alpha_beta(c);
        record(&mut failures, &tag(c), &ab);
        let identity = c.alpha_identity().describe();
        let expected = if c.n() == 2 { "a = a^-1" } else { "a" };
        if identity != expected {
            failures.push(format!("{}: alpha_J beta_J reported as {identity}", tag(c)));
        }
        record(&mut failures, &tag(c), &check_antipode(&c.structure, &cfg));
    }
    conclude(5, "S_J(x) closed form, alpha_J beta_J = sum q^(nz) 1_z, antipode axioms", failures);
}

#[test]
fn criterion_06_quasi_hopf_and_basic() {
    let cfg = SampleConfig::default();
    let mut failures = Vec::new();
    for c in constructions() {
        let s = &c.structure;
        let t = &c.taft;
        if s.dim() != c.n().pow(3) {
            failures.push(format!("{}: dim A = {}", tag(c), s.dim()));
        }
        for r in [
            check_quasi_coassoc(s, &cfg),
            check_pentagon(s),
            check_counit(s, &cfg),
            check_antipode(s, &cfg),
            check_basic(t, s),
            check_grading(t, s),
            check_radical_is_quasihopf_ideal(t, s),
        ] {
            record(&mut failures, &tag(c), &r);
        }
    }
    conclude(6, "A(q) quasi-Hopf axioms, basic with n characters, dim n^3", failures);
}

#[test]
fn criterion_07_cocycle() {
    let mut failures = Vec::new();
    for (n, e) in pairs() {
        let t = TaftAlgebra::new(n, e).unwrap();
        let big_q = t.big_q();
        for l in 1..n as i64 {
            let w = omega(n, e, l);
            record(&mut failures, &format!("n={n} e={e} l={l}"), &check_3cocycle(&w));
            let cochain = ThreeCochain::from_associator(&t, &phi_l(&t, l));
            match class_invariant(&cochain) {
                Err(w) => failures.push(format!("n={n} e={e} l={l}: {w}")),
                Ok(v) => {
                    if v != big_q.pow(l).unwrap() || v.is_one() {
                        failures.push(format!("n={n} e={e} l={l}: class invariant {v}"));
                    }
                    for seed in 0..50u64 {
                        let twisted = cochain.mul(&random_coboundary(n, seed * 1000 + l as u64));
                        if class_invariant(&twisted).as_ref() != Ok(&v) {
                            failures.push(format!("n={n} e={e} l={l} seed={seed}: invariant changed"));
                        }
                    }
                }
            }
        }
    }
    conclude(7, "omega 3-cocycle, class invariant Q^l, coboundary invariance", failures);
}

#[test]
fn criterion_08_operator_suite() {
    let mut failures = Vec::new();
    for c in constructions() {
        match degree_one_module(&c.taft, &c.structure) {
            Err(w) => failures.push(format!("{}: {w}", tag(c))),
            Ok(d) => {
                record(&mut failures, &tag(c), &check_bq_relations(&d));
                record(&mut failures, &tag(c), &check_spectrum(&d));
            }
        }
    }
    conclude(8, "xi, eta relations incl. xi eta = E_0^-1 E_-1 eta xi, spectrum of eta xi^-1", failures);
}

#[test]
fn criterion_09_semisimplicity() {
    let mut failures = Vec::new();
    for n in NS {
        for k in 1..n as i64 {
            if num_integer::gcd(k, n as i64) == 1 {
                record(&mut failures, &format!("n={n} Q=zeta_{n}^{k}"), &check_bq_semisimple(n, k));
            }
        }
    }
    conclude(9, "span rank n^3, irreducible V_q, distinct spectra", failures);
}

#[test]
fn criterion_10_nonisomorphism() {
    let mut failures = Vec::new();
    for n in NS {
        let invariants: Vec<_> = valid_exponents(n)
            .into_iter()
            .map(|e| (e, algebra_invariant(&TaftAlgebra::new(n, e).unwrap()).unwrap()))
            .collect();
        for (i, (e1, a)) in invariants.iter().enumerate() {
            for (e2, b) in &invariants[i + 1..] {
                if a == b {
                    failures.push(format!("n={n}: e={e1} and e={e2} share invariants"));
                }
            }
        }
    }
    conclude(10, "invariants distinguish all A(zeta^e1), A(zeta^e2)", failures);
}

#[test]
fn criterion_11_negative_controls() {
    let cfg = SampleConfig::default();
    let mut failures = Vec::new();
    for (n, e) in [(2, 1), (3, 1)] {
        let c = build_aq(n, e).unwrap();
        let s = &c.structure;
        let t = &c.taft;
        let xb = t.bold_index(0, 1);
        let bad_phi = s.with_associator(negate_first_term(&s.associator));
        let alpha_one = s.with_alpha(TensorElement::one(&s.carrier, 1));
        let dropped = s.with_coproduct(xb, drop_first_term(&s.coproduct[xb]));
        let cases = [
            ("pentagon on mutated Phi", check_pentagon(&bad_phi)),
            ("quasi-coassociativity on mutated Phi", check_quasi_coassoc(&bad_phi, &cfg)),
            ("antipode on alpha := 1", check_antipode(&alpha_one, &cfg)),
            ("quasi-coassociativity on dropped Delta_J term", check_quasi_coassoc(&dropped, &cfg)),
            ("counit on dropped Delta_J term", check_counit(&dropped, &cfg)),
        ];
        for (what, r) in cases {
            if r.passed() || r.witness.is_none() {
                failures.push(format!("n={n} e={e}: {what} was not detected"));
            }
        }
        let bad_eps = s.with_counit(t.bold_index(1, 0), CycNumber::one(t.conductor()));
        if check_counit(&bad_eps, &cfg).witness.is_none() {
            failures.push(format!("n={n} e={e}: counit on corrupted epsilon was not detected"));
        }
    }
    conclude(11, "each axiom check fails with a witness on a corrupted structure", failures);
}

#[test]
fn criterion_12_determinism() {
    let config = RunConfig {
        n: 3,
        q_exponents: valid_exponents(3),
        checks: parse_checks("all").unwrap(),
        seed: 11,
        timings: false,
    };
    let first = run_suite(&config).unwrap().to_json();
    let second = run_suite(&config).unwrap().to_json();
    let mut failures = Vec::new();
    if first != second {
        failures.push("reports differ".to_string());
    }
    conclude(12, "identical config gives byte-identical reports", failures);
}
