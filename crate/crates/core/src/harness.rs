//! Batch driver behind the `qhf` binary: runs named checks over `(n, e)` and
//! produces a deterministic JSON report.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::bq::{
    algebra_invariant, check_bq_relations, check_bq_relations_computed, check_bq_semisimple, check_spectrum,
    degree_one_module, AlgebraInvariant,
};
use crate::cocycle::{check_3cocycle, class_invariant, omega, ThreeCochain};
use crate::error::{ConstructionError, InputError};
use crate::taft::TaftAlgebra;
use crate::tensor::TensorElement;
use crate::twist::{
    alpha_beta_j, associator_phi_j, build_aq_from, build_j, check_alpha_beta, check_antipode_x, check_associator,
    check_delta_x, check_twist, delta_j, s_j, taft_structure, AlphaIdentity, AqConstruction,
};
use crate::verify::{
    check_antipode, check_basic, check_counit, check_grading, check_pentagon, check_quasi_coassoc,
    check_radical_is_quasihopf_ideal, CheckResult, SampleConfig, Status,
};

pub const TOOL: &str = "qhf";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const DEFAULT_MAX_N: usize = 5;

/// Every check, in report order.
pub const CHECKS: &[&str] = &[
    "taft_coassociativity",
    "taft_counit",
    "taft_antipode",
    "twist",
    "associator",
    "delta_x",
    "antipode_x",
    "alpha_beta",
    "quasi_coassociativity",
    "pentagon",
    "counit",
    "antipode",
    "basic",
    "grading",
    "radical_ideal",
    "cocycle",
    "bq_relations",
    "bq_relations_computed",
    "spectrum",
    "bq_semisimple",
    "nonisomorphism",
];

/// Checks that read the assembled `A(q)`.
const NEEDS_AQ: &[&str] = &[
    "associator",
    "delta_x",
    "antipode_x",
    "alpha_beta",
    "quasi_coassociativity",
    "pentagon",
    "counit",
    "antipode",
    "basic",
    "grading",
    "radical_ideal",
    "cocycle",
    "bq_relations",
    "bq_relations_computed",
    "spectrum",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub n: usize,
    pub q_exponents: Vec<i64>,
    pub checks: Vec<String>,
    pub seed: u64,
    #[serde(skip)]
    pub timings: bool,
}

/// Exponents `e` with `gcd(e, n²) = 1`, `0 < e < n²`.
pub fn valid_exponents(n: usize) -> Vec<i64> {
    let n2 = (n * n) as i64;
    (1..n2).filter(|&e| num_integer::gcd(e, n2) == 1).collect()
}

pub fn validate_n(n: usize, max_n: usize) -> Result<(), InputError> {
    if n < 2 || n > max_n {
        return Err(InputError(format!("n must lie in 2..={max_n} (got {n})")));
    }
    Ok(())
}

/// `"all"` or a comma-separated list of exponents coprime to `n²`.
pub fn parse_exponents(n: usize, list: &str) -> Result<Vec<i64>, InputError> {
    if list.trim() == "all" {
        return Ok(valid_exponents(n));
    }
    let n2 = (n * n) as i64;
    let mut out = Vec::new();
    for part in list.split(',') {
        let e: i64 = part
            .trim()
            .parse()
            .map_err(|_| InputError(format!("not an integer exponent: {part:?}")))?;
        if num_integer::gcd(e, n2) != 1 {
            return Err(InputError(format!("exponent {e} is not coprime to n^2 = {n2}")));
        }
        let e = e.rem_euclid(n2);
        if !out.contains(&e) {
            out.push(e);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// `"all"` or a comma-separated subset of [`CHECKS`], returned in registry order.
pub fn parse_checks(list: &str) -> Result<Vec<String>, InputError> {
    if list.trim() == "all" {
        return Ok(CHECKS.iter().map(|s| s.to_string()).collect());
    }
    let requested: Vec<&str> = list.split(',').map(str::trim).collect();
    if let Some(bad) = requested.iter().find(|r| !CHECKS.contains(r)) {
        return Err(InputError(format!("unknown check {bad:?}; known: {}", CHECKS.join(", "))));
    }
    Ok(CHECKS
        .iter()
        .filter(|c| requested.contains(c))
        .map(|s| s.to_string())
        .collect())
}

/// `QHF_MAX_N`, defaulting to [`DEFAULT_MAX_N`].
pub fn max_n_from_env() -> Result<usize, InputError> {
    match std::env::var("QHF_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| InputError(format!("QHF_MAX_N is not an integer: {v:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Run {
    pub n: usize,
    pub q_exponent: i64,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    /// Coefficients are polynomials in `z = ζ_conductor`.
    pub conductor: usize,
    pub runs: Vec<Run>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_elapsed_ms: Option<u64>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Process exit status: 0 iff every check passed.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

struct Context {
    n: usize,
    invariants: Option<BTreeMap<i64, Result<AlgebraInvariant, String>>>,
}

impl Context {
    fn invariants(&mut self) -> &BTreeMap<i64, Result<AlgebraInvariant, String>> {
        let n = self.n;
        self.invariants.get_or_insert_with(|| {
            valid_exponents(n)
                .into_iter()
                .map(|e| {
                    let inv = TaftAlgebra::new(n, e)
                        .map_err(|err| err.to_string())
                        .and_then(|t| algebra_invariant(&t));
                    (e, inv)
                })
                .collect()
        })
    }
}

fn nonisomorphism_check(ctx: &mut Context, e: i64) -> CheckResult {
    let name = "nonisomorphism";
    let all = ctx.invariants();
    let own = match &all[&e] {
        Ok(i) => i,
        Err(w) => return CheckResult::fail(name, w.clone()),
    };
    for (other, inv) in all {
        if *other == e {
            continue;
        }
        match inv {
            Err(w) => return CheckResult::fail(name, format!("e={other}: {w}")),
            Ok(i) if i == own => {
                return CheckResult::fail(name, format!("e={e} and e={other} have identical invariants"));
            }
            Ok(_) => {}
        }
    }
    CheckResult::pass(name).with_detail(format!(
        "class {}, distinct from the {} other exponents",
        own.class,
        all.len() - 1
    ))
}

fn cocycle_check(c: &AqConstruction) -> CheckResult {
    let name = "cocycle";
    let t = &c.taft;
    let w = check_3cocycle(&omega(t.n(), t.exponent(), -1));
    if !w.passed() {
        return CheckResult::fail(name, w.witness.unwrap_or_default());
    }
    let cochain = ThreeCochain::from_associator(t, &c.structure.associator);
    match class_invariant(&cochain) {
        Err(w) => CheckResult::fail(name, w),
        Ok(v) if v.is_one() => CheckResult::fail(name, "class invariant of the associator is 1"),
        Ok(v) if v != t.big_q().inv().expect("root of unity") => {
            CheckResult::fail(name, format!("class invariant of the associator is {v}, expected Q^-1"))
        }
        Ok(v) => CheckResult::pass(name).with_detail(format!("class invariant {v} = Q^-1")),
    }
}

fn run_check(
    name: &str,
    t: &TaftAlgebra,
    aq: Option<&Result<AqConstruction, String>>,
    ctx: &mut Context,
    cfg: &SampleConfig,
) -> CheckResult {
    let e = t.exponent();
    if NEEDS_AQ.contains(&name) {
        let c = match aq.expect("built when needed") {
            Ok(c) => c,
            Err(w) => return CheckResult::fail(name, format!("construction failed: {w}")),
        };
        let s = &c.structure;
        return match name {
            "associator" => check_associator(c),
            "delta_x" => check_delta_x(c),
            "antipode_x" => check_antipode_x(c),
            "alpha_beta" => check_alpha_beta(c),
            "quasi_coassociativity" => check_quasi_coassoc(s, cfg),
            "pentagon" => check_pentagon(s),
            "counit" => check_counit(s, cfg),
            "antipode" => check_antipode(s, cfg),
            "basic" => check_basic(t, s),
            "grading" => check_grading(t, s),
            "radical_ideal" => check_radical_is_quasihopf_ideal(t, s),
            "cocycle" => cocycle_check(c),
            "bq_relations" | "bq_relations_computed" | "spectrum" => match degree_one_module(t, s) {
                Err(w) => CheckResult::fail(name, w),
                Ok(d) => match name {
                    "bq_relations" => check_bq_relations(&d),
                    "bq_relations_computed" => check_bq_relations_computed(&d),
                    _ => check_spectrum(&d),
                },
            },
            _ => unreachable!("registry covers {name}"),
        };
    }
    let renamed = |r: CheckResult| CheckResult { name: name.to_string(), ..r };
    match name {
        "taft_coassociativity" => renamed(check_quasi_coassoc(&taft_structure(t), cfg)),
        "taft_counit" => renamed(check_counit(&taft_structure(t), cfg)),
        "taft_antipode" => renamed(check_antipode(&taft_structure(t), cfg)),
        "twist" => check_twist(t),
        "bq_semisimple" => check_bq_semisimple(t.n(), e.rem_euclid(t.n() as i64)),
        "nonisomorphism" => nonisomorphism_check(ctx, e),
        _ => unreachable!("registry covers {name}"),
    }
}

/// Runs the configured checks; `config` must already be validated.
pub fn run_suite(config: &RunConfig) -> Result<Report, InputError> {
    let start = Instant::now();
    let cfg = SampleConfig::with_seed(config.seed);
    let mut ctx = Context {
        n: config.n,
        invariants: None,
    };
    let needs_aq = config.checks.iter().any(|c| NEEDS_AQ.contains(&c.as_str()));
    let mut runs = Vec::new();
    for &e in &config.q_exponents {
        let t = TaftAlgebra::new(config.n, e).map_err(|err| InputError(err.to_string()))?;
        let aq = needs_aq.then(|| build_aq_from(t.clone()).map_err(|err: ConstructionError| err.to_string()));
        let mut checks = Vec::new();
        for name in &config.checks {
            let r = CheckResult::timed(|| run_check(name, &t, aq.as_ref(), &mut ctx, &cfg));
            checks.push(CheckRecord {
                name: r.name.clone(),
                status: r.status,
                witness: r.witness,
                detail: r.detail,
                elapsed_ms: config.timings.then(|| r.elapsed.as_millis() as u64),
            });
        }
        runs.push(Run {
            n: config.n,
            q_exponent: e,
            checks,
        });
    }
    let total = runs.iter().map(|r| r.checks.len()).sum();
    let passed = runs
        .iter()
        .flat_map(|r| &r.checks)
        .filter(|c| c.status == Status::Pass)
        .count();
    Ok(Report {
        tool: TOOL,
        version: VERSION,
        config: config.clone(),
        conductor: config.n * config.n,
        runs,
        summary: Summary {
            total,
            passed,
            failed: total - passed,
        },
        total_elapsed_ms: config.timings.then(|| start.elapsed().as_millis() as u64),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DumpTarget {
    J,
    Phi,
    DeltaX,
    Alpha,
    Beta,
    Sx,
}

impl DumpTarget {
    pub fn parse(s: &str) -> Result<Self, InputError> {
        Ok(match s {
            "J" | "j" => DumpTarget::J,
            "phi" => DumpTarget::Phi,
            "delta_x" => DumpTarget::DeltaX,
            "alpha" => DumpTarget::Alpha,
            "beta" => DumpTarget::Beta,
            "sx" => DumpTarget::Sx,
            _ => return Err(InputError(format!("unknown dump target {s:?}; known: J, phi, delta_x, alpha, beta, sx"))),
        })
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DumpTarget::J => "J",
            DumpTarget::Phi => "phi",
            DumpTarget::DeltaX => "delta_x",
            DumpTarget::Alpha => "alpha",
            DumpTarget::Beta => "beta",
            DumpTarget::Sx => "sx",
        }
    }
}

fn restricted(t: &TaftAlgebra, u: &TensorElement, what: &str) -> Result<TensorElement, InputError> {
    t.restrict_to_a(u)
        .map_err(|w| InputError(format!("{what} leaves A: {w}")))
}

/// Text rendering of one constructed element, one term per line in
/// lexicographic order, coefficients as polynomials in `z`.
pub fn dump_structure(n: usize, e: i64, what: DumpTarget) -> Result<String, InputError> {
    let t = TaftAlgebra::new(n, e).map_err(|err| InputError(err.to_string()))?;
    let fail = |err: ConstructionError| InputError(err.to_string());
    let j = build_j(&t);
    let x = t.embed_a(&t.a_x_power(1));
    let mut notes = Vec::new();
    let element = match what {
        DumpTarget::J => j,
        DumpTarget::Phi => associator_phi_j(&t, &j).map_err(fail)?,
        DumpTarget::DeltaX => restricted(&t, &delta_j(&t, &j, &x).map_err(fail)?, "Delta_J(x)")?,
        DumpTarget::Alpha | DumpTarget::Beta => {
            let (alpha, beta) = alpha_beta_j(&t, &j).map_err(fail)?;
            if what == DumpTarget::Beta {
                notes.push("beta_J in H; A(q) uses beta = 1".to_string());
                beta
            } else {
                let ab = alpha.mul(&beta).map_err(|err| InputError(err.to_string()))?;
                let which = AlphaIdentity::of(&t, &ab).describe();
                notes.push(format!("alpha_J beta_J in H, equal to {which}; A(q) uses alpha = alpha_J beta_J"));
                ab
            }
        }
        DumpTarget::Sx => {
            let (_, beta) = alpha_beta_j(&t, &j).map_err(fail)?;
            restricted(&t, &s_j(&t, &beta, &x).map_err(fail)?, "S_J(x)")?
        }
    };
    let m = t.conductor();
    let mut out = format!(
        "# {} for n={n}, q=z^{}, z=zeta_{m}, conductor {m}, basis {}\n",
        what.as_str(),
        t.exponent(),
        element.parent().name()
    );
    for note in notes {
        out.push_str(&format!("# {note}\n"));
    }
    out.push_str(&format!("# {} terms\n", element.len()));
    for line in element.render("z") {
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}
