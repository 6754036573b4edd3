use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use qhf_core::harness::{
    dump_structure, max_n_from_env, parse_checks, parse_exponents, run_suite, validate_n, DumpTarget, RunConfig,
};
use qhf_core::InputError;

/// Builds the quasi-Hopf algebras A(q) of dimension n^3 and verifies them exactly.
#[derive(Debug, Parser)]
#[command(name = "qhf", version)]
struct Cli {
    /// Order parameter; q is a primitive n^2-th root of unity.
    #[arg(long)]
    n: usize,
    /// Exponents e with q = zeta_{n^2}^e: a comma-separated list or "all".
    #[arg(long = "q-exp", default_value = "all")]
    q_exp: String,
    /// Checks to run: a comma-separated list or "all".
    #[arg(long, default_value = "all")]
    checks: String,
    /// Write the report (or dump) here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print one constructed element: J, phi, delta_x, alpha, beta or sx.
    #[arg(long)]
    dump: Option<String>,
    /// Record wall times in the report.
    #[arg(long)]
    timings: bool,
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), InputError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| InputError(format!("cannot write {}: {e}", path.display()))),
    }
}

fn run(cli: Cli, max_n: usize) -> Result<i32, InputError> {
    validate_n(cli.n, max_n)?;
    let q_exponents = parse_exponents(cli.n, &cli.q_exp)?;
    if let Some(what) = &cli.dump {
        let target = DumpTarget::parse(what)?;
        let mut text = String::new();
        for &e in &q_exponents {
            text.push_str(&dump_structure(cli.n, e, target)?);
        }
        emit(&text, &cli.out)?;
        return Ok(0);
    }
    let config = RunConfig {
        n: cli.n,
        q_exponents,
        checks: parse_checks(&cli.checks)?,
        seed: cli.seed,
        timings: cli.timings,
    };
    let report = run_suite(&config)?;
    emit(&report.to_json(), &cli.out)?;
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match max_n_from_env().and_then(|max_n| run(cli, max_n)) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("qhf: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn run_args(args: &[&str], max_n: usize) -> Result<i32, InputError> {
        let cli = Cli::try_parse_from(std::iter::once("qhf").chain(args.iter().copied())).unwrap();
        run(cli, max_n)
    }

    /// Runs with `--out` pointing into a temporary directory; returns the exit
    /// code and the written text.
    fn run_to_file(args: &[&str]) -> (i32, String) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out");
        let mut all: Vec<&str> = args.to_vec();
        let p = path.to_str().unwrap().to_string();
        all.extend(["--out", &p]);
        let code = run_args(&all, 5).unwrap();
        (code, std::fs::read_to_string(&path).unwrap())
    }

    #[test]
    fn invalid_inputs() {
        let err = run_args(&["--n", "3", "--q-exp", "3"], 5).unwrap_err();
        assert!(err.0.contains("not coprime"));
        assert!(run_args(&["--n", "2", "--checks", "nope"], 5).is_err());
        assert!(run_args(&["--n", "6"], 5).is_err());
        assert!(run_args(&["--n", "1"], 5).is_err());
        assert!(run_args(&["--n", "4", "--checks", "twist"], 3).is_err());
        assert!(run_args(&["--n", "2", "--dump", "gamma"], 5).is_err());
        assert!(Cli::try_parse_from(["qhf"]).is_err());
        assert!(Cli::try_parse_from(["qhf", "--n", "x"]).is_err());
    }

    #[test]
    fn single_check_report() {
        let (code, text) = run_to_file(&["--n", "2", "--q-exp", "1", "--checks", "pentagon"]);
        assert_eq!(code, 0);
        let r: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(r["tool"], "qhf");
        assert_eq!(r["conductor"], 4);
        let checks = r["runs"][0]["checks"].as_array().unwrap();
        assert_eq!(checks.len(), 1);
        assert_eq!(checks[0]["name"], "pentagon");
        assert_eq!(checks[0]["status"], "pass");
        assert!(checks[0].get("elapsed_ms").is_none());
        assert_eq!(r["summary"]["failed"], 0);
    }

    #[test]
    fn n_2_passes_everything() {
        let (code, text) = run_to_file(&["--n", "2"]);
        assert_eq!(code, 0);
        let r: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(r["runs"].as_array().unwrap().len(), 2);
        assert_eq!(r["summary"]["failed"], 0);
    }

    #[test]
    fn n_3_fails_only_the_stated_commutation_relation() {
        let (code, text) = run_to_file(&["--n", "3"]);
        assert_eq!(code, 1);
        let r: Value = serde_json::from_str(&text).unwrap();
        let runs = r["runs"].as_array().unwrap();
        assert_eq!(runs.len(), 6);
        for run in runs {
            for c in run["checks"].as_array().unwrap() {
                let expected = if c["name"] == "bq_relations" { "fail" } else { "pass" };
                assert_eq!(c["status"], expected, "{c}");
            }
        }
    }

    #[test]
    fn reports_are_byte_identical() {
        let args = ["--n", "3", "--q-exp", "1,5", "--seed", "9"];
        assert_eq!(run_to_file(&args), run_to_file(&args));
    }

    #[test]
    fn timings_are_opt_in() {
        let (_, text) = run_to_file(&["--n", "2", "--q-exp", "3", "--checks", "twist", "--timings"]);
        let r: Value = serde_json::from_str(&text).unwrap();
        assert!(r["runs"][0]["checks"][0]["elapsed_ms"].is_u64());
        assert!(r["total_elapsed_ms"].is_u64());
    }

    #[test]
    fn dumps() {
        let (code, text) = run_to_file(&["--n", "2", "--q-exp", "1", "--dump", "phi"]);
        assert_eq!(code, 0);
        assert!(text.contains("(-1) * B_1 (x) B_1 (x) B_1"));
        let (_, text) = run_to_file(&["--n", "3", "--q-exp", "2", "--dump", "J"]);
        assert!(text.contains("# 81 terms"));
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 81);
    }
}
