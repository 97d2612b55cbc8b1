//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code and captured output so it can be tested without a process.

use std::fmt::Write as _;

use clap::{ArgGroup, Parser, Subcommand};

use crate::classifier::json::classify_json;
use crate::error::Error;
use crate::flag_chern::{chern_top_principal_parts_on, chern_top_sym3_dual, FlagElement};
use crate::harness::{verify_table, Check, TrialReport};
use crate::schubert::text::{format_terms, parse_expression, resolve_n, Expr};
use crate::schubert::{schubert_degree, ChowElement};

/// Exit code for a failed verification.
pub const EXIT_FAILED: i32 = 1;
/// Exit code for unusable input.
pub const EXIT_INPUT: i32 = 2;
/// Exit code for an internal consistency failure of the classifier.
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "pencil-orbits", version, about = "Orbits of pencils of plane conics and their classes in G(1,5)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a pencil given as JSON.
    Classify {
        /// Path to the pencil JSON, or `-` for standard input.
        #[arg(long)]
        pencil: String,
        /// Indent the JSON output.
        #[arg(long)]
        pretty: bool,
    },
    /// Reproduce the table of orbit-closure classes and degrees.
    Table {
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Expand a class expression such as "s[1]*s[1]" in the Schubert basis.
    Schubert {
        expr: String,
        #[arg(long = "N", default_value_t = 5)]
        n: u32,
    },
    /// Plücker degree of the Schubert cycle with partition "a,b".
    Degree {
        partition: String,
        #[arg(long = "N", default_value_t = 5)]
        n: u32,
    },
    /// Chern classes on the flag bundle over G(1,5).
    #[command(group(ArgGroup::new("which").required(true).args(["principal_parts", "sym3"])))]
    Chern {
        /// Top Chern class of the rank-r bundle of principal parts (1..=4).
        #[arg(long)]
        principal_parts: Option<u32>,
        /// Top Chern class of Sym^3 of the dual tautological bundle.
        #[arg(long)]
        sym3: bool,
    },
    /// Run randomized verifications and print their reports as JSON.
    Verify {
        /// tangent, flex, generic, secantJ or all.
        #[arg(long, default_value = "all")]
        check: String,
        /// Number of trials; each check has its own default.
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, env = "PENCIL_ORBITS_SEED", default_value_t = 0)]
        seed: u64,
    },
}

/// What a run produced.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome { code, stdout: String::new(), stderr }
    }
}

fn error_outcome(e: Error) -> Outcome {
    let code = match e {
        Error::ClassificationViolated(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    };
    Outcome::fail(code, format!("error: {e}\n"))
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { Outcome::fail(EXIT_INPUT, text) } else { Outcome::ok(text) };
        }
    };
    match cli.command {
        Command::Classify { pencil, pretty } => classify_cmd(&pencil, pretty),
        Command::Table { json } => table_cmd(json),
        Command::Schubert { expr, n } => schubert_cmd(&expr, n),
        Command::Degree { partition, n } => degree_cmd(&partition, n),
        Command::Chern { principal_parts, sym3 } => chern_cmd(principal_parts, sym3),
        Command::Verify { check, trials, seed } => verify_cmd(&check, trials, seed),
    }
}

fn classify_cmd(path: &str, pretty: bool) -> Outcome {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_INPUT, format!("error: cannot read {path}: {e}\n")),
    };
    match classify_json(&text) {
        Ok(result) => {
            let out = if pretty { serde_json::to_string_pretty(&result) } else { serde_json::to_string(&result) };
            Outcome::ok(out.expect("plain data serializes") + "\n")
        }
        Err(e) => error_outcome(e),
    }
}

fn table_cmd(json: bool) -> Outcome {
    let report = match verify_table() {
        Ok(r) => r,
        Err(e) => return error_outcome(e),
    };
    let code = if report.passed() { 0 } else { EXIT_FAILED };
    let stdout = if json {
        serde_json::to_string_pretty(&report).expect("plain data serializes") + "\n"
    } else {
        let mut out = String::new();
        for r in &report.rows {
            writeln!(
                out,
                "{:<3} {:<12} codim {}  {:<24} deg {:>3}  {:<12} {}",
                r.orbit,
                r.base_locus,
                r.codim,
                r.class,
                r.degree,
                format!("[{}]", serde_json::to_value(r.source).unwrap().as_str().unwrap()),
                if r.pass { "PASS" } else { "FAIL" }
            )
            .unwrap();
        }
        writeln!(
            out,
            "F1(S): principal parts {} | Sym^3 {}  {}",
            report.fano_principal_parts,
            report.fano_sym3,
            if report.fano_routes_agree { "PASS" } else { "FAIL" }
        )
        .unwrap();
        for m in &report.mismatches {
            writeln!(out, "mismatch: {m}").unwrap();
        }
        out
    };
    Outcome { code, stdout, stderr: String::new() }
}

fn mentions_zeta(e: &Expr) -> bool {
    match e {
        Expr::Zeta => true,
        Expr::Int(_) | Expr::Schubert(..) => false,
        Expr::Neg(x) => mentions_zeta(x),
        Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) => mentions_zeta(x) || mentions_zeta(y),
    }
}

fn schubert_cmd(expr: &str, n: u32) -> Outcome {
    let result = parse_expression(expr).and_then(|(e, suffix)| {
        let n = resolve_n(suffix, Some(n))?;
        if mentions_zeta(&e) {
            Ok(e.eval::<FlagElement>(n)?.format_terms())
        } else {
            Ok(format_terms(&e.eval::<ChowElement>(n)?, None))
        }
    });
    match result {
        Ok(s) => Outcome::ok(s + "\n"),
        Err(e) => error_outcome(e),
    }
}

fn degree_cmd(partition: &str, n: u32) -> Outcome {
    let parts: Vec<&str> = partition.split(',').map(str::trim).collect();
    let parsed: Option<Vec<u32>> = parts.iter().map(|p| p.parse().ok()).collect();
    let (a, b) = match parsed.as_deref() {
        Some([a]) => (*a, 0),
        Some([a, b]) => (*a, *b),
        _ => return Outcome::fail(EXIT_INPUT, format!("error: expected a partition like 2,1, got {partition:?}\n")),
    };
    match schubert_degree(a, b, n) {
        Ok(d) => Outcome::ok(format!("{d}\n")),
        Err(e) => error_outcome(e),
    }
}

fn chern_cmd(principal_parts: Option<u32>, sym3: bool) -> Outcome {
    if sym3 {
        return Outcome::ok(format_terms(&chern_top_sym3_dual(), None) + "\n");
    }
    let r = principal_parts.expect("clap enforces one of the two flags");
    match chern_top_principal_parts_on(r, 5) {
        Ok(c) => Outcome::ok(c.format_terms() + "\n"),
        Err(e) => error_outcome(e),
    }
}

fn verify_cmd(check: &str, trials: Option<u64>, seed: u64) -> Outcome {
    let checks: Vec<Check> = if check == "all" {
        Check::ALL.to_vec()
    } else {
        match Check::from_name(check) {
            Some(c) => vec![c],
            None => {
                return Outcome::fail(
                    EXIT_INPUT,
                    format!("error: unknown check {check:?}; expected tangent, flex, generic, secantJ or all\n"),
                )
            }
        }
    };
    if trials == Some(0) {
        return Outcome::fail(EXIT_INPUT, "error: --trials must be at least 1\n".into());
    }
    let mut reports: Vec<TrialReport> = Vec::new();
    let mut stderr = String::new();
    let mut all_pass = true;
    for c in checks {
        let report = c.run(trials.unwrap_or(c.default_trials()), seed);
        let pass = c.passes(&report);
        all_pass &= pass;
        writeln!(
            stderr,
            "{}: {}/{} ({:.1}%, threshold {:.0}%) {}",
            report.check,
            report.successes,
            report.trials,
            100.0 * report.success_rate(),
            100.0 * c.threshold(),
            if pass { "PASS" } else { "FAIL" }
        )
        .unwrap();
        reports.push(report);
    }
    let stdout = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    }
    .expect("plain data serializes");
    Outcome { code: if all_pass { 0 } else { EXIT_FAILED }, stdout: stdout + "\n", stderr }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("pencil-orbits").chain(args.iter().copied()))
    }

    #[test]
    fn degree_command() {
        assert_eq!(run_args(&["degree", "2,0", "--N", "5"]).stdout, "9\n");
        assert_eq!(run_args(&["degree", "3"]).stdout, "4\n");
        assert_eq!(run_args(&["degree", "5,0"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["degree", "x"]).code, EXIT_INPUT);
    }

    #[test]
    fn schubert_command() {
        assert_eq!(run_args(&["schubert", "s[1]*s[1]", "--N", "5"]).stdout, "s[2] + s[1,1]\n");
        assert_eq!(run_args(&["schubert", "z*z"]).stdout, "s[1]*z - s[1,1]\n");
        assert_eq!(run_args(&["schubert", "s[1] + s[2]"]).code, EXIT_INPUT);
    }

    #[test]
    fn chern_command() {
        assert_eq!(run_args(&["chern", "--principal-parts", "3"]).stdout, "6*s[2]*z + 9*s[1,1]*z\n");
        assert_eq!(run_args(&["chern", "--sym3"]).stdout, "18*s[3,1] + 27*s[2,2]\n");
        assert_eq!(run_args(&["chern", "--principal-parts", "7"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["chern"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["chern", "--sym3", "--principal-parts", "2"]).code, EXIT_INPUT);
    }

    #[test]
    fn table_command() {
        let out = run_args(&["table"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.matches("PASS").count(), 9);
        assert!(!out.stdout.contains("FAIL"));
    }

    #[test]
    fn verify_rejects_unknown_check() {
        assert_eq!(run_args(&["verify", "--check", "bogus"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["verify", "--check", "flex", "--trials", "0"]).code, EXIT_INPUT);
    }

    #[test]
    fn help_is_not_an_error() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("classify"));
    }
}
