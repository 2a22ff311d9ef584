//! Command-line front end.
//!
//! Exit codes: 0 when every executed check passed, 1 on a failed check,
//! 2 on a usage error, 3 when the enumeration budget would be exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::scroll::export::{
    to_cas_script, to_json, to_plain_text, CasDialect, DEFAULT_EXPAND_DEGREE,
};
use crate::scroll::{equation_set, ScrollProfile};
use crate::verify::{
    compare_equation_set, run_verification, sample_scroll_points, EnumerationOptions,
    VarietyReport, DEFAULT_BUDGET,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Prime used for the randomized parametrization sampling in `verify`.
const SAMPLE_FIELD: u64 = 101;
const SAMPLE_TRIALS: u64 = 200;

#[derive(Parser, Debug)]
#[command(
    name = "ratscroll",
    version,
    about = "Set-theoretic defining equations of rational normal scrolls"
)]
pub struct RunConfig {
    /// Block sizes n_1,...,n_d (order matters).
    #[arg(long, global = true, value_parser = parse_profile)]
    pub profile: Option<ScrollProfile>,

    /// Prime field for point enumeration.
    #[arg(long, global = true)]
    pub field: Option<u64>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Cap on point-times-generator evaluations.
    #[arg(long, global = true, env = "RATSCROLL_BUDGET")]
    pub budget: Option<u128>,

    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Print the N-2 generators of J.
    Equations,
    /// Run the symbolic checks, and the point comparison when --field is set.
    Verify,
    /// Compare V(J) and V(P) over a prime field.
    Enumerate {
        /// Also list the points of V(J).
        #[arg(long)]
        points: bool,
    },
    /// Write a script for an external computer-algebra system.
    Export,
    /// Time construction, symbolic verification and enumeration.
    Bench,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Plain,
    Json,
    M2,
    Singular,
    /// Alias for m2.
    Cas,
}

fn parse_profile(s: &str) -> Result<ScrollProfile, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// `q = 3`, or `q = 2` once `N >= 12`.
pub fn default_field(profile: &ScrollProfile) -> u64 {
    if profile.ambient_dim() >= 12 {
        2
    } else {
        3
    }
}

/// Parses `args` (including the program name) and runs the command. Main
/// output goes to `stdout` (or `--out`), diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    execute(&config, stdout, stderr)
}

pub fn execute(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let Some(profile) = &config.profile else {
        let _ = writeln!(stderr, "error: --profile is required");
        return EXIT_USAGE;
    };
    let opts = EnumerationOptions {
        budget: config.budget.unwrap_or(DEFAULT_BUDGET),
        ..Default::default()
    };
    let outcome = match &config.command {
        Command::Equations => cmd_equations(profile, config.format.unwrap_or(Format::Plain)),
        Command::Export => cmd_equations(profile, config.format.unwrap_or(Format::M2)),
        Command::Verify => cmd_verify(profile, config, &opts),
        Command::Enumerate { points } => cmd_enumerate(profile, config, &opts, *points),
        Command::Bench => cmd_bench(profile, config, &opts),
    };
    match outcome {
        Ok((text, code)) => {
            let written = match &config.out {
                Some(path) => std::fs::write(path, &text),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::BudgetExceeded { .. } => EXIT_BUDGET,
                Error::InvalidProfile(_)
                | Error::NotPrime(_)
                | Error::FieldTooLarge { .. }
                | Error::IndexOutOfRange { .. } => EXIT_USAGE,
                _ => EXIT_FAIL,
            }
        }
    }
}

type Outcome = Result<(String, i32), Error>;

fn cmd_equations(profile: &ScrollProfile, format: Format) -> Outcome {
    let set = equation_set(profile)?;
    let text = match format {
        Format::Plain => to_plain_text(&set, DEFAULT_EXPAND_DEGREE),
        Format::Json => to_json(&set, DEFAULT_EXPAND_DEGREE)? + "\n",
        Format::M2 | Format::Cas => to_cas_script(&set, CasDialect::Macaulay2),
        Format::Singular => to_cas_script(&set, CasDialect::Singular),
    };
    Ok((text, EXIT_PASS))
}

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn variety_lines(out: &mut String, r: &VarietyReport) {
    writeln!(
        out,
        "{} variety over F_{}: |V(J)| = {}, |V(P)| = {}, witnesses = {}, representatives = {}",
        status(r.passed()),
        r.q,
        r.count_j,
        r.count_p,
        r.witnesses.len(),
        r.points_enumerated
    )
    .unwrap();
    for w in &r.witnesses {
        writeln!(out, "  witness {w:?}").unwrap();
    }
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    passed: bool,
    seed: u64,
    report: &'a crate::verify::VerificationReport,
    sampling: &'a crate::verify::SampleReport,
}

fn cmd_verify(profile: &ScrollProfile, config: &RunConfig, opts: &EnumerationOptions) -> Outcome {
    let seed = config.seed.unwrap_or(0);
    let mut report = run_verification(profile, config.field, opts)?;
    if let Some(v) = report.variety.as_mut() {
        v.seed = Some(seed);
    }
    let sampling = sample_scroll_points(profile, SAMPLE_FIELD, SAMPLE_TRIALS, seed)?;
    let passed = report.passed() && sampling.passed();
    let text = if config.format == Some(Format::Json) {
        serde_json::to_string(&VerifyJson {
            passed,
            seed,
            report: &report,
            sampling: &sampling,
        })? + "\n"
    } else {
        let mut out = String::new();
        for c in &report.checks {
            writeln!(out, "{} {}", status(c.passed), c.name).unwrap();
        }
        let p = &report.parametrization;
        let failed: Vec<&str> = p
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.label.as_str())
            .collect();
        writeln!(
            out,
            "{} parametrization ({} generators){}",
            status(p.passed()),
            p.checks.len(),
            if failed.is_empty() {
                String::new()
            } else {
                format!(": failed {}", failed.join(", "))
            }
        )
        .unwrap();
        writeln!(
            out,
            "{} sampling over F_{} ({} trials, {} skipped, seed {})",
            status(sampling.passed()),
            sampling.q,
            sampling.trials,
            sampling.skipped,
            seed
        )
        .unwrap();
        if let Some(v) = &report.variety {
            variety_lines(&mut out, v);
        }
        writeln!(
            out,
            "{}",
            if passed {
                "all checks passed"
            } else {
                "CHECKS FAILED"
            }
        )
        .unwrap();
        out
    };
    Ok((text, if passed { EXIT_PASS } else { EXIT_FAIL }))
}

fn cmd_enumerate(
    profile: &ScrollProfile,
    config: &RunConfig,
    opts: &EnumerationOptions,
    list_points: bool,
) -> Outcome {
    let q = config.field.unwrap_or_else(|| default_field(profile));
    let set = equation_set(profile)?;
    let mut report = compare_equation_set(&set, q, opts)?;
    report.seed = config.seed;
    let code = if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    let text = if config.format == Some(Format::Json) {
        report.to_json()? + "\n"
    } else {
        let mut out = String::new();
        variety_lines(&mut out, &report);
        if list_points {
            let e = crate::verify::enumerate_variety(
                &set.j_generators()
                    .iter()
                    .map(|g| g.expand())
                    .collect::<Vec<_>>(),
                &profile.variables(),
                q,
                opts,
            )?;
            for p in e.points {
                writeln!(out, "{p:?}").unwrap();
            }
        }
        out
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct BenchRow {
    phase: &'static str,
    millis: f64,
    detail: String,
}

fn cmd_bench(profile: &ScrollProfile, config: &RunConfig, opts: &EnumerationOptions) -> Outcome {
    let mut rows = Vec::new();
    let mut ok = true;

    let t = Instant::now();
    let set = equation_set(profile)?;
    let mut expanded_terms = 0;
    for w in &set.weights {
        if w.degree() <= DEFAULT_EXPAND_DEGREE {
            expanded_terms += w.expand().num_terms();
        }
    }
    rows.push(BenchRow {
        phase: "construction",
        millis: t.elapsed().as_secs_f64() * 1e3,
        detail: format!(
            "|J|={} minors={} expanded G terms={expanded_terms}",
            set.j_len(),
            set.minors.len()
        ),
    });

    let t = Instant::now();
    let report = run_verification(profile, None, opts)?;
    ok &= report.passed();
    rows.push(BenchRow {
        phase: "symbolic",
        millis: t.elapsed().as_secs_f64() * 1e3,
        detail: format!(
            "{} checks, {} parametrized generators, {}",
            report.checks.len(),
            report.parametrization.checks.len(),
            status(report.passed())
        ),
    });

    let q = config.field.unwrap_or_else(|| default_field(profile));
    let t = Instant::now();
    let detail = match compare_equation_set(&set, q, opts) {
        Ok(r) => {
            ok &= r.passed();
            format!(
                "q={q} representatives={} |V(J)|={} |V(P)|={} {}",
                r.points_enumerated,
                r.count_j,
                r.count_p,
                status(r.passed())
            )
        }
        Err(Error::BudgetExceeded { estimate, budget }) => {
            format!("q={q} skipped: estimate {estimate} > budget {budget}")
        }
        Err(e) => return Err(e),
    };
    rows.push(BenchRow {
        phase: "enumeration",
        millis: t.elapsed().as_secs_f64() * 1e3,
        detail,
    });

    let text = if config.format == Some(Format::Json) {
        serde_json::to_string(&rows)? + "\n"
    } else {
        let mut out = String::from("phase\tmillis\tdetail\n");
        for r in &rows {
            writeln!(out, "{}\t{:.3}\t{}", r.phase, r.millis, r.detail).unwrap();
        }
        out
    };
    Ok((text, if ok { EXIT_PASS } else { EXIT_FAIL }))
}
