//! Command-line surface: certificate runs, bound evaluation, distribution
//! audits, conjecture exploration, and curve export.
//!
//! Exit codes: 0 success, 2 usage/validation error, 3 conjecture
//! counterexample candidate, 1 internal failure.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::{conjecture, distributions, manifest, report};

use logconc_core::bounds::{self, Delta};
use logconc_core::certify::{self, CertifyInputs};
use logconc_core::rational::{self, Rational};

use manifest::RunManifest;

#[derive(Parser)]
#[command(name = "logconc", version, about = "Verification toolkit for a one-sided concentration bound for log-concave distributions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run proof certificates (exact arithmetic).
    Certify(CertifyArgs),
    /// Evaluate the closed-form bound functions at one delta.
    Bounds(BoundsArgs),
    /// Audit library distributions against the bound.
    Dist(DistArgs),
    /// Explore the extremal-density conjecture numerically.
    Conjecture(ConjectureArgs),
    /// Export a CSV curve of the bounds for plotting.
    Curve(CurveArgs),
    /// Re-execute a run from its manifest.
    Rerun(RerunArgs),
}

#[derive(Args)]
struct CertifyArgs {
    /// all, lemma-ab, d1, d2, d3, d4, ratio, or theorem
    #[arg(long, default_value = "all")]
    select: String,
    /// text or json
    #[arg(long, default_value = "text")]
    format: String,
    /// Output file (defaults to <outdir>/certify.<ext>)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Positive delta, as a fraction ("16/3") or decimal ("1.25")
    #[arg(long)]
    delta: String,
    /// Optional peak location u with 0 < u < delta
    #[arg(long)]
    u: Option<String>,
    /// Optional b at which to also print p2(delta, b)
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DistArgs {
    /// Family tag or "all"
    #[arg(long, default_value = "all")]
    family: String,
    /// Delta grid "start:stop:step" (default the canonical 7-point grid)
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 1.0)]
    delta: f64,
    #[arg(long, default_value_t = 64)]
    knots: usize,
    /// Support half-extent (A = B)
    #[arg(long, default_value_t = 10.0)]
    support: f64,
    #[arg(long, default_value_t = 8)]
    restarts: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CurveArgs {
    /// "start:stop:step" over delta
    #[arg(long)]
    range: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RerunArgs {
    #[arg(long)]
    manifest: PathBuf,
}

/// Parses and runs one argument vector; `rerun` re-enters here.
pub fn dispatch(argv: &[String]) -> u8 {
    let mut full = vec!["logconc".to_string()];
    full.extend_from_slice(argv);
    let cli = match Cli::try_parse_from(&full) {
        Ok(c) => c,
        Err(e) => {
            // keep clap's help/version on stdout with success
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Certify(a) => cmd_certify(&a, argv),
        Command::Bounds(a) => cmd_bounds(&a, argv),
        Command::Dist(a) => cmd_dist(&a, argv),
        Command::Conjecture(a) => cmd_conjecture(&a, argv),
        Command::Curve(a) => cmd_curve(&a, argv),
        Command::Rerun(a) => cmd_rerun(&a),
    }
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn internal(msg: &str) -> u8 {
    eprintln!("internal error: {msg}");
    1
}

/// Writes the primary output and its manifest; prints the output too.
fn emit(
    subcommand: &str,
    argv: &[String],
    seed: Option<u64>,
    out: &PathBuf,
    content: &str,
) -> Result<(), String> {
    if let Some(parent) = out.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| e.to_string())?;
        }
    }
    std::fs::write(out, content).map_err(|e| e.to_string())?;
    let m = RunManifest::new(subcommand, argv, seed, &[out.clone()]);
    m.write_beside(out).map_err(|e| e.to_string())?;
    print!("{content}");
    Ok(())
}

fn out_path(given: &Option<PathBuf>, default_name: &str) -> PathBuf {
    given
        .clone()
        .unwrap_or_else(|| manifest::default_out_dir().join(default_name))
}

fn cmd_certify(a: &CertifyArgs, argv: &[String]) -> u8 {
    let inputs = CertifyInputs::published();
    let certs = if a.select == "all" {
        certify::run_all(&inputs)
    } else {
        match certify::run_one(&a.select, &inputs) {
            Some(c) => vec![c],
            None => return usage(&format!("unknown certificate selector '{}'", a.select)),
        }
    };
    let (content, ext) = match a.format.as_str() {
        "text" => (report::certificates_to_text(&certs), "txt"),
        "json" => (
            serde_json::to_string_pretty(&report::certificates_to_json(&certs)).unwrap() + "\n",
            "json",
        ),
        other => return usage(&format!("unknown format '{other}'")),
    };
    let out = out_path(&a.out, &format!("certify.{ext}"));
    if let Err(e) = emit("certify", argv, None, &out, &content) {
        return internal(&e);
    }
    if certs.iter().all(|c| c.passed()) {
        0
    } else {
        1
    }
}

fn parse_positive(label: &str, s: &str) -> Result<Rational, String> {
    let r = rational::parse(s).ok_or_else(|| format!("cannot parse {label} '{s}'"))?;
    if r <= rational::zero() {
        return Err(format!("{label} must be positive"));
    }
    Ok(r)
}

fn cmd_bounds(a: &BoundsArgs, argv: &[String]) -> u8 {
    let delta = match parse_positive("delta", &a.delta) {
        Ok(d) => d,
        Err(e) => return usage(&e),
    };
    let delta = Delta::new(delta).expect("positive by check");
    let u = match &a.u {
        None => None,
        Some(s) => match parse_positive("u", s) {
            Ok(u) => {
                if &u >= delta.value() {
                    return usage("u must satisfy 0 < u < delta");
                }
                Some(u)
            }
            Err(e) => return usage(&e),
        },
    };
    let rep = match bounds::bound_report(&delta, u.as_ref()) {
        Ok(r) => r,
        Err(e) => return usage(&format!("{e}")),
    };
    let mut content = report::bounds_to_text(&rep);
    if let Some(bs) = &a.b {
        match rational::parse(bs) {
            Some(b) if b >= rational::zero() => {
                content.push_str(&format!(
                    "  p2_at_b: {}\n",
                    report::frac_and_dec(&bounds::p2(&delta, &b))
                ));
            }
            _ => return usage(&format!("cannot parse b '{bs}' as a nonnegative value")),
        }
    }
    let out = out_path(&a.out, "bounds.txt");
    if let Err(e) = emit("bounds", argv, None, &out, &content) {
        return internal(&e);
    }
    0
}

/// Parses "start:stop:step" into an inclusive f64 grid.
fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(format!("grid '{s}' is not start:stop:step"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| p.parse::<f64>().map_err(|e| format!("grid '{s}': {e}")))
        .collect::<Result<_, _>>()?;
    let (start, stop, step) = (nums[0], nums[1], nums[2]);
    if step <= 0.0 || start <= 0.0 || stop < start {
        return Err(format!("grid '{s}' must have 0 < start <= stop and step > 0"));
    }
    let mut out = Vec::new();
    let mut k = 0u64;
    loop {
        let x = start + k as f64 * step;
        if x > stop + 0.5 * step {
            break;
        }
        out.push(x);
        k += 1;
    }
    Ok(out)
}

fn cmd_dist(a: &DistArgs, argv: &[String]) -> u8 {
    let deltas = match &a.grid {
        None => vec![0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 8.0],
        Some(g) => match parse_grid(g) {
            Ok(d) => d,
            Err(e) => return usage(&e),
        },
    };
    let members: Vec<_> = if a.family == "all" {
        distributions::library()
    } else {
        match distributions::make_family(&a.family, &[]) {
            Ok(d) => vec![distributions::standardize(d)],
            Err(e) => return usage(&e),
        }
    };
    let results: Vec<_> = members
        .iter()
        .map(|d| distributions::check_bound(d, &deltas))
        .collect();
    let mut content = report::check_results_to_csv(&results);
    content.push_str(&report::check_results_to_text(&results));
    // cross-family conjecture observations are informational only
    for note in distributions::observed_minimality(&members, &deltas) {
        content.push_str(&format!("observation: {note}\n"));
    }
    let out = out_path(&a.out, "dist.txt");
    if let Err(e) = emit("dist", argv, None, &out, &content) {
        return internal(&e);
    }
    if results.iter().all(|r| r.violations.is_empty()) {
        0
    } else {
        1
    }
}

fn cmd_conjecture(a: &ConjectureArgs, argv: &[String]) -> u8 {
    let cfg = match conjecture::ExplorerConfig::new(
        a.delta, a.knots, a.support, a.support, a.restarts, a.seed,
    ) {
        Ok(c) => c,
        Err(e) => return usage(&e),
    };
    let res = match conjecture::minimize(&cfg) {
        Ok(r) => r,
        Err(e) => return internal(&e),
    };
    let cmp = conjecture::compare_to_conjecture(&res);
    let content = report::explorer_to_text(&res, &cmp);
    let out = out_path(&a.out, "conjecture.txt");
    if let Err(e) = emit("conjecture", argv, Some(a.seed), &out, &content) {
        return internal(&e);
    }
    match cmp.verdict {
        conjecture::Verdict::Consistent => 0,
        conjecture::Verdict::CounterexampleCandidate => 3,
    }
}

fn cmd_curve(a: &CurveArgs, argv: &[String]) -> u8 {
    // grid stepping in exact rationals so the CSV is reproducible
    let parts: Vec<&str> = a.range.split(':').collect();
    if parts.len() != 3 {
        return usage(&format!("range '{}' is not start:stop:step", a.range));
    }
    let parse = |s: &str| rational::parse(s).ok_or_else(|| format!("cannot parse '{s}'"));
    let (start, stop, step) = match (parse(parts[0]), parse(parts[1]), parse(parts[2])) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        _ => return usage(&format!("range '{}' has non-numeric parts", a.range)),
    };
    if start <= rational::zero() || step <= rational::zero() || stop < start {
        return usage("range must have 0 < start <= stop and step > 0");
    }
    let mut content = String::from("delta,p,p1,conjectured\n");
    let mut x = start;
    let half = &step / rational::int(2);
    while x <= &stop + &half {
        let delta = Delta::new(x.clone()).expect("positive");
        let p = bounds::p_bound(&delta);
        let p1 = bounds::p1(&delta);
        let d = rational::to_f64(&x);
        let conj = (1.0f64).exp().recip() * (1.0 - (-d).exp());
        content.push_str(&format!(
            "{},{},{},{}\n",
            report::dec12(d),
            rational::to_fraction_string(&p),
            rational::to_fraction_string(&p1),
            report::dec12(conj)
        ));
        x = &x + &step;
    }
    let out = out_path(&a.out, "curve.csv");
    if let Err(e) = emit("curve", argv, None, &out, &content) {
        return internal(&e);
    }
    0
}

fn cmd_rerun(a: &RerunArgs) -> u8 {
    let m = match RunManifest::load(&a.manifest) {
        Ok(m) => m,
        Err(e) => return usage(&e),
    };
    if m.subcommand == "rerun" {
        return usage("refusing to rerun a rerun manifest");
    }
    dispatch(&m.argv)
}
