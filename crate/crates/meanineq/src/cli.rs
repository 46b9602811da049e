//! Command-line surface: evaluation, auditing, constant profiles, convexity
//! verdicts, sign scans, and plot-data export.
//!
//! Exit codes: 0 on success (and, for `audit`/`constants`/`convexity`, when
//! every expectation or check is met), 1 when a check or expectation fails,
//! 2 on usage or parse errors. Diagnostics go to standard error; reports and
//! data go to standard output or `--out`.

use crate::claims::{self, bundled_suite, parse_suite, run_audit, sign_change_scan, AuditConfig};
use crate::constants::{constant_claims, extremum_scan, ratio_g};
use crate::convexity::verify_lemma11;
use crate::genfn::convexity_pairs;
use crate::means::{mean_value, MeanKind, PositivePair};
use crate::oracle::Oracle;
use crate::plot::PlotTarget;
use crate::sampling::GridSpec;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

/// Shared run parameters with their documented defaults.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    pub grid_points: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub oracle: bool,
    pub output_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            samples: 100_000,
            grid_points: 10_000,
            x_min: 1e-6,
            x_max: 1e6,
            oracle: false,
            output_path: None,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "meanineq",
    version,
    about = "Bivariate mean inequalities: evaluate, audit, and profile"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GridArgs {
    /// Number of log-spaced grid points.
    #[arg(long, default_value_t = 10_000)]
    grid: usize,
    /// Lower end of the scan grid.
    #[arg(long, default_value_t = 1e-6)]
    xmin: f64,
    /// Upper end of the scan grid.
    #[arg(long, default_value_t = 1e6)]
    xmax: f64,
}

impl GridArgs {
    fn apply(&self, cfg: &mut RunConfig) {
        cfg.grid_points = self.grid.max(2);
        cfg.x_min = self.xmin;
        cfg.x_max = self.xmax;
    }
}

impl RunConfig {
    fn grid(&self) -> Result<GridSpec, String> {
        if !(self.x_min.is_finite()
            && self.x_max.is_finite()
            && 0.0 < self.x_min
            && self.x_min < self.x_max)
        {
            return Err(format!(
                "grid range needs 0 < xmin < xmax, got [{}, {}]",
                self.x_min, self.x_max
            ));
        }
        Ok(GridSpec::new(self.grid_points, self.x_min, self.x_max))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a mean: KIND is H, G, L, N1, N2, N3, A, S, B[t], or DP[r].
    Eval {
        kind: String,
        a: f64,
        b: f64,
        /// Print 50 significant digits from the extended-precision backend.
        #[arg(long)]
        oracle: bool,
    },
    /// Audit the bundled claim catalog (or a suite file) on seeded samples.
    Audit {
        /// Suite file; omitted means the bundled catalog.
        #[arg(long)]
        suite: Option<PathBuf>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of broad-ratio samples (a twentieth as many near-equal
        /// samples are added on top).
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
        /// Re-adjudicate every sub-tolerance margin at extended precision.
        #[arg(long)]
        oracle: bool,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the best-constant profiles for the eight catalogued ratios.
    Constants {
        #[command(flatten)]
        grid: GridArgs,
        /// Write the profiles as JSON here in addition to the table.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify normalization, curvature sign, the first-order bound, and
    /// midpoint convexity for the eight registered measures.
    Convexity {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        grid: GridArgs,
        /// Write the verdicts as JSON here in addition to the table.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan the sign of an expression E along pairs (1, x).
    Scan {
        expr: String,
        #[command(flatten)]
        grid: GridArgs,
    },
    /// Write CSV plot data: TARGET is f2, ratios, or tfuncs.
    PlotData {
        target: String,
        #[command(flatten)]
        grid: GridArgs,
        /// Output file; default is <target>.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parses a mean symbol for `eval`, including the infinite orders.
fn parse_mean_kind(text: &str) -> Result<MeanKind, String> {
    match text {
        "B[inf]" | "B[+inf]" => return Ok(MeanKind::Power(f64::INFINITY)),
        "B[-inf]" => return Ok(MeanKind::Power(f64::NEG_INFINITY)),
        _ => {}
    }
    match claims::parse_expr(text) {
        Ok(claims::Expr::Mean(sym)) => Ok(sym.kind()),
        Ok(_) => Err(format!(
            "`{text}` is an expression, not a single mean symbol"
        )),
        Err(e) => Err(e.to_string()),
    }
}

fn write_output(path: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| format!("writing {}: {e}", p.display())),
        None => {
            print!("{content}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
    }
}

fn run_eval(kind: &str, a: f64, b: f64, cfg: &RunConfig) -> Result<i32, String> {
    let kind = parse_mean_kind(kind)?;
    let p = PositivePair::new(a, b).map_err(|e| e.to_string())?;
    if cfg.oracle {
        let mut backend = Oracle::new();
        let v = backend.mean_value(kind, a, b);
        println!("{}", backend.to_decimal_string(&v, 50));
    } else {
        let v = mean_value(kind, p).map_err(|e| e.to_string())?;
        println!("{v}");
    }
    Ok(0)
}

fn run_audit_cmd(suite_path: &Option<PathBuf>, cfg: &RunConfig) -> Result<i32, String> {
    let suite = match suite_path {
        Some(p) => {
            let text =
                fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display()))?;
            parse_suite(&text).map_err(|e| e.to_string())?
        }
        None => bundled_suite(),
    };
    let mut audit_cfg = AuditConfig::new(cfg.seed, cfg.samples);
    audit_cfg.oracle_all = cfg.oracle;
    let report = run_audit(&suite, &audit_cfg);
    for entry in &report.entries {
        eprintln!(
            "{:24} {:5} (expected {:5}) {}",
            entry.id,
            entry.verdict,
            entry.expect,
            if entry.expectation_met {
                "ok"
            } else {
                "MISMATCH"
            }
        );
    }
    write_output(&cfg.output_path, &(report.to_json() + "\n"))?;
    Ok(if report.expectations_met { 0 } else { 1 })
}

fn run_constants(cfg: &RunConfig) -> Result<i32, String> {
    let grid = &cfg.grid()?;
    let out = &cfg.output_path;
    let mut profiles = Vec::new();
    let mut all_ok = true;
    println!(
        "{:<10} {:>7} {:>22} {:>22} {:>12} {:>8} {:>6}",
        "ratio", "claimed", "g(1-1e-9)", "sup", "argmax", "slope", "ok"
    );
    for claim in constant_claims() {
        let num = claim.numerator_pair();
        let den = claim.denominator_pair();
        let claimed = claim.bound;
        let near = ratio_g(num, den, 1.0 - 1e-9).map_err(|e| e.to_string())?;
        let profile = extremum_scan(num, den, grid).map_err(|e| e.to_string())?;
        let ok = (near - claimed.to_f64()).abs() < 1e-8
            && profile.sup <= claimed.to_f64() + 1e-9
            && profile.slope_pattern_ok;
        all_ok &= ok;
        println!(
            "{:<10} {:>7} {:>22.16} {:>22.16} {:>12.6} {:>8} {:>6}",
            format!("{}/{}", profile.numerator, profile.denominator),
            claimed.to_string(),
            near,
            profile.sup,
            profile.argmax,
            if profile.slope_pattern_ok {
                "up/down"
            } else {
                "BAD"
            },
            if ok { "yes" } else { "NO" }
        );
        profiles.push(profile);
    }
    if let Some(path) = out {
        let json = serde_json::to_string_pretty(&profiles).expect("profiles serialize");
        fs::write(path, json + "\n").map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn run_convexity(cfg: &RunConfig) -> Result<i32, String> {
    let seed = cfg.seed;
    let grid = &cfg.grid()?;
    let out = &cfg.output_path;
    let mut oracle = Oracle::new();
    let mut verdicts = Vec::new();
    let mut all_ok = true;
    println!(
        "{:<6} {:>6} {:>14} {:>12} {:>10} {:>10} {:>6}",
        "pair", "norm", "min f''", "fd max rel", "eq13 bad", "mid bad", "ok"
    );
    for pair in convexity_pairs() {
        let v = verify_lemma11(pair, grid, seed, &mut oracle);
        let ok = v.passed();
        all_ok &= ok;
        println!(
            "{:<6} {:>6} {:>14.6e} {:>12.3e} {:>10} {:>10} {:>6}",
            v.pair,
            if v.normalization_ok { "ok" } else { "BAD" },
            v.second_derivative_min,
            v.fd_max_rel_err,
            v.eq13_violations,
            v.midpoint_violations,
            if ok { "yes" } else { "NO" }
        );
        verdicts.push(v);
    }
    if let Some(path) = out {
        let json = serde_json::to_string_pretty(&verdicts).expect("verdicts serialize");
        fs::write(path, json + "\n").map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(if all_ok { 0 } else { 1 })
}

fn run_scan(expr_text: &str, cfg: &RunConfig) -> Result<i32, String> {
    let grid = &cfg.grid()?;
    let expr = claims::parse_expr(expr_text).map_err(|e| e.to_string())?;
    let report = sign_change_scan(&expr, grid).map_err(|e| e.to_string())?;
    println!("expression: {}", report.expression);
    println!("conclusion: {}", report.conclusion);
    if let Some(p) = report.negative {
        println!("negative at x = {} (value {})", p.x, p.value);
    }
    if let Some(p) = report.positive {
        println!("positive at x = {} (value {})", p.x, p.value);
    }
    println!(
        "smallest magnitude at x = {} (value {})",
        report.min_abs.x, report.min_abs.value
    );
    Ok(0)
}

fn run_plot_data(target: &str, cfg: &RunConfig) -> Result<i32, String> {
    let grid = &cfg.grid()?;
    let target_kind = PlotTarget::parse(target).ok_or_else(|| {
        format!("unknown plot target `{target}` (expected f2, ratios, or tfuncs)")
    })?;
    let path = cfg
        .output_path
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{target}.csv")));
    let mut buf = Vec::new();
    target_kind
        .write(&mut buf, grid)
        .map_err(|e| e.to_string())?;
    fs::write(&path, &buf).map_err(|e| format!("writing {}: {e}", path.display()))?;
    eprintln!("wrote {}", path.display());
    Ok(0)
}

/// Dispatches a full argv (including program name). Returns the exit code.
pub fn cli_run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are successes; usage errors exit 2.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let mut cfg = RunConfig::default();
    let result = match &cli.command {
        Command::Eval { kind, a, b, oracle } => {
            cfg.oracle = *oracle;
            run_eval(kind, *a, *b, &cfg)
        }
        Command::Audit {
            suite,
            seed,
            samples,
            oracle,
            out,
        } => {
            cfg.seed = *seed;
            cfg.samples = *samples;
            cfg.oracle = *oracle;
            cfg.output_path = out.clone();
            run_audit_cmd(suite, &cfg)
        }
        Command::Constants { grid, out } => {
            grid.apply(&mut cfg);
            cfg.output_path = out.clone();
            run_constants(&cfg)
        }
        Command::Convexity { seed, grid, out } => {
            cfg.seed = *seed;
            grid.apply(&mut cfg);
            cfg.output_path = out.clone();
            run_convexity(&cfg)
        }
        Command::Scan { expr, grid } => {
            grid.apply(&mut cfg);
            run_scan(expr, &cfg)
        }
        Command::PlotData { target, grid, out } => {
            grid.apply(&mut cfg);
            cfg.output_path = out.clone();
            run_plot_data(target, &cfg)
        }
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}
