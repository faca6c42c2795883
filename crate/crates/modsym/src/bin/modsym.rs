//! Command-line front end: `verify` runs named check suites and emits JSON
//! reports; `compute` produces series, transform tables, and symbol-space
//! artifacts from the same configured pipeline.
//!
//! Configuration is resolved in precedence order: `--config PATH`, then the
//! `MODSYM_CONFIG` environment variable, then built-in defaults. Individual
//! flags override single fields afterwards. With a fixed configuration and
//! seed, every artifact is byte-for-byte reproducible; the seed influences
//! only which random group words the verification suites sample.
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;
use modsym::config::{parse_point, RunConfig, CONFIG_ENV};
use modsym::integrate::Transporter;
use modsym::mellin;
use modsym::msymb;
use modsym::ncalg::TruncSeries;
use modsym::suites::{run_suite, SuiteReport, SUITE_NAMES};
#[derive(Parser)]
#[command(
    name = "modsym",
    version,
    about = "Verification suites and computations for modular transport series",
    after_help = "Configuration: --config PATH, else the MODSYM_CONFIG environment \
                  variable, else defaults. Field flags override the resolved file."
)]
struct Cli {
    /// JSON run-configuration file.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Override the truncation depth of series and transports.
    #[arg(long, global = true)]
    depth: Option<usize>,
    /// Override the cocycle base point: i, rho, oo, or a rational cusp.
    #[arg(long, global = true)]
    base: Option<String>,
    /// Override the sampling seed (affects only random word choices).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override the symbol-space weight list.
    #[arg(long, global = true, value_delimiter = ',', value_name = "K,K,...")]
    weights: Option<Vec<u32>>,
    /// Override the q-expansion length of the first configured form.
    #[arg(long, global = true)]
    terms: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}
#[derive(Subcommand)]
enum Cmd {
    /// Run verification suites; exits nonzero if any check fails.
    Verify {
        /// Suites to run (default: all). Names: cocycle, eichler, cuspidal,
        /// cf-trick, mellin, tm, symbols, shapiro.
        suites: Vec<String>,
        /// Write the JSON report here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Pretty-print the JSON report.
        #[arg(long)]
        pretty: bool,
    },
    /// Produce artifacts without judging them.
    Compute {
        #[command(subcommand)]
        what: ComputeCmd,
    },
}
#[derive(Subcommand)]
enum ComputeCmd {
    /// Transport series between two points, as JSON.
    Transport {
        /// Start point (i, rho, oo, or a rational cusp).
        #[arg(long, default_value = "oo")]
        from: String,
        /// End point.
        #[arg(long, default_value = "0")]
        to: String,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Completed-transform values along a real grid, as CSV.
    Lambda {
        /// First grid point.
        #[arg(long, default_value_t = 1.0)]
        s_min: f64,
        /// Last grid point (inclusive up to rounding).
        #[arg(long, default_value_t = 11.0)]
        s_max: f64,
        /// Grid spacing.
        #[arg(long, default_value_t = 0.5)]
        step: f64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Series-valued transform over the integer argument strip, as JSON.
    Tm {
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long)]
        pretty: bool,
    },
    /// Symbol-space dimension table as CSV, bases as JSON.
    Symbols {
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// Also export monomial-coefficient basis matrices here.
        #[arg(long, value_name = "PATH")]
        basis_out: Option<PathBuf>,
    },
}
/// Serialized shape of a truncated series: alphabet, depth, and the
/// word-indexed coefficient map ("1" is the empty word, letters join
/// with dots).
#[derive(Serialize)]
struct SeriesArtifact {
    alphabet: Vec<String>,
    depth: usize,
    values: BTreeMap<String, [f64; 2]>,
}
impl SeriesArtifact {
    fn new(alphabet: Vec<String>, series: &TruncSeries<Complex64>) -> Self {
        let mut values = BTreeMap::new();
        for (word, c) in series.iter() {
            let name = if word.is_empty() {
                "1".to_string()
            } else {
                word.iter().map(|&i| alphabet[i].as_str()).collect::<Vec<_>>().join(".")
            };
            values.insert(name, [c.re, c.im]);
        }
        SeriesArtifact { alphabet, depth: series.depth(), values }
    }
}
#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    reports: Vec<SuiteReport>,
}
#[derive(Serialize)]
struct BasisExport {
    weight: u32,
    dim: usize,
    cuspidal_dim: usize,
    /// Rows are basis polynomials; column i holds the coefficient of
    /// X^i Y^(deg-i) as an exact "p/q" string.
    basis: Vec<Vec<String>>,
    cuspidal_basis: Vec<Vec<String>>,
}
fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}
fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("report serialization")
    } else {
        serde_json::to_string(value).expect("report serialization")
    }
}
fn resolved_config(cli: &Cli) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::resolve(cli.config.as_deref())?;
    if let Some(d) = cli.depth {
        cfg.depth = d;
    }
    if let Some(b) = &cli.base {
        cfg.base_point = b.clone();
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(w) = &cli.weights {
        cfg.symbol_weights = w.clone();
    }
    if let Some(t) = cli.terms {
        if cfg.forms.is_empty() {
            return Err("--terms given but the configuration lists no forms".into());
        }
        cfg.forms[0].terms = t;
    }
    cfg.validate()?;
    Ok(cfg)
}
fn run_verify(
    cfg: &RunConfig,
    suites: &[String],
    out: Option<&PathBuf>,
    pretty: bool,
) -> Result<bool, String> {
    let chosen: Vec<String> = if suites.is_empty() {
        SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        suites.to_vec()
    };
    let mut reports = Vec::new();
    for name in &chosen {
        let report = run_suite(name, cfg)?;
        for check in &report.checks {
            let mark = if check.pass { "pass" } else { "FAIL" };
            let rel = match check.kind {
                modsym::suites::CheckKind::AtMost => "<=",
                modsym::suites::CheckKind::AtLeast => ">=",
            };
            eprintln!(
                "[{mark}] {}/{}: {:.3e} {rel} {:.3e}",
                name, check.name, check.value, check.threshold
            );
        }
        reports.push(report);
    }
    let passed = reports.iter().all(|r| r.passed);
    let output = VerifyOutput { passed, reports };
    emit(&to_json(&output, pretty), out)?;
    Ok(passed)
}
fn run_transport(
    cfg: &RunConfig,
    from: &str,
    to: &str,
    out: Option<&PathBuf>,
    pretty: bool,
) -> Result<(), String> {
    let a = parse_point(from)?;
    let b = parse_point(to)?;
    let basis = cfg.build_basis()?;
    let tr = Transporter::new(&basis, cfg.transport_config());
    let series = tr.transport(&a, &b);
    let alphabet = (0..basis.len()).map(|i| basis.name(i).to_string()).collect();
    emit(&to_json(&SeriesArtifact::new(alphabet, &series), pretty), out)
}
fn run_lambda(
    cfg: &RunConfig,
    s_min: f64,
    s_max: f64,
    step: f64,
    out: Option<&PathBuf>,
) -> Result<(), String> {
    if !(step > 0.0) || !s_min.is_finite() || !(s_max >= s_min) {
        return Err("lambda grid needs s_min <= s_max and step > 0".into());
    }
    let spec = cfg.forms.first().ok_or("the configuration lists no forms")?;
    let f = modsym::config::build_form(&spec.name, spec.terms)?;
    let mut csv = String::from("s,re_lambda,im_lambda,fe_plus_residual,fe_minus_residual,split_gap\n");
    let steps = ((s_max - s_min) / step).round() as usize;
    for j in 0..=steps {
        let s = s_min + step * j as f64;
        if s > s_max + 1e-12 {
            break;
        }
        let sc = Complex64::new(s, 0.0);
        let v = mellin::lambda(&f, sc);
        let (plus, minus) = mellin::functional_equation_residual(&f, sc);
        csv.push_str(&format!(
            "{s},{},{},{plus},{minus},{}\n",
            v.value.re, v.value.im, v.split_gap
        ));
    }
    emit(&csv, out)
}
fn run_tm(cfg: &RunConfig, out: Option<&PathBuf>, pretty: bool) -> Result<(), String> {
    let spec = cfg.forms.first().ok_or("the configuration lists no forms")?;
    let f = modsym::config::build_form(&spec.name, spec.terms)?;
    let weight = f.weight();
    let letters: Vec<(&modsym::forms::CuspForm, Complex64)> =
        (1..weight).map(|m| (&f, Complex64::new(m as f64, 0.0))).collect();
    let series = mellin::total_mellin(&letters, cfg.depth);
    let alphabet = (1..weight).map(|m| format!("{}[s={m}]", spec.name)).collect();
    emit(&to_json(&SeriesArtifact::new(alphabet, &series), pretty), out)
}
fn run_symbols(
    cfg: &RunConfig,
    out: Option<&PathBuf>,
    basis_out: Option<&PathBuf>,
) -> Result<(), String> {
    let mut csv = String::from("weight,dim,cuspidal_dim\n");
    let mut exports = Vec::new();
    for &k in &cfg.symbol_weights {
        let space = msymb::SymbolSpace::new(k);
        let dim = space.dim();
        let cuspidal = space.cuspidal_basis();
        csv.push_str(&format!("{k},{dim},{}\n", cuspidal.len()));
        if basis_out.is_some() {
            let rows = |polys: &[msymb::PolySym]| {
                polys
                    .iter()
                    .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect())
                    .collect::<Vec<Vec<String>>>()
            };
            exports.push(BasisExport {
                weight: k,
                dim,
                cuspidal_dim: cuspidal.len(),
                basis: rows(&space.basis()),
                cuspidal_basis: rows(&cuspidal),
            });
        }
    }
    emit(&csv, out)?;
    if let Some(path) = basis_out {
        emit(&to_json(&exports, true), Some(path))?;
    }
    Ok(())
}
fn run(cli: &Cli) -> Result<bool, String> {
    let cfg = resolved_config(cli)?;
    match &cli.cmd {
        Cmd::Verify { suites, out, pretty } => run_verify(&cfg, suites, out.as_ref(), *pretty),
        Cmd::Compute { what } => {
            match what {
                ComputeCmd::Transport { from, to, out, pretty } => {
                    run_transport(&cfg, from, to, out.as_ref(), *pretty)?
                }
                ComputeCmd::Lambda { s_min, s_max, step, out } => {
                    run_lambda(&cfg, *s_min, *s_max, *step, out.as_ref())?
                }
                ComputeCmd::Tm { out, pretty } => run_tm(&cfg, out.as_ref(), *pretty)?,
                ComputeCmd::Symbols { out, basis_out } => {
                    run_symbols(&cfg, out.as_ref(), basis_out.as_ref())?
                }
            }
            Ok(true)
        }
    }
}
fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("modsym: {msg}");
            eprintln!("modsym: config precedence: --config, then ${CONFIG_ENV}, then defaults");
            ExitCode::from(2)
        }
    }
}
