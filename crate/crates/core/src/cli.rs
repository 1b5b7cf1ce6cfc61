//! Command-line front end: argument parsing, table assembly, output.

use crate::distribution::{
    default_phases, density_cover, empirical_cdf_probe, CoverMethod, LogDistTable,
};
use crate::error::{Error, Result};
use crate::expansion::FractionalExpansion;
use crate::extrema::{
    brute_force_result, ell0, extrema_thm, quadratic_inf_closed_form, quadratic_sup_closed_form,
    ExtremaMethod,
};
use crate::fourier::fourier_table;
use crate::hp;
use crate::limit::{cantor_function_g, density_d, depth_for, lambda_value};
use crate::mellin::{s_formula, FluctuationSeries};
use crate::system::{validate_system, BaseConversionMap, CantorSystem, QuadraticFamily};
use crate::table::{emit, Cell, Format, Meta, Table};
use crate::verify;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rug::{Float, Rational};
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "cantorlab",
    version,
    about = "Cantor-integer sequences: exact values, extrema, limit function, measure densities, and the summation formula",
    after_help = "Exactly one system is required: --table V0,V1,... with --p, or --quad a,b,m.\n\
                  CANTORLAB_PRECISION overrides the default precision; --precision wins over both.\n\
                  A --config TOML file may hold the same keys as the flags; flags win."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// digit map values f(0),...,f(m), comma separated
    #[arg(long, global = true)]
    pub table: Option<String>,
    /// target digit bound p (with --table)
    #[arg(long, global = true)]
    pub p: Option<u32>,
    /// quadratic map a,b,m for f(x) = ax^2 + bx
    #[arg(long, global = true)]
    pub quad: Option<String>,
    /// mantissa precision in bits (>= 64)
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// output format
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// output path ("-" for stdout)
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// seed for sampled probes
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// optional TOML config with the same keys as the flags
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// cap for theorem-route infimum scans
    #[arg(long, global = true)]
    pub scan_cap: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Sequence values with digit words and normalized ratios
    Seq {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
    },
    /// Extrema of C_n/n^alpha by every applicable method
    Extrema {
        /// brute-force scan bound (default (m+1)^10)
        #[arg(long)]
        brute_n: Option<u64>,
    },
    /// Limit function samples over [1, m+1)
    Lambda {
        #[arg(long, default_value_t = 512)]
        samples: usize,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Generalized Cantor function and interval density on (0, 1]
    Gcantor {
        #[arg(long, default_value_t = 512)]
        points: usize,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Logarithmic Fourier coefficients of the limit function
    Fourier {
        #[arg(long, default_value_t = 200)]
        order: i64,
        #[arg(long, default_value_t = 16384)]
        resolution: u64,
    },
    /// Density cover of the extremal interval by sequence ratios
    Dist {
        #[arg(long, default_value_t = 100)]
        grid: usize,
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// Logarithmic distribution function sweep
    Logdist {
        #[arg(long, default_value_t = 20)]
        gammas: usize,
        #[arg(long, default_value_t = 1_000_000)]
        resolution: u64,
    },
    /// Summation-formula audit rows
    Mellin {
        /// indices to audit, comma separated (default (m+1)^3..(m+1)^10)
        #[arg(long)]
        n_list: Option<String>,
        #[arg(long, default_value_t = 200)]
        order: i64,
    },
    /// Cross-module invariant suite; exits nonzero on failure
    Verify {
        /// trim scan ranges
        #[arg(long)]
        quick: bool,
    },
    /// Phase-window counting probe for the cumulative distribution
    Cdf {
        #[arg(long, default_value_t = 1.3)]
        gamma: f64,
        #[arg(long, default_value = "6,7,8,9,10,11,12")]
        k_list: String,
    },
}

/// Resolved run configuration: the system plus output options.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub system: CantorSystem,
    pub quad: Option<QuadraticFamily>,
    pub precision: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub scan_cap: u64,
}

pub const DEFAULT_SEED: u64 = 0x5EED_CA17;

#[derive(Debug, Default, serde::Deserialize)]
struct FileConfig {
    table: Option<String>,
    p: Option<u32>,
    quad: Option<String>,
    precision: Option<u32>,
    format: Option<String>,
    output: Option<String>,
    seed: Option<u64>,
    scan_cap: Option<u64>,
}

/// Parses argv into a subcommand and a resolved configuration. Flags win
/// over the config file; the config file wins over environment defaults.
pub fn parse_args<I, T>(argv: I) -> Result<(Command, RunConfig)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Error::Usage(e.to_string()))?;
    resolve(cli)
}

/// Binary entry point: clap-native help/version handling, usage errors on
/// stderr with exit status 2, check failures with status 1.
pub fn main_entry<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            e.print().ok();
            return code;
        }
    };
    match resolve(cli).and_then(|(cmd, cfg)| run(&cmd, &cfg)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn resolve(cli: Cli) -> Result<(Command, RunConfig)> {
    let mut c = cli.common;
    if let Some(path) = &c.config {
        let text = std::fs::read_to_string(path)?;
        let file: FileConfig = toml::from_str(&text)
            .map_err(|e| Error::Usage(format!("config file: {e}")))?;
        c.table = c.table.or(file.table);
        c.p = c.p.or(file.p);
        c.quad = c.quad.or(file.quad);
        c.precision = c.precision.or(file.precision);
        c.seed = c.seed.or(file.seed);
        c.scan_cap = c.scan_cap.or(file.scan_cap);
        if c.output.is_none() {
            c.output = file.output.map(PathBuf::from);
        }
        if c.format.is_none() {
            c.format = match file.format.as_deref() {
                Some("csv") => Some(FormatArg::Csv),
                Some("json") => Some(FormatArg::Json),
                Some(other) => {
                    return Err(Error::Usage(format!("config format '{other}' unknown")))
                }
                None => None,
            };
        }
    }

    let precision = match c.precision {
        Some(p) => p,
        None => match std::env::var("CANTORLAB_PRECISION") {
            Ok(v) => v
                .parse()
                .map_err(|_| Error::Usage("CANTORLAB_PRECISION must be an integer".into()))?,
            Err(_) => hp::DEFAULT_PREC,
        },
    };
    if precision < 64 {
        return Err(Error::Usage("precision must be at least 64 bits".into()));
    }

    let (system, quad) = match (&c.table, &c.quad) {
        (Some(_), Some(_)) => {
            return Err(Error::Usage(
                "give exactly one system: --table with --p, or --quad".into(),
            ))
        }
        (Some(table), None) => {
            let p = c
                .p
                .ok_or_else(|| Error::Usage("--table requires --p".into()))?;
            let values: std::result::Result<Vec<u32>, _> =
                table.split(',').map(|v| v.trim().parse()).collect();
            let values =
                values.map_err(|_| Error::Usage("--table expects comma-separated digits".into()))?;
            let m = values.len() as u32 - 1;
            let map = BaseConversionMap::new(m, p, values)?;
            (validate_system(map)?, None)
        }
        (None, Some(quad)) => {
            let parts: Vec<&str> = quad.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(Error::Usage("--quad expects a,b,m".into()));
            }
            let a: i64 = parts[0]
                .parse()
                .map_err(|_| Error::Usage("--quad a must be an integer".into()))?;
            let b: i64 = parts[1]
                .parse()
                .map_err(|_| Error::Usage("--quad b must be an integer".into()))?;
            let m: u32 = parts[2]
                .parse()
                .map_err(|_| Error::Usage("--quad m must be a positive integer".into()))?;
            let fam = QuadraticFamily::new(a, b, m)?;
            (fam.system()?, Some(fam))
        }
        (None, None) => {
            return Err(Error::Usage(
                "a system is required: --table V0,...,Vm --p P, or --quad a,b,m".into(),
            ))
        }
    };

    let format = match c.format.unwrap_or(FormatArg::Csv) {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    };
    Ok((
        cli.command,
        RunConfig {
            system,
            quad,
            precision,
            format,
            output: c.output.filter(|p| p != &PathBuf::from("-")),
            seed: c.seed.unwrap_or(DEFAULT_SEED),
            scan_cap: c.scan_cap.unwrap_or(crate::extrema::DEFAULT_SCAN_CAP),
        },
    ))
}

fn meta_for(cfg: &RunConfig) -> Meta {
    let alpha = cfg.system.alpha(cfg.precision);
    Meta {
        system: cfg.system.to_string(),
        alpha_decimal: hp::format_float(&alpha),
        alpha_expr: cfg.system.alpha_expr(),
        precision: cfg.precision,
        seed: cfg.seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
    }
}

/// Executes a subcommand and writes its table to the configured output.
/// Returns the process exit code.
pub fn run(command: &Command, cfg: &RunConfig) -> Result<i32> {
    match command {
        Command::Verify { quick } => {
            let checks = verify::run_all(&cfg.system, cfg.precision, cfg.seed, *quick);
            let mut failed = 0;
            let mut out = writer(cfg)?;
            for c in &checks {
                match &c.outcome {
                    Ok(()) => writeln!(out, "ok   {}", c.name)?,
                    Err(msg) => {
                        failed += 1;
                        writeln!(out, "FAIL {}: {}", c.name, msg)?;
                    }
                }
            }
            writeln!(
                out,
                "{} checks, {} failed (system {})",
                checks.len(),
                failed,
                cfg.system
            )?;
            Ok(if failed == 0 { 0 } else { 1 })
        }
        _ => {
            let table = build_table(command, cfg)?;
            let mut out = writer(cfg)?;
            emit(&table, cfg.format, &mut *out)?;
            Ok(0)
        }
    }
}

fn writer(cfg: &RunConfig) -> Result<Box<dyn Write>> {
    Ok(match &cfg.output {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout()),
    })
}

fn build_table(command: &Command, cfg: &RunConfig) -> Result<Table> {
    let sys = &cfg.system;
    let prec = cfg.precision;
    let meta = meta_for(cfg);
    match command {
        Command::Seq { n_max } => {
            let mut t = Table::new(
                "seq",
                vec!["n", "digits_src", "digits_dst", "C_n", "ratio"],
                meta,
            );
            for n in 1..=*n_max {
                let src = to_digit_string(n, sys.src_base() as u32);
                let c = sys.cantor_value(n);
                let dst = big_digit_string(&c, sys.radix() as u32);
                t.push(vec![
                    Cell::UInt(n),
                    Cell::Str(src),
                    Cell::Str(dst),
                    Cell::Big(c),
                    Cell::Real(sys.ratio(n, prec)),
                ]);
            }
            Ok(t)
        }
        Command::Extrema { brute_n } => {
            let mut t = Table::new(
                "extrema",
                vec!["method", "sup", "sup_witness", "inf", "inf_witness", "ell0"],
                meta,
            );
            let n_max = brute_n.unwrap_or_else(|| {
                (sys.src_base() as u128).pow(10).min(1 << 26) as u64
            });
            if sys.theorem_scope() {
                let ext = extrema_thm(sys, prec)?;
                t.push(vec![
                    Cell::Str(ExtremaMethod::Theorem.as_str().into()),
                    Cell::Real(ext.supremum),
                    Cell::UInt(ext.sup_witness),
                    Cell::Real(ext.infimum),
                    Cell::UInt(ext.inf_witness),
                    Cell::UInt(ext.ell0 as u64),
                ]);
            }
            if let Some(fam) = &cfg.quad {
                let sup = quadratic_sup_closed_form(fam, prec)?;
                let inf = quadratic_inf_closed_form(fam, prec)?;
                t.push(vec![
                    Cell::Str(ExtremaMethod::ClosedForm.as_str().into()),
                    Cell::Real(sup.value),
                    Cell::UInt(sup.n),
                    Cell::Real(inf.value),
                    Cell::UInt(inf.n),
                    Cell::UInt(ell0(sys)? as u64),
                ]);
            }
            let bf = brute_force_result(sys, n_max, prec);
            t.push(vec![
                Cell::Str(ExtremaMethod::BruteForce.as_str().into()),
                Cell::Real(bf.supremum),
                Cell::UInt(bf.sup_witness),
                Cell::Real(bf.infimum),
                Cell::UInt(bf.inf_witness),
                Cell::UInt(0),
            ]);
            Ok(t)
        }
        Command::Lambda { samples, depth } => {
            let depth = depth.unwrap_or_else(|| depth_for(sys, prec));
            let mut t = Table::new("lambda", vec!["x", "lambda", "abs_err"], meta);
            for i in 0..*samples {
                let x = Rational::from((i as u64 * sys.m() as u64, *samples as u64))
                    + Rational::from(1u32);
                let e = FractionalExpansion::from_rational(&x, sys.src_base() as u32)?;
                let l = lambda_value(sys, &e, depth, prec)?;
                t.push(vec![
                    Cell::F64(x.to_f64()),
                    Cell::Real(l.value),
                    Cell::Real(l.abs_err),
                ]);
            }
            Ok(t)
        }
        Command::Gcantor { points, depth } => {
            let depth = depth.unwrap_or_else(|| depth_for(sys, prec));
            let mut t = Table::new("gcantor", vec!["t", "g", "density"], meta);
            for i in 1..=*points {
                let x = Rational::from((i as u64, *points as u64));
                let g = cantor_function_g(sys, &x, depth, prec)?;
                let d = density_d(sys, &x, depth, prec)?;
                t.push(vec![
                    Cell::F64(x.to_f64()),
                    Cell::Real(g.value),
                    Cell::Real(d.value),
                ]);
            }
            Ok(t)
        }
        Command::Fourier { order, resolution } => {
            let table = fourier_table(sys, *order as usize, *resolution, prec)?;
            let mut t = Table::new(
                "fourier",
                vec!["n", "re", "im", "abs", "quad_error"],
                meta,
            );
            for c in &table.coeffs {
                t.push(vec![
                    Cell::Int(c.index),
                    Cell::Real(c.value.re.clone()),
                    Cell::Real(c.value.im.clone()),
                    Cell::F64(c.value.abs_f64()),
                    Cell::Real(c.quad_error.clone()),
                ]);
            }
            Ok(t)
        }
        Command::Dist {
            grid,
            epsilon,
            n_max,
        } => {
            let n_max = n_max.unwrap_or_else(|| {
                (sys.src_base() as u128).pow(16).min(1 << 34) as u64
            });
            let eps = Float::with_val(prec, *epsilon);
            let report = density_cover(sys, *grid, &eps, n_max, prec)?;
            let mut t = Table::new(
                "dist",
                vec!["gamma", "witness_n", "distance", "method", "covered"],
                meta,
            );
            for w in &report.witnesses {
                t.push(vec![
                    Cell::Real(w.gamma.clone()),
                    Cell::UInt(w.n),
                    Cell::Real(w.distance.clone()),
                    Cell::Str(
                        match w.method {
                            CoverMethod::Greedy => "greedy",
                            CoverMethod::Scan => "scan",
                        }
                        .into(),
                    ),
                    Cell::Str(if w.distance <= eps { "yes" } else { "no" }.into()),
                ]);
            }
            Ok(t)
        }
        Command::Logdist { gammas, resolution } => {
            let ext = extrema_thm(sys, prec)?;
            let table = LogDistTable::build(sys, *resolution, prec);
            let lo = ext.infimum.to_f64() - 0.05;
            let hi = ext.supremum.to_f64();
            let mut t = Table::new(
                "logdist",
                vec!["gamma", "L", "error_estimate"],
                meta,
            );
            for i in 0..*gammas {
                let g = lo + (hi - lo) * i as f64 / (*gammas as f64 - 1.0);
                let r = table.evaluate(g);
                t.push(vec![
                    Cell::F64(g),
                    Cell::Real(r.l_value),
                    Cell::Real(r.error_estimate),
                ]);
            }
            Ok(t)
        }
        Command::Mellin { n_list, order } => {
            let ns: Vec<u64> = match n_list {
                Some(list) => list
                    .split(',')
                    .map(|v| v.trim().parse())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Usage("--n-list expects integers".into()))?,
                None => (3..=10u32)
                    .map(|k| (sys.src_base() as u128).pow(k) as u64)
                    .collect(),
            };
            let series = FluctuationSeries::new(sys, prec)?;
            series.precompute(*order)?;
            let mut t = Table::new(
                "mellin",
                vec!["n", "K", "S_exact", "formula", "residual", "G_n"],
                meta,
            );
            for &n in &ns {
                let d = s_formula(sys, &series, n, *order, prec)?;
                t.push(vec![
                    Cell::UInt(n),
                    Cell::Int(*order),
                    Cell::Big(d.s_exact),
                    Cell::Real(d.formula_value),
                    Cell::Real(d.residual),
                    Cell::Real(d.g_n),
                ]);
            }
            Ok(t)
        }
        Command::Cdf { gamma, k_list } => {
            let ks: Vec<u32> = k_list
                .split(',')
                .map(|v| v.trim().parse())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Usage("--k-list expects integers".into()))?;
            let g = Float::with_val(prec, *gamma);
            let phases = default_phases(sys);
            let probe = empirical_cdf_probe(sys, &g, &ks, &phases, prec)?;
            let mut t = Table::new("cdf", vec!["k", "t", "N", "A_over_N", "spread"], meta);
            for w in &probe.windows {
                for &(t_phase, n, a) in &w.counts {
                    t.push(vec![
                        Cell::UInt(w.k as u64),
                        Cell::F64(t_phase),
                        Cell::UInt(n),
                        Cell::F64(a),
                        Cell::F64(w.spread),
                    ]);
                }
            }
            Ok(t)
        }
        Command::Verify { .. } => unreachable!("handled in run"),
    }
}

fn to_digit_string(n: u64, base: u32) -> String {
    let w = crate::digits::to_digits(n, base);
    if w.is_zero() {
        return "0".into();
    }
    join_digits(w.digits(), base)
}

// concatenated for single-character digits, dot-separated beyond base 10
fn join_digits(digits: &[u32], base: u32) -> String {
    let parts: Vec<String> = digits.iter().map(|d| d.to_string()).collect();
    if base <= 10 {
        parts.concat()
    } else {
        parts.join(".")
    }
}

fn big_digit_string(v: &rug::Integer, base: u32) -> String {
    if v.cmp0() == std::cmp::Ordering::Equal {
        return "0".into();
    }
    let mut digits = Vec::new();
    let mut v = v.clone();
    while v.cmp0() != std::cmp::Ordering::Equal {
        let (q, r) = v.div_rem_euc(rug::Integer::from(base));
        digits.push(r.to_u32().unwrap());
        v = q;
    }
    digits.reverse();
    join_digits(&digits, base)
}
