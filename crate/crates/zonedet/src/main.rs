//! Command-line surface: generate test matrices, run the zone expansion,
//! the sparse-inverse approximation and the exact dense oracle.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;
use std::fs;
use std::process::ExitCode;
use zonedet::generators::GeneratorSpec;
use zonedet::oracle::{dense_lu_logdet_with_cap, DEFAULT_DENSE_CAP};
use zonedet::{
    hadamard_product_logdet, logdet_distance, lower_neighbor_pattern, read_matrix_market,
    spai_logdet, write_matrix_market, zone_expansion, BlockPartition, Error, ExpansionReport,
    LogDet, RhoMode, ZoneOptions,
};

#[derive(Parser)]
#[command(name = "zonedet", version, about = "Sparse determinant approximations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a test matrix and write it in Matrix Market format
    Generate(GenerateArgs),
    /// Run the zone determinant expansion over a block partition
    Zone(ZoneArgs),
    /// Run the sparse-inverse determinant approximation
    Spai(SpaiArgs),
    /// Exact dense LU log-determinant
    Exact(ExactArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Laplacian2d,
    Toeplitz,
    Blockt3,
    Checkerboard,
    Hpd,
    Diagdom,
    Example2x2,
}

#[derive(Args)]
struct GenerateArgs {
    /// Matrix family
    #[arg(long, value_enum)]
    kind: Kind,
    /// Grid side for laplacian2d
    #[arg(long)]
    m: Option<usize>,
    /// Order for toeplitz, blockt3, hpd, diagdom
    #[arg(long)]
    n: Option<usize>,
    /// Toeplitz diagonal value
    #[arg(long, default_value_t = 2.0)]
    a: f64,
    /// Toeplitz off-diagonal value
    #[arg(long, default_value_t = -1.0)]
    b: f64,
    /// Zone count for checkerboard (even)
    #[arg(long)]
    k: Option<usize>,
    /// Rows per zone for checkerboard
    #[arg(long)]
    block_size: Option<usize>,
    /// Coupling magnitude for checkerboard
    #[arg(long, default_value_t = 0.1)]
    coupling_scale: f64,
    /// Seed for the randomized families
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Diagonal shift for hpd
    #[arg(long, default_value_t = 1.0)]
    dominance: f64,
    /// Row dominance margin for diagdom
    #[arg(long, default_value_t = 0.5)]
    margin: f64,
    /// Off-diagonal value for example2x2, written as a+bi
    #[arg(long)]
    alpha: Option<String>,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
struct ZoneArgs {
    /// Matrix Market input file
    #[arg(long)]
    matrix: String,
    /// Full offsets list, e.g. 0,30,60,90
    #[arg(long, value_delimiter = ',')]
    block_offsets: Option<Vec<usize>>,
    /// Uniform block size (alternative to --block-offsets)
    #[arg(long)]
    block_size: Option<usize>,
    /// Highest expansion order
    #[arg(long)]
    order: usize,
    /// auto | power | gersh | hermitian | value:<x>
    #[arg(long, default_value = "auto")]
    rho: String,
    /// Also compute the exact log-determinant with the dense LU oracle
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SpaiArgs {
    /// Matrix Market input file
    #[arg(long)]
    matrix: String,
    /// Neighbourhood depth of the pattern
    #[arg(long, default_value_t = 1)]
    level: usize,
    /// Largest pattern size kept per index
    #[arg(long, default_value_t = 64)]
    cap: usize,
    /// Also compute the exact log-determinant with the dense LU oracle
    #[arg(long)]
    exact: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ExactArgs {
    /// Matrix Market input file
    #[arg(long)]
    matrix: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Zone(args) => cmd_zone(args),
        Command::Spai(args) => cmd_spai(args),
        Command::Exact(args) => cmd_exact(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SingularBlock { .. } => 3,
        Error::CholeskyBreakdown(_) => 5,
        Error::DenseCapExceeded { .. } => 6,
        _ => 1,
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn dense_cap() -> usize {
    std::env::var("ZONEDET_DENSE_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_DENSE_CAP)
}

/// Parse a complex literal of the form `a`, `bi`, or `a+bi` / `a-bi`.
fn parse_complex(text: &str) -> Option<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // split at the last +/- that is not leading and not an exponent sign
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let ch = bytes[idx] as char;
            if (ch == '+' || ch == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx].parse().ok()?;
                let im_str = &body[idx..];
                let im: f64 = match im_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => im_str.parse().ok()?,
                };
                Some(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" => 1.0,
                    "-" => -1.0,
                    "+" => 1.0,
                    _ => body.parse().ok()?,
                };
                Some(Complex64::new(0.0, im))
            }
        }
    } else {
        s.parse().ok().map(|re| Complex64::new(re, 0.0))
    }
}

fn parse_rho_mode(text: &str) -> Option<RhoMode> {
    match text {
        "auto" => Some(RhoMode::Auto),
        "power" => Some(RhoMode::Power),
        "gersh" => Some(RhoMode::Gerschgorin),
        "hermitian" => Some(RhoMode::Hermitian),
        _ => {
            let v = text.strip_prefix("value:")?;
            let x: f64 = v.parse().ok()?;
            (x >= 0.0 && x.is_finite()).then_some(RhoMode::Value(x))
        }
    }
}

/// C-style `%.10e` with a signed two-digit exponent, locale independent.
fn fmt_sci(x: f64) -> String {
    let s = format!("{x:.10e}");
    match s.split_once('e') {
        Some((mantissa, exp)) => {
            let e: i32 = exp.parse().unwrap_or(0);
            format!("{mantissa}e{e:+03}")
        }
        None => s,
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, Error> {
    let spec = match args.kind {
        Kind::Laplacian2d => match args.m {
            Some(m) if m >= 2 => GeneratorSpec::Laplacian2d { m },
            _ => return Ok(usage_error("laplacian2d needs --m >= 2")),
        },
        Kind::Toeplitz => match args.n {
            Some(n) if n >= 1 => GeneratorSpec::ToeplitzTridiag { n, a: args.a, b: args.b },
            _ => return Ok(usage_error("toeplitz needs --n >= 1")),
        },
        Kind::Blockt3 => match args.n {
            Some(n) if n > 0 && n % 3 == 0 => GeneratorSpec::BlockT3 { n },
            _ => return Ok(usage_error("blockt3 needs --n, a positive multiple of 3")),
        },
        Kind::Checkerboard => match (args.k, args.block_size) {
            (Some(k), Some(bs)) if k >= 2 && k % 2 == 0 && bs >= 1 => GeneratorSpec::Checkerboard {
                k,
                block_size: bs,
                coupling_scale: args.coupling_scale,
                seed: args.seed,
            },
            _ => return Ok(usage_error("checkerboard needs an even --k >= 2 and --block-size >= 1")),
        },
        Kind::Hpd => match args.n {
            Some(n) if n >= 1 && args.dominance >= 0.0 => {
                GeneratorSpec::HpdRandom { n, seed: args.seed, dominance: args.dominance }
            }
            _ => return Ok(usage_error("hpd needs --n >= 1 and --dominance >= 0")),
        },
        Kind::Diagdom => match args.n {
            Some(n) if n >= 1 && args.margin > 0.0 => {
                GeneratorSpec::DiagDominantRandom { n, seed: args.seed, margin: args.margin }
            }
            _ => return Ok(usage_error("diagdom needs --n >= 1 and --margin > 0")),
        },
        Kind::Example2x2 => match args.alpha.as_deref().map(parse_complex) {
            Some(Some(alpha)) => GeneratorSpec::Example2x2 { alpha },
            _ => return Ok(usage_error("example2x2 needs --alpha in a+bi form")),
        },
    };
    let matrix = spec.build();
    let provenance = format!("zonedet generate: {spec}");
    let text = write_matrix_market(&matrix, &[&provenance]);
    let summary = format!(
        "n = {}, nnz = {}, hermitian = {}\nprovenance: {spec}",
        matrix.order(),
        matrix.nnz(),
        matrix.is_hermitian(1e-10)
    );
    match &args.output {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Error::InvalidParameter(e.to_string()))?;
            println!("{summary}");
            println!("wrote {path}");
        }
        None => {
            // keep stdout clean for the matrix data itself
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn load_matrix(path: &str) -> Result<zonedet::ComplexSparseMatrix, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {path}: {e}")))?;
    read_matrix_market(&text)
}

struct Row {
    p: usize,
    delta: Complex64,
    trace: Option<Complex64>,
    abs_log_bound: Option<f64>,
    rel_det_bound: Option<f64>,
    tight_rel_bound: Option<f64>,
    abs_err: Option<f64>,
    rel_err_logdet: Option<f64>,
    skipped: bool,
}

fn build_rows(report: &ExpansionReport, exact: Option<LogDet>) -> Vec<Row> {
    let exact_c = exact.map(|ld| ld.as_complex());
    let exact_mod = exact.map(|ld| {
        Complex64::new(ld.ln_abs, ld.principal_phase()).norm()
    });
    (0..=report.order)
        .map(|p| {
            let bounds = report.bounds.as_ref().map(|b| &b[p]);
            let abs_err = exact_c.map(|e| logdet_distance(report.deltas[p], e));
            Row {
                p,
                delta: report.deltas[p],
                trace: (p > 0).then(|| report.traces[p - 1]),
                abs_log_bound: bounds.map(|b| b.abs_log),
                rel_det_bound: bounds.map(|b| b.rel_det),
                tight_rel_bound: bounds.and_then(|b| b.tight_rel),
                abs_err,
                rel_err_logdet: abs_err
                    .zip(exact_mod)
                    .map(|(err, modulus)| err / modulus),
                skipped: report.skipped_orders.contains(&p),
            }
        })
        .collect()
}

fn opt_sci(x: Option<f64>) -> String {
    x.map(fmt_sci).unwrap_or_default()
}

const ZONE_CSV_HEADER: &str = "p,delta_re,delta_im,trace_re,trace_im,abs_log_bound,rel_det_bound,tight_rel_bound,abs_err,rel_err_logdet";

fn print_zone_report(report: &ExpansionReport, exact: Option<LogDet>, format: Format) {
    let rows = build_rows(report, exact);
    match format {
        Format::Csv => {
            println!("{ZONE_CSV_HEADER}");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.p,
                    fmt_sci(r.delta.re),
                    fmt_sci(r.delta.im),
                    opt_sci(r.trace.map(|t| t.re)),
                    opt_sci(r.trace.map(|t| t.im)),
                    opt_sci(r.abs_log_bound),
                    opt_sci(r.rel_det_bound),
                    opt_sci(r.tight_rel_bound),
                    opt_sci(r.abs_err),
                    opt_sci(r.rel_err_logdet),
                );
            }
        }
        Format::Json => {
            let rows_json: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "p": r.p,
                        "delta_re": r.delta.re,
                        "delta_im": r.delta.im,
                        "trace_re": r.trace.map(|t| t.re),
                        "trace_im": r.trace.map(|t| t.im),
                        "abs_log_bound": r.abs_log_bound,
                        "rel_det_bound": r.rel_det_bound,
                        "tight_rel_bound": r.tight_rel_bound,
                        "abs_err": r.abs_err,
                        "rel_err_logdet": r.rel_err_logdet,
                        "skipped": r.skipped,
                    })
                })
                .collect();
            let doc = json!({
                "schema": 1,
                "command": "zone",
                "n": report.n,
                "order": report.order,
                "rho": {
                    "value": report.rho.value,
                    "method": report.rho.method.as_str(),
                    "converged": report.rho.converged,
                    "iterations": report.rho.iterations,
                },
                "c": report.c,
                "checkerboard": report.checkerboard.as_str(),
                "skipped_orders": report.skipped_orders,
                "exact": exact.map(|ld| json!({
                    "ln_abs": ld.ln_abs,
                    "principal_phase": ld.principal_phase(),
                })),
                "rows": rows_json,
            });
            println!("{doc}");
        }
        Format::Text => {
            println!(
                "n = {}, checkerboard = {}, rho = {} ({}, converged = {}, iterations = {})",
                report.n,
                report.checkerboard.as_str(),
                fmt_sci(report.rho.value),
                report.rho.method.as_str(),
                report.rho.converged,
                report.rho.iterations
            );
            match report.c {
                Some(c) => println!("c = -n ln(1 - rho) = {}", fmt_sci(c)),
                None => println!("rho >= 1: error bounds unavailable"),
            }
            if let Some(ld) = exact {
                println!(
                    "exact ln det = {} (principal phase {})",
                    fmt_sci(ld.ln_abs),
                    fmt_sci(ld.principal_phase())
                );
            }
            println!(
                "{:>3} {:>18} {:>18} {:>18} {:>18} {:>13} {:>13} {:>13} {:>13} {:>13}",
                "p", "delta_re", "delta_im", "trace_re", "trace_im", "abs_bound", "rel_bound",
                "tight_bound", "abs_err", "rel_err"
            );
            for r in &rows {
                let mark = if r.skipped { " (skipped)" } else { "" };
                println!(
                    "{:>3} {:>18} {:>18} {:>18} {:>18} {:>13} {:>13} {:>13} {:>13} {:>13}{}",
                    r.p,
                    fmt_sci(r.delta.re),
                    fmt_sci(r.delta.im),
                    opt_sci(r.trace.map(|t| t.re)),
                    opt_sci(r.trace.map(|t| t.im)),
                    opt_sci(r.abs_log_bound),
                    opt_sci(r.rel_det_bound),
                    opt_sci(r.tight_rel_bound),
                    opt_sci(r.abs_err),
                    opt_sci(r.rel_err_logdet),
                    mark,
                );
            }
        }
    }
}

fn cmd_zone(args: ZoneArgs) -> Result<ExitCode, Error> {
    let matrix = load_matrix(&args.matrix)?;
    let partition = match (&args.block_offsets, args.block_size) {
        (Some(offsets), None) => BlockPartition::from_offsets(offsets.clone())?,
        (None, Some(size)) => BlockPartition::uniform(matrix.order(), size)?,
        _ => return Ok(usage_error("give exactly one of --block-offsets or --block-size")),
    };
    let Some(rho_mode) = parse_rho_mode(&args.rho) else {
        return Ok(usage_error("--rho must be auto, power, gersh, hermitian or value:<x>"));
    };
    let cap = dense_cap();
    let opts = ZoneOptions {
        order: args.order,
        rho_mode,
        dense_cap: cap,
        ..ZoneOptions::default()
    };
    let report = zone_expansion(&matrix, &partition, &opts)?;
    let exact = if args.exact {
        match dense_lu_logdet_with_cap(&matrix, cap) {
            Ok(ld) => Some(ld),
            Err(Error::DenseCapExceeded { order, cap }) => {
                eprintln!("note: n = {order} exceeds the dense cap {cap}; error columns left empty");
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    print_zone_report(&report, exact, args.format);
    if report.rho.value >= 1.0 {
        return Ok(ExitCode::from(4));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_spai(args: SpaiArgs) -> Result<ExitCode, Error> {
    let matrix = load_matrix(&args.matrix)?;
    let pattern = lower_neighbor_pattern(&matrix, args.level, args.cap)?;
    let result = spai_logdet(&matrix, &pattern)?;
    let hadamard = hadamard_product_logdet(&matrix)?;
    let n = matrix.order() as f64;
    let exact = if args.exact {
        match dense_lu_logdet_with_cap(&matrix, dense_cap()) {
            Ok(ld) => Some(ld),
            Err(Error::DenseCapExceeded { order, cap }) => {
                eprintln!("note: n = {order} exceeds the dense cap {cap}; error lines omitted");
                None
            }
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    // errors in ln values and in n-th roots of the determinants
    let errors = exact.map(|ld| {
        let rel_ln = (result.logdet.ln_abs - ld.ln_abs).abs()
            / Complex64::new(ld.ln_abs, ld.principal_phase()).norm();
        let rel_root = ((result.logdet.ln_abs - ld.ln_abs) / n).exp_m1().abs();
        (rel_ln, rel_root)
    });
    match args.format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "command": "spai",
                "n": matrix.order(),
                "level": args.level,
                "cap": args.cap,
                "ln_sigma": result.logdet.ln_abs,
                "ln_hadamard": hadamard.ln_abs,
                "hadamard_principal_phase": hadamard.principal_phase(),
                "exact_ln_det": exact.map(|ld| ld.ln_abs),
                "rel_err_ln": errors.map(|e| e.0),
                "rel_err_nth_root": errors.map(|e| e.1),
                "pattern_sizes_max": result.pattern_sizes.iter().max(),
            });
            println!("{doc}");
        }
        Format::Csv => {
            println!("ln_sigma,ln_hadamard,exact_ln_det,rel_err_ln,rel_err_nth_root");
            println!(
                "{},{},{},{},{}",
                fmt_sci(result.logdet.ln_abs),
                fmt_sci(hadamard.ln_abs),
                opt_sci(exact.map(|ld| ld.ln_abs)),
                opt_sci(errors.map(|e| e.0)),
                opt_sci(errors.map(|e| e.1)),
            );
        }
        Format::Text => {
            println!("n = {}, level = {}, cap = {}", matrix.order(), args.level, args.cap);
            println!("ln sigma        = {}", fmt_sci(result.logdet.ln_abs));
            println!("ln prod(m_ii)   = {}", fmt_sci(hadamard.ln_abs));
            if let Some(ld) = exact {
                println!("exact ln det    = {}", fmt_sci(ld.ln_abs));
            }
            if let Some((rel_ln, rel_root)) = errors {
                println!("rel err in ln sigma    = {}", fmt_sci(rel_ln));
                println!("rel err in sigma^(1/n) = {}", fmt_sci(rel_root));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_exact(args: ExactArgs) -> Result<ExitCode, Error> {
    let matrix = load_matrix(&args.matrix)?;
    let ld = dense_lu_logdet_with_cap(&matrix, dense_cap())?;
    match args.format {
        Format::Json => {
            let doc = json!({
                "schema": 1,
                "command": "exact",
                "n": matrix.order(),
                "ln_abs": ld.ln_abs,
                "principal_phase": ld.principal_phase(),
                "det_re": ld.det_value().map(|d| d.re),
                "det_im": ld.det_value().map(|d| d.im),
            });
            println!("{doc}");
        }
        _ => {
            println!("ln|det|         = {}", fmt_sci(ld.ln_abs));
            println!("principal phase = {}", fmt_sci(ld.principal_phase()));
            if let Some(det) = ld.det_value() {
                let sign = if det.im.is_sign_negative() { '-' } else { '+' };
                println!("det             = {} {} {}i", fmt_sci(det.re), sign, fmt_sci(det.im.abs()));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("3"), Some(Complex64::new(3.0, 0.0)));
        assert_eq!(parse_complex("-2.5"), Some(Complex64::new(-2.5, 0.0)));
        assert_eq!(parse_complex("0+0.5i"), Some(Complex64::new(0.0, 0.5)));
        assert_eq!(parse_complex("1-2i"), Some(Complex64::new(1.0, -2.0)));
        assert_eq!(parse_complex("-1.5+0.25i"), Some(Complex64::new(-1.5, 0.25)));
        assert_eq!(parse_complex("0.5i"), Some(Complex64::new(0.0, 0.5)));
        assert_eq!(parse_complex("i"), Some(Complex64::new(0.0, 1.0)));
        assert_eq!(parse_complex("-i"), Some(Complex64::new(0.0, -1.0)));
        assert_eq!(parse_complex("1e-3+2e-4i"), Some(Complex64::new(1e-3, 2e-4)));
        assert_eq!(parse_complex("1+i"), Some(Complex64::new(1.0, 1.0)));
        assert_eq!(parse_complex(""), None);
        assert_eq!(parse_complex("abc"), None);
    }

    #[test]
    fn sci_format_is_c_style() {
        assert_eq!(fmt_sci(0.1150), "1.1500000000e-01");
        assert_eq!(fmt_sci(-1065.0), "-1.0650000000e+03");
        assert_eq!(fmt_sci(0.0), "0.0000000000e+00");
    }

    #[test]
    fn rho_mode_strings() {
        assert_eq!(parse_rho_mode("auto"), Some(RhoMode::Auto));
        assert_eq!(parse_rho_mode("power"), Some(RhoMode::Power));
        assert_eq!(parse_rho_mode("gersh"), Some(RhoMode::Gerschgorin));
        assert_eq!(parse_rho_mode("hermitian"), Some(RhoMode::Hermitian));
        assert_eq!(parse_rho_mode("value:0.5"), Some(RhoMode::Value(0.5)));
        assert_eq!(parse_rho_mode("value:x"), None);
        assert_eq!(parse_rho_mode("bogus"), None);
    }
}
