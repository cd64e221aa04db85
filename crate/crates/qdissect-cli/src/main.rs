//! Command-line front end: expand series to coefficient dumps, verify
//! registered identities, cross-check enumeration oracles against series,
//! run the built-in congruence suite, and scan for new progressions.
//!
//! Exit codes: 0 success/verified, 1 verification failure, 2 usage or
//! parameter errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qdissect::congruence::{run_suite, scan};
use qdissect::expr::parse;
use qdissect::oracle::{
    count_frequency_restricted, count_overpartitions_upto, count_residue_restricted, s_count,
};
use qdissect::products::{gordon_overpartition_product, overpartition_gf, s_gf};
use qdissect::registry::check_identity;
use qdissect::series::{ResidueSeries, TruncatedSeries};
use qdissect::GordonParams;

/// Guard against accidentally enormous dense-series allocations.
const PRECISION_CAP: usize = 100_000;
/// Enumeration is exponential; beyond this the series engine is the tool.
const ORACLE_CAP: u64 = 30;

#[derive(Parser)]
#[command(
    name = "qdissect",
    version,
    about = "Exact q-series toolkit for overpartition identities and congruences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a series and dump its coefficients.
    Expand(ExpandArgs),
    /// Verify a registered identity to a chosen precision.
    Verify(VerifyArgs),
    /// Compare brute-force enumeration counts against series coefficients.
    Oracle(OracleArgs),
    /// Check every built-in congruence claim.
    Suite(SuiteArgs),
    /// Scan S-series for progressions with vanishing coefficients.
    Scan(ScanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct ExpandArgs {
    /// Expression text, e.g. "F(2)/F(1)^2" or "T(-1,1,-1,4)*F(2)/F(1)^2".
    #[arg(long, required_unless_present = "sgf", conflicts_with = "sgf")]
    expr: Option<String>,
    /// Expand the S-series for "K,i" instead of an expression.
    #[arg(long, value_name = "K,i")]
    sgf: Option<String>,
    /// Largest exponent to compute.
    #[arg(long)]
    precision: usize,
    /// Reduce every coefficient modulo this.
    #[arg(long = "mod")]
    modulus: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Registered identity id (see `verify --identity help`).
    #[arg(long)]
    identity: String,
    /// Identity parameters, e.g. "i=1,k=5".
    #[arg(long)]
    params: Option<String>,
    /// Largest exponent compared.
    #[arg(long, default_value_t = 100)]
    precision: usize,
    /// Compare coefficients modulo this instead of exactly.
    #[arg(long = "mod")]
    modulus: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    /// Overpartition counts vs f_2/f_1^2.
    Pbar,
    /// Residue-restricted counts vs the product form; params k,i,j.
    Abar,
    /// Frequency-restricted counts vs the product form; params k,i,j.
    Bbar,
    /// S-series counts vs its generating function; params K,i.
    S,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    what: What,
    /// Counting-function parameters, e.g. "k=3,i=3,j=1" or "K=6,i=3".
    #[arg(long)]
    params: Option<String>,
    /// Check n = 0..=n-max (enumeration cap: 30).
    #[arg(long)]
    n_max: u64,
    /// csv emits the golden-count rows instead of the comparison table.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct SuiteArgs {
    /// Largest series index k to draw claims from.
    #[arg(long, default_value_t = 20)]
    k_max: u32,
    /// Check each progression for n = 0..=n-max.
    #[arg(long, default_value_t = 200)]
    n_max: u64,
    /// Also write the reports as a JSON array to this file.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct ScanArgs {
    /// Progression modulus: look at coefficients of q^(d*n+a).
    #[arg(long)]
    d: u64,
    /// Keep progressions whose coefficients all vanish mod this.
    #[arg(long = "mod")]
    modulus: u64,
    #[arg(long, default_value_t = 12)]
    k_max: u32,
    #[arg(long, default_value_t = 100)]
    n_max: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Expand(args) => cmd_expand(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Suite(args) => cmd_suite(args),
        Command::Scan(args) => cmd_scan(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_params(text: Option<&str>) -> Result<BTreeMap<String, i64>, String> {
    let mut map = BTreeMap::new();
    let Some(text) = text else {
        return Ok(map);
    };
    for piece in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, value) = piece
            .split_once('=')
            .ok_or_else(|| format!("expected name=value in --params, got {piece:?}"))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| format!("parameter {} has non-integer value {:?}", name.trim(), value))?;
        map.insert(name.trim().to_string(), value);
    }
    Ok(map)
}

fn require_i64(params: &BTreeMap<String, i64>, name: &str) -> Result<i64, String> {
    params
        .get(name)
        .copied()
        .ok_or_else(|| format!("missing parameter {name} in --params"))
}

fn require_u32(params: &BTreeMap<String, i64>, name: &str) -> Result<u32, String> {
    let v = require_i64(params, name)?;
    u32::try_from(v).map_err(|_| format!("parameter {name}={v} out of range"))
}

enum Dump {
    Exact(TruncatedSeries),
    Reduced(ResidueSeries),
}

fn cmd_expand(args: ExpandArgs) -> Result<ExitCode, String> {
    if args.precision > PRECISION_CAP {
        return Err(format!("precision {} exceeds cap {PRECISION_CAP}", args.precision));
    }
    let (source, dump) = if let Some(text) = &args.expr {
        let expr = parse(text).map_err(|e| e.to_string())?;
        let dump = match args.modulus {
            None => Dump::Exact(expr.eval(args.precision).map_err(|e| e.to_string())?),
            Some(m) => Dump::Reduced(expr.eval_mod(args.precision, m).map_err(|e| e.to_string())?),
        };
        (text.clone(), dump)
    } else {
        let pair = args.sgf.as_deref().expect("clap enforces expr or sgf");
        let (big_k, i) = pair
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            .ok_or_else(|| format!("--sgf expects \"K,i\", got {pair:?}"))?;
        let series = s_gf(big_k, i, args.precision).map_err(|e| e.to_string())?;
        let dump = match args.modulus {
            None => Dump::Exact(series),
            Some(m) => Dump::Reduced(ResidueSeries::from_series(&series, m)),
        };
        (format!("sgf:{big_k},{i}"), dump)
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        Format::Csv => match &dump {
            Dump::Exact(s) => s.write_csv(&mut out).map_err(|e| e.to_string())?,
            Dump::Reduced(r) => r.write_csv(&mut out).map_err(|e| e.to_string())?,
        },
        Format::Json => {
            let coefficients: Vec<String> = match &dump {
                Dump::Exact(s) => s.coeff_strings(),
                Dump::Reduced(r) => r.coeffs().iter().map(u64::to_string).collect(),
            };
            let mut obj = serde_json::Map::new();
            obj.insert("schema".into(), 1u32.into());
            obj.insert("source".into(), source.into());
            obj.insert("precision".into(), (args.precision as u64).into());
            if let Some(m) = args.modulus {
                obj.insert("modulus".into(), m.into());
            }
            obj.insert("coefficients".into(), coefficients.into());
            writeln!(out, "{}", serde_json::Value::Object(obj)).map_err(|e| e.to_string())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    if args.precision > PRECISION_CAP {
        return Err(format!("precision {} exceeds cap {PRECISION_CAP}", args.precision));
    }
    let params = parse_params(args.params.as_deref())?;
    let report = check_identity(&args.identity, &params, args.precision, args.modulus)
        .map_err(|e| e.to_string())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
    );
    Ok(if report.is_verified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_oracle(args: OracleArgs) -> Result<ExitCode, String> {
    if args.n_max > ORACLE_CAP {
        return Err(format!(
            "--n-max {} exceeds the enumeration cap {ORACLE_CAP}; use expand for larger indices",
            args.n_max
        ));
    }
    let n_max = args.n_max;
    let params = parse_params(args.params.as_deref())?;
    let gordon = |params: &BTreeMap<String, i64>| -> Result<GordonParams, String> {
        let k = require_u32(params, "k")?;
        let i = require_u32(params, "i")?;
        let j = require_u32(params, "j")?;
        GordonParams::new(k, i, j as u8).map_err(|e| e.to_string())
    };

    // (labels for csv, counts, series)
    let (golden_prefix, counts, series) = match args.what {
        What::Pbar => (
            String::new(),
            count_overpartitions_upto(n_max),
            overpartition_gf(n_max as usize),
        ),
        What::Abar | What::Bbar => {
            let p = gordon(&params)?;
            let count_fn = if args.what == What::Abar {
                count_residue_restricted
            } else {
                count_frequency_restricted
            };
            let counts = (0..=n_max).map(|n| count_fn(p, n)).collect();
            (String::new(), counts, gordon_overpartition_product(p, n_max as usize))
        }
        What::S => {
            let big_k = require_u32(&params, "K")?;
            let i = require_u32(&params, "i")?;
            let counts = (0..=n_max)
                .map(|n| s_count(big_k, i, n).map_err(|e| e.to_string()))
                .collect::<Result<Vec<u64>, String>>()?;
            (
                format!("{big_k},{i},"),
                counts,
                s_gf(big_k, i, n_max as usize).map_err(|e| e.to_string())?,
            )
        }
    };

    let coeffs = series.coeff_strings();
    let mut all_match = true;
    if args.format == Some(Format::Csv) {
        for (n, count) in counts.iter().enumerate() {
            println!("{golden_prefix}{n},{count}");
            all_match &= count.to_string() == coeffs[n];
        }
    } else {
        println!("{:>4}  {:>12}  {:>12}  match", "n", "count", "coefficient");
        for (n, count) in counts.iter().enumerate() {
            let ok = count.to_string() == coeffs[n];
            all_match &= ok;
            println!(
                "{n:>4}  {count:>12}  {:>12}  {}",
                coeffs[n],
                if ok { "yes" } else { "NO" }
            );
        }
    }
    Ok(if all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_suite(args: SuiteArgs) -> Result<ExitCode, String> {
    let reports = run_suite(args.k_max, args.n_max).map_err(|e| e.to_string())?;
    println!(
        "{:<10} {:>3} {:>3}  {:<10} {:>3}  {:<16} status",
        "family", "k", "i", "progression", "mod", "source"
    );
    let mut failures = 0usize;
    for r in &reports {
        let c = &r.claim;
        let status = if r.is_verified() {
            "verified".to_string()
        } else {
            failures += 1;
            match &r.counterexample {
                Some(ce) => format!("FAILED at n={} (coefficient {})", ce.n, ce.coefficient),
                None => "FAILED".to_string(),
            }
        };
        println!(
            "{:<10} {:>3} {:>3}  {:<10} {:>3}  {:<16} {status}",
            c.family.to_string(),
            c.k,
            c.i,
            format!("{}n+{}", c.d, c.a),
            c.m,
            c.source
        );
    }
    println!(
        "{} claim(s) checked for n <= {}: {}",
        reports.len(),
        args.n_max,
        if failures == 0 {
            "all verified".to_string()
        } else {
            format!("{failures} FAILED")
        }
    );
    if let Some(path) = &args.out {
        let json = serde_json::to_string_pretty(&reports).map_err(|e| e.to_string())?;
        fs::write(path, json + "\n").map_err(|e| format!("writing {path}: {e}"))?;
    }
    Ok(if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_scan(args: ScanArgs) -> Result<ExitCode, String> {
    let found = scan(args.k_max, args.d, args.modulus, args.n_max).map_err(|e| e.to_string())?;
    println!(
        "# S-series progressions {}n+a with all coefficients = 0 mod {}, checked for k <= {}, n <= {}",
        args.d, args.modulus, args.k_max, args.n_max
    );
    println!("# findings are empirical: verified up to the bound, not proved");
    for c in &found {
        println!("k={} i={} progression {}n+{} mod {}", c.k, c.i, c.d, c.a, c.m);
    }
    println!("{} progression(s) found", found.len());
    Ok(ExitCode::SUCCESS)
}
