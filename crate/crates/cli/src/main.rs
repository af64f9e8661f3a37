//! `qtrace`: dump named q-series, check identities, recognize quasimodular
//! forms. Exit codes: 0 verified/found, 1 mismatch/not-found, 2 usage or
//! precondition error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qtrace::arith::{format_rational, parse_rational, Rational};
use qtrace::verify::{
    self, grid, recognize_quasimodular, verify_all, GridConfig, Level, Recognition, Status,
    VerificationReport, THEOREM_IDS,
};
use qtrace::zoo::{self, Params, SERIES_NAMES};
use qtrace::{Error, QSeries};

#[derive(Parser)]
#[command(name = "qtrace", version, about = "Exact q-series identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a named series
    Series {
        #[command(flatten)]
        target: SeriesArgs,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check one identity
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(THEOREM_IDS))]
        theorem: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        /// Rational, e.g. `-2` or `1/3`
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        a: Option<Rational>,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check every identity over a parameter grid
    VerifyAll {
        /// Comma-separated theorem ids
        #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(THEOREM_IDS))]
        only: Option<Vec<String>>,
        /// Order for every job; per-theorem defaults otherwise
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k_max: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        n_max: Option<u64>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        t_max: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        r_max: u64,
        /// Comma-separated rationals for `a`
        #[arg(long, value_delimiter = ',', value_parser = rational_arg, allow_hyphen_values = true)]
        a_values: Option<Vec<Rational>>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for a series in a quasimodular basis
    Recognize {
        #[command(flatten)]
        target: SeriesArgs,
        #[arg(long)]
        weight: u32,
        #[arg(long, default_value_t = 1)]
        level: u32,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long)]
    name: String,
    /// `key=value[,key=value...]`; may be repeated
    #[arg(long = "param", value_delimiter = ',', allow_hyphen_values = true)]
    params: Vec<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also write the JSON output here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report elapsed_ms as 0 so output is reproducible byte for byte
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

/// A usage or precondition failure; always exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).ok_or_else(|| format!("`{s}` is not a rational number"))
}

fn parse_params(raw: &[String]) -> Result<Params, UsageError> {
    let mut params = Params::new();
    for item in raw.iter().filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| UsageError(format!("parameter `{item}` is not key=value")))?;
        let value = parse_rational(value.trim())
            .ok_or_else(|| UsageError(format!("parameter `{key}` has a non-rational value")))?;
        if params.insert(key.trim().to_string(), value).is_some() {
            return Err(UsageError(format!("parameter `{key}` given twice")));
        }
    }
    Ok(params)
}

fn series_names() -> String {
    SERIES_NAMES
        .iter()
        .map(|(name, keys)| {
            if keys.is_empty() {
                name.to_string()
            } else {
                format!("{name}({})", keys.join(","))
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn build_series(target: &SeriesArgs, order: usize) -> Result<QSeries, UsageError> {
    if !zoo::is_series_name(&target.name) {
        return Err(UsageError(format!(
            "unknown series `{}`; valid names: {}",
            target.name,
            series_names()
        )));
    }
    let params = parse_params(&target.params)?;
    Ok(zoo::named_series(&target.name, &params, order)?.series)
}

fn emit(output: &OutputArgs, value: &serde_json::Value, pretty: &str) -> Result<(), UsageError> {
    let mut json = serde_json::to_string_pretty(value).expect("json value serializes");
    json.push('\n');
    if let Some(path) = &output.out {
        write_file(path, &json)?;
    }
    match output.format {
        Format::Json => print!("{json}"),
        Format::Pretty => print!("{pretty}"),
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Result<(), UsageError> {
    fs::write(path, text).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))
}

fn strip_timing(reports: &mut [VerificationReport], output: &OutputArgs) {
    if output.no_timing {
        for r in reports {
            r.elapsed = Duration::ZERO;
        }
    }
}

fn pretty_report(r: &VerificationReport) -> String {
    let params: Vec<String> = r
        .params
        .iter()
        .map(|(k, v)| format!("{k}={}", format_rational(v)))
        .collect();
    let status = match r.status {
        Status::Verified => "verified".to_string(),
        Status::Error => "error".to_string(),
        Status::Mismatch => match &r.first_mismatch {
            Some(m) => format!(
                "mismatch at n={}: {} vs {}",
                m.n,
                format_rational(&m.lhs),
                format_rational(&m.rhs)
            ),
            None => "mismatch".to_string(),
        },
    };
    format!(
        "{:<10} {:<20} through order {:<4} {status}\n",
        r.theorem_id,
        params.join(" "),
        r.order
    )
}

fn required(value: Option<usize>, flag: &str, theorem: &str) -> Result<usize, UsageError> {
    value.ok_or_else(|| UsageError(format!("`{theorem}` needs --{flag}")))
}

fn run_verify(
    theorem: &str,
    k: Option<usize>,
    n: Option<usize>,
    t: Option<usize>,
    r: Option<usize>,
    a: Option<Rational>,
    order: usize,
) -> Result<VerificationReport, UsageError> {
    let k_of = || required(k, "k", theorem);
    let report = match theorem {
        "v-even" => verify::verify_v_even(k_of()?, order)?,
        "v-general" => verify::verify_v_general(k_of()?, order)?,
        "u" => verify::verify_u(k_of()?, order)?,
        "macmahon" => verify::verify_macmahon(k_of()?, order)?,
        "a-ktr" => {
            let a = a.ok_or_else(|| UsageError("`a-ktr` needs --a".into()))?;
            verify::verify_a_ktr(
                k_of()?,
                required(t, "t", theorem)?,
                required(r, "r", theorem)?,
                &a,
                order,
            )?
        }
        "srp" => verify::verify_srp(k_of()?, order)?,
        "lehmer" => verify::verify_lehmer(required(n, "n", theorem)?, k_of()?)?,
        "ramanujan" => verify::verify_ramanujan(order)?,
        other => return Err(UsageError(format!("unknown theorem `{other}`"))),
    };
    Ok(report)
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Series {
            target,
            order,
            output,
        } => {
            let s = build_series(&target, order as usize)?;
            let value = serde_json::to_value(&s).expect("series serializes");
            let table: String = s
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| format!("{n:>4}  {}\n", format_rational(c)))
                .collect();
            emit(&output, &value, &table)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            k,
            n,
            t,
            r,
            a,
            order,
            output,
        } => {
            let mut reports = [run_verify(&theorem, k, n, t, r, a, order as usize)?];
            strip_timing(&mut reports, &output);
            let report = &reports[0];
            emit(&output, &report.to_json(), &pretty_report(report))?;
            Ok(if report.is_verified() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::VerifyAll {
            only,
            order,
            k_max,
            n_max,
            t_max,
            r_max,
            a_values,
            output,
        } => {
            let defaults = GridConfig::default();
            let config = GridConfig {
                only,
                order: order.map(|o| o as usize),
                k_max: k_max.map(|k| k as usize),
                n_max: n_max.map(|n| n as usize),
                t_max: t_max as usize,
                r_max: r_max as usize,
                a_values: a_values.unwrap_or(defaults.a_values),
            };
            let mut reports = verify_all(&grid(&config));
            strip_timing(&mut reports, &output);
            let value = serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect());
            let table: String = reports.iter().map(pretty_report).collect();
            emit(&output, &value, &table)?;
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            let (ok, bad, err) = (
                count(Status::Verified),
                count(Status::Mismatch),
                count(Status::Error),
            );
            if bad + err == 0 {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "{ok} verified, {bad} mismatched, {err} errors out of {}",
                    reports.len()
                );
                Ok(ExitCode::from(1))
            }
        }
        Command::Recognize {
            target,
            weight,
            level,
            order,
            output,
        } => {
            let level = Level::from_number(level)
                .ok_or_else(|| UsageError(format!("level must be 1 or 3, got {level}")))?;
            let s = build_series(&target, order as usize)?;
            let (value, pretty, code) = match recognize_quasimodular(&s, weight, level)? {
                Recognition::Found(cert) => (
                    json!({ "status": "found", "certificate": cert }),
                    format!("{cert}\n"),
                    ExitCode::SUCCESS,
                ),
                Recognition::NotFound => (
                    json!({ "status": "not-found", "certificate": null }),
                    "not-found\n".to_string(),
                    ExitCode::from(1),
                ),
            };
            emit(&output, &value, &pretty)?;
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qtrace::arith::{rat, ratio};

    #[test]
    fn params_parse() {
        let raw = vec!["j=1".to_string(), "a=-1/2".to_string()];
        let p = parse_params(&raw).unwrap();
        assert_eq!(p["j"], rat(1));
        assert_eq!(p["a"], ratio(-1, 2));
        assert!(parse_params(&["k".to_string()]).is_err());
        assert!(parse_params(&["k=x".to_string()]).is_err());
        assert!(parse_params(&["k=1".to_string(), "k=2".to_string()]).is_err());
    }

    #[test]
    fn unknown_name_lists_registry() {
        let target = SeriesArgs {
            name: "E4".into(),
            params: vec![],
        };
        let UsageError(msg) = build_series(&target, 3).unwrap_err();
        assert!(msg.contains("E2k(k)") && msg.contains("penta"));
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
