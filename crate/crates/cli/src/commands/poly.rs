use std::io::Write;

use serde::Serialize;
use specpoly::poly::{check_hermite, polynomials, ExactPoly};

use super::family_spec;
use crate::error::{usage, CliResult};
use crate::output::{write_json, Format, Table, SCHEMA_VERSION};
use crate::Status;

#[derive(Debug, clap::Args)]
pub struct Args {
    /// p, q (even N) or P, Q (odd N).
    #[arg(long)]
    family: String,
    #[arg(long = "N", allow_hyphen_values = true)]
    exponent: i64,
    /// Highest degree to print.
    #[arg(long = "n")]
    n_max: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Also check the N = 0 families against Hermite polynomials.
    #[arg(long)]
    check_hermite: bool,
}

#[derive(Serialize)]
struct Entry<'a> {
    n: usize,
    /// Coefficients, lowest degree first, as decimal strings.
    coeffs: &'a ExactPoly,
}

#[derive(Serialize)]
struct PolyReport<'a> {
    schema_version: u32,
    family: &'static str,
    #[serde(rename = "N")]
    exponent: i64,
    polynomials: Vec<Entry<'a>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hermite_check: Option<&'static str>,
}

pub fn run(args: Args, out: &mut dyn Write) -> CliResult<Status> {
    let spec = family_spec(&args.family, args.exponent)?;
    if args.check_hermite && args.exponent != 0 {
        return usage("--check-hermite needs --N 0");
    }
    let polys = polynomials(spec, args.n_max);
    let hermite = args.check_hermite.then(|| if check_hermite(args.n_max).is_ok() { "pass" } else { "fail" });
    let symbol = spec.family().symbol();
    match args.format {
        Format::Json => {
            let report = PolyReport {
                schema_version: SCHEMA_VERSION,
                family: symbol,
                exponent: args.exponent,
                polynomials: polys.iter().enumerate().map(|(n, coeffs)| Entry { n, coeffs }).collect(),
                hermite_check: hermite,
            };
            write_json(out, &report)?;
        }
        Format::Csv => {
            let mut t = Table::new(&["n", "k", "coeff"]);
            for (n, p) in polys.iter().enumerate() {
                for (k, c) in p.coeffs().iter().enumerate() {
                    t.push(vec![n.to_string(), k.to_string(), c.to_string()]);
                }
            }
            t.write_csv(out)?;
        }
        Format::Pretty => {
            for (n, p) in polys.iter().enumerate() {
                writeln!(out, "{symbol}_{n}(z) = {p}")?;
            }
        }
    }
    if let Some(h) = hermite {
        if args.format != Format::Json {
            writeln!(out, "hermite check: {h}")?;
        }
        if h == "fail" {
            return Ok(Status::Failed);
        }
    }
    Ok(Status::Ok)
}
