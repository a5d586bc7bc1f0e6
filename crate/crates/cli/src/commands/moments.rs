use std::io::Write;

use serde::Serialize;
use specpoly::poly::{moments_from_sfraction, phi3_symmetry_numbers, sfraction_coeffs, Family};

use super::family_spec;
use crate::error::{usage, CliResult};
use crate::output::{write_json, Format, Table, SCHEMA_VERSION};
use crate::Status;

const MAX_COUNT: usize = 40;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long)]
    family: String,
    #[arg(long = "N", allow_hyphen_values = true)]
    exponent: i64,
    #[arg(long, default_value_t = 8)]
    count: usize,
    /// Emit S-fraction coefficients instead of moments.
    #[arg(long, conflicts_with = "phi3")]
    cfrac: bool,
    /// Emit the phi^3 symmetry numbers C_{2n} (family Q, N = 1 only).
    #[arg(long)]
    phi3: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Serialize)]
struct MomentReport {
    schema_version: u32,
    family: &'static str,
    #[serde(rename = "N")]
    exponent: i64,
    kind: &'static str,
    values: Vec<String>,
}

pub fn run(args: Args, out: &mut dyn Write) -> CliResult<Status> {
    let spec = family_spec(&args.family, args.exponent)?;
    if args.count == 0 || args.count > MAX_COUNT {
        return usage(format!("--count must lie in 1..={MAX_COUNT}"));
    }
    let (kind, values): (&str, Vec<String>) = if args.phi3 {
        if spec.family() != Family::OddQ || args.exponent != 1 {
            return usage("--phi3 needs --family Q --N 1");
        }
        ("phi3", phi3_symmetry_numbers(args.count)?.iter().map(|r| r.to_string()).collect())
    } else if args.cfrac {
        ("sfraction", sfraction_coeffs(spec, args.count).iter().map(|c| c.to_string()).collect())
    } else {
        let m = moments_from_sfraction(spec, args.count)?;
        ("moments", m.values().iter().map(|c| c.to_string()).collect())
    };
    match args.format {
        Format::Json => write_json(
            out,
            &MomentReport {
                schema_version: SCHEMA_VERSION,
                family: spec.family().symbol(),
                exponent: args.exponent,
                kind,
                values,
            },
        )?,
        Format::Csv | Format::Pretty => {
            let mut t = Table::new(&["k", kind]);
            let first = if kind == "moments" { 0 } else { 1 };
            for (i, v) in values.into_iter().enumerate() {
                t.push(vec![(i + first).to_string(), v]);
            }
            if args.format == Format::Csv {
                t.write_csv(out)?;
            } else {
                t.write_pretty(out)?;
            }
        }
    }
    Ok(Status::Ok)
}
