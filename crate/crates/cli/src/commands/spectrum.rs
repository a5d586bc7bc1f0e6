use std::io::Write;

use serde::Serialize;
use specpoly::oracle::{shoot_eigenvalue, ShootingConfig};
use specpoly::spectra::eigenvalues;

use super::parse_range;
use crate::error::CliResult;
use crate::output::{env_tol_scale, sci, write_json, Format, Table, SCHEMA_VERSION};
use crate::Status;

/// Agreement required between shooting and the integer formula.
const ORACLE_TOL: f64 = 1e-6;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long = "N", allow_hyphen_values = true)]
    exponent: i64,
    /// Inclusive index range, e.g. -2..2.
    #[arg(long, allow_hyphen_values = true)]
    range: String,
    /// Refine each eigenvalue with the shooting solver.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Serialize)]
struct Row {
    n: i64,
    e_exact: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_shooting: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    status: Option<&'static str>,
}

#[derive(Serialize)]
struct SpectrumReport {
    schema_version: u32,
    #[serde(rename = "N")]
    exponent: i64,
    rows: Vec<Row>,
}

pub fn run(args: Args, out: &mut dyn Write) -> CliResult<Status> {
    let (lo, hi) = parse_range(&args.range)?;
    let tol = ORACLE_TOL * env_tol_scale()?;
    let specs = eigenvalues(args.exponent, lo, hi)?;
    let mut failed = false;
    let mut rows = Vec::with_capacity(specs.len());
    for s in specs {
        let e = s.energy() as f64;
        let mut row = Row { n: s.index(), e_exact: s.energy(), e_shooting: None, delta: None, status: None };
        if args.oracle {
            // neighbouring eigenvalues are at least 2 apart
            let shot = ShootingConfig::new(args.exponent, (e - 0.9, e + 0.9))
                .and_then(|cfg| shoot_eigenvalue(args.exponent, &cfg));
            match shot {
                Ok(r) if r.converged && (r.energy - e).abs() < tol => {
                    row.e_shooting = Some(r.energy);
                    row.delta = Some((r.energy - e).abs());
                    row.status = Some("pass");
                }
                Ok(r) => {
                    row.e_shooting = Some(r.energy);
                    row.delta = Some((r.energy - e).abs());
                    row.status = Some("fail");
                    failed = true;
                }
                Err(_) => {
                    row.status = Some("fail");
                    failed = true;
                }
            }
        }
        rows.push(row);
    }
    match args.format {
        Format::Json => write_json(out, &SpectrumReport { schema_version: SCHEMA_VERSION, exponent: args.exponent, rows })?,
        Format::Csv | Format::Pretty => {
            let mut t = if args.oracle {
                Table::new(&["n", "E_exact", "E_shooting", "|delta|", "status"])
            } else {
                Table::new(&["n", "E_exact"])
            };
            for r in &rows {
                let mut cells = vec![r.n.to_string(), r.e_exact.to_string()];
                if args.oracle {
                    cells.push(r.e_shooting.map(|v| format!("{v:.10}")).unwrap_or_default());
                    cells.push(r.delta.map(sci).unwrap_or_default());
                    cells.push(r.status.unwrap_or_default().to_string());
                }
                t.push(cells);
            }
            if args.format == Format::Csv {
                t.write_csv(out)?;
            } else {
                t.write_pretty(out)?;
            }
        }
    }
    Ok(if failed { Status::Failed } else { Status::Ok })
}
