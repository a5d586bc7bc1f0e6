use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use specpoly::spectra::{EigenSpec, EigenfunctionHandle, Route};

use crate::error::{usage, CliResult};
use crate::output::{write_json, Format, Table, SCHEMA_VERSION};
use crate::Status;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Laguerre,
    Tricomi,
    Airy,
    K0,
    Bateman,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Laguerre => Route::LaguerreForm,
            RouteArg::Tricomi => Route::TricomiForm,
            RouteArg::Airy => Route::AiryDecomposition,
            RouteArg::K0 => Route::BesselK0Form,
            RouteArg::Bateman => Route::Bateman,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long = "N", allow_hyphen_values = true)]
    exponent: i64,
    #[arg(long = "n", allow_hyphen_values = true)]
    index: i64,
    /// Comma-separated points, or lo:hi:count for an even grid.
    #[arg(long, allow_hyphen_values = true)]
    grid: String,
    /// Route to evaluate (default: the canonical one for N).
    #[arg(long, value_enum)]
    route: Option<RouteArg>,
    /// Second route; adds its value and the raw ratio of the two.
    #[arg(long, value_enum)]
    compare: Option<RouteArg>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Serialize)]
struct Sample {
    x: f64,
    y: Option<f64>,
    route: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    other: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct EigenReport {
    schema_version: u32,
    #[serde(rename = "N")]
    exponent: i64,
    n: i64,
    energy: i64,
    samples: Vec<Sample>,
}

fn parse_grid(s: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() == 3 {
        let (lo, hi, count) = match (parts[0].parse::<f64>(), parts[1].parse::<f64>(), parts[2].parse::<usize>()) {
            (Ok(a), Ok(b), Ok(c)) if c >= 2 => (a, b, c),
            _ => return usage(format!("grid {s:?} must be lo:hi:count with count >= 2")),
        };
        return Ok((0..count).map(|i| lo + (hi - lo) * i as f64 / (count - 1) as f64).collect());
    }
    s.split(',')
        .map(|p| p.trim().parse::<f64>().or_else(|_| usage(format!("bad grid point {p:?}"))))
        .collect()
}

pub fn run(args: Args, out: &mut dyn Write) -> CliResult<Status> {
    let spec = EigenSpec::new(args.exponent, args.index).or_else(|e| usage(e.to_string()))?;
    let xs = parse_grid(&args.grid)?;
    let route: Route = args.route.map(Into::into).unwrap_or(Route::canonical(args.exponent));
    let main = EigenfunctionHandle::new(spec, route).or_else(|e| usage(e.to_string()))?;
    let other = match args.compare {
        Some(r) => Some(EigenfunctionHandle::new(spec, r.into()).or_else(|e| usage(e.to_string()))?),
        None => None,
    };
    let mut any_error = false;
    let mut samples = Vec::with_capacity(xs.len());
    for x in xs {
        let mut s = Sample { x, y: None, route: format!("{route:?}"), other: None, ratio: None, error: None };
        match main.eval(x) {
            Ok(y) => s.y = Some(y),
            Err(e) => s.error = Some(e.to_string()),
        }
        if let Some(h) = &other {
            match (main.raw(x), h.raw(x)) {
                (Ok(a), Ok(b)) => {
                    s.other = Some(b);
                    s.ratio = Some(a / b);
                }
                (Err(e), _) | (_, Err(e)) => s.error = Some(e.to_string()),
            }
        }
        any_error |= s.error.is_some();
        samples.push(s);
    }
    match args.format {
        Format::Json => write_json(
            out,
            &EigenReport {
                schema_version: SCHEMA_VERSION,
                exponent: args.exponent,
                n: args.index,
                energy: spec.energy(),
                samples,
            },
        )?,
        Format::Csv | Format::Pretty => {
            let mut t = if other.is_some() {
                Table::new(&["x", "y", "route", "other_raw", "raw_ratio", "error"])
            } else {
                Table::new(&["x", "y", "route", "error"])
            };
            let num = |v: Option<f64>| v.map(|v| format!("{v:.15e}")).unwrap_or_default();
            for s in samples {
                let mut row = vec![s.x.to_string(), num(s.y), s.route];
                if other.is_some() {
                    row.push(num(s.other));
                    row.push(num(s.ratio));
                }
                row.push(s.error.unwrap_or_default());
                t.push(row);
            }
            if args.format == Format::Csv {
                t.write_csv(out)?;
            } else {
                t.write_pretty(out)?;
            }
        }
    }
    if any_error {
        return Err(crate::error::CliError::Numeric(specpoly::Error::Domain(
            "one or more grid points could not be evaluated".into(),
        )));
    }
    Ok(Status::Ok)
}
