use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::Serialize;
use specpoly::oracle::{moment_numeric_even, orthogonality_numeric_even, spectrum_scan, ShootingConfig};
use specpoly::poly::{
    check_contraction, check_diff_relation, check_hermite, check_ode_identity, golden_mismatches,
    hankel_determinant, moments_from_sfraction, norm_exact, Family, FamilySpec,
};
use specpoly::specfun::{airy_ai, bateman_k, gamma, tricomi_u, tricomi_u_kummer, EvalConfig};
use specpoly::spectra::{default_fd_step, eigenvalues, ode_residual, wkb_action, EigenSpec};

use crate::error::{usage, CliResult};
use crate::output::{env_tol_scale, sci, write_json, Format, Table, SCHEMA_VERSION};
use crate::Status;

const QUAD_TOL: f64 = 1e-7;
const FD_TOL: f64 = 1e-6;
const WKB_ODD_TOL: f64 = 1e-10;
const WKB_EVEN_TOL: f64 = 1e-9;
const EXACT_DEGREE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Exact,
    Spectra,
    Wkb,
    Specfun,
    Orthogonality,
}

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Comma-separated exponents.
    #[arg(long = "N", allow_hyphen_values = true, default_value = "-1,0,1,2")]
    exponents: String,
    /// Multiplier for every float tolerance (overrides SPECPOLY_TOL_SCALE).
    #[arg(long)]
    tol_scale: Option<f64>,
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum CaseStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Serialize)]
struct Case {
    name: String,
    status: CaseStatus,
    measured: Option<f64>,
    expected: Option<f64>,
    tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct Report {
    schema_version: u32,
    suite: Suite,
    cases: Vec<Case>,
    wall_time: f64,
}

#[derive(Default)]
struct Cases(Vec<Case>);

impl Cases {
    fn exact(&mut self, name: String, ok: Result<(), String>) {
        let (status, note) = match ok {
            Ok(()) => (CaseStatus::Pass, None),
            Err(e) => (CaseStatus::Fail, Some(e)),
        };
        self.0.push(Case { name, status, measured: None, expected: None, tolerance: Some(0.0), note });
    }

    fn close(&mut self, name: String, measured: f64, expected: f64, tol: f64) {
        let status = if (measured - expected).abs() <= tol { CaseStatus::Pass } else { CaseStatus::Fail };
        self.0.push(Case { name, status, measured: Some(measured), expected: Some(expected), tolerance: Some(tol), note: None });
    }

    fn error(&mut self, name: String, e: impl ToString) {
        self.0.push(Case { name, status: CaseStatus::Fail, measured: None, expected: None, tolerance: None, note: Some(e.to_string()) });
    }

    fn skip(&mut self, name: String, why: &str) {
        self.0.push(Case { name, status: CaseStatus::Skip, measured: None, expected: None, tolerance: None, note: Some(why.into()) });
    }
}

fn parse_exponents(s: &str) -> CliResult<Vec<i64>> {
    let mut v = Vec::new();
    for p in s.split(',') {
        match p.trim().parse::<i64>() {
            Ok(n) if n >= -1 => v.push(n),
            _ => return usage(format!("exponent {p:?} must be an integer >= -1")),
        }
    }
    Ok(v)
}

fn specs(n: i64) -> Vec<FamilySpec> {
    Family::for_exponent(n).iter().map(|&f| FamilySpec::new(f, n).expect("family matches parity")).collect()
}

fn exact_suite(cases: &mut Cases, n: i64) {
    for spec in specs(n) {
        let tag = format!("{}[N={n}]", spec.family().symbol());
        for k in 0..=EXACT_DEGREE {
            cases.exact(format!("exact/{tag}/ode/n={k}"), check_ode_identity(spec, k).map(|_| ()).map_err(|e| e.to_string()));
            cases.exact(
                format!("exact/{tag}/diff-relation/n={k}"),
                check_diff_relation(spec, k).map(|_| ()).map_err(|e| e.to_string()),
            );
        }
        cases.exact(format!("exact/{tag}/contraction"), check_contraction(spec, EXACT_DEGREE).map(|_| ()).map_err(|e| e.to_string()));
        for m in 1..=6usize {
            let res = moments_from_sfraction(spec, 2 * m).and_then(|mom| hankel_determinant(mom.values(), m - 1));
            let want = (0..m).fold(BigInt::from(1), |acc, k| acc * norm_exact(spec, k));
            let ok = match res {
                Ok(d) if d == want => Ok(()),
                Ok(d) => Err(format!("determinant {d} != norm product {want}")),
                Err(e) => Err(e.to_string()),
            };
            cases.exact(format!("exact/{tag}/hankel/m={m}"), ok);
        }
    }
    if n == 0 {
        cases.exact("exact/N=0/hermite".into(), check_hermite(EXACT_DEGREE).map_err(|e| e.to_string()));
    }
}

fn spectra_suite(cases: &mut Cases, n: i64, scale: f64) {
    for spec in specs(n) {
        let name = format!("spectra/{}[N={n}]/golden", spec.family().symbol());
        match golden_mismatches(spec) {
            None => cases.skip(name, "no reference table for this exponent"),
            Some(bad) if bad.is_empty() => cases.exact(name, Ok(())),
            Some(bad) => cases.exact(name, Err(format!("mismatch at degrees {bad:?}"))),
        }
    }
    let (lo, hi) = if n % 2 == 0 { (0, 3) } else { (-2, 1) };
    let formula = match eigenvalues(n, lo, hi) {
        Ok(v) => v,
        Err(e) => return cases.error(format!("spectra/N={n}/formula"), e),
    };
    let e_lo = formula.first().map_or(0.0, |s| s.energy() as f64) - 1.0;
    let e_hi = formula.last().map_or(0.0, |s| s.energy() as f64) + 1.0;
    let scan = ShootingConfig::new(n, (e_lo, e_hi)).and_then(|cfg| spectrum_scan(n, (e_lo, e_hi), &cfg));
    match scan {
        Err(e) => cases.error(format!("spectra/N={n}/scan"), e),
        Ok(found) => {
            cases.close(format!("spectra/N={n}/scan-count"), found.len() as f64, formula.len() as f64, 0.0);
            for (s, r) in formula.iter().zip(&found) {
                cases.close(format!("spectra/N={n}/shooting/n={}", s.index()), r.energy, s.energy() as f64, QUAD_TOL * scale);
            }
        }
    }
    for s in &formula {
        for x in [0.4, 0.9, 1.7] {
            let name = format!("spectra/N={n}/residual/n={}/x={x}", s.index());
            match ode_residual(s, x, default_fd_step(x)) {
                Ok(r) => cases.close(name, r, 0.0, FD_TOL * scale),
                Err(e) => cases.error(name, e),
            }
        }
    }
}

fn wkb_suite(cases: &mut Cases, n: i64, scale: f64) {
    let k = (n + 2) as f64;
    let idx: Vec<i64> = (0..6).collect();
    for i in idx {
        let spec = match EigenSpec::new(n, i) {
            Ok(s) => s,
            Err(e) => return cases.error(format!("wkb/N={n}/n={i}"), e),
        };
        let e = spec.energy() as f64;
        let name = format!("wkb/N={n}/n={i}");
        if e <= 0.0 {
            cases.skip(name, "non-positive energy");
            continue;
        }
        let (want, tol) = if n % 2 != 0 {
            let m = (e / k - 1.0) / 2.0;
            ((m + 0.5) * std::f64::consts::PI, WKB_ODD_TOL)
        } else {
            let m = (i / 2) as f64;
            let offset = std::f64::consts::PI / (2.0 * k);
            let base = (m + 0.5) * std::f64::consts::PI;
            (if i % 2 == 0 { base - offset } else { base + offset }, WKB_EVEN_TOL)
        };
        match wkb_action(n, e) {
            Ok(a) => cases.close(name, a, want, tol * scale),
            Err(err) => cases.error(name, err),
        }
    }
}

fn specfun_suite(cases: &mut Cases, scale: f64) {
    let cfg = EvalConfig::default();
    let tol = QUAD_TOL * scale;
    // Ai(0) = 3^{-2/3} / Gamma(2/3)
    let ai0 = 3f64.powf(-2.0 / 3.0) / gamma(2.0 / 3.0);
    match airy_ai(0.0) {
        Ok(v) => cases.close("specfun/airy/Ai(0)".into(), v.value, ai0, tol),
        Err(e) => cases.error("specfun/airy/Ai(0)".into(), e),
    }
    for &(a, b, x) in &[(0.5, 0.5, 1.3), (-1.5, 0.25, 2.0), (2.25, 1.5, 0.7)] {
        let name = format!("specfun/tricomi/a={a},b={b},x={x}");
        match (tricomi_u(a, b, x, &cfg), tricomi_u_kummer(a, b, x, &cfg)) {
            (Ok(u), Ok(v)) => cases.close(name, u.value, v.value, tol * v.value.abs().max(1.0)),
            (Err(e), _) | (_, Err(e)) => cases.error(name, e),
        }
    }
    for &(e, x) in &[(1.0, 0.7), (-3.0, 1.3), (2.2, 2.5)] {
        let name = format!("specfun/bateman/E={e},x={x}");
        let confluent = tricomi_u(-e / 2.0, 0.0, 2.0 * x, &cfg).map(|u| (-x).exp() * u.value / gamma(e / 2.0 + 1.0));
        match (bateman_k(e, x, &cfg), confluent) {
            (Ok(k), Ok(want)) => cases.close(name, k.value, want, tol),
            (Err(err), _) | (_, Err(err)) => cases.error(name, err),
        }
    }
}

fn orthogonality_suite(cases: &mut Cases, n: i64, scale: f64) {
    if n % 2 != 0 {
        cases.skip(format!("orthogonality/N={n}"), "weight is indefinite for odd N");
        return;
    }
    for fam in Family::for_exponent(n) {
        let tag = format!("{}[N={n}]", fam.symbol());
        for k in 0..=5 {
            let name = format!("orthogonality/{tag}/moment/k={k}");
            match moment_numeric_even(n, fam, k) {
                Ok(m) => cases.close(name, m.numeric / m.gamma_form, 1.0, QUAD_TOL * scale),
                Err(e) => cases.error(name, e),
            }
        }
        for a in 0..=3 {
            for b in a..=3 {
                let name = format!("orthogonality/{tag}/m={a},n={b}");
                match orthogonality_numeric_even(n, fam, a, b) {
                    Ok(d) => cases.close(name, d, 0.0, QUAD_TOL * scale),
                    Err(e) => cases.error(name, e),
                }
            }
        }
    }
}

pub fn run(args: Args, out: &mut dyn Write) -> CliResult<Status> {
    let scale = match args.tol_scale {
        Some(s) if s > 0.0 && s.is_finite() => s,
        Some(s) => return usage(format!("--tol-scale must be positive, got {s}")),
        None => env_tol_scale()?,
    };
    let exponents = parse_exponents(&args.exponents)?;
    let start = Instant::now();
    let mut cases = Cases::default();
    let want = |s: Suite| args.suite == Suite::All || args.suite == s;
    for &n in &exponents {
        if want(Suite::Exact) {
            exact_suite(&mut cases, n);
        }
        if want(Suite::Spectra) {
            spectra_suite(&mut cases, n, scale);
        }
        if want(Suite::Wkb) {
            wkb_suite(&mut cases, n, scale);
        }
        if want(Suite::Orthogonality) {
            orthogonality_suite(&mut cases, n, scale);
        }
    }
    if want(Suite::Specfun) {
        specfun_suite(&mut cases, scale);
    }
    let cases = cases.0;
    let failed = cases.iter().any(|c| c.status == CaseStatus::Fail);
    let report = Report { schema_version: SCHEMA_VERSION, suite: args.suite, cases, wall_time: start.elapsed().as_secs_f64() };
    match args.format {
        Format::Json => write_json(out, &report)?,
        Format::Csv | Format::Pretty => {
            let mut t = Table::new(&["name", "status", "measured", "expected", "tolerance"]);
            let num = |v: Option<f64>| v.map(sci).unwrap_or_else(|| "-".into());
            for c in &report.cases {
                let status = match c.status {
                    CaseStatus::Pass => "pass",
                    CaseStatus::Fail => "fail",
                    CaseStatus::Skip => "skip",
                };
                t.push(vec![c.name.clone(), status.into(), num(c.measured), num(c.expected), num(c.tolerance)]);
            }
            if args.format == Format::Csv {
                t.write_csv(out)?;
            } else {
                t.write_pretty(out)?;
                let count = |s| report.cases.iter().filter(|c| c.status == s).count();
                writeln!(
                    out,
                    "{} passed, {} failed, {} skipped in {:.2}s",
                    count(CaseStatus::Pass),
                    count(CaseStatus::Fail),
                    count(CaseStatus::Skip),
                    report.wall_time
                )?;
            }
        }
    }
    Ok(if failed { Status::Failed } else { Status::Ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_lists() {
        assert_eq!(parse_exponents("-1,0, 3").unwrap(), vec![-1, 0, 3]);
        assert!(parse_exponents("-2").is_err());
        assert!(parse_exponents("1,x").is_err());
    }
}
