//! Sweep of the closed-form cases over a grid of orders, with per-case summaries.

use crate::error::{Error, Result};
use crate::reference::{analytic_value, CaseId};
use crate::zeta::{epstein_zeta, epstein_zeta_reg};
use num_complex::Complex64;
use std::fmt::Write as _;
use std::time::Instant;

/// Offset of the default grid, keeping it off the integers where special cases apply.
pub const GRID_OFFSET: f64 = 1.0 / 32768.0;
pub const GRID_START: f64 = -12.5 + GRID_OFFSET;
pub const GRID_STOP: f64 = 12.5 + GRID_OFFSET;
pub const GRID_STEP: f64 = 0.05;

/// Accuracy target for the regularised function, whatever the case.
pub const REGULARISED_THRESHOLD: f64 = 1e-11;

/// Accuracy target for the non-regularised function on a case.
pub fn threshold(id: CaseId) -> f64 {
    match id {
        CaseId::S6 | CaseId::S8 => 1e-12,
        _ => 5e-13,
    }
}

/// `start, start + step, …` up to and including `stop` (within rounding).
pub fn nu_grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(Error::Domain(format!("empty or invalid grid {start}:{stop}:{step}")));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|i| start + step * i as f64).collect())
}

/// The default grid, `-12.5 + 2^-15` to `12.5 + 2^-15` in steps of `0.05`.
pub fn default_grid() -> Vec<f64> {
    nu_grid(GRID_START, GRID_STOP, GRID_STEP).expect("default grid is valid")
}

/// `min(|computed - reference|, |computed - reference| / |reference|)`.
pub fn error_metric(computed: Complex64, reference: f64) -> f64 {
    let abs = (computed - reference).norm();
    abs.min(abs / reference.abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub case: CaseId,
    pub dim: usize,
    pub nu: f64,
    pub regularised: bool,
    pub reference: f64,
    pub computed: Complex64,
    pub error: f64,
    pub seconds: f64,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "case,d,nu,regularised,reference,computed_re,computed_im,error,seconds";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{:.16e},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.6e}",
            self.case,
            self.dim,
            self.nu,
            self.regularised,
            self.reference,
            self.computed.re,
            self.computed.im,
            self.error,
            self.seconds
        )
    }
}

/// Evaluates one case at one order, plus the regularised function when `y = 0`.
///
/// Orders where the closed form has a pole give no rows.
pub fn bench_point(id: CaseId, nu: f64) -> Result<Vec<BenchRow>> {
    let case = id.case();
    let reference = match analytic_value(id, nu) {
        Ok(v) => v,
        Err(Error::Domain(_)) | Err(Error::Pole { .. }) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let lattice = case.lattice();
    let mut rows = Vec::with_capacity(2);
    let mut run = |regularised: bool| -> Result<()> {
        let t = Instant::now();
        let computed = if regularised {
            epstein_zeta_reg(nu, &lattice, &case.x, &case.y)?
        } else {
            epstein_zeta(nu, &lattice, &case.x, &case.y)?
        };
        let seconds = t.elapsed().as_secs_f64();
        rows.push(BenchRow {
            case: id,
            dim: case.dim,
            nu,
            regularised,
            reference,
            computed,
            error: error_metric(computed, reference),
            seconds,
        });
        Ok(())
    };
    run(false)?;
    if case.y.iter().all(|t| *t == 0.0) {
        run(true)?;
    }
    Ok(rows)
}

/// Sequential sweep of one case.
pub fn run_case(id: CaseId, grid: &[f64]) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &nu in grid {
        rows.extend(bench_point(id, nu)?);
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseSummary {
    pub case: CaseId,
    pub regularised: bool,
    pub points: usize,
    pub max_error: f64,
    pub worst_nu: f64,
    pub min_seconds: f64,
    pub mean_seconds: f64,
    pub max_seconds: f64,
    pub threshold: f64,
}

impl CaseSummary {
    pub fn passed(&self) -> bool {
        self.max_error <= self.threshold
    }
}

/// Summaries per `(case, regularised)` in the order the pairs first appear.
pub fn summarize(rows: &[BenchRow]) -> Vec<CaseSummary> {
    let mut out: Vec<CaseSummary> = Vec::new();
    for r in rows {
        let idx = match out.iter().position(|s| s.case == r.case && s.regularised == r.regularised) {
            Some(i) => i,
            None => {
                out.push(CaseSummary {
                    case: r.case,
                    regularised: r.regularised,
                    points: 0,
                    max_error: 0.0,
                    worst_nu: r.nu,
                    min_seconds: f64::INFINITY,
                    mean_seconds: 0.0,
                    max_seconds: 0.0,
                    threshold: if r.regularised { REGULARISED_THRESHOLD } else { threshold(r.case) },
                });
                out.len() - 1
            }
        };
        let s = &mut out[idx];
        s.points += 1;
        // NaN errors count as failures
        if !(r.error <= s.max_error) {
            s.max_error = if r.error.is_nan() { f64::INFINITY } else { r.error };
            s.worst_nu = r.nu;
        }
        s.min_seconds = s.min_seconds.min(r.seconds);
        s.max_seconds = s.max_seconds.max(r.seconds);
        s.mean_seconds += r.seconds;
    }
    for s in &mut out {
        s.mean_seconds /= s.points as f64;
    }
    out
}

/// Plain-text table of summaries.
pub fn format_summary(summaries: &[CaseSummary]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<5} {:<4} {:>6} {:>10} {:>12} {:>11} {:>11} {:>11}  status",
        "case", "reg", "points", "max err", "at nu", "min time", "avg time", "max time"
    );
    for c in summaries {
        let _ = writeln!(
            s,
            "{:<5} {:<4} {:>6} {:>10.2e} {:>12.6} {:>10.3e}s {:>10.3e}s {:>10.3e}s  {}",
            c.case.name(),
            if c.regularised { "yes" } else { "no" },
            c.points,
            c.max_error,
            c.worst_nu,
            c.min_seconds,
            c.mean_seconds,
            c.max_seconds,
            if c.passed() { "ok" } else { "FAIL" }
        );
    }
    s
}
