//! The Epstein zeta function `Z_{Λ,ν}(x, y) = Σ'_{z∈Λ} e^{-2πi y·z} |z - x|^{-ν}` and its
//! regularisation `Z^reg_{Λ,ν}(x, y) = e^{2πi x·y} Z_{Λ,ν}(x, y) - ŝ_ν(y)/V_Λ`.
//!
//! Both are evaluated from Crandall's representation on the unit-volume rescaled lattice,
//! as one sum over `Λ` and one over the reciprocal lattice, each cut off at the radius
//! given by [`TruncationPlan`].

use crate::crandall::{norm2, regularized_kernel, UpperKernel};
use crate::error::{check_finite, check_finite_slice, Error, Result};
use crate::incomplete_gamma::{gamma, rgamma};
use crate::lattice::{Lattice, DEFAULT_POINT_CAP};
use crate::linalg;
use crate::summation::ComplexSum;
use crate::truncation::TruncationPlan;
use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsteinOptions {
    /// Replaces the tabulated base radius (before scaling by the condition number).
    pub r0: Option<f64>,
    /// Maximum number of lattice points visited per sum.
    pub point_cap: u64,
}

impl Default for EpsteinOptions {
    fn default() -> Self {
        Self { r0: None, point_cap: DEFAULT_POINT_CAP }
    }
}

/// Result of an evaluation together with what it cost.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation {
    pub value: Complex64,
    pub plan: TruncationPlan,
    pub direct_terms: u64,
    pub reciprocal_terms: u64,
}

/// A complete request: order, lattice, shift `x`, wave vector `y`, and which variant.
#[derive(Debug, Clone)]
pub struct EpsteinQuery {
    pub nu: f64,
    pub lattice: Lattice,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub regularised: bool,
}

impl EpsteinQuery {
    pub fn evaluate(&self) -> Result<Complex64> {
        self.evaluate_with(&EpsteinOptions::default()).map(|e| e.value)
    }

    pub fn evaluate_with(&self, opts: &EpsteinOptions) -> Result<Evaluation> {
        evaluate(self.nu, &self.lattice, &self.x, &self.y, opts, self.regularised)
    }
}

/// `Z_{Λ,ν}(x, y)`. Returns [`Error::Pole`] for `ν = d` with `y ∈ Λ*`.
pub fn epstein_zeta(nu: f64, lattice: &Lattice, x: &[f64], y: &[f64]) -> Result<Complex64> {
    evaluate(nu, lattice, x, y, &EpsteinOptions::default(), false).map(|e| e.value)
}

/// `Z^reg_{Λ,ν}(x, y)`, analytic in `y` on the first Brillouin zone. `y` must not be a
/// nonzero point of `Λ*`.
pub fn epstein_zeta_reg(nu: f64, lattice: &Lattice, x: &[f64], y: &[f64]) -> Result<Complex64> {
    evaluate(nu, lattice, x, y, &EpsteinOptions::default(), true).map(|e| e.value)
}

pub fn epstein_zeta_with(nu: f64, lattice: &Lattice, x: &[f64], y: &[f64], opts: &EpsteinOptions) -> Result<Evaluation> {
    evaluate(nu, lattice, x, y, opts, false)
}

pub fn epstein_zeta_reg_with(nu: f64, lattice: &Lattice, x: &[f64], y: &[f64], opts: &EpsteinOptions) -> Result<Evaluation> {
    evaluate(nu, lattice, x, y, opts, true)
}

/// Within a few ulps of an integer. Used to decide membership of `Λ` or `Λ*` from
/// coordinates, so that exact lattice vectors survive the rescaling.
fn near_integer(c: f64) -> bool {
    (c - c.round()).abs() <= 32.0 * f64::EPSILON * c.abs().max(1.0)
}

/// `e^{-2πi t}`, reducing `t` modulo 1 first.
#[inline]
fn phase(t: f64) -> Complex64 {
    let f = t - t.round();
    let (s, c) = (2.0 * PI * f).sin_cos();
    Complex64::new(c, -s)
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

fn is_neg_even_integer(nu: f64) -> bool {
    nu < 0.0 && (nu / 2.0) == (nu / 2.0).floor()
}

fn evaluate(nu: f64, lat: &Lattice, x: &[f64], y: &[f64], opts: &EpsteinOptions, regularised: bool) -> Result<Evaluation> {
    let d = lat.dim();
    let df = d as f64;
    check_finite("nu", nu)?;
    for (name, v) in [("x", x), ("y", y)] {
        if v.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: v.len() });
        }
        check_finite_slice(name, v)?;
    }
    let x_coords = lat.coordinates(x);
    let x_in = x_coords.iter().all(|&c| near_integer(c));
    let mut y_coords = vec![0.0; d];
    linalg::mat_t_vec(lat.matrix(), d, y, &mut y_coords);
    let y_in = y_coords.iter().all(|&c| near_integer(c));
    let y_zero = y_in && y_coords.iter().all(|c| c.round() == 0.0);

    let mut plan = TruncationPlan::new(d, lat.condition_number())?;
    if let Some(r0) = opts.r0 {
        if !(r0 > 0.0) || !r0.is_finite() {
            return Err(Error::Domain(format!("base radius must be positive, got {r0}")));
        }
        plan.r0 = r0;
        plan.radius = r0 * plan.kappa;
    }
    let trivial = |value: Complex64| Evaluation { value, plan, direct_terms: 0, reciprocal_terms: 0 };

    if regularised && y_in && !y_zero {
        return Err(Error::Domain("regularised zeta is undefined for y in the dual lattice minus the origin".into()));
    }
    if !regularised && nu == df && y_in {
        return Err(Error::Pole { nu });
    }
    if nu == 0.0 {
        // Only the excluded z = x term survives the continuation.
        let v = if !x_in {
            Complex64::new(0.0, 0.0)
        } else if regularised {
            Complex64::new(-1.0, 0.0)
        } else {
            -phase(dot(x, y))
        };
        return Ok(trivial(v));
    }
    if is_neg_even_integer(nu) {
        return Ok(trivial(Complex64::new(0.0, 0.0)));
    }
    if plan.warning {
        log::warn!(
            "condition number {} gives kappa^(d+1) = {:.3e} > {}; truncation may be inaccurate",
            plan.kappa,
            plan.kappa.powi(d as i32 + 1),
            crate::truncation::KAPPA_WARNING_LEVEL
        );
    }

    let a = lat.volume().powf(1.0 / df);
    let unit = lat.scaled(1.0 / a)?;
    let dual = unit.dual();
    let xs: Vec<f64> = x.iter().map(|t| t / a).collect();
    let ys: Vec<f64> = y.iter().map(|t| t * a).collect();
    let xp = if x_in { vec![0.0; d] } else { unit.reduce(&xs) };
    let v: Vec<f64> = xs.iter().zip(&xp).map(|(p, q)| p - q).collect();
    // The regularised function is not periodic in y, so y is only reduced for Z itself.
    let yp = if regularised {
        if y_zero {
            vec![0.0; d]
        } else {
            ys.clone()
        }
    } else if y_in {
        vec![0.0; d]
    } else {
        dual.reduce(&ys)
    };
    let r = plan.radius;
    let y_nonzero = yp.iter().any(|&t| t != 0.0);
    let x_nonzero = xp.iter().any(|&t| t != 0.0);

    let mut err: Option<Error> = None;
    let mut diff = vec![0.0; d];

    let direct_kernel = UpperKernel::new(nu);
    let mut direct = ComplexSum::new();
    let direct_terms = unit.visit_ball(&xp, r, opts.point_cap, |_, z| {
        if err.is_some() {
            return;
        }
        for i in 0..d {
            diff[i] = z[i] - xp[i];
        }
        match direct_kernel.eval(norm2(&diff)) {
            Ok(0.0) => {}
            Ok(g) => {
                if !y_nonzero {
                    direct.add(Complex64::new(g, 0.0));
                } else if regularised {
                    direct.add(phase(dot(&yp, &diff)) * g);
                } else {
                    direct.add(phase(dot(&yp, z)) * g);
                }
            }
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err.take() {
        return Err(e);
    }

    let recip_kernel = UpperKernel::new(df - nu);
    let mut recip = ComplexSum::new();
    let neg_yp: Vec<f64> = yp.iter().map(|t| -t).collect();
    let reciprocal_terms = dual.visit_ball(&neg_yp, r, opts.point_cap, |n, k| {
        if err.is_some() {
            return;
        }
        if regularised && n.iter().all(|&c| c == 0) {
            return;
        }
        for i in 0..d {
            diff[i] = k[i] + yp[i];
        }
        match recip_kernel.eval(norm2(&diff)) {
            Ok(0.0) => {}
            Ok(g) => {
                if !x_nonzero {
                    recip.add(Complex64::new(g, 0.0));
                } else if regularised {
                    recip.add(phase(dot(&xp, k)) * g);
                } else {
                    recip.add(phase(dot(&xp, &diff)) * g);
                }
            }
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err.take() {
        return Err(e);
    }
    if regularised {
        recip.add(Complex64::new(regularized_kernel(df - nu, norm2(&yp), 1.0)?, 0.0));
    }

    let pref = a.powf(-nu) * PI.powf(nu / 2.0) * rgamma(nu / 2.0);
    let mut value = (direct.value() + recip.value()) * pref;
    if regularised {
        let kk = (nu - df) / 2.0;
        if kk >= 0.0 && kk == kk.floor() {
            // ŝ_ν is not homogeneous in the logarithmic case; undo the rescaling by hand.
            let k = kk as i32;
            let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
            let c = PI.powf(nu / 2.0) * rgamma(nu / 2.0) * sign / gamma(kk + 1.0);
            value += c * (PI * norm2(y)).powi(k) * (a * a).ln() / lat.volume();
        }
    } else if v.iter().any(|&t| t != 0.0) && y_nonzero {
        value *= phase(dot(&yp, &v));
    }
    Ok(Evaluation { value, plan, direct_terms, reciprocal_terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pole_is_reported() {
        let l = Lattice::identity(2).unwrap();
        assert!(matches!(epstein_zeta(2.0, &l, &[0.3, 0.1], &[0.0, 0.0]), Err(Error::Pole { .. })));
        assert!(matches!(epstein_zeta(2.0, &l, &[0.3, 0.1], &[1.0, -2.0]), Err(Error::Pole { .. })));
    }

    #[test]
    fn order_zero() {
        let l = Lattice::identity(2).unwrap();
        let v = epstein_zeta(0.0, &l, &[1.0, 0.0], &[0.25, 0.0]).unwrap();
        assert!((v - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert_eq!(epstein_zeta(0.0, &l, &[0.5, 0.0], &[0.25, 0.0]).unwrap(), Complex64::new(0.0, 0.0));
        assert_eq!(epstein_zeta_reg(0.0, &l, &[1.0, 0.0], &[0.25, 0.0]).unwrap(), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn negative_even_orders_vanish() {
        let l = Lattice::identity(3).unwrap();
        for nu in [-2.0, -4.0, -10.0] {
            assert_eq!(epstein_zeta(nu, &l, &[0.1, 0.2, 0.3], &[0.3, 0.0, 0.1]).unwrap(), Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn regularised_rejects_dual_points() {
        let l = Lattice::identity(2).unwrap();
        assert!(matches!(epstein_zeta_reg(1.0, &l, &[0.0, 0.0], &[1.0, 0.0]), Err(Error::Domain(_))));
    }

    #[test]
    fn dimension_checks() {
        let l = Lattice::identity(2).unwrap();
        assert!(matches!(epstein_zeta(1.0, &l, &[0.0], &[0.0, 0.0]), Err(Error::DimensionMismatch { .. })));
        assert!(epstein_zeta(f64::NAN, &l, &[0.0, 0.0], &[0.0, 0.0]).is_err());
    }

    #[test]
    fn madelung_constant() {
        let l = Lattice::identity(3).unwrap();
        let v = epstein_zeta(1.0, &l, &[0.0; 3], &[0.5; 3]).unwrap();
        assert!((v.re - (-1.747_564_594_633_182)).abs() < 1e-14, "{v}");
        assert!(v.im.abs() < 1e-15);
    }
}
