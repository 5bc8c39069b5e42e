//! Choice of the cutoff radius for the two lattice sums, and the matching error bound.

use crate::error::{Error, Result};
use crate::incomplete_gamma::{gamma, rgamma, upper_gamma_scaled};
use crate::lattice::MAX_DIM;
use std::f64::consts::PI;

/// Cutoff radii for unimodular lattices with condition number 1, indexed by `d - 1`.
/// They keep the truncation error below `1e-18` for `ν ∈ [-10, 10]`.
pub const R0: [f64; MAX_DIM] = [3.8, 3.9, 4.0, 4.1, 4.2, 4.2, 4.3, 4.4, 4.4, 4.5];

/// Above this value of `κ^{d+1}` the tabulated radii are no longer a safe guarantee.
pub const KAPPA_WARNING_LEVEL: f64 = 100.0;

/// Distance between the cutoff and the shell used in the bound.
const BOUND_EPS: f64 = 1.0 / 20.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPlan {
    /// Cutoff radius for both sums (unit-volume lattice).
    pub radius: f64,
    /// Condition number of the generator matrix.
    pub kappa: f64,
    /// Table radius before scaling by `kappa`.
    pub r0: f64,
    /// Set when `κ^{d+1} > 100`.
    pub warning: bool,
}

impl TruncationPlan {
    pub fn new(dim: usize, kappa: f64) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::UnsupportedDimension(dim));
        }
        if !(kappa >= 1.0) || !kappa.is_finite() {
            return Err(Error::Domain(format!("condition number must be >= 1, got {kappa}")));
        }
        let r0 = R0[dim - 1];
        let warning = kappa.powi(dim as i32 + 1) > KAPPA_WARNING_LEVEL;
        Ok(Self { radius: kappa * r0, kappa, r0, warning })
    }
}

/// Upper kernel as a function of the radius, `G_ν(ρ)` with `u = π ρ²`.
fn kernel_at(nu: f64, rho: f64) -> f64 {
    upper_gamma_scaled(nu / 2.0, PI * rho * rho).unwrap_or(f64::NAN)
}

fn shell_term(dim: usize, nu: f64, r: f64) -> f64 {
    let df = dim as f64;
    let rho = r - BOUND_EPS;
    let diff = if (df + 1.0 - nu).abs() < 1e-6 {
        let h = 1e-4;
        (kernel_at(df + 1.0 + h, rho) - kernel_at(df + 1.0 - h, rho)) / (2.0 * h)
    } else {
        (kernel_at(df + 1.0, rho) - kernel_at(nu, rho)) / (df + 1.0 - nu)
    };
    r.powi(dim as i32 + 1) / BOUND_EPS * diff
}

/// Bound on the total truncation error of both sums, relative to the prefactor-free
/// sums, for a lattice with condition number `kappa` cut off at radius `r`.
pub fn truncation_error_bound(dim: usize, nu: f64, r: f64, kappa: f64) -> Result<f64> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::UnsupportedDimension(dim));
    }
    let df = dim as f64;
    if !(r / kappa > BOUND_EPS) {
        return Err(Error::Domain(format!("radius {r} too small for the bound")));
    }
    let c = 1.5f64.powi(dim as i32) * PI.powf((nu + df) / 2.0) * rgamma(nu / 2.0).abs() / gamma(df / 2.0 + 1.0);
    let rs = r / kappa;
    Ok(kappa.powf(df + 1.0) * c * (shell_term(dim, nu, rs) + shell_term(dim, df - nu, rs)))
}

/// Maximum of [`truncation_error_bound`] over `ν ∈ [lo, hi]` on a grid of the given step.
pub fn max_truncation_error_bound(dim: usize, r: f64, kappa: f64, lo: f64, hi: f64, step: f64) -> Result<(f64, f64)> {
    let n = ((hi - lo) / step).round() as usize;
    let mut best = (f64::NEG_INFINITY, lo);
    for i in 0..=n {
        let nu = lo + step * i as f64;
        let b = truncation_error_bound(dim, nu, r, kappa)?;
        if b > best.0 {
            best = (b, nu);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_scales_with_kappa() {
        let p = TruncationPlan::new(3, 2.0).unwrap();
        assert_eq!(p.radius, 8.0);
        assert!(!p.warning);
        assert!(TruncationPlan::new(3, 4.0).unwrap().warning);
    }

    #[test]
    fn plan_rejects_large_dim() {
        assert!(matches!(TruncationPlan::new(11, 1.0), Err(Error::UnsupportedDimension(11))));
    }

    #[test]
    fn central_difference_is_continuous() {
        let at = truncation_error_bound(3, 4.0, 4.0, 1.0).unwrap();
        let near = truncation_error_bound(3, 4.0 + 2e-6, 4.0, 1.0).unwrap();
        assert!((at / near - 1.0).abs() < 1e-4);
    }
}
