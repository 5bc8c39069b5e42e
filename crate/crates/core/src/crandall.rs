//! Crandall kernels: the upper function `G_ν`, the lower function `g_ν`, the regularised
//! lower function and the distributional Fourier transform `ŝ_ν` of `|z|^{-ν}`.
//!
//! All kernels take `u = π |z|^2` internally; the public functions accept vectors.

use crate::error::{check_finite, check_finite_slice, Error, Result};
use crate::incomplete_gamma::{gamma, gamma_star, rgamma, upper_gamma, upper_gamma_scaled};
use std::f64::consts::PI;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `G_ν(z) = Γ(ν/2, π z²) / (π z²)^{ν/2}`, with `G_ν(0) = -2/ν`.
pub fn upper_crandall(nu: f64, z: &[f64]) -> Result<f64> {
    check_finite("nu", nu)?;
    check_finite_slice("z", z)?;
    UpperKernel::new(nu).eval(norm2(z))
}

/// `g_ν(z) = Γ(ν/2) γ*(ν/2, π z²)`. Undefined for `ν ∈ -2ℕ₀`, where `Γ(ν/2)` has poles.
pub fn lower_crandall(nu: f64, z: &[f64]) -> Result<f64> {
    check_finite("nu", nu)?;
    check_finite_slice("z", z)?;
    let a = nu / 2.0;
    if a <= 0.0 && a == a.floor() {
        return Err(Error::Domain(format!("g_nu has a pole at nu = {nu}")));
    }
    Ok(gamma(a) * gamma_star(a, PI * norm2(z))?)
}

/// Regular part `G^reg_{ν,λ}(z)` of the upper kernel `G_ν(λ z)` at `z = 0`.
///
/// Equals `-g_ν(λ z)` unless `ν = -2k`, where a logarithm is split off.
pub fn regularized_lower_crandall(nu: f64, z: &[f64], lambda: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    check_finite_slice("z", z)?;
    check_finite("lambda", lambda)?;
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("lambda must be positive, got {lambda}")));
    }
    regularized_kernel(nu, norm2(z), lambda)
}

pub(crate) fn regularized_kernel(nu: f64, r2: f64, lambda: f64) -> Result<f64> {
    let a = nu / 2.0;
    if !(a <= 0.0 && a == a.floor()) {
        return Ok(-gamma(a) * gamma_star(a, PI * lambda * lambda * r2)?);
    }
    let k = (-a) as u32;
    let u = PI * lambda * lambda * r2;
    if u >= 1.0 {
        log_kernel_gamma_form(k, u, r2)
    } else {
        Ok(log_kernel_series(k, u, lambda))
    }
}

/// `G^reg_{-2k,λ}` as `u^k Γ(-k, u) + (-1)^k/k! u^k ln(π z²)`, for `u` away from 0.
fn log_kernel_gamma_form(k: u32, u: f64, r2: f64) -> Result<f64> {
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let uk = u.powi(k as i32);
    Ok(uk * upper_gamma(-(k as f64), u)? + sign / gamma(k as f64 + 1.0) * uk * (PI * r2).ln())
}

/// `G^reg_{-2k,λ}` as `(-1)^k/k! (H_k - γ - ln λ²) u^k - Σ_{n≠k} (-u)^n / ((n - k) n!)`.
fn log_kernel_series(k: u32, u: f64, lambda: f64) -> f64 {
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let kf = k as f64;
    let harmonic: f64 = (1..=k).map(|j| 1.0 / j as f64).sum();
    let mut s = sign / gamma(kf + 1.0) * (harmonic - EULER_GAMMA - (lambda * lambda).ln()) * u.powi(k as i32);
    let mut p = 1.0;
    for n in 0..(k as usize + 60) {
        if n > 0 {
            p *= -u / n as f64;
        }
        if n as u32 != k {
            let t = p / (n as f64 - kf);
            s -= t;
            if n as u32 > k && t.abs() < 1e-18 * s.abs().max(1e-300) {
                break;
            }
        }
    }
    s
}

/// `ŝ_ν(y)`, the distributional Fourier transform of `|z|^{-ν}` in `R^d`, `d = y.len()`.
pub fn s_hat(nu: f64, y: &[f64]) -> Result<f64> {
    check_finite("nu", nu)?;
    check_finite_slice("y", y)?;
    s_hat_r2(nu, y.len(), norm2(y))
}

pub(crate) fn s_hat_r2(nu: f64, d: usize, r2: f64) -> Result<f64> {
    let df = d as f64;
    let r = rgamma(nu / 2.0);
    if r == 0.0 {
        return Ok(0.0);
    }
    let u = PI * r2;
    let kk = (nu - df) / 2.0;
    if kk >= 0.0 && kk == kk.floor() {
        let k = kk as i32;
        if u == 0.0 {
            if k == 0 {
                return Err(Error::Domain("ŝ_d is singular at y = 0".into()));
            }
            return Ok(0.0);
        }
        let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        return Ok(PI.powf(nu / 2.0) * r * sign / gamma(kk + 1.0) * u.powi(k) * u.ln());
    }
    if u == 0.0 {
        if nu > df {
            return Ok(0.0);
        }
        return Err(Error::Domain(format!("ŝ_nu is singular at y = 0 for nu = {nu} < d")));
    }
    Ok(PI.powf(nu / 2.0) * r * gamma((df - nu) / 2.0) * u.powf(kk))
}

/// The upper kernel at fixed order, evaluated at squared radii.
#[derive(Debug, Clone, Copy)]
pub(crate) struct UpperKernel {
    nu: f64,
    a: f64,
    // Beyond this u the kernel is below 1e-310 and is returned as zero.
    u_cut: f64,
}

impl UpperKernel {
    pub(crate) fn new(nu: f64) -> Self {
        let a = nu / 2.0;
        Self { nu, a, u_cut: 720.0 + (a - 1.0).max(0.0) }
    }

    #[inline]
    pub(crate) fn eval(&self, r2: f64) -> Result<f64> {
        if r2 == 0.0 {
            if self.nu == 0.0 {
                return Err(Error::Pole { nu: 0.0 });
            }
            return Ok(-2.0 / self.nu);
        }
        let u = PI * r2;
        if u > self.u_cut {
            return Ok(0.0);
        }
        upper_gamma_scaled(self.a, u)
    }
}

#[inline]
pub(crate) fn norm2(v: &[f64]) -> f64 {
    v.iter().map(|t| t * t).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_at_origin() {
        assert_eq!(upper_crandall(3.0, &[0.0, 0.0]).unwrap(), -2.0 / 3.0);
        assert_eq!(upper_crandall(-1.0, &[0.0]).unwrap(), 2.0);
        assert!(matches!(upper_crandall(0.0, &[0.0]), Err(Error::Pole { .. })));
    }

    #[test]
    fn upper_order_two_is_exponential() {
        // G_2(z) = e^{-π z²} / (π z²)
        let z = [0.3, -0.4];
        let u = PI * 0.25;
        let v = upper_crandall(2.0, &z).unwrap();
        assert!((v / ((-u).exp() / u) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn regularized_at_origin_matches_upper() {
        for nu in [-3.5, -1.0, 0.5, 1.5, 7.0] {
            let r = regularized_lower_crandall(nu, &[0.0, 0.0], 1.0).unwrap();
            assert!((r * nu / -2.0 - 1.0).abs() < 1e-15, "nu = {nu}: {r}");
        }
        let r0 = regularized_lower_crandall(0.0, &[0.0], 1.0).unwrap();
        assert!((r0 + EULER_GAMMA).abs() < 1e-16);
    }

    #[test]
    fn log_kernel_forms_agree() {
        for k in 0..4 {
            for u in [0.5, 1.0, 2.0] {
                let a = log_kernel_series(k, u, 1.0);
                let b = log_kernel_gamma_form(k, u, u / PI).unwrap();
                assert!((a - b).abs() < 2e-15 * a.abs().max(1.0), "k = {k}, u = {u}: {a} {b}");
            }
        }
    }

    #[test]
    fn s_hat_errors_at_origin() {
        assert!(s_hat(1.0, &[0.0, 0.0]).is_err());
        assert!(s_hat(2.0, &[0.0, 0.0]).is_err());
        assert_eq!(s_hat(4.0, &[0.0, 0.0]).unwrap(), 0.0);
        assert_eq!(s_hat(-2.0, &[0.3, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn lower_pole() {
        assert!(lower_crandall(-4.0, &[1.0]).is_err());
    }
}
