//! Physics drivers: spin-wave dispersion on lattices with power-law couplings and massless
//! Casimir energies of boxes.

use crate::error::{check_finite, check_finite_slice, Error, Result};
use crate::lattice::Lattice;
use crate::zeta::epstein_zeta;
use num_complex::Complex64;
use std::f64::consts::PI;
use std::fmt::Write as _;

/// Spin waves for the exchange `J |z|^{-ν}` between sites of a lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct DispersionQuery {
    pub nu: f64,
    pub lattice: Lattice,
    pub k: Vec<f64>,
    /// Coupling times spin.
    pub js: f64,
}

impl DispersionQuery {
    pub fn new(nu: f64, lattice: Lattice, k: Vec<f64>) -> Self {
        Self { nu, lattice, k, js: 1.0 }
    }

    pub fn energy(&self) -> Result<f64> {
        spin_wave_dispersion(self.nu, &self.lattice, &self.k, self.js)
    }
}

fn real_part(z: Complex64, what: &str) -> Result<f64> {
    if z.im.abs() < 1e-12 * z.re.abs() + 1e-14 {
        Ok(z.re)
    } else {
        Err(Error::Breakdown(format!("{what} has imaginary part {:e} (real part {:e})", z.im, z.re)))
    }
}

/// `JS (Z(0, 0) - Z(0, k))`. The wave vector is reduced to the first Brillouin zone.
pub fn spin_wave_dispersion(nu: f64, lattice: &Lattice, k: &[f64], js: f64) -> Result<f64> {
    let d = lattice.dim();
    check_finite("nu", nu)?;
    check_finite("js", js)?;
    if k.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: k.len() });
    }
    check_finite_slice("k", k)?;
    if nu <= d as f64 {
        return Err(Error::Breakdown(format!(
            "dispersion is unbounded from below for nu = {nu} <= d = {d}"
        )));
    }
    let zero = vec![0.0; d];
    let kr = lattice.dual().reduce(k);
    let z0 = real_part(epstein_zeta(nu, lattice, &zero, &zero)?, "Z(0, 0)")?;
    let zk = real_part(epstein_zeta(nu, lattice, &zero, &kr)?, "Z(0, k)")?;
    Ok(js * (z0 - zk))
}

/// Least-squares line through `(ln x, ln y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerFit {
    pub exponent: f64,
    pub log_prefactor: f64,
}

pub fn fit_power_law(xs: &[f64], ys: &[f64]) -> Result<PowerFit> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::Domain("power-law fit needs at least two paired samples".into()));
    }
    if xs.iter().chain(ys).any(|v| !(*v > 0.0)) {
        return Err(Error::Domain("power-law fit needs positive samples".into()));
    }
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx) * (a - mx)).sum();
    let exponent = sxy / sxx;
    Ok(PowerFit { exponent, log_prefactor: my - exponent * mx })
}

/// `n` wave numbers spaced geometrically over `[lo, hi]`.
pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let r = (hi / lo).ln() / (n - 1) as f64;
    (0..n).map(|i| lo * (r * i as f64).exp()).collect()
}

/// Dispersion along the first axis of the dual basis at the given wave numbers `|k|`,
/// as `(k, ω)` pairs.
pub fn dispersion_along_axis(nu: f64, lattice: &Lattice, ks: &[f64], js: f64) -> Result<Vec<(f64, f64)>> {
    let d = lattice.dim();
    let mut out = Vec::with_capacity(ks.len());
    for &k in ks {
        let mut v = vec![0.0; d];
        v[0] = k;
        out.push((k, spin_wave_dispersion(nu, lattice, &v, js)?));
    }
    Ok(out)
}

/// Small-`k` exponent of the dispersion, fitted over `2π [1e-3, 1e-2]` along the first axis.
pub fn dispersion_exponent(nu: f64, lattice: &Lattice, samples: usize) -> Result<PowerFit> {
    let ks = geometric_grid(2.0 * PI * 1e-3, 2.0 * PI * 1e-2, samples);
    let pts = dispersion_along_axis(nu, lattice, &ks, 1.0)?;
    let (x, y): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
    fit_power_law(&x, &y)
}

pub fn dispersion_csv(points: &[(f64, f64)]) -> String {
    let mut s = String::from("k,omega\n");
    for (k, w) in points {
        let _ = writeln!(s, "{k:.16e},{w:.16e}");
    }
    s
}

/// Box with edges `L_1, …, L_d`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoxGeometry {
    edges: Vec<f64>,
}

pub const CASIMIR_MAX_DIM: usize = 6;

impl BoxGeometry {
    pub fn new(edges: &[f64]) -> Result<Self> {
        if edges.is_empty() || edges.len() > CASIMIR_MAX_DIM {
            return Err(Error::UnsupportedDimension(edges.len()));
        }
        check_finite_slice("edges", edges)?;
        if edges.iter().any(|l| !(*l > 0.0)) {
            return Err(Error::Domain(format!("box edges must be positive, got {edges:?}")));
        }
        Ok(Self { edges: edges.to_vec() })
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    /// The lattice of wave vectors, `diag(1/L_1, …, 1/L_d)`.
    pub fn reciprocal_lattice(&self) -> Result<Lattice> {
        let inv: Vec<f64> = self.edges.iter().map(|l| 1.0 / l).collect();
        Lattice::diagonal(&inv)
    }
}

/// Zero-point energy `π Z_{Λ*, -1}(0, 0)` of a massless field in the box.
pub fn casimir_energy(g: &BoxGeometry) -> Result<f64> {
    let lat = g.reciprocal_lattice()?;
    let zero = vec![0.0; lat.dim()];
    real_part(PI * epstein_zeta(-1.0, &lat, &zero, &zero)?, "Casimir energy")
}

/// Default finite-difference step of [`casimir_force`] relative to `L`.
pub const FORCE_STEP_FRACTION: f64 = 0.01;

/// `-dE/dL` for the box `(L, 1, 1)`, by a central difference of width `step`.
pub fn casimir_force(l: f64, step: f64) -> Result<f64> {
    check_finite("L", l)?;
    check_finite("step", step)?;
    if !(l > 0.0) || !(step > 0.0) || step >= l {
        return Err(Error::Domain(format!("need 0 < step < L, got L = {l}, step = {step}")));
    }
    if step > 0.1 * l {
        log::warn!("force step {step} is not small compared to L = {l}");
    }
    let e = |t: f64| casimir_energy(&BoxGeometry::new(&[t, 1.0, 1.0])?);
    Ok(-(e(l + step)? - e(l - step)?) / (2.0 * step))
}

/// [`casimir_force`] with Richardson extrapolation over `step` and `step / 2`, fourth order in the step.
pub fn casimir_force_richardson(l: f64, step: f64) -> Result<f64> {
    let coarse = casimir_force(l, step)?;
    let fine = casimir_force(l, step / 2.0)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

/// Leading small-`L` force between the two close plates, `-π²/(30 L⁴)`.
pub fn casimir_force_asymptotic(l: f64) -> f64 {
    -PI * PI / (30.0 * l.powi(4))
}

/// The term `-8π e^{-2π/L} / L³` that the residual of the force is compared with.
pub fn casimir_force_correction(l: f64) -> f64 {
    -8.0 * PI * (-2.0 * PI / l).exp() / l.powi(3)
}

/// Energy of unit-volume boxes `(L_1, L_2, 1/(L_1 L_2))` on a grid, as `(L_1, L_2, E)`.
pub fn energy_surface(l1: &[f64], l2: &[f64]) -> Result<Vec<(f64, f64, f64)>> {
    let mut out = Vec::with_capacity(l1.len() * l2.len());
    for &a in l1 {
        for &b in l2 {
            let g = BoxGeometry::new(&[a, b, 1.0 / (a * b)])?;
            out.push((a, b, casimir_energy(&g)?));
        }
    }
    Ok(out)
}

pub fn energy_surface_csv(points: &[(f64, f64, f64)]) -> String {
    let mut s = String::from("L1,L2,L3,energy\n");
    for (a, b, e) in points {
        let _ = writeln!(s, "{a:.16e},{b:.16e},{:.16e},{e:.16e}", 1.0 / (a * b));
    }
    s
}
