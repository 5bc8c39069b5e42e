//! Closed-form reference values for special lattices, the special functions they are built
//! from, and a brute-force lattice sum for checking.

use crate::error::{check_finite, check_finite_slice, Error, Result};
use crate::incomplete_gamma::gamma;
use crate::lattice::{sphere_area, Lattice, DEFAULT_POINT_CAP};
use crate::summation::ComplexSum;
use num_complex::Complex64;
use std::f64::consts::{LN_2, PI};
use std::fmt;
use std::str::FromStr;

// B_{2j} / (2j)!, j = 1..6
const BERNOULLI_OVER_FACT: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
];

/// Below this order rational shifts go through the reflection formula, which avoids the
/// cancellation of the direct sum against its tail.
const REFLECT_BELOW: f64 = 0.5;
/// Below this order the direct sum is unusable and the shift must be rational.
const EM_FLOOR: f64 = -0.5;
const MAX_DENOMINATOR: u64 = 1000;

/// Hurwitz zeta function `ζ(ν, a) = Σ_{n>=0} (n + a)^{-ν}`, continued to all `ν ≠ 1`.
///
/// For `ν < -1/2` the shift `a` must be a rational with denominator at most 1000.
pub fn hurwitz_zeta(nu: f64, a: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    check_finite("a", a)?;
    if !(a > 0.0) {
        return Err(Error::Domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    if nu == 1.0 {
        return Err(Error::Domain("Hurwitz zeta has a pole at nu = 1".into()));
    }
    if nu >= REFLECT_BELOW {
        return Ok(euler_maclaurin(nu, a, None));
    }
    if nu == 0.0 {
        return Ok(0.5 - a);
    }
    let (p, q) = match fraction(a) {
        Ok(pq) => pq,
        Err(_) if nu >= EM_FLOOR => return Ok(euler_maclaurin(nu, a, None)),
        Err(e) => return Err(e),
    };
    // a = p/q = p0/q + m with p0 in 1..=q
    let p0 = (p - 1) % q + 1;
    let shift = (0..(p - p0) / q).map(|j| (p0 + j * q) as f64 / q as f64).map(|t| t.powf(-nu));
    let s = 1.0 - nu;
    let weights: Vec<f64> = (1..=q).map(|j| cospi(s / 2.0 - 2.0 * (j * p0) as f64 / q as f64)).collect();
    let head = 2.0 * gamma(s) / (2.0 * PI * q as f64).powf(s) * reflected_sum(s, &weights);
    Ok(head - shift.sum::<f64>())
}

/// `ζ(ν, a1) - ζ(ν, a2)`, which stays finite at `ν = 1`. Shifts must lie in `(0, 1]` when `ν < -1/2`.
pub fn hurwitz_zeta_difference(nu: f64, a1: f64, a2: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    check_finite("a1", a1)?;
    check_finite("a2", a2)?;
    if !(a1 > 0.0 && a2 > 0.0) {
        return Err(Error::Domain(format!("Hurwitz zeta needs positive shifts, got {a1}, {a2}")));
    }
    let direct = nu >= REFLECT_BELOW || (nu >= EM_FLOOR && (a1 > 1.0 || a2 > 1.0));
    if direct {
        return Ok(euler_maclaurin(nu, a1, Some(a2)));
    }
    if a1 > 1.0 || a2 > 1.0 {
        return Err(Error::Domain("reflected Hurwitz difference needs shifts in (0, 1]".into()));
    }
    let (p1, q1, p2, q2) = match (fraction(a1), fraction(a2)) {
        (Ok((p1, q1)), Ok((p2, q2))) => (p1, q1, p2, q2),
        _ if nu >= EM_FLOOR => return Ok(euler_maclaurin(nu, a1, Some(a2))),
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    let q = lcm(q1, q2);
    let (p1, p2) = (p1 * (q / q1), p2 * (q / q2));
    let s = 1.0 - nu;
    let weights: Vec<f64> = (1..=q)
        .map(|j| cospi(s / 2.0 - 2.0 * (j * p1) as f64 / q as f64) - cospi(s / 2.0 - 2.0 * (j * p2) as f64 / q as f64))
        .collect();
    Ok(2.0 * gamma(s) / (2.0 * PI * q as f64).powf(s) * reflected_sum(s, &weights))
}

/// `Σ_j w_j ζ(s, j/q)` for `j = 1..=q`. Unless `q = 1` the weights sum to zero, so each
/// term is taken relative to `ζ(s, 1)` and the poles at `s = 1` cancel exactly.
fn reflected_sum(s: f64, weights: &[f64]) -> f64 {
    let q = weights.len();
    if q == 1 {
        return weights[0] * euler_maclaurin(s, 1.0, None);
    }
    let mut acc = 0.0;
    for (j, w) in weights.iter().enumerate().take(q - 1) {
        if *w != 0.0 {
            acc += w * euler_maclaurin(s, (j + 1) as f64 / q as f64, Some(1.0));
        }
    }
    acc
}

/// Euler-Maclaurin evaluation of `ζ(ν, a)`, or of `ζ(ν, a) - ζ(ν, b)` when `b` is given.
fn euler_maclaurin(nu: f64, a: f64, b: Option<f64>) -> f64 {
    let lo = a.min(b.unwrap_or(a));
    let target = 20f64.max(nu.abs());
    let n = (target - lo).ceil().max(0.0) as usize;
    let one = |c: f64| -> f64 {
        let mut s = 0.0;
        for k in (0..n).rev() {
            s += (k as f64 + c).powf(-nu);
        }
        let w = n as f64 + c;
        s += 0.5 * w.powf(-nu);
        // Bernoulli corrections: B_{2j}/(2j)! (ν)_{2j-1} w^{-ν-2j+1}
        let mut poch = nu;
        let mut wp = w.powf(-nu - 1.0);
        let w2 = 1.0 / (w * w);
        for (j, c) in BERNOULLI_OVER_FACT.iter().enumerate() {
            s += c * poch * wp;
            let m = 2.0 * j as f64 + 1.0;
            poch *= (nu + m) * (nu + m + 1.0);
            wp *= w2;
        }
        s
    };
    let tail = |c: f64| (n as f64 + c).powf(1.0 - nu) / (nu - 1.0);
    match b {
        None => one(a) + tail(a),
        Some(b) => {
            // ((n+a)^{1-ν} - (n+b)^{1-ν})/(ν-1), finite at ν = 1
            let (wa, wb) = (n as f64 + a, n as f64 + b);
            let l = ((a - b) / wb).ln_1p();
            let t = 1.0 - nu;
            let tail = if t == 0.0 { -l } else { -wb.powf(t) * (t * l).exp_m1() / t };
            debug_assert!(wa > 0.0);
            one(a) - one(b) + tail
        }
    }
}

/// `a = p/q` to within a few ulps, with `q <= 1000`.
fn fraction(a: f64) -> Result<(u64, u64)> {
    for q in 1..=MAX_DENOMINATOR {
        let p = (a * q as f64).round();
        if p >= 1.0 && (p / q as f64 - a).abs() <= 4.0 * f64::EPSILON * a {
            return Ok((p as u64, q));
        }
    }
    Err(Error::Domain(format!(
        "continuation to nu < -1/2 needs a rational shift with denominator <= {MAX_DENOMINATOR}, got {a}"
    )))
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// `cos(π t)`, with the reduction done exactly so the zeros at half-integers are kept.
pub(crate) fn cospi(t: f64) -> f64 {
    let r = (t - 2.0 * (t / 2.0).round()).abs();
    if r <= 0.25 {
        (PI * r).cos()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).sin()
    } else {
        -(PI * (1.0 - r)).cos()
    }
}

/// `sin(π t)`, with the reduction done exactly so the zeros at integers are kept.
pub(crate) fn sinpi(t: f64) -> f64 {
    let r = t - 2.0 * (t / 2.0).round();
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    sign * if r <= 0.25 {
        (PI * r).sin()
    } else if r <= 0.75 {
        (PI * (0.5 - r)).cos()
    } else {
        (PI * (1.0 - r)).sin()
    }
}

/// Riemann zeta function, by Borwein's alternating-series method for `ν >= 1/2` and the
/// functional equation below.
pub fn riemann_zeta(nu: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    if nu == 1.0 {
        return Err(Error::Domain("Riemann zeta has a pole at nu = 1".into()));
    }
    if nu == 0.0 {
        return Ok(-0.5);
    }
    if nu >= 0.5 {
        return Ok(borwein_eta(nu) / -((1.0 - nu) * LN_2).exp_m1());
    }
    let s = 1.0 - nu;
    Ok(2f64.powf(nu) * PI.powf(nu - 1.0) * sinpi(nu / 2.0) * gamma(s) * riemann_zeta(s)?)
}

fn borwein_eta(s: f64) -> f64 {
    const N: usize = 50;
    // d_k = n Σ_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = [0.0f64; N + 1];
    let mut term = 1.0 / N as f64;
    let mut acc = 0.0;
    for i in 0..=N {
        if i > 0 {
            term *= 4.0 * (N + i - 1) as f64 * (N - i + 1) as f64 / ((2 * i) as f64 * (2 * i - 1) as f64);
        }
        acc += term;
        d[i] = N as f64 * acc;
    }
    let mut sum = 0.0;
    for k in 0..N {
        let t = (d[k] - d[N]) / ((k + 1) as f64).powf(s);
        sum += if k % 2 == 0 { t } else { -t };
    }
    -sum / d[N]
}

/// Dirichlet eta function `η(ν) = (1 - 2^{1-ν}) ζ(ν)`.
pub fn dirichlet_eta(nu: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    if nu == 1.0 {
        return Ok(LN_2);
    }
    Ok(-((1.0 - nu) * LN_2).exp_m1() * riemann_zeta(nu)?)
}

/// Dirichlet lambda function `λ(ν) = (1 - 2^{-ν}) ζ(ν)`.
pub fn dirichlet_lambda(nu: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    Ok(-(-nu * LN_2).exp_m1() * riemann_zeta(nu)?)
}

/// Dirichlet beta function `β(ν) = 4^{-ν} (ζ(ν, 1/4) - ζ(ν, 3/4))`.
pub fn dirichlet_beta(nu: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    if nu >= REFLECT_BELOW {
        return Ok(4f64.powf(-nu) * hurwitz_zeta_difference(nu, 0.25, 0.75)?);
    }
    // β(1-s) = (2/π)^s sin(πs/2) Γ(s) β(s)
    let s = 1.0 - nu;
    Ok((2.0 / PI).powf(s) * sinpi(s / 2.0) * gamma(s) * dirichlet_beta(s)?)
}

/// The special lattice sums with known closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    S1,
    S2a,
    S2b,
    S3a,
    S3b,
    S3c,
    S4,
    S6,
    S8,
}

impl CaseId {
    pub const ALL: [CaseId; 9] = [
        CaseId::S1,
        CaseId::S2a,
        CaseId::S2b,
        CaseId::S3a,
        CaseId::S3b,
        CaseId::S3c,
        CaseId::S4,
        CaseId::S6,
        CaseId::S8,
    ];

    /// Cases swept by default in the benchmark.
    pub const DEFAULT: [CaseId; 7] =
        [CaseId::S1, CaseId::S2a, CaseId::S2b, CaseId::S3a, CaseId::S3b, CaseId::S3c, CaseId::S4];

    pub fn name(self) -> &'static str {
        match self {
            CaseId::S1 => "S1",
            CaseId::S2a => "S2a",
            CaseId::S2b => "S2b",
            CaseId::S3a => "S3a",
            CaseId::S3b => "S3b",
            CaseId::S3c => "S3c",
            CaseId::S4 => "S4",
            CaseId::S6 => "S6",
            CaseId::S8 => "S8",
        }
    }

    pub fn case(self) -> AnalyticCase {
        AnalyticCase::new(self)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseId::ALL
            .iter()
            .copied()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

/// Lattice, shift and wave vector of a special case.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticCase {
    pub id: CaseId,
    pub dim: usize,
    /// Row-major generator matrix.
    pub matrix: Vec<f64>,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
}

fn diag(entries: &[f64]) -> Vec<f64> {
    let d = entries.len();
    let mut m = vec![0.0; d * d];
    for (i, e) in entries.iter().enumerate() {
        m[i * d + i] = *e;
    }
    m
}

impl AnalyticCase {
    pub fn new(id: CaseId) -> Self {
        let s2 = 2f64.sqrt();
        let (dim, matrix, x, y) = match id {
            CaseId::S1 => (1, vec![1.0], vec![-0.5], vec![0.0]),
            CaseId::S2a => (2, diag(&[1.0, 2.0]), vec![-1.0, -2.0], vec![0.0, 0.0]),
            CaseId::S2b => (2, vec![1.0, 0.5, 0.0, 3f64.sqrt() / 2.0], vec![0.0, 0.0], vec![0.0, 0.0]),
            CaseId::S3a => (3, diag(&[1.0, 1.0, 2.0]), vec![0.0, 0.0, -0.5], vec![0.5, 0.0, 0.0]),
            CaseId::S3b => (3, diag(&[6.0, 6.0, 6.0]), vec![-1.0; 3], vec![1.0 / 12.0; 3]),
            CaseId::S3c => (3, diag(&[2.0 * s2, 4.0, 2.0]), vec![0.0, -1.0, -1.0], vec![1.0 / (4.0 * s2), 0.0, 0.0]),
            CaseId::S4 => (4, diag(&[1.0; 4]), vec![0.5, 0.0, 0.0, 0.0], vec![0.0; 4]),
            CaseId::S6 => (6, diag(&[1.0; 6]), vec![0.0; 6], vec![0.5, 0.5, 0.0, 0.0, 0.0, 0.0]),
            CaseId::S8 => (8, diag(&[1.0; 8]), vec![0.0; 8], vec![0.5; 8]),
        };
        Self { id, dim, matrix, x, y }
    }

    pub fn lattice(&self) -> Lattice {
        Lattice::new(self.dim, &self.matrix).expect("special-case lattices are valid")
    }

    /// The closed-form value at order `nu`.
    pub fn value(&self, nu: f64) -> Result<f64> {
        analytic_value(self.id, nu)
    }
}

/// Closed-form value of a special case. Errors at the pole and where the formula is an
/// indeterminate product.
pub fn analytic_value(id: CaseId, nu: f64) -> Result<f64> {
    check_finite("nu", nu)?;
    let h = nu / 2.0;
    let v = match id {
        CaseId::S1 => 2.0 * hurwitz_zeta(nu, 0.5)?,
        CaseId::S2a => {
            2.0 * (1.0 - 2f64.powf(-h) + 2f64.powf(1.0 - nu)) * riemann_zeta(h)? * dirichlet_beta(h)?
        }
        CaseId::S2b => 3f64.powf(1.0 - h) * 2.0 * riemann_zeta(h)? * hurwitz_zeta_difference(h, 1.0 / 3.0, 2.0 / 3.0)?,
        CaseId::S3a => 4f64.powf(h) * dirichlet_beta(nu - 1.0)?,
        CaseId::S3b => 3f64.powf(-h) * dirichlet_beta(nu - 1.0)?,
        CaseId::S3c => 2f64.powf(1.0 - h) * dirichlet_beta(nu - 1.0)?,
        CaseId::S4 => {
            // λ(s) λ(s-1) = (1 - 2^{-s}) ζ(s - 1) η(s), finite at s = 1.
            let ll = -(-h * LN_2).exp_m1() * riemann_zeta(h - 1.0)? * dirichlet_eta(h)?;
            2f64.powf(nu) * (dirichlet_beta(h)? * dirichlet_beta(h - 1.0)? + ll)
        }
        CaseId::S6 => 4.0 * dirichlet_beta(h - 2.0)? * dirichlet_eta(h)?,
        CaseId::S8 => {
            if h == 1.0 {
                return Err(Error::Domain("closed form for S8 is indeterminate at nu = 2".into()));
            }
            -16.0 * dirichlet_eta(h - 3.0)? * riemann_zeta(h)?
        }
    };
    Ok(v)
}

/// Result of [`direct_sum_oracle`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectSum {
    pub value: Complex64,
    /// Rigorous bound on the omitted terms `|z - x| > radius`.
    pub tail_bound: f64,
    pub terms: u64,
}

/// Brute-force primed sum `Σ'_{|z - x| <= radius} e^{-2πi y·z} |z - x|^{-ν}`, for `ν > d`.
///
/// Fails with [`Error::InsufficientRadius`] if the tail bound exceeds `tolerance`.
pub fn direct_sum_oracle(nu: f64, lattice: &Lattice, x: &[f64], y: &[f64], radius: f64, tolerance: f64) -> Result<DirectSum> {
    let d = lattice.dim();
    check_finite("nu", nu)?;
    for v in [x, y] {
        if v.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: v.len() });
        }
    }
    check_finite_slice("x", x)?;
    check_finite_slice("y", y)?;
    let df = d as f64;
    if !(nu > df) {
        return Err(Error::Domain(format!("direct sum diverges for nu = {nu} <= d = {d}")));
    }
    let tail_bound = direct_tail_bound(nu, lattice, radius)?;
    if !(tail_bound <= tolerance) {
        return Err(Error::InsufficientRadius { bound: tail_bound, tolerance });
    }
    let mut acc = ComplexSum::new();
    let terms = lattice.visit_ball(x, radius, DEFAULT_POINT_CAP, |_, z| {
        let mut r2 = 0.0;
        let mut t = 0.0;
        for i in 0..d {
            let dz = z[i] - x[i];
            r2 += dz * dz;
            t += y[i] * z[i];
        }
        if r2 == 0.0 {
            return;
        }
        let f = t - t.round();
        let (s, c) = (2.0 * PI * f).sin_cos();
        acc.add(Complex64::new(c, -s) * r2.powf(-nu / 2.0));
    })?;
    Ok(DirectSum { value: acc.value(), tail_bound, terms })
}

/// `Σ_{|z - x| > R} |z - x|^{-ν} <= S_{d-1}/V ((R-ρ)/(R-2ρ))^{d-1} (R-2ρ)^{d-ν}/(ν-d)`,
/// where `ρ` is the circumradius of the fundamental cell `A [-1/2, 1/2]^d`.
pub fn direct_tail_bound(nu: f64, lattice: &Lattice, radius: f64) -> Result<f64> {
    let d = lattice.dim();
    let df = d as f64;
    let rho = cell_circumradius(lattice);
    if !(radius > 2.0 * rho) {
        return Err(Error::Domain(format!("radius {radius} must exceed the cell diameter {}", 2.0 * rho)));
    }
    let inner = radius - 2.0 * rho;
    Ok(sphere_area(d) / lattice.volume() * ((radius - rho) / inner).powf(df - 1.0) * inner.powf(df - nu) / (nu - df))
}

/// Largest distance from the centre of the cell `A [-1/2, 1/2]^d` to one of its corners.
fn cell_circumradius(lattice: &Lattice) -> f64 {
    let d = lattice.dim();
    let a = lattice.matrix();
    let mut best = 0.0f64;
    for mask in 0u32..(1 << d) {
        let mut r2 = 0.0;
        for i in 0..d {
            let c: f64 = (0..d).map(|j| if mask >> j & 1 == 1 { 0.5 } else { -0.5 } * a[i * d + j]).sum();
            r2 += c * c;
        }
        best = best.max(r2);
    }
    best.sqrt()
}
