//! Lattices `Λ = A Z^d` and enumeration of lattice points in balls.
//!
//! Matrices are stored row-major; the lattice is generated by the columns of `A`.

use crate::error::{check_finite, check_finite_slice, Error, Result};
use crate::linalg;

pub const MAX_DIM: usize = 10;

/// Default cap on the number of points a single enumeration may visit.
pub const DEFAULT_POINT_CAP: u64 = 100_000_000;

const MAX_CONDITION: f64 = 1e12;
// Above this conditioning the triangular pruning is not trusted and a plain box is walked instead.
const PRUNE_CONDITION_LIMIT: f64 = 1e4;

#[derive(Debug, Clone)]
pub struct Lattice {
    dim: usize,
    a: Vec<f64>,
    a_inv: Vec<f64>,
    det: f64,
    cond: f64,
    // A^T A = L^T L with L lower triangular, and Q = A L^{-1}.
    lower: Vec<f64>,
    q: Vec<f64>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.a == other.a
    }
}

impl Lattice {
    /// Builds a lattice from a row-major `dim x dim` generator matrix.
    pub fn new(dim: usize, row_major: &[f64]) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::UnsupportedDimension(dim));
        }
        if row_major.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, got: row_major.len() });
        }
        if row_major.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidLattice("matrix has non-finite entries".into()));
        }
        let a = row_major.to_vec();
        let det = linalg::determinant(&a, dim);
        if !(det.abs() >= 1e-300) || !det.is_finite() {
            return Err(Error::InvalidLattice(format!("singular generator matrix (det = {det:e})")));
        }
        let sv = linalg::singular_values(&a, dim);
        let cond = sv[0] / sv[dim - 1];
        if !(cond <= MAX_CONDITION) {
            return Err(Error::InvalidLattice(format!("condition number {cond:e} exceeds {MAX_CONDITION:e}")));
        }
        let a_inv = linalg::inverse(&a, dim)
            .ok_or_else(|| Error::InvalidLattice("generator matrix is not invertible".into()))?;
        let gram = linalg::mat_mul(&linalg::transpose(&a, dim), &a, dim);
        let (lower, q) = match linalg::reverse_cholesky(&gram, dim)
            .and_then(|l| linalg::inverse(&l, dim).map(|li| (l, li)))
        {
            Some((l, li)) => {
                let q = linalg::mat_mul(&a, &li, dim);
                (l, q)
            }
            None => (Vec::new(), Vec::new()),
        };
        Ok(Self { dim, a, a_inv, det, cond, lower, q })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = vec![0.0; dim * dim];
        for i in 0..dim {
            m[i * dim + i] = 1.0;
        }
        Self::new(dim, &m)
    }

    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        let d = entries.len();
        let mut m = vec![0.0; d * d];
        for (i, e) in entries.iter().enumerate() {
            m[i * d + i] = *e;
        }
        Self::new(d, &m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major generator matrix.
    pub fn matrix(&self) -> &[f64] {
        &self.a
    }

    /// Row-major inverse of the generator matrix.
    pub fn inverse_matrix(&self) -> &[f64] {
        &self.a_inv
    }

    pub fn determinant(&self) -> f64 {
        self.det
    }

    /// Volume of the fundamental cell, `|det A|`.
    pub fn volume(&self) -> f64 {
        self.det.abs()
    }

    /// Ratio of largest to smallest singular value of `A`.
    pub fn condition_number(&self) -> f64 {
        self.cond
    }

    /// Reciprocal lattice `A^{-T} Z^d`.
    pub fn dual(&self) -> Lattice {
        let m = linalg::transpose(&self.a_inv, self.dim);
        Lattice::new(self.dim, &m).expect("dual of a valid lattice is valid")
    }

    /// The lattice `s Λ`.
    pub fn scaled(&self, s: f64) -> Result<Lattice> {
        check_finite("scale", s)?;
        let m: Vec<f64> = self.a.iter().map(|v| v * s).collect();
        Lattice::new(self.dim, &m)
    }

    /// Lattice vector `A n`.
    pub fn point(&self, n: &[i64]) -> Vec<f64> {
        let nf: Vec<f64> = n.iter().map(|&k| k as f64).collect();
        let mut out = vec![0.0; self.dim];
        linalg::mat_vec(&self.a, self.dim, &nf, &mut out);
        out
    }

    /// Coordinates `A^{-1} v` of a vector in the lattice basis.
    pub fn coordinates(&self, v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        linalg::mat_vec(&self.a_inv, self.dim, v, &mut out);
        out
    }

    /// `v - A floor(A^{-1} v + 1/2)`: the representative of `v` in the centred fundamental cell.
    pub fn reduce(&self, v: &[f64]) -> Vec<f64> {
        let shift: Vec<i64> = self.coordinates(v).iter().map(|c| (c + 0.5).floor() as i64).collect();
        let p = self.point(&shift);
        v.iter().zip(&p).map(|(a, b)| a - b).collect()
    }

    /// True if every coordinate of `v` in the lattice basis is within `tol` of an integer.
    pub fn contains(&self, v: &[f64], tol: f64) -> bool {
        self.coordinates(v).iter().all(|c| (c - c.round()).abs() <= tol)
    }

    /// All lattice points `z` with `|z - center| <= r`, in lexicographic order of their
    /// integer coordinates.
    pub fn points_in_ball(&self, center: &[f64], r: f64) -> Result<Vec<Vec<f64>>> {
        let mut out = Vec::new();
        self.visit_ball(center, r, DEFAULT_POINT_CAP, |_, z| out.push(z.to_vec()))?;
        Ok(out)
    }

    /// Calls `f(n, z)` for every lattice point `z = A n` with `|z - center| <= r`, in
    /// lexicographic order of `n`. Returns the number of points visited.
    pub fn visit_ball<F: FnMut(&[i64], &[f64])>(&self, center: &[f64], r: f64, cap: u64, mut f: F) -> Result<u64> {
        let d = self.dim;
        if center.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: center.len() });
        }
        check_finite_slice("center", center)?;
        if !(r >= 0.0) || !r.is_finite() {
            return Err(Error::Domain(format!("radius must be finite and non-negative, got {r}")));
        }
        let estimate = ball_volume(d, r) / self.volume();
        if estimate > cap as f64 {
            return Err(Error::ResourceLimit { requested: estimate as u128, cap });
        }
        let mut walker = Walker {
            lat: self,
            center,
            r2: r * r,
            n: vec![0; d],
            z: vec![0.0; d],
            count: 0,
            cap,
        };
        if self.cond <= PRUNE_CONDITION_LIMIT && !self.lower.is_empty() {
            let mut c2 = vec![0.0; d];
            linalg::mat_t_vec(&self.q, d, center, &mut c2);
            let budget = r * r * (1.0 + 1e-10) + 1e-300;
            walker.pruned(0, budget, &c2, &mut f)?;
        } else {
            let c = self.coordinates(center);
            let mut lo = vec![0i64; d];
            let mut hi = vec![0i64; d];
            let mut boxed: u128 = 1;
            for i in 0..d {
                let row = &self.a_inv[i * d..(i + 1) * d];
                let w = row.iter().map(|v| v * v).sum::<f64>().sqrt() * r * (1.0 + 1e-10);
                lo[i] = (c[i] - w).ceil() as i64;
                hi[i] = (c[i] + w).floor() as i64;
                boxed = boxed.saturating_mul((hi[i] - lo[i] + 1).max(0) as u128);
            }
            if boxed > cap as u128 {
                return Err(Error::ResourceLimit { requested: boxed, cap });
            }
            walker.boxed(0, &lo, &hi, &mut f)?;
        }
        Ok(walker.count)
    }
}

struct Walker<'a> {
    lat: &'a Lattice,
    center: &'a [f64],
    r2: f64,
    n: Vec<i64>,
    z: Vec<f64>,
    count: u64,
    cap: u64,
}

impl Walker<'_> {
    fn leaf<F: FnMut(&[i64], &[f64])>(&mut self, f: &mut F) -> Result<()> {
        self.count += 1;
        if self.count > self.cap {
            return Err(Error::ResourceLimit { requested: self.count as u128, cap: self.cap });
        }
        let d = self.lat.dim;
        let mut dist2 = 0.0;
        for i in 0..d {
            let row = &self.lat.a[i * d..(i + 1) * d];
            let zi: f64 = row.iter().zip(&self.n).map(|(a, &k)| a * k as f64).sum();
            self.z[i] = zi;
            let t = zi - self.center[i];
            dist2 += t * t;
        }
        if dist2 <= self.r2 {
            f(&self.n, &self.z);
        }
        Ok(())
    }

    fn pruned<F: FnMut(&[i64], &[f64])>(&mut self, level: usize, budget: f64, c2: &[f64], f: &mut F) -> Result<()> {
        let d = self.lat.dim;
        let l = &self.lat.lower;
        let p: f64 = (0..level).map(|j| l[level * d + j] * self.n[j] as f64).sum::<f64>() - c2[level];
        let lii = l[level * d + level];
        let s = budget.max(0.0).sqrt();
        let lo = ((-p - s) / lii).ceil() as i64;
        let hi = ((-p + s) / lii).floor() as i64;
        for k in lo..=hi {
            self.n[level] = k;
            if level + 1 == d {
                self.leaf(f)?;
            } else {
                let t = lii * k as f64 + p;
                self.pruned(level + 1, budget - t * t, c2, f)?;
            }
        }
        Ok(())
    }

    fn boxed<F: FnMut(&[i64], &[f64])>(&mut self, level: usize, lo: &[i64], hi: &[i64], f: &mut F) -> Result<()> {
        for k in lo[level]..=hi[level] {
            self.n[level] = k;
            if level + 1 == self.lat.dim {
                self.leaf(f)?;
            } else {
                self.boxed(level + 1, lo, hi, f)?;
            }
        }
        Ok(())
    }
}

/// Volume of the d-dimensional ball of radius r.
pub(crate) fn ball_volume(d: usize, r: f64) -> f64 {
    let h = d as f64 / 2.0;
    std::f64::consts::PI.powf(h) / libm::tgamma(h + 1.0) * r.powi(d as i32)
}

/// Surface area of the unit sphere in R^d.
pub(crate) fn sphere_area(d: usize) -> f64 {
    let h = d as f64 / 2.0;
    2.0 * std::f64::consts::PI.powf(h) / libm::tgamma(h)
}
