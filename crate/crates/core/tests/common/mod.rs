//! Oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

pub mod dd;
pub mod linalg;
pub mod special;

use epstein::{Complex64, Lattice};
use rand::Rng;

/// `min(|a - b|, |a - b| / |b|)`.
pub fn err(a: f64, b: f64) -> f64 {
    let d = (a - b).abs();
    d.min(d / b.abs())
}

pub fn cerr(a: Complex64, b: Complex64) -> f64 {
    let d = (a - b).norm();
    d.min(d / b.norm())
}

/// Random generator matrix with condition number at most `max_kappa`, rescaled to volume near 1.
pub fn random_lattice<R: Rng>(rng: &mut R, d: usize, max_kappa: f64) -> Lattice {
    loop {
        let mut m = vec![0.0; d * d];
        for i in 0..d {
            for j in 0..d {
                m[i * d + j] = if i == j { 1.0 } else { 0.0 } + rng.gen_range(-0.35..0.35);
            }
        }
        let det = linalg::det_cofactor(&m, d);
        if det.abs() < 0.2 {
            continue;
        }
        let s = det.abs().powf(-1.0 / d as f64);
        let m: Vec<f64> = m.iter().map(|v| v * s).collect();
        let l = Lattice::new(d, &m).unwrap();
        if l.condition_number() <= max_kappa {
            return l;
        }
    }
}

pub fn random_vector<R: Rng>(rng: &mut R, d: usize, half_width: f64) -> Vec<f64> {
    (0..d).map(|_| rng.gen_range(-half_width..half_width)).collect()
}
