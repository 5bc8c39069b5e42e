//! Shared inputs for the benchmarks.

use epstein::Lattice;

/// A lattice, shift and wave vector to evaluate at.
pub struct Fixture {
    pub name: &'static str,
    pub lattice: Lattice,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub nu: f64,
}

pub fn fixtures() -> Vec<Fixture> {
    let s3 = 3f64.sqrt();
    vec![
        Fixture {
            name: "madelung_3d",
            lattice: Lattice::identity(3).unwrap(),
            x: vec![0.0; 3],
            y: vec![0.5; 3],
            nu: 1.0,
        },
        Fixture {
            name: "hexagonal_2d",
            lattice: Lattice::new(2, &[1.0, 0.5, 0.0, s3 / 2.0]).unwrap(),
            x: vec![0.1, -0.23],
            y: vec![0.31, 0.07],
            nu: 2.5,
        },
        Fixture {
            name: "cubic_4d",
            lattice: Lattice::identity(4).unwrap(),
            x: vec![0.5, 0.0, 0.0, 0.0],
            y: vec![0.0; 4],
            nu: 3.3,
        },
    ]
}

/// One `(a, x)` point inside each region of the incomplete gamma evaluation.
pub const GAMMA_POINTS: [(&str, f64, f64); 5] = [
    ("p_series", 2.5, 1.0),
    ("q_series", 0.3, 1.2),
    ("temme", 40.0, 42.0),
    ("negative_recurrence", -4.7, 0.8),
    ("continued_fraction", 1.5, 7.0),
];
