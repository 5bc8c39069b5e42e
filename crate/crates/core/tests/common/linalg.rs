//! Dense linear algebra by textbook methods, for checking the library's factorisations.

/// Determinant by cofactor expansion along the first row.
pub fn det_cofactor(m: &[f64], d: usize) -> f64 {
    if d == 1 {
        return m[0];
    }
    let mut s = 0.0;
    for j in 0..d {
        let mut minor = Vec::with_capacity((d - 1) * (d - 1));
        for i in 1..d {
            for k in 0..d {
                if k != j {
                    minor.push(m[i * d + k]);
                }
            }
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * m[j] * det_cofactor(&minor, d - 1);
    }
    s
}

/// Number of eigenvalues of the symmetric `s` below `sigma`, from the inertia of `s - σI`.
fn count_below(s: &[f64], d: usize, sigma: f64) -> usize {
    let mut a: Vec<f64> = s.to_vec();
    for i in 0..d {
        a[i * d + i] -= sigma;
    }
    let mut neg = 0;
    for k in 0..d {
        let mut p = a[k * d + k];
        if p == 0.0 {
            p = 1e-300;
        }
        if p < 0.0 {
            neg += 1;
        }
        for i in k + 1..d {
            let f = a[i * d + k] / p;
            for j in k + 1..d {
                a[i * d + j] -= f * a[k * d + j];
            }
        }
    }
    neg
}

/// Eigenvalues of a symmetric matrix in ascending order, by bisection on the inertia.
pub fn symmetric_eigenvalues(s: &[f64], d: usize) -> Vec<f64> {
    let bound: f64 = (0..d)
        .map(|i| (0..d).map(|j| s[i * d + j].abs()).sum::<f64>())
        .fold(0.0, f64::max);
    (0..d)
        .map(|k| {
            let (mut lo, mut hi) = (-bound - 1.0, bound + 1.0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if count_below(s, d, mid) > k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}

/// `AᵀA` for a row-major square matrix.
pub fn gram(a: &[f64], d: usize) -> Vec<f64> {
    let mut g = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..d {
            g[i * d + j] = (0..d).map(|k| a[k * d + i] * a[k * d + j]).sum();
        }
    }
    g
}

/// 2-norm condition number via the eigenvalues of `AᵀA`.
pub fn condition_number(a: &[f64], d: usize) -> f64 {
    let ev = symmetric_eigenvalues(&gram(a, d), d);
    (ev[d - 1] / ev[0]).sqrt()
}
