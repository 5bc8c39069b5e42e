//! Dense helpers for the small (d <= 10) row-major matrices used by `Lattice`.

/// `out = M v`.
#[inline]
pub(crate) fn mat_vec(m: &[f64], d: usize, v: &[f64], out: &mut [f64]) {
    for i in 0..d {
        let row = &m[i * d..(i + 1) * d];
        out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
    }
}

/// `out = M^T v`.
#[inline]
pub(crate) fn mat_t_vec(m: &[f64], d: usize, v: &[f64], out: &mut [f64]) {
    for j in 0..d {
        out[j] = (0..d).map(|i| m[i * d + j] * v[i]).sum();
    }
}

pub(crate) fn mat_mul(a: &[f64], b: &[f64], d: usize) -> Vec<f64> {
    let mut c = vec![0.0; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            for j in 0..d {
                c[i * d + j] += aik * b[k * d + j];
            }
        }
    }
    c
}

pub(crate) fn transpose(m: &[f64], d: usize) -> Vec<f64> {
    let mut t = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..d {
            t[j * d + i] = m[i * d + j];
        }
    }
    t
}

/// LU factorisation with partial pivoting. Returns (lu, perm, sign) or None if singular.
fn lu(m: &[f64], d: usize) -> Option<(Vec<f64>, Vec<usize>, f64)> {
    let mut a = m.to_vec();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut sign = 1.0;
    for k in 0..d {
        let p = (k..d)
            .max_by(|&i, &j| a[i * d + k].abs().total_cmp(&a[j * d + k].abs()))
            .unwrap();
        if a[p * d + k] == 0.0 {
            return None;
        }
        if p != k {
            for j in 0..d {
                a.swap(k * d + j, p * d + j);
            }
            perm.swap(k, p);
            sign = -sign;
        }
        let piv = a[k * d + k];
        for i in k + 1..d {
            let f = a[i * d + k] / piv;
            a[i * d + k] = f;
            for j in k + 1..d {
                a[i * d + j] -= f * a[k * d + j];
            }
        }
    }
    Some((a, perm, sign))
}

pub(crate) fn determinant(m: &[f64], d: usize) -> f64 {
    match lu(m, d) {
        Some((a, _, sign)) => sign * (0..d).map(|i| a[i * d + i]).product::<f64>(),
        None => 0.0,
    }
}

pub(crate) fn inverse(m: &[f64], d: usize) -> Option<Vec<f64>> {
    let (a, perm, _) = lu(m, d)?;
    let mut inv = vec![0.0; d * d];
    let mut col = vec![0.0; d];
    for j in 0..d {
        for i in 0..d {
            col[i] = if perm[i] == j { 1.0 } else { 0.0 };
        }
        for i in 0..d {
            for k in 0..i {
                col[i] -= a[i * d + k] * col[k];
            }
        }
        for i in (0..d).rev() {
            for k in i + 1..d {
                col[i] -= a[i * d + k] * col[k];
            }
            col[i] /= a[i * d + i];
        }
        for i in 0..d {
            inv[i * d + j] = col[i];
        }
    }
    Some(inv)
}

/// Singular values by one-sided Jacobi (Hestenes), descending.
pub(crate) fn singular_values(m: &[f64], d: usize) -> Vec<f64> {
    // Work on columns of a copy.
    let mut u = m.to_vec();
    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..d {
            for q in p + 1..d {
                let (mut alpha, mut beta, mut gamma) = (0.0, 0.0, 0.0);
                for i in 0..d {
                    let up = u[i * d + p];
                    let uq = u[i * d + q];
                    alpha += up * up;
                    beta += uq * uq;
                    gamma += up * uq;
                }
                if gamma == 0.0 {
                    continue;
                }
                off = off.max(gamma.abs() / (alpha * beta).sqrt());
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for i in 0..d {
                    let up = u[i * d + p];
                    let uq = u[i * d + q];
                    u[i * d + p] = c * up - s * uq;
                    u[i * d + q] = s * up + c * uq;
                }
            }
        }
        if off < 1e-15 {
            break;
        }
    }
    let mut sv: Vec<f64> = (0..d)
        .map(|j| (0..d).map(|i| u[i * d + j] * u[i * d + j]).sum::<f64>().sqrt())
        .collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Lower-triangular L with M = L^T L for symmetric positive definite M.
pub(crate) fn reverse_cholesky(m: &[f64], d: usize) -> Option<Vec<f64>> {
    let mut l = vec![0.0; d * d];
    for i in (0..d).rev() {
        let s: f64 = (i + 1..d).map(|k| l[k * d + i] * l[k * d + i]).sum();
        let diag = m[i * d + i] - s;
        if !(diag > 0.0) {
            return None;
        }
        let lii = diag.sqrt();
        l[i * d + i] = lii;
        for j in 0..i {
            let s: f64 = (i + 1..d).map(|k| l[k * d + i] * l[k * d + j]).sum();
            l[i * d + j] = (m[i * d + j] - s) / lii;
        }
    }
    Some(l)
}
