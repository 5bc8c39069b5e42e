//! Special functions in double-double arithmetic, written independently of the library.

use super::dd::{DD, EULER, HALF_LN_2PI, LN2, PI};

/// `B_{2k}` for `k = 1..=15` as numerator / denominator.
const BERNOULLI: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

fn bernoulli(k: usize) -> DD {
    let (p, q) = BERNOULLI[k - 1];
    DD::ratio(p, q)
}

fn is_nonpositive_integer(a: f64) -> bool {
    a <= 0.0 && a == a.floor()
}

/// `ln Γ(z)` for `z >= 40` by Stirling's series.
fn ln_gamma_large(z: DD) -> DD {
    let mut s = (z - 0.5) * z.ln() - z + HALF_LN_2PI;
    let zi = DD::ONE / z;
    let zi2 = zi * zi;
    let mut p = zi;
    for k in 1..=12 {
        s = s + bernoulli(k) / ((2 * k) as f64 * (2 * k - 1) as f64) * p;
        p = p * zi2;
    }
    s
}

/// `Γ(a)` for `a` not a non-positive integer.
pub fn gamma(a: f64) -> DD {
    assert!(!is_nonpositive_integer(a), "gamma pole at {a}");
    let shift = (40.0 - a).ceil().max(0.0) as usize;
    let mut prod = DD::ONE;
    for j in 0..shift {
        prod = prod * (DD::new(a) + j as f64);
    }
    ln_gamma_large(DD::new(a) + shift as f64).exp() / prod
}

/// `1 / Γ(a)`, zero at the poles.
pub fn rgamma(a: f64) -> DD {
    if is_nonpositive_integer(a) {
        DD::ZERO
    } else {
        DD::ONE / gamma(a)
    }
}

/// `x^a e^{-x} Σ x^n / (a (a+1) … (a+n))`, the continuation of the lower function.
fn lower_series(a: f64, x: f64) -> DD {
    let xd = DD::new(x);
    let mut term = DD::ONE / a;
    let mut sum = term;
    for n in 1..2000 {
        term = term * xd / (DD::new(a) + n as f64);
        sum = sum + term;
        if term.abs().hi < 1e-34 * sum.abs().hi {
            break;
        }
    }
    sum * (xd.ln() * a - xd).exp()
}

/// Legendre continued fraction for `Γ(a, x)`, modified Lentz.
fn upper_cf(a: f64, x: f64) -> DD {
    let tiny = DD::new(1e-300);
    let xd = DD::new(x);
    let mut b = xd + 1.0 - a;
    let mut c = DD::ONE / tiny;
    let mut d = DD::ONE / b;
    let mut h = d;
    for i in 1..20000 {
        let an = -(DD::new(i as f64) * (DD::new(i as f64) - a));
        b = b + 2.0;
        d = an * d + b;
        if d.abs().hi < 1e-300 {
            d = tiny;
        }
        c = b + an / c;
        if c.abs().hi < 1e-300 {
            c = tiny;
        }
        d = DD::ONE / d;
        let delta = d * c;
        h = h * delta;
        if (delta - 1.0).abs().hi < 1e-32 {
            break;
        }
    }
    (xd.ln() * a - xd).exp() * h
}

/// `E_1(x) = -γ - ln x - Σ (-x)^n / (n n!)`, for small `x`.
fn e1_series(x: f64) -> DD {
    let xd = DD::new(x);
    let mut term = DD::ONE;
    let mut sum = DD::ZERO;
    for n in 1..400 {
        term = -(term * xd) / n as f64;
        let t = term / n as f64;
        sum = sum + t;
        if t.abs().hi < 1e-36 {
            break;
        }
    }
    -EULER - xd.ln() - sum
}

/// Upper incomplete gamma `Γ(a, x)` for real `a` and `x > 0`.
pub fn upper_gamma(a: f64, x: f64) -> DD {
    assert!(x > 0.0);
    if x >= 2.0 && x >= a + 1.0 {
        return upper_cf(a, x);
    }
    if !is_nonpositive_integer(a) {
        return gamma(a) - lower_series(a, x);
    }
    // Γ(-m, x) = ((-1)^m / m!) (E_1(x) - e^{-x} Σ_{k<m} (-1)^k k! / x^{k+1})
    let m = (-a) as usize;
    let xd = DD::new(x);
    let mut s = DD::ZERO;
    let mut fact = DD::ONE;
    for k in 0..m {
        if k > 0 {
            fact = fact * k as f64;
        }
        let t = fact / xd.powi(k as i32 + 1);
        s = if k % 2 == 0 { s + t } else { s - t };
    }
    let mut mfact = DD::ONE;
    for j in 1..=m {
        mfact = mfact * j as f64;
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    (e1_series(x) - (-xd).exp() * s) / mfact * sign
}

/// Tricomi's `γ*(a, x) = e^{-x} Σ x^n / Γ(a + n + 1)`.
pub fn gamma_star(a: f64, x: f64) -> DD {
    let xd = DD::new(x);
    let (start, mut r) = if is_nonpositive_integer(a + 1.0) {
        let m = (-a) as usize;
        (m, DD::ONE)
    } else {
        (0, rgamma(a + 1.0))
    };
    let mut p = xd.powi(start as i32);
    let mut sum = DD::ZERO;
    let mut n = start;
    loop {
        let t = p * r;
        sum = sum + t;
        if n > start + 5 && (n as f64) > x && t.abs().hi < 1e-34 * sum.abs().hi {
            break;
        }
        n += 1;
        p = p * xd;
        r = r / (DD::new(a) + n as f64);
        if n > 5000 {
            break;
        }
    }
    (-xd).exp() * sum
}

/// Hurwitz zeta in double-double: Euler-Maclaurin for `s >= 1/2`, and Hurwitz's formula
/// for rational `a` below.
pub fn hurwitz(s: f64, a: f64) -> DD {
    assert!(s != 1.0 && a > 0.0);
    if s >= 0.5 {
        return hurwitz_em(s, a);
    }
    if s == 0.0 {
        return DD::new(0.5) - a;
    }
    let mut a0 = a;
    let mut head = DD::ZERO;
    while a0 > 1.0 {
        a0 -= 1.0;
        head = head + DD::new(a0).pow(DD::new(-s));
    }
    let (p, q) = (1..=1000u64)
        .find_map(|q| {
            let p = (a0 * q as f64).round();
            (p / q as f64 == a0).then_some((p as u64, q))
        })
        .expect("rational shift");
    // ζ(1 - t, p/q) = 2Γ(t)/(2πq)^t Σ_j cos(πt/2 - 2πjp/q) ζ(t, j/q)
    let t = 1.0 - s;
    let mut acc = DD::ZERO;
    for j in 1..=q {
        let arg = DD::new(t) / 2.0 - DD::ratio((2 * j * p) as f64, q as f64);
        acc = acc + arg.cospi() * hurwitz_em(t, j as f64 / q as f64);
    }
    let scale = (PI * (2.0 * q as f64)).pow(DD::new(-t));
    gamma(t) * scale * acc * 2.0 - head
}

fn hurwitz_em(s: f64, a: f64) -> DD {
    let target = 60f64.max(3.0 * s.abs());
    let n = (target - a).ceil().max(0.0) as usize;
    let sd = DD::new(s);
    let mut sum = DD::ZERO;
    for k in (0..n).rev() {
        sum = sum + (DD::new(a) + k as f64).pow(-sd);
    }
    let w = DD::new(a) + n as f64;
    let wl = w.ln();
    sum = sum + (wl * (1.0 - s)).exp() / (s - 1.0) + (wl * -s).exp() * 0.5;
    // Σ_j B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}
    let mut poch = sd;
    let mut fact = DD::new(2.0);
    let mut wp = (wl * (-s - 1.0)).exp();
    let wi2 = DD::ONE / (w * w);
    for j in 1..=15 {
        sum = sum + bernoulli(j) / fact * poch * wp;
        let m = (2 * j - 1) as f64;
        poch = poch * (sd + m) * (sd + m + 1.0);
        fact = fact * ((2 * j + 1) as f64) * ((2 * j + 2) as f64);
        wp = wp * wi2;
    }
    sum
}

pub fn zeta(s: f64) -> DD {
    hurwitz(s, 1.0)
}

pub fn beta(s: f64) -> DD {
    if s == 1.0 {
        return PI / 4.0;
    }
    (hurwitz(s, 0.25) - hurwitz(s, 0.75)) * (LN2 * (-2.0 * s)).exp()
}

pub fn eta(s: f64) -> DD {
    (DD::ONE - (LN2 * (1.0 - s)).exp()) * zeta(s)
}

pub fn lambda(s: f64) -> DD {
    (DD::ONE - (LN2 * -s).exp()) * zeta(s)
}

/// Cohen-Villegas-Zagier acceleration of `Σ_{k>=0} (-1)^k a_k`.
pub fn alternating_sum(n: usize, a: impl Fn(usize) -> DD) -> DD {
    let mut d = (DD::new(3.0) + DD::new(8.0).sqrt()).powi(n as i32);
    d = (d + DD::ONE / d) * 0.5;
    let mut b = DD::new(-1.0);
    let mut c = -d;
    let mut s = DD::ZERO;
    let nf = n as f64;
    for k in 0..n {
        c = b - c;
        s = s + c * a(k);
        let kf = k as f64;
        b = b * ((kf + nf) * (kf - nf)) / ((kf + 0.5) * (kf + 1.0));
    }
    s / d
}

/// `β(s) = Σ (-1)^k (2k+1)^{-s}` by the accelerated alternating series, `s > 0`.
pub fn beta_alternating(s: f64) -> DD {
    alternating_sum(45, |k| DD::new((2 * k + 1) as f64).pow(DD::new(-s)))
}

/// `η(s) = Σ (-1)^k (k+1)^{-s}` by the accelerated alternating series, `s > 0`.
pub fn eta_alternating(s: f64) -> DD {
    alternating_sum(45, |k| DD::new((k + 1) as f64).pow(DD::new(-s)))
}
