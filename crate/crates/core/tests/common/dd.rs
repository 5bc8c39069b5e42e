//! Double-double arithmetic: an unevaluated sum `hi + lo` carrying about 32 digits.

use std::cmp::Ordering;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DD {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: DD = DD { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub const LN2: DD = DD { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
pub const EULER: DD = DD { hi: 0.5772156649015329, lo: -4.942915152430645e-18 };
pub const HALF_LN_2PI: DD = DD { hi: 0.9189385332046728, lo: -3.8782941580672414e-17 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DD {
    pub const ZERO: DD = DD { hi: 0.0, lo: 0.0 };
    pub const ONE: DD = DD { hi: 1.0, lo: 0.0 };

    pub fn new(v: f64) -> Self {
        DD { hi: v, lo: 0.0 }
    }

    /// `p / q` for integers exactly representable in f64.
    pub fn ratio(p: f64, q: f64) -> Self {
        DD::new(p) / DD::new(q)
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn powi(self, n: i32) -> Self {
        if n < 0 {
            return DD::ONE / self.powi(-n);
        }
        let mut r = DD::ONE;
        let mut b = self;
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                r = r * b;
            }
            b = b * b;
            k >>= 1;
        }
        r
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return DD::ZERO;
        }
        let x = DD::new(self.hi.sqrt());
        // one Newton step in double-double
        x + (self - x * x) / (x * 2.0)
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.0 {
            return DD::new(f64::INFINITY);
        }
        if self.hi < -745.0 {
            return DD::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2 * k;
        // e^r - 1 from a short Taylor series at r / 16, then doubled via e^{2t} - 1 = m (m + 2)
        let s = r / 16.0;
        let mut term = s;
        let mut m = s;
        for n in 2..30 {
            term = term * s / n as f64;
            m = m + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        for _ in 0..4 {
            m = m * (m + 2.0);
        }
        (m + 1.0) * 2f64.powi(k as i32)
    }

    pub fn ln(self) -> Self {
        assert!(self.hi > 0.0, "ln of non-positive {self:?}");
        let mut x = DD::new(self.hi.ln());
        for _ in 0..2 {
            x = x + self * (-x).exp() - DD::ONE;
        }
        x
    }

    /// `self^p` for positive `self`.
    pub fn pow(self, p: DD) -> Self {
        (self.ln() * p).exp()
    }

    /// `sin(π self)`.
    pub fn sinpi(self) -> Self {
        // reduce to [-1, 1]
        let n = (self.hi / 2.0).round();
        let mut r = self - DD::new(2.0 * n);
        let mut sign = 1.0;
        if r.hi < 0.0 {
            r = -r;
            sign = -1.0;
        }
        if r.hi > 0.5 {
            r = DD::ONE - r;
        }
        let x = PI * r;
        let x2 = x * x;
        let mut term = x;
        let mut sum = x;
        for n in 1..40 {
            term = -(term * x2) / ((2 * n) as f64 * (2 * n + 1) as f64);
            sum = sum + term;
            if term.hi.abs() < 1e-36 {
                break;
            }
        }
        sum * sign
    }

    /// `cos(π self)`.
    pub fn cospi(self) -> Self {
        (self + DD::new(0.5)).sinpi()
    }
}

impl From<f64> for DD {
    fn from(v: f64) -> Self {
        DD::new(v)
    }
}

impl Neg for DD {
    type Output = DD;
    fn neg(self) -> DD {
        DD { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for DD {
    type Output = DD;
    fn add(self, o: DD) -> DD {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DD { hi, lo }
    }
}

impl Sub for DD {
    type Output = DD;
    fn sub(self, o: DD) -> DD {
        self + (-o)
    }
}

impl Mul for DD {
    type Output = DD;
    fn mul(self, o: DD) -> DD {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }
}

impl Div for DD {
    type Output = DD;
    fn div(self, o: DD) -> DD {
        let q1 = self.hi / o.hi;
        let r = self - o * q1;
        let q2 = r.hi / o.hi;
        let r = r - o * q2;
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DD { hi, lo } + DD::new(q3)
    }
}

impl Add<f64> for DD {
    type Output = DD;
    fn add(self, o: f64) -> DD {
        self + DD::new(o)
    }
}

impl Sub<f64> for DD {
    type Output = DD;
    fn sub(self, o: f64) -> DD {
        self - DD::new(o)
    }
}

impl Mul<f64> for DD {
    type Output = DD;
    fn mul(self, o: f64) -> DD {
        self * DD::new(o)
    }
}

impl Div<f64> for DD {
    type Output = DD;
    fn div(self, o: f64) -> DD {
        self / DD::new(o)
    }
}

impl PartialOrd for DD {
    fn partial_cmp(&self, o: &DD) -> Option<Ordering> {
        match self.hi.partial_cmp(&o.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&o.lo),
            c => c,
        }
    }
}
