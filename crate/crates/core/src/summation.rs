//! Compensated summation.
//!
//! Uses the Neumaier variant of Kahan's algorithm, which also recovers the
//! small terms when a later addend is larger than the running sum, with
//! independent compensation for real and imaginary parts.

use num_complex::Complex64;
use std::ops::AddAssign;

/// Neumaier-compensated accumulator for real numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl AddAssign<f64> for NeumaierSum {
    fn add_assign(&mut self, v: f64) {
        self.add(v);
    }
}

/// Compensated accumulator for complex numbers.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexSum {
    re: NeumaierSum,
    im: NeumaierSum,
}

impl ComplexSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: Complex64) {
        self.re.add(v.re);
        self.im.add(v.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

impl AddAssign<Complex64> for ComplexSum {
    fn add_assign(&mut self, v: Complex64) {
        self.add(v);
    }
}

/// Compensated sum of a sequence of complex terms. Empty input gives zero.
pub fn kahan_sum<I: IntoIterator<Item = Complex64>>(terms: I) -> Complex64 {
    let mut acc = ComplexSum::new();
    for t in terms {
        acc.add(t);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn recovers_cancelled_unit() {
        assert_eq!(kahan_sum([c(1e16), c(1.0), c(-1e16)]), c(1.0));
    }

    #[test]
    fn empty_is_zero() {
        assert_eq!(kahan_sum(std::iter::empty()), c(0.0));
    }

    #[test]
    fn single_term_is_exact() {
        let z = Complex64::new(0.1, -3.5e-300);
        assert_eq!(kahan_sum([z]), z);
    }

    #[test]
    fn imaginary_part_compensated_separately() {
        let i = |v: f64| Complex64::new(0.0, v);
        assert_eq!(kahan_sum([i(1e16), c(1e16), i(1.0), c(1.0), i(-1e16), c(-1e16)]), Complex64::new(1.0, 1.0));
    }

    #[test]
    fn many_tenths() {
        let n = 1_000_000;
        let s = kahan_sum(std::iter::repeat(c(0.1)).take(n));
        assert_eq!(s.re, 100000.0);
    }
}
