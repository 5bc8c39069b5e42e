//! C ABI over the two evaluation entry points. Errors, including poles, come back as NaN.

use crate::lattice::Lattice;
use crate::zeta;
use num_complex::Complex64;
use std::slice;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsteinComplex {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for EpsteinComplex {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

const NAN: EpsteinComplex = EpsteinComplex { re: f64::NAN, im: f64::NAN };

/// Slice-based form of the C entry points: `a` is the row-major `dim × dim` generator matrix.
pub fn epstein_zeta_flat(nu: f64, dim: usize, a: &[f64], x: &[f64], y: &[f64], regularised: bool) -> Complex64 {
    let run = || -> crate::Result<Complex64> {
        let lattice = Lattice::new(dim, a)?;
        if regularised {
            zeta::epstein_zeta_reg(nu, &lattice, x, y)
        } else {
            zeta::epstein_zeta(nu, &lattice, x, y)
        }
    };
    run().unwrap_or(Complex64::new(f64::NAN, f64::NAN))
}

unsafe fn call(nu: f64, dim: usize, a: *const f64, x: *const f64, y: *const f64, regularised: bool) -> EpsteinComplex {
    if a.is_null() || x.is_null() || y.is_null() || dim == 0 || dim > crate::lattice::MAX_DIM {
        return NAN;
    }
    let a = slice::from_raw_parts(a, dim * dim);
    let x = slice::from_raw_parts(x, dim);
    let y = slice::from_raw_parts(y, dim);
    epstein_zeta_flat(nu, dim, a, x, y, regularised).into()
}

/// # Safety
/// `a` must point to `dim * dim` doubles, `x` and `y` to `dim` doubles each.
#[no_mangle]
pub unsafe extern "C" fn epstein_zeta(nu: f64, dim: usize, a: *const f64, x: *const f64, y: *const f64) -> EpsteinComplex {
    call(nu, dim, a, x, y, false)
}

/// # Safety
/// As for [`epstein_zeta`].
#[no_mangle]
pub unsafe extern "C" fn epstein_zeta_reg(nu: f64, dim: usize, a: *const f64, x: *const f64, y: *const f64) -> EpsteinComplex {
    call(nu, dim, a, x, y, true)
}
