pub mod applications;
pub mod benchmark;
pub mod crandall;
pub mod error;
pub mod ffi;
pub mod incomplete_gamma;
pub mod lattice;
pub mod reference;
pub mod summation;
pub mod truncation;
pub mod zeta;

mod gamma_tables;
mod linalg;

pub use error::{Error, Result};
pub use lattice::Lattice;
pub use num_complex::Complex64;
pub use reference::{analytic_value, direct_sum_oracle, AnalyticCase, CaseId};
pub use truncation::TruncationPlan;
pub use zeta::{epstein_zeta, epstein_zeta_reg, EpsteinOptions, EpsteinQuery, Evaluation};
