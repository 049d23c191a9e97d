//! Coefficient sequences and inner analytic functions on the open unit disk.

pub mod coefficients;
pub mod function;
pub mod limit;

pub use coefficients::{CoefficientJson, CoefficientSequence, Growth, Tail};
pub use function::{combine, make_series, InnerFunction};
pub use limit::{fourier_conjugate, recover_real, richardson, Limit, RadiusSchedule, EXCLUSION_WINDOW};
