//! Real functions, singular distributions and the Dirichlet problem on the
//! unit circle, represented by analytic functions on the open unit disk.
//!
//! A function `f` on the circle with Fourier coefficients `alpha_k, beta_k`
//! corresponds to `w(z) = c0 + sum_k c_k z^k` with `c_k = alpha_k - i beta_k`;
//! `f` is the limit of `Re w` as `|z| -> 1`. The Dirac delta and its
//! derivatives correspond to rational functions with a pole on the circle.
//!
//! ```
//! use inner_analytic::{CirclePoint, InnerFunction, RadiusSchedule, recover_real};
//!
//! let delta = InnerFunction::delta(0, CirclePoint::new(0.0)).unwrap();
//! let away = recover_real(&delta, CirclePoint::new(2.0), &RadiusSchedule::default()).unwrap();
//! assert!(away.value.abs() < 1e-10);
//! ```

pub mod chains;
pub mod cli;
pub mod corpus;
pub mod dirichlet;
pub mod error;
pub mod expr;
pub mod fourier;
pub mod inner;
pub mod io;
pub mod point;
pub mod singular;

pub use chains::{
    chain_element, classify_chain, log_derivative, log_primitive, theta_derivative, theta_integral, theta_primitive,
    ChainClass, ChainIndex,
};
pub use dirichlet::{
    harmonic_conjugate, laplace_residual, poisson_integral, solve, BoundaryCondition, HarmonicField, LaplaceGrid,
    PolarField,
};
pub use error::{Error, Result};
pub use fourier::{coefficients, extended_coefficients, shift_coefficients, zero_average, PrimitiveStack, RealSampler};
pub use inner::{
    combine, fourier_conjugate, make_series, recover_real, CoefficientSequence, Growth, InnerFunction, Limit,
    RadiusSchedule,
};
pub use point::{CirclePoint, DiskPoint};
pub use singular::{
    delta_coeffs, delta_parity_parts, delta_polynomial, eulerian_table, fc_delta, pair, w_delta_n, DeltaTerm,
    EulerianTable, GeneralizedFunction, Parity, TestFunction,
};
