//! The delta family: closed forms, Eulerian numerators, parity parts and
//! pairings against test functions.

pub mod delta;
pub mod eulerian;
pub mod pairing;

pub use delta::{delta_coeffs, delta_parity_parts, fc_delta, w_delta_n, Parity, MAX_DELTA_ORDER};
pub use eulerian::{delta_polynomial, eulerian_table, DeltaPolynomial, EulerianTable};
pub use pairing::{pair, pairing_radius_cap, DeltaTerm, GeneralizedFunction, TestFunction};
