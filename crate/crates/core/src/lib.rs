//! Exact generation of Adomian polynomials.
//!
//! `A_m = Σ_k Z_{m,k}(u_1, …, u_{m-k+1}) F^(k)(u_0)`, where the reduced
//! polynomials `Z_{m,k}` are independent of the nonlinearity `F` and are
//! built from the nonnegative solutions of
//!
//! ```text
//! n_1 + n_2 + … + n_{m-k+1}        = k
//! n_1 + 2 n_2 + … + (m-k+1) n_{m-k+1} = m
//! ```
//!
//! The crate enumerates those solutions ([`diophantine`]), turns them into
//! rational-coefficient polynomials ([`reduced`]), assembles and evaluates
//! `A_m` ([`adomian`]), and drives a truncated power series decomposition
//! solver for the undamped pendulum ([`adm_series`]).

pub mod adm_series;
pub mod adomian;
pub mod cli;
pub mod diophantine;
mod error;
pub mod oracle;
pub mod reduced;
pub mod series;

pub use error::{Error, Result};

/// Exact rational number used for every symbolic coefficient.
pub type Rational = num::BigRational;
