//! Exact truncated formal power series.
//!
//! Two carriers are provided:
//! - [`PowerSeries`]: univariate in `q`, coefficients of `q^0..=q^N`.
//! - [`BiSeries`]: bivariate in `(x, q)`, coefficients of `x^m q^j` for
//!   `0 <= m <= X` and `q_offset <= j <= N`, where `q_offset` may be negative.
//!
//! Both are dense. Binary operations demand identical truncation orders and
//! return [`Error::Config`](crate::Error::Config) otherwise; nothing is ever
//! re-truncated silently. Coefficients are arbitrary-precision integers.
//!
//! q-Pochhammer symbols and the Jacobi triple product live in [`poch`].

mod bi;
pub mod export;
pub mod poch;
mod power;

pub use bi::BiSeries;
pub use poch::{poch_finite, poch_inf, triple_product, Monomial};
pub use power::PowerSeries;

/// Exact series coefficient.
pub type Coefficient = num_bigint::BigInt;
