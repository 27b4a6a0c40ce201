//! Exact q-series arithmetic and a verification harness for Gordon-type
//! partition identities with a mod-`d` multiplicity condition,
//! for regular partitions and overpartitions.
//!
//! - [`series`]: truncated power series in `q` and in `(x, q)`, Pochhammer
//!   symbols and triple products.
//! - [`partition`]: frequency encodings, the `rho`/`V` statistics, brute-force
//!   and pruned enumeration, and every partition counter.
//! - [`lemma`]: the closed-form `alpha`/`beta`/`G` series, their functional
//!   equations, the recurrence-built `F`, and the `x = 1` product evaluation.
//! - [`suite`]: parameter sweeps producing [`report::CheckReport`]s.

pub mod error;
pub mod lemma;
pub mod partition;
pub mod report;
pub mod series;
pub mod suite;

pub use error::{Error, Result};
