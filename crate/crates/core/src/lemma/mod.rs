//! The closed-form `(x, q)`-series side: the `alpha`/`beta` terms, their
//! sum `G`, the functional equations they satisfy, the recurrence-built `F`,
//! and the `x = 1` evaluation against triple products.

pub mod displays;
pub mod f;
pub mod g;
pub mod products;
pub mod terms;

pub use displays::{
    display_sides, g_equation_sides, required_trunc, verify_alpha_beta_recurrences, verify_g_equations,
    verify_term_initial, Display, Variant,
};
pub use f::{enumerated_f, f_from_recurrence, RecurrenceTable};
pub use g::{g_scaled, g_series, summation_limit, GParams};
pub use products::{bridging_sides, g_at_one_products, product_form, theta, Form, Laurent, ProductEvaluation};
pub use terms::{alpha, alpha_beta, beta, scaled_term, Kind, SeriesParams};

use crate::error::Result;
use crate::partition::Flavor;
use crate::report::{Mismatch, Params};
use crate::series::BiSeries;

/// First coefficient where two series differ, as a report mismatch.
pub fn compare(lhs: &BiSeries, rhs: &BiSeries) -> Result<Option<Mismatch>> {
    Ok(lhs
        .first_difference(rhs)?
        .map(|(m, j)| Mismatch::new(m as i64, j, lhs.coeff(m, j), rhs.coeff(m, j))))
}

pub(crate) fn params(k: i64, a: Option<i64>, d: i64, s: i64, flavor: Flavor, x_order: usize, trunc: i64) -> Params {
    Params {
        k,
        a,
        d,
        s,
        flavor,
        trunc_x: x_order,
        trunc_n: trunc,
    }
}
