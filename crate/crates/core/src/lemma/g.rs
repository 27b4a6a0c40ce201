use super::terms::{scaled_term, Kind, SeriesParams};
use crate::error::Result;
use crate::partition::Flavor;
use crate::series::BiSeries;

/// Parameters of one `G^s_{k,a}`; `a` may be any integer here, since the
/// functional equations reach indices outside `1..=k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GParams {
    pub k: i64,
    pub a: i64,
    pub d: i64,
    pub s: i64,
    pub flavor: Flavor,
}

impl GParams {
    pub fn new(k: i64, a: i64, d: i64, s: i64, flavor: Flavor) -> Self {
        Self {
            k,
            a,
            d,
            s: s.rem_euclid(d),
            flavor,
        }
    }

    fn term(&self, n: i64) -> SeriesParams {
        SeriesParams::new(self.k, self.d, self.s, n, self.flavor)
    }

    pub fn with_a(self, a: i64) -> Self {
        Self { a, ..self }
    }

    pub fn with_s(self, s: i64) -> Self {
        Self::new(self.k, self.a, self.d, s, self.flavor)
    }
}

/// Number of summation indices that can contribute to `x^u q^v G` inside
/// x-degree `x_order`.
///
/// Term `n` has lowest x-degree `(k+1-d) n`, and its beta part carries an
/// extra `x^a`; once `(k+1-d) n + u + min(0, a)` exceeds `x_order` neither
/// part reaches the box, and the bound only grows with `n`.
pub fn summation_limit(gp: &GParams, u: i64, x_order: usize) -> i64 {
    let step = gp.k + 1 - gp.d;
    let reach = x_order as i64 - u - gp.a.min(0);
    if reach < 0 {
        0
    } else {
        reach / step + 1
    }
}

/// `x^u q^v G^s_{k,a}(x; q)`, or `x^u q^v G^s_{k,a}(xq; q)` with `subst`,
/// exact in the `(x_order, trunc)` box. The sum is
/// `sum_n alpha[s]_n q^(-na) + beta[s]_n (x q^(n+1))^a`.
///
/// May carry negative q-exponents; see [`g_series`] for the checked form.
pub fn g_scaled(gp: &GParams, subst: bool, u: i64, v: i64, x_order: usize, trunc: i64) -> Result<BiSeries> {
    let a = gp.a;
    let mut acc = BiSeries::zero(x_order, trunc);
    for n in 0..summation_limit(gp, u, x_order) {
        let sp = gp.term(n);
        let alpha = scaled_term(Kind::Alpha, &sp, subst, u, v - n * a, x_order, trunc)?;
        // (x q^(n+1))^a, and under x -> xq one more q^a.
        let beta_v = v + a * (n + 1) + if subst { a } else { 0 };
        let beta = scaled_term(Kind::Beta, &sp, subst, u + a, beta_v, x_order, trunc)?;
        acc = acc.try_add(&alpha)?.try_add(&beta)?;
    }
    acc.truncate(x_order, trunc)
}

/// `G^s_{k,a}(x; q)` in the `(x_order, trunc)` box.
///
/// Fails with an invariant violation if a negative q-exponent survives;
/// that happens only for parameter tuples outside the identities' range.
pub fn g_series(gp: &GParams, x_order: usize, trunc: i64) -> Result<BiSeries> {
    let g = g_scaled(gp, false, 0, 0, x_order, trunc)?;
    g.assert_ordinary(&format!(
        "G with (k, a, d, s) = ({}, {}, {}, {}) {}",
        gp.k, gp.a, gp.d, gp.s, gp.flavor
    ))?;
    Ok(g)
}
