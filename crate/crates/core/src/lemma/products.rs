use std::collections::BTreeMap;

use num_traits::Zero;

use super::g::{g_series, GParams};
use crate::error::{Error, Result};
use crate::partition::{partition_generating_function, Flavor};
use crate::report::Mismatch;
use crate::series::{poch_inf, triple_product, Coefficient, Monomial, PowerSeries};

/// A truncated Laurent series in `q`, sparse. Coefficients are exact for
/// every exponent up to `trunc`; `i64::MAX` marks an exact polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    terms: BTreeMap<i64, Coefficient>,
    trunc: i64,
}

impl Laurent {
    pub const EXACT: i64 = i64::MAX;

    fn from_map(mut terms: BTreeMap<i64, Coefficient>, trunc: i64) -> Self {
        terms.retain(|&e, c| e <= trunc && !c.is_zero());
        Self { terms, trunc }
    }

    /// An exact polynomial from `(exponent, coefficient)` pairs.
    pub fn polynomial(terms: &[(i64, i64)]) -> Self {
        let mut map = BTreeMap::new();
        for &(e, c) in terms {
            *map.entry(e).or_insert_with(Coefficient::zero) += c;
        }
        Self::from_map(map, Self::EXACT)
    }

    pub fn from_power_series(p: &PowerSeries) -> Self {
        let map = p
            .coeffs()
            .iter()
            .enumerate()
            .map(|(e, c)| (e as i64, c.clone()))
            .collect();
        Self::from_map(map, p.trunc_order() as i64)
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc
    }

    pub fn coeff(&self, e: i64) -> Coefficient {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn lowest(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// A lower bound for every exponent that may carry a nonzero coefficient,
    /// known or not.
    fn floor(&self) -> i64 {
        self.lowest().unwrap_or(self.trunc.saturating_add(1))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut map = self.terms.clone();
        for (&e, c) in &other.terms {
            *map.entry(e).or_insert_with(Coefficient::zero) += c;
        }
        Self::from_map(map, self.trunc.min(other.trunc))
    }

    pub fn neg(&self) -> Self {
        let map = self.terms.iter().map(|(&e, c)| (e, -c)).collect();
        Self::from_map(map, self.trunc)
    }

    /// The product is exact at `e` when every pair of factors summing to `e`
    /// is known.
    pub fn mul(&self, other: &Self) -> Self {
        let bound = |x: &Self, y: &Self| {
            if x.trunc == Self::EXACT {
                Self::EXACT
            } else {
                x.trunc.saturating_add(y.floor())
            }
        };
        let trunc = bound(self, other).min(bound(other, self));
        let mut map = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                let e = e1 + e2;
                if e > trunc {
                    break;
                }
                *map.entry(e).or_insert_with(Coefficient::zero) += c1 * c2;
            }
        }
        Self::from_map(map, trunc)
    }

    pub fn truncate(&self, trunc: i64) -> Result<Self> {
        if trunc > self.trunc {
            return Err(Error::Precision(format!(
                "Laurent series known to q^{} only, asked for q^{trunc}",
                self.trunc
            )));
        }
        Ok(Self::from_map(self.terms.clone(), trunc))
    }
}

/// `sum_{n in Z} (-1)^n q^(M n(n-1)/2 + c n)` up to `q^trunc`, for any `c`.
pub fn theta(modulus: i64, c: i64, trunc: i64) -> Laurent {
    let e = |n: i64| modulus * n * (n - 1) / 2 + c * n;
    let sign = |n: i64| if n.rem_euclid(2) == 0 { 1 } else { -1 };
    // The exponent is a convex quadratic in n with vertex at 1/2 - c/M.
    let start = (modulus - 2 * c).div_euclid(2 * modulus);
    let mut map = BTreeMap::new();
    let mut push = |n: i64| {
        *map.entry(e(n)).or_insert_with(Coefficient::zero) += sign(n);
    };
    let mut n = start;
    while e(n) <= trunc || n <= start + 1 {
        if e(n) <= trunc {
            push(n);
        }
        n += 1;
    }
    let mut n = start - 1;
    while e(n) <= trunc || n >= start - 1 {
        if e(n) <= trunc {
            push(n);
        }
        n -= 1;
    }
    Laurent::from_map(map, trunc)
}

/// `(q^c, q^(M-c), q^M; q^M)_inf`: the triple product for `0 <= c <= M`
/// and the theta sum for any other `c`.
pub fn product_factor(c: i64, modulus: i64, trunc: i64) -> Result<Laurent> {
    if c == 0 || c == modulus {
        return Ok(Laurent::from_map(BTreeMap::new(), trunc));
    }
    if (1..modulus).contains(&c) {
        return Ok(Laurent::from_power_series(&triple_product(
            c,
            modulus,
            trunc.max(0) as usize,
        )?));
    }
    Ok(theta(modulus, c, trunc))
}

/// Ordinary part shared by every summand: `1/((1 - q^d)(q; q)_inf)`, times
/// `(-q; q)_inf` for overpartitions.
fn shared_factor(d: i64, flavor: Flavor, trunc: usize) -> Result<Laurent> {
    let mut p = partition_generating_function(trunc)?;
    if flavor == Flavor::Over {
        let neg = poch_inf(Monomial::q(1).negated(), 1, 0, trunc as i64)?.at_x_zero()?;
        p = p.try_mul(&neg)?;
    }
    let mut geo = PowerSeries::one(trunc);
    geo.div_binomial(1, d as usize);
    Ok(Laurent::from_power_series(&p.try_mul(&geo)?))
}

/// Which of the two product combinations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// `(q^(d-s) - q^d) P(a+s-d) + (1 - q^(d-s)) P(a+s)`.
    First,
    /// `(q^(a+s) - q^a) P(d-a-s) + (1 - q^(d-s)) P(a+s)`.
    Second,
}

/// One product combination for `G(1; q)`, exact up to `q^trunc`.
pub fn product_form(gp: &GParams, form: Form, trunc: i64) -> Result<Laurent> {
    let GParams { a, d, s, flavor, .. } = *gp;
    let modulus = flavor.modulus(gp.k, d);
    let (pre, c) = match form {
        Form::First => (Laurent::polynomial(&[(d - s, 1), (d, -1)]), a + s - d),
        Form::Second => (Laurent::polynomial(&[(a + s, 1), (a, -1)]), d - a - s),
    };
    let p1 = product_factor(c, modulus, trunc)?;
    let p2 = product_factor(a + s, modulus, trunc)?;
    let low = [&p1, &p2].iter().filter_map(|p| p.lowest()).min().unwrap_or(0).min(0);
    let shared = shared_factor(d, flavor, (trunc - low).max(0) as usize)?;
    let second = Laurent::polynomial(&[(0, 1), (d - s, -1)]);
    pre.mul(&p1).add(&second.mul(&p2)).mul(&shared).truncate(trunc)
}

/// Both sides of the bridging identity
/// `(q^(d-s) - q^d)(1 - q^(a+s-d)) = (q^(a+s) - q^a)(1 - q^(d-(s+a)))`.
pub fn bridging_sides(a: i64, d: i64, s: i64) -> (Laurent, Laurent) {
    let lhs = Laurent::polynomial(&[(d - s, 1), (d, -1)]).mul(&Laurent::polynomial(&[(0, 1), (a + s - d, -1)]));
    let rhs = Laurent::polynomial(&[(a + s, 1), (a, -1)]).mul(&Laurent::polynomial(&[(0, 1), (d - (s + a), -1)]));
    (lhs, rhs)
}

/// `G(1; q)` directly and by the two product combinations.
#[derive(Clone, Debug)]
pub struct ProductEvaluation {
    pub direct: PowerSeries,
    /// Highest q-degree at which `direct` may be compared.
    pub valid_upto: usize,
    pub first: Laurent,
    pub second: Laurent,
}

pub fn g_at_one_products(gp: &GParams, x_order: usize, trunc: i64) -> Result<ProductEvaluation> {
    let g = g_series(gp, x_order, trunc)?;
    let (direct, valid_upto) = g.eval_x_one()?;
    Ok(ProductEvaluation {
        direct,
        valid_upto,
        first: product_form(gp, Form::First, trunc)?,
        second: product_form(gp, Form::Second, trunc)?,
    })
}

/// First exponent `<= upto` where the two differ; `m` is `-1` in the
/// mismatch since `x` has been specialized.
pub fn first_laurent_difference(lhs: &Laurent, rhs: &Laurent, upto: i64) -> Option<Mismatch> {
    let lo = [lhs.lowest(), rhs.lowest()].into_iter().flatten().min()?;
    (lo..=upto)
        .find(|&e| lhs.coeff(e) != rhs.coeff(e))
        .map(|e| Mismatch::new(-1, e, lhs.coeff(e), rhs.coeff(e)))
}
