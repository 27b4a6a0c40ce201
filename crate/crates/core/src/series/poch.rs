//! q-Pochhammer symbols `(z; q^w)_n`, `(z; q^w)_inf` and the triple product.

use super::{BiSeries, Coefficient, PowerSeries};
use crate::error::{Error, Result};

/// A monomial `c x^u q^v` used as the argument `z` of a Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: i64,
    pub x: usize,
    pub q: i64,
}

impl Monomial {
    pub fn new(coeff: i64, x: usize, q: i64) -> Self {
        Self { coeff, x, q }
    }

    /// `q^v`.
    pub fn q(v: i64) -> Self {
        Self::new(1, 0, v)
    }

    /// `x^u q^v`.
    pub fn xq(u: usize, v: i64) -> Self {
        Self::new(1, u, v)
    }

    pub fn negated(self) -> Self {
        Self {
            coeff: -self.coeff,
            ..self
        }
    }

    fn is_constant(&self) -> bool {
        self.x == 0 && self.q == 0
    }
}

/// Number of factors of a Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PochOrder {
    Finite(usize),
    Infinite,
}

fn check_args(z: Monomial, w: i64, order: PochOrder) -> Result<()> {
    if w < 1 {
        return Err(Error::Domain(format!("Pochhammer base q^{w} needs w >= 1")));
    }
    if z.q < 0 {
        return Err(Error::Domain(format!(
            "Pochhammer argument with negative q-exponent {}",
            z.q
        )));
    }
    if order == PochOrder::Infinite && z.is_constant() {
        return Err(Error::Domain(
            "infinite Pochhammer symbol of a constant does not converge".into(),
        ));
    }
    Ok(())
}

/// Factors `(1 - z q^(w j))` that are not `1` inside the box, as `(c, u, v)`.
fn live_factors(z: Monomial, w: i64, order: PochOrder, x_order: usize, trunc: i64) -> Vec<(i64, usize, i64)> {
    let limit = match order {
        PochOrder::Finite(n) => n,
        PochOrder::Infinite => usize::MAX,
    };
    let mut out = Vec::new();
    if z.x > x_order || z.coeff == 0 {
        return out;
    }
    for j in 0..limit {
        let v = z.q + w * j as i64;
        // Later factors only push the exponent further out.
        if v > trunc {
            break;
        }
        out.push((z.coeff, z.x, v));
    }
    out
}

impl BiSeries {
    /// Multiplies in place by `(z; q^w)_order`.
    pub fn mul_poch(&mut self, z: Monomial, w: i64, order: PochOrder) -> Result<()> {
        check_args(z, w, order)?;
        for (c, u, v) in live_factors(z, w, order, self.x_order(), self.trunc_order()) {
            if u == 0 && v == 0 {
                *self = self.scale(&Coefficient::from(1 - c));
            } else {
                self.mul_binomial(-c, u, v);
            }
        }
        Ok(())
    }

    /// Divides in place by `(z; q^w)_order`; every factor must be a unit.
    pub fn div_poch(&mut self, z: Monomial, w: i64, order: PochOrder) -> Result<()> {
        check_args(z, w, order)?;
        for (c, u, v) in live_factors(z, w, order, self.x_order(), self.trunc_order()) {
            if u == 0 && v == 0 {
                match 1 - c {
                    1 => {}
                    -1 => *self = -&*self,
                    other => {
                        return Err(Error::Domain(format!(
                            "division by the non-unit constant factor {other}"
                        )))
                    }
                }
            } else {
                self.div_binomial(c, u, v);
            }
        }
        Ok(())
    }
}

/// `(z; q^w)_n` inside the `(x_order, trunc)` box; `n = 0` gives `1`.
pub fn poch_finite(z: Monomial, w: i64, n: usize, x_order: usize, trunc: i64) -> Result<BiSeries> {
    let mut s = BiSeries::one(x_order, trunc);
    s.mul_poch(z, w, PochOrder::Finite(n))?;
    Ok(s)
}

/// `(z; q^w)_inf` inside the `(x_order, trunc)` box.
///
/// Factors are taken until the first one that is `1` at truncation; every
/// later factor is then `1` as well.
pub fn poch_inf(z: Monomial, w: i64, x_order: usize, trunc: i64) -> Result<BiSeries> {
    let mut s = BiSeries::one(x_order, trunc);
    s.mul_poch(z, w, PochOrder::Infinite)?;
    Ok(s)
}

/// `(q^c; q^M)_inf (q^(M-c); q^M)_inf (q^M; q^M)_inf` truncated at `q^N`.
pub fn triple_product(c: i64, modulus: i64, trunc: usize) -> Result<PowerSeries> {
    if modulus < 1 || c < 1 || c > modulus {
        return Err(Error::Domain(format!(
            "triple_product needs 1 <= c <= M, got c = {c}, M = {modulus}"
        )));
    }
    if c == modulus {
        // The middle factor starts with (1 - q^0).
        return Ok(PowerSeries::zero(trunc));
    }
    let mut s = BiSeries::one(0, trunc as i64);
    for base in [c, modulus - c, modulus] {
        s.mul_poch(Monomial::q(base), modulus, PochOrder::Infinite)?;
    }
    s.at_x_zero()
}
