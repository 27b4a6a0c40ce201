use std::fmt;
use std::ops::Neg;

use num_traits::{One, Signed, Zero};

use super::Coefficient;
use crate::error::{Error, Result};

/// Truncated power series `c_0 + c_1 q + ... + c_N q^N` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Coefficient>,
}

impl PowerSeries {
    pub fn zero(trunc: usize) -> Self {
        Self {
            coeffs: vec![Coefficient::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = Coefficient::one();
        s
    }

    /// `c q^e`, or zero when `e > trunc`.
    pub fn monomial(trunc: usize, c: impl Into<Coefficient>, e: usize) -> Self {
        let mut s = Self::zero(trunc);
        if e <= trunc {
            s.coeffs[e] = c.into();
        }
        s
    }

    /// Builds a series from the leading coefficients; missing ones are zero and
    /// coefficients past `trunc` are dropped.
    pub fn from_coeffs<I, C>(trunc: usize, coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Coefficient>,
    {
        let mut s = Self::zero(trunc);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^e`; zero for `e` past the truncation order.
    pub fn coeff(&self, e: usize) -> Coefficient {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_same(&self, other: &Self, op: &str) -> Result<()> {
        if self.trunc_order() != other.trunc_order() {
            return Err(Error::Config(format!(
                "{op}: truncation orders differ ({} vs {})",
                self.trunc_order(),
                other.trunc_order()
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "add")?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "sub")?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "mul")?;
        let n = self.trunc_order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies in place by `1 + c q^e` (`e >= 1`).
    pub fn mul_binomial(&mut self, c: i64, e: usize) {
        assert!(e >= 1, "binomial factor must be non-constant");
        let c = Coefficient::from(c);
        for j in (e..self.coeffs.len()).rev() {
            if !self.coeffs[j - e].is_zero() {
                let t = &self.coeffs[j - e] * &c;
                self.coeffs[j] += t;
            }
        }
    }

    /// Divides in place by `1 - c q^e` (`e >= 1`).
    pub fn div_binomial(&mut self, c: i64, e: usize) {
        assert!(e >= 1, "binomial factor must be non-constant");
        let c = Coefficient::from(c);
        for j in e..self.coeffs.len() {
            if !self.coeffs[j - e].is_zero() {
                let t = &self.coeffs[j - e] * &c;
                self.coeffs[j] += t;
            }
        }
    }

    /// Multiplicative inverse; the constant term must be `+1` or `-1`.
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != Coefficient::one() {
            return Err(Error::Domain(format!("invert_unit: constant term {c0} is not a unit")));
        }
        let n = self.trunc_order();
        let mut g = Self::zero(n);
        g.coeffs[0] = c0.clone();
        for e in 1..=n {
            let mut acc = Coefficient::zero();
            for i in 1..=e {
                if !self.coeffs[i].is_zero() && !g.coeffs[e - i].is_zero() {
                    acc += &self.coeffs[i] * &g.coeffs[e - i];
                }
            }
            // c0 = ±1, so dividing by c0 is multiplying by it.
            g.coeffs[e] = -(acc * c0);
        }
        Ok(g)
    }

    /// Drops coefficients above `trunc`.
    pub fn truncate(&self, trunc: usize) -> Result<Self> {
        if trunc > self.trunc_order() {
            return Err(Error::Precision(format!(
                "cannot extend truncation from {} to {trunc}",
                self.trunc_order()
            )));
        }
        Ok(Self {
            coeffs: self.coeffs[..=trunc].to_vec(),
        })
    }

    /// First exponent `<= upto` where the two series differ.
    pub fn first_difference(&self, other: &Self, upto: usize) -> Option<usize> {
        (0..=upto).find(|&e| self.coeff(e) != other.coeff(e))
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        -&self
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc_order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(n: usize, cs: &[i64]) -> PowerSeries {
        PowerSeries::from_coeffs(n, cs.iter().copied())
    }

    #[test]
    fn expansion_of_three_factors() {
        let mut f = PowerSeries::one(10);
        for e in 1..=3 {
            f.mul_binomial(-1, e);
        }
        assert_eq!(f, poly(10, &[1, -1, -1, 0, 1, 1, -1]));
    }

    #[test]
    fn geometric_inverse() {
        let f = poly(12, &[1, -1]);
        let g = f.invert_unit().unwrap();
        assert!(g.coeffs().iter().all(|c| c.is_one()));
        assert_eq!(f.try_mul(&g).unwrap(), PowerSeries::one(12));
    }

    #[test]
    fn non_unit_rejected() {
        assert!(matches!(poly(4, &[2, 1]).invert_unit(), Err(Error::Domain(_))));
        assert!(matches!(PowerSeries::zero(4).invert_unit(), Err(Error::Domain(_))));
    }

    #[test]
    fn negative_unit_inverse() {
        let f = poly(8, &[-1, 3, 0, 2]);
        let g = f.invert_unit().unwrap();
        assert_eq!(f.try_mul(&g).unwrap(), PowerSeries::one(8));
    }

    #[test]
    fn mismatched_orders() {
        let a = PowerSeries::one(5);
        let b = PowerSeries::one(6);
        assert!(matches!(a.try_add(&b), Err(Error::Config(_))));
        assert!(matches!(a.try_mul(&b), Err(Error::Config(_))));
    }

    #[test]
    fn binomial_division_undoes_multiplication() {
        let mut f = poly(15, &[3, 1, 4, 1, 5, 9, 2, 6]);
        let orig = f.clone();
        f.mul_binomial(-2, 3);
        f.div_binomial(2, 3);
        assert_eq!(f, orig);
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(poly(3, &[1, -1, 0, 2]).to_string(), "1 - q + 2q^3 + O(q^4)");
        assert_eq!(PowerSeries::zero(2).to_string(), "0 + O(q^3)");
    }
}
