use num_traits::{One, Signed, Zero};

use super::{Coefficient, PowerSeries};
use crate::error::{Error, Result};

/// Truncated series in `(x, q)` with an integer q-offset.
///
/// Holds the coefficients of `x^m q^j` for `0 <= m <= x_order` and
/// `q_offset <= j <= trunc`. Terms outside that box are discarded.
///
/// Every coefficient held is exact: operations that would need information
/// beyond the box either shrink the tracked range explicitly
/// ([`mul_monomial`](Self::mul_monomial)) or fail with
/// [`Error::Precision`].
#[derive(Clone, Debug)]
pub struct BiSeries {
    x_order: usize,
    trunc: i64,
    q_offset: i64,
    rows: Vec<Vec<Coefficient>>,
}

impl BiSeries {
    fn blank(x_order: usize, trunc: i64, q_offset: i64) -> Self {
        let width = (trunc - q_offset + 1).max(0) as usize;
        Self {
            x_order,
            trunc,
            q_offset,
            rows: vec![vec![Coefficient::zero(); width]; x_order + 1],
        }
    }

    pub fn zero(x_order: usize, trunc: i64) -> Self {
        Self::blank(x_order, trunc, 0.min(trunc + 1))
    }

    pub fn one(x_order: usize, trunc: i64) -> Self {
        Self::monomial(x_order, trunc, 1, 0, 0)
    }

    /// `c x^u q^v` inside the `(x_order, trunc)` box.
    pub fn monomial(x_order: usize, trunc: i64, c: impl Into<Coefficient>, u: usize, v: i64) -> Self {
        let mut s = Self::blank(x_order, trunc, v.min(0).min(trunc + 1));
        if u <= x_order && v <= trunc {
            *s.slot_mut(u, v) = c.into();
        }
        s
    }

    /// Ordinary series with coefficient `coeff(m, j)` at `x^m q^j`.
    pub fn from_fn(x_order: usize, trunc: i64, mut coeff: impl FnMut(usize, i64) -> Coefficient) -> Self {
        let mut s = Self::zero(x_order, trunc);
        for m in 0..=x_order {
            for j in 0..=trunc {
                *s.slot_mut(m, j) = coeff(m, j);
            }
        }
        s
    }

    /// Places a univariate series in x-degree 0.
    pub fn from_power_series(p: &PowerSeries, x_order: usize) -> Self {
        let mut s = Self::zero(x_order, p.trunc_order() as i64);
        s.rows[0].clone_from_slice(p.coeffs());
        s
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc
    }

    pub fn q_offset(&self) -> i64 {
        self.q_offset
    }

    fn width(&self) -> usize {
        self.rows[0].len()
    }

    fn index(&self, j: i64) -> Option<usize> {
        (j >= self.q_offset && j <= self.trunc).then(|| (j - self.q_offset) as usize)
    }

    fn slot_mut(&mut self, m: usize, j: i64) -> &mut Coefficient {
        let idx = self.index(j).expect("exponent inside the tracked range");
        &mut self.rows[m][idx]
    }

    /// Coefficient of `x^m q^j` (zero outside the tracked box).
    pub fn coeff(&self, m: usize, j: i64) -> Coefficient {
        match (m <= self.x_order, self.index(j)) {
            (true, Some(idx)) => self.rows[m][idx].clone(),
            _ => Coefficient::zero(),
        }
    }

    /// Nonzero terms as `(m, j, coefficient)`, ordered by `m` then `j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64, &Coefficient)> + '_ {
        let off = self.q_offset;
        self.rows.iter().enumerate().flat_map(move |(m, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (m, off + i as i64, c))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms().next().is_none()
    }

    /// Smallest q-exponent carrying a nonzero coefficient.
    pub fn lowest_q(&self) -> Option<i64> {
        self.terms().map(|(_, j, _)| j).min()
    }

    /// True when no nonzero coefficient sits at a negative q-exponent.
    pub fn is_ordinary(&self) -> bool {
        self.lowest_q().is_none_or(|j| j >= 0)
    }

    pub fn assert_ordinary(&self, what: &str) -> Result<()> {
        match self.lowest_q() {
            Some(j) if j < 0 => Err(Error::Invariant(format!(
                "{what} is not ordinary: nonzero coefficient at q^{j}"
            ))),
            _ => Ok(()),
        }
    }

    fn check_same(&self, other: &Self, op: &str) -> Result<()> {
        if self.x_order != other.x_order || self.trunc != other.trunc {
            return Err(Error::Config(format!(
                "{op}: truncation orders differ ((X, N) = ({}, {}) vs ({}, {}))",
                self.x_order, self.trunc, other.x_order, other.trunc
            )));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, sign: i64, op: &str) -> Result<Self> {
        self.check_same(other, op)?;
        let lo = self.q_offset.min(other.q_offset);
        let mut out = Self::blank(self.x_order, self.trunc, lo);
        for (m, j, c) in self.terms() {
            *out.slot_mut(m, j) += c;
        }
        for (m, j, c) in other.terms() {
            if sign > 0 {
                *out.slot_mut(m, j) += c;
            } else {
                *out.slot_mut(m, j) -= c;
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1, "add")
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1, "sub")
    }

    /// Product truncated to the shared box.
    ///
    /// Both operands must be ordinary: a Laurent factor would pull in
    /// coefficients of the other operand from above the truncation order,
    /// which are not tracked.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other, "mul")?;
        if !self.is_ordinary() || !other.is_ordinary() {
            return Err(Error::Precision(
                "mul: Laurent operands lose exactness at the truncation edge".into(),
            ));
        }
        let mut out = Self::blank(self.x_order, self.trunc, self.q_offset + other.q_offset);
        let b_terms: Vec<_> = other.terms().collect();
        for (m1, j1, c1) in self.terms() {
            for &(m2, j2, c2) in &b_terms {
                if m1 + m2 <= self.x_order && j1 + j2 <= self.trunc {
                    *out.slot_mut(m1 + m2, j1 + j2) += c1 * c2;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        let mut out = self.clone();
        for row in &mut out.rows {
            for v in row.iter_mut() {
                *v *= c;
            }
        }
        out
    }

    /// Multiplies in place by `1 + c x^u q^v` with `v >= 0`, `u + v >= 1`.
    pub fn mul_binomial(&mut self, c: i64, u: usize, v: i64) {
        assert!(v >= 0 && u as i64 + v >= 1, "binomial factor must be non-constant");
        if u > self.x_order {
            return;
        }
        let c = Coefficient::from(c);
        let shift = v as usize;
        let width = self.width();
        for m in (u..=self.x_order).rev() {
            for idx in (shift..width).rev() {
                if self.rows[m - u][idx - shift].is_zero() {
                    continue;
                }
                let t = &self.rows[m - u][idx - shift] * &c;
                self.rows[m][idx] += t;
            }
        }
    }

    /// Divides in place by `1 - c x^u q^v` with `v >= 0`, `u + v >= 1`.
    pub fn div_binomial(&mut self, c: i64, u: usize, v: i64) {
        assert!(v >= 0 && u as i64 + v >= 1, "binomial factor must be non-constant");
        if u > self.x_order {
            return;
        }
        let c = Coefficient::from(c);
        let shift = v as usize;
        let width = self.width();
        for m in u..=self.x_order {
            for idx in shift..width {
                if self.rows[m - u][idx - shift].is_zero() {
                    continue;
                }
                let t = &self.rows[m - u][idx - shift] * &c;
                self.rows[m][idx] += t;
            }
        }
    }

    /// Multiplicative inverse up to truncation.
    ///
    /// The series must be ordinary with constant term `+1` or `-1`.
    pub fn invert_unit(&self) -> Result<Self> {
        if !self.is_ordinary() {
            return Err(Error::Domain("invert_unit: series has negative q-exponents".into()));
        }
        let c0 = self.coeff(0, 0);
        if c0.abs() != Coefficient::one() {
            return Err(Error::Domain(format!("invert_unit: constant term {c0} is not a unit")));
        }
        let n = self.trunc;
        let mut g = Self::zero(self.x_order, n);
        *g.slot_mut(0, 0) = c0.clone();
        let f_terms: Vec<_> = self
            .terms()
            .filter(|&(m, j, _)| (m, j) != (0, 0))
            .map(|(m, j, c)| (m, j, c.clone()))
            .collect();
        for m in 0..=self.x_order {
            for j in 0..=n {
                if (m, j) == (0, 0) {
                    continue;
                }
                let mut acc = Coefficient::zero();
                for (m1, j1, c1) in &f_terms {
                    if *m1 <= m && *j1 <= j {
                        let gv = &g.rows[m - m1][(j - j1) as usize];
                        if !gv.is_zero() {
                            acc += c1 * gv;
                        }
                    }
                }
                *g.slot_mut(m, j) = -(acc * &c0);
            }
        }
        Ok(g)
    }

    /// Multiplies by `x^u q^v`.
    ///
    /// The result keeps every coefficient it can vouch for: its truncation
    /// order becomes `trunc + v`, and rows pushed past `x_order` are dropped.
    pub fn mul_monomial(&self, u: usize, v: i64) -> Self {
        let mut out = Self::blank(self.x_order, self.trunc + v, self.q_offset + v);
        for m in 0..=self.x_order.saturating_sub(u) {
            if m + u <= self.x_order {
                out.rows[m + u].clone_from(&self.rows[m]);
            }
        }
        out
    }

    /// Multiplies by `x^u q^v` and grows the box with it, so that nothing is
    /// dropped: the result has order `(x_order + u, trunc + v)`.
    pub fn shift(&self, u: usize, v: i64) -> Self {
        let width = self.width();
        let mut rows = vec![vec![Coefficient::zero(); width]; u];
        rows.extend(self.rows.iter().cloned());
        Self {
            x_order: self.x_order + u,
            trunc: self.trunc + v,
            q_offset: self.q_offset + v,
            rows,
        }
    }

    /// Restricts to a smaller box.
    pub fn truncate(&self, x_order: usize, trunc: i64) -> Result<Self> {
        if x_order > self.x_order || trunc > self.trunc {
            return Err(Error::Precision(format!(
                "cannot extend (X, N) = ({}, {}) to ({x_order}, {trunc})",
                self.x_order, self.trunc
            )));
        }
        let lo = self.q_offset.min(trunc + 1);
        let mut out = Self::blank(x_order, trunc, lo);
        for (m, j, c) in self.terms() {
            if m <= x_order && j <= trunc {
                *out.slot_mut(m, j) = c.clone();
            }
        }
        Ok(out)
    }

    /// The substitution `x -> x q`: `x^m q^j` becomes `x^m q^(j+m)`.
    pub fn subst_xq(&self) -> Self {
        let mut out = Self::blank(self.x_order, self.trunc, self.q_offset);
        for (m, j, c) in self.terms() {
            if j + (m as i64) <= self.trunc {
                *out.slot_mut(m, j + m as i64) = c.clone();
            }
        }
        out
    }

    /// Row `x^0` as a univariate series.
    pub fn at_x_zero(&self) -> Result<PowerSeries> {
        self.row(0)
    }

    /// Coefficient of `x^m` as a univariate series in `q`.
    pub fn row(&self, m: usize) -> Result<PowerSeries> {
        if self.trunc < 0 {
            return Err(Error::Precision("row: negative truncation order".into()));
        }
        if let Some(j) = self.terms().filter(|t| t.0 == m).map(|t| t.1).min() {
            if j < 0 {
                return Err(Error::Invariant(format!("row x^{m} has a term at q^{j}")));
            }
        }
        let n = self.trunc as usize;
        let mut coeffs = vec![Coefficient::zero(); n + 1];
        for (mm, j, c) in self.terms() {
            if mm == m {
                coeffs[j as usize] = c.clone();
            }
        }
        Ok(PowerSeries::from_coeffs(n, coeffs))
    }

    /// Specialization `x = 1`.
    ///
    /// Returns the summed series together with the q-degree up to which the
    /// caller may compare it, `N - X`. Rows above `x_order` are not tracked,
    /// so the bound is only sound for series whose untracked rows start above
    /// `q^(N-X)`; comparisons against an independently computed target detect
    /// a violation rather than mask it.
    pub fn eval_x_one(&self) -> Result<(PowerSeries, usize)> {
        self.assert_ordinary("eval_x_one operand")?;
        if self.trunc < 0 {
            return Err(Error::Precision("eval_x_one: negative truncation order".into()));
        }
        let n = self.trunc as usize;
        let mut coeffs = vec![Coefficient::zero(); n + 1];
        for (_, j, c) in self.terms() {
            coeffs[j as usize] += c;
        }
        Ok((PowerSeries::from_coeffs(n, coeffs), n.saturating_sub(self.x_order)))
    }

    /// First `(m, j)` (m-major order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Result<Option<(usize, i64)>> {
        self.check_same(other, "compare")?;
        let lo = self.q_offset.min(other.q_offset);
        for m in 0..=self.x_order {
            for j in lo..=self.trunc {
                if self.coeff(m, j) != other.coeff(m, j) {
                    return Ok(Some((m, j)));
                }
            }
        }
        Ok(None)
    }
}

impl PartialEq for BiSeries {
    fn eq(&self, other: &Self) -> bool {
        matches!(self.first_difference(other), Ok(None))
    }
}

impl Eq for BiSeries {}

impl std::ops::Neg for &BiSeries {
    type Output = BiSeries;

    fn neg(self) -> BiSeries {
        self.scale(&Coefficient::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: usize, n: i64, terms: &[(usize, i64, i64)]) -> BiSeries {
        let mut s = BiSeries::zero(x, n);
        for &(m, j, c) in terms {
            s = s.try_add(&BiSeries::monomial(x, n, c, m, j)).unwrap();
        }
        s
    }

    #[test]
    fn add_takes_min_offset() {
        let a = BiSeries::monomial(2, 5, 1, 0, -2);
        let b = BiSeries::monomial(2, 5, 1, 1, 3);
        let s = a.try_add(&b).unwrap();
        assert_eq!(s.q_offset(), -2);
        assert_eq!(s.coeff(0, -2), 1.into());
        assert_eq!(s.coeff(1, 3), 1.into());
        assert!(!s.is_ordinary());
    }

    #[test]
    fn mul_rejects_mismatch_and_laurent() {
        let a = BiSeries::one(2, 5);
        assert!(matches!(a.try_mul(&BiSeries::one(3, 5)), Err(Error::Config(_))));
        assert!(matches!(a.try_mul(&BiSeries::one(2, 6)), Err(Error::Config(_))));
        let l = BiSeries::monomial(2, 5, 1, 0, -1);
        assert!(matches!(a.try_mul(&l), Err(Error::Precision(_))));
    }

    #[test]
    fn mul_matches_binomial_kernel() {
        let f = bi(4, 9, &[(0, 0, 1), (1, 2, 3), (2, 1, -1), (0, 4, 2)]);
        let mut g = f.clone();
        g.mul_binomial(-2, 1, 3);
        let h = f.try_mul(&bi(4, 9, &[(0, 0, 1), (1, 3, -2)])).unwrap();
        assert_eq!(g, h);
        g.div_binomial(2, 1, 3);
        assert_eq!(g, f);
    }

    #[test]
    fn invert_unit_two_sided() {
        let f = bi(3, 8, &[(0, 0, -1), (1, 1, 2), (0, 2, 1), (2, 3, -4)]);
        let g = f.invert_unit().unwrap();
        assert_eq!(f.try_mul(&g).unwrap(), BiSeries::one(3, 8));
        assert_eq!(g.try_mul(&f).unwrap(), BiSeries::one(3, 8));
        assert!(matches!(bi(3, 8, &[(0, 0, 2)]).invert_unit(), Err(Error::Domain(_))));
    }

    #[test]
    fn monomial_shift_tracks_precision() {
        let f = bi(3, 10, &[(0, 0, 1), (1, 4, 2), (2, 10, 5)]);
        let g = f.mul_monomial(1, -3);
        assert_eq!(g.trunc_order(), 7);
        assert_eq!(g.coeff(1, -3), 1.into());
        assert_eq!(g.coeff(2, 1), 2.into());
        assert_eq!(g.coeff(3, 7), 5.into());
        assert!(g.truncate(3, 8).is_err());
        let back = g.mul_monomial(1, 3).truncate(3, 10).unwrap();
        // the x^3 row was pushed out of the box
        assert_eq!(back, bi(3, 10, &[(2, 0, 1), (3, 4, 2)]));
    }

    #[test]
    fn subst_xq_raises_q_degree() {
        let f = bi(3, 6, &[(0, 1, 1), (2, 3, 7), (3, 4, 1)]);
        let g = f.subst_xq();
        assert_eq!(g, bi(3, 6, &[(0, 1, 1), (2, 5, 7)]));
    }

    #[test]
    fn eval_x_one_sums_rows() {
        let f = bi(1, 4, &[(0, 0, 1), (1, 1, 1)]);
        let (p, exact) = f.eval_x_one().unwrap();
        assert_eq!(p, PowerSeries::from_coeffs(4, [1, 1]));
        assert_eq!(exact, 3);
        let (z, _) = BiSeries::zero(2, 4).eval_x_one().unwrap();
        assert!(z.is_zero());
        assert!(matches!(
            BiSeries::monomial(2, 4, 1, 1, -1).eval_x_one(),
            Err(Error::Invariant(_))
        ));
    }
}
