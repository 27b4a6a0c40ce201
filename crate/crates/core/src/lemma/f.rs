use num_traits::Zero;

use crate::partition::{count_b, CountParams, Flavor};
use crate::series::{BiSeries, Coefficient};

/// Every `f^s_{k,a}(m, n)` for one `(k, d, flavor)`, `1 <= a <= k`,
/// `0 <= s < d`, built from the functional equation alone:
///
/// `f^s_a(m, n) = f^(s+1)_(a-1)(m, n) + f^0_(k-a+1-s)(m-a+1, n-m)`
/// (plus `fbar^0_(k-a-s)(m-a, n-m)` for overpartitions), with
/// `f(0, n) = [n = 0]` and `f_a = 0` for `a <= 0`.
///
/// For `m >= 1` every reference on the right is either at smaller `a` with
/// the same `(m, n)` or at weight `n - m < n`, so filling by increasing
/// `n`, then `a`, is well-founded.
#[derive(Debug)]
pub struct RecurrenceTable {
    k: i64,
    d: i64,
    x_order: usize,
    trunc: usize,
    cells: Vec<Coefficient>,
}

impl RecurrenceTable {
    pub fn build(k: i64, d: i64, flavor: Flavor, x_order: usize, trunc: usize) -> Self {
        let len = (k * d) as usize * (x_order + 1) * (trunc + 1);
        let mut t = Self {
            k,
            d,
            x_order,
            trunc,
            cells: vec![Coefficient::zero(); len],
        };
        for n in 0..=trunc as i64 {
            for a in 1..=k {
                for s in 0..d {
                    for m in 0..=x_order as i64 {
                        let v = if m == 0 {
                            Coefficient::from(i64::from(n == 0))
                        } else {
                            let mut v = t.get(a - 1, s + 1, m, n) + t.get(k - a + 1 - s, 0, m - a + 1, n - m);
                            if flavor == Flavor::Over {
                                v += t.get(k - a - s, 0, m - a, n - m);
                            }
                            v
                        };
                        let idx = t.index(a, s, m, n);
                        t.cells[idx] = v;
                    }
                }
            }
        }
        t
    }

    fn index(&self, a: i64, s: i64, m: i64, n: i64) -> usize {
        let plane = (self.x_order + 1) * (self.trunc + 1);
        (((a - 1) * self.d + s) as usize) * plane + m as usize * (self.trunc + 1) + n as usize
    }

    /// Zero outside `1 <= a <= k`, `0 <= m <= x_order`, `0 <= n <= trunc`; `s`
    /// is read modulo `d`.
    pub fn get(&self, a: i64, s: i64, m: i64, n: i64) -> Coefficient {
        if a <= 0 || a > self.k || m < 0 || n < 0 || m as usize > self.x_order || n as usize > self.trunc {
            return Coefficient::zero();
        }
        self.cells[self.index(a, s.rem_euclid(self.d), m, n)].clone()
    }

    pub fn series(&self, a: i64, s: i64) -> BiSeries {
        BiSeries::from_fn(self.x_order, self.trunc as i64, |m, j| self.get(a, s, m as i64, j))
    }
}

/// `F^s_{k,a}(x; q)` from the functional equation.
pub fn f_from_recurrence(cp: &CountParams, x_order: usize, trunc: usize) -> BiSeries {
    RecurrenceTable::build(cp.k, cp.d, cp.flavor, x_order, trunc).series(cp.a, cp.s)
}

/// `F^s_{k,a}(x; q) = sum b^s_{k,a}(m, n) x^m q^n` from enumeration.
pub fn enumerated_f(cp: &CountParams, x_order: usize, trunc: usize) -> BiSeries {
    BiSeries::from_fn(x_order, trunc as i64, |m, j| count_b(cp, m as i64, j))
}
