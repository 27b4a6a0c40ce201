use std::collections::HashMap;
use std::io::Write;
use std::sync::{Arc, Mutex, OnceLock};

use super::enumerate::for_each_window_bounded;
use super::predicate::admitted_residues;
use super::{CountParams, Flavor};
use crate::error::Result;
use crate::series::Coefficient;

/// Smallest weight bound a table is built for; avoids rebuilding for
/// every small request.
const MIN_TABLE_WEIGHT: usize = 24;

/// All values `b^s_{k,a}(m, n)` for one `(k, flavor)`, every `d <= k`,
/// `1 <= a <= k`, `0 <= s < d` and `m <= n <= n_max`.
///
/// Built from a single pass of the window-bounded enumeration: for each
/// solution the admitted residues of `a + s` are computed once per `d`.
#[derive(Debug)]
pub struct CounterTable {
    k: i64,
    flavor: Flavor,
    n_max: usize,
    cells: Vec<Vec<u64>>,
}

impl CounterTable {
    pub fn build(k: i64, flavor: Flavor, n_max: usize) -> Self {
        assert!(k >= 2, "counter table needs k >= 2, got {k}");
        let width = n_max + 1;
        let slots = (k * (k + 1) / 2 * k) as usize;
        let mut cells = vec![vec![0u64; width * width]; slots];
        for_each_window_bounded(k, flavor, n_max as u64, |f, fbar, weight, len| {
            let f1 = i64::from(f.first().copied().unwrap_or(0));
            for d in 1..=k {
                let mask = admitted_residues(f, fbar, k, d);
                if mask == 0 {
                    continue;
                }
                for s in 0..d {
                    for a in (f1 + 1)..=k {
                        if mask >> (a + s).rem_euclid(d) & 1 == 1 {
                            let slot = Self::slot(k, d, s, a);
                            cells[slot][len as usize * width + weight as usize] += 1;
                        }
                    }
                }
            }
        });
        Self {
            k,
            flavor,
            n_max,
            cells,
        }
    }

    fn slot(k: i64, d: i64, s: i64, a: i64) -> usize {
        (((d - 1) * d / 2 + s) * k + (a - 1)) as usize
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `b^s_{k,a}(m, n)` under the conventions of [`count_b`].
    ///
    /// # Panics
    /// If `d` is outside `1..=k` or `n` exceeds the table.
    pub fn get(&self, d: i64, a: i64, s: i64, m: i64, n: i64) -> u64 {
        assert!((1..=self.k).contains(&d), "d = {d} outside 1..={}", self.k);
        if m < 0 || n < 0 || a <= 0 || m > n {
            return 0;
        }
        assert!(n as usize <= self.n_max, "weight {n} beyond table bound {}", self.n_max);
        // Beyond a = k the bound f_1 < a is implied by the window at i = 1,
        // so only the residue a + s matters.
        let (a, s) = if a > self.k { (self.k, s + a - self.k) } else { (a, s) };
        let slot = Self::slot(self.k, d, s.rem_euclid(d), a);
        self.cells[slot][m as usize * (self.n_max + 1) + n as usize]
    }
}

type TableKey = (i64, Flavor);

fn tables() -> &'static Mutex<HashMap<TableKey, Arc<CounterTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<TableKey, Arc<CounterTable>>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// Memoized table covering weights up to at least `n_max`.
///
/// The lock is released while building, so concurrent callers may build
/// the same table twice; the larger one is kept and both are correct.
pub fn counter_table(k: i64, flavor: Flavor, n_max: usize) -> Arc<CounterTable> {
    let want = n_max.max(MIN_TABLE_WEIGHT);
    if let Some(t) = tables().lock().unwrap().get(&(k, flavor)) {
        if t.n_max >= n_max {
            return Arc::clone(t);
        }
    }
    let built = Arc::new(CounterTable::build(k, flavor, want));
    let mut guard = tables().lock().unwrap();
    let entry = guard.entry((k, flavor)).or_insert_with(|| Arc::clone(&built));
    if entry.n_max < built.n_max {
        *entry = Arc::clone(&built);
    }
    Arc::clone(entry)
}

/// Number of (over)partitions of `n` with exactly `m` parts counted by
/// `B^s_{k,a}`.
///
/// Negative `m` or `n` give `0`, as does any `a <= 0`; `s` is read modulo
/// `d`.
///
/// # Panics
/// If `k < 2` or `d` is outside `1..=k`.
pub fn count_b(cp: &CountParams, m: i64, n: i64) -> Coefficient {
    if n < 0 || m < 0 || cp.a <= 0 {
        return Coefficient::from(0);
    }
    let t = counter_table(cp.k, cp.flavor, n as usize);
    Coefficient::from(t.get(cp.d, cp.a, cp.s, m, n))
}

/// `B^s_{k,a}(n)`: [`count_b`] summed over the number of parts.
pub fn count_b_total(cp: &CountParams, n: i64) -> Coefficient {
    if n < 0 || cp.a <= 0 {
        return Coefficient::from(0);
    }
    let t = counter_table(cp.k, cp.flavor, n as usize);
    let total: u64 = (0..=n).map(|m| t.get(cp.d, cp.a, cp.s, m, n)).sum();
    Coefficient::from(total)
}

/// `B^s_{k,a}(n)` for `n = 0..=n_max`.
pub fn b_series(cp: &CountParams, n_max: usize) -> Vec<Coefficient> {
    (0..=n_max as i64).map(|n| count_b_total(cp, n)).collect()
}

pub const COUNTER_CSV_HEADER: [&str; 8] = ["k", "a", "d", "s", "flavor", "m", "n", "count"];

/// Writes `k,a,d,s,flavor,m,n,count` rows for every nonzero `b(m, n)` with
/// `n <= n_max`, one block per parameter tuple in the given order.
pub fn write_counter_csv<W: Write>(out: W, params: &[CountParams], n_max: usize) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(COUNTER_CSV_HEADER)?;
    for cp in params {
        let t = counter_table(cp.k, cp.flavor, n_max);
        for n in 0..=n_max as i64 {
            for m in 0..=n {
                let c = t.get(cp.d, cp.a, cp.s, m, n);
                if c != 0 {
                    w.write_record([
                        cp.k.to_string(),
                        cp.a.to_string(),
                        cp.d.to_string(),
                        cp.s.to_string(),
                        cp.flavor.to_string(),
                        m.to_string(),
                        n.to_string(),
                        c.to_string(),
                    ])?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}
