use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Flavor;

/// One family of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Lemma31,
    Cor32,
    Lemma33,
    Cor34,
    Prop35,
    Thm36,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Lemma31,
        Check::Cor32,
        Check::Lemma33,
        Check::Cor34,
        Check::Prop35,
        Check::Thm36,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Lemma31 => "lemma31",
            Check::Cor32 => "cor32",
            Check::Lemma33 => "lemma33",
            Check::Cor34 => "cor34",
            Check::Prop35 => "prop35",
            Check::Thm36 => "thm36",
        }
    }

    /// Parses a comma-separated list; `all` expands to every check. An empty
    /// string is an empty list.
    pub fn parse_list(s: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if item == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(item.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown check {s:?}")))
    }
}

/// A set of integer parameter values: `all`, `lo..hi` (inclusive), a comma
/// list, or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grid {
    All,
    Values(Vec<i64>),
}

impl Grid {
    pub fn contains(&self, v: i64) -> bool {
        match self {
            Grid::All => true,
            Grid::Values(vs) => vs.contains(&v),
        }
    }

    /// The values within `lo..=hi`, in ascending order.
    pub fn within(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&v| self.contains(v)).collect()
    }

    fn explicit(&self) -> &[i64] {
        match self {
            Grid::All => &[],
            Grid::Values(vs) => vs,
        }
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "all" {
            return Ok(Grid::All);
        }
        let int = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Config(format!("not an integer: {t:?}")))
        };
        let mut vs = Vec::new();
        for part in s.split(',') {
            if let Some((lo, hi)) = part.split_once("..") {
                let hi = hi.strip_prefix('=').unwrap_or(hi);
                let (lo, hi) = (int(lo)?, int(hi)?);
                if lo > hi {
                    return Err(Error::Config(format!("empty range {lo}..{hi}")));
                }
                vs.extend(lo..=hi);
            } else {
                vs.push(int(part)?);
            }
        }
        vs.sort_unstable();
        vs.dedup();
        Ok(Grid::Values(vs))
    }
}

/// Everything a sweep needs; [`SuiteConfig::validate`] runs before any
/// computation.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub checks: Vec<Check>,
    pub k: Vec<i64>,
    pub a: Grid,
    pub d: Grid,
    pub s: Grid,
    pub flavors: Vec<Flavor>,
    pub trunc_n: i64,
    pub trunc_x: usize,
    /// Largest summation index for the term recurrences.
    pub index_max: i64,
    /// Evaluate `2(a+s) != 2k+2-d` in place of the printed `2k+2+d`.
    pub alt_condition: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            checks: Check::ALL.to_vec(),
            k: vec![2, 3],
            a: Grid::All,
            d: Grid::All,
            s: Grid::All,
            flavors: Flavor::ALL.to_vec(),
            trunc_n: 30,
            trunc_x: 10,
            index_max: 3,
            alt_condition: false,
        }
    }
}

/// A fully specified parameter tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple {
    pub k: i64,
    pub a: i64,
    pub d: i64,
    pub s: i64,
    pub flavor: Flavor,
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k.iter().any(|&k| k < 2) {
            return Err(Error::Config(format!("k values must be at least 2: {:?}", self.k)));
        }
        if self.trunc_n < 0 {
            return Err(Error::Config(format!("trunc-n = {} is negative", self.trunc_n)));
        }
        if self.index_max < 0 {
            return Err(Error::Config(format!("index-max = {} is negative", self.index_max)));
        }
        let k_max = self.k.iter().copied().max().unwrap_or(0);
        let bad = |name: &str, grid: &Grid, lo: i64, hi: i64| -> Result<()> {
            match grid.explicit().iter().find(|&&v| v < lo || v > hi) {
                Some(v) => Err(Error::Config(format!(
                    "{name} = {v} is outside {lo}..={hi} for every k in the grid"
                ))),
                None => Ok(()),
            }
        };
        bad("a", &self.a, 1, k_max)?;
        bad("d", &self.d, 1, k_max)?;
        bad("s", &self.s, 0, k_max - 1)?;
        Ok(())
    }

    /// Every valid tuple of the grid, in ascending order.
    pub fn tuples(&self) -> Vec<Tuple> {
        let mut out = Vec::new();
        for &k in &self.k {
            for d in self.d.within(1, k) {
                for s in self.s.within(0, d - 1) {
                    for a in self.a.within(1, k) {
                        for &flavor in &self.flavors {
                            out.push(Tuple { k, a, d, s, flavor });
                        }
                    }
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Distinct `(k, d, flavor)` triples.
    pub fn families(&self) -> Vec<(i64, i64, Flavor)> {
        let mut out: Vec<_> = self.tuples().iter().map(|t| (t.k, t.d, t.flavor)).collect();
        out.sort();
        out.dedup();
        out
    }
}
