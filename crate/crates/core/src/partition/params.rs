use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Regular partitions or overpartitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Regular,
    Over,
}

impl Flavor {
    pub const ALL: [Flavor; 2] = [Flavor::Regular, Flavor::Over];

    /// Modulus of the product side: `2k+2-d` for regular, `2k+1-d` for over.
    pub fn modulus(self, k: i64, d: i64) -> i64 {
        match self {
            Flavor::Regular => 2 * k + 2 - d,
            Flavor::Over => 2 * k + 1 - d,
        }
    }

    pub fn is_over(self) -> bool {
        self == Flavor::Over
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Flavor::Regular => "regular",
            Flavor::Over => "over",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "regular" => Ok(Flavor::Regular),
            "over" => Ok(Flavor::Over),
            other => Err(Error::Config(format!("unknown flavor {other:?}"))),
        }
    }
}

/// Parameters `(k, a, d, s)` of a multiplicity-side counter.
///
/// Fields are public so that recurrences can form shifted indices; the
/// counters accept any integers and apply the conventions documented on
/// [`count_b`](super::count_b). [`CountParams::new`] enforces the valid range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CountParams {
    pub k: i64,
    pub a: i64,
    pub d: i64,
    pub s: i64,
    pub flavor: Flavor,
}

impl CountParams {
    pub fn new(k: i64, a: i64, d: i64, s: i64, flavor: Flavor) -> Result<Self> {
        let cp = Self { k, a, d, s, flavor };
        cp.validate()?;
        Ok(cp)
    }

    /// `k >= 2`, `1 <= a <= k`, `1 <= d <= k`, `0 <= s < d`.
    pub fn validate(&self) -> Result<()> {
        let Self { k, a, d, s, .. } = *self;
        if k < 2 {
            return Err(Error::Config(format!("k = {k} must be at least 2")));
        }
        if !(1..=k).contains(&a) {
            return Err(Error::Config(format!("a = {a} outside 1..={k}")));
        }
        if !(1..=k).contains(&d) {
            return Err(Error::Config(format!("d = {d} outside 1..={k}")));
        }
        if !(0..d).contains(&s) {
            return Err(Error::Config(format!("s = {s} outside 0..{d}")));
        }
        Ok(())
    }

    pub fn with_a(self, a: i64) -> Self {
        Self { a, ..self }
    }

    /// Replaces `s`, reduced modulo `d`.
    pub fn with_s(self, s: i64) -> Self {
        Self {
            s: s.rem_euclid(self.d),
            ..self
        }
    }

    pub fn with_flavor(self, flavor: Flavor) -> Self {
        Self { flavor, ..self }
    }

    pub fn modulus(&self) -> i64 {
        self.flavor.modulus(self.k, self.d)
    }
}

impl fmt::Display for CountParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(k, a, d, s) = ({}, {}, {}, {}) {}",
            self.k, self.a, self.d, self.s, self.flavor
        )
    }
}
