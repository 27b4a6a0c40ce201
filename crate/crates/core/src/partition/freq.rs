use crate::error::{Error, Result};

/// A partition or overpartition in frequency form.
///
/// Index `i - 1` of `f` holds the number of non-overlined parts equal to
/// `i`; `fbar` flags an overlined `i`. Trailing zero frequencies are trimmed
/// so that equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreqSolution {
    f: Vec<u32>,
    fbar: Vec<bool>,
}

impl FreqSolution {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(mut f: Vec<u32>, mut fbar: Vec<bool>) -> Self {
        let len = f.len().max(fbar.len());
        f.resize(len, 0);
        fbar.resize(len, false);
        let mut s = Self { f, fbar };
        s.trim();
        s
    }

    /// A regular partition from its frequencies `f_1, f_2, ...`.
    pub fn regular(f: Vec<u32>) -> Self {
        Self::new(f, Vec::new())
    }

    /// Builds from a list of parts, each `(value, overlined)`.
    ///
    /// Fails on a zero part or on a part overlined twice.
    pub fn from_parts(parts: &[(u32, bool)]) -> Result<Self> {
        let mut f = Vec::new();
        let mut fbar = Vec::new();
        for &(p, over) in parts {
            if p == 0 {
                return Err(Error::Domain("parts must be positive".into()));
            }
            let i = p as usize - 1;
            if f.len() <= i {
                f.resize(i + 1, 0);
                fbar.resize(i + 1, false);
            }
            if over {
                if fbar[i] {
                    return Err(Error::Domain(format!("part {p} overlined twice")));
                }
                fbar[i] = true;
            } else {
                f[i] += 1;
            }
        }
        Ok(Self::new(f, fbar))
    }

    fn trim(&mut self) {
        while self.f.last() == Some(&0) && self.fbar.last() == Some(&false) {
            self.f.pop();
            self.fbar.pop();
        }
    }

    /// The largest part, `0` for the empty partition.
    pub fn max_part(&self) -> usize {
        self.f.len()
    }

    /// Non-overlined frequency of part `i`; `0` outside the support.
    pub fn f(&self, i: usize) -> u32 {
        i.checked_sub(1).and_then(|j| self.f.get(j)).copied().unwrap_or(0)
    }

    /// Overlined frequency of part `i`, `0` or `1`.
    pub fn fbar(&self, i: usize) -> u32 {
        i.checked_sub(1).and_then(|j| self.fbar.get(j)).map_or(0, |&b| b as u32)
    }

    pub fn weight(&self) -> u64 {
        (1..=self.max_part())
            .map(|i| i as u64 * u64::from(self.f(i) + self.fbar(i)))
            .sum()
    }

    pub fn length(&self) -> u64 {
        (1..=self.max_part()).map(|i| u64::from(self.f(i) + self.fbar(i))).sum()
    }

    pub fn is_regular(&self) -> bool {
        !self.fbar.iter().any(|&b| b)
    }

    /// `rho(i) = sum_{j <= i} (-1)^j fbar_j`.
    pub fn rho(&self, i: usize) -> i64 {
        (1..=i.min(self.max_part()))
            .map(|j| if j % 2 == 0 { 1 } else { -1 } * i64::from(self.fbar(j)))
            .sum()
    }

    /// `V(i) = sum_{j <= i} fbar_j`.
    pub fn v_stat(&self, i: usize) -> i64 {
        (1..=i.min(self.max_part())).map(|j| i64::from(self.fbar(j))).sum()
    }

    /// Parts in non-increasing order; an overlined copy precedes plain copies.
    pub fn parts(&self) -> Vec<(u32, bool)> {
        let mut out = Vec::new();
        for i in (1..=self.max_part()).rev() {
            if self.fbar(i) == 1 {
                out.push((i as u32, true));
            }
            out.extend(std::iter::repeat_n((i as u32, false), self.f(i) as usize));
        }
        out
    }
}

impl std::fmt::Display for FreqSolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts = self.parts();
        if parts.is_empty() {
            return write!(f, "()");
        }
        let rendered: Vec<String> = parts
            .iter()
            .map(|&(p, o)| if o { format!("{p}'") } else { p.to_string() })
            .collect();
        write!(f, "{}", rendered.join("+"))
    }
}
