use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partition::Flavor;
use crate::series::poch::PochOrder;
use crate::series::{BiSeries, Monomial};

/// Which of the two term families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Alpha,
    Beta,
}

/// Index of one term `alpha[s]_n` or `beta[s]_n`; the terms do not depend
/// on `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeriesParams {
    pub k: i64,
    pub d: i64,
    pub s: i64,
    pub n: i64,
    pub flavor: Flavor,
}

impl SeriesParams {
    pub fn new(k: i64, d: i64, s: i64, n: i64, flavor: Flavor) -> Self {
        Self {
            k,
            d,
            s: s.rem_euclid(d),
            n,
            flavor,
        }
    }

    pub fn modulus(&self) -> i64 {
        self.flavor.modulus(self.k, self.d)
    }

    /// `M n (n+1) / 2`.
    pub fn triangular(&self) -> i64 {
        self.modulus() * self.n * (self.n + 1) / 2
    }

    /// Lowest x-degree of the term, `(k+1-d) n`.
    pub fn x_degree(&self) -> i64 {
        (self.k + 1 - self.d) * self.n
    }

    /// Lowest q-degree of the term before any monomial factor.
    pub fn q_degree(&self, kind: Kind) -> i64 {
        match kind {
            Kind::Alpha => self.triangular() - self.n * self.s,
            Kind::Beta => self.triangular() - self.n * (self.d - self.s),
        }
    }
}

fn lift(e: i64) -> usize {
    usize::try_from(e).expect("non-negative exponent")
}

/// `(1 - (xq)^e) / (1 - (xq)^d)` for `0 <= e <= d`.
fn ratio(e: i64, d: i64, x_order: usize, trunc: i64) -> BiSeries {
    let mut r = if e > 0 {
        BiSeries::one(x_order, trunc)
            .try_sub(&BiSeries::monomial(x_order, trunc, 1, lift(e), e))
            .expect("same box")
    } else {
        BiSeries::zero(x_order, trunc)
    };
    r.div_binomial(1, lift(d), d);
    r
}

/// `x^u q^v f`, kept in the box of `f`.
fn times_monomial(f: &BiSeries, u: i64, v: i64) -> BiSeries {
    f.mul_monomial(lift(u), v)
        .truncate(f.x_order(), f.trunc_order())
        .expect("shrinking a box")
}

/// The closed-form term in the `(x_order, trunc)` box, uncached.
///
/// With `C = ((xq)^d; q^d)_inf / ((xq; q)_inf (q^d; q^d)_n ((xq^(n+1))^d; q^d)_inf)`
/// (times `(-q; q)_n (-xq^(n+1); q)_inf` for overpartitions), `T = M n(n+1)/2`
/// and `R(e) = (1 - (xq)^e)/(1 - (xq)^d)`:
///
/// - `alpha = C (-1)^n x^((k+1-d)n) q^(T - ns) [q^(dn) (xq)^(d-s) R(s) + R(d-s)]`
/// - `beta = -C (-1)^n x^((k+1-d)n) q^(T - n(d-s)) [R(s) + q^(dn) (xq)^s R(d-s)]`
///
/// Negative `n` gives zero.
pub fn alpha_beta_uncached(kind: Kind, sp: &SeriesParams, x_order: usize, trunc: i64) -> Result<BiSeries> {
    let SeriesParams { d, s, n, .. } = *sp;
    if d < 1 || !(0..d).contains(&s) {
        return Err(Error::Domain(format!("term needs 0 <= s < d, got s = {s}, d = {d}")));
    }
    let u = sp.x_degree();
    let qe = sp.q_degree(kind);
    if n < 0 || u > x_order as i64 || qe > trunc {
        return Ok(BiSeries::zero(x_order, trunc));
    }
    let (xw, w) = (x_order - lift(u), trunc - qe);
    let nn = lift(n);

    let mut c = BiSeries::one(xw, w);
    c.mul_poch(Monomial::xq(lift(d), d), d, PochOrder::Infinite)?;
    c.div_poch(Monomial::xq(1, 1), 1, PochOrder::Infinite)?;
    c.div_poch(Monomial::q(d), d, PochOrder::Finite(nn))?;
    c.div_poch(Monomial::xq(lift(d), d * (n + 1)), d, PochOrder::Infinite)?;
    if sp.flavor == Flavor::Over {
        c.mul_poch(Monomial::q(1).negated(), 1, PochOrder::Finite(nn))?;
        c.mul_poch(Monomial::xq(1, n + 1).negated(), 1, PochOrder::Infinite)?;
    }

    let bracket = match kind {
        Kind::Alpha => times_monomial(&ratio(s, d, xw, w), d - s, d * n + d - s).try_add(&ratio(d - s, d, xw, w))?,
        Kind::Beta => ratio(s, d, xw, w).try_add(&times_monomial(&ratio(d - s, d, xw, w), s, d * n + s))?,
    };
    let body = c.try_mul(&bracket)?;
    let negative = (n % 2 == 1) != (kind == Kind::Beta);
    let body = if negative { -&body } else { body };
    Ok(body.shift(lift(u), qe))
}

type TermKey = (Kind, SeriesParams);

fn cache() -> &'static Mutex<HashMap<TermKey, Arc<BiSeries>>> {
    static CACHE: OnceLock<Mutex<HashMap<TermKey, Arc<BiSeries>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Truncations are rounded up to this step before computing, so that
/// nearby requests share one cached term.
const TRUNC_STEP: i64 = 16;

/// The term in the `(x_order, trunc)` box, served from a process-wide cache
/// holding the largest box computed so far for each index.
pub fn alpha_beta(kind: Kind, sp: &SeriesParams, x_order: usize, trunc: i64) -> Result<BiSeries> {
    let key = (kind, *sp);
    let cached = cache().lock().unwrap().get(&key).cloned();
    if let Some(t) = &cached {
        if t.x_order() >= x_order && t.trunc_order() >= trunc {
            return t.truncate(x_order, trunc);
        }
    }
    let (mut bx, mut bn) = (x_order, trunc);
    if let Some(t) = &cached {
        bx = bx.max(t.x_order());
        bn = bn.max(t.trunc_order());
    }
    bn = (bn.max(0) + TRUNC_STEP - 1) / TRUNC_STEP * TRUNC_STEP;
    let built = Arc::new(alpha_beta_uncached(kind, sp, bx, bn)?);
    {
        let mut guard = cache().lock().unwrap();
        let entry = guard.entry(key).or_insert_with(|| Arc::clone(&built));
        if entry.x_order() < built.x_order() || entry.trunc_order() < built.trunc_order() {
            *entry = Arc::clone(&built);
        }
    }
    built.truncate(x_order, trunc)
}

pub fn alpha(sp: &SeriesParams, x_order: usize, trunc: i64) -> Result<BiSeries> {
    alpha_beta(Kind::Alpha, sp, x_order, trunc)
}

pub fn beta(sp: &SeriesParams, x_order: usize, trunc: i64) -> Result<BiSeries> {
    alpha_beta(Kind::Beta, sp, x_order, trunc)
}

/// `x^u q^v K(x; q)` or, with `subst`, `x^u q^v K(xq; q)`, exact in the
/// `(x_order, trunc)` box.
///
/// `u` must be non-negative: every use in the functional equations pairs a
/// negative power of `x` with a term whose x-degree covers it before the
/// call.
pub fn scaled_term(
    kind: Kind,
    sp: &SeriesParams,
    subst: bool,
    u: i64,
    v: i64,
    x_order: usize,
    trunc: i64,
) -> Result<BiSeries> {
    if u < 0 {
        return Err(Error::Domain(format!("scaled term with x^{u}")));
    }
    if u > x_order as i64 || sp.n < 0 {
        return Ok(BiSeries::zero(x_order, trunc));
    }
    let (xs, ns) = (x_order - lift(u), trunc - v);
    // The term is ordinary; nothing lies below q^0.
    if ns < 0 {
        return Ok(BiSeries::zero(x_order, trunc));
    }
    let mut f = alpha_beta(kind, sp, xs, ns)?;
    if subst {
        f = f.subst_xq();
    }
    Ok(f.shift(lift(u), v))
}
