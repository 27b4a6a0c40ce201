use num_traits::Zero;

use super::{CountParams, Flavor};
use crate::error::{Error, Result};
use crate::series::{poch_inf, triple_product, Coefficient, Monomial, PowerSeries};

fn count_parts(n_max: usize, plain: impl Fn(usize) -> bool, overlined: impl Fn(usize) -> bool) -> Vec<Coefficient> {
    let mut dp = vec![Coefficient::zero(); n_max + 1];
    dp[0] = Coefficient::from(1);
    for p in (1..=n_max).filter(|&p| plain(p)) {
        for j in p..=n_max {
            let add = dp[j - p].clone();
            dp[j] += add;
        }
    }
    for p in (1..=n_max).filter(|&p| overlined(p)) {
        for j in (p..=n_max).rev() {
            let add = dp[j - p].clone();
            dp[j] += add;
        }
    }
    dp
}

fn avoids(p: usize, c: i64, modulus: i64) -> bool {
    let r = p as i64 % modulus;
    r != 0 && r != c.rem_euclid(modulus) && r != (-c).rem_euclid(modulus)
}

/// `1 / (q; q)_inf` up to `q^n_max`.
pub fn partition_generating_function(n_max: usize) -> Result<PowerSeries> {
    poch_inf(Monomial::q(1), 1, 0, n_max as i64)?.at_x_zero()?.invert_unit()
}

/// Coefficients of the product side `A_{k,c}(n)`, `n = 0..=n_max`, for the
/// flavor in `cp`; the index `c` is `cp.a` and may lie anywhere.
///
/// Regular: parts `!= 0, +-c (mod M)`, `M = 2k+2-d`. When `2c = M` there is
/// no combinatorial description and the coefficients of
/// `(q^c, q^(M-c), q^M; q^M)_inf / (q; q)_inf` are returned instead.
///
/// Over: non-overlined parts `!= 0, +-c (mod M)`, `M = 2k+1-d`, overlined
/// parts free; when `2c = M`, every part `!= 0 (mod k + (1-d)/2)`.
pub fn a_series(cp: &CountParams, n_max: usize) -> Result<Vec<Coefficient>> {
    let CountParams { k, a: c, d, flavor, .. } = *cp;
    let modulus = flavor.modulus(k, d);
    if modulus < 1 {
        return Err(Error::Domain(format!("product modulus {modulus} is not positive")));
    }
    match flavor {
        Flavor::Regular if 2 * c == modulus => {
            let tp = triple_product(c, modulus, n_max)?;
            let g = tp.try_mul(&partition_generating_function(n_max)?)?;
            Ok(g.coeffs().to_vec())
        }
        Flavor::Regular => Ok(count_parts(n_max, |p| avoids(p, c, modulus), |_| false)),
        Flavor::Over if 2 * c == modulus => {
            if d % 2 == 0 {
                return Err(Error::Domain(format!("k + (1 - d)/2 is not an integer for d = {d}")));
            }
            let kappa = (k + (1 - d) / 2) as usize;
            Ok(count_parts(n_max, |p| p % kappa != 0, |p| p % kappa != 0))
        }
        Flavor::Over => Ok(count_parts(n_max, |p| avoids(p, c, modulus), |_| true)),
    }
}

/// `A_{k,a}(n)` for regular partitions; negative `n` gives `0`.
pub fn count_a(cp: &CountParams, n: i64) -> Coefficient {
    if n < 0 {
        return Coefficient::zero();
    }
    let series = a_series(&cp.with_flavor(Flavor::Regular), n as usize)
        .expect("regular product side is defined for every index");
    series[n as usize].clone()
}

/// The overpartition product side; fails only in the exceptional case
/// with even `d`.
pub fn count_a_over(cp: &CountParams, n: i64) -> Result<Coefficient> {
    if n < 0 {
        return Ok(Coefficient::zero());
    }
    Ok(a_series(&cp.with_flavor(Flavor::Over), n as usize)?.swap_remove(n as usize))
}
