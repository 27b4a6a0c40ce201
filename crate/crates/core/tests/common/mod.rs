//! Oracles written without the library: naive enumeration and naive series
//! arithmetic on machine integers.

#![allow(dead_code)]

/// Calls `visit(freq, weight)` for every partition of weight `<= n_max`;
/// `freq[i - 1]` is the number of parts equal to `i`.
pub fn partitions(n_max: usize, mut visit: impl FnMut(&[u32], usize)) {
    fn go(rest: usize, max: usize, freq: &mut Vec<u32>, total: usize, visit: &mut dyn FnMut(&[u32], usize)) {
        visit(freq, total);
        for p in 1..=max.min(rest) {
            freq[p - 1] += 1;
            go(rest - p, p, freq, total + p, visit);
            freq[p - 1] -= 1;
        }
    }
    let mut freq = vec![0u32; n_max + 1];
    go(n_max, n_max, &mut freq, 0, &mut visit);
}

/// Every overpartition of weight `<= n_max`, as `(f, fbar, weight)`.
///
/// Built as a pair (distinct overlined parts, ordinary partition).
pub fn overpartitions(n_max: usize, mut visit: impl FnMut(&[u32], &[u32], usize)) {
    let mut fbar = vec![0u32; n_max + 1];
    fn distinct(start: usize, used: usize, n_max: usize, fbar: &mut Vec<u32>, out: &mut Vec<(Vec<u32>, usize)>) {
        out.push((fbar.clone(), used));
        for p in start..=n_max.saturating_sub(used) {
            if p == 0 {
                continue;
            }
            fbar[p - 1] = 1;
            distinct(p + 1, used + p, n_max, fbar, out);
            fbar[p - 1] = 0;
        }
    }
    let mut sets = Vec::new();
    distinct(1, 0, n_max, &mut fbar, &mut sets);
    let mut plain: Vec<(Vec<u32>, usize)> = Vec::new();
    partitions(n_max, |f, w| plain.push((f.to_vec(), w)));
    plain.sort_by_key(|&(_, w)| w);
    for (bar, used) in &sets {
        for (f, w) in plain.iter().take_while(|&&(_, w)| used + w <= n_max) {
            visit(f, bar, used + w);
        }
    }
}

pub fn at(v: &[u32], i: usize) -> i64 {
    if i == 0 {
        return 0;
    }
    v.get(i - 1).map_or(0, |&x| i64::from(x))
}

/// Membership in the multiplicity-side set, transcribed from the definition.
/// `fbar` all zero gives the ordinary-partition reading.
pub fn multiplicity_condition(f: &[u32], fbar: &[u32], k: i64, a: i64, d: i64, s: i64) -> bool {
    if at(f, 1) >= a {
        return false;
    }
    let top = f.len().max(fbar.len());
    let mut rho = 0i64;
    for i in 1..=top {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        rho += sign * at(fbar, i);
        let window = at(f, i) + at(fbar, i) + at(f, i + 1);
        if window >= k {
            return false;
        }
        let delta = k - window;
        if (1..d).contains(&delta) {
            let f_odd = if i % 2 == 1 {
                at(f, i) + at(fbar, i)
            } else {
                at(f, i + 1)
            };
            if (a + s - 1 - f_odd - rho).rem_euclid(d) >= delta {
                return false;
            }
        }
    }
    true
}

/// Number of partitions of each `n <= n_max` with ordinary parts from
/// `plain` and distinct extra parts from `distinct`.
pub fn restricted(n_max: usize, plain: impl Fn(usize) -> bool, distinct: impl Fn(usize) -> bool) -> Vec<i128> {
    let mut dp = vec![0i128; n_max + 1];
    dp[0] = 1;
    for p in 1..=n_max {
        if plain(p) {
            for j in p..=n_max {
                dp[j] += dp[j - p];
            }
        }
    }
    for p in 1..=n_max {
        if distinct(p) {
            for j in (p..=n_max).rev() {
                dp[j] += dp[j - p];
            }
        }
    }
    dp
}

/// `p mod m` avoids `0` and `+-c`.
pub fn avoids(p: usize, c: i64, m: i64) -> bool {
    let r = p as i64 % m;
    r != 0 && r != c.rem_euclid(m) && r != (-c).rem_euclid(m)
}

pub fn mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let n = a.len().min(b.len());
    let mut out = vec![0i128; n];
    for (i, x) in a.iter().enumerate().take(n) {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `prod_{j >= 0} (1 - q^(start + step j))` with coefficients through `q^n`.
pub fn product(start: usize, step: usize, n: usize) -> Vec<i128> {
    let mut out = vec![0i128; n + 1];
    out[0] = 1;
    let mut e = start;
    while e <= n {
        for j in (e..=n).rev() {
            out[j] -= out[j - e];
        }
        e += step;
    }
    out
}

pub fn to_i128(c: &num_bigint::BigInt) -> i128 {
    i128::try_from(c).expect("coefficient fits in i128")
}
