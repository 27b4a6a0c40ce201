use super::{Flavor, FreqSolution};

/// Visits every frequency vector with `f_i + fbar_i + f_(i+1) < k` for all
/// `i` and weight at most `n_max`, each exactly once.
///
/// Descends over part indices `1, 2, ...` keeping only the window to the
/// previous index, so any choice that breaks a window bound is never
/// extended. The callback receives `(f, fbar, weight, length)`; the slices
/// may carry trailing zeros.
pub fn for_each_window_bounded(k: i64, flavor: Flavor, n_max: u64, mut visit: impl FnMut(&[u32], &[bool], u64, u64)) {
    let mut f = Vec::new();
    let mut fbar = Vec::new();
    descend(k, flavor, n_max, 1, n_max, 0, &mut f, &mut fbar, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn descend(
    k: i64,
    flavor: Flavor,
    total: u64,
    i: u64,
    rem: u64,
    len: u64,
    f: &mut Vec<u32>,
    fbar: &mut Vec<bool>,
    visit: &mut impl FnMut(&[u32], &[bool], u64, u64),
) {
    if i > rem {
        visit(f, fbar, total - rem, len);
        return;
    }
    let prev_here = match (f.last(), fbar.last()) {
        (Some(&c), Some(&b)) => i64::from(c) + i64::from(b),
        _ => 0,
    };
    let max_bar = if flavor.is_over() { 1 } else { 0 };
    for b in 0..=max_bar {
        let mut c = 0u32;
        loop {
            let here = i64::from(c) + b;
            if here >= k || prev_here + i64::from(c) >= k || i * here as u64 > rem {
                break;
            }
            f.push(c);
            fbar.push(b == 1);
            descend(
                k,
                flavor,
                total,
                i + 1,
                rem - i * here as u64,
                len + here as u64,
                f,
                fbar,
                visit,
            );
            f.pop();
            fbar.pop();
            c += 1;
        }
    }
}

/// Every partition (or overpartition) of weight at most `n_max`, with no
/// multiplicity restriction. Slow; used as an independent oracle.
pub fn for_each_unrestricted(flavor: Flavor, n_max: u64, mut visit: impl FnMut(&FreqSolution)) {
    let mut f = vec![0u32; n_max as usize];
    let mut fbar = vec![false; n_max as usize];
    unrestricted(flavor, n_max, n_max, &mut f, &mut fbar, &mut visit);
}

fn unrestricted(
    flavor: Flavor,
    top: u64,
    rem: u64,
    f: &mut [u32],
    fbar: &mut [bool],
    visit: &mut impl FnMut(&FreqSolution),
) {
    if top == 0 {
        visit(&FreqSolution::new(f.to_vec(), fbar.to_vec()));
        return;
    }
    let idx = top as usize - 1;
    let max_bar = if flavor.is_over() { 1 } else { 0 };
    for b in 0..=max_bar {
        let mut c = 0u64;
        while top * (b + c) <= rem {
            f[idx] = c as u32;
            fbar[idx] = b == 1;
            unrestricted(
                flavor,
                (rem - top * (b + c)).min(top - 1),
                rem - top * (b + c),
                f,
                fbar,
                visit,
            );
            c += 1;
        }
    }
    f[idx] = 0;
    fbar[idx] = false;
}
