use super::{CountParams, Flavor, FreqSolution};

/// Membership in the set counted by `B^s_{k,a}` (or its overpartition
/// analogue), read literally from the definition.
///
/// Regular flavor rejects anything with an overlined part. Only `i` up to
/// `max_part` is scanned: beyond it every window sum is `0`, and `0 < k - d + 1`
/// makes the residue clause vacuous.
pub fn satisfies_b(p: &FreqSolution, cp: &CountParams) -> bool {
    let CountParams { k, a, d, s, flavor } = *cp;
    if flavor == Flavor::Regular && !p.is_regular() {
        return false;
    }
    if i64::from(p.f(1)) >= a {
        return false;
    }
    for i in 1..=p.max_part() {
        let here = i64::from(p.f(i) + p.fbar(i));
        let next = i64::from(p.f(i + 1));
        let window = here + next;
        if window >= k {
            return false;
        }
        for delta in 1..d {
            if window != k - delta {
                continue;
            }
            let f_odd = if i % 2 == 1 { here } else { next };
            let r = (a + s - 1 - f_odd - p.rho(i)).rem_euclid(d);
            if r >= delta {
                return false;
            }
        }
    }
    true
}

/// For a solution already known to satisfy every window bound `< k`, the set
/// of residues `(a + s) mod d` that the residue clause admits, as a bit mask.
///
/// Scans the frequency windows once; `f1` and the flavor test are left to
/// the caller.
pub(crate) fn admitted_residues(f: &[u32], fbar: &[bool], k: i64, d: i64) -> u64 {
    let full = if d >= 64 { u64::MAX } else { (1u64 << d) - 1 };
    let mut mask = full;
    let mut rho = 0i64;
    for i in 1..=f.len() {
        let fb = i64::from(fbar[i - 1]);
        rho += if i % 2 == 0 { fb } else { -fb };
        let here = i64::from(f[i - 1]) + fb;
        let next = f.get(i).map_or(0, |&v| i64::from(v));
        let delta = k - (here + next);
        if delta < 1 || delta >= d {
            continue;
        }
        let f_odd = if i % 2 == 1 { here } else { next };
        // r - 1 - f_odd - rho mod d in 0..delta
        let mut allowed = 0u64;
        for t in 0..delta {
            allowed |= 1 << (t + 1 + f_odd + rho).rem_euclid(d);
        }
        mask &= allowed;
        if mask == 0 {
            break;
        }
    }
    mask
}
