use super::{count_b, CountParams, Flavor};
use crate::report::{CheckReport, Mismatch, Outcome, Params};
use crate::series::Coefficient;

pub const CHECK_ID: &str = "lemma31";
/// Suffix appended to the check id when a negative lower index was
/// evaluated as zero.
pub const ZERO_EXTENDED: &str = "+zero-extended";

/// Right side of the multiplicity recurrence at `(m, n)`:
/// `b^(s+1)_{a-1}(m, n) + b^0_{k-a+1-s}(m-a+1, n-m)`, plus
/// `bbar^0_{k-a-s}(m-a, n-m)` for overpartitions.
pub fn recurrence_rhs(cp: &CountParams, m: i64, n: i64) -> Coefficient {
    let CountParams { k, a, s, .. } = *cp;
    let mut rhs =
        count_b(&cp.with_a(a - 1).with_s(s + 1), m, n) + count_b(&cp.with_a(k - a + 1 - s).with_s(0), m - a + 1, n - m);
    if cp.flavor == Flavor::Over {
        rhs += count_b(&cp.with_a(k - a - s).with_s(0), m - a, n - m);
    }
    rhs
}

/// Whether the recurrence for `cp` references a counter with negative lower
/// index (taken as zero).
pub fn uses_zero_extension(cp: &CountParams) -> bool {
    let CountParams { k, a, s, .. } = *cp;
    k - a + 1 - s < 0 || (cp.flavor == Flavor::Over && k - a - s < 0)
}

fn report(id: String, cp: &CountParams, m_max: i64, n_max: i64, rhs: impl Fn(i64, i64) -> Coefficient) -> CheckReport {
    let params = Params {
        k: cp.k,
        a: Some(cp.a),
        d: cp.d,
        s: cp.s,
        flavor: cp.flavor,
        trunc_x: m_max.max(0) as usize,
        trunc_n: n_max,
    };
    CheckReport::timed(id, params, || {
        for n in 0..=n_max {
            for m in 0..=m_max {
                let lhs = count_b(cp, m, n);
                let r = rhs(m, n);
                if lhs != r {
                    return Outcome::Fail(Mismatch::new(m, n, lhs, r));
                }
            }
        }
        Outcome::Pass
    })
}

/// Checks the recurrence coefficientwise for all `m <= m_max`, `n <= n_max`,
/// both sides by enumeration.
pub fn verify_recurrence_b(cp: &CountParams, m_max: i64, n_max: i64) -> CheckReport {
    let mut id = CHECK_ID.to_string();
    if uses_zero_extension(cp) {
        id.push_str(ZERO_EXTENDED);
    }
    report(id, cp, m_max, n_max, |m, n| recurrence_rhs(cp, m, n))
}

/// The recurrence with the overpartition term as it reads in the proof text,
/// `bbar^0_{k-a+s-1}(m-a+1, m-n)`. Not expected to hold.
pub fn verify_recurrence_b_prose(cp: &CountParams, m_max: i64, n_max: i64) -> CheckReport {
    let CountParams { k, a, s, .. } = *cp;
    report(format!("{CHECK_ID}.prose"), cp, m_max, n_max, |m, n| {
        let mut rhs = count_b(&cp.with_a(a - 1).with_s(s + 1), m, n)
            + count_b(&cp.with_a(k - a + 1 - s).with_s(0), m - a + 1, n - m);
        if cp.flavor == Flavor::Over {
            rhs += count_b(&cp.with_a(k - a + s - 1).with_s(0), m - a + 1, m - n);
        }
        rhs
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gordon_recurrence() {
        let cp = CountParams::new(2, 2, 1, 0, Flavor::Regular).unwrap();
        let r = verify_recurrence_b(&cp, 20, 20);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn over_recurrence() {
        let cp = CountParams::new(3, 2, 2, 1, Flavor::Over).unwrap();
        let r = verify_recurrence_b(&cp, 15, 15);
        assert!(r.passed(), "{r}");
        assert_eq!(r.check_id, CHECK_ID);
    }

    #[test]
    fn a_equal_one_drops_first_term() {
        let cp = CountParams::new(3, 1, 3, 2, Flavor::Regular).unwrap();
        for n in 0..12 {
            for m in 0..12 {
                let reduced = count_b(&cp.with_a(3 - 1 + 1 - 2).with_s(0), m, n - m);
                assert_eq!(recurrence_rhs(&cp, m, n), reduced);
            }
        }
    }

    #[test]
    fn zero_extension_flagged() {
        let cp = CountParams::new(3, 3, 3, 2, Flavor::Over).unwrap();
        assert!(uses_zero_extension(&cp));
        let r = verify_recurrence_b(&cp, 10, 10);
        assert!(r.check_id.ends_with(ZERO_EXTENDED));
        assert!(!uses_zero_extension(&cp.with_a(1)));
    }

    #[test]
    fn prose_variant_fails() {
        let cp = CountParams::new(3, 2, 2, 1, Flavor::Over).unwrap();
        let r = verify_recurrence_b_prose(&cp, 15, 15);
        assert!(r.failed(), "{r}");
    }
}
