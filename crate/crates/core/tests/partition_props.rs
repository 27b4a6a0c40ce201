mod common;

use proptest::prelude::*;
use qident::partition::enumerate::for_each_unrestricted;
use qident::partition::{count_b, count_b_total, satisfies_b, verify_recurrence_b, CountParams, Flavor, FreqSolution};

fn params(k_max: i64) -> impl Strategy<Value = CountParams> {
    (2..=k_max, prop::sample::select(Flavor::ALL.to_vec()))
        .prop_flat_map(|(k, flavor)| (Just(k), 1..=k, 1..=k, Just(flavor)))
        .prop_flat_map(|(k, a, d, flavor)| (Just(k), Just(a), Just(d), 0..d, Just(flavor)))
        .prop_map(|(k, a, d, s, flavor)| CountParams::new(k, a, d, s, flavor).unwrap())
}

fn overpartition() -> impl Strategy<Value = FreqSolution> {
    prop::collection::vec((0u32..=3, prop::bool::ANY), 0..10).prop_map(|v| {
        let (f, fbar) = v.into_iter().unzip();
        FreqSolution::new(f, fbar)
    })
}

fn plain_and_bar(p: &FreqSolution) -> (Vec<u32>, Vec<u32>) {
    let top = p.max_part();
    (
        (1..=top).map(|i| p.f(i)).collect(),
        (1..=top).map(|i| p.fbar(i)).collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counts_bounded_by_all_partitions(cp in params(5), n in 0i64..=20) {
        let all = match cp.flavor {
            Flavor::Regular => common::restricted(20, |_| true, |_| false),
            Flavor::Over => common::mul(&common::restricted(20, |_| true, |_| false), &common::restricted(20, |_| false, |_| true)),
        };
        let b = common::to_i128(&count_b_total(&cp, n));
        prop_assert!(b >= 0 && b <= all[n as usize], "{b} vs {}", all[n as usize]);
    }

    #[test]
    fn gordon_counts_grow_with_a(k in 2i64..=5, a_frac in 0.0f64..1.0, n in 0i64..=25, over in prop::bool::ANY) {
        let a = 1 + ((k - 1) as f64 * a_frac) as i64;
        prop_assume!(a < k);
        let flavor = if over { Flavor::Over } else { Flavor::Regular };
        let cp = CountParams::new(k, a, 1, 0, flavor).unwrap();
        prop_assert!(count_b_total(&cp, n) <= count_b_total(&cp.with_a(a + 1), n));
    }

    #[test]
    fn rho_and_v_differ_by_twice_the_odd_overlines(p in overpartition()) {
        for i in 1..=p.max_part() + 2 {
            let odd = (1..=i).filter(|j| j % 2 == 1).map(|j| i64::from(p.fbar(j))).sum::<i64>();
            prop_assert_eq!(p.rho(i) + 2 * odd, p.v_stat(i));
            prop_assert_eq!((p.rho(i) - p.v_stat(i)).rem_euclid(2), 0);
        }
    }

    #[test]
    fn predicate_matches_transcription(p in overpartition(), cp in params(5)) {
        let (f, fbar) = plain_and_bar(&p);
        let oracle = common::multiplicity_condition(&f, &fbar, cp.k, cp.a, cp.d, cp.s);
        let over = cp.with_flavor(Flavor::Over);
        prop_assert_eq!(satisfies_b(&p, &over), oracle);
        prop_assert_eq!(satisfies_b(&p, &cp.with_flavor(Flavor::Regular)), oracle && p.is_regular());
    }

    #[test]
    fn recurrence_holds(cp in params(4)) {
        let r = verify_recurrence_b(&cp, 14, 14);
        prop_assert!(r.passed(), "{}", r);
    }
}

/// Brute force over every (over)partition, for each valid tuple, agrees with
/// the table; the regular counters are the over counters restricted to
/// partitions without overlines.
#[test]
fn table_matches_brute_force() {
    let n_max = 11u64;
    let mut regular = Vec::new();
    let mut over = Vec::new();
    for_each_unrestricted(Flavor::Over, n_max, |p| {
        let (f, fbar) = plain_and_bar(p);
        let entry = (f, fbar, p.length() as i64, p.weight() as i64);
        if p.is_regular() {
            regular.push(entry.clone());
        }
        over.push(entry);
    });
    for k in 2..=4 {
        for d in 1..=k {
            for s in 0..d {
                for a in 1..=k {
                    for (flavor, sols) in [(Flavor::Regular, &regular), (Flavor::Over, &over)] {
                        let cp = CountParams::new(k, a, d, s, flavor).unwrap();
                        let mut counts = std::collections::HashMap::new();
                        for (f, fbar, m, n) in sols.iter() {
                            if common::multiplicity_condition(f, fbar, k, a, d, s) {
                                *counts.entry((*m, *n)).or_insert(0i64) += 1;
                            }
                        }
                        for n in 0..=n_max as i64 {
                            for m in 0..=n {
                                let want = counts.get(&(m, n)).copied().unwrap_or(0);
                                assert_eq!(count_b(&cp, m, n), want.into(), "{cp:?} at (m, n) = ({m}, {n})");
                            }
                        }
                    }
                }
            }
        }
    }
}
