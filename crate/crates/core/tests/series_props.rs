mod common;

use proptest::prelude::*;
use qident::partition::{count_b, count_b_total, CountParams, Flavor};
use qident::series::{poch_inf, triple_product, BiSeries, Coefficient, Monomial, PowerSeries};

fn power(trunc: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec(-30i64..=30, trunc + 1).prop_map(move |c| PowerSeries::from_coeffs(trunc, c))
}

const X: usize = 3;
const N: i64 = 12;

fn bi() -> impl Strategy<Value = BiSeries> {
    prop::collection::vec(-9i64..=9, (X + 1) * (N as usize + 1))
        .prop_map(|c| BiSeries::from_fn(X, N, |m, j| Coefficient::from(c[m * (N as usize + 1) + j as usize])))
}

/// Operands reaching down to `q^-low`, in the same box.
fn laurent() -> impl Strategy<Value = BiSeries> {
    (bi(), 1i64..=3).prop_map(|(b, low)| {
        let wide = BiSeries::from_fn(X, N + low, |m, j| b.coeff(m, j.min(N)));
        wide.shift(0, -low)
    })
}

fn unit_bi() -> impl Strategy<Value = BiSeries> {
    (
        prop::collection::vec(-9i64..=9, (X + 1) * (N as usize + 1)),
        prop::bool::ANY,
    )
        .prop_map(|(c, neg)| {
            BiSeries::from_fn(X, N, |m, j| {
                if m == 0 && j == 0 {
                    Coefficient::from(if neg { -1 } else { 1 })
                } else {
                    Coefficient::from(c[m * (N as usize + 1) + j as usize])
                }
            })
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_ring_axioms(a in power(20), b in power(20), c in power(20)) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.try_mul(&a).unwrap());
        prop_assert_eq!(ab.try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            ab.try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.try_add(&b).unwrap().try_sub(&b).unwrap(), a);
    }

    #[test]
    fn power_product_is_convolution(a in power(15), b in power(15)) {
        let lhs: Vec<i128> = a.coeffs().iter().map(common::to_i128).collect();
        let rhs: Vec<i128> = b.coeffs().iter().map(common::to_i128).collect();
        let expect = common::mul(&lhs, &rhs);
        let got: Vec<i128> = a.try_mul(&b).unwrap().coeffs().iter().map(common::to_i128).collect();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn power_inverse_two_sided(mut a in power(20), neg in prop::bool::ANY) {
        let mut c: Vec<Coefficient> = a.coeffs().to_vec();
        c[0] = Coefficient::from(if neg { -1 } else { 1 });
        a = PowerSeries::from_coeffs(20, c);
        let inv = a.invert_unit().unwrap();
        prop_assert_eq!(a.try_mul(&inv).unwrap(), PowerSeries::one(20));
        prop_assert_eq!(inv.try_mul(&a).unwrap(), PowerSeries::one(20));
        prop_assert_eq!(inv.invert_unit().unwrap(), a);
    }

    #[test]
    fn non_units_rejected(a in power(10), c0 in prop::sample::select(vec![0i64, 2, -2, 5])) {
        let mut c: Vec<Coefficient> = a.coeffs().to_vec();
        c[0] = Coefficient::from(c0);
        prop_assert!(PowerSeries::from_coeffs(10, c).invert_unit().is_err());
    }

    #[test]
    fn bi_ring_axioms(a in bi(), b in bi(), c in bi()) {
        let ab = a.try_mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.try_mul(&a).unwrap());
        prop_assert_eq!(ab.try_mul(&c).unwrap(), a.try_mul(&b.try_mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.try_mul(&b.try_add(&c).unwrap()).unwrap(),
            ab.try_add(&a.try_mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.try_add(&-&a).unwrap().is_zero());
        prop_assert_eq!(a.try_mul(&BiSeries::one(X, N)).unwrap(), a);
    }

    #[test]
    fn laurent_additive_group(a in laurent(), b in laurent(), c in bi()) {
        let ab = a.try_add(&b).unwrap();
        prop_assert_eq!(&ab, &b.try_add(&a).unwrap());
        prop_assert_eq!(ab.try_add(&c).unwrap(), a.try_add(&b.try_add(&c).unwrap()).unwrap());
        prop_assert_eq!(ab.try_sub(&b).unwrap(), a.clone());
        if !a.is_ordinary() {
            prop_assert!(a.try_mul(&c).is_err());
            prop_assert!(a.invert_unit().is_err());
        }
    }

    #[test]
    fn bi_inverse_two_sided(u in unit_bi()) {
        let inv = u.invert_unit().unwrap();
        prop_assert_eq!(u.try_mul(&inv).unwrap(), BiSeries::one(X, N));
        prop_assert_eq!(inv.try_mul(&u).unwrap(), BiSeries::one(X, N));
    }

    #[test]
    fn binomial_division_undoes_multiplication(a in bi(), c in -3i64..=3, u in 0usize..=2, v in 0i64..=4) {
        prop_assume!(u + v as usize > 0);
        let mut s = a.clone();
        // multiply by 1 + c x^u q^v, divide by 1 - (-c) x^u q^v
        s.mul_binomial(c, u, v);
        s.div_binomial(-c, u, v);
        prop_assert_eq!(s, a);
    }

    #[test]
    fn jacobi_triple_product(m in 2i64..=14, c_frac in 0.0f64..1.0, n in 0usize..=60) {
        let c = 1 + ((m - 1) as f64 * c_frac) as i64;
        let c = c.min(m - 1);
        let mut sum = vec![0i128; n + 1];
        for j in -30i64..=30 {
            let e = m * j * (j - 1) / 2 + c * j;
            if (0..=n as i64).contains(&e) {
                sum[e as usize] += if j % 2 == 0 { 1 } else { -1 };
            }
        }
        let tp: Vec<i128> = triple_product(c, m, n).unwrap().coeffs().iter().map(common::to_i128).collect();
        prop_assert_eq!(tp, sum);
    }

    #[test]
    fn euler_identity(n in 0i64..=60) {
        let plus = poch_inf(Monomial::q(1).negated(), 1, 0, n).unwrap().at_x_zero().unwrap();
        let odd = poch_inf(Monomial::q(1), 2, 0, n).unwrap().at_x_zero().unwrap();
        prop_assert_eq!(plus.try_mul(&odd).unwrap(), PowerSeries::one(n as usize));
    }

    #[test]
    fn mixed_orders_rejected(x in 0usize..4, n in 0i64..10, dx in 1usize..3) {
        let a = BiSeries::one(x, n);
        prop_assert!(a.try_add(&BiSeries::one(x + dx, n)).is_err());
        prop_assert!(a.try_mul(&BiSeries::one(x, n + dx as i64)).is_err());
    }
}

#[test]
fn counter_series_at_x_one() {
    let cp = CountParams::new(2, 2, 1, 0, Flavor::Regular).unwrap();
    let (x, n) = (20usize, 20i64);
    let b = BiSeries::from_fn(x, n, |m, j| count_b(&cp, m as i64, j));
    let (total, upto) = b.eval_x_one().unwrap();
    // every partition of n has at most n parts, so nothing is lost here
    assert_eq!(upto, 0);
    for j in 0..=n {
        assert_eq!(total.coeff(j as usize), count_b_total(&cp, j), "n = {j}");
    }
    let (z, _) = BiSeries::zero(3, 9).eval_x_one().unwrap();
    assert!(z.is_zero());
}

#[test]
fn eval_x_one_rejects_laurent() {
    let s = BiSeries::one(2, 6).shift(0, -1);
    assert!(s.eval_x_one().is_err());
}
