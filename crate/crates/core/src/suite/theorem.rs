use crate::partition::{a_series, b_series, CountParams, Flavor};
use crate::report::{CheckReport, Mismatch, Outcome, Params};
use crate::series::Coefficient;

/// Reading of the exclusion `2(a+s) != 2k+2 +- d` in the companion cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ConditionMode {
    /// `2(a+s) != 2k + 2 + d`, as printed.
    #[default]
    Verbatim,
    /// `2(a+s) != 2k + 2 - d`.
    Alternative,
}

/// Identity shape selected for a tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `A_{k,a}(n) = B^0_{k,a}(n)`.
    Plain,
    /// `d < a + s`: four product-side terms.
    Below,
    /// `d = a + s`: two product-side terms.
    Equal,
    /// `d > a + s`: four terms with index `d - a - s`.
    Above,
}

impl Shape {
    pub fn id(self) -> &'static str {
        match self {
            Shape::Plain => "thm36.plain",
            Shape::Below => "thm36.d-below-a+s",
            Shape::Equal => "thm36.d-equals-a+s",
            Shape::Above => "thm36.d-above-a+s",
        }
    }
}

/// The identity shape for the tuple, or the violated hypothesis.
pub fn select_shape(cp: &CountParams, mode: ConditionMode) -> Result<Shape, String> {
    let CountParams { k, a, d, s, flavor } = *cp;
    let c = a + s;
    let congruences = |lhs: i64, what: &str| -> Result<(), String> {
        if lhs.rem_euclid(d) != 0 {
            return Err(format!("{what} = {lhs} is not 0 mod {d}"));
        }
        if (2 * (k + 1)).rem_euclid(d) != 0 {
            return Err(format!("2(k+1) = {} is not 0 mod {d}", 2 * (k + 1)));
        }
        Ok(())
    };
    let small_d = || -> Result<(), String> {
        if d > 2 {
            Err(format!("overpartition identities need d = 1 or 2, got d = {d}"))
        } else {
            Ok(())
        }
    };
    if s == 0 {
        match flavor {
            Flavor::Regular => congruences(2 * a, "2a")?,
            Flavor::Over => small_d()?,
        }
        return Ok(Shape::Plain);
    }
    match flavor {
        Flavor::Regular => {
            congruences(2 * c, "2(a+s)")?;
            let excluded = match mode {
                ConditionMode::Verbatim => 2 * k + 2 + d,
                ConditionMode::Alternative => 2 * k + 2 - d,
            };
            if 2 * c == excluded {
                return Err(format!("2(a+s) = {excluded} is excluded"));
            }
        }
        Flavor::Over => {
            small_d()?;
            if d > c {
                return Err("no overpartition identity for d > a+s".into());
            }
        }
    }
    Ok(match d.cmp(&c) {
        std::cmp::Ordering::Less => Shape::Below,
        std::cmp::Ordering::Equal => Shape::Equal,
        std::cmp::Ordering::Greater => Shape::Above,
    })
}

fn at(v: &[Coefficient], n: i64) -> Coefficient {
    if n < 0 {
        Coefficient::from(0)
    } else {
        v[n as usize].clone()
    }
}

/// Both sides of the selected identity for `n = 0..=n_max`.
pub fn theorem_sides(
    cp: &CountParams,
    shape: Shape,
    n_max: usize,
) -> crate::Result<(Vec<Coefficient>, Vec<Coefficient>)> {
    let CountParams { a, d, s, .. } = *cp;
    let c = a + s;
    let prod = |idx: i64| a_series(&cp.with_a(idx), n_max);
    let b = b_series(cp, n_max);
    let ns = 0..=n_max as i64;
    if shape == Shape::Plain {
        return Ok((prod(a)?, b));
    }
    let p1 = prod(c)?;
    let lhs: Vec<Coefficient> = match shape {
        Shape::Below => {
            let p2 = prod(c - d)?;
            ns.clone()
                .map(|n| at(&p1, n) - at(&p1, n - (d - s)) + at(&p2, n - (d - s)) - at(&p2, n - d))
                .collect()
        }
        Shape::Equal => ns.clone().map(|n| at(&p1, n) - at(&p1, n - (d - s))).collect(),
        Shape::Above => {
            let p2 = prod(d - c)?;
            ns.clone()
                .map(|n| at(&p1, n) - at(&p1, n - (d - s)) + at(&p2, n - c) - at(&p2, n - a))
                .collect()
        }
        Shape::Plain => unreachable!(),
    };
    let rhs = ns.map(|n| at(&b, n) - at(&b, n - d)).collect();
    Ok((lhs, rhs))
}

/// Evaluates the main identity for one tuple at every `n <= n_max`.
///
/// Tuples outside the stated hypotheses are skipped with the violated
/// condition; the id records the shape and, with the alternative reading,
/// a `+alt` suffix.
pub fn check_theorem_main(cp: &CountParams, n_max: i64, mode: ConditionMode) -> CheckReport {
    let params = Params {
        k: cp.k,
        a: Some(cp.a),
        d: cp.d,
        s: cp.s,
        flavor: cp.flavor,
        trunc_x: 0,
        trunc_n: n_max,
    };
    let suffix = if mode == ConditionMode::Alternative { "+alt" } else { "" };
    let shape = match select_shape(cp, mode) {
        Ok(shape) => shape,
        Err(reason) => return CheckReport::new(format!("thm36{suffix}"), params, Outcome::Skipped(reason)),
    };
    CheckReport::timed(format!("{}{suffix}", shape.id()), params, || {
        match theorem_sides(cp, shape, n_max.max(0) as usize) {
            Ok((lhs, rhs)) => match lhs.iter().zip(&rhs).position(|(l, r)| l != r) {
                None => Outcome::Pass,
                Some(n) => Outcome::Fail(Mismatch::new(-1, n as i64, &lhs[n], &rhs[n])),
            },
            Err(e) => Outcome::Fail(Mismatch::new(-1, -1, "error", e)),
        }
    })
}
