use super::g::{g_scaled, GParams};
use super::terms::{alpha, beta, scaled_term, Kind, SeriesParams};
use super::{compare, params};
use crate::error::Result;
use crate::partition::Flavor;
use crate::report::{CheckReport, Mismatch, Outcome};
use crate::series::{BiSeries, PowerSeries};

/// The four shapes of the term recurrences; each exists for both flavors,
/// so there are eight displays. The `Wrap` shapes are the `s = d - 1`
/// instances, where `s + 1` wraps to `0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Display {
    Alpha,
    AlphaWrap,
    Beta,
    BetaWrap,
}

impl Display {
    pub const ALL: [Display; 4] = [Display::Alpha, Display::AlphaWrap, Display::Beta, Display::BetaWrap];

    pub fn id(self) -> &'static str {
        match self {
            Display::Alpha => "lemma33.alpha",
            Display::AlphaWrap => "lemma33.alpha-wrap",
            Display::Beta => "lemma33.beta",
            Display::BetaWrap => "lemma33.beta-wrap",
        }
    }

    /// Residues `s` the display is stated for.
    pub fn residues(self, d: i64) -> std::ops::Range<i64> {
        match self {
            Display::Alpha | Display::Beta => 0..(d - 1).max(0),
            Display::AlphaWrap | Display::BetaWrap => (d - 1)..d,
        }
    }
}

/// Reading of the overpartition term in the wrap-around beta display.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `(x q^(-n))^(k-a+1-d)`, as printed.
    Printed,
    /// `(q^(-n))^(k-a+1-d)`, matching the sibling displays.
    Corrected,
}

/// Truncation needed so that every term of every display up to summation
/// index `n_max` has content in the box: the largest lowest q-degree is
/// `M n(n+1)/2 + k (n+1)`, from `beta_n (x q^(n+1))^a`.
pub fn required_trunc(k: i64, d: i64, flavor: Flavor, n_max: i64) -> i64 {
    flavor.modulus(k, d) * n_max * (n_max + 1) / 2 + k * (n_max + 1) + 2
}

/// Both sides of one display at `(s, a, n)`.
#[allow(clippy::too_many_arguments)]
pub fn display_sides(
    disp: Display,
    variant: Variant,
    k: i64,
    d: i64,
    s: i64,
    a: i64,
    n: i64,
    flavor: Flavor,
    x_order: usize,
    trunc: i64,
) -> Result<(BiSeries, BiSeries)> {
    let sp = |s: i64, n: i64| SeriesParams::new(k, d, s, n, flavor);
    let term = |kind, p: &SeriesParams, subst, u, v| scaled_term(kind, p, subst, u, v, x_order, trunc);
    let e1 = k - a + 1 - s;
    let e2 = k - a - s;
    let over = flavor == Flavor::Over;
    match disp {
        Display::Alpha | Display::AlphaWrap => {
            let lhs = term(Kind::Alpha, &sp(s, n), false, 0, -n * a)?.try_sub(&term(
                Kind::Alpha,
                &sp(s + 1, n),
                false,
                0,
                -n * (a - 1),
            )?)?;
            let prev = sp(0, n - 1);
            let mut rhs = term(Kind::Beta, &prev, true, a - 1 + e1, a - 1 + (n + 1) * e1)?;
            if over {
                rhs = rhs.try_add(&term(Kind::Beta, &prev, true, a + e2, a + (n + 1) * e2)?)?;
            }
            Ok((lhs, rhs))
        }
        Display::Beta | Display::BetaWrap => {
            let lhs = term(Kind::Beta, &sp(s, n), false, a, a * (n + 1))?.try_sub(&term(
                Kind::Beta,
                &sp(s + 1, n),
                false,
                a - 1,
                (a - 1) * (n + 1),
            )?)?;
            let base = sp(0, n);
            let mut rhs = term(Kind::Alpha, &base, true, a - 1, a - 1 - n * e1)?;
            if over {
                let u = match (disp, variant) {
                    (Display::BetaWrap, Variant::Printed) => a + e2,
                    _ => a,
                };
                rhs = rhs.try_add(&term(Kind::Alpha, &base, true, u, a - n * e2)?)?;
            }
            Ok((lhs, rhs))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn first_failure(
    disp: Display,
    variant: Variant,
    k: i64,
    d: i64,
    s: i64,
    a: i64,
    flavor: Flavor,
    n_max: i64,
    x_order: usize,
    trunc: i64,
) -> Result<Option<(i64, Mismatch)>> {
    for n in 0..=n_max {
        let (lhs, rhs) = display_sides(disp, variant, k, d, s, a, n, flavor, x_order, trunc)?;
        if let Some(m) = compare(&lhs, &rhs)? {
            return Ok(Some((n, m)));
        }
    }
    Ok(None)
}

fn outcome_of(r: Result<Option<(i64, Mismatch)>>) -> (Outcome, Option<i64>) {
    match r {
        Ok(None) => (Outcome::Pass, None),
        Ok(Some((n, m))) => (Outcome::Fail(m), Some(n)),
        Err(e) => (Outcome::Fail(Mismatch::new(-1, -1, "error", e)), None),
    }
}

/// Checks every display for one `(k, d, flavor)` at all `s` in its group,
/// all `1 <= a <= k` and summation indices `0..=n_max`. One report per
/// `(display, s, a)`; a failing report's id ends in `@n<index>`.
///
/// For the overpartition wrap-around beta display both readings are
/// evaluated and the id records which held: `[corrected]`, `[printed]`,
/// `[both]` or `[neither]`.
pub fn verify_alpha_beta_recurrences(k: i64, d: i64, flavor: Flavor, n_max: i64, x_order: usize) -> Vec<CheckReport> {
    let trunc = required_trunc(k, d, flavor, n_max);
    let mut out = Vec::new();
    for disp in Display::ALL {
        for s in disp.residues(d) {
            for a in 1..=k {
                let p = params(k, Some(a), d, s, flavor, x_order, trunc);
                let two_readings = disp == Display::BetaWrap && flavor == Flavor::Over;
                let mut id = disp.id().to_string();
                let report = CheckReport::timed(String::new(), p, || {
                    let run = |v| first_failure(disp, v, k, d, s, a, flavor, n_max, x_order, trunc);
                    let (corrected, at) = outcome_of(run(Variant::Corrected));
                    if !two_readings {
                        if let Some(n) = at {
                            id.push_str(&format!("@n{n}"));
                        }
                        return corrected;
                    }
                    let (printed, _) = outcome_of(run(Variant::Printed));
                    let tag = match (&corrected, &printed) {
                        (Outcome::Pass, Outcome::Pass) => "[both]",
                        (Outcome::Pass, _) => "[corrected]",
                        (_, Outcome::Pass) => "[printed]",
                        _ => "[neither]",
                    };
                    id.push_str(tag);
                    if corrected == Outcome::Pass {
                        corrected
                    } else {
                        printed
                    }
                });
                out.push(CheckReport { check_id: id, ..report });
            }
        }
    }
    out
}

/// `alpha[s]_0(0; q) = 1` for every `s`, and `alpha[s]_n = -beta[s]_n`
/// whenever `2s = 0 (mod d)`, for `n <= n_max`.
pub fn verify_term_initial(k: i64, d: i64, flavor: Flavor, n_max: i64, x_order: usize) -> Vec<CheckReport> {
    let trunc = required_trunc(k, d, flavor, n_max);
    let mut out = Vec::new();
    for s in 0..d {
        let p = params(k, None, d, s, flavor, x_order, trunc);
        out.push(CheckReport::timed("lemma33.alpha0-at-x0", p.clone(), || {
            let sp = SeriesParams::new(k, d, s, 0, flavor);
            match alpha(&sp, x_order, trunc).and_then(|t| t.at_x_zero()) {
                Ok(row) => match row.first_difference(&PowerSeries::one(trunc as usize), trunc as usize) {
                    None => Outcome::Pass,
                    Some(j) => Outcome::Fail(Mismatch::new(0, j as i64, row.coeff(j), i64::from(j == 0))),
                },
                Err(e) => Outcome::Fail(Mismatch::new(-1, -1, "error", e)),
            }
        }));
        if (2 * s) % d == 0 {
            out.push(CheckReport::timed("lemma33.alpha-eq-minus-beta", p, || {
                for n in 0..=n_max {
                    let sp = SeriesParams::new(k, d, s, n, flavor);
                    let pair = alpha(&sp, x_order, trunc)
                        .and_then(|a| Ok((a, beta(&sp, x_order, trunc)?)))
                        .and_then(|(a, b)| compare(&a, &(-&b)));
                    match pair {
                        Ok(None) => {}
                        Ok(Some(m)) => return Outcome::Fail(m),
                        Err(e) => return Outcome::Fail(Mismatch::new(-1, -1, "error", e)),
                    }
                }
                Outcome::Pass
            }));
        }
    }
    out
}

/// Both sides of the `G` functional equation
/// `G^s_a(x) - G^(s+1)_(a-1)(x) = (xq)^(a-1) G^0_(k-a+1-s)(xq)`, plus
/// `(xq)^a Gbar^0_(k-a-s)(xq)` for overpartitions.
pub fn g_equation_sides(gp: &GParams, x_order: usize, trunc: i64) -> Result<(BiSeries, BiSeries)> {
    let GParams { k, a, s, .. } = *gp;
    let lhs = g_scaled(gp, false, 0, 0, x_order, trunc)?.try_sub(&g_scaled(
        &gp.with_a(a - 1).with_s(s + 1),
        false,
        0,
        0,
        x_order,
        trunc,
    )?)?;
    let mut rhs = g_scaled(&gp.with_a(k - a + 1 - s).with_s(0), true, a - 1, a - 1, x_order, trunc)?;
    if gp.flavor == Flavor::Over {
        rhs = rhs.try_add(&g_scaled(&gp.with_a(k - a - s).with_s(0), true, a, a, x_order, trunc)?)?;
    }
    Ok((lhs, rhs))
}

fn compare_outcome(r: Result<Option<Mismatch>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Pass,
        Ok(Some(m)) => Outcome::Fail(m),
        Err(e) => Outcome::Fail(Mismatch::new(-1, -1, "error", e)),
    }
}

/// The `G` functional equation, `G(0; q) = 1`, and `G^s_{k,0} = 0` when
/// `2s = 0 (mod d)`, for one `(k, d, s, flavor)` and every `a`.
pub fn verify_g_equations(k: i64, d: i64, s: i64, flavor: Flavor, x_order: usize, trunc: i64) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for a in 1..=k {
        let gp = GParams::new(k, a, d, s, flavor);
        let p = params(k, Some(a), d, s, flavor, x_order, trunc);
        out.push(CheckReport::timed("lemma33.g-equation", p.clone(), || {
            compare_outcome(g_equation_sides(&gp, x_order, trunc).and_then(|(l, r)| compare(&l, &r)))
        }));
        out.push(CheckReport::timed("lemma33.g-at-x0", p, || {
            let one = BiSeries::one(x_order, trunc);
            compare_outcome(g_scaled(&gp, false, 0, 0, x_order, trunc).and_then(|g| {
                let row0 = g.truncate(0, trunc)?;
                compare(&row0, &one.truncate(0, trunc)?)
            }))
        }));
    }
    if (2 * s) % d == 0 {
        let gp = GParams::new(k, 0, d, s, flavor);
        let p = params(k, Some(0), d, s, flavor, x_order, trunc);
        out.push(CheckReport::timed("lemma33.g-index-zero", p, || {
            compare_outcome(
                g_scaled(&gp, false, 0, 0, x_order, trunc).and_then(|g| compare(&g, &BiSeries::zero(x_order, trunc))),
            )
        }));
    }
    out
}
