//! Parameter sweeps over every check, producing an ordered report list.

mod config;
mod theorem;

use std::fs::File;
use std::io::BufWriter;
use std::path::Path;

use rayon::prelude::*;

pub use config::{Check, Grid, SuiteConfig, Tuple};
pub use theorem::{check_theorem_main, select_shape, theorem_sides, ConditionMode, Shape};

use crate::error::Result;
use crate::lemma::{
    bridging_sides, compare, enumerated_f, g_at_one_products, g_series, product_form, theta,
    verify_alpha_beta_recurrences, verify_g_equations, verify_term_initial, Form, GParams, Laurent, RecurrenceTable,
};
use crate::partition::{verify_recurrence_b, write_counter_csv, CountParams, Flavor};
use crate::report::{CheckReport, Mismatch, Outcome, Params};
use crate::series::export::write_bi_csv;

/// Applicability of the series identification `F = G`.
pub fn series_identity_applies(t: &Tuple) -> std::result::Result<(), String> {
    match t.flavor {
        Flavor::Regular => {
            let (lhs, rhs) = (2 * (t.a + t.s), 2 * (t.k + 1));
            if lhs.rem_euclid(t.d) != 0 {
                Err(format!("2(a+s) = {lhs} is not 0 mod {}", t.d))
            } else if rhs.rem_euclid(t.d) != 0 {
                Err(format!("2(k+1) = {rhs} is not 0 mod {}", t.d))
            } else {
                Ok(())
            }
        }
        Flavor::Over if t.d <= 2 => Ok(()),
        Flavor::Over => Err(format!(
            "overpartition identification needs d = 1 or 2, got d = {}",
            t.d
        )),
    }
}

fn cp_of(t: &Tuple) -> CountParams {
    CountParams {
        k: t.k,
        a: t.a,
        d: t.d,
        s: t.s,
        flavor: t.flavor,
    }
}

fn gp_of(t: &Tuple) -> GParams {
    GParams::new(t.k, t.a, t.d, t.s, t.flavor)
}

fn params(t: &Tuple, x: usize, n: i64) -> Params {
    Params {
        k: t.k,
        a: Some(t.a),
        d: t.d,
        s: t.s,
        flavor: t.flavor,
        trunc_x: x,
        trunc_n: n,
    }
}

fn error_outcome(e: impl std::fmt::Display) -> Outcome {
    Outcome::Fail(Mismatch::new(-1, -1, "error", e))
}

fn series_outcome(r: Result<Option<Mismatch>>) -> Outcome {
    match r {
        Ok(None) => Outcome::Pass,
        Ok(Some(m)) => Outcome::Fail(m),
        Err(e) => error_outcome(e),
    }
}

/// `F` by recurrence against `F` by enumeration.
pub fn check_recurrence_f(t: &Tuple, x: usize, n: i64) -> CheckReport {
    CheckReport::timed("cor32", params(t, x, n), || {
        let table = RecurrenceTable::build(t.k, t.d, t.flavor, x, n as usize);
        series_outcome(compare(
            &table.series(t.a, t.s),
            &enumerated_f(&cp_of(t), x, n as usize),
        ))
    })
}

/// `G` against `F` by enumeration and by recurrence.
pub fn check_series_identity(t: &Tuple, x: usize, n: i64) -> Vec<CheckReport> {
    let p = params(t, x, n);
    if let Err(why) = series_identity_applies(t) {
        return ["cor34.enumeration", "cor34.recurrence"]
            .map(|id| CheckReport::new(id, p.clone(), Outcome::Skipped(why.clone())))
            .to_vec();
    }
    let g = g_series(&gp_of(t), x, n);
    let enumeration = CheckReport::timed("cor34.enumeration", p.clone(), || match &g {
        Ok(g) => series_outcome(compare(&enumerated_f(&cp_of(t), x, n as usize), g)),
        Err(e) => error_outcome(e),
    });
    let recurrence = CheckReport::timed("cor34.recurrence", p, || match &g {
        Ok(g) => {
            let f = RecurrenceTable::build(t.k, t.d, t.flavor, x, n as usize).series(t.a, t.s);
            series_outcome(compare(&f, g))
        }
        Err(e) => error_outcome(e),
    });
    vec![enumeration, recurrence]
}

fn laurent_outcome(lhs: &Laurent, rhs: &Laurent, upto: i64) -> Outcome {
    match crate::lemma::products::first_laurent_difference(lhs, rhs, upto) {
        None => Outcome::Pass,
        Some(m) => Outcome::Fail(m),
    }
}

/// `G(1; q)` against both product combinations up to `q^(N-X)`, and the
/// bridging identity between them.
pub fn check_products(t: &Tuple, x: usize, n: i64) -> Vec<CheckReport> {
    let p = params(t, x, n);
    let (bl, br) = bridging_sides(t.a, t.d, t.s);
    let bridge = CheckReport::new("prop35.bridge", p.clone(), laurent_outcome(&bl, &br, 4 * (t.k + t.d)));
    let gp = gp_of(t);
    match g_series(&gp, x, n) {
        Err(crate::Error::Invariant(why)) => {
            let reason = format!("G is not a power series: {why}");
            return vec![
                bridge,
                CheckReport::new("prop35.first-form", p.clone(), Outcome::Skipped(reason.clone())),
                CheckReport::new("prop35.second-form", p, Outcome::Skipped(reason)),
            ];
        }
        Err(e) => return vec![bridge, CheckReport::new("prop35.first-form", p, error_outcome(e))],
        Ok(_) => {}
    }
    let mut out = vec![bridge];
    for (id, form) in [("prop35.first-form", Form::First), ("prop35.second-form", Form::Second)] {
        out.push(CheckReport::timed(id, p.clone(), || {
            match g_at_one_products(&gp, x, n).and_then(|ev| {
                let target = product_form(&gp, form, n)?;
                Ok((Laurent::from_power_series(&ev.direct), target, ev.valid_upto))
            }) {
                Ok((direct, target, upto)) => laurent_outcome(&direct, &target, upto as i64),
                Err(e) => error_outcome(e),
            }
        }));
    }
    out
}

/// The bilateral theta sum against the triple product for `0 <= c <= M`,
/// and its two reflections, for one `(k, d, flavor)`.
pub fn check_theta(k: i64, d: i64, flavor: Flavor, n: i64) -> CheckReport {
    let p = Params {
        k,
        a: None,
        d,
        s: 0,
        flavor,
        trunc_x: 0,
        trunc_n: n,
    };
    CheckReport::timed("prop35.theta", p, || {
        let m = flavor.modulus(k, d);
        for c in 0..=m {
            let th = theta(m, c, n);
            let tp = match crate::lemma::products::product_factor(c, m, n) {
                Ok(tp) => tp,
                Err(e) => return error_outcome(e),
            };
            if let Outcome::Fail(mm) = laurent_outcome(&th, &tp, n) {
                return Outcome::Fail(mm);
            }
            let minus = Laurent::polynomial(&[(-c, -1)]);
            let reflected = match minus.mul(&theta(m, c, n + c)).truncate(n) {
                Ok(r) => r,
                Err(e) => return error_outcome(e),
            };
            for other in [theta(m, -c, n), theta(m, c + m, n)] {
                if let Outcome::Fail(mm) = laurent_outcome(&other, &reflected, n) {
                    return Outcome::Fail(mm);
                }
            }
        }
        Outcome::Pass
    })
}

/// For each tuple where the series identification applies and passed,
/// the main identity must not fail; skipped is reported, not excused.
fn closure_reports(reports: &[CheckReport], mode: ConditionMode) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for r in reports
        .iter()
        .filter(|r| r.check_id == "cor34.enumeration" && r.passed())
    {
        let thm = reports.iter().find(|t| {
            t.check_id.starts_with("thm36")
                && t.params.k == r.params.k
                && t.params.a == r.params.a
                && t.params.d == r.params.d
                && t.params.s == r.params.s
                && t.params.flavor == r.params.flavor
        });
        let Some(thm) = thm else { continue };
        let p = Params {
            trunc_x: 0,
            ..r.params.clone()
        };
        let outcome = match (&thm.status, &thm.first_mismatch) {
            (crate::report::Status::Pass, _) => Outcome::Pass,
            (crate::report::Status::Skipped(why), _) => Outcome::Skipped(format!("main identity skipped: {why}")),
            (_, Some(m)) => Outcome::Fail(m.clone()),
            (_, None) => error_outcome("main identity failed without mismatch"),
        };
        let id = if mode == ConditionMode::Alternative {
            "closure.cor34-thm36+alt"
        } else {
            "closure.cor34-thm36"
        };
        out.push(CheckReport::new(id, p, outcome));
    }
    out
}

enum Job {
    Tuple(Check, Tuple),
    Family(Check, i64, i64, Flavor),
}

/// Runs the configured checks. Configuration errors are raised before any
/// computation; the result is sorted by `(check_id, params)`.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<CheckReport>> {
    config.validate()?;
    let mode = if config.alt_condition {
        ConditionMode::Alternative
    } else {
        ConditionMode::Verbatim
    };
    let (x, n) = (config.trunc_x, config.trunc_n);
    let tuples = config.tuples();
    let mut jobs = Vec::new();
    for &check in &config.checks {
        match check {
            Check::Lemma33 => {
                for (k, d, flavor) in config.families() {
                    jobs.push(Job::Family(check, k, d, flavor));
                }
            }
            Check::Prop35 => {
                for (k, d, flavor) in config.families() {
                    jobs.push(Job::Family(check, k, d, flavor));
                }
                jobs.extend(tuples.iter().map(|&t| Job::Tuple(check, t)));
            }
            _ => jobs.extend(tuples.iter().map(|&t| Job::Tuple(check, t))),
        }
    }
    let in_grid =
        |r: &CheckReport| r.params.a.is_none_or(|a| a == 0 || config.a.contains(a)) && config.s.contains(r.params.s);
    let mut reports: Vec<CheckReport> = jobs
        .par_iter()
        .flat_map_iter(|job| match *job {
            Job::Tuple(Check::Lemma31, t) => vec![verify_recurrence_b(&cp_of(&t), n, n)],
            Job::Tuple(Check::Cor32, t) => vec![check_recurrence_f(&t, x, n)],
            Job::Tuple(Check::Cor34, t) => check_series_identity(&t, x, n),
            Job::Tuple(Check::Prop35, t) => check_products(&t, x, n),
            Job::Tuple(Check::Thm36, t) => vec![check_theorem_main(&cp_of(&t), n, mode)],
            Job::Tuple(Check::Lemma33, _) => Vec::new(),
            Job::Family(Check::Lemma33, k, d, flavor) => {
                let mut v = verify_alpha_beta_recurrences(k, d, flavor, config.index_max, x);
                v.extend(verify_term_initial(k, d, flavor, config.index_max, x));
                for s in 0..d {
                    v.extend(verify_g_equations(k, d, s, flavor, x, n));
                }
                v.retain(|r| in_grid(r));
                v
            }
            Job::Family(Check::Prop35, k, d, flavor) => vec![check_theta(k, d, flavor, n)],
            Job::Family(..) => Vec::new(),
        })
        .collect();
    if config.checks.contains(&Check::Cor34) && config.checks.contains(&Check::Thm36) {
        let closure = closure_reports(&reports, mode);
        reports.extend(closure);
    }
    reports.sort_by(|a, b| (&a.check_id, &a.params).cmp(&(&b.check_id, &b.params)));
    Ok(reports)
}

/// Writes `counters.csv` (every tuple of the grid) and one
/// `g_k{k}_a{a}_d{d}_s{s}_{flavor}.csv` per tuple whose `G` is a power series.
pub fn export_csv(config: &SuiteConfig, dir: &Path) -> Result<()> {
    config.validate()?;
    std::fs::create_dir_all(dir)?;
    let tuples = config.tuples();
    let cps: Vec<CountParams> = tuples.iter().map(cp_of).collect();
    let n = config.trunc_n.max(0) as usize;
    write_counter_csv(BufWriter::new(File::create(dir.join("counters.csv"))?), &cps, n)?;
    for t in &tuples {
        if let Ok(g) = g_series(&gp_of(t), config.trunc_x, config.trunc_n) {
            let name = format!("g_k{}_a{}_d{}_s{}_{}.csv", t.k, t.a, t.d, t.s, t.flavor);
            write_bi_csv(BufWriter::new(File::create(dir.join(name))?), &g)?;
        }
    }
    Ok(())
}
