//! CSV export of coefficient tables: `x_exp,q_exp,coefficient`.

use std::io::Write;

use super::{BiSeries, PowerSeries};
use crate::error::Result;

pub const HEADER: [&str; 3] = ["x_exp", "q_exp", "coefficient"];

/// Writes every nonzero coefficient, ordered by x-exponent then q-exponent.
pub fn write_bi_csv<W: Write>(out: W, s: &BiSeries) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for (m, j, c) in s.terms() {
        w.write_record([m.to_string(), j.to_string(), c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_power_csv<W: Write>(out: W, s: &PowerSeries) -> Result<()> {
    write_bi_csv(out, &BiSeries::from_power_series(s, 0))
}
