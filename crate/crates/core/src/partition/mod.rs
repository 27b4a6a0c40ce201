//! Partition and overpartition counters on both sides of the identities.
//!
//! The multiplicity side is evaluated by enumeration: a pruned descent for
//! the memoized [`CounterTable`], and an unrestricted generator kept as a
//! slow cross-check. The product side is evaluated by a part-restricted
//! dynamic program.

mod a_counters;
mod counters;
pub mod enumerate;
mod freq;
mod params;
mod predicate;
pub mod recurrence;

pub use a_counters::{a_series, count_a, count_a_over, partition_generating_function};
pub use counters::{
    b_series, count_b, count_b_total, counter_table, write_counter_csv, CounterTable, COUNTER_CSV_HEADER,
};
pub use freq::FreqSolution;
pub use params::{CountParams, Flavor};
pub use predicate::satisfies_b;
pub use recurrence::{verify_recurrence_b, verify_recurrence_b_prose};
