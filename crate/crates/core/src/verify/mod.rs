//! Brute-force oracle and exhaustive cross-check sweeps.
//!
//! The [`Oracle`] recomputes gap sets from the raw generators by forward
//! closure up to `max² + max`, without touching the Apéry-set machinery in
//! [`crate::semigroup`] or anything in [`crate::criteria`]. Sweeps compare
//! every closed form and criterion against it and collect the disagreements
//! in a [`SweepReport`].

mod oracle;
mod sweeps;

use std::fmt;

pub use oracle::{
    check_tuenter_identity, divisible_by_c_m, four_element_congruence, oracle_ed, Oracle,
};
pub use sweeps::{
    check_semigroup_equivalences, random_generators, sweep_embdim2, sweep_equivalences,
    sweep_gen_arith, sweep_mult2, sweep_mult3, sweep_parity, sweep_tuenter,
};

/// One disagreement found by a sweep.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mismatch {
    pub params: Vec<u64>,
    pub check: String,
    pub expected: String,
    pub got: String,
}

impl Mismatch {
    pub fn new(
        check: &str,
        params: &[u64],
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Self {
        Self {
            params: params.to_vec(),
            check: check.to_string(),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:?}: expected {}, got {}",
            self.check, self.params, self.expected, self.got
        )
    }
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub sweep_name: String,
    pub instances_checked: u64,
    /// Sorted by parameters, then by check name.
    pub mismatches: Vec<Mismatch>,
    pub elapsed_ms: u64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// Equality of everything except the wall-clock time.
    pub fn same_outcome(&self, other: &SweepReport) -> bool {
        self.sweep_name == other.sweep_name
            && self.instances_checked == other.instances_checked
            && self.mismatches == other.mismatches
    }

    pub(crate) fn collect(
        name: &str,
        parts: Vec<(u64, Vec<Mismatch>)>,
        started: std::time::Instant,
    ) -> Self {
        let instances_checked = parts.iter().map(|(n, _)| n).sum();
        let mut mismatches: Vec<Mismatch> = parts.into_iter().flat_map(|(_, m)| m).collect();
        mismatches.sort();
        Self {
            sweep_name: name.to_string(),
            instances_checked,
            mismatches,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }
}

impl fmt::Display for SweepReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} instances, {} mismatches",
            self.sweep_name,
            self.instances_checked,
            self.mismatches.len()
        )
    }
}
