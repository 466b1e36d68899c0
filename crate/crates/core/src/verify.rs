//! The headline comparison: orbifold Hochschild dimension against the dimension
//! of the cohomology of the degree-`a` hypersurface, plus the side checks.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hochschild::{hochschild_dimensions, HHOptions, HHReport, REPORT_SCHEMA};
use crate::hodge::{index_bijection_check, qh_dimension, BijectionWitness, HodgeReport};
use crate::thimbles::{check_degree_bounds, DegreeBoundReport};

/// Versioned wrapper around every JSON document the command line emits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: u32,
    pub command: String,
    pub result: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, result: T) -> Self {
        Envelope {
            schema: REPORT_SCHEMA,
            command: command.to_string(),
            result,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub n: u32,
    pub a: u32,
    pub hh: HHReport,
    pub hodge: HodgeReport,
    pub equal_total: bool,
    pub equal_parity: bool,
    pub bounds: DegreeBoundReport,
    pub bijection: Vec<BijectionWitness>,
    /// Names of the failed checks, empty when everything passes.
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify(n: u32, a: u32, opts: &HHOptions) -> Result<VerificationReport> {
    let hh = hochschild_dimensions(n, a, opts)?;
    let hodge = qh_dimension(n, a)?;
    let bounds = check_degree_bounds(n, a)?;
    let bijection = (0..=n)
        .map(|p| index_bijection_check(n, a, p))
        .collect::<Result<Vec<_>>>()?;

    let equal_total = hh.total() == hodge.qh_dim;
    let equal_parity = (hh.hh_even, hh.hh_odd) == (hodge.total_even, hodge.total_odd);
    let mut failures = Vec::new();
    if !equal_total {
        failures.push(format!(
            "equal_total: HH* = {} but QH* = {}",
            hh.total(),
            hodge.qh_dim
        ));
    }
    if !equal_parity {
        failures.push(format!(
            "equal_parity: HH* split ({}, {}) but QH* split ({}, {})",
            hh.hh_even, hh.hh_odd, hodge.total_even, hodge.total_odd
        ));
    }
    for item in bounds.items.iter().filter(|i| !i.pass) {
        failures.push(format!("bounds/{}: {}", item.name, item.detail));
    }
    for w in bijection.iter().filter(|w| !w.equal) {
        failures.push(format!(
            "bijection p={}: {} vs {}",
            w.p, w.count_i, w.count_j
        ));
    }
    Ok(VerificationReport {
        schema: REPORT_SCHEMA,
        n,
        a,
        hh,
        hodge,
        equal_total,
        equal_parity,
        bounds,
        bijection,
        failures,
    })
}
