use itertools::Itertools;

use super::full::{FullSimulator, SimConfig};
use super::padding::{padding_params, PaddingParams};
use super::symmetric::run_symmetric;
use crate::cheb::BoundaryPair;
use crate::error::Result;
use crate::instance::WeightInstance;
use crate::regions::upper_bound;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyMode {
    /// Explicit matrices over every promised input.
    Full,
    /// Closed form on the two promised weights.
    Symmetric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySummary {
    pub instance: WeightInstance,
    pub mode: VerifyMode,
    /// Query budget of the algorithm.
    pub d: u32,
    pub params: PaddingParams,
    pub min_success: f64,
    /// Largest query count seen across the checked inputs.
    pub max_queries: u32,
    pub inputs_checked: u64,
}

impl VerifySummary {
    pub fn anchor(&self) -> BoundaryPair {
        self.params.anchor
    }

    pub fn is_exact(&self, tol: f64) -> bool {
        self.min_success >= 1.0 - tol
    }
}

/// All bit vectors of length `n` with exactly `w` ones.
pub fn inputs_of_weight(n: u32, w: u32) -> impl Iterator<Item = Vec<bool>> {
    (0..n as usize).combinations(w as usize).map(move |ones| {
        let mut x = vec![false; n as usize];
        for i in ones {
            x[i] = true;
        }
        x
    })
}

/// Runs the algorithm built on the upper-bound anchor of `inst`.
pub fn verify_exactness(
    inst: WeightInstance,
    mode: VerifyMode,
    config: SimConfig,
) -> Result<VerifySummary> {
    let (_, anchor) = upper_bound(inst.into())?;
    verify_with_anchor(inst, anchor, mode, config)
}

/// Runs the algorithm built on an explicit anchor (which must admit `inst`).
pub fn verify_with_anchor(
    inst: WeightInstance,
    anchor: BoundaryPair,
    mode: VerifyMode,
    config: SimConfig,
) -> Result<VerifySummary> {
    let params = padding_params(inst, anchor)?;
    let mut min_success = f64::INFINITY;
    let mut max_queries = 0;
    let mut inputs_checked = 0u64;
    match mode {
        VerifyMode::Full => {
            let sim = FullSimulator::new(inst, params, config)?;
            for w in [inst.k(), inst.l()] {
                for x in inputs_of_weight(inst.n(), w) {
                    let report = sim.run(&x)?;
                    min_success = min_success.min(report.success_prob);
                    max_queries = max_queries.max(report.queries_used);
                    inputs_checked += 1;
                }
            }
        }
        VerifyMode::Symmetric => {
            for w in [inst.k(), inst.l()] {
                let report = run_symmetric(inst, &params, w)?;
                min_success = min_success.min(report.success_prob);
                max_queries = max_queries.max(report.queries_used);
                inputs_checked += 1;
            }
        }
    }
    Ok(VerifySummary {
        instance: inst,
        mode,
        d: anchor.d,
        params,
        min_success,
        max_queries,
        inputs_checked,
    })
}
