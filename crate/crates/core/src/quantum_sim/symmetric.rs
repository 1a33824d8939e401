use std::collections::BTreeMap;

use super::decision::{summarize, DecisionReport, OutcomeClass};
use super::padding::PaddingParams;
use crate::error::{Error, Result};
use crate::instance::WeightInstance;

/// Rotation angle `theta = asin sqrt((w + b^2) / n_eff)` for an input of weight `w`.
pub fn rotation_angle(params: &PaddingParams, w: u32) -> f64 {
    let ratio = (f64::from(w) + params.b_sq) / params.n_eff;
    ratio.clamp(0.0, 1.0).sqrt().asin()
}

/// `part / whole`, with an empty subspace carrying no mass.
fn share(part: f64, whole: f64) -> f64 {
    if whole > 0.0 {
        part / whole
    } else {
        0.0
    }
}

/// Closed-form run on the two-dimensional invariant subspace: outcome class
/// probabilities follow from the final angle alone.
pub fn run_symmetric(
    inst: WeightInstance,
    params: &PaddingParams,
    w: u32,
) -> Result<DecisionReport> {
    if w > inst.n() {
        return Err(Error::Argument(format!(
            "weight {w} exceeds n = {}",
            inst.n()
        )));
    }
    let anchor = params.anchor;
    let d = anchor.d;
    let theta = rotation_angle(params, w);
    let n = f64::from(inst.n());
    let wf = f64::from(w);
    let mut probs = BTreeMap::new();
    if anchor.delta == 1 {
        let angle = f64::from(2 * d - 1) * theta;
        let (c2, s2) = (angle.cos().powi(2), angle.sin().powi(2));
        let zeros = n - wf + params.a_sq;
        let ones = wf + params.b_sq;
        probs.insert(OutcomeClass::ZeroIndex, c2 * share(n - wf, zeros));
        probs.insert(OutcomeClass::PadL, c2 * share(params.a_sq, zeros));
        probs.insert(OutcomeClass::OneIndex, s2 * share(wf, ones));
        probs.insert(OutcomeClass::PadR, s2 * share(params.b_sq, ones));
    } else {
        let angle = f64::from(2 * d) * theta;
        probs.insert(OutcomeClass::SingleClass, angle.cos().powi(2));
        probs.insert(OutcomeClass::PairClass, angle.sin().powi(2));
    }
    summarize(
        w,
        inst.value(w),
        probs,
        anchor.gamma_is_odd(),
        anchor.delta,
        d,
    )
}
