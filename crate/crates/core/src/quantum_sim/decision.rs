use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Measurement outcomes grouped by what the decision rule needs to know.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OutcomeClass {
    /// Index `m` with `x_m = 0` (odd-degree branch, before the extra query).
    ZeroIndex,
    /// Index `m` with `x_m = 1`.
    OneIndex,
    PadL,
    PadR,
    /// `|k>`, `|L>` or `|R>` after `U(a, b)`.
    SingleClass,
    /// `|i,j>`, `|k,L>`, `|k,R>` or `|L,R>` after `U(a, b)`.
    PairClass,
}

impl OutcomeClass {
    pub const ALL: [OutcomeClass; 6] = [
        OutcomeClass::ZeroIndex,
        OutcomeClass::OneIndex,
        OutcomeClass::PadL,
        OutcomeClass::PadR,
        OutcomeClass::SingleClass,
        OutcomeClass::PairClass,
    ];

    pub fn is_index(&self) -> bool {
        matches!(self, OutcomeClass::ZeroIndex | OutcomeClass::OneIndex)
    }
}

/// The output bit for one measurement outcome.
///
/// For odd `gamma`: with `delta = 1`, `L -> 1`, `R -> 0`, index `m -> 1 - x_m`;
/// with `delta = 0`, single labels `-> 1` and pair labels `-> 0`. Even `gamma`
/// flips every output. Index outcomes need the queried bit `x_m`.
pub fn decide(
    class: OutcomeClass,
    gamma_odd: bool,
    delta: u32,
    queried_bit: Option<bool>,
) -> Result<bool> {
    let odd_output = match (delta, class) {
        (1, OutcomeClass::PadL) => true,
        (1, OutcomeClass::PadR) => false,
        (1, OutcomeClass::ZeroIndex | OutcomeClass::OneIndex) => {
            let bit = queried_bit
                .ok_or_else(|| Error::Contract("index outcome needs the queried bit x_m".into()))?;
            if bit != (class == OutcomeClass::OneIndex) {
                return Err(Error::Contract(format!(
                    "queried bit {bit} contradicts outcome class {class:?}"
                )));
            }
            !bit
        }
        (0, OutcomeClass::SingleClass) => true,
        (0, OutcomeClass::PairClass) => false,
        (0 | 1, _) => {
            return Err(Error::Contract(format!(
                "outcome {class:?} cannot occur when delta = {delta}"
            )))
        }
        _ => {
            return Err(Error::Argument(format!(
                "delta must be 0 or 1, got {delta}"
            )))
        }
    };
    if !class.is_index() && queried_bit.is_some() {
        return Err(Error::Contract(format!(
            "no query is made on outcome {class:?}"
        )));
    }
    Ok(if gamma_odd { odd_output } else { !odd_output })
}

/// Outcome statistics of one run of the algorithm on one input.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionReport {
    /// Hamming weight of the input.
    pub weight: u32,
    pub class_probs: BTreeMap<OutcomeClass, f64>,
    /// Most likely output bit.
    pub output: bool,
    /// Probability of outputting 1.
    pub p_one: f64,
    /// Probability of the correct answer on a promised weight; probability of
    /// `output` otherwise.
    pub success_prob: f64,
    /// Worst-case number of queries over the outcomes that occur.
    pub queries_used: u32,
}

/// Outcome mass below this is treated as never observed.
const NEGLIGIBLE: f64 = 1e-12;

pub(crate) fn summarize(
    weight: u32,
    expected: Option<bool>,
    class_probs: BTreeMap<OutcomeClass, f64>,
    gamma_odd: bool,
    delta: u32,
    budget: u32,
) -> Result<DecisionReport> {
    let mut p_one = 0.0;
    let mut index_mass = 0.0;
    for (&class, &prob) in &class_probs {
        let queried = class.is_index().then_some(class == OutcomeClass::OneIndex);
        if decide(class, gamma_odd, delta, queried)? {
            p_one += prob;
        }
        if class.is_index() {
            index_mass += prob;
        }
    }
    let output = p_one >= 0.5;
    let success_prob = match expected {
        Some(true) => p_one,
        Some(false) => 1.0 - p_one,
        None => p_one.max(1.0 - p_one),
    };
    let queries_used = if delta == 1 && index_mass <= NEGLIGIBLE {
        budget - 1
    } else {
        budget
    };
    Ok(DecisionReport {
        weight,
        class_probs,
        output,
        p_one,
        success_prob,
        queries_used,
    })
}
