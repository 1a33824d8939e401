use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::decision::{summarize, DecisionReport, OutcomeClass};
use super::operators::{
    big_labels, build_oracle, build_u, build_w, small_label, FullState, SmallLabel, Space,
};
use super::padding::PaddingParams;
use crate::error::{Error, Result};
use crate::instance::WeightInstance;

/// Default cap on `n` for explicit matrix simulation.
pub const DEFAULT_MAX_N: u32 = 12;

/// Environment variable overriding [`DEFAULT_MAX_N`].
pub const MAX_N_ENV: &str = "WEIGHTDEC_MAX_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimConfig {
    pub max_n: u32,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
        }
    }
}

impl SimConfig {
    /// Reads `WEIGHTDEC_MAX_N`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_N_ENV) {
            Ok(raw) => raw
                .trim()
                .parse()
                .map(|max_n| Self { max_n })
                .map_err(|_| Error::Argument(format!("{MAX_N_ENV}={raw:?} is not an integer"))),
            Err(_) => Ok(Self::default()),
        }
    }
}

/// Explicit state-vector simulation of the padded algorithm for one instance
/// and anchor. Operators are built once and reused across inputs.
#[derive(Debug, Clone)]
pub struct FullSimulator {
    inst: WeightInstance,
    params: PaddingParams,
    w: DMatrix<Complex64>,
    u: DMatrix<Complex64>,
    psi0: DVector<Complex64>,
}

impl FullSimulator {
    pub fn new(inst: WeightInstance, params: PaddingParams, config: SimConfig) -> Result<Self> {
        let n = inst.n();
        if n > config.max_n {
            return Err(Error::Resource(format!(
                "full simulation limited to n <= {}, got n = {n}",
                config.max_n
            )));
        }
        Ok(Self {
            inst,
            params,
            w: build_w(n, &params),
            u: build_u(n, &params),
            psi0: FullState::initial(n, &params).amplitudes,
        })
    }

    pub fn params(&self) -> &PaddingParams {
        &self.params
    }

    fn check_input(&self, x: &[bool]) -> Result<()> {
        if x.len() != self.inst.n() as usize {
            return Err(Error::Argument(format!(
                "input has length {}, expected n = {}",
                x.len(),
                self.inst.n()
            )));
        }
        Ok(())
    }

    /// `|Psi_0>, G|Psi_0>, ..., G^{d-1}|Psi_0>` with `G = W(a, b) O_x`.
    pub fn grover_states(&self, x: &[bool]) -> Result<Vec<FullState>> {
        self.check_input(x)?;
        let oracle = build_oracle(x);
        let grover = &self.w * &oracle;
        let space = Space::Small { n: self.inst.n() };
        let mut states = vec![FullState::new(space, self.psi0.clone())?];
        for _ in 1..self.params.anchor.d {
            let next = &grover * &states.last().expect("non-empty").amplitudes;
            states.push(FullState::new(space, next)?);
        }
        Ok(states)
    }

    /// The state that gets measured: `|Psi_{d-1}>` for `delta = 1`, or
    /// `U(a, b) O_x |Psi_{d-1}>` for `delta = 0`.
    pub fn final_state(&self, x: &[bool]) -> Result<FullState> {
        let mut states = self.grover_states(x)?;
        let last = states.pop().expect("non-empty");
        if self.params.anchor.delta == 1 {
            return Ok(last);
        }
        let rotated = &self.u * (build_oracle(x) * last.amplitudes);
        FullState::new(Space::Big { n: self.inst.n() }, rotated)
    }

    pub fn run(&self, x: &[bool]) -> Result<DecisionReport> {
        let state = self.final_state(x)?;
        let n = self.inst.n();
        let mut probs: BTreeMap<OutcomeClass, f64> = BTreeMap::new();
        match state.space {
            Space::Small { .. } => {
                for &c in &[
                    OutcomeClass::ZeroIndex,
                    OutcomeClass::OneIndex,
                    OutcomeClass::PadL,
                    OutcomeClass::PadR,
                ] {
                    probs.insert(c, 0.0);
                }
                for (idx, p) in state.probabilities().into_iter().enumerate() {
                    let class = match small_label(n, idx) {
                        SmallLabel::Index(i) if x[i as usize] => OutcomeClass::OneIndex,
                        SmallLabel::Index(_) => OutcomeClass::ZeroIndex,
                        SmallLabel::L => OutcomeClass::PadL,
                        SmallLabel::R => OutcomeClass::PadR,
                    };
                    *probs.entry(class).or_default() += p;
                }
            }
            Space::Big { .. } => {
                probs.insert(OutcomeClass::SingleClass, 0.0);
                probs.insert(OutcomeClass::PairClass, 0.0);
                for (label, p) in big_labels(n).into_iter().zip(state.probabilities()) {
                    let class = if label.is_single() {
                        OutcomeClass::SingleClass
                    } else {
                        OutcomeClass::PairClass
                    };
                    *probs.entry(class).or_default() += p;
                }
            }
        }
        let weight = x.iter().filter(|&&b| b).count() as u32;
        let anchor = self.params.anchor;
        summarize(
            weight,
            self.inst.value(weight),
            probs,
            anchor.gamma_is_odd(),
            anchor.delta,
            anchor.d,
        )
    }
}

/// One-shot full simulation of input `x`.
pub fn run_full(
    inst: WeightInstance,
    params: &PaddingParams,
    x: &[bool],
    config: SimConfig,
) -> Result<DecisionReport> {
    FullSimulator::new(inst, *params, config)?.run(x)
}
