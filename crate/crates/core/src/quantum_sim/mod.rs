//! Exact simulation of the padded amplitude-amplification algorithm for
//! `f_n^{k,l}`.
//!
//! The input is padded with `a^2` zeros and `b^2` ones (real, possibly
//! irrational) via the extra basis states `|L>` and `|R>`. After `d - 1`
//! Grover steps the state is measured directly (`delta = 1`, followed by one
//! classical query on index outcomes) or rotated by `U(a, b) O_x` into the
//! two-register space first (`delta = 0`).

mod decision;
mod full;
mod operators;
mod padding;
mod symmetric;
mod verify;

pub use decision::{decide, DecisionReport, OutcomeClass};
pub use full::{run_full, FullSimulator, SimConfig, DEFAULT_MAX_N, MAX_N_ENV};
pub use operators::{
    axis_vector, big_index, big_labels, build_oracle, build_u, build_w, isometry_defect,
    small_index, small_label, BigLabel, FullState, SmallLabel, Space,
};
pub use padding::{padding_params, PaddingParams};
pub use symmetric::{rotation_angle, run_symmetric};
pub use verify::{
    inputs_of_weight, verify_exactness, verify_with_anchor, VerifyMode, VerifySummary,
};
