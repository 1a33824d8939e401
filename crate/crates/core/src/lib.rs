//! Bounds on the exact quantum query complexity of weight decision functions
//! `f_n^{k,l}` (distinguish `|x| = k` from `|x| = l`), an exact simulator for
//! the padded amplitude-amplification algorithm that attains the upper bound,
//! and an LP-based minimum-degree oracle for cross-checking lower bounds.

pub mod cheb;
pub mod error;
pub mod instance;
pub mod lp_oracle;
pub mod quantum_sim;
pub mod regions;

pub use cheb::{boundary_pairs, cheb_t, extremum, BoundaryPair};
pub use error::{Error, Result};
pub use instance::WeightInstance;
pub use regions::{bounds, bounds_instance, g_query_complexity, BoundsResult, RatioPoint};
