//! Minimum-degree oracle for `f_n^{k,l}` by linear-programming feasibility.
//!
//! A degree-`D` univariate representation must satisfy `p(k) = 0`, `p(l) = 1`
//! and `0 <= p(j) <= 1` on every weight `j in [0, n]`. Polynomials are written
//! in the Chebyshev basis in `z = 1 - 2j/n`, which keeps the constraint matrix
//! well scaled. The LP minimizes a uniform slack `eps` on every constraint; the
//! degree is feasible when the optimal slack is at most [`LP_TOL`].

use minilp::{ComparisonOp, OptimizationDirection, Problem};

use crate::cheb::{cheb_basis, cheb_t};
use crate::error::{Error, Result};
use crate::instance::WeightInstance;

/// Largest `n` handled by the dense LP.
pub const MAX_LP_N: u32 = 300;
/// Feasibility threshold on the optimal slack.
pub const LP_TOL: f64 = 1e-7;
/// Acceptance threshold for the post-solve re-evaluation of a witness.
pub const WITNESS_TOL: f64 = 1e-6;

/// A representing polynomial `p(j) = sum_i coeffs[i] T_i(1 - 2j/n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyWitness {
    pub degree: u32,
    pub coeffs: Vec<f64>,
    /// Largest constraint violation found on re-evaluation.
    pub residual: f64,
}

impl PolyWitness {
    /// Evaluates `p` at weight `j`, using the trigonometric form of `T_i`.
    pub fn eval(&self, n: u32, j: f64) -> f64 {
        let z = 1.0 - 2.0 * j / f64::from(n);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * cheb_t(i as u32, z).unwrap_or(f64::NAN))
            .sum()
    }

    /// Max violation of `p(k) = 0`, `p(l) = 1`, `0 <= p(j) <= 1` at the integer weights.
    pub fn violation(&self, inst: WeightInstance) -> f64 {
        let n = inst.n();
        let mut worst: f64 = 0.0;
        for j in 0..=n {
            let v = self.eval(n, f64::from(j));
            let miss = if j == inst.k() {
                v.abs()
            } else if j == inst.l() {
                (v - 1.0).abs()
            } else {
                (-v).max(v - 1.0).max(0.0)
            };
            worst = worst.max(miss);
        }
        worst
    }
}

fn check_lp_size(inst: WeightInstance) -> Result<()> {
    if inst.n() > MAX_LP_N {
        return Err(Error::Resource(format!(
            "LP oracle limited to n <= {MAX_LP_N}, got n = {}",
            inst.n()
        )));
    }
    Ok(())
}

/// Solves the slack-minimizing LP; returns the optimal slack and coefficients.
fn min_slack(inst: WeightInstance, degree: u32) -> Result<(f64, Vec<f64>)> {
    let n = inst.n();
    let mut lp = Problem::new(OptimizationDirection::Minimize);
    let coeffs: Vec<_> = (0..=degree)
        .map(|_| lp.add_var(0.0, (f64::NEG_INFINITY, f64::INFINITY)))
        .collect();
    let slack = lp.add_var(1.0, (0.0, f64::INFINITY));
    for j in 0..=n {
        let z = 1.0 - 2.0 * f64::from(j) / f64::from(n);
        let row = cheb_basis(degree as usize, z);
        let (lo, hi) = if j == inst.k() {
            (0.0, 0.0)
        } else if j == inst.l() {
            (1.0, 1.0)
        } else {
            (0.0, 1.0)
        };
        // row . c + eps >= lo and row . c - eps <= hi
        let terms: Vec<_> = coeffs.iter().copied().zip(row.iter().copied()).collect();
        let mut lower = terms.clone();
        lower.push((slack, 1.0));
        lp.add_constraint(lower.as_slice(), ComparisonOp::Ge, lo);
        let mut upper = terms;
        upper.push((slack, -1.0));
        lp.add_constraint(upper.as_slice(), ComparisonOp::Le, hi);
    }
    let solution = lp
        .solve()
        .map_err(|e| Error::Internal(format!("LP solve failed for {inst}, D = {degree}: {e}")))?;
    let values = coeffs.iter().map(|&v| *solution.var_value(v)).collect();
    Ok((*solution.var_value(slack), values))
}

/// A degree-`<= degree` representation of `f_n^{k,l}` if one exists.
pub fn degree_feasible(inst: WeightInstance, degree: u32) -> Result<Option<PolyWitness>> {
    check_lp_size(inst)?;
    if degree > inst.n() {
        return Err(Error::Argument(format!(
            "degree {degree} exceeds n = {}",
            inst.n()
        )));
    }
    let (slack, coeffs) = min_slack(inst, degree)?;
    if slack > LP_TOL {
        return Ok(None);
    }
    let mut witness = PolyWitness {
        degree,
        coeffs,
        residual: 0.0,
    };
    witness.residual = witness.violation(inst);
    if witness.residual > WITNESS_TOL {
        return Err(Error::Internal(format!(
            "LP witness for {inst}, D = {degree} fails re-evaluation (residual {:.3e})",
            witness.residual
        )));
    }
    Ok(Some(witness))
}

/// Smallest feasible degree. Degree `n` always works (interpolate the
/// indicator of `l` on the `n + 1` weights), so the scan stops there.
pub fn min_degree(inst: WeightInstance) -> Result<u32> {
    check_lp_size(inst)?;
    for degree in 1..inst.n() {
        if degree_feasible(inst, degree)?.is_some() {
            return Ok(degree);
        }
    }
    Ok(inst.n())
}

/// Like [`min_degree`] but gives up after `max_degree`, returning `None`.
pub fn min_degree_capped(inst: WeightInstance, max_degree: u32) -> Result<Option<u32>> {
    check_lp_size(inst)?;
    if max_degree >= inst.n() {
        return min_degree(inst).map(Some);
    }
    for degree in 1..=max_degree {
        if degree_feasible(inst, degree)?.is_some() {
            return Ok(Some(degree));
        }
    }
    Ok(None)
}

/// `ceil(deg / 2)`, the polynomial-method lower bound on `Q_E`.
pub fn qe_degree_lower(inst: WeightInstance) -> Result<u32> {
    Ok(qe_degree_lower_from(min_degree(inst)?))
}

pub fn qe_degree_lower_from(degree: u32) -> u32 {
    degree.div_ceil(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn inst(n: u32, k: u32, l: u32) -> WeightInstance {
        WeightInstance::new(n, k, l).unwrap()
    }

    #[test]
    fn linear_witness_for_two_zero_two() {
        let w = degree_feasible(inst(2, 0, 2), 1).unwrap().unwrap();
        assert_abs_diff_eq!(w.eval(2, 1.0), 0.5, epsilon = 1e-7);
        assert!(w.residual <= WITNESS_TOL);
    }

    #[test]
    fn two_zero_one() {
        assert!(degree_feasible(inst(2, 0, 1), 1).unwrap().is_none());
        let w = degree_feasible(inst(2, 0, 1), 2).unwrap().unwrap();
        // the unique choice is 2j - j^2
        for j in 0..=2 {
            let jf = f64::from(j);
            assert_abs_diff_eq!(w.eval(2, jf), 2.0 * jf - jf * jf, epsilon = 1e-6);
        }
    }

    #[test]
    fn min_degrees() {
        assert_eq!(min_degree(inst(2, 0, 2)).unwrap(), 1);
        assert_eq!(min_degree(inst(2, 0, 1)).unwrap(), 2);
        assert_eq!(min_degree(inst(2, 1, 2)).unwrap(), 2);
        assert_eq!(qe_degree_lower(inst(2, 0, 1)).unwrap(), 1);
        assert_eq!(qe_degree_lower(inst(2, 0, 2)).unwrap(), 1);
        assert!(qe_degree_lower(inst(8, 2, 4)).unwrap() <= 3);
    }

    #[test]
    fn argument_and_resource_errors() {
        assert!(matches!(
            degree_feasible(inst(4, 0, 1), 5),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            min_degree(inst(301, 0, 1)),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn full_degree_is_feasible() {
        for n in 1..=8 {
            for k in 0..n {
                for l in k + 1..=n {
                    assert!(degree_feasible(inst(n, k, l), n).unwrap().is_some());
                }
            }
        }
    }
}
