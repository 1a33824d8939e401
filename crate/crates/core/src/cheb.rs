//! Chebyshev polynomials of the first kind, their extrema, and the boundary
//! sets `S_d` built from consecutive extrema of `T_{2d}` and `T_{2d-1}`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Comparison tolerance used for boundary coordinates.
pub const PAIR_TOL: f64 = 1e-12;

/// Evaluates `T_m(x)`.
///
/// Uses `cos(m acos x)` inside `[-1, 1]` and `cosh(m acosh |x|)` (with the sign
/// of `x^m`) outside.
pub fn cheb_t(m: u32, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!(
            "T_{m} evaluated at non-finite x = {x}"
        )));
    }
    if m == 0 {
        return Ok(1.0);
    }
    let mf = f64::from(m);
    if x.abs() <= 1.0 {
        Ok((mf * x.acos()).cos())
    } else {
        let mag = (mf * x.abs().acosh()).cosh();
        if x < 0.0 && m % 2 == 1 {
            Ok(-mag)
        } else {
            Ok(mag)
        }
    }
}

/// Evaluates `T_0(x), ..., T_degree(x)` by the three-term recurrence.
pub fn cheb_basis(degree: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(degree + 1);
    out.push(1.0);
    if degree >= 1 {
        out.push(x);
    }
    for i in 2..=degree {
        let next = 2.0 * x * out[i - 1] - out[i - 2];
        out.push(next);
    }
    out
}

/// The extremum `cos(gamma * pi / m)` of `T_m`.
pub fn extremum(m: u32, gamma: u32) -> Result<f64> {
    if m == 0 {
        return Err(Error::Argument("extremum of T_0 is undefined".into()));
    }
    if gamma > m {
        return Err(Error::Argument(format!("gamma = {gamma} outside [0, {m}]")));
    }
    Ok((f64::from(gamma) * PI / f64::from(m)).cos())
}

/// Maps an extremum `eta` of `T_D` to the ratio coordinate `(1 - eta) / 2`.
fn ratio_of(gamma: u32, degree: u32) -> f64 {
    // sin^2 form avoids cancellation near 0
    let half_angle = f64::from(gamma) * PI / (2.0 * f64::from(degree));
    let s = half_angle.sin();
    s * s
}

/// One element `(s, t)` of `S_d`, along with the parameters that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPair {
    pub s: f64,
    pub t: f64,
    /// Query budget `d`.
    pub d: u32,
    /// Selects the Chebyshev degree `D = 2d - delta`.
    pub delta: u32,
    /// Index of the first of the two consecutive extrema.
    pub gamma: u32,
}

impl BoundaryPair {
    /// Builds the pair for `(d, delta, gamma)`, checking the index ranges of `S_d`.
    pub fn new(d: u32, delta: u32, gamma: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::Argument("query budget d must be positive".into()));
        }
        match delta {
            0 if gamma < 2 * d => {}
            1 if d >= 2 && gamma >= 1 && gamma + 3 <= 2 * d => {}
            0 | 1 => {
                return Err(Error::Argument(format!(
                    "gamma = {gamma} not admissible for d = {d}, delta = {delta}"
                )))
            }
            _ => {
                return Err(Error::Argument(format!(
                    "delta must be 0 or 1, got {delta}"
                )))
            }
        }
        let degree = 2 * d - delta;
        Ok(Self {
            s: ratio_of(gamma, degree),
            t: ratio_of(gamma + 1, degree),
            d,
            delta,
            gamma,
        })
    }

    /// Chebyshev degree `D = 2d - delta`.
    pub fn degree(&self) -> u32 {
        2 * self.d - self.delta
    }

    pub fn gamma_is_odd(&self) -> bool {
        self.gamma % 2 == 1
    }

    /// The extremum `eta_gamma = 1 - 2s`.
    pub fn eta(&self) -> f64 {
        1.0 - 2.0 * self.s
    }
}

/// Generates `S_d` sorted by `(delta, gamma)`.
///
/// `d = 1` yields the two pairs from `T_2`; for `d >= 2` the `2d` pairs of
/// `T_{2d}` are followed by the `2d - 3` interior pairs of `T_{2d-1}` (the two
/// extreme `T_{2d-1}` pairs are dominated and left out).
pub fn boundary_pairs(d: u32) -> Result<Vec<BoundaryPair>> {
    if d == 0 {
        return Err(Error::Argument("S_d requires d >= 1".into()));
    }
    let mut pairs = Vec::with_capacity(4 * d as usize);
    for gamma in 0..2 * d {
        pairs.push(BoundaryPair::new(d, 0, gamma)?);
    }
    if d >= 2 {
        for gamma in 1..=2 * d - 3 {
            pairs.push(BoundaryPair::new(d, 1, gamma)?);
        }
    }
    Ok(pairs)
}
