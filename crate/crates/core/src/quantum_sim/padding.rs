use crate::cheb::BoundaryPair;
use crate::error::{Error, Result};
use crate::instance::WeightInstance;

/// Effective numbers of padded zeros (`a^2`) and ones (`b^2`) that move the
/// instance's ratio point onto `anchor`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PaddingParams {
    pub a_sq: f64,
    pub b_sq: f64,
    pub anchor: BoundaryPair,
    /// Padded length `n + a^2 + b^2`.
    pub n_eff: f64,
}

impl PaddingParams {
    pub fn a(&self) -> f64 {
        self.a_sq.sqrt()
    }

    pub fn b(&self) -> f64 {
        self.b_sq.sqrt()
    }
}

/// Rounding slack below zero tolerated (and clamped) for `a^2` and `b^2`.
const NEG_SLACK: f64 = 1e-9;

fn clamp_nonneg(value: f64, scale: f64, what: &str, inst: &WeightInstance) -> Result<f64> {
    if value >= 0.0 {
        Ok(value)
    } else if value >= -NEG_SLACK * scale.max(1.0) {
        Ok(0.0)
    } else {
        Err(Error::Region(format!(
            "{inst} is not in the upper-left region of the anchor: {what} = {value}"
        )))
    }
}

/// `b^2 = (l s - k t) / (t - s)` and `a^2 = (l - k) / (t - s) - b^2 - n`.
pub fn padding_params(inst: WeightInstance, anchor: BoundaryPair) -> Result<PaddingParams> {
    let (n, k, l) = (
        f64::from(inst.n()),
        f64::from(inst.k()),
        f64::from(inst.l()),
    );
    let (s, t) = (anchor.s, anchor.t);
    let width = t - s;
    let n_eff = (l - k) / width;
    let b_sq = clamp_nonneg((l * s - k * t) / width, n_eff, "b^2", &inst)?;
    let a_sq = clamp_nonneg(n_eff - b_sq - n, n_eff, "a^2", &inst)?;
    Ok(PaddingParams {
        a_sq,
        b_sq,
        anchor,
        n_eff: n + a_sq + b_sq,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn grover_instance_padding() {
        let inst = WeightInstance::new(4, 0, 1).unwrap();
        let anchor = BoundaryPair::new(2, 0, 0).unwrap();
        let p = padding_params(inst, anchor).unwrap();
        assert_abs_diff_eq!(p.a_sq, 2.0 * 2f64.sqrt(), epsilon = 1e-10);
        assert_abs_diff_eq!(p.b_sq, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.n_eff, 4.0 + 2.0 * 2f64.sqrt(), epsilon = 1e-10);
        assert_abs_diff_eq!(
            (1.0 / p.n_eff).sqrt().asin(),
            std::f64::consts::PI / 8.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn no_padding_at_the_anchor() {
        let inst = WeightInstance::new(2, 1, 2).unwrap();
        let p = padding_params(inst, BoundaryPair::new(1, 0, 1).unwrap()).unwrap();
        assert_abs_diff_eq!(p.a_sq, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.b_sq, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.n_eff, 2.0, epsilon = 1e-12);

        let inst = WeightInstance::new(4, 1, 3).unwrap();
        let p = padding_params(inst, BoundaryPair::new(2, 1, 1).unwrap()).unwrap();
        assert_abs_diff_eq!(p.a_sq, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(p.b_sq, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn outside_ul_is_region_error() {
        // (0.3, 0.7) is not in UL(1/4, 3/4)
        let inst = WeightInstance::new(10, 3, 7).unwrap();
        let err = padding_params(inst, BoundaryPair::new(2, 1, 1).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Region(_)));
    }

    #[test]
    fn padded_ratios_hit_the_anchor() {
        let inst = WeightInstance::new(10, 3, 7).unwrap();
        let anchor = BoundaryPair::new(3, 1, 2).unwrap();
        let p = padding_params(inst, anchor).unwrap();
        assert_abs_diff_eq!((3.0 + p.b_sq) / p.n_eff, anchor.s, epsilon = 1e-10);
        assert_abs_diff_eq!((7.0 + p.b_sq) / p.n_eff, anchor.t, epsilon = 1e-10);
        assert_abs_diff_eq!(p.n_eff, 4.0 / (anchor.t - anchor.s), epsilon = 1e-10);
    }
}
