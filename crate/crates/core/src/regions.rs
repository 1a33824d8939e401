//! Upper-left / lower-right region geometry over ratio points `(k/n, l/n)` and
//! the bounds on `Q_E(f_n^{k,l})` derived from membership in `UL(S_d)` and
//! `LR(S_d)`.

use std::borrow::Cow;
use std::f64::consts::FRAC_PI_2;

use crate::cheb::{boundary_pairs, BoundaryPair};
use crate::error::{Error, Result};
use crate::instance::WeightInstance;

/// Slack allowed on every region inequality.
pub const REGION_TOL: f64 = 1e-12;

/// A point `(kappa, lambda)` of the unit square strictly above the diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioPoint {
    kappa: f64,
    lambda: f64,
}

impl RatioPoint {
    pub fn new(kappa: f64, lambda: f64) -> Result<Self> {
        if !kappa.is_finite() || !lambda.is_finite() {
            return Err(Error::Domain(format!(
                "non-finite ratio point ({kappa}, {lambda})"
            )));
        }
        if !(0.0..=1.0).contains(&kappa) || !(0.0..=1.0).contains(&lambda) {
            return Err(Error::Argument(format!(
                "ratio point ({kappa}, {lambda}) outside the unit square"
            )));
        }
        if kappa >= lambda {
            return Err(Error::Argument(format!(
                "ratio point needs kappa < lambda, got ({kappa}, {lambda})"
            )));
        }
        Ok(Self { kappa, lambda })
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    /// `(1 - lambda, 1 - kappa)`, the image under bit complementation.
    pub fn mirror(&self) -> Self {
        Self {
            kappa: 1.0 - self.lambda,
            lambda: 1.0 - self.kappa,
        }
    }
}

impl From<BoundaryPair> for RatioPoint {
    fn from(p: BoundaryPair) -> Self {
        Self {
            kappa: p.s,
            lambda: p.t,
        }
    }
}

impl From<&BoundaryPair> for RatioPoint {
    fn from(p: &BoundaryPair) -> Self {
        (*p).into()
    }
}

impl From<WeightInstance> for RatioPoint {
    fn from(inst: WeightInstance) -> Self {
        let (kappa, lambda) = inst.ratios();
        Self { kappa, lambda }
    }
}

/// The two signed region margins; both are `>= 0` exactly on `UL(anchor)`.
fn margins(p: RatioPoint, anchor: RatioPoint) -> (f64, f64) {
    let (k, l) = (p.kappa, p.lambda);
    let (x, y) = (anchor.kappa, anchor.lambda);
    (l * x - k * y, (1.0 - k) * (1.0 - y) - (1.0 - l) * (1.0 - x))
}

/// Membership in the closed upper-left region of `anchor`.
pub fn in_ul(p: RatioPoint, anchor: RatioPoint) -> bool {
    let (m1, m2) = margins(p, anchor);
    m1 >= -REGION_TOL && m2 >= -REGION_TOL
}

/// Membership in the lower-right region of `anchor`; the anchor itself is excluded.
pub fn in_lr(p: RatioPoint, anchor: RatioPoint) -> bool {
    let (m1, m2) = margins(p, anchor);
    let at_anchor = (p.kappa - anchor.kappa).abs() <= REGION_TOL
        && (p.lambda - anchor.lambda).abs() <= REGION_TOL;
    m1 <= REGION_TOL && m2 <= REGION_TOL && !at_anchor
}

/// A query budget at which `p` is guaranteed to sit in `UL(S_d)`: the upper-left
/// rectangle of some `T_{2d}` pair contains `p` once
/// `d >= (pi/2) / (asin sqrt(lambda) - asin sqrt(kappa))`.
pub fn search_cap(p: RatioPoint) -> u32 {
    let spread = p.lambda.sqrt().asin() - p.kappa.sqrt().asin();
    // shave rounding noise so exact ratios such as 3 do not round up to 4
    let ratio = FRAC_PI_2 / spread;
    (ratio - 1e-9).ceil().max(1.0) as u32 + 1
}

/// Supplies `S_d`, either freshly generated or from a precomputed table.
pub trait PairSource {
    fn pairs(&self, d: u32) -> Result<Cow<'_, [BoundaryPair]>>;
}

/// Generates every `S_d` on demand.
#[derive(Debug, Clone, Copy, Default)]
pub struct OnDemand;

impl PairSource for OnDemand {
    fn pairs(&self, d: u32) -> Result<Cow<'_, [BoundaryPair]>> {
        boundary_pairs(d).map(Cow::Owned)
    }
}

/// `S_1, ..., S_max` generated once; larger `d` fall back to on-demand generation.
#[derive(Debug, Clone)]
pub struct BoundaryTable {
    sets: Vec<Vec<BoundaryPair>>,
}

impl BoundaryTable {
    pub fn new(max_d: u32) -> Result<Self> {
        let sets = (1..=max_d)
            .map(boundary_pairs)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { sets })
    }

    pub fn max_d(&self) -> u32 {
        self.sets.len() as u32
    }
}

impl PairSource for BoundaryTable {
    fn pairs(&self, d: u32) -> Result<Cow<'_, [BoundaryPair]>> {
        match d.checked_sub(1).and_then(|i| self.sets.get(i as usize)) {
            Some(set) => Ok(Cow::Borrowed(set.as_slice())),
            None => boundary_pairs(d).map(Cow::Owned),
        }
    }
}

/// How the reported lower bound was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LowerWitness {
    /// `p` lies in `LR(S_d)` for the anchor's `d`, giving `d + 1`.
    Region(BoundaryPair),
    /// `p` is outside `UL(S_1)` and outside every `LR(S_d)` with `d >= 2`.
    /// At such a point `p(k) = 0` and `p(l) = 1` must both be extrema of any
    /// bounded representation, which a quadratic cannot provide, so the degree
    /// is at least 3 and two queries are needed.
    TwoExtrema,
    /// No information beyond the function being non-constant.
    Trivial,
}

impl LowerWitness {
    pub fn anchor(&self) -> Option<BoundaryPair> {
        match self {
            LowerWitness::Region(p) => Some(*p),
            _ => None,
        }
    }
}

/// Combined bounds for one ratio point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsResult {
    pub upper: u32,
    pub lower: u32,
    /// `1 + max{d : p in LR(S_d)}`, or 1 when there is no membership.
    pub region_lower: u32,
    pub upper_anchor: BoundaryPair,
    pub lower_anchor: Option<BoundaryPair>,
    pub lower_witness: LowerWitness,
    pub matched: bool,
    /// Set for finite-`n` instances: the lower bound is only proven for large `n`.
    pub asymptotic_lower: bool,
}

impl BoundsResult {
    pub fn gap(&self) -> u32 {
        self.upper - self.lower
    }
}

/// Minimal `d` with `p in UL(S_d)`, and the first admitting anchor in `S_d` order.
pub fn upper_bound(p: RatioPoint) -> Result<(u32, BoundaryPair)> {
    upper_bound_with(&OnDemand, p)
}

pub fn upper_bound_with(source: &impl PairSource, p: RatioPoint) -> Result<(u32, BoundaryPair)> {
    let cap = search_cap(p);
    for d in 1..=cap {
        if let Some(anchor) = source
            .pairs(d)?
            .iter()
            .find(|a| in_ul(p, RatioPoint::from(*a)))
        {
            return Ok((d, *anchor));
        }
    }
    Err(Error::Internal(format!(
        "({}, {}) not in UL(S_d) for any d <= {cap}",
        p.kappa, p.lambda
    )))
}

/// `1 + max{d in [1, upper + 2] : p in LR(S_d)}` with the first witnessing anchor
/// at that `d`, or `(1, None)` when there is no membership.
pub fn lower_bound(p: RatioPoint) -> Result<(u32, Option<BoundaryPair>)> {
    let (upper, _) = upper_bound(p)?;
    region_lower_with(&OnDemand, p, upper)
}

fn region_lower_with(
    source: &impl PairSource,
    p: RatioPoint,
    upper: u32,
) -> Result<(u32, Option<BoundaryPair>)> {
    for d in (1..=upper + 2).rev() {
        if let Some(anchor) = source
            .pairs(d)?
            .iter()
            .find(|a| in_lr(p, RatioPoint::from(*a)))
        {
            return Ok((d + 1, Some(*anchor)));
        }
    }
    Ok((1, None))
}

pub fn bounds(p: RatioPoint) -> Result<BoundsResult> {
    bounds_with(&OnDemand, p)
}

pub fn bounds_with(source: &impl PairSource, p: RatioPoint) -> Result<BoundsResult> {
    let (upper, upper_anchor) = upper_bound_with(source, p)?;
    let (region_lower, lower_anchor) = region_lower_with(source, p, upper)?;
    let (lower, lower_witness) = match lower_anchor {
        Some(anchor) if region_lower >= 2 => (region_lower, LowerWitness::Region(anchor)),
        _ if upper >= 2 => (2, LowerWitness::TwoExtrema),
        _ => (1, LowerWitness::Trivial),
    };
    if lower > upper {
        return Err(Error::Consistency(format!(
            "({}, {}): lower bound {lower} exceeds upper bound {upper}",
            p.kappa, p.lambda
        )));
    }
    Ok(BoundsResult {
        upper,
        lower,
        region_lower,
        upper_anchor,
        lower_anchor,
        lower_witness,
        matched: upper == lower,
        asymptotic_lower: false,
    })
}

/// Bounds for `f_n^{k,l}` at its ratio point, flagged as asymptotic in `n`.
pub fn bounds_instance(inst: WeightInstance) -> Result<BoundsResult> {
    let mut result = bounds(inst.into())?;
    result.asymptotic_lower = true;
    Ok(result)
}

/// `Q_E(g_n^k)` for `k/n = kappa`, `n` large: 1 at `kappa = 0`, otherwise the
/// `d > 1` with `sin^2((d-2) pi / (4(d-1))) < kappa <= sin^2((d-1) pi / (4d))`.
pub fn g_query_complexity(kappa: f64) -> Result<u32> {
    if !kappa.is_finite() {
        return Err(Error::Domain(format!("non-finite kappa {kappa}")));
    }
    if !(0.0..0.5).contains(&kappa) {
        return Err(Error::Argument(format!("kappa = {kappa} outside [0, 0.5)")));
    }
    if kappa == 0.0 {
        return Ok(1);
    }
    // the interval upper ends increase to 1/2, so the scan terminates
    let mut d: u32 = 2;
    loop {
        let df = f64::from(d);
        let top = 0.5 * (1.0 - ((df - 1.0) * std::f64::consts::PI / (2.0 * df)).cos());
        if kappa <= top + REGION_TOL {
            return Ok(d);
        }
        d += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn pt(k: f64, l: f64) -> RatioPoint {
        RatioPoint::new(k, l).unwrap()
    }

    #[test]
    fn ratio_point_validation() {
        assert!(RatioPoint::new(0.5, 0.5).is_err());
        assert!(RatioPoint::new(0.6, 0.5).is_err());
        assert!(RatioPoint::new(-0.1, 0.5).is_err());
        assert!(RatioPoint::new(0.1, 1.5).is_err());
        assert!(matches!(
            RatioPoint::new(f64::NAN, 0.5),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn ul_examples() {
        assert!(in_ul(pt(0.0, 0.6), pt(0.0, 0.5)));
        assert!(in_ul(pt(0.3, 0.7), pt(0.3, 0.7)));
        assert!(!in_ul(pt(0.3, 0.7), pt(0.25, 0.75)));
    }

    #[test]
    fn lr_examples() {
        assert!(!in_lr(pt(0.25, 0.75), pt(0.0, 0.5)));
        assert!(!in_lr(pt(0.3, 0.7), pt(0.3, 0.7)));
        assert!(in_lr(pt(0.3, 0.7), pt(0.25, 0.75)));
    }

    #[test]
    fn search_cap_examples() {
        assert_eq!(search_cap(pt(0.0, 1.0)), 2);
        assert_eq!(search_cap(pt(0.0, 0.25)), 4);
        assert_eq!(search_cap(pt(0.25, 0.75)), 4);
    }

    #[test]
    fn upper_bound_examples() {
        let (d, a) = upper_bound(pt(0.0, 0.5)).unwrap();
        assert_eq!(d, 1);
        assert_abs_diff_eq!(a.s, 0.0);
        assert_abs_diff_eq!(a.t, 0.5, epsilon = 1e-12);

        let (d, a) = upper_bound(pt(0.25, 0.75)).unwrap();
        assert_eq!(d, 2);
        assert_eq!((a.delta, a.gamma), (1, 1));

        // T_6 pair (1/4, 1/2) comes first in S_3 order; the T_5 pair also admits the point
        let (d, a) = upper_bound(pt(0.3, 0.7)).unwrap();
        assert_eq!(d, 3);
        assert_eq!((a.delta, a.gamma), (0, 2));
        let t5 = BoundaryPair::new(3, 1, 2).unwrap();
        assert_abs_diff_eq!(t5.s, 0.345491502812526, epsilon = 1e-12);
        assert!(in_ul(pt(0.3, 0.7), (&t5).into()));
        for d in 1..=2 {
            assert!(boundary_pairs(d)
                .unwrap()
                .iter()
                .all(|a| !in_ul(pt(0.3, 0.7), a.into())));
        }
    }

    #[test]
    fn lower_bound_examples() {
        let (v, a) = lower_bound(pt(0.0, 0.25)).unwrap();
        assert_eq!(v, 2);
        let a = a.unwrap();
        assert_eq!((a.d, a.delta, a.gamma), (1, 0, 0));

        let (v, a) = lower_bound(pt(0.3, 0.7)).unwrap();
        assert_eq!(v, 3);
        let a = a.unwrap();
        assert_eq!((a.d, a.delta, a.gamma), (2, 1, 1));

        assert_eq!(lower_bound(pt(0.0, 1.0)).unwrap(), (1, None));
    }

    #[test]
    fn bounds_examples() {
        let b = bounds(pt(0.3, 0.7)).unwrap();
        assert_eq!((b.upper, b.lower, b.matched), (3, 3, true));

        let b = bounds(pt(0.0, 0.25)).unwrap();
        assert_eq!((b.upper, b.lower, b.matched), (2, 2, true));
        assert!(in_ul(
            pt(0.0, 0.25),
            (&BoundaryPair::new(2, 0, 0).unwrap()).into()
        ));

        // no LR(S_d) membership; the two-extrema argument lifts the bound to 2
        let b = bounds(pt(0.25, 0.75)).unwrap();
        assert_eq!(b.upper, 2);
        assert_eq!(b.region_lower, 1);
        assert_eq!(b.lower, 2);
        assert_eq!(b.lower_witness, LowerWitness::TwoExtrema);

        let b = bounds(pt(0.0, 1.0)).unwrap();
        assert_eq!((b.upper, b.lower), (1, 1));
        assert_eq!(b.lower_witness, LowerWitness::Trivial);
    }

    #[test]
    fn instance_examples() {
        let b = bounds_instance(WeightInstance::new(4, 0, 1).unwrap()).unwrap();
        assert_eq!((b.upper, b.lower), (2, 2));
        assert!(b.asymptotic_lower);
        let b = bounds_instance(WeightInstance::new(2, 1, 2).unwrap()).unwrap();
        assert_eq!(b.upper, 1);
        let b = bounds_instance(WeightInstance::new(10, 3, 7).unwrap()).unwrap();
        assert_eq!((b.upper, b.lower), (3, 3));
        assert!(WeightInstance::new(4, 1, 1).is_err());
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_query_complexity(0.0).unwrap(), 1);
        assert_eq!(g_query_complexity(0.1).unwrap(), 2);
        assert_eq!(g_query_complexity(0.25).unwrap(), 3);
        assert_eq!(g_query_complexity(0.1464).unwrap(), 2);
        assert_eq!(g_query_complexity(0.1465).unwrap(), 3);
        assert!(g_query_complexity(0.5).is_err());
        assert!(g_query_complexity(-0.01).is_err());
    }

    #[test]
    fn table_matches_on_demand() {
        let table = BoundaryTable::new(6).unwrap();
        for &(k, l) in &[(0.3, 0.7), (0.01, 0.02), (0.45, 0.55), (0.0, 0.3)] {
            assert_eq!(
                bounds_with(&table, pt(k, l)).unwrap(),
                bounds(pt(k, l)).unwrap()
            );
        }
    }
}
