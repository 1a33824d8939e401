use std::fmt::Write as _;

use weightdec::lp_oracle::{min_degree_capped, qe_degree_lower_from};
use weightdec::quantum_sim::{verify_exactness, SimConfig, VerifyMode};
use weightdec::regions::LowerWitness;
use weightdec::{
    boundary_pairs, bounds, bounds_instance, g_query_complexity, BoundaryPair, BoundsResult,
    RatioPoint, WeightInstance,
};

use crate::exit::{CliError, ExitCode};
use crate::sweep::{self, SweepSummary};

/// Tolerance on `1 - min_success` for `verify` to report exactness.
pub const VERIFY_TOL: f64 = 1e-9;

type CmdResult = Result<String, CliError>;

fn pair_text(p: &BoundaryPair) -> String {
    format!(
        "s={:.12} t={:.12} D={} gamma={} delta={}",
        p.s,
        p.t,
        p.degree(),
        p.gamma,
        p.delta
    )
}

fn headline(b: &BoundsResult) -> String {
    if b.matched {
        format!("upper={} lower={} matched", b.upper, b.lower)
    } else {
        format!("upper={} lower={} gap={}", b.upper, b.lower, b.gap())
    }
}

fn bounds_report(p: RatioPoint, b: &BoundsResult, csv: bool) -> String {
    if csv {
        return format!(
            "{:.9},{:.9},{},{},{}\n",
            p.kappa(),
            p.lambda(),
            b.upper,
            b.lower,
            b.gap()
        );
    }
    let mut out = headline(b);
    out.push('\n');
    let _ = writeln!(out, "kappa={:.9} lambda={:.9}", p.kappa(), p.lambda());
    let _ = writeln!(
        out,
        "upper_anchor: d={} {}",
        b.upper_anchor.d,
        pair_text(&b.upper_anchor)
    );
    let _ = writeln!(out, "region_lower={}", b.region_lower);
    match b.lower_witness {
        LowerWitness::Region(a) => {
            let _ = writeln!(out, "lower_anchor: d={} {}", a.d, pair_text(&a));
        }
        LowerWitness::TwoExtrema => {
            let _ = writeln!(
                out,
                "lower_anchor: none (interior point, at least two extrema needed)"
            );
        }
        LowerWitness::Trivial => {
            let _ = writeln!(out, "lower_anchor: none");
        }
    }
    if b.asymptotic_lower {
        let _ = writeln!(
            out,
            "note: the lower bound is asymptotic and holds for large n at these ratios"
        );
    }
    out
}

pub fn bounds_for_instance(n: u32, k: u32, l: u32, csv: bool) -> CmdResult {
    let inst = WeightInstance::new(n, k, l)?;
    let b = bounds_instance(inst)?;
    Ok(bounds_report(inst.into(), &b, csv))
}

pub fn bounds_for_ratio(kappa: f64, lambda: f64, csv: bool) -> CmdResult {
    let p = RatioPoint::new(kappa, lambda)?;
    let b = bounds(p)?;
    Ok(bounds_report(p, &b, csv))
}

pub fn sd(d: u32) -> CmdResult {
    let mut out = String::new();
    for p in boundary_pairs(d)? {
        let _ = writeln!(out, "{}", pair_text(&p));
    }
    Ok(out)
}

pub fn verify(n: u32, k: u32, l: u32, mode: VerifyMode, config: SimConfig) -> CmdResult {
    let inst = WeightInstance::new(n, k, l)?;
    let summary = verify_exactness(inst, mode, config)?;
    let exact = summary.is_exact(VERIFY_TOL);
    let a = summary.anchor();
    let mut out = format!("d={} min_success={:.9}\n", summary.d, summary.min_success);
    let _ = writeln!(
        out,
        "mode={} max_queries={} inputs={}",
        match mode {
            VerifyMode::Full => "full",
            VerifyMode::Symmetric => "symmetric",
        },
        summary.max_queries,
        summary.inputs_checked
    );
    let _ = writeln!(out, "anchor: {}", pair_text(&a));
    let _ = writeln!(
        out,
        "a^2={:.9} b^2={:.9}",
        summary.params.a_sq, summary.params.b_sq
    );
    if exact {
        Ok(out)
    } else {
        Err(CliError::new(
            ExitCode::Failed,
            format!("{out}not exact: 1 - min_success exceeds {VERIFY_TOL:e}"),
        ))
    }
}

pub fn degree(n: u32, k: u32, l: u32, max_d: Option<u32>) -> CmdResult {
    let inst = WeightInstance::new(n, k, l)?;
    let region = bounds_instance(inst)?;
    let upper = region.upper;
    let cap = max_d.unwrap_or(n).min(n);
    match min_degree_capped(inst, cap)? {
        Some(deg) => {
            let qe = qe_degree_lower_from(deg);
            let mut out = format!("deg={deg} qe_lower={qe}\n");
            let _ = writeln!(out, "region: {}", headline(&region));
            if qe > upper {
                return Err(CliError::new(
                    ExitCode::Failed,
                    format!("{out}inconsistent: qe_lower exceeds the upper bound"),
                ));
            }
            Ok(out)
        }
        None => Ok(format!(
            "deg>{cap} qe_lower>={}\nregion: {}\n",
            qe_degree_lower_from(cap + 1),
            headline(&region)
        )),
    }
}

pub fn g(kappa: f64) -> CmdResult {
    let value = g_query_complexity(kappa)?;
    let mut out = format!("g={value}\n");
    let b = bounds(RatioPoint::new(kappa, 0.5)?)?;
    let _ = writeln!(out, "f at (kappa, 0.5): {}", headline(&b));
    Ok(out)
}

pub fn run_sweep(resolution: u32) -> Result<(String, SweepSummary), CliError> {
    let cells = sweep::sweep(resolution)?;
    let summary = sweep::summarize(&cells);
    Ok((sweep::to_csv(&cells), summary))
}
