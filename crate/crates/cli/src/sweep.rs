//! Cell-center sweep of the bounds over the upper triangle of the unit square.

use std::fmt::Write as _;
use std::num::ParseFloatError;

use rayon::prelude::*;

use weightdec::regions::{bounds_with, search_cap, BoundaryTable, RatioPoint};
use weightdec::{Error, Result};

pub const MIN_RESOLUTION: u32 = 10;
pub const CSV_HEADER: &str = "kappa,lambda,upper,lower,gap";

/// Largest `S_d` kept in the shared table; bigger `d` are generated on demand.
const TABLE_MAX_D: u32 = 1024;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepCell {
    pub kappa: f64,
    pub lambda: f64,
    pub upper: u32,
    pub lower: u32,
    pub gap: u32,
}

impl SweepCell {
    pub fn csv_row(&self) -> String {
        format!(
            "{:.9},{:.9},{},{},{}",
            self.kappa, self.lambda, self.upper, self.lower, self.gap
        )
    }

    pub fn parse_row(row: &str) -> std::result::Result<Self, String> {
        let fields: Vec<&str> = row.trim().split(',').collect();
        if fields.len() != 5 {
            return Err(format!("expected 5 fields, got {}: {row:?}", fields.len()));
        }
        let float = |s: &str| s.parse::<f64>().map_err(|e: ParseFloatError| e.to_string());
        let int = |s: &str| s.parse::<u32>().map_err(|e| e.to_string());
        Ok(Self {
            kappa: float(fields[0])?,
            lambda: float(fields[1])?,
            upper: int(fields[2])?,
            lower: int(fields[3])?,
            gap: int(fields[4])?,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSummary {
    pub cells: usize,
    pub matched_fraction: f64,
    pub gap_le1_fraction: f64,
    pub violations: usize,
}

impl SweepSummary {
    pub fn line(&self) -> String {
        format!(
            "cells={} matched_fraction={:.6} gap_le1_fraction={:.6} violations={}",
            self.cells, self.matched_fraction, self.gap_le1_fraction, self.violations
        )
    }
}

fn center(i: u32, resolution: u32) -> f64 {
    (f64::from(i) + 0.5) / f64::from(resolution)
}

/// Evaluates every cell center `((i + 1/2)/R, (j + 1/2)/R)` with `i < j`, in
/// `(i, j)` order.
pub fn sweep(resolution: u32) -> Result<Vec<SweepCell>> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::Argument(format!(
            "resolution must be at least {MIN_RESOLUTION}, got {resolution}"
        )));
    }
    // the cells next to the diagonal need the largest d
    let widest = (0..resolution - 1)
        .map(|i| {
            let p = RatioPoint::new(center(i, resolution), center(i + 1, resolution))?;
            Ok(search_cap(p))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max()
        .unwrap_or(1);
    let table = BoundaryTable::new((widest + 2).min(TABLE_MAX_D))?;

    let rows: Vec<Vec<SweepCell>> = (0..resolution)
        .into_par_iter()
        .map(|i| {
            (i + 1..resolution)
                .map(|j| {
                    let p = RatioPoint::new(center(i, resolution), center(j, resolution))?;
                    let b = bounds_with(&table, p)?;
                    Ok(SweepCell {
                        kappa: p.kappa(),
                        lambda: p.lambda(),
                        upper: b.upper,
                        lower: b.lower,
                        gap: b.gap(),
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

pub fn summarize(cells: &[SweepCell]) -> SweepSummary {
    let total = cells.len().max(1) as f64;
    let matched = cells.iter().filter(|c| c.upper == c.lower).count();
    let close = cells
        .iter()
        .filter(|c| c.upper >= c.lower && c.gap <= 1)
        .count();
    let violations = cells.iter().filter(|c| c.lower > c.upper).count();
    SweepSummary {
        cells: cells.len(),
        matched_fraction: matched as f64 / total,
        gap_le1_fraction: close as f64 / total,
        violations,
    }
}

pub fn to_csv(cells: &[SweepCell]) -> String {
    let mut out = String::with_capacity(40 * (cells.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for cell in cells {
        let _ = writeln!(out, "{}", cell.csv_row());
    }
    out
}
