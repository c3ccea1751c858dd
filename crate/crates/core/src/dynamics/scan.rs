use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::homological_dilatation_certified;
use crate::braid::family_tilde;
use crate::{Error, Result};

/// One genus of the scan. `lambda_hom` is the homological dilatation, a
/// lower bound for the dilatation of the monodromy; whether the two agree
/// depends on orientability of the invariant foliations, which the scan
/// does not decide.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub g: usize,
    pub lambda_hom: f64,
    pub lambda_lower: f64,
    pub lambda_upper: f64,
    pub g_log_lambda: f64,
    pub millis: u64,
    pub lower_bound_only: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanMetadata {
    pub schema: &'static str,
    pub version: &'static str,
    pub gmin: usize,
    pub gmax: usize,
    pub budget: usize,
    pub relative_tolerance: f64,
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingReport {
    pub metadata: ScanMetadata,
    pub rows: Vec<ScalingRow>,
}

#[derive(Debug, Clone, Copy)]
pub struct ScanOptions {
    /// Record wall time per genus; off by default so that reports are
    /// reproducible byte for byte.
    pub timing: bool,
    /// Echoed into the metadata.
    pub budget: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { timing: false, budget: crate::diagram::DEFAULT_BUDGET }
    }
}

fn row(g: usize, timing: bool) -> Result<ScalingRow> {
    let start = Instant::now();
    let r = homological_dilatation_certified(&family_tilde(g)?)?;
    let lambda = r.value.max(1.0);
    let millis = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(ScalingRow {
        g,
        lambda_hom: lambda,
        lambda_lower: r.lower.max(1.0),
        lambda_upper: r.upper.max(1.0),
        g_log_lambda: g as f64 * lambda.ln(),
        millis,
        lower_bound_only: true,
    })
}

pub fn scaling_scan(gmin: usize, gmax: usize) -> Result<ScalingReport> {
    scaling_scan_with(gmin, gmax, ScanOptions::default())
}

/// Homological dilatations of `tilde(b_g)` for `gmin <= g <= gmax`.
pub fn scaling_scan_with(gmin: usize, gmax: usize, opts: ScanOptions) -> Result<ScalingReport> {
    if gmin < 2 {
        return Err(Error::Domain(format!(
            "the scan starts at genus 2 (the monodromy is pseudo-Anosov only from there), got gmin = {gmin}"
        )));
    }
    if gmax < gmin {
        return Err(Error::Domain(format!("gmax = {gmax} is below gmin = {gmin}")));
    }
    let mut rows: Vec<ScalingRow> =
        (gmin..=gmax).into_par_iter().map(|g| row(g, opts.timing)).collect::<Result<_>>()?;
    rows.sort_by_key(|r| r.g);
    Ok(ScalingReport {
        metadata: ScanMetadata {
            schema: crate::SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION"),
            gmin,
            gmax,
            budget: opts.budget,
            relative_tolerance: super::SPECTRAL_REL_TOL,
            timing: opts.timing,
        },
        rows,
    })
}

impl ScalingReport {
    pub const CSV_HEADER: &'static str = "g,lambda_hom,g_log_lambda,millis";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(out, "{},{:.12},{:.12},{}", r.g, r.lambda_hom, r.g_log_lambda, r.millis);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// `(min, max)` of `g log λ` over the rows.
    pub fn window(&self) -> Option<(f64, f64)> {
        let vals = self.rows.iter().map(|r| r.g_log_lambda);
        let min = vals.clone().fold(f64::INFINITY, f64::min);
        let max = vals.fold(f64::NEG_INFINITY, f64::max);
        (!self.rows.is_empty()).then_some((min, max))
    }
}
