//! Data-parallel grid scans. Results match the sequential scans in
//! `gft_core::verifier` exactly: the reduction is the same order-independent
//! minimum, and on failure the error of the lowest-indexed candidate wins.

use gft_core::neighborhood::{InclusionReport, inclusion_property_test_with};
use gft_core::partial_sums::verify_ratio_bounds_with;
use gft_core::verifier::{
    ConditionProbe, Extremum, Probe, candidate, candidate_count, evaluate_candidate,
};
use gft_core::{
    ClassParams, Error, GridSpec, NeighborhoodSpec, PolarPoint, Result, TruncatedSeries,
    VerificationReport,
};
use rayon::prelude::*;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "GFT_THREADS";

/// Sizes the global pool from `GFT_THREADS` when set to a positive integer.
/// Has no effect once the pool exists.
pub fn init_from_env() {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0);
    if let Some(n) = threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

pub fn par_scan<P: Probe + ?Sized>(grid: &GridSpec, probe: &P) -> Result<Extremum> {
    (0..candidate_count(grid, probe))
        .into_par_iter()
        .map(|i| evaluate_candidate(grid, probe, i).map_err(|e| (i, e)))
        .reduce_with(|a, b| match (a, b) {
            (Ok(x), Ok(y)) => Ok(x.min(y)),
            (Err(x), Err(y)) => Err(if x.0 <= y.0 { x } else { y }),
            (Err(e), Ok(_)) | (Ok(_), Err(e)) => Err(e),
        })
        .unwrap_or(Err((0, Error::Domain("empty grid"))))
        .map_err(|(_, e)| e)
}

/// Every candidate with its value, in scan order.
pub fn par_values<P: Probe + ?Sized>(grid: &GridSpec, probe: &P) -> Result<Vec<(PolarPoint, f64)>> {
    (0..candidate_count(grid, probe))
        .into_par_iter()
        .map(|i| {
            probe
                .value(candidate(grid, probe, i))
                .map(|v| (candidate(grid, probe, i), v))
        })
        .collect()
}

pub fn par_grid_min_condition(
    p: &ClassParams,
    f: &TruncatedSeries,
    grid: &GridSpec,
) -> Result<VerificationReport> {
    let probe = ConditionProbe::new(p, f);
    let e = par_scan(grid, &probe)?;
    Ok(VerificationReport::new("condition", grid, e, 0.0))
}

pub fn par_verify_ratio_bounds(
    p: &ClassParams,
    f: &TruncatedSeries,
    m: usize,
    grid: &GridSpec,
) -> Result<[VerificationReport; 4]> {
    verify_ratio_bounds_with(p, f, m, grid, par_scan)
}

pub fn par_inclusion_property_test(
    spec: &NeighborhoodSpec,
    f: &TruncatedSeries,
    trials: usize,
    order: usize,
    grid: &GridSpec,
    seed: u64,
) -> Result<InclusionReport> {
    inclusion_property_test_with(spec, f, trials, order, grid, seed, par_grid_min_condition)
}
