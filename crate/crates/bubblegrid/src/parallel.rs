//! Threaded driver for the oracle's shape scan.
//!
//! The shape list is split into contiguous chunks, each worker scans its
//! chunk independently, and the partial results are merged in chunk order
//! with exact comparisons — so the report is byte-identical to the
//! sequential oracle regardless of thread count. `BUBBLEGRID_THREADS`
//! caps the worker count.

use std::thread;

use bubblegrid_core::beta::Beta;
use bubblegrid_core::oracle::{
    enumerate_shapes, merge_scans, report_from_scan, scan_shapes, MinimiserReport, OracleError,
    ScanResult,
};

/// Worker cap: `BUBBLEGRID_THREADS` if set, else the available parallelism.
pub fn thread_cap() -> usize {
    if let Ok(v) = std::env::var("BUBBLEGRID_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

/// Parallel [`bubblegrid_core::oracle::enumerate_minimisers`]; identical
/// output, chunked across at most `threads` workers.
pub fn enumerate_minimisers_parallel(
    n_a: u32,
    n_b: u32,
    beta: &Beta,
    budget: u32,
    threads: usize,
) -> Result<MinimiserReport, OracleError> {
    let total = n_a + n_b;
    if total == 0 {
        return Err(OracleError::EmptyConfiguration);
    }
    if total > budget || total > 16 {
        return Err(OracleError::BudgetExceeded { total, budget: budget.min(16) });
    }
    let shapes = enumerate_shapes(total);
    let threads = threads.clamp(1, shapes.len().max(1));
    let chunk = shapes.len().div_ceil(threads);
    let partials: Vec<(usize, ScanResult)> = thread::scope(|scope| {
        let mut handles = Vec::new();
        for (i, slice) in shapes.chunks(chunk).enumerate() {
            handles.push((i * chunk, scope.spawn(move || scan_shapes(slice, n_a, beta))));
        }
        handles
            .into_iter()
            .map(|(offset, h)| (offset, h.join().expect("scan worker panicked")))
            .collect()
    });
    let mut acc: Option<ScanResult> = None;
    for (offset, part) in partials {
        acc = Some(match acc {
            None => {
                // Rebase the first chunk too in case chunk 0 was empty.
                merge_scans(ScanResult { best: None, hits: Vec::new() }, part, offset)
            }
            Some(a) => merge_scans(a, part, offset),
        });
    }
    let scan = acc.expect("at least one chunk");
    Ok(report_from_scan(&shapes, &scan, beta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_equals_sequential() {
        let half = Beta::half();
        let seq = bubblegrid_core::oracle::enumerate_minimisers(3, 4, &half, 11).unwrap();
        for threads in [1, 2, 5] {
            let par = enumerate_minimisers_parallel(3, 4, &half, 11, threads).unwrap();
            assert_eq!(par.min_energy, seq.min_energy);
            assert_eq!(par.minimisers_no_swap, seq.minimisers_no_swap);
            assert_eq!(par.minimisers_with_swap, seq.minimisers_with_swap);
            assert_eq!(par.shapes_searched, seq.shapes_searched);
        }
    }
}
