//! Partitioned claim verification. Workers own disjoint contiguous code
//! ranges and share nothing; partials merge in range order, so the final
//! report is identical for any worker count.

use std::time::Instant;

use okings_core::enumerate::{
    self, Claim, ClaimScan, EnumerateError, ScanOptions, VerificationReport,
};

pub fn partition(space: u128, workers: usize) -> Vec<std::ops::Range<u128>> {
    let workers = workers.max(1) as u128;
    let chunk = space / workers + u128::from(space % workers != 0);
    let mut ranges = Vec::new();
    let mut start = 0u128;
    while start < space {
        let end = (start + chunk).min(space);
        ranges.push(start..end);
        start = end;
    }
    if ranges.is_empty() {
        ranges.push(0..0);
    }
    ranges
}

/// Verify a claim over all sizes up to `n_max`, fanning each size's code
/// space out to `workers` threads. Records wall time in the report.
pub fn verify_claim_parallel(
    claim: Claim,
    n_max: usize,
    workers: usize,
    options: ScanOptions,
) -> Result<VerificationReport, EnumerateError> {
    let ceiling = claim.enumeration_ceiling();
    if n_max > ceiling {
        return Err(EnumerateError::TooLarge { n: n_max, max: ceiling });
    }
    let started = Instant::now();
    let sizes: Vec<usize> = match claim.fixed_n() {
        Some(n) => vec![n],
        None => (1..=n_max).collect(),
    };
    let mut partials: Vec<(usize, ClaimScan)> = Vec::new();
    for n in sizes {
        let space = if claim.tournaments_only() {
            enumerate::tournament_space(n)? as u128
        } else {
            enumerate::code_space(n)?
        };
        let ranges = partition(space, workers);
        let results: Vec<Result<ClaimScan, EnumerateError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|range| scope.spawn(move || enumerate::scan_claim(claim, n, range, options)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        let mut merged = ClaimScan::default();
        for r in results {
            merged = enumerate::merge_scans(merged, r?, options.max_counterexamples);
        }
        partials.push((n, merged));
    }
    let mut report = enumerate::finalize_claim(claim, n_max, &partials, options);
    report.elapsed = Some(started.elapsed());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitioning_covers_the_space() {
        for space in [0u128, 1, 7, 100] {
            for workers in [1, 2, 3, 8] {
                let ranges = partition(space, workers);
                let mut next = 0u128;
                for r in &ranges {
                    assert_eq!(r.start, next);
                    next = r.end;
                }
                assert_eq!(next, space);
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        for claim in [Claim::MaxScoreWeakKing, Claim::TournamentKingCounts] {
            let opts = ScanOptions::default();
            let base = verify_claim_parallel(claim, 4, 1, opts).unwrap();
            for workers in [2, 5] {
                let got = verify_claim_parallel(claim, 4, workers, opts).unwrap();
                assert_eq!(got.scanned, base.scanned);
                assert_eq!(got.counterexamples, base.counterexamples);
                assert_eq!(got.total_counterexamples, base.total_counterexamples);
                assert_eq!(got.notes, base.notes);
            }
        }
    }
}
