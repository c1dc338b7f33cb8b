//! Exact `hc` with the first-vertex partitions searched in parallel.

use std::sync::atomic::AtomicU64;

use hamcolor_core::coloring::Ordering;
use hamcolor_core::detour::DetourTable;
use hamcolor_core::oracle::{
    combine_outcomes, exact_guard, min_span_for_ordering, search_from, OracleError, OracleResult,
};
use rayon::prelude::*;

/// Smallest greedy span over the orderings `f, 0, 1, ..` (f skipped), an
/// upper bound on `hc`.
pub fn greedy_upper_bound(table: &DetourTable) -> u64 {
    let n = table.order();
    (0..n)
        .map(|f| {
            let seq: Vec<usize> = std::iter::once(f)
                .chain((0..n).filter(|&v| v != f))
                .collect();
            min_span_for_ordering(table, &Ordering::new(seq).expect("permutation"))
        })
        .min()
        .unwrap_or(0)
}

/// Same value and witness as [`hamcolor_core::oracle::exact_hc_with_table`].
///
/// Every partition starts from the same greedy upper bound and keeps its own
/// copy of it, so the explored count does not depend on scheduling.
pub fn parallel_exact_hc(
    table: &DetourTable,
    max_n: usize,
) -> Result<OracleResult<Vec<u64>>, OracleError> {
    let n = table.order();
    exact_guard(n, max_n)?;
    let upper = greedy_upper_bound(table);
    let outcomes: Vec<_> = (0..n)
        .into_par_iter()
        .map(|first| search_from(table, first, &AtomicU64::new(upper)))
        .collect();
    Ok(combine_outcomes(table, &outcomes))
}
