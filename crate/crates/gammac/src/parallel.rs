//! Thread-pool drivers. Work is split into fixed chunks and reduced in chunk
//! order, so results never depend on the schedule.

use std::collections::BTreeMap;

use rayon::prelude::*;

use gammac_core::compliance::{f_from_scan, merge_scans, pair_count, scan_pair_masks, FValue};
use gammac_core::iso::CanonicalForm;
use gammac_core::search::{
    examine, frontier, generate_from, sample_graph, Bound, Examined, Finding, SearchMode, SearchOutcome, SearchSpec,
};
use gammac_core::{Graph, Result};

/// Runs `f` on a pool of `threads` workers, or on the global pool for `None`.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

const F_CHUNKS: u64 = 4096;

/// `compute_f` with the mask range split across the pool.
pub fn compute_f_parallel(n: usize) -> Result<FValue> {
    let total = 1u64 << pair_count(n);
    let chunks = F_CHUNKS.min(total);
    let parts: Vec<_> = (0..chunks)
        .into_par_iter()
        .map(|i| scan_pair_masks(n, i * total / chunks..(i + 1) * total / chunks))
        .collect::<Result<_>>()?;
    Ok(f_from_scan(n, parts.into_iter().fold(None, merge_scans)))
}

/// Augmentation depth at which exhaustive runs fan out.
const FRONTIER_DEPTH: usize = 6;

/// `search_non_compliant` with samples or augmentation subtrees spread over
/// the pool. Results are recorded in the same order as the sequential run.
pub fn search_parallel(spec: &SearchSpec) -> Result<SearchOutcome> {
    spec.validate()?;
    let mut out = SearchOutcome::default();
    let mut seen: BTreeMap<CanonicalForm, Finding> = BTreeMap::new();
    for g in &spec.candidates {
        out.record(g, examine(spec, g)?, &mut seen)?;
    }
    match spec.mode {
        SearchMode::Sample { count, seed } => {
            let results: Vec<Option<(Graph, Examined)>> = (0..count)
                .into_par_iter()
                .map(|i| match sample_graph(spec, seed, i)? {
                    Some(g) => Ok(Some((g, examine(spec, &g)?))),
                    None => Ok(None),
                })
                .collect::<Result<_>>()?;
            for r in results {
                match r {
                    Some((g, e)) => out.record(&g, e, &mut seen)?,
                    None => out.unsampled += 1,
                }
            }
        }
        SearchMode::Exhaustive => {
            let bound = Bound::of(spec);
            let roots = frontier(spec.order, FRONTIER_DEPTH, bound)?;
            let per_root: Vec<Vec<(Graph, Examined)>> = roots
                .par_iter()
                .map(|root| {
                    let mut found = Vec::new();
                    let mut err = None;
                    generate_from(root, spec.order, bound, &mut |g| {
                        if err.is_none() {
                            match examine(spec, g) {
                                Ok(e) => found.push((*g, e)),
                                Err(e) => err = Some(e),
                            }
                        }
                    })?;
                    err.map_or(Ok(found), Err)
                })
                .collect::<Result<_>>()?;
            for (g, e) in per_root.into_iter().flatten() {
                out.record(&g, e, &mut seen)?;
            }
        }
    }
    out.findings = seen.into_values().collect();
    Ok(out)
}
