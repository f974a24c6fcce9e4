use rayon::prelude::*;
use serde::Serialize;

use super::config::SweepRanges;
use crate::error::{Error, Result};
use crate::koszul::{nakayama_report, NakayamaReport};
use crate::linalg::FieldSpec;
use crate::SEED;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub cells: usize,
    pub symmetric_cells: usize,
    /// Cells with at least one asymmetric pair of simples.
    pub asymmetric_cells: usize,
    pub witness_cells: usize,
    pub syzygy_formula_verified: bool,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub field_p: u32,
    pub max_degree: usize,
    pub seed: u64,
    /// Sorted by `(t, n)`.
    pub cells: Vec<NakayamaReport>,
    pub summary: SweepSummary,
}

impl SweepReport {
    pub fn violations(&self) -> impl Iterator<Item = String> + '_ {
        self.cells
            .iter()
            .flat_map(|c| c.violations.iter().map(move |v| format!("(t={}, n={}): {v}", c.t, c.n)))
    }
}

/// Runs [`nakayama_report`] on every cell of the grid using `workers` threads.
/// The first failing cell in `(t, n)` order aborts the sweep.
pub fn run_sweep(
    ranges: SweepRanges,
    max_degree: usize,
    field: FieldSpec,
    tail: Option<usize>,
    workers: usize,
) -> Result<SweepReport> {
    let grid: Vec<(usize, usize)> = (ranges.t.0..=ranges.t.1)
        .flat_map(|t| (ranges.n.0..=ranges.n.1).map(move |n| (t, n)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    let results: Vec<Result<NakayamaReport>> = pool.install(|| {
        grid.par_iter()
            .map(|&(t, n)| {
                nakayama_report(t, n, max_degree, field, tail.map(|k| k.min(max_degree)))
                    .map_err(|e| Error::Internal(format!("cell (t={t}, n={n}) failed: {e}")))
            })
            .collect()
    });
    let cells = results.into_iter().collect::<Result<Vec<_>>>()?;

    let summary = SweepSummary {
        cells: cells.len(),
        symmetric_cells: cells.iter().filter(|c| c.symmetric).count(),
        asymmetric_cells: cells.iter().filter(|c| c.asymmetric_pairs > 0).count(),
        witness_cells: cells.iter().filter(|c| c.witness.confirmed == Some(true)).count(),
        syzygy_formula_verified: cells
            .iter()
            .all(|c| c.syzygy_formula.omega2_verified && c.syzygy_formula.even_syzygies_verified),
        violations: cells.iter().map(|c| c.violations.len()).sum(),
    };
    Ok(SweepReport { field_p: field.characteristic(), max_degree, seed: SEED, cells, summary })
}
