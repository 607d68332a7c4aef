use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use serde::Serialize;

use crate::error::Result;
use crate::grid::LatinSquare;
use crate::par;

use super::{enumerate_reduced_latin_limited, orthogonal_mate, DEFAULT_REDUCED_LIMIT};

pub const REDUCED_ORDER6_COUNT: usize = 9408;

pub const SUFFICIENCY_NOTE: &str = "Every Latin square becomes reduced after relabelling its \
symbols and permuting its rows. Row, column and symbol permutations carry transversals to \
transversals and disjoint sets to disjoint sets, so a square has an orthogonal mate exactly \
when its reduced form does. Checking all reduced squares therefore covers every Latin square \
of the order.";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; 0 or 1 runs inline.
    pub jobs: usize,
    /// Stop after this many squares.
    pub limit: Option<usize>,
    /// Report progress after every this many squares; 0 disables.
    pub progress_every: usize,
    /// Enumeration guard for the reduced-square stream.
    pub max_order: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            limit: None,
            progress_every: 0,
            max_order: DEFAULT_REDUCED_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareResult {
    /// 1-based position in the input stream.
    pub index: usize,
    pub transversal_count: usize,
    pub outcome: &'static str,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub order: usize,
    pub squares_checked: usize,
    pub expected_total: Option<usize>,
    pub complete: bool,
    pub mates_found: usize,
    pub first_mate: Option<usize>,
    /// transversal count -> number of squares with that count
    pub transversal_histogram: BTreeMap<usize, usize>,
    pub total_nodes: u64,
    pub sufficiency_note: &'static str,
    pub jobs: usize,
    pub runtime_ms: u64,
    pub per_square: Vec<SquareResult>,
}

impl SweepReport {
    /// Equality ignoring the worker count and wall-clock time.
    pub fn same_results(&self, other: &Self) -> bool {
        let strip = |r: &Self| Self {
            jobs: 0,
            runtime_ms: 0,
            ..r.clone()
        };
        strip(self) == strip(other)
    }

    pub fn summary(&self) -> String {
        let total = self
            .expected_total
            .map_or_else(|| self.squares_checked.to_string(), |t| t.to_string());
        format!(
            "checked={}/{} mates={} max_transversals={} nodes={} runtime_ms={}",
            self.squares_checked,
            total,
            self.mates_found,
            self.transversal_histogram
                .keys()
                .next_back()
                .copied()
                .unwrap_or(0),
            self.total_nodes,
            self.runtime_ms
        )
    }
}

/// Runs the mate search on every square; `on_progress(checked, total, mates)`
/// fires every `opts.progress_every` squares and once at the end.
pub fn check_squares(
    squares: &[LatinSquare],
    opts: &SweepOptions,
    on_progress: &(dyn Fn(usize, usize, usize) + Sync),
) -> SweepReport {
    let start = Instant::now();
    let total = squares.len();
    let checked = AtomicUsize::new(0);
    let mates = AtomicUsize::new(0);
    let indexed: Vec<(usize, &LatinSquare)> = squares.iter().enumerate().collect();
    let per_square: Vec<SquareResult> = par::map_with_jobs(&indexed, opts.jobs, |&(i, l)| {
        let cert = orthogonal_mate(l);
        if cert.has_mate() {
            mates.fetch_add(1, Ordering::Relaxed);
        }
        let k = checked.fetch_add(1, Ordering::Relaxed) + 1;
        if opts.progress_every > 0 && k.is_multiple_of(opts.progress_every) && k != total {
            on_progress(k, total, mates.load(Ordering::Relaxed));
        }
        SquareResult {
            index: i + 1,
            transversal_count: cert.transversal_count,
            outcome: cert.outcome_name(),
            nodes: cert.nodes,
        }
    });
    let mates_found = per_square.iter().filter(|r| r.outcome == "mate").count();
    if opts.progress_every > 0 {
        on_progress(total, total, mates_found);
    }
    let mut transversal_histogram = BTreeMap::new();
    for r in &per_square {
        *transversal_histogram
            .entry(r.transversal_count)
            .or_insert(0) += 1;
    }
    SweepReport {
        order: squares.first().map_or(0, |s| s.order()),
        squares_checked: total,
        expected_total: None,
        complete: false,
        mates_found,
        first_mate: per_square
            .iter()
            .find(|r| r.outcome == "mate")
            .map(|r| r.index),
        transversal_histogram,
        total_nodes: per_square.iter().map(|r| r.nodes).sum(),
        sufficiency_note: SUFFICIENCY_NOTE,
        jobs: opts.jobs.max(1),
        runtime_ms: start.elapsed().as_millis() as u64,
        per_square,
    }
}

/// Mate search over every reduced Latin square of order 6 (or the first
/// `opts.limit` of them). Progress is reported against the full 9408.
pub fn verify_no_order6_pair(
    opts: &SweepOptions,
    on_progress: &(dyn Fn(usize, usize, usize) + Sync),
) -> Result<SweepReport> {
    let stream = enumerate_reduced_latin_limited(6, opts.max_order)?;
    let squares: Vec<LatinSquare> = match opts.limit {
        Some(m) => stream.take(m).collect(),
        None => stream.collect(),
    };
    let mut report = check_squares(&squares, opts, &|k, _, m| {
        on_progress(k, REDUCED_ORDER6_COUNT, m)
    });
    report.order = 6;
    report.expected_total = Some(REDUCED_ORDER6_COUNT);
    report.complete = report.squares_checked == REDUCED_ORDER6_COUNT;
    Ok(report)
}
