//! Transversals of arbitrary Latin squares, orthogonal mates by exact cover,
//! and the sweep over all reduced squares of order 6.

mod dlx;
mod sweep;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::pair_grid_to_json_value;
use crate::grid::{GraecoLatinSquare, LatinSquare, Pair, PairGrid};

pub use dlx::{CoverResult, ExactCover};
pub use sweep::{
    check_squares, verify_no_order6_pair, SquareResult, SweepOptions, SweepReport,
    REDUCED_ORDER6_COUNT, SUFFICIENCY_NOTE,
};

/// Default guard for reduced-square enumeration.
pub const DEFAULT_REDUCED_LIMIT: usize = 6;
/// Default guard for directrix enumeration.
pub const DEFAULT_DIRECTRIX_LIMIT: usize = 9;
pub const MAX_ORDER_ENV: &str = "EULER_SQUARES_MAX_ORDER";

/// `EULER_SQUARES_MAX_ORDER` when set to a positive integer, else `default`.
pub fn max_order_from_env(default: usize) -> usize {
    std::env::var(MAX_ORDER_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(default)
}

/// One cell per column, pairwise distinct rows and values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Transversal {
    /// `rows[t - 1]` is the row used in column `t`.
    pub rows: Vec<usize>,
    pub values: Vec<usize>,
}

impl Transversal {
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    /// `(row, col)` pairs, 1-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().map(|(c, &r)| (r, c + 1))
    }
}

/// Column-major copy of the square: `vals[c * n + r]`, 0-based symbols.
struct Columns {
    n: usize,
    vals: Vec<u8>,
}

impl Columns {
    fn of(l: &LatinSquare) -> Self {
        let n = l.order();
        assert!(n <= 64, "bitmask search supports orders up to 64");
        let mut vals = vec![0u8; n * n];
        for c in 0..n {
            for r in 0..n {
                vals[c * n + r] = (l.get(r + 1, c + 1) - 1) as u8;
            }
        }
        Self { n, vals }
    }

    fn walk(
        &self,
        col: usize,
        rows: u64,
        values: u64,
        path: &mut Vec<u8>,
        f: &mut impl FnMut(&[u8]),
    ) {
        let n = self.n;
        if col == n {
            f(path);
            return;
        }
        let base = col * n;
        for r in 0..n {
            let v = self.vals[base + r];
            if rows >> r & 1 == 0 && values >> v & 1 == 0 {
                path.push(r as u8);
                self.walk(col + 1, rows | 1 << r, values | 1 << v, path, f);
                path.pop();
            }
        }
    }
}

/// Every transversal of `l`, sorted by row sequence.
pub fn transversals(l: &LatinSquare) -> Vec<Transversal> {
    let cols = Columns::of(l);
    let n = cols.n;
    let mut out = Vec::new();
    cols.walk(0, 0, 0, &mut Vec::with_capacity(n), &mut |path| {
        out.push(Transversal {
            rows: path.iter().map(|&r| r as usize + 1).collect(),
            values: path
                .iter()
                .enumerate()
                .map(|(c, &r)| cols.vals[c * n + r as usize] as usize + 1)
                .collect(),
        });
    });
    // Column-by-column search in increasing row order already yields sorted output.
    out
}

pub fn count_transversals(l: &LatinSquare) -> usize {
    let cols = Columns::of(l);
    let mut k = 0;
    cols.walk(0, 0, 0, &mut Vec::with_capacity(cols.n), &mut |_| k += 1);
    k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MateOutcome {
    /// The disjoint transversals in canonical order; transversal `k` carries exponent `k`.
    Mate {
        transversals: Vec<Transversal>,
        square: GraecoLatinSquare,
    },
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MateCertificate {
    pub subject: LatinSquare,
    pub outcome: MateOutcome,
    pub transversal_count: usize,
    pub nodes: u64,
}

#[derive(Serialize)]
struct CertificateJson {
    order: usize,
    outcome: &'static str,
    transversal_count: usize,
    nodes: u64,
    mate: Option<serde_json::Value>,
}

impl MateCertificate {
    pub fn order(&self) -> usize {
        self.subject.order()
    }

    pub fn has_mate(&self) -> bool {
        matches!(self.outcome, MateOutcome::Mate { .. })
    }

    pub fn mate(&self) -> Option<&GraecoLatinSquare> {
        match &self.outcome {
            MateOutcome::Mate { square, .. } => Some(square),
            MateOutcome::Exhausted => None,
        }
    }

    pub fn outcome_name(&self) -> &'static str {
        if self.has_mate() {
            "mate"
        } else {
            "exhausted"
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(CertificateJson {
            order: self.order(),
            outcome: self.outcome_name(),
            transversal_count: self.transversal_count,
            nodes: self.nodes,
            mate: self.mate().map(|g| pair_grid_to_json_value(g.grid())),
        })
        .expect("certificate serializes")
    }
}

/// Looks for `n` cell-disjoint transversals covering the square.
pub fn orthogonal_mate(l: &LatinSquare) -> MateCertificate {
    let n = l.order();
    let all = transversals(l);
    let mut ec = ExactCover::new(n * n);
    for t in &all {
        let items: Vec<usize> = t.cells().map(|(r, c)| (r - 1) * n + (c - 1)).collect();
        ec.add_option(&items);
    }
    let CoverResult { solution, nodes } = ec.solve_first();
    let outcome = match solution {
        None => MateOutcome::Exhausted,
        Some(ids) => {
            let mut chosen: Vec<Transversal> = ids.into_iter().map(|i| all[i].clone()).collect();
            chosen.sort();
            let mut exps = vec![0usize; n * n];
            for (k, t) in chosen.iter().enumerate() {
                for (r, c) in t.cells() {
                    exps[(r - 1) * n + (c - 1)] = k + 1;
                }
            }
            let grid = PairGrid::from_fn(n, |i, j| {
                Pair::new(l.get(i, j) as usize, exps[(i - 1) * n + (j - 1)])
            })
            .expect("nonzero order");
            let square = GraecoLatinSquare::new(grid).expect("disjoint transversals give a mate");
            MateOutcome::Mate {
                transversals: chosen,
                square,
            }
        }
    };
    MateCertificate {
        subject: l.clone(),
        outcome,
        transversal_count: all.len(),
        nodes,
    }
}

/// Reduced Latin squares of order `n` in lexicographic (row-major) order.
pub struct ReducedLatin {
    n: usize,
    cells: Vec<u8>,
    row_used: Vec<u64>,
    col_used: Vec<u64>,
    free: Vec<(usize, usize)>,
    depth: usize,
    started: bool,
    done: bool,
}

pub fn enumerate_reduced_latin(n: usize) -> Result<ReducedLatin> {
    enumerate_reduced_latin_limited(n, DEFAULT_REDUCED_LIMIT)
}

pub fn enumerate_reduced_latin_limited(n: usize, limit: usize) -> Result<ReducedLatin> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n > limit.min(64) {
        return Err(Error::OrderLimit {
            order: n,
            limit: limit.min(64),
        });
    }
    let mut cells = vec![0u8; n * n];
    let mut row_used = vec![0u64; n];
    let mut col_used = vec![0u64; n];
    for k in 0..n {
        let v = k as u8 + 1;
        cells[k] = v;
        cells[k * n] = v;
        row_used[0] |= 1 << k;
        col_used[k] |= 1 << k;
        row_used[k] |= 1 << k;
        col_used[0] |= 1 << k;
    }
    let free = (1..n).flat_map(|r| (1..n).map(move |c| (r, c))).collect();
    Ok(ReducedLatin {
        n,
        cells,
        row_used,
        col_used,
        free,
        depth: 0,
        started: false,
        done: false,
    })
}

impl ReducedLatin {
    fn emit(&self) -> LatinSquare {
        let sq = crate::grid::Grid::new(self.n, self.cells.iter().map(|&v| v as i64).collect())
            .expect("sized grid");
        LatinSquare::new_unchecked(sq)
    }
}

impl Iterator for ReducedLatin {
    type Item = LatinSquare;

    fn next(&mut self) -> Option<LatinSquare> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.free.is_empty() {
                self.done = true;
                return Some(self.emit());
            }
        }
        let n = self.n;
        loop {
            let (r, c) = self.free[self.depth];
            let idx = r * n + c;
            let cur = self.cells[idx];
            if cur != 0 {
                let bit = 1u64 << (cur - 1);
                self.row_used[r] &= !bit;
                self.col_used[c] &= !bit;
            }
            let busy = self.row_used[r] | self.col_used[c];
            let next = (cur as usize..n).find(|&v| busy >> v & 1 == 0);
            match next {
                Some(v) => {
                    let bit = 1u64 << v;
                    self.cells[idx] = v as u8 + 1;
                    self.row_used[r] |= bit;
                    self.col_used[c] |= bit;
                    if self.depth + 1 == self.free.len() {
                        return Some(self.emit());
                    }
                    self.depth += 1;
                }
                None => {
                    self.cells[idx] = 0;
                    if self.depth == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
            }
        }
    }
}

/// Squares reachable from `l` by at most `depth` rectangle swaps.
pub fn rectangle_swap_orbit(l: &LatinSquare, depth: usize) -> BTreeSet<LatinSquare> {
    let mut seen = BTreeSet::from([l.clone()]);
    let mut frontier = vec![l.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for sq in &frontier {
            for s in single_swaps(sq) {
                if seen.insert(s.clone()) {
                    next.push(s);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}

/// Every square one rectangle swap away from `l`.
pub fn single_swaps(l: &LatinSquare) -> Vec<LatinSquare> {
    let n = l.order();
    let mut out = Vec::new();
    for r1 in 1..=n {
        for r2 in r1 + 1..=n {
            for c1 in 1..=n {
                for c2 in c1 + 1..=n {
                    if l.get(r1, c1) == l.get(r2, c2) && l.get(r1, c2) == l.get(r2, c1) {
                        out.push(l.rectangle_swap(r1, c1, r2, c2).expect("pattern checked"));
                    }
                }
            }
        }
    }
    out
}

/// The swapped order-6 square: 3 and 6 exchanged at rows/columns 2 and 5 of
/// the cyclic square.
pub fn swapped_order6() -> LatinSquare {
    crate::march::simple_march(6)
        .and_then(|l| l.rectangle_swap(2, 2, 5, 5))
        .expect("corners hold 3 and 6")
}

/// Transversal count of the swapped order-6 square, checked against the
/// two readings of the reported "32".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapReport {
    pub square: Vec<Vec<i64>>,
    pub transversal_count: usize,
    /// Transversals through row `k` of column 1: the ones usable for exponent `k`
    /// once exponents are pinned to the first column.
    pub per_exponent: Vec<usize>,
    pub claimed: usize,
    pub matches_total_reading: bool,
    pub matches_per_exponent_reading: bool,
    pub outcome: &'static str,
    pub nodes: u64,
}

pub fn swap_report() -> SwapReport {
    let l = swapped_order6();
    let ts = transversals(&l);
    let mut per_exponent = vec![0usize; l.order()];
    for t in &ts {
        per_exponent[t.rows[0] - 1] += 1;
    }
    let cert = orthogonal_mate(&l);
    let claimed = 32;
    SwapReport {
        square: l.to_rows(),
        transversal_count: ts.len(),
        matches_total_reading: ts.len() == claimed,
        matches_per_exponent_reading: per_exponent.iter().all(|&k| k == claimed),
        per_exponent,
        claimed,
        outcome: cert.outcome_name(),
        nodes: cert.nodes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::directrix::enumerate_directrices;
    use crate::march::simple_march;
    use crate::verify::{compose_numeric, orthogonality_check, verify};

    /// Brute-force oracle: all n! row choices.
    fn brute_transversals(l: &LatinSquare) -> Vec<Vec<usize>> {
        let n = l.order();
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        loop {
            let vals: BTreeSet<i64> = perm
                .iter()
                .enumerate()
                .map(|(c, &r)| l.get(r, c + 1))
                .collect();
            if vals.len() == n {
                out.push(perm.clone());
            }
            if !crate::construction::next_permutation(&mut perm) {
                break;
            }
        }
        out
    }

    #[test]
    fn transversals_match_brute_force() {
        let mut squares: Vec<LatinSquare> = (1..=7).map(|n| simple_march(n).unwrap()).collect();
        squares.push(swapped_order6());
        for l in &squares {
            let got: Vec<Vec<usize>> = transversals(l).into_iter().map(|t| t.rows).collect();
            assert_eq!(got, brute_transversals(l));
            assert_eq!(count_transversals(l), got.len());
        }
    }

    #[test]
    fn cyclic_counts() {
        for n in [3usize, 5, 7] {
            let t = transversals(&simple_march(n).unwrap()).len();
            assert_eq!(t, n * enumerate_directrices(n).len());
        }
        assert_eq!(transversals(&simple_march(3).unwrap()).len(), 3);
        for n in [2, 4, 6, 8] {
            assert!(transversals(&simple_march(n).unwrap()).is_empty());
        }
    }

    #[test]
    fn transversal_values_are_distinct() {
        for t in transversals(&swapped_order6()) {
            let v: BTreeSet<_> = t.values.iter().collect();
            assert_eq!(v.len(), 6);
        }
    }

    #[test]
    fn mates() {
        let c5 = orthogonal_mate(&simple_march(5).unwrap());
        assert!(c5.has_mate());
        let g = c5.mate().unwrap();
        assert!(
            orthogonality_check(&g.base_square(), &g.exponent_square())
                .unwrap()
                .orthogonal
        );
        assert!(verify(&compose_numeric(g), None, false).is_semi_magic);
        for k in 1..=5 {
            assert_eq!(g.get(k, 1).exponent, k);
        }

        let c4 = orthogonal_mate(&simple_march(4).unwrap());
        assert!(!c4.has_mate());
        assert_eq!(c4.transversal_count, 0);

        let c = orthogonal_mate(&swapped_order6());
        assert!(!c.has_mate());
        assert!(c.transversal_count > 0);
    }

    #[test]
    fn certificate_json() {
        let v = orthogonal_mate(&simple_march(3).unwrap()).to_json_value();
        assert_eq!(v["order"], 3);
        assert_eq!(v["outcome"], "mate");
        assert_eq!(v["transversal_count"], 3);
        assert!(v["mate"]["cells"].is_array());
        let v = orthogonal_mate(&simple_march(2).unwrap()).to_json_value();
        assert_eq!(v["outcome"], "exhausted");
        assert!(v["mate"].is_null());
    }

    /// Oracle: naive recursion filling rows with permutations.
    fn naive_reduced_count(n: usize) -> usize {
        fn go(n: usize, grid: &mut Vec<Vec<usize>>, r: usize, c: usize) -> usize {
            if r == n {
                return 1;
            }
            let (nr, nc) = if c + 1 == n { (r + 1, 1) } else { (r, c + 1) };
            let mut k = 0;
            for v in 1..=n {
                if (0..c).any(|j| grid[r][j] == v) || (0..r).any(|i| grid[i][c] == v) {
                    continue;
                }
                grid[r][c] = v;
                k += go(n, grid, nr, nc);
                grid[r][c] = 0;
            }
            k
        }
        let mut grid = vec![vec![0; n]; n];
        for (k, v) in grid[0].iter_mut().enumerate() {
            *v = k + 1;
        }
        for (k, row) in grid.iter_mut().enumerate() {
            row[0] = k + 1;
        }
        if n == 1 {
            return 1;
        }
        go(n, &mut grid, 1, 1)
    }

    #[test]
    fn reduced_counts() {
        for n in 1..=5 {
            let squares: Vec<_> = enumerate_reduced_latin(n).unwrap().collect();
            assert_eq!(squares.len(), naive_reduced_count(n), "n={n}");
            for w in squares.windows(2) {
                assert!(w[0].cells() < w[1].cells());
            }
            for s in &squares {
                assert!(crate::grid::is_latin(s).is_latin);
                assert_eq!(s.reduced(), *s);
            }
        }
        assert_eq!(enumerate_reduced_latin(4).unwrap().count(), 4);
        assert!(matches!(
            enumerate_reduced_latin(7),
            Err(Error::OrderLimit { order: 7, limit: 6 })
        ));
        assert!(enumerate_reduced_latin_limited(7, 7).is_ok());
        assert!(enumerate_reduced_latin(0).is_err());
    }

    #[test]
    fn orbit() {
        let l = simple_march(6).unwrap();
        assert_eq!(rectangle_swap_orbit(&l, 0).len(), 1);
        let one = rectangle_swap_orbit(&l, 1);
        assert!(one.contains(&swapped_order6()));
        assert!(one.iter().all(|s| crate::grid::is_latin(s).is_latin));
        assert_eq!(one.len(), 1 + single_swaps(&l).len());
    }

    #[test]
    fn swapped_square_matches_figure() {
        assert_eq!(
            swapped_order6().to_rows(),
            vec![
                vec![1, 2, 3, 4, 5, 6],
                vec![2, 6, 4, 5, 3, 1],
                vec![3, 4, 5, 6, 1, 2],
                vec![4, 5, 6, 1, 2, 3],
                vec![5, 3, 1, 2, 6, 4],
                vec![6, 1, 2, 3, 4, 5]
            ]
        );
        let r = swap_report();
        assert_eq!(r.outcome, "exhausted");
        assert_eq!(r.per_exponent.iter().sum::<usize>(), r.transversal_count);
    }
}
