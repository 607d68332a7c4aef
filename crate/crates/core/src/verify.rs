//! Line-sum verification, orthogonality, and the numeric view of pair grids.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::codec::{magic_constant, ValueCodec};
use crate::error::{Error, Result};
use crate::grid::{GraecoConditions, GraecoLatinSquare, LatinSquare, Pair, PairGrid, Square};

/// Value repeated inside one main diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalRepeat {
    /// `"main"` (top-left to bottom-right) or `"anti"`.
    pub diagonal: &'static str,
    pub value: i64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub order: usize,
    pub target: i64,
    pub row_sums: Vec<i64>,
    pub column_sums: Vec<i64>,
    /// `[main, anti]`.
    pub diagonal_sums: [i64; 2],
    /// Down-right broken diagonals for offsets `1..n`, then up-right ones.
    pub broken_diagonal_sums: Option<Vec<i64>>,
    pub is_semi_magic: bool,
    pub is_magic: bool,
    pub is_pandiagonal: bool,
    pub values_are_1_to_n2: bool,
    /// Values appearing more than once anywhere in the square, ascending.
    pub duplicates: Vec<i64>,
    /// Values of `1..=n^2` that do not appear, ascending.
    pub missing: Vec<i64>,
    pub diagonal_repeats: Vec<DiagonalRepeat>,
}

/// Sums every line of `sq` against `target` (default: the magic constant).
///
/// `is_semi_magic` looks at rows and columns only. `is_magic` also needs both
/// main diagonals and the value set `1..=n^2`. `is_pandiagonal` needs
/// `check_broken` and all `2 (n - 1)` broken diagonals on top of that.
pub fn verify(sq: &Square, target: Option<i64>, check_broken: bool) -> VerificationReport {
    let n = sq.order();
    let target = target.unwrap_or(magic_constant(n as u64) as i64);

    let row_sums: Vec<i64> = sq.rows().map(|r| r.iter().sum()).collect();
    let column_sums: Vec<i64> = (1..=n).map(|j| sq.column(j).iter().sum()).collect();
    let main = sq.main_diagonal();
    let anti = sq.anti_diagonal();
    let diagonal_sums = [main.iter().sum(), anti.iter().sum()];

    let broken_diagonal_sums = check_broken.then(|| {
        let down = (1..n).map(|k| (0..n).map(|i| sq.get(i + 1, (i + k) % n + 1)).sum::<i64>());
        let up = (1..n).map(|k| {
            (0..n)
                .map(|i| sq.get(i + 1, (2 * n - 1 - i + k) % n + 1))
                .sum::<i64>()
        });
        down.chain(up).collect::<Vec<_>>()
    });

    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &v in sq.cells() {
        *counts.entry(v).or_default() += 1;
    }
    let duplicates: Vec<i64> = counts
        .iter()
        .filter(|&(_, &c)| c > 1)
        .map(|(&v, _)| v)
        .collect();
    let n2 = (n * n) as i64;
    let missing: Vec<i64> = (1..=n2).filter(|v| !counts.contains_key(v)).collect();
    let values_are_1_to_n2 = missing.is_empty() && duplicates.is_empty();

    let mut diagonal_repeats = Vec::new();
    for (name, diag) in [("main", &main), ("anti", &anti)] {
        let mut c: BTreeMap<i64, usize> = BTreeMap::new();
        for &v in diag.iter() {
            *c.entry(v).or_default() += 1;
        }
        diagonal_repeats.extend(c.into_iter().filter(|&(_, k)| k > 1).map(|(value, count)| {
            DiagonalRepeat {
                diagonal: name,
                value,
                count,
            }
        }));
    }

    let is_semi_magic =
        row_sums.iter().all(|&s| s == target) && column_sums.iter().all(|&s| s == target);
    let is_magic =
        is_semi_magic && diagonal_sums.iter().all(|&s| s == target) && values_are_1_to_n2;
    let is_pandiagonal = is_magic
        && broken_diagonal_sums
            .as_ref()
            .is_some_and(|b| b.iter().all(|&s| s == target));

    VerificationReport {
        order: n,
        target,
        row_sums,
        column_sums,
        diagonal_sums,
        broken_diagonal_sums,
        is_semi_magic,
        is_magic,
        is_pandiagonal,
        values_are_1_to_n2,
        duplicates,
        missing,
        diagonal_repeats,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthogonalityReport {
    pub orthogonal: bool,
    /// Pairs occurring more than once, sorted.
    pub duplicated: Vec<Pair>,
    /// Pairs never occurring, sorted.
    pub missing: Vec<Pair>,
}

/// Superposes `a` (bases) and `b` (exponents) and looks for repeated pairs.
pub fn orthogonality_check(a: &LatinSquare, b: &LatinSquare) -> Result<OrthogonalityReport> {
    let n = a.order();
    if b.order() != n {
        return Err(Error::OrderMismatch {
            left: n,
            right: b.order(),
        });
    }
    let mut counts = vec![0usize; n * n];
    for (&x, &y) in a.cells().iter().zip(b.cells()) {
        counts[(x as usize - 1) * n + (y as usize - 1)] += 1;
    }
    let pair = |k: usize| Pair::new(k / n + 1, k % n + 1);
    let duplicated: Vec<Pair> = (0..n * n).filter(|&k| counts[k] > 1).map(pair).collect();
    let missing: Vec<Pair> = (0..n * n).filter(|&k| counts[k] == 0).map(pair).collect();
    Ok(OrthogonalityReport {
        orthogonal: missing.is_empty(),
        duplicated,
        missing,
    })
}

/// Numeric square with `cell = (base - 1) * n + exponent`.
pub fn compose_numeric(g: &GraecoLatinSquare) -> Square {
    encode_grid(g.grid()).expect("Graeco-Latin entries lie in 1..=n")
}

/// [`compose_numeric`] for an unvalidated pair grid.
pub fn encode_grid(g: &PairGrid) -> Result<Square> {
    let codec = ValueCodec::new(g.order())?;
    let cells = g
        .cells()
        .iter()
        .map(|&p| codec.encode_pair(p))
        .collect::<Result<Vec<_>>>()?;
    Square::new(g.order(), cells)
}

/// Decoded form of a numeric square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub pairs: PairGrid,
    pub conditions: GraecoConditions,
    /// Present when all three Graeco-Latin conditions hold.
    pub graeco: Option<GraecoLatinSquare>,
}

/// Splits each cell into `(base, exponent)` and tests whether the two
/// component grids form a Graeco-Latin square.
pub fn analyze_square(sq: &Square) -> Result<Analysis> {
    let n = sq.order();
    let n2 = (n * n) as i64;
    let mut seen = vec![false; n * n + 1];
    for &v in sq.cells() {
        if v < 1 || v > n2 || seen[v as usize] {
            return Err(Error::ValueMultiset { max: n2 });
        }
        seen[v as usize] = true;
    }
    let codec = ValueCodec::new(n)?;
    let pairs = sq.map(|v| codec.decode(v).expect("range checked"));
    let conditions = GraecoConditions::of(&pairs);
    let graeco = conditions
        .all()
        .then(|| GraecoLatinSquare::new_unchecked(pairs.clone()));
    Ok(Analysis {
        pairs,
        conditions,
        graeco,
    })
}
