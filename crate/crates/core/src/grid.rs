//! Square grids and the Latin / Graeco-Latin wrappers built on them.
//!
//! Every public coordinate is 1-based: `get(1, 1)` is the top-left cell.
//! Storage is row-major.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// An `n x n` grid of copyable cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grid<T> {
    order: usize,
    cells: Vec<T>,
}

/// Numeric square: magic squares, Latin squares, anything read from a grid file.
pub type Square = Grid<i64>;

/// Square of letter indices, `1 <-> a / alpha`, `2 <-> b / beta`, ...
pub type LetterSquare = Grid<usize>;

impl<T: Copy> Grid<T> {
    pub fn new(order: usize, cells: Vec<T>) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        if cells.len() != order * order {
            return Err(Error::CellCount {
                order,
                expected: order * order,
                found: cells.len(),
            });
        }
        Ok(Grid { order, cells })
    }

    /// Builds a grid from rows; the order is the number of rows.
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut cells = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::RaggedRow {
                    row: i + 1,
                    expected: order,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Ok(Grid { order, cells })
    }

    /// Fills a grid from a function of the 1-based `(row, col)`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let mut cells = Vec::with_capacity(order * order);
        for i in 1..=order {
            for j in 1..=order {
                cells.push(f(i, j));
            }
        }
        Ok(Grid { order, cells })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[T] {
        &self.cells
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> T {
        debug_assert!((1..=self.order).contains(&row) && (1..=self.order).contains(&col));
        self.cells[(row - 1) * self.order + (col - 1)]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.cells[(row - 1) * self.order + (col - 1)] = value;
    }

    pub fn row(&self, row: usize) -> &[T] {
        let start = (row - 1) * self.order;
        &self.cells[start..start + self.order]
    }

    pub fn column(&self, col: usize) -> Vec<T> {
        (1..=self.order).map(|i| self.get(i, col)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.cells.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(<[T]>::to_vec).collect()
    }

    /// Top-left to bottom-right diagonal.
    pub fn main_diagonal(&self) -> Vec<T> {
        (1..=self.order).map(|i| self.get(i, i)).collect()
    }

    /// Top-right to bottom-left diagonal.
    pub fn anti_diagonal(&self) -> Vec<T> {
        (1..=self.order)
            .map(|i| self.get(i, self.order + 1 - i))
            .collect()
    }

    pub fn map<U: Copy>(&self, f: impl Fn(T) -> U) -> Grid<U> {
        Grid {
            order: self.order,
            cells: self.cells.iter().map(|&c| f(c)).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.order;
        let mut cells = Vec::with_capacity(n * n);
        for j in 1..=n {
            for i in 1..=n {
                cells.push(self.get(i, j));
            }
        }
        Grid { order: n, cells }
    }

    /// Moves the first `k` columns, in order, to the right-hand end.
    pub fn rotate_columns_left(&self, k: usize) -> Result<Self> {
        if k >= self.order {
            return Err(Error::InvalidShift {
                shift: k,
                order: self.order,
            });
        }
        let mut cells = self.cells.clone();
        for row in cells.chunks_mut(self.order) {
            row.rotate_left(k);
        }
        Ok(Grid {
            order: self.order,
            cells,
        })
    }

    /// New row `i` is old row `perm[i - 1]`; `perm` lists 1-based rows.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order)?;
        let mut cells = Vec::with_capacity(self.cells.len());
        for &r in perm {
            cells.extend_from_slice(self.row(r));
        }
        Ok(Grid {
            order: self.order,
            cells,
        })
    }

    /// New column `j` is old column `perm[j - 1]`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order)?;
        Grid::from_fn(self.order, |i, j| self.get(i, perm[j - 1]))
    }
}

impl<T: fmt::Display + Copy> fmt::Display for Grid<T> {
    /// Space-separated rows, one per line, no trailing newline.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Checks that `perm` is a permutation of `1..=n`.
pub fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n + 1];
    let ok = perm.len() == n
        && perm.iter().all(|&p| {
            if (1..=n).contains(&p) && !seen[p] {
                seen[p] = true;
                true
            } else {
                false
            }
        });
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidPermutation(perm.to_vec(), n))
    }
}

/// First reason a square fails to be Latin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatinViolation {
    /// Cell value outside `1..=n`.
    OutOfRange { row: usize, col: usize, value: i64 },
    /// `value` appears twice in row `row`.
    RowRepeat { row: usize, value: i64 },
    /// `value` appears twice in column `col`.
    ColumnRepeat { col: usize, value: i64 },
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LatinViolation::OutOfRange { row, col, value } => {
                write!(f, "cell ({row}, {col}) holds {value}, outside 1..=n")
            }
            LatinViolation::RowRepeat { row, value } => write!(f, "row {row} repeats {value}"),
            LatinViolation::ColumnRepeat { col, value } => {
                write!(f, "column {col} repeats {value}")
            }
        }
    }
}

/// Outcome of [`is_latin`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatinCheck {
    pub is_latin: bool,
    pub first_violation: Option<LatinViolation>,
}

/// Checks that every row and every column is a permutation of `1..=n`.
///
/// Range is checked first over the whole grid, then rows top to bottom, then
/// columns left to right.
pub fn is_latin(sq: &Square) -> LatinCheck {
    let violation = latin_violation(sq);
    LatinCheck {
        is_latin: violation.is_none(),
        first_violation: violation,
    }
}

fn latin_violation(sq: &Square) -> Option<LatinViolation> {
    let n = sq.order();
    for i in 1..=n {
        for j in 1..=n {
            let v = sq.get(i, j);
            if v < 1 || v > n as i64 {
                return Some(LatinViolation::OutOfRange {
                    row: i,
                    col: j,
                    value: v,
                });
            }
        }
    }
    let mut seen = vec![0usize; n + 1];
    for i in 1..=n {
        for j in 1..=n {
            let v = sq.get(i, j);
            if seen[v as usize] == i {
                return Some(LatinViolation::RowRepeat { row: i, value: v });
            }
            seen[v as usize] = i;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for j in 1..=n {
        for i in 1..=n {
            let v = sq.get(i, j);
            if seen[v as usize] == j {
                return Some(LatinViolation::ColumnRepeat { col: j, value: v });
            }
            seen[v as usize] = j;
        }
    }
    None
}

/// A square whose rows and columns are permutations of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatinSquare(Square);

impl LatinSquare {
    pub fn new(square: Square) -> Result<Self> {
        match latin_violation(&square) {
            None => Ok(LatinSquare(square)),
            Some(v) => Err(Error::NotLatin(v)),
        }
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        LatinSquare::new(Square::from_rows(rows)?)
    }

    pub(crate) fn new_unchecked(square: Square) -> Self {
        debug_assert!(latin_violation(&square).is_none());
        LatinSquare(square)
    }

    pub fn as_square(&self) -> &Square {
        &self.0
    }

    pub fn into_square(self) -> Square {
        self.0
    }

    /// Cell value as a 1-based symbol.
    #[inline]
    pub fn symbol(&self, row: usize, col: usize) -> usize {
        self.0.get(row, col) as usize
    }

    /// Exchanges the values at the four corners of a rectangle.
    ///
    /// The corners must read `a .. b / b .. a`: `(r1, c1)` and `(r2, c2)` hold
    /// the same value, as do `(r1, c2)` and `(r2, c1)`. Applying the same swap
    /// twice gives back the original square.
    pub fn rectangle_swap(&self, r1: usize, c1: usize, r2: usize, c2: usize) -> Result<Self> {
        let n = self.order();
        for (name, v) in [("r1", r1), ("c1", c1), ("r2", r2), ("c2", c2)] {
            if !(1..=n).contains(&v) {
                return Err(Error::RectangleSwap(format!(
                    "{name} = {v} outside 1..={n}"
                )));
            }
        }
        if r1 == r2 || c1 == c2 {
            return Err(Error::RectangleSwap(
                "corners must span two rows and two columns".into(),
            ));
        }
        let a = self.0.get(r1, c1);
        let b = self.0.get(r1, c2);
        if self.0.get(r2, c2) != a || self.0.get(r2, c1) != b {
            return Err(Error::RectangleSwap(format!(
                "corners ({r1},{c1})={a}, ({r1},{c2})={b}, ({r2},{c1})={}, ({r2},{c2})={} \
                 do not form an a..b / b..a pattern",
                self.0.get(r2, c1),
                self.0.get(r2, c2)
            )));
        }
        let mut sq = self.0.clone();
        sq.set(r1, c1, b);
        sq.set(r2, c2, b);
        sq.set(r1, c2, a);
        sq.set(r2, c1, a);
        Ok(LatinSquare(sq))
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        Ok(LatinSquare(self.0.permute_rows(perm)?))
    }

    pub fn permute_columns(&self, perm: &[usize]) -> Result<Self> {
        Ok(LatinSquare(self.0.permute_columns(perm)?))
    }

    /// Renames symbol `v` to `perm[v - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.order())?;
        Ok(LatinSquare(self.0.map(|v| perm[v as usize - 1] as i64)))
    }

    pub fn rotate_columns_left(&self, k: usize) -> Result<Self> {
        Ok(LatinSquare(self.0.rotate_columns_left(k)?))
    }

    /// Relabels symbols and permutes rows so that the first row and first
    /// column read `1..=n` in order. The result has a mate iff `self` does.
    pub fn reduced(&self) -> Self {
        let n = self.order();
        let mut relabel = vec![0usize; n];
        for (j, &v) in self.0.row(1).iter().enumerate() {
            relabel[v as usize - 1] = j + 1;
        }
        let sq = self.0.map(|v| relabel[v as usize - 1] as i64);
        // after relabelling, column 1 holds a permutation; sort rows by it
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&r| sq.get(r, 1));
        LatinSquare(sq.permute_rows(&order).expect("row order is a permutation"))
    }
}

impl Deref for LatinSquare {
    type Target = Square;

    fn deref(&self) -> &Square {
        &self.0
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A cell of a Graeco-Latin square: latin number with its greek exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    pub base: usize,
    pub exponent: usize,
}

impl Pair {
    pub fn new(base: usize, exponent: usize) -> Self {
        Pair { base, exponent }
    }
}

impl serde::Serialize for Pair {
    /// `[base, exponent]`, as in the JSON grid format.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.base, self.exponent].serialize(s)
    }
}

impl fmt::Display for Pair {
    /// The `b.e` token of the graeco text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.base, self.exponent)
    }
}

/// Unvalidated grid of pairs.
pub type PairGrid = Grid<Pair>;

impl PairGrid {
    /// Zips a base grid with an exponent grid of the same order.
    pub fn zip(bases: &Grid<usize>, exponents: &Grid<usize>) -> Result<Self> {
        if bases.order() != exponents.order() {
            return Err(Error::OrderMismatch {
                left: bases.order(),
                right: exponents.order(),
            });
        }
        let cells = bases
            .cells()
            .iter()
            .zip(exponents.cells())
            .map(|(&b, &e)| Pair::new(b, e))
            .collect();
        Grid::new(bases.order(), cells)
    }

    pub fn bases(&self) -> Grid<usize> {
        self.map(|p| p.base)
    }

    pub fn exponents(&self) -> Grid<usize> {
        self.map(|p| p.exponent)
    }
}

/// Which of the three Graeco-Latin conditions hold for a pair grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraecoConditions {
    pub bases_latin: LatinCheck,
    pub exponents_latin: LatinCheck,
    pub pairs_distinct: bool,
}

impl GraecoConditions {
    pub fn of(grid: &PairGrid) -> Self {
        let as_square = |g: Grid<usize>| g.map(|v| v as i64);
        let mut seen = HashSet::with_capacity(grid.cells().len());
        GraecoConditions {
            bases_latin: is_latin(&as_square(grid.bases())),
            exponents_latin: is_latin(&as_square(grid.exponents())),
            pairs_distinct: grid.cells().iter().all(|p| seen.insert(*p)),
        }
    }

    pub fn all(&self) -> bool {
        self.bases_latin.is_latin && self.exponents_latin.is_latin && self.pairs_distinct
    }
}

/// Two superposed orthogonal Latin squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GraecoLatinSquare(PairGrid);

impl GraecoLatinSquare {
    pub fn new(grid: PairGrid) -> Result<Self> {
        let c = GraecoConditions::of(&grid);
        if let Some(v) = c.bases_latin.first_violation {
            return Err(Error::NotGraecoLatin(format!("bases: {v}")));
        }
        if let Some(v) = c.exponents_latin.first_violation {
            return Err(Error::NotGraecoLatin(format!("exponents: {v}")));
        }
        if !c.pairs_distinct {
            return Err(Error::NotGraecoLatin(
                "a (base, exponent) pair repeats".into(),
            ));
        }
        Ok(GraecoLatinSquare(grid))
    }

    pub fn from_rows<R: AsRef<[Pair]>>(rows: &[R]) -> Result<Self> {
        GraecoLatinSquare::new(PairGrid::from_rows(rows)?)
    }

    pub fn from_latin_pair(bases: &LatinSquare, exponents: &LatinSquare) -> Result<Self> {
        let to_usize = |l: &LatinSquare| l.map(|v| v as usize);
        GraecoLatinSquare::new(PairGrid::zip(&to_usize(bases), &to_usize(exponents))?)
    }

    pub(crate) fn new_unchecked(grid: PairGrid) -> Self {
        debug_assert!(GraecoConditions::of(&grid).all());
        GraecoLatinSquare(grid)
    }

    pub fn grid(&self) -> &PairGrid {
        &self.0
    }

    pub fn into_grid(self) -> PairGrid {
        self.0
    }

    pub fn base_square(&self) -> LatinSquare {
        LatinSquare::new_unchecked(self.0.map(|p| p.base as i64))
    }

    pub fn exponent_square(&self) -> LatinSquare {
        LatinSquare::new_unchecked(self.0.map(|p| p.exponent as i64))
    }

    /// Row permutations keep all three conditions.
    pub fn permute_rows(&self, perm: &[usize]) -> Result<Self> {
        Ok(GraecoLatinSquare(self.0.permute_rows(perm)?))
    }
}

impl Deref for GraecoLatinSquare {
    type Target = PairGrid;

    fn deref(&self) -> &PairGrid {
        &self.0
    }
}

impl fmt::Display for GraecoLatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
