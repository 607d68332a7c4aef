//! Letter-schema constructions of magic squares.
//!
//! A schema places a latin letter and a greek letter in every cell. Latin
//! letters take the values `0, n, 2n, ..`, greek letters `1, 2, .., n`, and
//! each cell holds the sum of its two letters. Line sums become linear
//! conditions on the letter values, one alphabet at a time.

mod classic;
mod schema_text;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{Grid, LetterSquare, Pair, PairGrid, Square};

pub use classic::{
    construct_order3, construct_order4_diagonal, construct_order4_paired, construct_order5_cyclic,
    construct_order5_diagonal, construct_order6_paired, order3_schema, order4_diagonal_schema,
    order4_paired_schemas, order4_schema, order5_cyclic_schema, order5_diagonal_schema,
    order5_diagonal_values, order5_schema, order6_paired_schema, staircase, Order3Variant,
};
pub use schema_text::{parse_constraint, parse_letter_schema};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Alphabet {
    Latin,
    Greek,
}

/// ASCII name of letter `index` (1-based): `a, b, ..` or `A, B, ..` for greek.
pub fn letter_name(alphabet: Alphabet, index: usize) -> char {
    let base = match alphabet {
        Alphabet::Latin => b'a',
        Alphabet::Greek => b'A',
    };
    (base + (index - 1) as u8) as char
}

/// `sum_k coefficients[k] * value(letter k + 1) = 0` over one alphabet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearConstraint {
    pub alphabet: Alphabet,
    pub coefficients: Vec<i64>,
}

impl LinearConstraint {
    pub fn new(alphabet: Alphabet, coefficients: Vec<i64>) -> Self {
        LinearConstraint {
            alphabet,
            coefficients,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.coefficients.iter().all(|&c| c == 0)
    }

    /// Divides out the gcd and makes the first nonzero coefficient positive,
    /// so that equivalent equations compare equal.
    pub fn normalized(&self) -> Self {
        let g = self.coefficients.iter().fold(0i64, |g, &c| gcd(g, c.abs()));
        if g == 0 {
            return self.clone();
        }
        let sign = self
            .coefficients
            .iter()
            .find(|&&c| c != 0)
            .map_or(1, |c| c.signum());
        LinearConstraint {
            alphabet: self.alphabet,
            coefficients: self.coefficients.iter().map(|c| c * sign / g).collect(),
        }
    }

    pub fn is_equivalent(&self, other: &LinearConstraint) -> bool {
        self.alphabet == other.alphabet && self.normalized() == other.normalized()
    }

    pub fn is_satisfied(&self, values: &[i64]) -> bool {
        self.coefficients
            .iter()
            .zip(values)
            .map(|(c, v)| c * v)
            .sum::<i64>()
            == 0
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for LinearConstraint {
    /// Positive terms on the left, negative on the right: `2c = a + b`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |positive: bool| {
            let terms: Vec<String> = self
                .coefficients
                .iter()
                .enumerate()
                .filter(|&(_, &c)| if positive { c > 0 } else { c < 0 })
                .map(|(k, &c)| {
                    let name = letter_name(self.alphabet, k + 1);
                    match c.abs() {
                        1 => name.to_string(),
                        m => format!("{m}{name}"),
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ")
            }
        };
        write!(f, "{} = {}", side(true), side(false))
    }
}

/// A latin letter square and a greek letter square of the same order, with
/// extra linear conditions on the letter values.
///
/// Letters need not form Latin squares, and the `(latin, greek)` pairs need
/// not be distinct; [`LetterSchema::pairs_distinct`] reports the latter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterSchema {
    pub latin: LetterSquare,
    pub greek: LetterSquare,
    pub constraints: Vec<LinearConstraint>,
}

impl LetterSchema {
    pub fn new(
        latin: LetterSquare,
        greek: LetterSquare,
        constraints: Vec<LinearConstraint>,
    ) -> Result<Self> {
        let n = latin.order();
        if greek.order() != n {
            return Err(Error::OrderMismatch {
                left: n,
                right: greek.order(),
            });
        }
        for &v in latin.cells().iter().chain(greek.cells()) {
            if !(1..=n).contains(&v) {
                return Err(Error::ValueOutOfRange {
                    value: v as i64,
                    min: 1,
                    max: n as i64,
                });
            }
        }
        for c in &constraints {
            if c.coefficients.len() != n {
                return Err(Error::CellCount {
                    order: n,
                    expected: n,
                    found: c.coefficients.len(),
                });
            }
        }
        Ok(LetterSchema {
            latin,
            greek,
            constraints,
        })
    }

    pub fn order(&self) -> usize {
        self.latin.order()
    }

    pub fn pair_grid(&self) -> PairGrid {
        PairGrid::zip(&self.latin, &self.greek).expect("orders checked on construction")
    }

    pub fn pairs_distinct(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.pair_grid().cells().iter().all(|p| seen.insert(*p))
    }

    /// Moves the first `k` columns of both letter squares to the right end.
    /// Extra constraints are kept; diagonal conditions must be re-extracted.
    pub fn rotate_columns_left(&self, k: usize) -> Result<Self> {
        Ok(LetterSchema {
            latin: self.latin.rotate_columns_left(k)?,
            greek: self.greek.rotate_columns_left(k)?,
            constraints: self.constraints.clone(),
        })
    }

    /// Cell-wise letter sums under `values`.
    pub fn evaluate(&self, values: &ValueAssignment) -> Square {
        let n = self.order();
        Grid::from_fn(n, |i, j| {
            values.latin_values[self.latin.get(i, j) - 1]
                + values.greek_values[self.greek.get(i, j) - 1]
        })
        .expect("order >= 1")
    }

    /// Conditions for every line: rows, columns and both main diagonals.
    pub fn line_constraints(&self) -> Vec<LinearConstraint> {
        let n = self.order();
        let mut lines: Vec<Vec<(usize, usize)>> = Vec::with_capacity(2 * n + 2);
        for i in 1..=n {
            lines.push((1..=n).map(|j| (i, j)).collect());
            lines.push((1..=n).map(|j| (j, i)).collect());
        }
        lines.push((1..=n).map(|i| (i, i)).collect());
        lines.push((1..=n).map(|i| (i, n + 1 - i)).collect());
        collect_constraints(self, &lines)
    }

    /// Schema constraints together with all line conditions, deduplicated.
    pub fn all_constraints(&self) -> Vec<LinearConstraint> {
        let mut out: Vec<LinearConstraint> = Vec::new();
        for c in self
            .constraints
            .iter()
            .cloned()
            .chain(self.line_constraints())
        {
            push_unique(&mut out, c);
        }
        out
    }
}

fn push_unique(out: &mut Vec<LinearConstraint>, c: LinearConstraint) {
    if !c.is_trivial() && !out.iter().any(|o| o.is_equivalent(&c)) {
        out.push(c);
    }
}

/// For each line and alphabet: `sum over line - sum over alphabet = 0`.
fn collect_constraints(
    schema: &LetterSchema,
    lines: &[Vec<(usize, usize)>],
) -> Vec<LinearConstraint> {
    let n = schema.order();
    let mut out = Vec::new();
    for (alphabet, letters) in [
        (Alphabet::Latin, &schema.latin),
        (Alphabet::Greek, &schema.greek),
    ] {
        for line in lines {
            let mut coefficients = vec![-1i64; n];
            for &(i, j) in line {
                coefficients[letters.get(i, j) - 1] += 1;
            }
            push_unique(&mut out, LinearConstraint::new(alphabet, coefficients));
        }
    }
    out
}

/// Value conditions imposed by the two main diagonals.
///
/// A diagonal holding every letter of an alphabet once imposes nothing. Any
/// other diagonal gives `diagonal letter sum = full alphabet sum`. Latin
/// conditions come first, then greek; equivalent equations appear once.
pub fn extract_diagonal_constraints(schema: &LetterSchema) -> Vec<LinearConstraint> {
    let n = schema.order();
    let lines = [
        (1..=n).map(|i| (i, i)).collect::<Vec<_>>(),
        (1..=n).map(|i| (i, n + 1 - i)).collect(),
    ];
    collect_constraints(schema, &lines)
}

/// Letter values: index `k - 1` holds the value of letter `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ValueAssignment {
    pub latin_values: Vec<i64>,
    pub greek_values: Vec<i64>,
}

impl ValueAssignment {
    /// `a = 0, b = n, ..` and `alpha = 1, beta = 2, ..`.
    pub fn natural(n: usize) -> Self {
        ValueAssignment {
            latin_values: (0..n as i64).map(|k| k * n as i64).collect(),
            greek_values: (1..=n as i64).collect(),
        }
    }

    pub fn satisfies(&self, constraint: &LinearConstraint) -> bool {
        match constraint.alphabet {
            Alphabet::Latin => constraint.is_satisfied(&self.latin_values),
            Alphabet::Greek => constraint.is_satisfied(&self.greek_values),
        }
    }

    /// Both maps are bijections onto `{0, n, ..}` and `{1, .., n}`.
    pub fn is_bijective(&self, n: usize) -> bool {
        let mut l = self.latin_values.clone();
        let mut g = self.greek_values.clone();
        l.sort_unstable();
        g.sort_unstable();
        l == ValueAssignment::natural(n).latin_values
            && g == ValueAssignment::natural(n).greek_values
    }
}

/// In-place lexicographic successor; false once the last permutation is reached.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn satisfying_permutations(
    mut values: Vec<i64>,
    constraints: &[&LinearConstraint],
) -> Vec<Vec<i64>> {
    values.sort_unstable();
    let mut out = Vec::new();
    loop {
        if constraints.iter().all(|c| c.is_satisfied(&values)) {
            out.push(values.clone());
        }
        if !next_permutation(&mut values) {
            break;
        }
    }
    out
}

/// Every value assignment under which the schema evaluates to a square with
/// equal row, column and diagonal sums.
///
/// The schema's own constraints and all line conditions are applied. Both
/// alphabets are enumerated exhaustively (`n!` each) and the result is sorted
/// by `(latin values, greek values)`. An empty list means no assignment works.
pub fn solve_values(schema: &LetterSchema) -> Vec<ValueAssignment> {
    let n = schema.order();
    let all = schema.all_constraints();
    let of = |a: Alphabet| all.iter().filter(|c| c.alphabet == a).collect::<Vec<_>>();
    let natural = ValueAssignment::natural(n);
    let latin = satisfying_permutations(natural.latin_values, &of(Alphabet::Latin));
    let greek = satisfying_permutations(natural.greek_values, &of(Alphabet::Greek));
    let mut out = Vec::with_capacity(latin.len() * greek.len());
    for l in &latin {
        for g in &greek {
            out.push(ValueAssignment {
                latin_values: l.clone(),
                greek_values: g.clone(),
            });
        }
    }
    out
}

/// A line of the square used as a mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MedianBand {
    /// 1-based row; must be the middle row of an odd square.
    Row(usize),
    /// 1-based column; must be the middle column of an odd square.
    Column(usize),
    /// Top-left to bottom-right.
    MainDiagonal,
    /// Top-right to bottom-left.
    AntiDiagonal,
}

impl MedianBand {
    fn mirror(self, n: usize, i: usize, j: usize) -> (usize, usize) {
        match self {
            MedianBand::Row(r) => (2 * r - i, j),
            MedianBand::Column(c) => (i, 2 * c - j),
            MedianBand::MainDiagonal => (j, i),
            MedianBand::AntiDiagonal => (n + 1 - j, n + 1 - i),
        }
    }

    fn check_position(self, n: usize) -> Result<()> {
        match self {
            MedianBand::Row(k) | MedianBand::Column(k) if 2 * k != n + 1 => {
                Err(Error::BandInvariant {
                    band: self.to_string(),
                    row: k,
                    col: k,
                })
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for MedianBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MedianBand::Row(r) => write!(f, "row {r}"),
            MedianBand::Column(c) => write!(f, "column {c}"),
            MedianBand::MainDiagonal => write!(f, "main diagonal"),
            MedianBand::AntiDiagonal => write!(f, "anti diagonal"),
        }
    }
}

/// Greek letters by reflection of the latin letters across a median band.
///
/// On the band each cell gets the greek letter of the same name as its latin
/// letter; off the band it gets the name of the latin letter in the mirrored
/// cell. Mirrored cells must carry different latin letters, and the result
/// must pair every latin letter with every greek letter exactly once.
pub fn median_reflection(latin: &LetterSquare, band: MedianBand) -> Result<LetterSquare> {
    let n = latin.order();
    band.check_position(n)?;
    let mut greek = latin.clone();
    for i in 1..=n {
        for j in 1..=n {
            let (mi, mj) = band.mirror(n, i, j);
            if (mi, mj) != (i, j) && latin.get(mi, mj) == latin.get(i, j) {
                return Err(Error::BandInvariant {
                    band: band.to_string(),
                    row: i,
                    col: j,
                });
            }
            greek.set(i, j, latin.get(mi, mj));
        }
    }
    let pairs = PairGrid::zip(latin, &greek)?;
    let distinct: BTreeSet<Pair> = pairs.cells().iter().copied().collect();
    if distinct.len() != n * n {
        return Err(Error::IncompletePairing);
    }
    Ok(greek)
}
