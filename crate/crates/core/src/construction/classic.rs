//! The worked constructions for orders 3 to 6 and the odd-order staircase.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::{Grid, LetterSquare, Square};
use crate::verify::{verify, VerificationReport};

use super::{
    extract_diagonal_constraints, median_reflection, parse_letter_schema, solve_values,
    LetterSchema, MedianBand, ValueAssignment,
};

fn letter_square(text: &str) -> LetterSquare {
    let rows: Vec<Vec<usize>> = text
        .lines()
        .map(|l| {
            l.split_whitespace()
                .map(|t| (t.as_bytes()[0] - b'a') as usize + 1)
                .collect()
        })
        .collect();
    Grid::from_rows(&rows).expect("fixture letter square is square")
}

/// Latin letters reflected across `band`, with the diagonal conditions of
/// the result attached.
fn reflected_schema(latin: &str, band: MedianBand) -> LetterSchema {
    let latin = letter_square(latin);
    let greek = median_reflection(&latin, band).expect("fixture band is valid");
    with_diagonal_constraints(LetterSchema::new(latin, greek, vec![]).expect("same order"))
}

fn with_diagonal_constraints(mut schema: LetterSchema) -> LetterSchema {
    schema.constraints = extract_diagonal_constraints(&schema);
    schema
}

fn with_line_constraints(mut schema: LetterSchema) -> LetterSchema {
    schema.constraints = schema.line_constraints();
    schema
}

/// Cyclic latin letters with greek letters mirrored across the middle column.
pub fn order3_schema() -> LetterSchema {
    reflected_schema("a b c\nb c a\nc a b", MedianBand::Column(2))
}

/// The four order-3 squares, keyed by which of `a, b` and `alpha, beta`
/// takes the smaller value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Order3Variant {
    /// `a < b`, `alpha < beta`.
    I,
    /// `a > b`, `alpha < beta`.
    II,
    /// `a < b`, `alpha > beta`.
    III,
    /// `a > b`, `alpha > beta`.
    IV,
}

impl Order3Variant {
    pub const ALL: [Order3Variant; 4] = [
        Order3Variant::I,
        Order3Variant::II,
        Order3Variant::III,
        Order3Variant::IV,
    ];

    fn of(values: &ValueAssignment) -> Self {
        let latin_swapped = values.latin_values[0] > values.latin_values[1];
        let greek_swapped = values.greek_values[0] > values.greek_values[1];
        match (latin_swapped, greek_swapped) {
            (false, false) => Order3Variant::I,
            (true, false) => Order3Variant::II,
            (false, true) => Order3Variant::III,
            (true, true) => Order3Variant::IV,
        }
    }
}

impl FromStr for Order3Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(Order3Variant::I),
            "II" => Ok(Order3Variant::II),
            "III" => Ok(Order3Variant::III),
            "IV" => Ok(Order3Variant::IV),
            _ => Err(Error::UnknownIdentifier(s.to_string())),
        }
    }
}

impl fmt::Display for Order3Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Squares I to IV, in that order.
pub fn construct_order3() -> Vec<(Order3Variant, Square)> {
    let schema = order3_schema();
    let mut out: Vec<(Order3Variant, Square)> = solve_values(&schema)
        .iter()
        .map(|v| (Order3Variant::of(v), schema.evaluate(v)))
        .collect();
    out.sort_by_key(|(v, _)| *v);
    out
}

/// Order 4 with every letter on both diagonals (mirror: main diagonal).
pub fn order4_schema() -> LetterSchema {
    reflected_schema(
        "a b c d\nd c b a\nb a d c\nc d a b",
        MedianBand::MainDiagonal,
    )
}

/// [`order4_schema`] with its first column moved to the end.
pub fn order4_diagonal_schema() -> LetterSchema {
    with_diagonal_constraints(
        order4_schema()
            .rotate_columns_left(1)
            .expect("order 4 admits a shift of 1"),
    )
}

/// `a = 0, b = 4, c = 8, d = 12` and `alpha..delta = 1..4`, which satisfy
/// `b + c = a + d` and `alpha + delta = beta + gamma`.
pub fn construct_order4_diagonal() -> Square {
    order4_diagonal_schema().evaluate(&ValueAssignment::natural(4))
}

/// The two paired schemas: rows holding two conjugate latin letters twice.
pub fn order4_paired_schemas() -> (LetterSchema, LetterSchema) {
    let first = {
        let latin = letter_square("a a d d\nd d a a\nb b c c\nc c b b");
        let greek =
            median_reflection(&latin, MedianBand::MainDiagonal).expect("fixture band is valid");
        with_line_constraints(LetterSchema::new(latin, greek, vec![]).expect("same order"))
    };
    let second = with_line_constraints(
        parse_letter_schema("aA dB aD dC\nbD cC bA cB\ndA aB dD aC\ncD bC cA bB")
            .expect("fixture schema parses"),
    );
    (first, second)
}

pub fn construct_order4_paired() -> (Square, Square) {
    let (first, second) = order4_paired_schemas();
    let values = ValueAssignment::natural(4);
    (first.evaluate(&values), second.evaluate(&values))
}

/// Order 5 with the printed diagonal completion and greek letters mirrored
/// across the middle column.
pub fn order5_schema() -> LetterSchema {
    reflected_schema(
        "a b c d e\ne c d a b\nd e b c a\nb d a e c\nc a e b d",
        MedianBand::Column(3),
    )
}

/// [`order5_schema`] with its first column moved to the end.
pub fn order5_diagonal_schema() -> LetterSchema {
    with_diagonal_constraints(
        order5_schema()
            .rotate_columns_left(1)
            .expect("order 5 admits a shift of 1"),
    )
}

/// `d, b, a, c, e` and `alpha, beta, delta, epsilon, gamma` in arithmetic
/// progression.
pub fn order5_diagonal_values() -> ValueAssignment {
    ValueAssignment {
        // a b c d e
        latin_values: vec![10, 5, 15, 0, 20],
        greek_values: vec![1, 2, 5, 3, 4],
    }
}

pub fn construct_order5_diagonal() -> Square {
    order5_diagonal_schema().evaluate(&order5_diagonal_values())
}

/// Cyclic latin letters with `c` down the main diagonal, greek letters
/// mirrored across the middle row.
pub fn order5_cyclic_schema() -> LetterSchema {
    reflected_schema(
        "c d e a b\nb c d e a\na b c d e\ne a b c d\nd e a b c",
        MedianBand::Row(3),
    )
}

/// Natural values; `c = 10` and `gamma = 3` are the middles of their progressions.
pub fn construct_order5_cyclic() -> Square {
    order5_cyclic_schema().evaluate(&ValueAssignment::natural(5))
}

/// Conjugate latin pairs along rows and conjugate greek pairs down columns,
/// with `a + f = b + e = c + d` and the greek analogue.
///
/// The two middle rows share the pairs `(b, beta)` and `(e, epsilon)`, so the
/// pairs are not all distinct and both diagonals fail.
pub fn order6_paired_schema() -> LetterSchema {
    parse_letter_schema(
        "aA aF aB fE fC fD\n\
         fA fF fB aE aC aD\n\
         bA bF bB eE eC eD\n\
         eF eA eE bB bD bC\n\
         cF cA cE dB dD dC\n\
         dF dA dE cB cD cC\n\
         a + f = b + e\n\
         b + e = c + d\n\
         A + F = B + E\n\
         B + E = C + D\n",
    )
    .expect("fixture schema parses")
}

/// Natural values on the order-6 paired schema, with the verification of the
/// result: rows and columns reach 111 but the square is not magic.
pub fn construct_order6_paired() -> (Square, VerificationReport) {
    let schema = order6_paired_schema();
    let values = ValueAssignment::natural(6);
    debug_assert!(schema.constraints.iter().all(|c| values.satisfies(c)));
    let sq = schema.evaluate(&values);
    let report = verify(&sq, None, false);
    (sq, report)
}

/// Odd-order staircase: 1 goes directly below the centre, each next number
/// one step down-right with wraparound, and after every `n` numbers the next
/// one goes two cells below the last.
pub fn staircase(n: usize) -> Result<Square> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    let mut cells = vec![0i64; n * n];
    // 0-based, centre is (n / 2, n / 2)
    let (mut r, mut c) = ((n / 2 + 1) % n, n / 2);
    for v in 1..=(n * n) {
        cells[r * n + c] = v as i64;
        if v % n == 0 {
            r = (r + 2) % n;
        } else {
            r = (r + 1) % n;
            c = (c + 1) % n;
        }
    }
    Square::new(n, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{Alphabet, LinearConstraint};

    fn sq<const N: usize>(rows: [[i64; N]; N]) -> Square {
        Square::from_rows(&rows).unwrap()
    }

    fn schema_greek(text: &str) -> LetterSquare {
        // greek fixtures written with latin names a..e for alpha..epsilon
        letter_square(text)
    }

    #[test]
    fn order3_schema_matches_the_combined_figure() {
        let s = order3_schema();
        assert_eq!(s.greek, schema_greek("c b a\na c b\nb a c"));
        let cs = &s.constraints;
        assert_eq!(cs.len(), 2);
        assert!(cs[0].is_equivalent(&LinearConstraint::new(Alphabet::Latin, vec![-1, -1, 2])));
        assert!(cs[1].is_equivalent(&LinearConstraint::new(Alphabet::Greek, vec![-1, -1, 2])));
    }

    #[test]
    fn order3_squares() {
        let all = construct_order3();
        let want = [
            sq([[2, 9, 4], [7, 5, 3], [6, 1, 8]]),
            sq([[8, 3, 4], [1, 5, 9], [6, 7, 2]]),
            sq([[2, 7, 6], [9, 5, 1], [4, 3, 8]]),
            sq([[8, 1, 6], [3, 5, 7], [4, 9, 2]]),
        ];
        assert_eq!(all.len(), 4);
        for ((variant, got), (want_variant, want)) in
            all.iter().zip(Order3Variant::ALL.iter().zip(want.iter()))
        {
            assert_eq!(variant, want_variant);
            assert_eq!(got, want, "variant {variant}");
        }
    }

    #[test]
    fn order4_reflection_reproduces_the_printed_greek_letters() {
        let s = order4_schema();
        assert_eq!(s.greek, schema_greek("a d b c\nb c a d\nc b d a\nd a c b"));
        assert!(s.constraints.is_empty());
        assert_eq!(solve_values(&s).len(), 576);
    }

    #[test]
    fn rotated_order4_constraints() {
        let s = order4_diagonal_schema();
        assert_eq!(s.latin.row(1), &[2, 3, 4, 1]);
        assert_eq!(s.constraints.len(), 2);
        assert_eq!(s.constraints[0].to_string(), "b + c = a + d");
        assert!(s.constraints[1]
            .is_equivalent(&LinearConstraint::new(Alphabet::Greek, vec![1, -1, -1, 1])));
    }

    #[test]
    fn order4_squares() {
        assert_eq!(
            construct_order4_diagonal(),
            sq([
                [8, 10, 15, 1],
                [11, 5, 4, 14],
                [2, 16, 9, 7],
                [13, 3, 6, 12]
            ])
        );
        let (a, b) = construct_order4_paired();
        assert_eq!(
            a,
            sq([
                [1, 4, 14, 15],
                [13, 16, 2, 3],
                [8, 5, 11, 10],
                [12, 9, 7, 6]
            ])
        );
        assert_eq!(
            b,
            sq([
                [1, 14, 4, 15],
                [8, 11, 5, 10],
                [13, 2, 16, 3],
                [12, 7, 9, 6]
            ])
        );
    }

    #[test]
    fn paired_order4_greek_letters() {
        let (first, _) = order4_paired_schemas();
        assert_eq!(
            first.greek,
            schema_greek("a d b c\na d b c\nd a c b\nd a c b")
        );
        assert!(first.pairs_distinct());
    }

    #[test]
    fn order5_greek_letters_by_reflection() {
        let s = order5_schema();
        assert_eq!(
            s.greek,
            schema_greek("e d c b a\nb a d c e\na c b e d\nc e a d b\nd b e a c")
        );
        assert!(s.constraints.is_empty());
        let c = order5_cyclic_schema();
        assert_eq!(c.greek.row(1), &[4, 5, 1, 2, 3]);
        assert_eq!(c.greek.row(3), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn rotated_order5_constraints() {
        let s = order5_diagonal_schema();
        let want = [
            LinearConstraint::new(Alphabet::Latin, vec![-1, 0, 2, 0, -1]),
            LinearConstraint::new(Alphabet::Latin, vec![2, 0, 0, -1, -1]),
            LinearConstraint::new(Alphabet::Greek, vec![-1, 0, -1, 2, 0]),
            LinearConstraint::new(Alphabet::Greek, vec![0, 0, -1, -1, 2]),
        ];
        assert_eq!(s.constraints.len(), 4);
        for w in &want {
            assert!(s.constraints.iter().any(|c| c.is_equivalent(w)), "{w}");
        }
        assert!(solve_values(&s).contains(&order5_diagonal_values()));
    }

    #[test]
    fn order5_squares() {
        let d = construct_order5_diagonal();
        assert_eq!(d.row(1), &[8, 20, 2, 21, 14]);
        assert_eq!(
            d,
            sq([
                [8, 20, 2, 21, 14],
                [16, 3, 15, 9, 22],
                [25, 7, 19, 13, 1],
                [4, 11, 23, 17, 10],
                [12, 24, 6, 5, 18]
            ])
        );
        assert_eq!(
            construct_order5_cyclic(),
            sq([
                [14, 20, 21, 2, 8],
                [10, 11, 17, 23, 4],
                [1, 7, 13, 19, 25],
                [22, 3, 9, 15, 16],
                [18, 24, 5, 6, 12]
            ])
        );
        assert!(solve_values(&order5_cyclic_schema()).contains(&ValueAssignment::natural(5)));
    }

    #[test]
    fn order6_is_semi_magic_only() {
        let (sq, report) = construct_order6_paired();
        assert!(report.is_semi_magic);
        assert!(!report.is_magic);
        assert!(report.row_sums.iter().all(|&s| s == 111));
        assert!(report.column_sums.iter().all(|&s| s == 111));
        assert!(report.diagonal_sums.iter().all(|&s| s != 111));
        // b + beta = 6 + 2 and e + epsilon = 24 + 5 occur twice
        assert_eq!(report.duplicates, vec![8, 29]);
        assert_eq!(report.missing, vec![11, 26]);
        let repeats: Vec<(&str, i64)> = report
            .diagonal_repeats
            .iter()
            .map(|r| (r.diagonal, r.value))
            .collect();
        assert_eq!(repeats, vec![("main", 8), ("anti", 29)]);
        assert_eq!(sq.order(), 6);
        assert!(!order6_paired_schema().pairs_distinct());
        // the diagonals force b = e, so no assignment makes the schema magic
        assert!(solve_values(&order6_paired_schema()).is_empty());
    }

    #[test]
    fn staircase_figures() {
        assert_eq!(staircase(1).unwrap(), sq([[1]]));
        assert_eq!(staircase(3).unwrap(), sq([[4, 9, 2], [3, 5, 7], [8, 1, 6]]));
        assert_eq!(
            staircase(5).unwrap(),
            sq([
                [11, 24, 7, 20, 3],
                [4, 12, 25, 8, 16],
                [17, 5, 13, 21, 9],
                [10, 18, 1, 14, 22],
                [23, 6, 19, 2, 15]
            ])
        );
        assert!(matches!(staircase(4), Err(Error::EvenOrder(4))));
    }

    #[test]
    fn staircase_is_magic_for_odd_orders() {
        for n in (1..=15).step_by(2) {
            assert!(
                verify(&staircase(n).unwrap(), None, false).is_magic,
                "n = {n}"
            );
        }
    }
}
