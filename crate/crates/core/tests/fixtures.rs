use euler_squares::construction::{median_reflection, staircase, MedianBand};
use euler_squares::format::parse_pair_grid;
use euler_squares::grid::{GraecoConditions, GraecoLatinSquare, LetterSquare, Pair};
use euler_squares::search::orthogonal_mate;
use euler_squares::{
    analyze_square, compose_numeric, orthogonality_check, verify, LatinSquare, Square,
};

fn sq(text: &str) -> Square {
    euler_squares::format::parse_square(text).unwrap()
}

#[test]
fn title_page_square() {
    let s = sq("38 14 32 1 26 44 20
                5 23 48 17 42 11 29
                21 39 8 33 2 27 45
                30 6 24 49 18 36 12
                46 15 40 9 34 3 28
                13 31 7 25 43 19 37
                22 47 16 41 10 35 4");
    let r = verify(&s, None, false);
    assert!(r.is_magic);
    assert_eq!(r.target, 175);
    assert!(r.values_are_1_to_n2);
}

#[test]
fn thirty_six_cell_square() {
    let s = sq("3 36 30 4 11 27
                22 13 35 12 14 15
                16 18 8 31 17 21
                28 20 6 29 19 9
                32 23 25 2 24 5
                10 1 7 33 26 34");
    let r = verify(&s, None, false);
    assert!(r.is_magic);
    assert_eq!(r.target, 111);
    // magic, but not built from a Graeco-Latin pair
    assert!(analyze_square(&s).unwrap().graeco.is_none());
}

#[test]
fn staircase_five_is_graeco_latin() {
    let a = analyze_square(&staircase(5).unwrap()).unwrap();
    assert!(a.conditions.all());
    assert_eq!(a.graeco.unwrap().get(1, 1), Pair::new(3, 1));
}

#[test]
fn order_seven_complete_square() {
    let g = parse_pair_grid(
        "1.1 2.6 3.4 4.3 5.7 6.5 7.2
         2.2 3.7 1.5 5.4 4.1 7.6 6.3
         3.3 6.1 5.6 7.5 1.2 4.7 2.4
         4.4 5.2 6.7 1.6 7.3 2.1 3.5
         5.5 1.3 7.1 2.7 6.4 3.2 4.6
         6.6 7.4 4.2 3.1 2.5 5.3 1.7
         7.7 4.5 2.3 6.2 3.6 1.4 5.1",
    )
    .unwrap();
    let g = GraecoLatinSquare::new(g).unwrap();
    let base = LatinSquare::from_rows(&[
        [1, 2, 3, 4, 5, 6, 7],
        [2, 3, 1, 5, 4, 7, 6],
        [3, 6, 5, 7, 1, 4, 2],
        [4, 5, 6, 1, 7, 2, 3],
        [5, 1, 7, 2, 6, 3, 4],
        [6, 7, 4, 3, 2, 5, 1],
        [7, 4, 2, 6, 3, 1, 5],
    ])
    .unwrap();
    assert_eq!(g.base_square(), base);
    assert!(verify(&compose_numeric(&g), None, false).is_semi_magic);
    let found = orthogonal_mate(&base);
    assert!(found.has_mate());
    assert!(found.transversal_count >= 7);
}

#[test]
fn order_four_letter_pair() {
    let latin =
        LetterSquare::from_rows(&[[1, 2, 3, 4], [4, 3, 2, 1], [2, 1, 4, 3], [3, 4, 1, 2]]).unwrap();
    let greek =
        LetterSquare::from_rows(&[[1, 4, 2, 3], [2, 3, 1, 4], [3, 2, 4, 1], [4, 1, 3, 2]]).unwrap();
    assert_eq!(
        median_reflection(&latin, MedianBand::MainDiagonal).unwrap(),
        greek
    );
    let as_latin = |g: &LetterSquare| LatinSquare::new(g.map(|v| v as i64)).unwrap();
    let rep = orthogonality_check(&as_latin(&latin), &as_latin(&greek)).unwrap();
    assert!(rep.orthogonal);
    assert!(orthogonal_mate(&as_latin(&latin)).has_mate());
}

#[test]
fn first_order_six_attempt() {
    // a..f and alpha..zeta as 1..6
    let g = parse_pair_grid(
        "1.1 2.6 3.4 4.5 5.3 6.2
         2.2 3.1 6.5 5.4 1.6 4.3
         3.3 4.5 1.2 2.6 6.4 5.1
         4.4 6.3 5.6 3.2 2.1 1.5
         5.5 1.4 2.3 6.1 4.2 3.6
         6.6 5.2 4.1 1.3 3.5 2.4",
    )
    .unwrap();
    let c = GraecoConditions::of(&g);
    assert!(c.bases_latin.is_latin && c.exponents_latin.is_latin && !c.pairs_distinct);
    assert!(GraecoLatinSquare::new(g.clone()).is_err());
    let rep = orthogonality_check(
        &LatinSquare::new(g.bases().map(|v| v as i64)).unwrap(),
        &LatinSquare::new(g.exponents().map(|v| v as i64)).unwrap(),
    )
    .unwrap();
    assert_eq!(rep.duplicated, vec![Pair::new(2, 6), Pair::new(4, 5)]);
    assert_eq!(rep.missing, vec![Pair::new(2, 5), Pair::new(4, 6)]);
}
