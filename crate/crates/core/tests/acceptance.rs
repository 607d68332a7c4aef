//! Acceptance criteria, one line each. Runs as a plain binary so the lines are
//! printed whether or not they pass.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use euler_squares::construction::{
    construct_order3, construct_order4_diagonal, construct_order4_paired, construct_order5_cyclic,
    construct_order5_diagonal, construct_order6_paired, staircase,
};
use euler_squares::directrix::{
    ap_directrices, apply_rule, complete_square, enumerate_directrices, pandiagonal_reorder,
    Directrix, RuleId,
};
use euler_squares::search::{
    enumerate_reduced_latin, orthogonal_mate, swap_report, swapped_order6, transversals,
    verify_no_order6_pair, SweepOptions,
};
use euler_squares::{
    compose_numeric, decode, encode, magic_constant, orthogonality_check, simple_march, verify,
    LatinSquare, Square,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn sq(rows: &[&[i64]]) -> Square {
    Square::from_rows(rows).unwrap()
}

fn d(s: &str) -> Directrix {
    s.parse().unwrap()
}

fn magic_constants() -> Outcome {
    let got: Vec<u64> = (1..=9).map(magic_constant).collect();
    let want = vec![1, 5, 15, 34, 65, 111, 175, 260, 369];
    ensure(got == want, format!("got {got:?}"))?;
    Ok("n=1..9 match".into())
}

fn fixture_fidelity() -> Outcome {
    let order3: Vec<Square> = construct_order3().into_iter().map(|(_, s)| s).collect();
    let want3 = vec![
        sq(&[&[2, 9, 4], &[7, 5, 3], &[6, 1, 8]]),
        sq(&[&[8, 3, 4], &[1, 5, 9], &[6, 7, 2]]),
        sq(&[&[2, 7, 6], &[9, 5, 1], &[4, 3, 8]]),
        sq(&[&[8, 1, 6], &[3, 5, 7], &[4, 9, 2]]),
    ];
    ensure(order3 == want3, "order-3 variants differ")?;
    ensure(
        construct_order4_diagonal()
            == sq(&[
                &[8, 10, 15, 1],
                &[11, 5, 4, 14],
                &[2, 16, 9, 7],
                &[13, 3, 6, 12],
            ]),
        "order-4 diagonal square differs",
    )?;
    let (p20, p21) = construct_order4_paired();
    ensure(
        p20 == sq(&[
            &[1, 4, 14, 15],
            &[13, 16, 2, 3],
            &[8, 5, 11, 10],
            &[12, 9, 7, 6],
        ]),
        "first paired order-4 square differs",
    )?;
    ensure(
        p21 == sq(&[
            &[1, 14, 4, 15],
            &[8, 11, 5, 10],
            &[13, 2, 16, 3],
            &[12, 7, 9, 6],
        ]),
        "second paired order-4 square differs",
    )?;
    ensure(
        construct_order5_diagonal()
            == sq(&[
                &[8, 20, 2, 21, 14],
                &[16, 3, 15, 9, 22],
                &[25, 7, 19, 13, 1],
                &[4, 11, 23, 17, 10],
                &[12, 24, 6, 5, 18],
            ]),
        "order-5 diagonal square differs",
    )?;
    ensure(
        construct_order5_cyclic()
            == sq(&[
                &[14, 20, 21, 2, 8],
                &[10, 11, 17, 23, 4],
                &[1, 7, 13, 19, 25],
                &[22, 3, 9, 15, 16],
                &[18, 24, 5, 6, 12],
            ]),
        "order-5 cyclic square differs",
    )?;
    ensure(
        staircase(5).unwrap()
            == sq(&[
                &[11, 24, 7, 20, 3],
                &[4, 12, 25, 8, 16],
                &[17, 5, 13, 21, 9],
                &[10, 18, 1, 14, 22],
                &[23, 6, 19, 2, 15],
            ]),
        "staircase(5) differs",
    )?;
    Ok("4 + 1 + 2 + 2 + 1 squares cell-for-cell".into())
}

fn verification_fixtures() -> Outcome {
    let seven = sq(&[
        &[38, 14, 32, 1, 26, 44, 20],
        &[5, 23, 48, 17, 42, 11, 29],
        &[21, 39, 8, 33, 2, 27, 45],
        &[30, 6, 24, 49, 18, 36, 12],
        &[46, 15, 40, 9, 34, 3, 28],
        &[13, 31, 7, 25, 43, 19, 37],
        &[22, 47, 16, 41, 10, 35, 4],
    ]);
    let r7 = verify(&seven, None, false);
    ensure(
        r7.is_magic && r7.target == 175,
        "order-7 square not magic at 175",
    )?;
    let six = sq(&[
        &[3, 36, 30, 4, 11, 27],
        &[22, 13, 35, 12, 14, 15],
        &[16, 18, 8, 31, 17, 21],
        &[28, 20, 6, 29, 19, 9],
        &[32, 23, 25, 2, 24, 5],
        &[10, 1, 7, 33, 26, 34],
    ]);
    let r6 = verify(&six, None, false);
    ensure(
        r6.is_magic && r6.target == 111,
        "order-6 square not magic at 111",
    )?;
    let (_, paired) = construct_order6_paired();
    ensure(
        paired.is_semi_magic,
        "paired order-6 square is not semi-magic",
    )?;
    ensure(!paired.is_magic, "paired order-6 square reported magic")?;
    let repeats: Vec<(&str, i64)> = paired
        .diagonal_repeats
        .iter()
        .map(|r| (r.diagonal, r.value))
        .collect();
    ensure(
        repeats == vec![("main", 8), ("anti", 29)],
        format!("diagonal repeats {repeats:?}"),
    )?;
    Ok(format!(
        "175 and 111 magic; paired order 6 semi-magic, repeats {repeats:?}, duplicates {:?}",
        paired.duplicates
    ))
}

fn directrix_counts() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> = (3..=8).map(|n| enumerate_directrices(n).len()).collect();
    ensure(
        counts == vec![1, 0, 3, 0, 19, 0],
        format!("counts n=3..8: {counts:?}"),
    )?;
    let five: Vec<String> = enumerate_directrices(5)
        .iter()
        .map(|d| d.to_string())
        .collect();
    ensure(
        five == ["1 3 5 2 4", "1 4 2 5 3", "1 5 4 3 2"],
        format!("n=5 list {five:?}"),
    )?;
    let nine = enumerate_directrices(9);
    let ap: BTreeSet<Directrix> = nine.iter().filter(|x| is_ap(x)).cloned().collect();
    let want: BTreeSet<Directrix> = [
        "1 3 5 7 9 2 4 6 8",
        "1 6 2 7 3 8 4 9 5",
        "1 9 8 7 6 5 4 3 2",
    ]
    .iter()
    .map(|s| d(s))
    .collect();
    ensure(nine.len() >= 3, "fewer than 3 directrices at n=9")?;
    ensure(ap == want, format!("AP members at n=9: {ap:?}"))?;
    let el = start.elapsed();
    ensure(el < Duration::from_secs(5), format!("took {el:?}"))?;
    Ok(format!(
        "1,0,3,0,19,0; n=9 has {} with 3 AP members ({el:.2?})",
        nine.len()
    ))
}

fn is_ap(x: &Directrix) -> bool {
    let n = x.order();
    let step = (x.term(2) + n - x.term(1)) % n;
    (1..n).all(|t| (x.term(t + 1) + n - x.term(t)) % n == step)
}

fn rule_fixtures() -> Outcome {
    ensure(
        apply_rule(&d("1 4 2 7 6 3 5"), RuleId::I).map_err(|e| e.to_string())?
            == d("1 3 6 2 7 5 4"),
        "rule I example",
    )?;
    let mut applied = 0;
    for n in [3, 5, 7] {
        for x in enumerate_directrices(n) {
            for id in RuleId::TABLE {
                apply_rule(&x, id).map_err(|e| format!("{id} on {x}: {e}"))?;
                applied += 1;
            }
        }
    }
    for n in [3, 5, 7, 9] {
        for x in ap_directrices(n) {
            let y = apply_rule(&x, RuleId::R3).map_err(|e| e.to_string())?;
            ensure(y == x, format!("R3 moves {x} to {y}"))?;
        }
    }
    Ok(format!(
        "rule I example; {applied} table applications valid; R3 fixes AP n<=9"
    ))
}

fn composition() -> Outcome {
    for x in enumerate_directrices(5) {
        let g = complete_square(&x);
        let rep = orthogonality_check(&g.base_square(), &g.exponent_square())
            .map_err(|e| e.to_string())?;
        ensure(
            rep.orthogonal,
            format!("complete square of {x} not orthogonal"),
        )?;
    }
    let g = complete_square(&d("1 5 4 3 2"));
    let r = pandiagonal_reorder(&g, &[1, 3, 5, 2, 4]).map_err(|e| e.to_string())?;
    let v = verify(&compose_numeric(&r), Some(65), true);
    ensure(v.is_pandiagonal, "reordered square is not pandiagonal")?;
    Ok("3 complete squares orthogonal; reordered square pandiagonal at 65".into())
}

fn transversal_consistency() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for n in [3usize, 5, 7] {
        let t = transversals(&simple_march(n).unwrap()).len();
        let dcount = enumerate_directrices(n).len();
        ensure(t == n * dcount, format!("n={n}: {t} != {n}*{dcount}"))?;
        parts.push(t.to_string());
    }
    ensure(parts == ["3", "15", "133"], format!("{parts:?}"))?;
    Ok(format!("{} ({:.2?})", parts.join(", "), start.elapsed()))
}

fn census() -> Outcome {
    let start = Instant::now();
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_reduced_latin(n).unwrap().count())
        .collect();
    ensure(counts == vec![1, 1, 1, 4, 56, 9408], format!("{counts:?}"))?;
    let el = start.elapsed();
    ensure(el < Duration::from_secs(60), format!("took {el:?}"))?;
    Ok(format!("{counts:?} ({el:.2?})"))
}

fn officers() -> Outcome {
    let one = verify_no_order6_pair(&SweepOptions::default(), &|_, _, _| {})
        .map_err(|e| e.to_string())?;
    ensure(
        one.squares_checked == 9408 && one.complete,
        "not all squares checked",
    )?;
    ensure(one.mates_found == 0, format!("{} mates", one.mates_found))?;
    ensure(
        one.runtime_ms < 15 * 60 * 1000,
        "single-thread budget exceeded",
    )?;
    let four = verify_no_order6_pair(
        &SweepOptions {
            jobs: 4,
            ..Default::default()
        },
        &|_, _, _| {},
    )
    .map_err(|e| e.to_string())?;
    ensure(four.runtime_ms < 5 * 60 * 1000, "4-worker budget exceeded")?;
    ensure(
        one.same_results(&four),
        "reports differ between 1 and 4 workers",
    )?;
    Ok(format!(
        "9408 checked, 0 mates; {} ms with 1 worker, {} ms with 4; reports identical",
        one.runtime_ms, four.runtime_ms
    ))
}

fn swap_exploration() -> Outcome {
    let start = Instant::now();
    let want = sq(&[
        &[1, 2, 3, 4, 5, 6],
        &[2, 6, 4, 5, 3, 1],
        &[3, 4, 5, 6, 1, 2],
        &[4, 5, 6, 1, 2, 3],
        &[5, 3, 1, 2, 6, 4],
        &[6, 1, 2, 3, 4, 5],
    ]);
    ensure(
        *swapped_order6().as_square() == want,
        "swapped square differs from figure",
    )?;
    let r = swap_report();
    ensure(r.transversal_count > 0, "no transversals")?;
    ensure(r.outcome == "exhausted", "mate found")?;
    let el = start.elapsed();
    ensure(el < Duration::from_secs(10), format!("took {el:?}"))?;
    Ok(format!(
        "{} transversals, per first-column row {:?}; equals 32 as total: {}, per exponent: {}; mate search exhausted",
        r.transversal_count, r.per_exponent, r.matches_total_reading, r.matches_per_exponent_reading
    ))
}

fn random_latin(rng: &mut ChaCha8Rng, pool: &[LatinSquare]) -> LatinSquare {
    let n = pool[0].order();
    let mut perm = || {
        let mut p: Vec<usize> = (1..=n).collect();
        p.shuffle(rng);
        p
    };
    let (rows, cols, syms) = (perm(), perm(), perm());
    let base = pool.choose(rng).unwrap();
    base.permute_rows(&rows)
        .unwrap()
        .permute_columns(&cols)
        .unwrap()
        .relabel(&syms)
        .unwrap()
}

fn property_suites() -> Outcome {
    let start = Instant::now();
    for n in [2usize, 4, 6, 8] {
        ensure(
            enumerate_directrices(n).is_empty(),
            format!("directrix at n={n}"),
        )?;
        ensure(
            transversals(&simple_march(n).unwrap()).is_empty(),
            format!("transversal at n={n}"),
        )?;
    }
    for n in 1..=12 {
        for b in 1..=n {
            for e in 1..=n {
                let v = encode(b, e, n).map_err(|e| e.to_string())?;
                let p = decode(v, n).map_err(|e| e.to_string())?;
                ensure((p.base, p.exponent) == (b, e), "round trip")?;
            }
        }
    }
    let l = simple_march(6).unwrap();
    let swapped = l.rectangle_swap(2, 2, 5, 5).unwrap();
    ensure(
        swapped.rectangle_swap(2, 2, 5, 5).unwrap() == l,
        "swap is not an involution",
    )?;
    let pool: Vec<LatinSquare> = enumerate_reduced_latin(5).unwrap().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(530);
    let mut with_mate = 0;
    for _ in 0..100 {
        let x = random_latin(&mut rng, &pool);
        let a = orthogonal_mate(&x).has_mate();
        let b = orthogonal_mate(&x.reduced()).has_mate();
        ensure(
            a == b,
            format!("mate existence changed by reduction for\n{x}"),
        )?;
        with_mate += a as usize;
    }
    let el = start.elapsed();
    ensure(el < Duration::from_secs(60), format!("took {el:?}"))?;
    Ok(format!("even n<=8 empty; codec n<=12; swap involution; 100 random order-5 ({with_mate} with mate) ({el:.2?})"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("magic-constant table", magic_constants),
        ("fixture fidelity", fixture_fidelity),
        ("verification fixtures", verification_fixtures),
        ("directrix counts", directrix_counts),
        ("rule fixtures", rule_fixtures),
        ("composition", composition),
        ("transversal/directrix consistency", transversal_consistency),
        ("reduced-square census", census),
        ("order-6 impossibility", officers),
        ("swapped order-6 square", swap_exploration),
        ("property suites", property_suites),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        if !filter.is_empty() && !filter.iter().any(|p| name.contains(p.as_str())) {
            continue;
        }
        match f() {
            Ok(detail) => println!("PASS  {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
