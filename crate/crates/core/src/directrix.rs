//! Directrices of the cyclic (simple-march) Latin square.
//!
//! A directrix `x₁ … xₙ` places one exponent in every column: `xₜ` is the base
//! picked in column `t`. In the simple-march square base `x` sits in column `t`
//! on row `x − t + 1 (mod n)`, so a directrix is a normalized transversal
//! (`x₁ = 1`), or equivalently a complete mapping of the cyclic group.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::parse_index_list;
use crate::grid::{check_permutation, GraecoLatinSquare, Grid, LatinSquare, Pair, PairGrid};
use crate::march::simple_march;
use crate::par;

/// Reduces any integer into `1..=n`.
fn wrap(v: i64, n: usize) -> usize {
    (v - 1).rem_euclid(n as i64) as usize + 1
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Directrix {
    order: usize,
    terms: Vec<usize>,
}

impl Directrix {
    pub fn new(terms: Vec<usize>) -> Result<Self> {
        let n = terms.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        if terms[0] != 1 {
            return Err(Error::InvalidDirectrix(format!(
                "first term is {}, expected 1",
                terms[0]
            )));
        }
        if check_permutation(&terms, n).is_err() {
            return Err(Error::InvalidDirectrix(format!(
                "terms {terms:?} are not a permutation of 1..{n}"
            )));
        }
        let mut offsets = vec![false; n];
        for (t, &x) in terms.iter().enumerate() {
            let off = (x as i64 - (t as i64 + 1)).rem_euclid(n as i64) as usize;
            if std::mem::replace(&mut offsets[off], true) {
                return Err(Error::InvalidDirectrix(format!(
                    "terms {terms:?} revisit row offset {off}"
                )));
            }
        }
        Ok(Self { order: n, terms })
    }

    /// Checks the three invariants without building a value.
    pub fn is_valid(terms: &[usize]) -> bool {
        Self::new(terms.to_vec()).is_ok()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    /// Term at 1-based position `t`.
    pub fn term(&self, t: usize) -> usize {
        self.terms[t - 1]
    }

    /// Row of the simple-march square holding base `xₜ` in column `t`.
    pub fn rows(&self) -> Vec<usize> {
        let n = self.order as i64;
        self.terms
            .iter()
            .enumerate()
            .map(|(t, &x)| wrap(x as i64 - t as i64, n as usize))
            .collect()
    }
}

impl fmt::Display for Directrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Directrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Directrix::new(parse_index_list(s)?)
    }
}

/// `c + ct·t + cx·x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Affine {
    pub c: i64,
    pub t: i64,
    pub x: i64,
}

const fn aff(c: i64, t: i64, x: i64) -> Affine {
    Affine { c, t, x }
}

impl Affine {
    pub fn eval(&self, t: usize, x: usize) -> i64 {
        self.c + self.t * t as i64 + self.x * x as i64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
    R3,
}

impl RuleId {
    pub const TABLE: [RuleId; 11] = [
        RuleId::I,
        RuleId::II,
        RuleId::III,
        RuleId::IV,
        RuleId::V,
        RuleId::VI,
        RuleId::VII,
        RuleId::VIII,
        RuleId::IX,
        RuleId::X,
        RuleId::XI,
    ];

    pub const ALL: [RuleId; 12] = [
        RuleId::I,
        RuleId::II,
        RuleId::III,
        RuleId::IV,
        RuleId::V,
        RuleId::VI,
        RuleId::VII,
        RuleId::VIII,
        RuleId::IX,
        RuleId::X,
        RuleId::XI,
        RuleId::R3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::I => "I",
            RuleId::II => "II",
            RuleId::III => "III",
            RuleId::IV => "IV",
            RuleId::V => "V",
            RuleId::VI => "VI",
            RuleId::VII => "VII",
            RuleId::VIII => "VIII",
            RuleId::IX => "IX",
            RuleId::X => "X",
            RuleId::XI => "XI",
            RuleId::R3 => "R3",
        }
    }

    pub fn rule(self) -> TransformRule {
        RULES[self as usize]
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownIdentifier(format!("rule {s:?}")))
    }
}

/// Position `T` receives term `X`, both affine in `(t, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformRule {
    pub id: RuleId,
    pub index: Affine,
    pub term: Affine,
    pub odd_only: bool,
}

const fn rule(id: RuleId, index: Affine, term: Affine) -> TransformRule {
    TransformRule {
        id,
        index,
        term,
        odd_only: false,
    }
}

const T: Affine = aff(0, 1, 0);
const X: Affine = aff(0, 0, 1);
const ONE_T_MINUS_X: Affine = aff(1, 1, -1);
const ONE_X_MINUS_T: Affine = aff(1, -1, 1);
const TWO_MINUS_X: Affine = aff(2, 0, -1);
const TWO_MINUS_T: Affine = aff(2, -1, 0);

pub const RULES: [TransformRule; 12] = [
    rule(RuleId::I, X, T),
    rule(RuleId::II, T, ONE_T_MINUS_X),
    rule(RuleId::III, ONE_T_MINUS_X, T),
    rule(RuleId::IV, X, ONE_X_MINUS_T),
    rule(RuleId::V, ONE_X_MINUS_T, X),
    rule(RuleId::VI, ONE_T_MINUS_X, TWO_MINUS_X),
    rule(RuleId::VII, TWO_MINUS_X, ONE_T_MINUS_X),
    rule(RuleId::VIII, ONE_X_MINUS_T, TWO_MINUS_T),
    rule(RuleId::IX, TWO_MINUS_T, ONE_X_MINUS_T),
    rule(RuleId::X, TWO_MINUS_X, TWO_MINUS_T),
    rule(RuleId::XI, TWO_MINUS_T, TWO_MINUS_X),
    TransformRule {
        id: RuleId::R3,
        index: aff(-1, 2, 0),
        term: aff(-1, 0, 2),
        odd_only: true,
    },
];

pub fn apply_rule(d: &Directrix, id: RuleId) -> Result<Directrix> {
    let r = id.rule();
    let n = d.order;
    if r.odd_only && n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    let mut out = vec![0usize; n];
    for (i, &x) in d.terms.iter().enumerate() {
        let t = i + 1;
        let pos = wrap(r.index.eval(t, x), n);
        if out[pos - 1] != 0 {
            return Err(Error::InvalidDirectrix(format!(
                "rule {id} sends two positions to {pos}"
            )));
        }
        out[pos - 1] = wrap(r.term.eval(t, x), n);
    }
    Directrix::new(out)
}

/// Smallest set holding `d` and closed under rules I..XI, plus R3 for odd orders.
pub fn closure(d: &Directrix) -> BTreeSet<Directrix> {
    let rules: &[RuleId] = if d.order % 2 == 1 {
        &RuleId::ALL
    } else {
        &RuleId::TABLE
    };
    let mut seen = BTreeSet::from([d.clone()]);
    let mut frontier = vec![d.clone()];
    while let Some(cur) = frontier.pop() {
        for &id in rules {
            if let Ok(next) = apply_rule(&cur, id) {
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
    }
    seen
}

/// `1, 3 − x₂, 4 − x₃, …`: rule II under its own name.
pub fn counter_directrix(d: &Directrix) -> Directrix {
    apply_rule(d, RuleId::II).expect("rule II preserves directrices")
}

/// All normalized directrices of order `n`, sorted.
pub fn enumerate_directrices(n: usize) -> Vec<Directrix> {
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![Directrix {
            order: 1,
            terms: vec![1],
        }];
    }
    // Split on the second term; each branch is independent.
    let seconds: Vec<usize> = (1..=n).collect();
    let chunks = par::map_ordered(&seconds, |&x2| {
        let mut terms = vec![0usize; n];
        let mut used_base = vec![false; n + 1];
        let mut used_off = vec![false; n];
        terms[0] = 1;
        used_base[1] = true;
        used_off[0] = true;
        let mut out = Vec::new();
        let off2 = (x2 + n - 2) % n;
        if !used_base[x2] && !used_off[off2] {
            terms[1] = x2;
            used_base[x2] = true;
            used_off[off2] = true;
            extend(n, 2, &mut terms, &mut used_base, &mut used_off, &mut out);
        }
        out
    });
    chunks.into_iter().flatten().collect()
}

fn extend(
    n: usize,
    col: usize,
    terms: &mut [usize],
    used_base: &mut [bool],
    used_off: &mut [bool],
    out: &mut Vec<Directrix>,
) {
    if col == n {
        out.push(Directrix {
            order: n,
            terms: terms.to_vec(),
        });
        return;
    }
    for x in 1..=n {
        let off = (x + n - 1 - col % n) % n;
        if used_base[x] || used_off[off] {
            continue;
        }
        used_base[x] = true;
        used_off[off] = true;
        terms[col] = x;
        extend(n, col + 1, terms, used_base, used_off, out);
        used_base[x] = false;
        used_off[off] = false;
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Arithmetic-progression directrices `xₜ = 1 + (t − 1)·d`.
pub fn ap_directrices(n: usize) -> Vec<Directrix> {
    if n < 3 {
        return Vec::new();
    }
    (2..n)
        .filter(|&d| gcd(d, n) == 1 && gcd(d - 1, n) == 1)
        .map(|d| Directrix {
            order: n,
            terms: (0..n).map(|t| 1 + (t * d) % n).collect(),
        })
        .collect()
}

/// Row `k` is the directrix with `k − 1` added to every term.
pub fn directrix_square(d: &Directrix) -> LatinSquare {
    let n = d.order;
    let sq =
        Grid::from_fn(n, |i, j| wrap((d.term(j) + i - 1) as i64, n) as i64).expect("nonzero order");
    LatinSquare::new_unchecked(sq)
}

/// Simple-march bases with exponents `d_j + i − 1`.
pub fn complete_square(d: &Directrix) -> GraecoLatinSquare {
    let n = d.order;
    let bases = simple_march(n).expect("nonzero order");
    let exps = directrix_square(d);
    let grid = PairGrid::from_fn(n, |i, j| {
        Pair::new(bases.get(i, j) as usize, exps.get(i, j) as usize)
    })
    .expect("nonzero order");
    GraecoLatinSquare::new_unchecked(grid)
}

pub fn pandiagonal_reorder(
    g: &GraecoLatinSquare,
    row_order: &[usize],
) -> Result<GraecoLatinSquare> {
    g.permute_rows(row_order)
}

/// Base found in each column on the cell carrying `exponent`.
pub fn exponent_directrix(g: &GraecoLatinSquare, exponent: usize) -> Vec<usize> {
    let n = g.order();
    (1..=n)
        .filter_map(|j| {
            (1..=n)
                .map(|i| g.get(i, j))
                .find(|p| p.exponent == exponent)
                .map(|p| p.base)
        })
        .collect()
}
