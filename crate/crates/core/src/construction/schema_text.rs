//! Letter-schema text format.
//!
//! ```text
//! aC bB cA
//! bA cC aB
//! cB aA bC
//! 2c = a + b
//! ```
//!
//! Grid lines hold `n` tokens of a lowercase latin letter followed by an
//! uppercase letter standing for the greek one (`A` = alpha, `B` = beta, ..).
//! Lines containing `=` are constraints over a single alphabet.

use crate::error::{Error, Result};
use crate::grid::Grid;

use super::{Alphabet, LetterSchema, LinearConstraint};

pub fn parse_letter_schema(text: &str) -> Result<LetterSchema> {
    let mut latin_rows: Vec<Vec<usize>> = Vec::new();
    let mut greek_rows: Vec<Vec<usize>> = Vec::new();
    let mut constraint_lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let l = raw.trim();
        if l.is_empty() {
            continue;
        }
        if l.contains('=') {
            constraint_lines.push((line, l));
            continue;
        }
        if !constraint_lines.is_empty() {
            return Err(Error::parse(line, "grid line after constraints"));
        }
        let mut lat = Vec::new();
        let mut gre = Vec::new();
        for tok in l.split_whitespace() {
            let b = tok.as_bytes();
            if b.len() != 2 || !b[0].is_ascii_lowercase() || !b[1].is_ascii_uppercase() {
                return Err(Error::parse(
                    line,
                    format!("{tok:?} is not a letter pair like aB"),
                ));
            }
            lat.push((b[0] - b'a') as usize + 1);
            gre.push((b[1] - b'A') as usize + 1);
        }
        latin_rows.push(lat);
        greek_rows.push(gre);
    }
    let n = latin_rows.len();
    if n == 0 {
        return Err(Error::parse(1, "schema has no grid lines"));
    }
    let latin = Grid::from_rows(&latin_rows)?;
    let greek = Grid::from_rows(&greek_rows)?;
    let constraints = constraint_lines
        .into_iter()
        .map(|(line, l)| {
            parse_constraint(l, n).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(line, message),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    LetterSchema::new(latin, greek, constraints)
}

/// Parses one equation such as `2c = a + b` or `B + E = C + D` over `n` letters.
pub fn parse_constraint(text: &str, n: usize) -> Result<LinearConstraint> {
    let (lhs, rhs) = text
        .split_once('=')
        .ok_or_else(|| Error::parse(1, "constraint needs '='"))?;
    if rhs.contains('=') {
        return Err(Error::parse(1, "constraint has more than one '='"));
    }
    let mut coefficients = vec![0i64; n];
    let mut alphabet = None;
    for (side, sign) in [(lhs, 1i64), (rhs, -1i64)] {
        for (coef, letter) in terms(side)? {
            let (a, k) = if letter.is_ascii_lowercase() {
                (Alphabet::Latin, (letter as u8 - b'a') as usize)
            } else if letter.is_ascii_uppercase() {
                (Alphabet::Greek, (letter as u8 - b'A') as usize)
            } else {
                return Err(Error::parse(1, format!("{letter:?} is not a letter")));
            };
            if k >= n {
                return Err(Error::parse(1, format!("letter {letter} beyond order {n}")));
            }
            match alphabet {
                None => alphabet = Some(a),
                Some(prev) if prev != a => {
                    return Err(Error::parse(1, "constraint mixes latin and greek letters"))
                }
                _ => {}
            }
            coefficients[k] += sign * coef;
        }
    }
    let alphabet = alphabet.ok_or_else(|| Error::parse(1, "constraint has no letters"))?;
    Ok(LinearConstraint::new(alphabet, coefficients))
}

/// `[+|-] [int] letter` terms of one side.
fn terms(side: &str) -> Result<Vec<(i64, char)>> {
    let compact: String = side.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut chars = compact.chars().peekable();
    let mut first = true;
    while chars.peek().is_some() {
        let mut sign = 1;
        match chars.peek() {
            Some('+') if !first => {
                chars.next();
            }
            Some('-') => {
                chars.next();
                sign = -1;
            }
            _ if !first => return Err(Error::parse(1, format!("expected + or - in {side:?}"))),
            _ => {}
        }
        let mut digits = String::new();
        while let Some(c) = chars.peek().filter(|c| c.is_ascii_digit()) {
            digits.push(*c);
            chars.next();
        }
        let coef: i64 = if digits.is_empty() {
            1
        } else {
            digits
                .parse()
                .map_err(|_| Error::parse(1, format!("bad coefficient {digits:?}")))?
        };
        let letter = chars
            .next()
            .ok_or_else(|| Error::parse(1, format!("missing letter in {side:?}")))?;
        out.push((sign * coef, letter));
        first = false;
    }
    if out.is_empty() {
        return Err(Error::parse(1, "empty side"));
    }
    Ok(out)
}
