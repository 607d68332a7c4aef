//! March-form Latin squares: the cyclic square and its block-wise variants.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::{LatinSquare, Square};

/// `cell(i, j) = ((i + j - 2) mod n) + 1`.
pub fn simple_march(n: usize) -> Result<LatinSquare> {
    let sq = Square::from_fn(n, |i, j| ((i + j - 2) % n + 1) as i64)?;
    Ok(LatinSquare::new_unchecked(sq))
}

/// The four first members of the quadruple march.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadrupleMember {
    I,
    II,
    III,
    IV,
}

impl QuadrupleMember {
    pub const ALL: [QuadrupleMember; 4] = [
        QuadrupleMember::I,
        QuadrupleMember::II,
        QuadrupleMember::III,
        QuadrupleMember::IV,
    ];

    fn block(self) -> [[usize; 4]; 4] {
        match self {
            QuadrupleMember::I => [[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 1, 2], [4, 3, 2, 1]],
            QuadrupleMember::II => [[1, 2, 3, 4], [2, 1, 4, 3], [3, 4, 2, 1], [4, 3, 1, 2]],
            QuadrupleMember::III => [[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]],
            QuadrupleMember::IV => [[1, 2, 3, 4], [2, 4, 1, 3], [3, 1, 4, 2], [4, 3, 2, 1]],
        }
    }
}

impl FromStr for QuadrupleMember {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(QuadrupleMember::I),
            "II" => Ok(QuadrupleMember::II),
            "III" => Ok(QuadrupleMember::III),
            "IV" => Ok(QuadrupleMember::IV),
            _ => Err(Error::UnknownIdentifier(s.to_string())),
        }
    }
}

impl fmt::Display for QuadrupleMember {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QuadrupleMember::I => "I",
            QuadrupleMember::II => "II",
            QuadrupleMember::III => "III",
            QuadrupleMember::IV => "IV",
        };
        f.write_str(s)
    }
}

const DOUBLE: [[usize; 2]; 2] = [[1, 2], [2, 1]];
const TRIPLE: [[usize; 3]; 3] = [[1, 2, 3], [2, 3, 1], [3, 1, 2]];

/// Tiles a `w x w` first member over the square. Block `(I, J)` (0-based) is
/// the member with `w * (I + J)` added to each entry, wrapping into `1..=n`.
fn tile<const W: usize>(n: usize, member: &[[usize; W]; W]) -> Result<LatinSquare> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if !n.is_multiple_of(W) {
        return Err(Error::MarchWidth { order: n, width: W });
    }
    let sq = Square::from_fn(n, |i, j| {
        let (bi, ri) = ((i - 1) / W, (i - 1) % W);
        let (bj, rj) = ((j - 1) / W, (j - 1) % W);
        ((member[ri][rj] - 1 + W * (bi + bj)) % n + 1) as i64
    })?;
    Ok(LatinSquare::new_unchecked(sq))
}

pub fn double_march(n: usize) -> Result<LatinSquare> {
    tile(n, &DOUBLE)
}

pub fn triple_march(n: usize) -> Result<LatinSquare> {
    tile(n, &TRIPLE)
}

pub fn quadruple_march(n: usize, member: QuadrupleMember) -> Result<LatinSquare> {
    tile(n, &member.block())
}

/// Dispatches on the march width `step` in `1..=4`.
pub fn march(n: usize, step: usize, member: Option<QuadrupleMember>) -> Result<LatinSquare> {
    match step {
        1 => simple_march(n),
        2 => double_march(n),
        3 => triple_march(n),
        4 => quadruple_march(n, member.unwrap_or(QuadrupleMember::I)),
        _ => Err(Error::UnknownIdentifier(format!("march step {step}"))),
    }
}
