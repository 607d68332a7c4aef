//! The `(b - 1) * n + e` split of every cell value into a latin and a greek part.

use crate::error::{Error, Result};
use crate::grid::Pair;

/// Common line sum of a magic square of order `n`: `n (1 + n^2) / 2`.
pub fn magic_constant(n: u64) -> u64 {
    // one of n and 1 + n^2 is even
    n * (1 + n * n) / 2
}

/// Maps `(base, exponent)` in `1..=n` squared onto `1..=n^2`.
///
/// The latin part of base `b` is `(b - 1) * n` (so it starts at 0), the greek
/// part of exponent `e` is `e` itself (so it starts at 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValueCodec {
    order: usize,
}

impl ValueCodec {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(ValueCodec { order })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn latin_value(&self, base: usize) -> i64 {
        ((base - 1) * self.order) as i64
    }

    pub fn greek_value(&self, exponent: usize) -> i64 {
        exponent as i64
    }

    pub fn encode(&self, base: usize, exponent: usize) -> Result<i64> {
        let n = self.order;
        for v in [base, exponent] {
            if !(1..=n).contains(&v) {
                return Err(Error::ValueOutOfRange {
                    value: v as i64,
                    min: 1,
                    max: n as i64,
                });
            }
        }
        Ok(self.latin_value(base) + self.greek_value(exponent))
    }

    pub fn encode_pair(&self, pair: Pair) -> Result<i64> {
        self.encode(pair.base, pair.exponent)
    }

    pub fn decode(&self, value: i64) -> Result<Pair> {
        let n = self.order as i64;
        if value < 1 || value > n * n {
            return Err(Error::ValueOutOfRange {
                value,
                min: 1,
                max: n * n,
            });
        }
        // exponent runs 1..=n, never 0
        let m = (value - 1) / n;
        let e = value - m * n;
        Ok(Pair::new(m as usize + 1, e as usize))
    }
}

pub fn encode(base: usize, exponent: usize, n: usize) -> Result<i64> {
    ValueCodec::new(n)?.encode(base, exponent)
}

pub fn decode(value: i64, n: usize) -> Result<Pair> {
    ValueCodec::new(n)?.decode(value)
}
