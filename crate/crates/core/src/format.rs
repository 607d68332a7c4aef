//! Text and JSON grid formats.
//!
//! * numeric text: `n` lines of `n` space-separated integers;
//! * graeco text: `n` lines of `n` tokens `b.e`;
//! * JSON: `{"order": n, "cells": [[...], ...]}`, with `[b, e]` per cell for
//!   pair grids.
//!
//! Blank lines and lines starting with `#` are ignored; the trailing newline
//! is optional.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid, Pair, PairGrid, Square};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_rows<T: Copy>(
    text: &str,
    mut token: impl FnMut(usize, &str) -> Result<T>,
) -> Result<Grid<T>> {
    let mut rows = Vec::new();
    let mut last_line = 0;
    for (line, l) in content_lines(text) {
        last_line = line;
        let row = l
            .split_whitespace()
            .map(|t| token(line, t))
            .collect::<Result<Vec<T>>>()?;
        rows.push((line, row));
    }
    let order = rows.len();
    if order == 0 {
        return Err(Error::parse(last_line.max(1), "empty grid"));
    }
    for (line, row) in &rows {
        if row.len() != order {
            return Err(Error::parse(
                *line,
                format!("expected {order} entries, found {}", row.len()),
            ));
        }
    }
    let rows: Vec<Vec<T>> = rows.into_iter().map(|(_, r)| r).collect();
    Grid::from_rows(&rows)
}

pub fn parse_square(text: &str) -> Result<Square> {
    parse_rows(text, |line, t| {
        t.parse::<i64>()
            .map_err(|_| Error::parse(line, format!("{t:?} is not an integer")))
    })
}

fn parse_pair_token(line: usize, t: &str) -> Result<Pair> {
    let bad = || Error::parse(line, format!("{t:?} is not a b.e token"));
    let (b, e) = t.split_once('.').ok_or_else(bad)?;
    Ok(Pair::new(
        b.parse().map_err(|_| bad())?,
        e.parse().map_err(|_| bad())?,
    ))
}

pub fn parse_pair_grid(text: &str) -> Result<PairGrid> {
    parse_rows(text, parse_pair_token)
}

/// Numeric text form, with a trailing newline.
pub fn square_to_text(sq: &Square) -> String {
    format!("{sq}\n")
}

/// Graeco text form (`b.e` tokens), with a trailing newline.
pub fn pair_grid_to_text(g: &PairGrid) -> String {
    format!("{g}\n")
}

#[derive(Debug, Serialize, Deserialize)]
struct GridJson<T> {
    order: usize,
    cells: Vec<Vec<T>>,
}

fn from_json<T: Copy + for<'de> Deserialize<'de>>(text: &str) -> Result<Grid<T>> {
    let j: GridJson<T> = serde_json::from_str(text)?;
    if j.cells.len() != j.order {
        return Err(Error::CellCount {
            order: j.order,
            expected: j.order,
            found: j.cells.len(),
        });
    }
    Grid::from_rows(&j.cells)
}

pub fn square_to_json_value(sq: &Square) -> serde_json::Value {
    serde_json::to_value(GridJson {
        order: sq.order(),
        cells: sq.to_rows(),
    })
    .expect("plain integers serialize")
}

pub fn pair_grid_to_json_value(g: &PairGrid) -> serde_json::Value {
    let cells = g
        .rows()
        .map(|r| r.iter().map(|p| [p.base, p.exponent]).collect())
        .collect();
    serde_json::to_value(GridJson::<[usize; 2]> {
        order: g.order(),
        cells,
    })
    .expect("plain integers serialize")
}

pub fn square_to_json(sq: &Square) -> String {
    square_to_json_value(sq).to_string()
}

pub fn pair_grid_to_json(g: &PairGrid) -> String {
    pair_grid_to_json_value(g).to_string()
}

pub fn square_from_json(text: &str) -> Result<Square> {
    from_json(text)
}

pub fn pair_grid_from_json(text: &str) -> Result<PairGrid> {
    let g: Grid<[usize; 2]> = from_json(text)?;
    Ok(g.map(|[b, e]| Pair::new(b, e)))
}

/// Accepts either the numeric text format or JSON (detected by a leading `{`).
pub fn parse_square_any(text: &str) -> Result<Square> {
    if text.trim_start().starts_with('{') {
        square_from_json(text)
    } else {
        parse_square(text)
    }
}

/// Accepts either the graeco text format or JSON.
pub fn parse_pair_grid_any(text: &str) -> Result<PairGrid> {
    if text.trim_start().starts_with('{') {
        pair_grid_from_json(text)
    } else {
        parse_pair_grid(text)
    }
}

/// One line of space-separated integers, as used for directrices and row orders.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::parse(1, format!("{t:?} is not a positive integer")))
        })
        .collect()
}
