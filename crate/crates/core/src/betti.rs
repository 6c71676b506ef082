//! Graded Betti tables of section rings of polarized fourfolds: the
//! K-polynomial, expected diagrams, duality and alternating-sum checks,
//! rendering, and three reference diagrams.
//!
//! `b_{i,j}` sits in column `i` (homological degree) and row `j`, so it
//! contributes `(-1)^i b_{i,j}` to the K-polynomial coefficient `c_{i+j}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::arith::binom;
use crate::error::{Error, Result};
use crate::hilbert::{embedding_dimension, h0_power};
use crate::json::{big_to_json, json_to_big};
use crate::report::{CheckResult, ValidationReport};

pub const DIM_X: i64 = 4;
const MAX_ROW: usize = 6;
const DUALITY_ROUNDS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellStatus {
    Known(BigInt),
    Unknown,
    NonzeroLowerBound,
}

impl CellStatus {
    pub fn known(&self) -> Option<&BigInt> {
        match self {
            CellStatus::Known(v) => Some(v),
            _ => None,
        }
    }

    fn token(&self) -> String {
        match self {
            CellStatus::Known(v) if v.is_zero() => ".".into(),
            CellStatus::Known(v) => v.to_string(),
            CellStatus::Unknown => "?".into(),
            CellStatus::NonzeroLowerBound => "*".into(),
        }
    }

    fn status_name(&self) -> &'static str {
        match self {
            CellStatus::Known(_) => "known",
            CellStatus::Unknown => "unknown",
            CellStatus::NonzeroLowerBound => "nonzero",
        }
    }
}

/// Sparse Betti table; cells not stored are `Known(0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: i64,
    cells: BTreeMap<(usize, usize), CellStatus>,
}

impl BettiTable {
    /// Empty table for a fourfold in `P^n`.
    pub fn new(n: i64) -> Result<Self> {
        if n < DIM_X {
            return Err(Error::InvalidInput(format!(
                "ambient dimension {n} is below 4"
            )));
        }
        Ok(BettiTable {
            n,
            cells: BTreeMap::new(),
        })
    }

    pub fn for_square(d: i64) -> Result<Self> {
        Self::new(embedding_dimension(d)?)
    }

    pub fn dim_x(&self) -> i64 {
        DIM_X
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn codim(&self) -> i64 {
        self.n - DIM_X
    }

    pub fn get(&self, i: usize, j: usize) -> CellStatus {
        self.cells
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| CellStatus::Known(BigInt::zero()))
    }

    /// `b_{i,j}` when known; negative indices read as zero.
    pub fn known(&self, i: i64, j: i64) -> Option<BigInt> {
        if i < 0 || j < 0 {
            return Some(BigInt::zero());
        }
        self.get(i as usize, j as usize).known().cloned()
    }

    pub fn set(&mut self, i: usize, j: usize, status: CellStatus) -> Result<()> {
        match &status {
            CellStatus::Known(v) if v.is_negative() => {
                return Err(Error::InvalidInput(format!(
                    "b_{{{i},{j}}} = {v} is negative"
                )));
            }
            CellStatus::Known(v) if v.is_zero() => {
                self.cells.remove(&(i, j));
            }
            _ => {
                self.cells.insert((i, j), status);
            }
        }
        Ok(())
    }

    pub fn set_value(&mut self, i: usize, j: usize, v: impl Into<BigInt>) -> Result<()> {
        self.set(i, j, CellStatus::Known(v.into()))
    }

    /// Stored (non-zero or non-known) cells in `(i, j)` order.
    pub fn cells(&self) -> impl Iterator<Item = (&(usize, usize), &CellStatus)> {
        self.cells.iter()
    }

    pub fn max_column(&self) -> usize {
        self.cells.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn max_row(&self) -> usize {
        self.cells.keys().map(|&(_, j)| j).max().unwrap_or(0)
    }

    fn column_bound(&self) -> usize {
        self.max_column().max(self.codim().max(0) as usize)
    }

    fn row_bound(&self) -> usize {
        self.max_row().max(DIM_X as usize + 1)
    }

    /// Last antidiagonal that can hold a stored cell.
    fn last_antidiagonal(&self) -> usize {
        let cols = self.max_column().max(self.n as usize + 1);
        cols + self.row_bound()
    }

    /// Sum of all stored Known values in column `i`.
    pub fn column_total(&self, i: usize) -> BigInt {
        self.cells
            .iter()
            .filter(|((c, _), _)| *c == i)
            .filter_map(|(_, s)| s.known().cloned())
            .sum()
    }

    /// Cells `(i, k - i)` on antidiagonal `k` with row at most the row bound.
    fn antidiagonal(&self, k: usize) -> Vec<(usize, usize)> {
        (0..=self.row_bound().min(k)).map(|j| (k - j, j)).collect()
    }
}

/// Numerator of the Hilbert series of the section ring over `P^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPolynomial {
    pub d: i64,
    pub n: i64,
    pub coefficients: Vec<BigInt>,
}

impl KPolynomial {
    /// `c_k`, zero past the top coefficient.
    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }
}

fn alternating_sum(n: i64, d: i64, k: i64) -> BigInt {
    (0..=k)
        .map(|j| {
            let term = binom(n + 1, j) * h0_power(d, k - j);
            if j % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

pub fn k_polynomial(d: i64) -> Result<KPolynomial> {
    let n = embedding_dimension(d)?;
    let coefficients: Vec<BigInt> = (0..=n + 1).map(|k| alternating_sum(n, d, k)).collect();
    for k in n + 2..=n + 6 {
        let tail = alternating_sum(n, d, k);
        if !tail.is_zero() {
            return Err(Error::Inconsistent(format!(
                "K-polynomial coefficient c_{k} = {tail}, expected 0"
            )));
        }
    }
    Ok(KPolynomial { d, n, coefficients })
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// One greedy pass over the middle rows, starting from the pinned cells.
fn greedy_pass(kp: &KPolynomial, pinned: &BTreeMap<(usize, usize), BigInt>) -> Result<BettiTable> {
    let mut table = BettiTable::new(kp.n)?;
    for (&(i, j), v) in pinned {
        table.set_value(i, j, v.clone())?;
    }
    let top = kp.n as usize + 1;
    let mut cursor = 1usize;
    for k in 1..=top {
        let placed: BigInt = pinned
            .iter()
            .filter(|((i, j), _)| i + j == k)
            .map(|(&(i, _), v)| v * sign(i))
            .sum();
        let r = kp.coefficient(k) - placed;
        if r.is_zero() {
            continue;
        }
        let want_odd = r.is_negative();
        let slot = (cursor..=3)
            .filter(|&j| j <= k && k - j <= top)
            .find(|&j| ((k - j) % 2 == 1) == want_odd);
        match slot {
            Some(j) => {
                table.set_value(k - j, j, r.abs())?;
                cursor = j;
            }
            None => {
                for j in 1..=3usize.min(k) {
                    if k - j <= top {
                        table.set(k - j, j, CellStatus::Unknown)?;
                    }
                }
            }
        }
    }
    Ok(table)
}

/// Expected Betti table of a fourfold of square `2d`: a single strand per
/// antidiagonal in the middle rows, with the bottom rows forced by duality.
pub fn expected_betti(d: i64) -> Result<BettiTable> {
    let kp = k_polynomial(d)?;
    let codim = kp.n - DIM_X;
    let base: BTreeMap<(usize, usize), BigInt> = [
        ((0, 0), BigInt::one()),
        ((codim as usize, 5), BigInt::one()),
    ]
    .into_iter()
    .collect();
    let mut pinned = base.clone();
    for _ in 0..DUALITY_ROUNDS {
        let table = greedy_pass(&kp, &pinned)?;
        let mut next = base.clone();
        for (&(i, j), status) in table.cells() {
            if j == 1 && (i as i64) <= codim {
                if let Some(v) = status.known() {
                    next.insert((codim as usize - i, 4), v.clone());
                }
            }
        }
        if next == pinned {
            return Ok(table);
        }
        pinned = next;
    }
    Err(Error::NonConvergence(DUALITY_ROUNDS))
}

/// Alternating sums on fully known antidiagonals, duality on rows `j >= 4`,
/// and nonnegativity.
pub fn validate_table(t: &BettiTable, d: i64) -> Result<ValidationReport> {
    let kp = k_polynomial(d)?;
    if kp.n != t.n() {
        return Err(Error::InvalidInput(format!(
            "table lives in P^{} but square {} embeds in P^{}",
            t.n(),
            2 * d,
            kp.n
        )));
    }
    let mut report = ValidationReport::default();

    for k in 0..=t.last_antidiagonal() {
        let cells = t.antidiagonal(k);
        let values: Option<Vec<BigInt>> = cells
            .iter()
            .map(|&(i, j)| t.known(i as i64, j as i64).map(|v| v * sign(i)))
            .collect();
        let Some(values) = values else { continue };
        let sum: BigInt = values.into_iter().sum();
        let want = kp.coefficient(k);
        report.checks.push(CheckResult {
            name: format!("antidiagonal k={k}"),
            pass: sum == want,
            detail: format!("sum = {sum}, c_{k} = {want}"),
            cells: cells
                .into_iter()
                .filter(|&(i, j)| !t.get(i, j).eq(&CellStatus::Known(BigInt::zero())))
                .collect(),
        });
    }

    let codim = t.codim();
    let mut bad = Vec::new();
    let mut compared = 0usize;
    for j in 4..=t.row_bound() {
        for i in 0..=t.column_bound().max(t.n as usize + 1) {
            let (pi, pj) = (codim - i as i64, 5 - j as i64);
            let (Some(a), Some(b)) = (t.known(i as i64, j as i64), t.known(pi, pj)) else {
                continue;
            };
            compared += 1;
            if a != b {
                bad.push((i, j));
            }
        }
    }
    report.checks.push(CheckResult {
        name: "duality".into(),
        pass: bad.is_empty(),
        detail: format!("{compared} cells compared against b_{{codim-i,5-j}}"),
        cells: bad,
    });

    let negative: Vec<(usize, usize)> = t
        .cells()
        .filter(|(_, s)| s.known().is_some_and(|v| v.is_negative()))
        .map(|(&c, _)| c)
        .collect();
    report.checks.push(CheckResult {
        name: "nonnegativity".into(),
        pass: negative.is_empty(),
        detail: "all known entries are nonnegative".into(),
        cells: negative,
    });
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    S2G7,
    DefG7,
    S2G8Partial,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [Fixture::S2G7, Fixture::DefG7, Fixture::S2G8Partial];

    pub fn name(&self) -> &'static str {
        match self {
            Fixture::S2G7 => "S2_G7",
            Fixture::DefG7 => "DEF_G7",
            Fixture::S2G8Partial => "S2_G8_PARTIAL",
        }
    }

    /// Half the square of the polarization.
    pub fn square_half(&self) -> i64 {
        match self {
            Fixture::S2G7 | Fixture::DefG7 => 2,
            Fixture::S2G8Partial => 3,
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::UnknownFixture(name.to_string()))
    }
}

fn table_from_rows(n: i64, rows: &[&str]) -> BettiTable {
    let mut t = BettiTable::new(n).expect("fixture dimension");
    for (j, row) in rows.iter().enumerate() {
        for (i, tok) in row.split_whitespace().enumerate() {
            let status = match tok {
                "." => continue,
                "*" => CellStatus::NonzeroLowerBound,
                "?" => CellStatus::Unknown,
                v => CellStatus::Known(v.parse().expect("fixture entry")),
            };
            t.set(i, j, status).expect("fixture entry");
        }
    }
    t
}

pub fn paper_fixture(name: &str) -> Result<BettiTable> {
    Ok(fixture_table(Fixture::parse(name)?))
}

pub fn fixture_table(f: Fixture) -> BettiTable {
    match f {
        Fixture::S2G7 => table_from_rows(
            9,
            &[
                "1 . .   .   .   .  .  .",
                ". 1 .   .   .   .  .  .",
                "1 10 .  .   .   .  .  .",
                ". 20 126 190 130 46 10 1",
                ". . .   .   1   .  .  .",
                ". . .   .   .   1  .  .",
            ],
        ),
        Fixture::DefG7 => table_from_rows(
            9,
            &[
                "1 . .   .   .   .  .  .",
                ". . .   .   .   .  .  .",
                ". 10 .  .   .   .  .  .",
                ". 20 126 190 130 45 10 1",
                ". . .   .   .   .  .  .",
                ". . .   .   .   1  .  .",
            ],
        ),
        Fixture::S2G8Partial => table_from_rows(
            14,
            &[
                "1 .  .   .  . . . .  .  .  .  .  .  .",
                ". 15 35  21 . . . .  .  .  .  .  .  .",
                ". 55 336 *  * * ? ?  ?  ?  ?  ?  ?  ? ? ?",
                ". .  ?   ?  * * * *  *  *  *  *  *  ? ? ?",
                ". .  .   .  . . . 21 35 15 .  .  .  .",
                ". .  .   .  . . . .  .  .  1  .  .  .",
            ],
        ),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    PaperText,
    Json,
    Csv,
}

const CORNER: &str = "b_{i,j}";

pub fn render_table(t: &BettiTable, format: TableFormat) -> String {
    match format {
        TableFormat::PaperText => render_text(t),
        TableFormat::Json => serde_json::to_string(&table_to_json(t)).expect("json serialization"),
        TableFormat::Csv => {
            let mut out = String::from("i,j,status,value\n");
            for (&(i, j), s) in t.cells() {
                let value = s.known().map(|v| v.to_string()).unwrap_or_default();
                let _ = writeln!(out, "{i},{j},{},{value}", s.status_name());
            }
            out
        }
    }
}

fn render_text(t: &BettiTable) -> String {
    let cols = t.column_bound();
    let rows = t.row_bound().min(MAX_ROW);
    let grid: Vec<Vec<String>> = (0..=rows)
        .map(|j| (0..=cols).map(|i| t.get(i, j).token()).collect())
        .collect();
    let widths: Vec<usize> = (0..=cols)
        .map(|i| {
            grid.iter()
                .map(|r| r[i].len())
                .chain([i.to_string().len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let line = |label: String, cells: Vec<String>| {
        let mut s = format!("{label:<w$} |", w = CORNER.len());
        for (c, w) in cells.iter().zip(&widths) {
            let _ = write!(s, " {c:>w$}");
        }
        s
    };
    let mut out = line(CORNER.into(), (0..=cols).map(|i| i.to_string()).collect());
    out.push('\n');
    out.push_str(&"-".repeat(out.len() - 1));
    out.push('\n');
    for (j, row) in grid.into_iter().enumerate() {
        out.push_str(&line(j.to_string(), row));
        out.push('\n');
    }
    out
}

pub fn table_to_json(t: &BettiTable) -> Value {
    let cells: Vec<Value> = t
        .cells()
        .map(|(&(i, j), s)| {
            json!({
                "i": i,
                "j": j,
                "status": s.status_name(),
                "value": s.known().map(big_to_json).unwrap_or(Value::Null),
            })
        })
        .collect();
    json!({ "dim": DIM_X, "n": t.n(), "codim": t.codim(), "cells": cells })
}

pub fn table_from_json(v: &Value) -> Result<BettiTable> {
    let bad = |what: &str| Error::InvalidInput(format!("malformed Betti table json: {what}"));
    if v.get("dim").and_then(Value::as_i64) != Some(DIM_X) {
        return Err(bad("dim must be 4"));
    }
    let n = v.get("n").and_then(Value::as_i64).ok_or_else(|| bad("n"))?;
    let mut t = BettiTable::new(n)?;
    if v.get("codim").and_then(Value::as_i64) != Some(t.codim()) {
        return Err(bad("codim does not match n"));
    }
    let cells = v
        .get("cells")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("cells"))?;
    for c in cells {
        let idx = |key: &str| {
            c.get(key)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(|| bad(key))
        };
        let status = match c.get("status").and_then(Value::as_str) {
            Some("known") => {
                CellStatus::Known(json_to_big(c.get("value").ok_or_else(|| bad("value"))?)?)
            }
            Some("unknown") => CellStatus::Unknown,
            Some("nonzero") => CellStatus::NonzeroLowerBound,
            _ => return Err(bad("status")),
        };
        t.set(idx("i")?, idx("j")?, status)?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn k_polynomial_genus7() {
        let kp = k_polynomial(2).unwrap();
        assert_eq!(
            kp.coefficients,
            ints(&[1, 0, 0, -10, -20, 126, -190, 130, -45, 10, -2])
        );
    }

    #[test]
    fn k_polynomial_genus8() {
        let kp = k_polynomial(3).unwrap();
        assert_eq!(kp.coefficient(0), 1.into());
        assert_eq!(kp.coefficient(2), (-15).into());
        assert_eq!(kp.coefficient(3), (-20).into());
        assert_eq!(kp.coefficient(4), 315.into());
        assert_eq!(kp.coefficients.len(), 16);
    }

    #[test]
    fn expected_genus7_is_the_general_diagram() {
        assert_eq!(expected_betti(2).unwrap(), fixture_table(Fixture::DefG7));
    }

    #[test]
    fn expected_genus8_head() {
        let t = expected_betti(3).unwrap();
        for (i, j, v) in [(1, 1, 15), (1, 2, 20), (2, 2, 315), (9, 4, 15), (10, 5, 1)] {
            assert_eq!(t.get(i, j), CellStatus::Known(v.into()), "b_{{{i},{j}}}");
        }
    }

    #[test]
    fn expected_tables_validate() {
        for d in 1..=6 {
            let t = expected_betti(d).unwrap();
            let r = validate_table(&t, d).unwrap();
            assert!(
                r.passed(),
                "d = {d}: {:?}",
                r.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn fixtures_validate() {
        for f in Fixture::ALL {
            let r = validate_table(&fixture_table(f), f.square_half()).unwrap();
            assert!(
                r.passed(),
                "{}: {:?}",
                f.name(),
                r.failures().collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn genus8_partial_checks_c4() {
        let r = validate_table(&fixture_table(Fixture::S2G8Partial), 3).unwrap();
        let c4 = r
            .checks
            .iter()
            .find(|c| c.name == "antidiagonal k=4")
            .unwrap();
        assert!(c4.pass);
        assert!(c4.detail.contains("315"));
    }

    #[test]
    fn perturbation_is_caught() {
        let mut t = fixture_table(Fixture::S2G7);
        t.set_value(1, 2, 11).unwrap();
        let r = validate_table(&t, 2).unwrap();
        let failed: Vec<_> = r.failures().map(|c| c.name.clone()).collect();
        assert_eq!(failed, vec!["antidiagonal k=3".to_string()]);
    }

    #[test]
    fn module_generators() {
        let t = fixture_table(Fixture::S2G7);
        assert_eq!(t.get(0, 2), CellStatus::Known(1.into()));
        assert_eq!(t.column_total(0), 2.into());
    }

    #[test]
    fn unknown_fixture() {
        assert_eq!(
            paper_fixture("S2_G9"),
            Err(Error::UnknownFixture("S2_G9".into()))
        );
        assert!(paper_fixture("def_g7").is_ok());
    }

    #[test]
    fn text_layout() {
        let text = render_table(&fixture_table(Fixture::DefG7), TableFormat::PaperText);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 8);
        let row3: Vec<&str> = lines[5].split_whitespace().collect();
        assert_eq!(
            row3,
            ["3", "|", ".", "20", "126", "190", "130", "45", "10", "1"]
        );
        let header: Vec<&str> = lines[0].split_whitespace().collect();
        assert_eq!(header[0], "b_{i,j}");
        assert_eq!(header.len(), 10);
    }

    #[test]
    fn partial_text_layout() {
        let text = render_table(&fixture_table(Fixture::S2G8Partial), TableFormat::PaperText);
        let row2 = text.lines().nth(4).unwrap();
        let tokens: Vec<&str> = row2.split_whitespace().collect();
        assert_eq!(&tokens[..6], ["2", "|", ".", "55", "336", "*"]);
        assert!(tokens.contains(&"?"));
    }

    #[test]
    fn json_round_trip() {
        for f in Fixture::ALL {
            let t = fixture_table(f);
            let text = render_table(&t, TableFormat::Json);
            let back = table_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, t);
        }
        let empty = BettiTable::new(9).unwrap();
        let text = render_table(&empty, TableFormat::Json);
        assert!(text.starts_with("{\"dim\":4,"));
        assert!(text.ends_with("\"cells\":[]}"));
    }

    #[test]
    fn negative_entries_rejected() {
        let mut t = BettiTable::new(9).unwrap();
        assert!(t.set_value(1, 1, -1).is_err());
        t.set_value(1, 1, 3).unwrap();
        t.set_value(1, 1, 0).unwrap();
        assert_eq!(t.cells().count(), 0);
    }

    #[test]
    fn csv_lists_stored_cells() {
        let csv = render_table(&fixture_table(Fixture::DefG7), TableFormat::Csv);
        assert!(csv.starts_with("i,j,status,value\n"));
        assert!(csv.contains("\n5,3,known,45\n"));
        assert_eq!(csv.lines().count(), 1 + 10);
    }
}
