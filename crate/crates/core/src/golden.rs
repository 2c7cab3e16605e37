//! Transcribed result tables and the harness that recomputes them.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{construct, Caps, Status};
use crate::fpgrp::{cover, group_order, is_k_transposition, quotient, EnumOptions, FpError, Presentation, RegularGroup};
use crate::shapes::enumerate_shapes;
use crate::shapes::library::standard_action;

pub const TABLE1: &str = include_str!("../data/table1.csv");
pub const TABLE3: &str = include_str!("../data/table3.csv");
pub const TABLE4: &str = include_str!("../data/table4.csv");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub kind: String,
    pub name: String,
    pub order: usize,
    pub four_trans: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub group: String,
    pub axes: String,
    pub shapes: usize,
    pub zero: usize,
    pub nontrivial: usize,
    pub incomplete: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table4Row {
    pub group: String,
    pub axes: String,
    pub shape: String,
    pub dim: String,
    pub m: String,
    pub form: String,
    pub subset: String,
}

impl Table4Row {
    /// False for rows whose construction did not finish.
    pub fn is_known(&self) -> bool {
        self.dim != "?"
    }

    pub fn is_extended(&self) -> bool {
        self.subset == "extended"
    }

    /// Expected dimension; of two listed values the universal one is last.
    pub fn expected_dim(&self) -> Option<usize> {
        self.dim.rsplit(',').next()?.trim().parse().ok()
    }

    pub fn expected_m(&self) -> Option<usize> {
        self.m.rsplit(',').next()?.trim().parse().ok()
    }

    pub fn label(&self) -> String {
        format!("{} {} {}", self.group, self.axes, self.shape)
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>, csv::Error> {
    csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes()).deserialize().collect()
}

pub fn table1() -> Vec<Table1Row> {
    parse(TABLE1).expect("bundled table 1")
}

pub fn table3() -> Vec<Table3Row> {
    parse(TABLE3).expect("bundled table 3")
}

pub fn table4() -> Vec<Table4Row> {
    parse(TABLE4).expect("bundled table 4")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub column: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum Outcome {
    Match,
    Mismatch { cells: Vec<Cell> },
    Inconclusive { reason: String },
    /// nothing to compare against
    Skipped { got: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowReport {
    pub row: String,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Match => write!(f, "match        {}", self.row),
            Outcome::Mismatch { cells } => {
                write!(f, "MISMATCH     {}:", self.row)?;
                for c in cells {
                    write!(f, " {} expected {} got {};", c.column, c.expected, c.got)?;
                }
                Ok(())
            }
            Outcome::Inconclusive { reason } => write!(f, "inconclusive {}: {}", self.row, reason),
            Outcome::Skipped { got } => write!(f, "skipped      {}: {}", self.row, got),
        }
    }
}

/// Summary over many reports, worst first.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub matched: usize,
    pub mismatched: usize,
    pub inconclusive: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn of(reports: &[RowReport]) -> Tally {
        let mut t = Tally::default();
        for r in reports {
            match r.outcome {
                Outcome::Match => t.matched += 1,
                Outcome::Mismatch { .. } => t.mismatched += 1,
                Outcome::Inconclusive { .. } => t.inconclusive += 1,
                Outcome::Skipped { .. } => t.skipped += 1,
            }
        }
        t
    }
}

fn compare(row: String, pairs: &[(&str, String, String)]) -> RowReport {
    let cells: Vec<Cell> = pairs
        .iter()
        .filter(|(_, e, g)| e != g)
        .map(|(c, e, g)| Cell { column: c.to_string(), expected: e.clone(), got: g.clone() })
        .collect();
    let outcome = if cells.is_empty() { Outcome::Match } else { Outcome::Mismatch { cells } };
    RowReport { row, outcome }
}

/// Order and 4-transposition flag of a cover group or named quotient.
pub fn group_values(kind: &str, name: &str, opts: EnumOptions) -> Result<(usize, bool), String> {
    let p = match kind {
        "cover" => cover(name).map(|g| g.presentation()),
        "quotient" => quotient(name).map(|q| q.presentation()),
        _ => None,
    }
    .ok_or_else(|| format!("unknown group {}", name))?;
    group_order_and_flag(&p, opts).map_err(|e| e.to_string())
}

/// Order of the group and whether its three generators are 4-transpositions.
pub fn group_order_and_flag(p: &Presentation, opts: EnumOptions) -> Result<(usize, bool), FpError> {
    let order = group_order(p, opts)?;
    let g = RegularGroup::from_presentation(p, opts)?;
    let reps: Vec<u32> = (0..p.generator_count()).map(|i| g.generator(i)).collect();
    Ok((order, is_k_transposition(&g, &reps, 4)?))
}

/// Order and 4-transposition flag of one Table 1 group.
pub fn reproduce_table1_row(row: &Table1Row, opts: EnumOptions) -> RowReport {
    let label = row.name.clone();
    match group_values(&row.kind, &row.name, opts) {
        Ok((order, flag)) => compare(
            label,
            &[
                ("order", row.order.to_string(), order.to_string()),
                ("4-trans", row.four_trans.clone(), if flag { "y" } else { "n" }.to_string()),
            ],
        ),
        Err(reason) => RowReport { row: label, outcome: Outcome::Inconclusive { reason } },
    }
}

pub fn reproduce_table3_row(row: &Table3Row) -> RowReport {
    let label = format!("{} {}", row.group, row.axes);
    let Some(act) = standard_action(&row.group, &row.axes) else {
        return RowReport { row: label, outcome: Outcome::Inconclusive { reason: "no such action".into() } };
    };
    let list = enumerate_shapes(&act, 4);
    let got = if list.upper_bound { format!("<={}", list.shapes.len()) } else { list.shapes.len().to_string() };
    compare(label, &[("shapes", row.shapes.to_string(), got)])
}

/// Recomputes one Table 4 row. Rows without a known value still run and
/// are reported as skipped with what was found.
pub fn reproduce_table4_row(row: &Table4Row, caps: Caps) -> RowReport {
    let label = row.label();
    let inconclusive = |reason: String| RowReport { row: label.clone(), outcome: Outcome::Inconclusive { reason } };
    let Some(act) = standard_action(&row.group, &row.axes) else {
        return inconclusive("no such action".into());
    };
    let list = enumerate_shapes(&act, 4);
    let Some(shape) = list.shapes.iter().find(|s| s.to_string() == row.shape) else {
        let cells = vec![Cell { column: "shape".into(), expected: row.shape.clone(), got: "not enumerated".into() }];
        return RowReport { row: label, outcome: Outcome::Mismatch { cells } };
    };
    let result = match construct(shape, caps) {
        Ok(r) => r,
        Err(e) => return inconclusive(e.to_string()),
    };
    let (dim, m, form) = match (&result.status, &result.algebra) {
        (Status::Completed, Some(a)) => (
            a.dim().to_string(),
            a.m_closure.map_or("none".to_string(), |m| m.to_string()),
            a.frobenius.flag.to_string(),
        ),
        (Status::Collapsed, _) => ("0".into(), "0".into(), "-".into()),
        (status, _) => {
            let why = format!("{:?}", status);
            if !row.is_known() {
                return RowReport { row: label, outcome: Outcome::Skipped { got: why } };
            }
            return inconclusive(why);
        }
    };
    if !row.is_known() {
        return RowReport { row: label, outcome: Outcome::Skipped { got: format!("dim {} m {} form {}", dim, m, form) } };
    }
    let want_dim = row.expected_dim().map_or(row.dim.clone(), |d| d.to_string());
    let want_m = row.expected_m().map_or(row.m.clone(), |m| m.to_string());
    compare(label, &[("dim", want_dim, dim), ("m", want_m, m), ("form", row.form.clone(), form)])
}

/// Runs the rows in parallel on the current rayon pool, keeping row order.
pub fn reproduce_table4(rows: &[Table4Row], caps: Caps) -> Vec<RowReport> {
    rows.par_iter().map(|r| reproduce_table4_row(r, caps)).collect()
}

pub fn reproduce_table3(rows: &[Table3Row]) -> Vec<RowReport> {
    rows.par_iter().map(reproduce_table3_row).collect()
}

pub fn reproduce_table1(rows: &[Table1Row], opts: EnumOptions) -> Vec<RowReport> {
    rows.par_iter().map(|r| reproduce_table1_row(r, opts)).collect()
}
