//! The two reference tables: both means for five small groups, and `l(D_2p)`
//! for six primes.

use serde_json::{json, Value};

use crate::closed_forms::l_dihedral_2p;
use crate::dsl::parse_spec;
use crate::error::Result;
use crate::exact::Rounding;
use crate::invariants::{InvariantBundle, Mean, MeanValue};

pub const TABLE_ONE_GROUPS: [&str; 5] = ["C2xC2", "Q8", "S3", "A4", "A5"];
pub const TABLE_TWO_PRIMES: [u64; 6] = [3, 5, 7, 11, 13, 173];

/// Rows of labelled cells, with the exact values alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub cells: Vec<String>,
    pub exact: Vec<String>,
}

fn row(label: &str, values: &[MeanValue], digits: u32, rounding: Rounding) -> Result<TableRow> {
    Ok(TableRow {
        label: label.to_string(),
        cells: values
            .iter()
            .map(|v| Ok(v.to_decimal_with(digits, rounding)?.text))
            .collect::<Result<_>>()?,
        exact: values.iter().map(ToString::to_string).collect(),
    })
}

/// `psi''` and `l` of `C2xC2, Q8, S3, A4, A5`.
pub fn table_one(digits: u32, rounding: Rounding) -> Result<Table> {
    let bundles = TABLE_ONE_GROUPS
        .iter()
        .map(|s| Ok(InvariantBundle::of(&parse_spec(s)?.build()?)))
        .collect::<Result<Vec<_>>>()?;
    let rows = Mean::BOTH
        .into_iter()
        .map(|f| {
            let values: Vec<MeanValue> = bundles.iter().map(|b| f.from_bundle(b)).collect();
            row(f.symbol(), &values, digits, rounding)
        })
        .collect::<Result<_>>()?;
    Ok(Table {
        corner: "G".into(),
        columns: TABLE_ONE_GROUPS.iter().map(|s| s.to_string()).collect(),
        rows,
    })
}

/// `l(D_2p)` from the closed form.
pub fn table_two(digits: u32, rounding: Rounding) -> Result<Table> {
    let values = TABLE_TWO_PRIMES
        .iter()
        .map(|&p| Ok(MeanValue::Real(l_dihedral_2p(p)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Table {
        corner: "p".into(),
        columns: TABLE_TWO_PRIMES.iter().map(u64::to_string).collect(),
        rows: vec![row("l(D_2p)", &values, digits, rounding)?],
    })
}

impl Table {
    pub fn row(&self, label: &str) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.label.len())
            .chain([self.corner.len()])
            .max()
            .unwrap_or(0);
        let cell = self
            .rows
            .iter()
            .flat_map(|r| r.cells.iter().map(String::len))
            .chain(self.columns.iter().map(String::len))
            .max()
            .unwrap_or(0);
        let line = |label: &str, cells: &[String]| {
            let mut s = format!("{label:<width$}");
            for c in cells {
                s.push_str(&format!("  {c:>cell$}"));
            }
            s
        };
        let mut out = line(&self.corner, &self.columns);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&line(&r.label, &r.cells));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("{},{}\n", self.corner, self.columns.join(","));
        for r in &self.rows {
            out.push_str(&format!("{},{}\n", r.label, r.cells.join(",")));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| json!({
                "label": r.label,
                "cells": r.cells,
                "exact": r.exact,
            })).collect::<Vec<_>>(),
        })
    }
}
