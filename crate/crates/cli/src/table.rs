//! Verdict tables over a parameter grid.

use std::io::{self, Write};

use ptriv_core::classifier::GridBounds;
use ptriv_core::{certify, classify, ClassifyError, SpaceSpec};
use rayon::prelude::*;
use serde::Serialize;

use crate::verify::{grid_specs, Family};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub spec: String,
    pub status: String,
    pub rule: String,
    pub citation: String,
    /// Empty when no certificate exists.
    pub certificate: String,
}

impl TableRow {
    pub fn for_spec(spec: &SpaceSpec) -> Result<TableRow, ClassifyError> {
        let v = classify(spec)?;
        let certificate = certify(spec)?.map(|c| c.kind.as_str().to_string()).unwrap_or_default();
        Ok(TableRow {
            spec: spec.to_string(),
            status: v.status.to_string(),
            rule: v.rule_id.to_string(),
            citation: v.citation,
            certificate,
        })
    }
}

/// Rows in grid order, computed in parallel.
pub fn table_rows(family: Family, bounds: GridBounds) -> Result<Vec<TableRow>, ClassifyError> {
    grid_specs(family, bounds).par_iter().map(TableRow::for_spec).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

pub fn write_table(rows: &[TableRow], format: Format, out: impl Write) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if rows.is_empty() {
                w.write_record(["spec", "status", "rule", "citation", "certificate"])?;
            }
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()
        }
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, rows)?;
            writeln!(out)
        }
    }
}
