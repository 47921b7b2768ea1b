//! Report envelopes and output plumbing.
//!
//! Identical configs must produce byte-identical reports: JSON is emitted
//! with fixed field order (struct order and `BTreeMap`s only), CSV rows are
//! pre-sorted by the caller, and every machine format embeds the tool
//! version and the digest of the exact tables swept.

use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

pub const TOOL: &str = "powmap";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Provenance stamped onto every report.
pub struct Meta {
    /// [`powmap::explorer::Catalog::hash`] for catalog sweeps, or the
    /// single-group digest for one-group commands.
    pub catalog_hash: String,
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    catalog_hash: &'a str,
    #[serde(flatten)]
    body: &'a T,
}

pub fn to_json<T: Serialize>(meta: &Meta, body: &T) -> Result<String> {
    let envelope = Envelope {
        tool: TOOL,
        version: VERSION,
        catalog_hash: &meta.catalog_hash,
        body,
    };
    let mut text = serde_json::to_string_pretty(&envelope).context("serializing report")?;
    text.push('\n');
    Ok(text)
}

/// One comment line of provenance ahead of the CSV rows.
pub fn csv_header(meta: &Meta) -> String {
    format!("# {TOOL} {VERSION} catalog {}\n", meta.catalog_hash)
}

/// Serialize rows into a CSV body (header line from the row type itself).
pub fn to_csv<R: Serialize>(meta: &Meta, rows: &[R]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).context("serializing CSV row")?;
    }
    let body = writer.into_inner().context("finishing CSV")?;
    let mut out = csv_header(meta).into_bytes();
    out.extend_from_slice(&body);
    Ok(String::from_utf8(out).expect("CSV output is UTF-8"))
}

/// Header line for human-readable tables.
pub fn table_header(meta: &Meta) -> String {
    format!("{TOOL} {VERSION}  catalog {}\n", &meta.catalog_hash[..12.min(meta.catalog_hash.len())])
}

/// Write the report to `--out` or stdout.
pub fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing report to {}", path.display())),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes()).context("writing report to stdout")
        }
    }
}
