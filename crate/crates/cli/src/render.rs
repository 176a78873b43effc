use clap::ValueEnum;

use crate::error::Result;
use crate::record::{ReportRecord, FIELDS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[value(name = "md", alias = "markdown")]
    Markdown,
    Csv,
    Json,
}

pub fn table(records: &[ReportRecord], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Markdown => Ok(markdown(records)),
        OutputFormat::Csv => csv(records),
        OutputFormat::Json => Ok(serde_json::to_string_pretty(records)? + "\n"),
    }
}

/// A single record: a field/value table in markdown, a one-row table in
/// csv, a bare object in json.
pub fn single(record: &ReportRecord, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Markdown => {
            let mut out = String::from("| field | value |\n|---|---|\n");
            for (field, value) in FIELDS.iter().zip(record.values()) {
                out += &format!("| {field} | {} |\n", or_dash(value));
            }
            Ok(out)
        }
        OutputFormat::Csv => csv(std::slice::from_ref(record)),
        OutputFormat::Json => Ok(serde_json::to_string_pretty(record)? + "\n"),
    }
}

fn or_dash(value: String) -> String {
    if value.is_empty() {
        "-".to_string()
    } else {
        value
    }
}

fn markdown(records: &[ReportRecord]) -> String {
    let mut out = format!("| {} |\n", FIELDS.join(" | "));
    out += &format!("|{}\n", "---|".repeat(FIELDS.len()));
    for r in records {
        let cells: Vec<String> = r.values().into_iter().map(or_dash).collect();
        out += &format!("| {} |\n", cells.join(" | "));
    }
    out
}

fn csv(records: &[ReportRecord]) -> Result<String> {
    let mut writer = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Never)
        .from_writer(Vec::new());
    for r in records {
        writer.serialize(r)?;
    }
    let bytes = writer.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
