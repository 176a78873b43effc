use std::fmt::Write;

use horofano::flagvar::{flag_invariants, two_rho};
use horofano::{
    catalog_reports, stability_verdict, DynkinType, ExactReport, ExactWeight, RootSystem,
    TripleSpec,
};
use num_bigint::BigInt;

use crate::error::{CliError, Result};
use crate::fixtures::{self, FixtureSet, Verification};
use crate::nodes::{node_label, parse_marking, weight_label};
use crate::record::ReportRecord;
use crate::render::{self, OutputFormat};

pub fn parse_type(spec: &str) -> Result<DynkinType> {
    Ok(spec.parse()?)
}

pub fn roots(spec: &str) -> Result<String> {
    let rs = RootSystem::new(parse_type(spec)?)?;
    let mut out = String::new();
    writeln!(out, "type {}: rank {}, {} positive roots", rs.dynkin(), rs.rank(), rs.positive_roots().len()).unwrap();
    writeln!(out, "cartan matrix:").unwrap();
    for row in rs.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        writeln!(out, "  [{}]", cells.join("")).unwrap();
    }
    writeln!(out, "positive roots (simple-root coordinates):").unwrap();
    for root in rs.positive_roots() {
        writeln!(out, "{root}").unwrap();
    }
    Ok(out)
}

pub fn flag(spec: &str, nodes: &str) -> Result<String> {
    let rs = RootSystem::new(parse_type(spec)?)?;
    let dynkin = rs.dynkin().clone();
    let marking = parse_marking(&dynkin, nodes)?;
    let inv = flag_invariants::<BigInt>(&rs, &marking)?;
    let coords = inv.anticanonical.to_i64s().expect("anticanonical weights are small integers");
    let mut anticanonical = weight_label(&dynkin, &coords, "ω", " + ");
    if inv.anticanonical == two_rho::<BigInt>(&rs)? {
        anticanonical += " (= 2ρ)";
    }
    let marked: Vec<String> = marking.nodes().iter().map(|&i| node_label(&dynkin, i)).collect();
    let mut out = String::new();
    writeln!(out, "type: {dynkin}").unwrap();
    writeln!(out, "marked: {}", marked.join(",")).unwrap();
    writeln!(out, "dimension: {}", inv.dimension).unwrap();
    writeln!(out, "picard rank: {}", inv.picard_rank).unwrap();
    writeln!(out, "anticanonical: {anticanonical}").unwrap();
    if let Some(index) = inv.index {
        writeln!(out, "index: {index}").unwrap();
    }
    Ok(out)
}

/// Parses `"1,0,2"` (parentheses and spaces allowed) into weight
/// coordinates.
pub fn parse_weight(text: &str) -> Result<Vec<i64>> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("cannot parse weight coefficient `{}`", t.trim())))
        })
        .collect()
}

pub fn dim(spec: &str, weight: &str) -> Result<String> {
    let rs = RootSystem::new(parse_type(spec)?)?;
    let weight = ExactWeight::from_integers(&parse_weight(weight)?)?;
    Ok(format!("{}\n", rs.weyl_dim(&weight)?))
}

fn catalog(max_n: u32) -> Result<Vec<ExactReport>> {
    if max_n < 3 {
        return Err(CliError::Usage(format!("--max-n must be at least 3, got {max_n}")));
    }
    Ok(catalog_reports(max_n)?)
}

pub fn records(max_n: u32) -> Result<Vec<ReportRecord>> {
    Ok(catalog(max_n)?.iter().map(ReportRecord::from).collect())
}

pub fn table(max_n: u32, format: OutputFormat) -> Result<String> {
    render::table(&records(max_n)?, format)
}

pub fn check(id: &str, format: OutputFormat) -> Result<String> {
    let triple: TripleSpec = id.parse()?;
    let report = stability_verdict::<BigInt>(&triple)?;
    render::single(&ReportRecord::from(&report), format)
}

pub fn verify(max_n: u32, fixtures: &FixtureSet) -> Result<Verification> {
    Ok(fixtures::verify(&catalog(max_n)?, fixtures))
}
