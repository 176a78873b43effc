//! The 1-based node grammar of the command line.
//!
//! A simple type takes plain indices (`"1,3"`). A product type takes
//! `factor.node` pairs (`"1.1,2.2"` is node 1 of the first factor and node
//! 2 of the second). Plain indices are also accepted as `1.i` on simple
//! types.

use horofano::{DynkinType, ParabolicMarking};

use crate::error::{CliError, Result};

fn parse_index(token: &str, part: &str) -> Result<usize> {
    part.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("cannot parse node `{token}`")))
}

/// Resolves one token to a 0-based global node.
pub fn parse_node(dynkin: &DynkinType, token: &str) -> Result<usize> {
    let token = token.trim();
    let factors = dynkin.factors();
    let (factor, local) = match token.split_once('.') {
        Some((f, i)) => (parse_index(token, f)?, parse_index(token, i)?),
        None if factors.len() == 1 => (1, parse_index(token, token)?),
        None => {
            return Err(CliError::Usage(format!(
                "node `{token}` is ambiguous for the product type {dynkin}; \
                 write factor.node, e.g. `1.1`"
            )))
        }
    };
    if factor == 0 || factor > factors.len() {
        return Err(CliError::Usage(format!(
            "node `{token}` out of range: {dynkin} has factors 1..={}",
            factors.len()
        )));
    }
    let rank = factors[factor - 1].rank();
    if local == 0 || local > rank {
        let range = if factors.len() == 1 {
            format!("valid nodes are 1..={rank}")
        } else {
            format!("factor {factor} ({}) has nodes 1..={rank}", factors[factor - 1])
        };
        return Err(CliError::Usage(format!("node `{token}` out of range: {range}")));
    }
    Ok(dynkin.global(factor - 1, local - 1).expect("checked above"))
}

pub fn parse_marking(dynkin: &DynkinType, text: &str) -> Result<ParabolicMarking> {
    let nodes = text
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| parse_node(dynkin, t))
        .collect::<Result<Vec<_>>>()?;
    ParabolicMarking::new(nodes).map_err(|_| CliError::Usage("no nodes marked".into()))
}

/// The label of a 0-based global node: `"3"` on simple types, `"2.1"` on
/// products.
pub fn node_label(dynkin: &DynkinType, node: usize) -> String {
    let (factor, local) = dynkin.locate(node).expect("node in range");
    if dynkin.factors().len() == 1 {
        (local + 1).to_string()
    } else {
        format!("{}.{}", factor + 1, local + 1)
    }
}

/// `3ω1 + 5ω3` style rendering of integral weight coordinates, with the
/// given symbol and separator. The zero weight renders as `0`.
pub fn weight_label(dynkin: &DynkinType, coords: &[i64], symbol: &str, sep: &str) -> String {
    let terms: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let coeff = match c {
                1 => String::new(),
                -1 => "-".to_string(),
                c => c.to_string(),
            };
            format!("{coeff}{symbol}{}", node_label(dynkin, i))
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(sep)
    }
}
