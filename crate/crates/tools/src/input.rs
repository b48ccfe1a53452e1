//! Root datum files, weight arguments and the node budget.

use std::path::Path;

use crystal_core::{RootDatum, Weight};
use serde::Deserialize;

use crate::error::CliError;

pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;
pub const NODE_BUDGET_VAR: &str = "CRYSTAL_NODE_BUDGET";

/// `{"preset": "A3"}` or `{"adjacency": [[0, 1], [1, 0]]}`, as JSON or TOML.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RootDatumFile {
    preset: Option<String>,
    adjacency: Option<Vec<Vec<i64>>>,
}

pub fn preset(name: &str) -> Result<RootDatum, CliError> {
    RootDatum::preset(name).map_err(|e| CliError::usage(format!("preset {:?}: {}", name, e)))
}

pub fn parse_root_datum(text: &str, is_toml: bool) -> Result<RootDatum, CliError> {
    let file: RootDatumFile = if is_toml {
        toml::from_str(text).map_err(|e| CliError::usage(format!("root datum: {}", e)))?
    } else {
        serde_json::from_str(text).map_err(|e| CliError::usage(format!("root datum: {}", e)))?
    };
    match (file.preset, file.adjacency) {
        (Some(name), None) => preset(&name),
        (None, Some(adj)) => RootDatum::from_adjacency(adj).map_err(|e| CliError::usage(format!("root datum: {}", e))),
        _ => Err(CliError::usage(
            "root datum: expected exactly one of `preset` or `adjacency`",
        )),
    }
}

/// Reads a root datum file. `.toml` files are TOML, anything else JSON.
pub fn load_root_datum(path: &Path) -> Result<RootDatum, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let is_toml = path.extension().is_some_and(|ext| ext == "toml");
    parse_root_datum(&text, is_toml)
}

/// Parses `"1,0,2"` into coordinates.
pub fn parse_weight(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::usage(format!("weight {:?}: {:?} is not an integer", s, part)))
        })
        .collect()
}

/// Checks length and dominance of a weight given in fundamental-weight
/// coordinates.
pub fn dominant_weight(rd: &RootDatum, lambda: &[i64]) -> Result<Weight, CliError> {
    if lambda.len() != rd.rank() {
        return Err(CliError::usage(format!(
            "weight has {} entries, root datum has rank {}",
            lambda.len(),
            rd.rank()
        )));
    }
    if let Some(k) = lambda.iter().position(|&x| x < 0) {
        return Err(CliError::usage(format!(
            "weight {} is not dominant: coefficient {} at vertex {}",
            join(lambda),
            lambda[k],
            k + 1
        )));
    }
    Ok(Weight::from_lambda(lambda.to_vec()))
}

/// `CRYSTAL_NODE_BUDGET`, or the default of one million nodes.
pub fn node_budget() -> Result<usize, CliError> {
    match std::env::var(NODE_BUDGET_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{}={:?} is not a node count", NODE_BUDGET_VAR, s))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

pub(crate) fn join(values: &[i64]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}
