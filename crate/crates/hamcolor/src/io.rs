//! Reading graphs, colorings, orderings and family sidecars.

use std::fs;
use std::path::{Path, PathBuf};

use hamcolor_core::coloring::Ordering;
use hamcolor_core::families::FamilySpec;
use hamcolor_core::graph::{parse_edge_list, Graph};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(path.display(), e))
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_edge_list(&read_text(path)?).map_err(|e| CliError::input(path.display(), e))
}

/// Colors as a JSON array of integers, or an object with a `colors` array
/// (a certificate written by `color` qualifies).
pub fn parse_colors(text: &str) -> Result<Vec<i64>, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let array = match &value {
        Value::Array(_) => &value,
        Value::Object(map) => map.get("colors").ok_or("object has no `colors` field")?,
        _ => return Err("expected an array of colors".into()),
    };
    serde_json::from_value(array.clone()).map_err(|e| e.to_string())
}

pub fn read_colors(path: &Path) -> Result<Vec<i64>, CliError> {
    parse_colors(&read_text(path)?).map_err(|e| CliError::input(path.display(), e))
}

/// Vertex ids separated by whitespace or commas, `#` comments allowed, or a
/// JSON array.
pub fn parse_ordering(text: &str) -> Result<Vec<usize>, String> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str(trimmed).map_err(|e| e.to_string());
    }
    let mut seq = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for token in line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            seq.push(
                token
                    .parse()
                    .map_err(|_| format!("`{token}` is not a vertex id"))?,
            );
        }
    }
    Ok(seq)
}

pub fn read_ordering(path: &Path, n: usize) -> Result<Ordering, CliError> {
    let seq = parse_ordering(&read_text(path)?).map_err(|e| CliError::input(path.display(), e))?;
    if seq.len() != n {
        return Err(CliError::input(
            path.display(),
            format!("ordering has {} vertices, graph has {n}", seq.len()),
        ));
    }
    Ordering::new(seq).map_err(|e| CliError::input(path.display(), e))
}

/// Parameters of a seeded random block graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub n_target: usize,
    pub max_clique: usize,
}

/// JSON written next to a generated edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sidecar {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<FamilySpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub random: Option<RandomSpec>,
    pub n: usize,
    pub formula_hc: Option<i64>,
}

pub fn sidecar_path(graph_path: &Path) -> PathBuf {
    let mut name = graph_path.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

pub fn read_sidecar(path: &Path) -> Result<Sidecar, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::input(path.display(), e))
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::input(path.display(), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colors_from_array_or_certificate() {
        assert_eq!(parse_colors("[0, 4, -1]").unwrap(), vec![0, 4, -1]);
        assert_eq!(
            parse_colors(r#"{"span": 4, "colors": [1, 2]}"#).unwrap(),
            vec![1, 2]
        );
        assert!(parse_colors(r#"{"span": 4}"#).is_err());
        assert!(parse_colors("[0.5]").is_err());
    }

    #[test]
    fn ordering_text_and_json() {
        assert_eq!(
            parse_ordering("# w first\n0 3, 1\n2\n").unwrap(),
            vec![0, 3, 1, 2]
        );
        assert_eq!(parse_ordering("[2, 1, 0]").unwrap(), vec![2, 1, 0]);
        assert!(parse_ordering("0 x").is_err());
    }

    #[test]
    fn sidecar_sits_next_to_the_graph() {
        assert_eq!(
            sidecar_path(Path::new("out/star.edges")),
            PathBuf::from("out/star.edges.json")
        );
    }
}
