//! Graph inputs: family specs such as `cycle:6`, or graph6 files with one
//! graph per line.

use std::fmt;
use std::path::Path;

use moddom_core::families::Family;
use moddom_core::{graph6, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedGraph {
    pub id: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(id: impl Into<String>, graph: Graph) -> Self {
        NamedGraph {
            id: id.into(),
            graph,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub input: String,
    pub reason: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad input `{}`: {}", self.input, self.reason)
    }
}

impl std::error::Error for InputError {}

fn bad(input: &str, reason: impl ToString) -> InputError {
    InputError {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

/// Resolves one input. A string naming an existing file is read as graph6;
/// anything else must be a family spec.
pub fn load_one(input: &str) -> Result<Vec<NamedGraph>, InputError> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| bad(input, e))?;
        let mut out = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let g = graph6::parse(line)
                .map_err(|e| bad(&format!("{input}:{}", lineno + 1), e))?;
            out.push(NamedGraph::new(format!("{input}:{}", lineno + 1), g));
        }
        if out.is_empty() {
            return Err(bad(input, "no graphs in file"));
        }
        return Ok(out);
    }
    let family: Family = input.parse().map_err(|e| bad(input, e))?;
    let g = family.generate().map_err(|e| bad(input, e))?;
    Ok(vec![NamedGraph::new(family.to_string(), g)])
}

pub fn load(inputs: &[String]) -> Result<Vec<NamedGraph>, InputError> {
    let mut out = Vec::new();
    for input in inputs {
        out.extend(load_one(input)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs_and_files() {
        let p = load_one("petersen").unwrap();
        assert_eq!(p[0].id, "petersen");
        assert_eq!(p[0].graph.n(), 10);
        assert!(load_one("nonsense:3").is_err());
        assert!(load_one("cycle:2").is_err());

        let dir = std::env::temp_dir().join(format!("moddom-inputs-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let file = dir.join("g.g6");
        std::fs::write(&file, ">>graph6<<Bw\n\n# comment\nC~\n").unwrap();
        let gs = load_one(file.to_str().unwrap()).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].graph.edge_count(), 6);
        assert!(gs[0].id.ends_with(":1"));
        std::fs::write(&file, "C~\n!!\n").unwrap();
        let err = load_one(file.to_str().unwrap()).unwrap_err();
        assert!(err.input.ends_with(":2"));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
