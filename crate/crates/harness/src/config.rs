use std::path::PathBuf;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Compute,
    Verify,
    SearchP1,
    SearchP2,
    SearchP3,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Compute => "compute",
            Mode::Verify => "verify",
            Mode::SearchP1 => "search-p1",
            Mode::SearchP2 => "search-p2",
            Mode::SearchP3 => "search-p3",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Jsonl,
    Csv,
}

/// Largest `max_n` for suites that enumerate single graphs.
pub const SINGLE_GRAPH_MAX_N: usize = 7;
/// Largest `max_n` for exhaustive pair enumeration.
pub const PAIR_MAX_N: usize = 5;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: Mode,
    /// FamilySpec strings or graph6 file paths.
    pub inputs: Vec<String>,
    pub max_n: usize,
    pub budget: Option<usize>,
    pub threads: Option<usize>,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub format: Format,
    /// Record wall-clock timings (makes reports nondeterministic).
    pub timings: bool,
    /// `compute`: pair every input with every later input (and itself).
    pub all_pairs: bool,
    /// `search-p3`: scan every graph, not only diameter-2 ones.
    pub unrestricted: bool,
}

impl RunConfig {
    pub fn new(mode: Mode) -> Self {
        RunConfig {
            mode,
            inputs: Vec::new(),
            max_n: 4,
            budget: None,
            threads: None,
            seed: 0,
            output: None,
            format: Format::Jsonl,
            timings: false,
            all_pairs: false,
            unrestricted: false,
        }
    }
}
