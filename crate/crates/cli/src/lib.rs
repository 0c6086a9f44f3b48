//! Front end for `schubert-core`: class tables, verification suites,
//! pairing matrices and the quantum checks, with JSON/CSV/LaTeX output.
//!
//! Exit codes: 0 pass, 1 identity failure, 2 invalid input, 3 internal error.

use std::io::Write;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use schubert_core::gkm::FlagSpace;

pub mod args;
pub mod classes;
pub mod commands;
pub mod fixtures;
pub mod report;
pub mod scalar;

pub use commands::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<schubert_core::Error> for CliError {
    fn from(e: schubert_core::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Internal(e.to_string())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl Outcome {
    pub fn from_passed(ok: bool) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
        }
    }
}

/// The space selector as it appears in every document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDoc {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    /// 1-based simple indices generating the parabolic.
    pub parabolic: Vec<usize>,
}

impl SpaceDoc {
    pub fn of(space: &FlagSpace) -> Self {
        let label = space.group().rs.label;
        SpaceDoc {
            ty: label.series_char().to_string(),
            rank: space.rank(),
            parabolic: space.parabolic().simple_indices().iter().map(|i| i + 1).collect(),
        }
    }

    pub fn build(&self) -> Result<Arc<FlagSpace>, CliError> {
        build_space(&self.ty, self.rank, &self.parabolic)
    }
}

/// `G/P` from a type letter, a rank and 1-based parabolic indices.
pub fn build_space(ty: &str, rank: usize, parabolic: &[usize]) -> Result<Arc<FlagSpace>, CliError> {
    let ty = ty.trim().to_ascii_uppercase();
    if ty.len() != 1 {
        return Err(CliError::Usage(format!("type must be one letter, got {ty:?}")));
    }
    let mut idx = Vec::with_capacity(parabolic.len());
    for &i in parabolic {
        if i == 0 || i > rank {
            return Err(CliError::Usage(format!("parabolic index {i} outside 1..={rank}")));
        }
        if idx.contains(&(i - 1)) {
            return Err(CliError::Usage(format!("parabolic index {i} repeated")));
        }
        idx.push(i - 1);
    }
    FlagSpace::new(&format!("{ty}{rank}"), &idx).map_err(|e| CliError::Usage(e.to_string()))
}

/// Writes `contents` to `out` atomically, or to stdout when `out` is `None`.
pub fn write_output(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    let Some(path) = out else {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(contents.as_bytes())?;
        return Ok(());
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(())
}

/// `s1s2` as `s_{1}s_{2}`, `id` as `e`.
pub fn latex_word(label: &str) -> String {
    if label == "id" {
        return "e".into();
    }
    label.split('s').filter(|p| !p.is_empty()).map(|p| format!("s_{{{p}}}")).collect()
}

/// Escapes text for a LaTeX table cell.
pub fn latex_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '_' | '&' | '%' | '#' | '$' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            '^' => out.push_str("\\^{}"),
            '\\' => out.push_str("\\textbackslash{}"),
            _ => out.push(c),
        }
    }
    out
}

/// A CSV document with a header row.
pub fn csv_string(header: Vec<String>, rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}
