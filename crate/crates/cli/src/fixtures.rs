//! Structure-table documents and the fixture directory.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use schubert_core::gkm::FlagSpace;
use schubert_core::quantum::{StructureTable, TableTerm};
use schubert_core::root_system::parse_word;
use schubert_core::theory::{H, K};

use crate::scalar::{self, Codec, ScalarDoc};
use crate::{CliError, SpaceDoc};

/// Overrides the directory bare fixture names are resolved against.
pub const FIXTURE_DIR_ENV: &str = "SCHUBERT_FIXTURE_DIR";

pub const QH_FIXTURE: &str = "gr24_qh_partial.json";
pub const QK_FIXTURE: &str = "gr24_qk_partial.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "Tm: Serialize + DeserializeOwned")]
pub struct TermDoc<Tm> {
    pub w: String,
    pub qdeg: Vec<u32>,
    pub coeff: ScalarDoc<Tm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "Tm: Serialize + DeserializeOwned")]
pub struct EntryDoc<Tm> {
    pub u: String,
    pub v: String,
    pub terms: Vec<TermDoc<Tm>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "Tm: Serialize + DeserializeOwned")]
pub struct TableDoc<Tm> {
    pub space: SpaceDoc,
    pub theory: String,
    pub qdeg_arity: usize,
    pub entries: Vec<EntryDoc<Tm>>,
}

pub enum AnyTable {
    QH(StructureTable<H>),
    QK(StructureTable<K>),
}

pub fn fixture_dir() -> PathBuf {
    match std::env::var_os(FIXTURE_DIR_ENV) {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures"),
    }
}

/// A path that exists is used as given; otherwise it is looked up in the
/// fixture directory.
pub fn resolve_fixture(path: &Path) -> PathBuf {
    if path.exists() {
        path.to_path_buf()
    } else {
        fixture_dir().join(path)
    }
}

fn position(space: &FlagSpace, label: &str) -> Result<usize, CliError> {
    let g = space.group();
    let w = parse_word(label).and_then(|word| g.eval_word(&word)).map_err(|e| CliError::Usage(e.to_string()))?;
    space.position(w).ok_or_else(|| CliError::Usage(format!("{label} is not a minimal coset representative")))
}

pub fn table_from_doc<T: Codec>(doc: &TableDoc<T::Term>) -> Result<StructureTable<T>, CliError> {
    if doc.theory != T::QUANTUM_NAME {
        return Err(CliError::Usage(format!("table theory {}, expected {}", doc.theory, T::QUANTUM_NAME)));
    }
    let space = doc.space.build()?;
    let rank = space.rank();
    let mut rows = Vec::with_capacity(doc.entries.len());
    for e in &doc.entries {
        let terms = e
            .terms
            .iter()
            .map(|t| {
                Ok(TableTerm { w: position(&space, &t.w)?, qdeg: t.qdeg.clone(), coeff: scalar::decode::<T>(&t.coeff, rank)? })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        rows.push((position(&space, &e.u)?, position(&space, &e.v)?, terms));
    }
    StructureTable::new(&space, doc.qdeg_arity, rows).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn doc_from_table<T: Codec>(table: &StructureTable<T>) -> TableDoc<T::Term> {
    let space: &Arc<FlagSpace> = table.space();
    let rank = space.rank();
    let entries = table
        .entries()
        .map(|(u, v, terms)| EntryDoc {
            u: space.point_label(u),
            v: space.point_label(v),
            terms: terms
                .iter()
                .map(|t| TermDoc { w: space.point_label(t.w), qdeg: t.qdeg.clone(), coeff: scalar::encode::<T>(&t.coeff, rank) })
                .collect(),
        })
        .collect();
    TableDoc { space: SpaceDoc::of(space), theory: T::QUANTUM_NAME.into(), qdeg_arity: table.arity(), entries }
}

pub fn table_json<T: Codec>(table: &StructureTable<T>) -> String {
    serde_json::to_string_pretty(&doc_from_table(table)).expect("table serializes") + "\n"
}

/// Parses a table document of either theory.
pub fn parse_table(text: &str) -> Result<AnyTable, CliError> {
    #[derive(Deserialize)]
    struct Head {
        theory: String,
    }
    let bad = |e: serde_json::Error| CliError::Usage(format!("malformed structure table: {e}"));
    let head: Head = serde_json::from_str(text).map_err(bad)?;
    match head.theory.as_str() {
        "QH" => Ok(AnyTable::QH(table_from_doc::<H>(&serde_json::from_str(text).map_err(bad)?)?)),
        "QK" => Ok(AnyTable::QK(table_from_doc::<K>(&serde_json::from_str(text).map_err(bad)?)?)),
        other => Err(CliError::Usage(format!("unknown table theory {other:?}"))),
    }
}

pub fn load_table(path: &Path) -> Result<AnyTable, CliError> {
    let path = resolve_fixture(path);
    let text = std::fs::read_to_string(&path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_table(&text)
}
