//! The Gr(2,4) fixtures are frozen copies of the classical products
//! σ₁⋆σ₁, σ₁⋆σ₁,₁, σ₁,₁⋆σ₁,₁ (and their K analogues). Setting
//! `SCHUBERT_REGEN_FIXTURES=1` rewrites them instead of comparing.

use std::path::Path;

use schubert_cli::fixtures::{fixture_dir, load_table, table_json, AnyTable, QH_FIXTURE, QK_FIXTURE};
use schubert_cli::scalar::Codec;
use schubert_core::quantum::{gr24, gr24_fixture_pairs, StructureTable};
use schubert_core::theory::{H, K};

fn check<T: Codec>(name: &str) {
    let space = gr24().unwrap();
    let pairs = gr24_fixture_pairs(&space).unwrap();
    let fresh = table_json(&StructureTable::<T>::classical(&space, &pairs).unwrap());
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    if std::env::var_os("SCHUBERT_REGEN_FIXTURES").is_some() {
        std::fs::write(&path, &fresh).unwrap();
    }
    let stored = std::fs::read_to_string(&path).unwrap();
    assert_eq!(stored, fresh, "{name} differs from the classical products");
}

#[test]
fn qh_fixture_matches_classical_products() {
    check::<H>(QH_FIXTURE);
}

#[test]
fn qk_fixture_matches_classical_products() {
    check::<K>(QK_FIXTURE);
}

#[test]
fn fixtures_load_and_validate() {
    assert!(fixture_dir().join(QH_FIXTURE).exists() || std::env::var_os("SCHUBERT_FIXTURE_DIR").is_some());
    assert!(matches!(load_table(Path::new(QH_FIXTURE)).unwrap(), AnyTable::QH(_)));
    assert!(matches!(load_table(Path::new(QK_FIXTURE)).unwrap(), AnyTable::QK(_)));
}
