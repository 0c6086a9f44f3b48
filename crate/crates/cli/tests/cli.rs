use std::path::Path;
use std::process::Command;

use schubert_cli::classes::{read_table, ClassTableDoc};
use schubert_cli::commands::PairDoc;
use schubert_cli::fixtures::{QH_FIXTURE, QK_FIXTURE};
use schubert_cli::scalar::{self, HTerm, KTerm};
use schubert_core::algebra::{Fraction, Poly};
use schubert_core::char_classes::{csm_family, mc_family, smc_family};
use schubert_core::gkm::{FlagSpace, Side};
use schubert_core::theory::{root_form, H, K};

fn schubert(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name).to_string_lossy().into_owned()
}

#[test]
fn a1_csm_table_holds_the_oracle_entry() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a1.json");
    let (code, _, _) = schubert(&["classes", "--type", "A", "--rank", "1", "--family", "csm", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc: ClassTableDoc<HTerm> = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let entry = doc.entries.iter().find(|e| e.label == "s1").unwrap();
    let alpha = root_form(&[1, 0, 0, 0]);
    let values: Vec<Fraction<_>> = entry.values.iter().map(|v| scalar::decode::<H>(v, 1).unwrap()).collect();
    assert_eq!(values, vec![Fraction::one(), Poly::one().add(&alpha).into()]);
    // Only the output file is left behind.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn gr24_mc_table_has_six_rows_and_round_trips() {
    let (code, text, _) = schubert(&["classes", "--type", "A", "--rank", "3", "--parabolic", "1,3", "--family", "mc"]);
    assert_eq!(code, 0);
    let doc: ClassTableDoc<KTerm> = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.entries.len(), 6);
    assert!(doc.y_present);
    let (space, classes) = read_table::<K>(&doc).unwrap();
    assert_eq!(classes, mc_family(&space, Side::B).unwrap().classes);
}

#[test]
fn fraction_valued_tables_round_trip() {
    let (code, text, _) = schubert(&["classes", "--type", "A", "--rank", "2", "--family", "smc", "--side", "bminus"]);
    assert_eq!(code, 0);
    let doc: ClassTableDoc<KTerm> = serde_json::from_str(&text).unwrap();
    let (space, classes) = read_table::<K>(&doc).unwrap();
    assert_eq!(classes, smc_family(&space, Side::BMinus).unwrap().classes);
    let (_, text, _) = schubert(&["classes", "--type", "B", "--rank", "2", "--family", "csm"]);
    let doc: ClassTableDoc<HTerm> = serde_json::from_str(&text).unwrap();
    let (space, classes) = read_table::<H>(&doc).unwrap();
    assert_eq!(classes, csm_family(&space, Side::B).unwrap().classes);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classes", "--type", "A", "--rank", "2", "--family", "smc", "--format", "csv"][..],
        &["classes", "--type", "G", "--rank", "2", "--family", "schubert", "--theory", "k"][..],
        &["pair", "--type", "A", "--rank", "2", "--family", "mc,smc", "--format", "latex"][..],
    ] {
        let (c1, a, _) = schubert(args);
        let (c2, b, _) = schubert(args);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(schubert(&["classes", "--type", "A", "--rank", "1", "--family", "bogus"]).0, 2);
    assert_eq!(schubert(&["classes", "--type", "A", "--rank", "2", "--parabolic", "3", "--family", "csm"]).0, 2);
    assert_eq!(schubert(&["classes", "--type", "Q", "--rank", "2", "--family", "csm"]).0, 2);
    assert_eq!(schubert(&["pair", "--type", "A", "--rank", "1", "--family", "csm,mc"]).0, 2);
    assert_eq!(schubert(&["pair", "--type", "A", "--rank", "1", "--family", "csm"]).0, 2);
    assert_eq!(schubert(&["verify", "--suite", "quantum", "--fixtures", "missing.json"]).0, 2);
}

#[test]
fn verification_examples_pass() {
    let (code, text, _) = schubert(&["verify", "--suite", "operators", "--type", "B", "--rank", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert!(!lines.is_empty() && lines.iter().all(|l| l["status"] == "pass"));
    assert_eq!(schubert(&["verify", "--suite", "motivic", "--type", "A", "--rank", "3", "--parabolic", "1,3"]).0, 0);
    assert_eq!(schubert(&["verify", "--suite", "quantum", "--fixtures", QH_FIXTURE]).0, 0);
    assert_eq!(schubert(&["verify", "--suite", "quantum", "--fixtures", QK_FIXTURE]).0, 0);
}

#[test]
fn corrupted_fixture_is_rejected_with_its_pair() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(fixture(QH_FIXTURE)).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["entries"][1]["terms"][0]["coeff"][0]["coeff"] = "2".into();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let (code, _, err) = schubert(&["verify", "--suite", "quantum", "--fixtures", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("(s2, s1s2)"), "{err}");
}

#[test]
fn fixture_directory_can_be_overridden() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixture(QK_FIXTURE), dir.path().join(QK_FIXTURE)).unwrap();
    let run = |d: &Path| {
        Command::new(env!("CARGO_BIN_EXE_schubert"))
            .args(["verify", "--suite", "quantum", "--fixtures", QK_FIXTURE])
            .env("SCHUBERT_FIXTURE_DIR", d)
            .current_dir(std::env::temp_dir())
            .output()
            .unwrap()
            .status
            .code()
            .unwrap()
    };
    assert_eq!(run(dir.path()), 0);
    let empty = tempfile::tempdir().unwrap();
    assert_eq!(run(empty.path()), 2);
}

#[test]
fn pairing_matrices_are_identities() {
    for (space, fam, theory) in [
        (&["--type", "A", "--rank", "2"][..], "csm,sm", "h"),
        (&["--type", "A", "--rank", "3", "--parabolic", "1,3"][..], "mc,smc", "k"),
        (&["--type", "A", "--rank", "1"][..], "schubert_b,schubert_bminus", "h"),
    ] {
        let mut args = vec!["pair"];
        args.extend_from_slice(space);
        args.extend_from_slice(&["--family", fam, "--theory", theory]);
        let (code, text, _) = schubert(&args);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let n = v["rows"].as_array().unwrap().len();
        for i in 0..n {
            for j in 0..n {
                let cell = &v["matrix"][i][j];
                if i == j {
                    assert_eq!(cell.as_array().unwrap().len(), 1, "{fam} ({i},{j})");
                    assert_eq!(cell[0]["coeff"], "1");
                    let exps = cell[0].get("exponents").or_else(|| cell[0].get("lattice")).unwrap();
                    assert!(exps.as_array().unwrap().iter().all(|e| e == 0));
                } else {
                    assert_eq!(*cell, serde_json::json!([]), "{fam} ({i},{j})");
                }
            }
        }
    }
    let (_, text, _) = schubert(&["pair", "--type", "A", "--rank", "2", "--family", "csm,sm"]);
    let doc: PairDoc<HTerm> = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.rows.len(), FlagSpace::full_flag("A2").unwrap().npoints());
}

#[test]
fn quantum_command_renders_products() {
    let (code, text, _) = schubert(&["quantum", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(text.contains("\\star") && text.contains("\\circ") && text.contains("e^{-\\alpha_{2}}"));
    let (code, text, _) = schubert(&["quantum"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["products"].as_array().unwrap().len(), 6);
}
