use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use schubert_core::char_classes::{verify_csm_theorems, verify_gkm_membership, verify_motivic_theorems};
use schubert_core::gkm::{FlagSpace, Side};
use schubert_core::quantum::{verify_quantum_formal, verify_quantum_operators, verify_quantum_table, StructureTable, TableTerm};
use schubert_core::theory::{Theory, TheoryKind, H, K};
use schubert_core::verify::{
    schubert_label, verify_localization, verify_relations, verify_schubert_actions_h, verify_schubert_actions_k,
    verify_trichotomy, RelationOptions, VerificationReport,
};

use crate::args::{ClassesArgs, Cli, Command, FamilyArg, Format, PairArgs, QuantumArgs, SpaceArgs, Suite, TheoryArg, VerifyArgs};
use crate::classes::{family_h, family_k, family_theory, render_table, Labeled};
use crate::fixtures::{load_table, AnyTable, QH_FIXTURE, QK_FIXTURE};
use crate::report::{self, ReportLine};
use crate::scalar::{self, Codec, ScalarDoc, Style};
use crate::{build_space, csv_string, latex_word, write_output, CliError, Outcome, SpaceDoc};

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Classes(a) => classes(a),
        Command::Verify(a) => verify(a),
        Command::Pair(a) => pair(a),
        Command::Quantum(a) => quantum(a),
    }
}

fn space_of(a: &SpaceArgs) -> Result<Arc<FlagSpace>, CliError> {
    build_space(&a.ty, a.rank, &a.parabolic)
}

fn kind(t: TheoryArg) -> TheoryKind {
    match t {
        TheoryArg::H => TheoryKind::H,
        TheoryArg::K => TheoryKind::K,
    }
}

fn classes(a: &ClassesArgs) -> Result<Outcome, CliError> {
    let space = space_of(&a.space)?;
    let side = a.side.into();
    let text = match family_theory(a.family).unwrap_or(kind(a.theory)) {
        TheoryKind::H => render_table(&space, &family_h(&space, a.family, side)?, a.format)?,
        TheoryKind::K => render_table(&space, &family_k(&space, a.family, side)?, a.format)?,
    };
    write_output(a.out.as_deref(), &text)?;
    Ok(Outcome::Pass)
}

/// The space-independent quantum checks plus every fixture table.
pub fn quantum_report(fixture: Option<&Path>) -> Result<VerificationReport, CliError> {
    let mut rep = VerificationReport::new("quantum");
    rep.merge(verify_quantum_formal()?);
    for table in load_fixtures(fixture)? {
        match table {
            AnyTable::QH(t) => {
                rep.merge(verify_quantum_table(&t)?);
                rep.merge(verify_quantum_operators::<H>(t.space())?);
            }
            AnyTable::QK(t) => {
                rep.merge(verify_quantum_table(&t)?);
                rep.merge(verify_quantum_operators::<K>(t.space())?);
            }
        }
    }
    Ok(rep)
}

fn load_fixtures(fixture: Option<&Path>) -> Result<Vec<AnyTable>, CliError> {
    let paths: Vec<PathBuf> = match fixture {
        Some(p) => vec![p.to_path_buf()],
        None => vec![PathBuf::from(QH_FIXTURE), PathBuf::from(QK_FIXTURE)],
    };
    paths.iter().map(|p| load_table(p)).collect()
}

/// Runs one suite on one space.
pub fn suite_report(suite: Suite, space: &Arc<FlagSpace>, fixture: Option<&Path>) -> Result<VerificationReport, CliError> {
    let mut rep = VerificationReport::new(format!("{} on {}", suite.to_possible_value().expect("named").get_name(), space.name()));
    let opts = RelationOptions::default();
    match suite {
        Suite::Operators => {
            rep.merge(verify_relations::<H>(space, &opts)?);
            rep.merge(verify_relations::<K>(space, &opts)?);
        }
        Suite::Schubert => {
            rep.merge(verify_schubert_actions_h(space)?);
            rep.merge(verify_schubert_actions_k(space)?);
        }
        Suite::Csm => rep.merge(verify_csm_theorems(space)?),
        Suite::Motivic => {
            rep.merge(verify_motivic_theorems(space)?);
            rep.merge(verify_trichotomy(space)?);
        }
        Suite::Gkm => rep.merge(verify_gkm_membership(space)?),
        Suite::Localization => {
            rep.merge(verify_localization::<H>(space)?);
            rep.merge(verify_localization::<K>(space)?);
        }
        Suite::Quantum => rep.merge(quantum_report(fixture)?),
        Suite::All => {
            for s in [Suite::Operators, Suite::Schubert, Suite::Csm, Suite::Motivic, Suite::Gkm, Suite::Localization, Suite::Quantum] {
                rep.merge(suite_report(s, space, fixture)?);
            }
        }
    }
    Ok(rep)
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let space = space_of(&a.space)?;
    let rep = suite_report(a.suite, &space, a.fixtures.as_deref())?;
    write_output(a.out.as_deref(), &report::render(&rep, a.format))?;
    if a.out.is_some() {
        for e in rep.failures() {
            eprintln!("FAIL {}: {}", e.identity, e.witness.as_deref().unwrap_or(""));
        }
        eprintln!("{} identities, {} instances checked, {}", rep.entries.len(), rep.checked(), if rep.passed() { "all pass" } else { "FAILURES" });
    }
    Ok(Outcome::from_passed(rep.passed()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "Tm: Serialize + serde::de::DeserializeOwned")]
pub struct PairDoc<Tm> {
    pub space: SpaceDoc,
    pub theory: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub matrix: Vec<Vec<ScalarDoc<Tm>>>,
}

/// `csm`, `sm_bminus`, `schubert_b`, ... into a family and an optional side.
pub fn parse_family_token(tok: &str) -> Result<(FamilyArg, Option<Side>), CliError> {
    let t = tok.trim().to_ascii_lowercase();
    let (name, side) = if let Some(n) = t.strip_suffix("_bminus") {
        (n, Some(Side::BMinus))
    } else if let Some(n) = t.strip_suffix("_b") {
        (n, Some(Side::B))
    } else {
        (t.as_str(), None)
    };
    let fam = FamilyArg::from_str(name, true).map_err(|_| CliError::Usage(format!("unknown family {tok:?}")))?;
    Ok((fam, side))
}

fn pair_matrix<T: Codec>(space: &Arc<FlagSpace>, a: &Labeled<T>, b: &Labeled<T>, format: Format) -> Result<String, CliError> {
    let rank = space.rank();
    let m = a
        .classes
        .iter()
        .map(|x| b.classes.iter().map(|y| x.pair(y)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Json => {
            let doc = PairDoc {
                space: SpaceDoc::of(space),
                theory: T::NAME.into(),
                rows: a.labels.clone(),
                cols: b.labels.clone(),
                matrix: m.iter().map(|r| r.iter().map(|v| scalar::encode::<T>(v, rank)).collect()).collect(),
            };
            Ok(serde_json::to_string_pretty(&doc).map_err(|e| CliError::Internal(e.to_string()))? + "\n")
        }
        Format::Csv => {
            let mut header = vec![String::new()];
            header.extend(b.labels.iter().cloned());
            let rows = m.iter().zip(&a.labels).map(|(r, l)| {
                let mut row = vec![l.clone()];
                row.extend(r.iter().map(|v| scalar::render::<T>(v, rank, Style::Plain)));
                row
            });
            Ok(csv_string(header, rows))
        }
        Format::Latex => {
            let body: Vec<String> = m
                .iter()
                .map(|r| r.iter().map(|v| scalar::render::<T>(v, rank, Style::Latex)).collect::<Vec<_>>().join(" & "))
                .collect();
            Ok(format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}\n", body.join(" \\\\\n")))
        }
    }
}

fn pair(a: &PairArgs) -> Result<Outcome, CliError> {
    let space = space_of(&a.space)?;
    if a.family.len() != 2 {
        return Err(CliError::Usage(format!("pair needs exactly two families, got {}", a.family.len())));
    }
    let (f1, s1) = parse_family_token(&a.family[0])?;
    let (f2, s2) = parse_family_token(&a.family[1])?;
    let (s1, s2) = (s1.unwrap_or(Side::B), s2.unwrap_or(Side::BMinus));
    let t1 = family_theory(f1).unwrap_or(kind(a.theory));
    let t2 = family_theory(f2).unwrap_or(kind(a.theory));
    if t1 != t2 {
        return Err(CliError::Usage(format!("families live in different theories ({t1} and {t2})")));
    }
    let text = match t1 {
        TheoryKind::H => pair_matrix(&space, &family_h(&space, f1, s1)?, &family_h(&space, f2, s2)?, a.format)?,
        TheoryKind::K => pair_matrix(&space, &family_k(&space, f1, s1)?, &family_k(&space, f2, s2)?, a.format)?,
    };
    write_output(a.out.as_deref(), &text)?;
    Ok(Outcome::Pass)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductLine {
    pub theory: String,
    pub u: String,
    pub v: String,
    pub product: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuantumDoc {
    pub report: Vec<ReportLine>,
    pub products: Vec<ProductLine>,
}

fn basis_symbol<T: Theory>(space: &FlagSpace, p: usize, style: Style) -> String {
    match style {
        Style::Plain => schubert_label::<T>(space, Side::BMinus, p),
        Style::Latex => {
            let w = latex_word(&space.point_label(p));
            match T::KIND {
                TheoryKind::H => format!("[X^{{{w}}}]"),
                TheoryKind::K => format!("\\mathcal{{O}}^{{{w}}}"),
            }
        }
    }
}

/// `Σ coeff · q^d · basis` in plain or LaTeX form.
pub fn render_terms<T: Codec>(space: &FlagSpace, terms: &[TableTerm<T>], style: Style) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let rank = space.rank();
    terms
        .iter()
        .map(|t| {
            let mut parts = Vec::new();
            if !t.coeff.is_one() {
                parts.push(format!("({})", scalar::render::<T>(&t.coeff, rank, style)));
            }
            for (k, &d) in t.qdeg.iter().enumerate().filter(|(_, d)| **d > 0) {
                parts.push(match (style, d) {
                    (Style::Plain, 1) => format!("q{}", k + 1),
                    (Style::Plain, _) => format!("q{}^{d}", k + 1),
                    (Style::Latex, 1) => format!("q_{{{}}}", k + 1),
                    (Style::Latex, _) => format!("q_{{{}}}^{{{d}}}", k + 1),
                });
            }
            parts.push(basis_symbol::<T>(space, t.w, style));
            parts.join(if style == Style::Plain { "*" } else { " " })
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn product_lines<T: Codec>(table: &StructureTable<T>, style: Style) -> Vec<ProductLine> {
    let space = table.space();
    table
        .entries()
        .map(|(u, v, terms)| ProductLine {
            theory: T::QUANTUM_NAME.into(),
            u: basis_symbol::<T>(space, u, style),
            v: basis_symbol::<T>(space, v, style),
            product: render_terms(space, terms, style),
        })
        .collect()
}

fn quantum(a: &QuantumArgs) -> Result<Outcome, CliError> {
    let rep = quantum_report(a.fixtures.as_deref())?;
    let style = if a.format == Format::Latex { Style::Latex } else { Style::Plain };
    let mut products = Vec::new();
    for t in load_fixtures(a.fixtures.as_deref())? {
        match t {
            AnyTable::QH(t) => products.extend(product_lines(&t, style)),
            AnyTable::QK(t) => products.extend(product_lines(&t, style)),
        }
    }
    let text = match a.format {
        Format::Json => {
            let doc = QuantumDoc { report: report::lines(&rep), products };
            serde_json::to_string_pretty(&doc).map_err(|e| CliError::Internal(e.to_string()))? + "\n"
        }
        Format::Csv => {
            let rows = products.into_iter().map(|p| vec![p.theory, p.u, p.v, p.product]);
            csv_string(["theory", "u", "v", "product"].map(String::from).to_vec(), rows) + "\n" + &report::render(&rep, Format::Csv)
        }
        Format::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            for p in &products {
                let op = if p.theory == "QH" { "\\star" } else { "\\circ" };
                out.push_str(&format!("{} {op} {} &= {} \\\\\n", p.u, p.v, p.product));
            }
            out.push_str("\\end{align*}\n");
            out.push_str(&report::render(&rep, Format::Latex));
            out
        }
    };
    write_output(a.out.as_deref(), &text)?;
    Ok(Outcome::from_passed(rep.passed()))
}
