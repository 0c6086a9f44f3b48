//! Class families and the class-table document.

use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use schubert_core::char_classes::{csm_family, mc_family, sm_family, smc_family, CellClassFamily};
use schubert_core::gkm::{FlagSpace, LocalizedClass, SchubertBasis, Side};
use schubert_core::theory::{Theory, TheoryKind, H, K};
use schubert_core::verify::schubert_label;

use crate::args::{FamilyArg, Format, SideArg};
use crate::scalar::{self, Codec, ScalarDoc, Style};
use crate::{csv_string, latex_word, CliError, SpaceDoc};

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::B => Side::B,
            SideArg::Bminus => Side::BMinus,
        }
    }
}

pub fn side_name(side: Side) -> &'static str {
    match side {
        Side::B => "B",
        Side::BMinus => "B-",
    }
}

pub fn family_name(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::Csm => "csm",
        FamilyArg::Sm => "sm",
        FamilyArg::Mc => "mc",
        FamilyArg::Smc => "smc",
        FamilyArg::Schubert => "schubert",
        FamilyArg::Fixedpoint => "fixedpoint",
    }
}

/// The theory a family lives in; `None` when it exists in both.
pub fn family_theory(f: FamilyArg) -> Option<TheoryKind> {
    match f {
        FamilyArg::Csm | FamilyArg::Sm => Some(TheoryKind::H),
        FamilyArg::Mc | FamilyArg::Smc => Some(TheoryKind::K),
        FamilyArg::Schubert | FamilyArg::Fixedpoint => None,
    }
}

/// One class per fixed point, with display labels.
pub struct Labeled<T: Theory> {
    pub family: FamilyArg,
    pub side: Side,
    pub labels: Vec<String>,
    pub latex: Vec<String>,
    pub classes: Vec<LocalizedClass<T>>,
}

fn latex_cell(prefix: &str, side: Side, w: &str) -> String {
    let w = latex_word(w);
    match side {
        Side::B => format!("{prefix}(X_{{{w}}}^{{\\circ}})"),
        Side::BMinus => format!("{prefix}(X^{{{w},\\circ}})"),
    }
}

fn from_cells<T: Theory>(family: FamilyArg, fam: CellClassFamily<T>, latex_prefix: &str) -> Labeled<T> {
    let n = fam.space.npoints();
    Labeled {
        family,
        side: fam.side,
        labels: (0..n).map(|p| fam.label(p)).collect(),
        latex: (0..n).map(|p| latex_cell(latex_prefix, fam.side, &fam.space.point_label(p))).collect(),
        classes: fam.classes,
    }
}

fn common<T: Theory>(space: &Arc<FlagSpace>, family: FamilyArg, side: Side) -> Result<Labeled<T>, CliError> {
    let n = space.npoints();
    match family {
        FamilyArg::Schubert => {
            let b = SchubertBasis::<T>::new(space, side)?;
            let latex = (0..n)
                .map(|p| {
                    let w = latex_word(&space.point_label(p));
                    match (T::KIND, side) {
                        (TheoryKind::H, Side::B) => format!("[X_{{{w}}}]"),
                        (TheoryKind::H, Side::BMinus) => format!("[X^{{{w}}}]"),
                        (TheoryKind::K, Side::B) => format!("\\mathcal{{O}}_{{{w}}}"),
                        (TheoryKind::K, Side::BMinus) => format!("\\mathcal{{O}}^{{{w}}}"),
                    }
                })
                .collect();
            Ok(Labeled {
                family,
                side,
                labels: (0..n).map(|p| schubert_label::<T>(space, side, p)).collect(),
                latex,
                classes: b.classes,
            })
        }
        FamilyArg::Fixedpoint => Ok(Labeled {
            family,
            side,
            labels: (0..n).map(|p| format!("[{}]", space.point_label(p))).collect(),
            latex: (0..n).map(|p| format!("[{}]", latex_word(&space.point_label(p)))).collect(),
            classes: (0..n).map(|p| LocalizedClass::fixed_point(space, p)).collect(),
        }),
        _ => Err(CliError::Usage(format!("family {} is not available in {}", family_name(family), T::KIND))),
    }
}

pub fn family_h(space: &Arc<FlagSpace>, family: FamilyArg, side: Side) -> Result<Labeled<H>, CliError> {
    match family {
        FamilyArg::Csm => Ok(from_cells(family, csm_family(space, side)?, "c_{SM}")),
        FamilyArg::Sm => Ok(from_cells(family, sm_family(space, side)?, "s_{M}")),
        _ => common(space, family, side),
    }
}

pub fn family_k(space: &Arc<FlagSpace>, family: FamilyArg, side: Side) -> Result<Labeled<K>, CliError> {
    match family {
        FamilyArg::Mc => Ok(from_cells(family, mc_family(space, side)?, "MC_y")),
        FamilyArg::Smc => Ok(from_cells(family, smc_family(space, side)?, "SMC_y")),
        _ => common(space, family, side),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "Tm: Serialize + DeserializeOwned")]
pub struct ClassEntry<Tm> {
    /// Word of the fixed point indexing the class.
    pub label: String,
    pub class: String,
    /// Restrictions, in the order of `points`.
    pub values: Vec<ScalarDoc<Tm>>,
    /// Coefficients in the Schubert basis of the same side, in the order of `points`.
    pub coeffs: Vec<ScalarDoc<Tm>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "Tm: Serialize + DeserializeOwned")]
pub struct ClassTableDoc<Tm> {
    pub space: SpaceDoc,
    pub theory: String,
    pub family: String,
    pub side: String,
    pub y_present: bool,
    pub basis: String,
    pub points: Vec<String>,
    pub entries: Vec<ClassEntry<Tm>>,
}

pub fn table_doc<T: Codec>(space: &Arc<FlagSpace>, fam: &Labeled<T>) -> Result<ClassTableDoc<T::Term>, CliError> {
    let rank = space.rank();
    let basis = SchubertBasis::<T>::new(space, fam.side)?;
    let entries = fam
        .classes
        .iter()
        .enumerate()
        .map(|(p, c)| {
            let coeffs = basis.expand(c)?;
            Ok(ClassEntry {
                label: space.point_label(p),
                class: fam.labels[p].clone(),
                values: c.values().iter().map(|v| scalar::encode::<T>(v, rank)).collect(),
                coeffs: coeffs.iter().map(|v| scalar::encode::<T>(v, rank)).collect(),
            })
        })
        .collect::<Result<_, CliError>>()?;
    Ok(ClassTableDoc {
        space: SpaceDoc::of(space),
        theory: T::NAME.into(),
        family: family_name(fam.family).into(),
        side: side_name(fam.side).into(),
        y_present: matches!(fam.family, FamilyArg::Mc | FamilyArg::Smc),
        basis: "fixedpoint".into(),
        points: (0..space.npoints()).map(|p| space.point_label(p)).collect(),
        entries,
    })
}

/// Re-ingests a class table: the space and one class per entry.
pub fn read_table<T: Codec>(doc: &ClassTableDoc<T::Term>) -> Result<(Arc<FlagSpace>, Vec<LocalizedClass<T>>), CliError> {
    if doc.theory != T::NAME {
        return Err(CliError::Usage(format!("table is in theory {}, expected {}", doc.theory, T::NAME)));
    }
    let space = doc.space.build()?;
    let rank = space.rank();
    let classes = doc
        .entries
        .iter()
        .map(|e| {
            let values = e.values.iter().map(|v| scalar::decode::<T>(v, rank)).collect::<Result<Vec<_>, _>>()?;
            LocalizedClass::new(space.clone(), values).map_err(|err| CliError::Usage(err.to_string()))
        })
        .collect::<Result<_, CliError>>()?;
    Ok((space, classes))
}

pub fn render_table<T: Codec>(space: &Arc<FlagSpace>, fam: &Labeled<T>, format: Format) -> Result<String, CliError> {
    let rank = space.rank();
    let n = space.npoints();
    match format {
        Format::Json => {
            let doc = table_doc(space, fam)?;
            Ok(serde_json::to_string_pretty(&doc).map_err(|e| CliError::Internal(e.to_string()))? + "\n")
        }
        Format::Csv => {
            let basis = SchubertBasis::<T>::new(space, fam.side)?;
            let mut rows = Vec::new();
            for (p, c) in fam.classes.iter().enumerate() {
                for q in 0..n {
                    let v = scalar::render::<T>(c.value(q), rank, Style::Plain);
                    rows.push(vec![fam.labels[p].clone(), "restriction".into(), space.point_label(q), v]);
                }
                for (q, x) in basis.expand(c)?.iter().enumerate() {
                    let v = scalar::render::<T>(x, rank, Style::Plain);
                    rows.push(vec![fam.labels[p].clone(), "schubert".into(), schubert_label::<T>(space, fam.side, q), v]);
                }
            }
            Ok(csv_string(["class", "kind", "at", "value"].map(String::from).to_vec(), rows))
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{lll}\nclass & fixed point & restriction \\\\ \\hline\n");
            for (p, c) in fam.classes.iter().enumerate() {
                for q in 0..n {
                    let v = scalar::render::<T>(c.value(q), rank, Style::Latex);
                    out.push_str(&format!("${}$ & ${}$ & ${}$ \\\\\n", fam.latex[p], latex_word(&space.point_label(q)), v));
                }
            }
            out.push_str("\\end{tabular}\n");
            Ok(out)
        }
    }
}
