//! Verification reports as JSON lists of `{identity, status, witness}`.

use serde::{Deserialize, Serialize};

use schubert_core::verify::VerificationReport;

use crate::args::Format;
use crate::{csv_string, latex_escape};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLine {
    pub identity: String,
    pub status: String,
    pub checked: usize,
    pub failed: usize,
    pub witness: Option<String>,
}

pub fn lines(rep: &VerificationReport) -> Vec<ReportLine> {
    rep.entries
        .iter()
        .map(|e| ReportLine {
            identity: e.identity.clone(),
            status: if e.passed() { "pass" } else { "fail" }.into(),
            checked: e.checked,
            failed: e.failed,
            witness: e.witness.clone(),
        })
        .collect()
}

pub fn render(rep: &VerificationReport, format: Format) -> String {
    let lines = lines(rep);
    match format {
        Format::Json => serde_json::to_string_pretty(&lines).expect("report serializes") + "\n",
        Format::Csv => {
            let header = ["identity", "status", "checked", "failed", "witness"].map(String::from).to_vec();
            let rows = lines.iter().map(|l| {
                vec![
                    l.identity.clone(),
                    l.status.clone(),
                    l.checked.to_string(),
                    l.failed.to_string(),
                    l.witness.clone().unwrap_or_default(),
                ]
            });
            csv_string(header, rows)
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{lrrl}\nidentity & checked & failed & status \\\\ \\hline\n");
            for l in &lines {
                out.push_str(&format!("{} & {} & {} & {} \\\\\n", latex_escape(&l.identity), l.checked, l.failed, l.status));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}
