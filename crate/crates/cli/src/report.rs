use std::collections::BTreeMap;

use bochner_core::rigidity::{SystemDims, VerdictJson};
use bochner_core::{GaussianRational, HermitianPoly, Rational, VectorForm};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::request::CheckRequest;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub request: CheckRequest,
    pub result: Outcome,
    /// Sizes of every linear system solved, in the order they were solved.
    pub systems: Vec<SystemEntry>,
    /// Wall-clock milliseconds per stage; the only nondeterministic field.
    pub timings_ms: BTreeMap<String, f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SystemEntry {
    pub label: String,
    pub dims: SystemDims,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledVerdict {
    pub label: String,
    pub verdict: VerdictJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormEntry {
    pub level: usize,
    pub form: VectorForm,
    pub big_g: Vec<Vec<GaussianRational>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrassmannLevel {
    pub level: usize,
    /// Whether `F^l` spans the same space as the `l x l` minors.
    pub matches_minors: bool,
    pub verdict: VerdictJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Bochner {
        verdicts: Vec<LabeledVerdict>,
    },
    Weyl {
        verdict: VerdictJson,
    },
    FundamentalForms {
        point: Vec<GaussianRational>,
        tangent_dim: usize,
        type_numbers: Vec<usize>,
        height: usize,
        tangent_gram: Vec<Vec<GaussianRational>>,
        forms: Vec<FormEntry>,
    },
    Grassmannian {
        n: usize,
        p: usize,
        height: usize,
        type_numbers: Vec<usize>,
        levels: Vec<GrassmannLevel>,
    },
    Whitney {
        n: usize,
        holds: bool,
        factor: HermitianPoly,
    },
    Lemma1 {
        solution_dim: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        solutions: Option<Vec<VectorForm>>,
        pairings_vanish: bool,
    },
    BochnerFlat {
        flat: bool,
    },
    Iwatani {
        holds: bool,
        r_squared: Rational,
        nu: Vec<Vec<GaussianRational>>,
    },
}

impl Report {
    /// The report without its timing data, for reproducibility comparisons.
    pub fn without_timings(&self) -> Report {
        Report {
            timings_ms: BTreeMap::new(),
            ..self.clone()
        }
    }
}

fn verdict_line(label: &str, v: &Value) -> String {
    format!(
        "{label}: {} (solution_dim {}, kernel_dim {}{})",
        v["status"].as_str().unwrap_or("?"),
        v["solution_dim"],
        v["kernel_dim"],
        if v["witness"].is_null() { "" } else { ", witness attached" }
    )
}

/// Human-readable rendering of a serialized report.
pub fn summary(report: &Value) -> String {
    let command = report["request"]["command"].as_str().unwrap_or("?");
    let r = &report["result"];
    let mut lines = vec![format!("{} {} :: {command}", report["tool"].as_str().unwrap_or(""), report["version"].as_str().unwrap_or(""))];
    match r["kind"].as_str().unwrap_or("") {
        "bochner" => {
            for v in r["verdicts"].as_array().into_iter().flatten() {
                lines.push(verdict_line(v["label"].as_str().unwrap_or("?"), &v["verdict"]));
            }
        }
        "weyl" => lines.push(verdict_line("weyl", &r["verdict"])),
        "fundamental_forms" => {
            lines.push(format!(
                "tangent_dim {}, type numbers {}, height {}",
                r["tangent_dim"], r["type_numbers"], r["height"]
            ));
            for f in r["forms"].as_array().into_iter().flatten() {
                lines.push(format!("F^{}: {} components", f["level"], f["form"]["components"].as_array().map_or(0, Vec::len)));
            }
        }
        "grassmannian" => {
            lines.push(format!("Gr({}, {}+{}): type numbers {}, height {}", r["n"], r["n"], r["p"], r["type_numbers"], r["height"]));
            for l in r["levels"].as_array().into_iter().flatten() {
                let label = format!("F^{} (minors match: {})", l["level"], l["matches_minors"]);
                lines.push(verdict_line(&label, &l["verdict"]));
            }
        }
        "whitney" => lines.push(format!("pullback identity for n={}: {}", r["n"], r["holds"])),
        "lemma1" => lines.push(format!("solution_dim {}, pairings vanish: {}", r["solution_dim"], r["pairings_vanish"])),
        "bochner_flat" => lines.push(format!("Bochner-flat: {}", r["flat"])),
        "iwatani" => lines.push(format!("conditions hold: {}, r^2 = {}", r["holds"], r["r_squared"].as_str().unwrap_or("?"))),
        other => lines.push(format!("unrecognized result kind `{other}`")),
    }
    for (stage, ms) in report["timings_ms"].as_object().into_iter().flatten() {
        lines.push(format!("  {stage}: {:.2} ms", ms.as_f64().unwrap_or(0.0)));
    }
    lines.join("\n")
}
