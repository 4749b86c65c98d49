//! Request schema: the subcommand plus one input source and a few options.

use bochner_core::embed::{CatalogSpec, PointChoice};
use bochner_core::exactnum::{ComplexMatrix, RationalMatrix};
use bochner_core::rigidity::RealSymForm;
use bochner_core::{GaussianRational, GramPair, HermitianPoly, Rational, VectorForm};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    CheckBochner,
    CheckWeyl,
    FundamentalForms,
    CheckGrassmannian,
    CheckWhitney,
    Lemma1,
    BochnerFlat,
    Iwatani,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckBochner => "check-bochner",
            Command::CheckWeyl => "check-weyl",
            Command::FundamentalForms => "fundamental-forms",
            Command::CheckGrassmannian => "check-grassmannian",
            Command::CheckWhitney => "check-whitney",
            Command::Lemma1 => "lemma1",
            Command::BochnerFlat => "bochner-flat",
            Command::Iwatani => "iwatani",
        }
    }
}

/// Explicit Gram matrices; either may be omitted and defaults to the identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GramsJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<Vec<Vec<GaussianRational>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub big_g: Option<Vec<Vec<GaussianRational>>>,
}

/// `{"n": 3, "components": [[["1","0","0"], …], …]}`, one symmetric matrix per
/// component of `W`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymFormJson {
    pub n: usize,
    pub components: Vec<Vec<Vec<Rational>>>,
}

/// A polynomial map given inline: holomorphic components of equal degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    #[serde(default = "default_map_name")]
    pub name: String,
    pub components: Vec<HermitianPoly>,
}

fn default_map_name() -> String {
    "inline".into()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRequest {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<VectorForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grams: Option<GramsJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sym_form: Option<SymFormJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<CatalogSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<GaussianRational>>,
    #[serde(default)]
    pub emit_witness: bool,
}

impl CheckRequest {
    pub fn new(command: Command) -> Self {
        CheckRequest {
            command,
            form: None,
            grams: None,
            sym_form: None,
            map: None,
            catalog: None,
            n: None,
            p: None,
            point: None,
            emit_witness: false,
        }
    }

    /// Checks that exactly one input source is present and that it fits the
    /// command. Errors name the offending field.
    pub fn validate(&self) -> Result<(), CliError> {
        let sources: Vec<&str> = [
            ("form", self.form.is_some()),
            ("sym_form", self.sym_form.is_some()),
            ("map", self.map.is_some()),
            ("catalog", self.catalog.is_some()),
        ]
        .into_iter()
        .filter_map(|(name, present)| present.then_some(name))
        .collect();
        let allowed: &[&str] = match self.command {
            Command::CheckBochner => &["form", "map", "catalog"],
            Command::Lemma1 | Command::BochnerFlat | Command::Iwatani => &["form"],
            Command::CheckWeyl => &["sym_form"],
            Command::FundamentalForms => &["map", "catalog"],
            Command::CheckGrassmannian | Command::CheckWhitney => &[],
        };
        let cmd = self.command.name();
        if allowed.is_empty() {
            if let Some(s) = sources.first() {
                return Err(CliError::Input(format!("{s}: `{cmd}` takes no input source, only `n`/`p`")));
            }
            if self.n.is_none() {
                return Err(CliError::Input(format!("n: required by `{cmd}`")));
            }
            if self.command == Command::CheckGrassmannian && self.p.is_none() {
                return Err(CliError::Input(format!("p: required by `{cmd}`")));
            }
            return Ok(());
        }
        match sources.as_slice() {
            [] => Err(CliError::Input(format!("`{cmd}` needs one of: {}", allowed.join(", ")))),
            [s] if allowed.contains(s) => Ok(()),
            [s] => Err(CliError::Input(format!("{s}: not accepted by `{cmd}` (expected one of: {})", allowed.join(", ")))),
            many => Err(CliError::Input(format!("exactly one input source allowed, found {}", many.join(" and ")))),
        }
    }

    pub fn catalog_point(&self) -> PointChoice {
        self.catalog.as_ref().map_or(PointChoice::Base, |c| c.point)
    }
}

fn complex_matrix(field: &str, rows: &[Vec<GaussianRational>]) -> Result<ComplexMatrix, CliError> {
    ComplexMatrix::from_rows(rows.to_vec()).map_err(|e| CliError::Input(format!("{field}: {e}")))
}

impl GramsJson {
    pub fn resolve(&self, n: usize, r: usize) -> Result<GramPair, CliError> {
        let g = match &self.g {
            Some(rows) => complex_matrix("grams.g", rows)?,
            None => ComplexMatrix::identity(n),
        };
        let big_g = match &self.big_g {
            Some(rows) => complex_matrix("grams.big_g", rows)?,
            None => ComplexMatrix::identity(r),
        };
        if g.rows() != n || g.cols() != n {
            return Err(CliError::Input(format!("grams.g: expected {n}x{n}")));
        }
        if big_g.rows() != r || big_g.cols() != r {
            return Err(CliError::Input(format!("grams.big_g: expected {r}x{r}")));
        }
        GramPair::new(g, big_g).map_err(|e| CliError::Input(format!("grams: {e}")))
    }
}

impl SymFormJson {
    pub fn resolve(&self) -> Result<RealSymForm, CliError> {
        let comps = self
            .components
            .iter()
            .enumerate()
            .map(|(a, rows)| {
                RationalMatrix::from_rows(rows.clone())
                    .map_err(|e| CliError::Input(format!("sym_form.components[{a}]: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        RealSymForm::new(self.n, comps).map_err(|e| CliError::Input(format!("sym_form: {e}")))
    }
}
