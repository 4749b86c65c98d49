use std::collections::BTreeMap;
use std::time::Instant;

use bochner_core::embed::{
    fundamental_forms, minor_forms, plucker, random_points, span_equal, whitney_pullback_check, FFTower, PointChoice,
    PolyMap,
};
use bochner_core::exactnum::ComplexMatrix;
use bochner_core::rigidity::{
    bochner_flat, bochner_rigid, iwatani_check, lemma1_solve, weyl_rigid, RigidityVerdict, VerdictJson,
};
use bochner_core::{GaussianRational, GramPair, VectorForm};
use log::{debug, info};

use crate::error::CliError;
use crate::report::{FormEntry, GrassmannLevel, LabeledVerdict, Outcome, Report, SystemEntry};
use crate::request::{CheckRequest, Command};

struct Context {
    emit_witness: bool,
    systems: Vec<SystemEntry>,
    timings: BTreeMap<String, f64>,
}

impl Context {
    fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        let ms = t.elapsed().as_secs_f64() * 1e3;
        debug!("{stage}: {ms:.2} ms");
        self.timings.insert(stage.to_string(), ms);
        out
    }

    fn record(&mut self, label: &str, v: &RigidityVerdict) -> VerdictJson {
        self.systems.push(SystemEntry {
            label: label.to_string(),
            dims: v.dims.clone(),
        });
        let mut json = v.to_json();
        if !self.emit_witness {
            json.witness = None;
        }
        json
    }

    fn bochner(&mut self, label: &str, h: &VectorForm, grams: &GramPair) -> Result<VerdictJson, CliError> {
        let v = self.timed(label, || bochner_rigid(h, grams))?;
        info!("{label}: {:?}", v.status);
        Ok(self.record(label, &v))
    }
}

fn rows(m: &ComplexMatrix) -> Vec<Vec<GaussianRational>> {
    (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
}

/// Fills in defaults that affect the result so that the echoed request
/// reproduces it exactly.
fn normalize(mut req: CheckRequest) -> CheckRequest {
    if let Some(c) = req.catalog.as_mut() {
        if c.point == PointChoice::Random && c.seed.is_none() {
            c.seed = Some(0);
        }
    }
    req
}

fn resolve_map(req: &CheckRequest) -> Result<PolyMap, CliError> {
    if let Some(c) = &req.catalog {
        return Ok(c.build()?);
    }
    let m = req.map.as_ref().ok_or_else(|| CliError::Input("map: missing".into()))?;
    Ok(PolyMap::new(m.name.clone(), m.components.clone())?)
}

fn resolve_point(req: &CheckRequest, map: &PolyMap) -> Result<Vec<GaussianRational>, CliError> {
    let d = map.source_dim();
    let point = match (&req.point, req.catalog_point()) {
        (Some(p), _) => p.clone(),
        (None, PointChoice::Base) => vec![GaussianRational::from(0); d],
        (None, PointChoice::Random) => {
            let seed = req.catalog.as_ref().and_then(|c| c.seed).unwrap_or(0);
            random_points(d, 1, seed).remove(0)
        }
    };
    if point.len() != d {
        return Err(CliError::Input(format!("point: expected {d} affine coordinates, found {}", point.len())));
    }
    Ok(point)
}

fn inline_form(req: &CheckRequest) -> Result<(VectorForm, GramPair), CliError> {
    let h = req.form.clone().ok_or_else(|| CliError::Input("form: missing".into()))?;
    let grams = match &req.grams {
        Some(g) => g.resolve(h.n(), h.r())?,
        None => GramPair::for_form(&h),
    };
    Ok((h, grams))
}

fn tower(ctx: &mut Context, map: &PolyMap, point: &[GaussianRational]) -> Result<FFTower, CliError> {
    Ok(ctx.timed("fundamental_forms", || fundamental_forms(map, point))?)
}

/// Runs one request. Input problems come back as [`CliError::Input`].
pub fn run(request: CheckRequest) -> Result<Report, CliError> {
    request.validate()?;
    let request = normalize(request);
    let mut ctx = Context {
        emit_witness: request.emit_witness,
        systems: Vec::new(),
        timings: BTreeMap::new(),
    };
    let result = match request.command {
        Command::CheckBochner if request.form.is_some() => {
            let (h, grams) = inline_form(&request)?;
            let verdict = ctx.bochner("form", &h, &grams)?;
            Outcome::Bochner {
                verdicts: vec![LabeledVerdict {
                    label: "form".into(),
                    verdict,
                }],
            }
        }
        Command::CheckBochner => {
            let map = resolve_map(&request)?;
            let point = resolve_point(&request, &map)?;
            let t = tower(&mut ctx, &map, &point)?;
            let mut verdicts = Vec::new();
            for ff in &t.forms {
                let label = format!("F^{}", ff.level);
                let verdict = ctx.bochner(&label, &ff.form, &ff.grams)?;
                verdicts.push(LabeledVerdict { label, verdict });
            }
            Outcome::Bochner { verdicts }
        }
        Command::CheckWeyl => {
            let h = request.sym_form.as_ref().expect("validated").resolve()?;
            let v = ctx.timed("weyl", || weyl_rigid(&h))?;
            Outcome::Weyl {
                verdict: ctx.record("weyl", &v),
            }
        }
        Command::FundamentalForms => {
            let map = resolve_map(&request)?;
            let point = resolve_point(&request, &map)?;
            let t = tower(&mut ctx, &map, &point)?;
            Outcome::FundamentalForms {
                point,
                tangent_dim: t.flag.tangent_dim,
                type_numbers: t.flag.type_numbers.clone(),
                height: t.flag.height,
                tangent_gram: rows(&t.flag.tangent_gram),
                forms: t
                    .forms
                    .iter()
                    .map(|ff| FormEntry {
                        level: ff.level,
                        form: ff.form.clone(),
                        big_g: rows(&ff.grams.big_g),
                    })
                    .collect(),
            }
        }
        Command::CheckGrassmannian => {
            let (n, p) = (request.n.expect("validated"), request.p.expect("validated"));
            let map = plucker(n, p)?;
            let t = tower(&mut ctx, &map, &vec![GaussianRational::from(0); n * p])?;
            let mut levels = Vec::new();
            for ff in &t.forms {
                let reference = minor_forms(n, p, ff.level)?;
                let matches_minors = span_equal(std::slice::from_ref(&ff.form), &[reference])?;
                let verdict = ctx.bochner(&format!("F^{}", ff.level), &ff.form, &ff.grams)?;
                levels.push(GrassmannLevel {
                    level: ff.level,
                    matches_minors,
                    verdict,
                });
            }
            Outcome::Grassmannian {
                n,
                p,
                height: t.flag.height,
                type_numbers: t.flag.type_numbers.clone(),
                levels,
            }
        }
        Command::CheckWhitney => {
            let n = request.n.expect("validated");
            let (holds, factor) = ctx.timed("whitney", || whitney_pullback_check(n))?;
            Outcome::Whitney { n, holds, factor }
        }
        Command::Lemma1 => {
            let (h, grams) = inline_form(&request)?;
            let sol = ctx.timed("lemma1", || lemma1_solve(&h, &grams))?;
            Outcome::Lemma1 {
                solution_dim: sol.solutions.len(),
                solutions: request.emit_witness.then(|| sol.solutions.clone()),
                pairings_vanish: sol.pairings_vanish,
            }
        }
        Command::BochnerFlat => {
            let (h, grams) = inline_form(&request)?;
            let flat = ctx.timed("bochner_flat", || bochner_flat(&h, &grams))?;
            Outcome::BochnerFlat { flat }
        }
        Command::Iwatani => {
            let (h, grams) = inline_form(&request)?;
            let rep = ctx.timed("iwatani", || iwatani_check(&h, &grams.big_g))?;
            Outcome::Iwatani {
                holds: rep.holds,
                r_squared: rep.r_squared,
                nu: rep.nu,
            }
        }
    };
    Ok(Report {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        request,
        result,
        systems: ctx.systems,
        timings_ms: ctx.timings,
    })
}
