use serde_json::{json, Value};

use coxcover::chambers::{realization_homology, verify_building, verify_chamber_system, Building, VerifyOptions};
use coxcover::cover::{build_ball, flag_nerve_check, verify_cover, BallOptions, CoveredBall};
use coxcover::coxeter::CoxeterMatrix;
use coxcover::io::{
    homology_json, BallJson, BuildingJson, ComplexJson, CoxeterJson, FoldingJson, ProductInput, ProductJson,
};
use coxcover::products::{product_cover_pipeline, product_matrix, square_cube_check, square_nerve};
use coxcover::simplicial::{punctured_check, reduced_homology, SimplicialComplex};
use coxcover::{Error, Verdict};

use crate::{read_input, BuildingCmd, CliError, Common, CoverCmd, CoxeterCmd, HomologyCmd, Input, Outcome, ProductCmd};

type Res = Result<Outcome, CliError>;

fn ok(fields: Value) -> Res {
    Ok(Outcome { fields, pass: true })
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Core(Error::InvalidArgument(msg.into()))
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Pass => json!({"pass": true}),
        Verdict::Fail(x) => json!({
            "pass": false,
            "axiom": x.axiom.code(),
            "chambers": x.chambers,
            "detail": x.detail,
        }),
    }
}

fn parse<T: for<'de> serde::Deserialize<'de>>(v: &Value) -> Result<T, CliError> {
    Ok(T::deserialize(v)?)
}

/// The Coxeter matrix of a bare matrix document, or the one carried by a
/// building or folding document.
fn coxeter_of(v: &Value) -> Result<CoxeterMatrix, CliError> {
    if v.get("generators").is_some() {
        return Ok(parse::<CoxeterJson>(v)?.load()?);
    }
    for key in ["coxeter", "thin", "target"] {
        if let Some(inner) = v.get(key) {
            return Ok(parse::<CoxeterJson>(inner)?.load()?);
        }
    }
    if v.get("incidence").is_some() {
        return Ok(parse::<BuildingJson>(v)?.load()?.coxeter);
    }
    Err(bad("input carries no Coxeter matrix"))
}

fn with_budget(m: CoxeterMatrix, common: &Common) -> CoxeterMatrix {
    match common.budget {
        Some(b) => m.with_budget(b),
        None => m,
    }
}

fn ball_options(common: &Common) -> BallOptions {
    let mut opts = BallOptions::default();
    if let Some(b) = common.budget {
        opts.class_cap = usize::try_from(b).unwrap_or(usize::MAX);
    }
    opts
}

fn chamber(b: &Building, label: Option<&String>) -> Result<usize, CliError> {
    match label {
        None => Ok(0),
        Some(l) => b.system().index_of(l).ok_or_else(|| bad(format!("unknown chamber {l:?}"))),
    }
}

fn ball_summary(ball: &CoveredBall) -> Value {
    json!({
        "classes": ball.len(),
        "radius": ball.radius(),
        "base": ball.downstairs().system().label(ball.base()),
        "sphere_sizes": ball.sphere_sizes(),
    })
}

pub fn coxeter(cmd: &CoxeterCmd, input: &Input) -> Res {
    match cmd {
        CoxeterCmd::Reduce { common, word } => {
            let m = with_budget(coxeter_of(&input.value)?, common);
            let labels: Vec<&str> = word.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let w = m.parse_word(&labels)?;
            let r = m.reduce(&w)?;
            ok(json!({"word": m.word_labels(&w), "reduced": m.word_labels(&r), "length": r.len()}))
        }
        CoxeterCmd::Spherical { common } => {
            let m = with_budget(coxeter_of(&input.value)?, common);
            let poset = m.spherical_poset();
            let subsets: Vec<Vec<String>> = poset.subsets().iter().map(|&t| m.set_labels(t)).collect();
            let maximal: Vec<Vec<String>> = poset.maximal().iter().map(|&t| m.set_labels(t)).collect();
            ok(json!({
                "count": subsets.len(),
                "spherical": subsets,
                "maximal": maximal,
                "finite": m.is_spherical(m.all()),
            }))
        }
        CoxeterCmd::Nerve { common } => {
            let m = with_budget(coxeter_of(&input.value)?, common);
            let nerve = m.nerve();
            ok(json!({"nerve": ComplexJson::of(&nerve), "f_vector": nerve.f_vector()}))
        }
    }
}

pub fn building(cmd: &BuildingCmd, input: &Input) -> Res {
    let bj: BuildingJson = parse(&input.value)?;
    match cmd {
        BuildingCmd::Verify { .. } => {
            let loaded = bj.load()?;
            let n = loaded.system.num_chambers();
            let opts = VerifyOptions::default();
            let v = if loaded.delta.is_some() {
                verify_building(&loaded.into_building()?, opts)?
            } else {
                verify_chamber_system(&loaded.system, &loaded.coxeter, opts)?
            };
            Ok(Outcome {
                pass: v.is_pass(),
                fields: json!({"chambers": n, "verdict": verdict_json(&v)}),
            })
        }
        BuildingCmd::Ball { base, radius, .. } => {
            let b = bj.load()?.into_building()?;
            let c = chamber(&b, base.as_ref())?;
            let ball = b.ball(c, *radius);
            ok(json!({"base": b.system().label(c), "radius": radius, "count": ball.len(), "ball": b.system().labels(&ball)}))
        }
        BuildingCmd::Realize { simplex, complex, .. } => {
            let b = bj.load()?.into_building()?;
            let l = match (simplex, complex) {
                (true, _) => SimplicialComplex::simplex(b.coxeter().generators().iter().cloned()),
                (false, Some(path)) => parse::<ComplexJson>(&read_input(path)?.value)?.load()?,
                (false, None) => b.coxeter().nerve(),
            };
            let r = coxcover::chambers::realize(&b, &l)?;
            let h = realization_homology(&b, &l)?;
            ok(json!({
                "chambers": b.num_chambers(),
                "f_vector": r.f_vector(),
                "homology": homology_json(&h),
                "betti": (0..=r.dim().unwrap_or(0).max(0)).map(|d| h.rank(d)).collect::<Vec<_>>(),
            }))
        }
    }
}

pub fn cover(cmd: &CoverCmd, input: &Input) -> Res {
    match cmd {
        CoverCmd::Build { common, radius, base, export } => {
            let fj: FoldingJson = parse(&input.value)?;
            let fd = fj.load()?;
            let b = fj
                .building
                .as_ref()
                .ok_or_else(|| bad("cover input needs a \"building\""))?
                .load()?
                .into_building()?;
            let c = chamber(&b, base.as_ref())?;
            let ball = build_ball(&fd, &b, c, *radius, ball_options(common))?;
            if let Some(path) = export {
                let text = serde_json::to_string_pretty(&BallJson::of(&ball))?;
                std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            }
            let mut fields = ball_summary(&ball);
            fields["deleted_edges"] = json!(fd.deleted_edges());
            fields["surgered"] = json!(CoxeterJson::of(fd.surgered()));
            let flag = flag_nerve_check(&fd);
            fields["flag_nerve"] = json!({
                "is_flag": flag.is_flag,
                "missing_simplex": flag.missing_simplex,
                "nerve_matches": flag.nerve_matches,
            });
            ok(fields)
        }
        CoverCmd::Verify { common, interior, radius, base } => {
            let ball = if input.value.get("classes").is_some() {
                parse::<BallJson>(&input.value)?.load()?
            } else {
                let fj: FoldingJson = parse(&input.value)?;
                let fd = fj.load()?;
                let b = fj
                    .building
                    .as_ref()
                    .ok_or_else(|| bad("cover input needs a \"building\""))?
                    .load()?
                    .into_building()?;
                let c = chamber(&b, base.as_ref())?;
                build_ball(&fd, &b, c, radius.unwrap_or(interior + 1), ball_options(common))?
            };
            let v = verify_cover(&ball, *interior)?;
            let mut fields = ball_summary(&ball);
            fields["interior"] = json!(interior);
            fields["verdict"] = verdict_json(&v);
            Ok(Outcome { pass: v.is_pass(), fields })
        }
    }
}

pub fn product(cmd: &ProductCmd, input: &Input) -> Res {
    let pj: ProductJson = parse(&input.value)?;
    let spec = pj.load()?;
    let m = product_matrix(&spec.spec())?;
    match cmd {
        ProductCmd::Assemble { .. } => ok(json!({
            "matrix": CoxeterJson::of(&m),
            "spherical_count": m.spherical_poset().len(),
            "finite": m.is_spherical(m.all()),
        })),
        ProductCmd::Nerve { .. } => {
            let nerve = m.nerve();
            let mut fields = json!({
                "nerve": ComplexJson::of(&nerve),
                "f_vector": nerve.f_vector(),
                "homology": homology_json(&reduced_homology(&nerve)),
            });
            if let ProductInput::Square(sq) = &spec {
                let sn = square_nerve(sq)?;
                fields["square"] = json!({
                    "embedded": ComplexJson::of(&sn.complex),
                    "matches_nerve": sn.matches_nerve(),
                    "whole_octahedral": sn.is_whole_octahedral(),
                });
                let finite = sq.factors().iter().all(|f| f.is_spherical(f.all()));
                if sq.factors().len() == 2 && finite {
                    fields["square"]["cube_faces"] = json!(square_cube_check(sq)?);
                }
            }
            ok(fields)
        }
        ProductCmd::Cover { common, radius, base, interior } => {
            let buildings = pj
                .load_buildings()?
                .ok_or_else(|| bad("product cover needs one building per factor"))?;
            let base_index = match base {
                None => 0,
                Some(label) => {
                    let product = Building::product(
                        &buildings
                            .iter()
                            .enumerate()
                            .map(|(i, b)| {
                                let labels =
                                    b.coxeter().generators().iter().map(|g| coxcover::products::namespaced(g, i)).collect();
                                b.relabeled(labels)
                            })
                            .collect::<Result<Vec<_>, _>>()?,
                    )?;
                    chamber(&product, Some(label))?
                }
            };
            let ball = product_cover_pipeline(&spec.spec(), &buildings, base_index, *radius, ball_options(common))?;
            let mut fields = ball_summary(&ball);
            let mut pass = true;
            if let Some(k) = interior {
                let v = verify_cover(&ball, *k)?;
                pass = v.is_pass();
                fields["interior"] = json!(k);
                fields["verdict"] = verdict_json(&v);
            }
            Ok(Outcome { fields, pass })
        }
    }
}

pub fn homology(cmd: &HomologyCmd, input: &Input) -> Res {
    let complex = parse::<ComplexJson>(&input.value)?.load()?;
    match cmd {
        HomologyCmd::Compute { .. } => {
            let h = reduced_homology(&complex);
            ok(json!({
                "f_vector": complex.f_vector(),
                "euler_characteristic": complex.euler_characteristic(),
                "homology": homology_json(&h),
            }))
        }
        HomologyCmd::Punctured { degree, .. } => {
            let report = punctured_check(&complex, *degree);
            let witnesses: Vec<Value> = report
                .witnesses
                .iter()
                .map(|w| json!({"simplex": w.simplex, "degrees": w.offending_degrees}))
                .collect();
            Ok(Outcome {
                pass: report.holds,
                fields: json!({
                    "ph": report.holds,
                    "degree": degree,
                    "simplices_checked": report.simplices_checked,
                    "witnesses": witnesses,
                }),
            })
        }
    }
}
