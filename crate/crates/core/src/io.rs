//! JSON formats. Matrices use `0` for `∞`; everything else refers to
//! generators, vertices and chambers by label.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chambers::{Building, ChamberSystem};
use crate::cover::{CoveredBall, FoldingData, GalleryClass};
use crate::coxeter::{CoxeterMatrix, Word};
use crate::error::{invalid, Error, Result};
use crate::products::{ProductSpec, SquareSpec};
use crate::simplicial::{HomologyReport, SimplicialComplex};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoxeterJson {
    pub generators: Vec<String>,
    pub matrix: Vec<Vec<u32>>,
}

impl CoxeterJson {
    pub fn load(&self) -> Result<CoxeterMatrix> {
        CoxeterMatrix::from_codes(self.generators.clone(), self.matrix.clone())
    }

    pub fn of(m: &CoxeterMatrix) -> Self {
        Self {
            generators: m.generators().to_vec(),
            matrix: m.codes(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexJson {
    pub fn load(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_labeled_facets(self.vertices.clone(), &self.facets)
    }

    pub fn of(c: &SimplicialComplex) -> Self {
        Self {
            vertices: c.vertices().to_vec(),
            facets: c.facets().iter().map(|f| c.face_labels(f)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceJson {
    pub points: Vec<String>,
    pub lines: Vec<String>,
    /// `[point, line]` pairs.
    pub flags: Vec<(String, String)>,
    /// The polygon order: 3 for projective planes.
    #[serde(default = "three")]
    pub m: u32,
}

fn three() -> u32 {
    3
}

/// A building given by chambers and panels, by an incidence geometry, or as
/// the thin building of a finite Coxeter matrix.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildingJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coxeter: Option<CoxeterJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chambers: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub panels: Option<BTreeMap<String, Vec<Vec<String>>>>,
    /// `delta[i][j]` is the Weyl distance from chamber `i` to chamber `j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Vec<Vec<String>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incidence: Option<IncidenceJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub thin: Option<CoxeterJson>,
}

/// A loaded building input: the chamber system and type, and the distance
/// table when one was supplied.
pub struct BuildingInput {
    pub system: ChamberSystem,
    pub coxeter: CoxeterMatrix,
    pub delta: Option<Vec<Vec<Word>>>,
}

impl BuildingInput {
    /// Uses the supplied distance table, or derives one from minimal galleries.
    pub fn into_building(self) -> Result<Building> {
        match self.delta {
            Some(rows) => Building::with_delta(self.system, self.coxeter, rows),
            None => Building::from_system(self.system, self.coxeter),
        }
    }
}

/// Element cap used when enumerating thin buildings from JSON.
pub const THIN_CUTOFF: usize = 100_000;

impl BuildingJson {
    pub fn load(&self) -> Result<BuildingInput> {
        let forms = [self.chambers.is_some(), self.incidence.is_some(), self.thin.is_some()];
        if forms.iter().filter(|&&f| f).count() != 1 {
            return Err(invalid("a building needs exactly one of chambers, incidence or thin"));
        }
        if let Some(m) = &self.thin {
            let b = Building::thin(&m.load()?, THIN_CUTOFF)?;
            return Ok(BuildingInput {
                system: b.system().clone(),
                coxeter: b.coxeter().clone(),
                delta: None,
            });
        }
        if let Some(inc) = &self.incidence {
            let point = |p: &str| inc.points.iter().position(|x| x == p);
            let line = |l: &str| inc.lines.iter().position(|x| x == l);
            let flags = inc
                .flags
                .iter()
                .map(|(p, l)| match (point(p), line(l)) {
                    (Some(a), Some(b)) => Ok((a, b)),
                    _ => Err(invalid(format!("unknown flag ({p}, {l})"))),
                })
                .collect::<Result<Vec<_>>>()?;
            let b = Building::from_incidence(&inc.points, &inc.lines, &flags, inc.m)?;
            return Ok(BuildingInput {
                system: b.system().clone(),
                coxeter: b.coxeter().clone(),
                delta: None,
            });
        }
        let coxeter = self
            .coxeter
            .as_ref()
            .ok_or_else(|| invalid("explicit buildings need a coxeter matrix"))?
            .load()?;
        let chambers = self.chambers.clone().expect("checked above");
        let panels_json = self.panels.as_ref().ok_or_else(|| invalid("explicit buildings need panels"))?;
        if let Some(g) = panels_json.keys().find(|g| coxeter.index_of(g).is_none()) {
            return Err(invalid(format!("panels given for unknown generator {g:?}")));
        }
        let mut panels = Vec::with_capacity(coxeter.rank());
        for g in coxeter.generators() {
            panels.push(
                panels_json
                    .get(g)
                    .ok_or_else(|| invalid(format!("no panels for generator {g:?}")))?
                    .clone(),
            );
        }
        let system = ChamberSystem::from_labels(chambers, coxeter.generators().to_vec(), &panels)?;
        let delta = match &self.delta {
            None => None,
            Some(rows) => Some(
                rows.iter()
                    .map(|row| row.iter().map(|w| coxeter.parse_word(w)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(BuildingInput { system, coxeter, delta })
    }

    /// Explicit form; the distance table is included when `with_delta`.
    pub fn of(b: &Building, with_delta: bool) -> Self {
        let sys = b.system();
        let panels = (0..b.rank())
            .map(|s| {
                let parts = sys.panels(s).iter().map(|p| sys.labels(p)).collect();
                (b.coxeter().label(s).to_string(), parts)
            })
            .collect();
        Self {
            coxeter: Some(CoxeterJson::of(b.coxeter())),
            chambers: Some(sys.chambers().to_vec()),
            panels: Some(panels),
            delta: with_delta.then(|| b.delta_rows()),
            incidence: None,
            thin: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FoldingJson {
    #[serde(rename = "L")]
    pub complex: ComplexJson,
    pub target: CoxeterJson,
    pub f: BTreeMap<String, String>,
    /// The building `C'` of the target type, when bundled.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub building: Option<BuildingJson>,
}

impl FoldingJson {
    pub fn load(&self) -> Result<FoldingData> {
        let pairs: Vec<(&String, &String)> = self.f.iter().collect();
        FoldingData::from_labels(self.complex.load()?, self.target.load()?, &pairs)
    }

    pub fn of(fd: &FoldingData, building: Option<&Building>) -> Self {
        let l = fd.complex();
        Self {
            complex: ComplexJson::of(l),
            target: CoxeterJson::of(fd.target()),
            f: (0..l.num_vertices())
                .map(|s| (l.vertices()[s].clone(), fd.target().label(fd.f(s)).to_string()))
                .collect(),
            building: building.map(|b| BuildingJson::of(b, false)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassJson {
    pub weyl: Vec<String>,
    pub gallery: Vec<String>,
    pub projection: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallJson {
    pub folding: FoldingJson,
    pub base: String,
    pub radius: usize,
    pub classes: Vec<ClassJson>,
    /// Class indices per generator.
    pub panels: BTreeMap<String, Vec<Vec<usize>>>,
}

impl BallJson {
    pub fn of(ball: &CoveredBall) -> Self {
        let m = ball.folding().surgered();
        let sys = ball.downstairs().system();
        Self {
            folding: FoldingJson::of(ball.folding(), Some(ball.downstairs())),
            base: sys.label(ball.base()).to_string(),
            radius: ball.radius(),
            classes: ball
                .classes()
                .iter()
                .map(|g| ClassJson {
                    weyl: m.word_labels(&g.weyl),
                    gallery: sys.labels(&g.chambers),
                    projection: sys.label(g.projection()).to_string(),
                })
                .collect(),
            panels: (0..m.rank())
                .map(|s| (m.label(s).to_string(), ball.panels(s).to_vec()))
                .collect(),
        }
    }

    pub fn load(&self) -> Result<CoveredBall> {
        let fd = self.folding.load()?;
        let cprime = self
            .folding
            .building
            .as_ref()
            .ok_or_else(|| invalid("ball export lacks the downstairs building"))?
            .load()?
            .into_building()?;
        let sys = cprime.system();
        let chamber = |c: &str| sys.index_of(c).ok_or_else(|| invalid(format!("unknown chamber {c:?}")));
        let base = chamber(&self.base)?;
        let m = fd.surgered();
        let mut classes = Vec::with_capacity(self.classes.len());
        for (i, c) in self.classes.iter().enumerate() {
            let weyl = m.parse_word(&c.weyl)?;
            let chambers = c.gallery.iter().map(|x| chamber(x)).collect::<Result<Vec<_>>>()?;
            if chambers.last() != Some(&chamber(&c.projection)?) {
                return Err(invalid(format!("class {i}: projection is not the end of the gallery")));
            }
            if m.reduce(&weyl)? != weyl {
                return Err(invalid(format!("class {i}: weyl word is not canonical")));
            }
            classes.push(GalleryClass { weyl, chambers });
        }
        let mut panels = Vec::with_capacity(m.rank());
        for g in m.generators() {
            panels.push(
                self.panels
                    .get(g)
                    .ok_or_else(|| invalid(format!("no panels for generator {g:?}")))?
                    .clone(),
            );
        }
        CoveredBall::from_parts(&fd, &cprime, base, self.radius, classes, panels)
    }
}

/// Product input: factors plus one of `relations`, `graph` or `square`, and
/// optionally one building per factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductJson {
    pub factors: Vec<CoxeterJson>,
    /// `"i,j"` → list of `[s, t]` with `s ∈ S_i`, `t ∈ S_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<BTreeMap<String, Vec<(String, String)>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub square: Option<SquareJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub buildings: Option<Vec<BuildingJson>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareJson {
    /// `"i,j"` → `θ_ij` as a label map. Missing entries default to matching
    /// generators by position.
    #[serde(default)]
    pub bijections: BTreeMap<String, BTreeMap<String, String>>,
}

pub enum ProductInput {
    Partial(ProductSpec),
    Square(SquareSpec),
}

impl ProductInput {
    pub fn spec(&self) -> ProductSpec {
        match self {
            ProductInput::Partial(p) => p.clone(),
            ProductInput::Square(s) => s.to_product_spec(),
        }
    }
}

fn pair_key(key: &str, p: usize) -> Result<(usize, usize)> {
    let parse = |x: &str| x.trim().parse::<usize>().ok().filter(|&i| i < p);
    match key.split_once(',') {
        Some((a, b)) => match (parse(a), parse(b)) {
            (Some(i), Some(j)) if i != j => Ok((i, j)),
            _ => Err(invalid(format!("bad factor pair {key:?}"))),
        },
        None => Err(invalid(format!("bad factor pair {key:?}"))),
    }
}

impl ProductJson {
    pub fn load(&self) -> Result<ProductInput> {
        let factors = self.factors.iter().map(CoxeterJson::load).collect::<Result<Vec<_>>>()?;
        let p = factors.len();
        let kinds = [self.relations.is_some(), self.graph.is_some(), self.square.is_some()];
        if kinds.iter().filter(|&&k| k).count() > 1 {
            return Err(invalid("give at most one of relations, graph or square"));
        }
        if let Some(g) = &self.graph {
            return Ok(ProductInput::Partial(ProductSpec::graph(factors, &g.edges)?));
        }
        if let Some(sq) = &self.square {
            if factors.is_empty() {
                return Err(invalid("a product needs at least one factor"));
            }
            let n = factors[0].rank();
            let mut family: Vec<Vec<Option<Vec<usize>>>> = vec![vec![None; p]; p];
            for (key, map) in &sq.bijections {
                let (i, j) = pair_key(key, p)?;
                let mut theta = vec![usize::MAX; n];
                for (a, b) in map {
                    let s = factors[i].index_of(a).ok_or_else(|| invalid(format!("unknown generator {a:?}")))?;
                    let t = factors[j].index_of(b).ok_or_else(|| invalid(format!("unknown generator {b:?}")))?;
                    theta[s] = t;
                }
                if theta.contains(&usize::MAX) {
                    return Err(invalid(format!("θ_{i}{j} is not defined on every generator")));
                }
                family[i][j] = Some(theta);
            }
            // complete from θ_0j (or the inverse of θ_j0), then check the rest
            let mut from_zero: Vec<Vec<usize>> = Vec::with_capacity(p);
            for j in 0..p {
                let theta = match (&family[0][j], &family[j][0]) {
                    (Some(t), _) => t.clone(),
                    (None, Some(inv)) => {
                        let mut t = vec![0; n];
                        for (s, &x) in inv.iter().enumerate() {
                            if x < n {
                                t[x] = s;
                            }
                        }
                        t
                    }
                    (None, None) => (0..n).collect(),
                };
                from_zero.push(theta);
            }
            let full: Vec<Vec<Vec<usize>>> = (0..p)
                .map(|i| {
                    (0..p)
                        .map(|j| match &family[i][j] {
                            Some(t) => t.clone(),
                            None => (0..n)
                                .map(|s| {
                                    let v = from_zero[i].iter().position(|&x| x == s).unwrap_or(s);
                                    from_zero[j].get(v).copied().unwrap_or(v)
                                })
                                .collect(),
                        })
                        .collect()
                })
                .collect();
            return Ok(ProductInput::Square(SquareSpec::from_family(factors, full)?));
        }
        let mut relations = Vec::new();
        for (key, pairs) in self.relations.iter().flatten() {
            let (i, j) = pair_key(key, p)?;
            let mut list = Vec::with_capacity(pairs.len());
            for (a, b) in pairs {
                let s = factors[i].index_of(a).ok_or_else(|| invalid(format!("unknown generator {a:?}")))?;
                let t = factors[j].index_of(b).ok_or_else(|| invalid(format!("unknown generator {b:?}")))?;
                list.push((s, t));
            }
            relations.push(((i, j), list));
        }
        Ok(ProductInput::Partial(ProductSpec::new(factors, relations)?))
    }

    pub fn load_buildings(&self) -> Result<Option<Vec<Building>>> {
        self.buildings
            .as_ref()
            .map(|bs| bs.iter().map(|b| b.load()?.into_building()).collect())
            .transpose()
    }
}

/// Reduced homology as `{"degree", "rank", "torsion"}` entries. Torsion
/// coefficients beyond `u64` are written as decimal strings.
pub fn homology_json(h: &HomologyReport) -> Value {
    Value::Array(
        h.degrees()
            .iter()
            .map(|d| {
                let torsion: Vec<Value> = d
                    .torsion
                    .iter()
                    .map(|t| t.to_u64().map_or_else(|| Value::String(t.to_string()), Value::from))
                    .collect();
                json!({"degree": d.degree, "rank": d.rank, "torsion": torsion})
            })
            .collect(),
    )
}

/// Parses any of the input documents above.
pub fn from_str<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(Error::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Order;

    #[test]
    fn coxeter_round_trip() {
        let text = r#"{"generators":["s","t"],"matrix":[[1,0],[0,1]]}"#;
        let cj: CoxeterJson = from_str(text).unwrap();
        let m = cj.load().unwrap();
        assert_eq!(m.m(0, 1), Order::Infinite);
        assert_eq!(CoxeterJson::of(&m), cj);
        let bad: CoxeterJson = from_str(r#"{"generators":["s","t"],"matrix":[[1,3],[2,1]]}"#).unwrap();
        assert!(bad.load().is_err());
        assert!(from_str::<CoxeterJson>("{").is_err());
    }

    #[test]
    fn building_forms_agree() {
        let thin: BuildingJson = from_str(r#"{"thin":{"generators":["s","t"],"matrix":[[1,3],[3,1]]}}"#).unwrap();
        let b = thin.load().unwrap().into_building().unwrap();
        let explicit = BuildingJson::of(&b, true);
        let text = serde_json::to_string(&explicit).unwrap();
        let again = from_str::<BuildingJson>(&text).unwrap().load().unwrap().into_building().unwrap();
        assert_eq!(again.system(), b.system());
        assert_eq!(again.delta_rows(), b.delta_rows());
    }

    #[test]
    fn ball_round_trip() {
        let b = Building::fano();
        let fd = FoldingData::new(SimplicialComplex::points(["s", "t"]), b.coxeter().clone(), vec![0, 1]).unwrap();
        let ball = crate::cover::build_ball(&fd, &b, 0, 3, Default::default()).unwrap();
        let exported = BallJson::of(&ball);
        let text = serde_json::to_string(&exported).unwrap();
        let loaded = from_str::<BallJson>(&text).unwrap().load().unwrap();
        assert_eq!(BallJson::of(&loaded), exported);
    }

    #[test]
    fn square_bijections() {
        let text = r#"{"factors":[{"generators":["a","b"],"matrix":[[1,3],[3,1]]},
                                  {"generators":["a","b"],"matrix":[[1,3],[3,1]]}],
                       "square":{"bijections":{"0,1":{"a":"b","b":"a"}}}}"#;
        let input = from_str::<ProductJson>(text).unwrap().load().unwrap();
        let m = crate::products::product_matrix(&input.spec()).unwrap();
        let ix = |l: &str| m.index_of(l).unwrap();
        assert_eq!(m.m(ix("a_0"), ix("b_1")), Order::Infinite);
        assert_eq!(m.m(ix("a_0"), ix("a_1")), Order::Finite(2));
    }
}
