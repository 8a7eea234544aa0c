//! Partial products of Coxeter systems and of buildings: direct, free, graph
//! and square products.
//!
//! Assembled generators are namespaced as `{label}_{i}` for factor `i`.

use std::collections::{BTreeMap, BTreeSet};

use crate::chambers::Building;
use crate::cover::{build_ball, BallOptions, CoveredBall, FoldingData};
use crate::coxeter::{CoxeterMatrix, GenSet, Order};
use crate::error::{invalid, Result};
use crate::simplicial::SimplicialComplex;

pub fn namespaced(label: &str, factor: usize) -> String {
    format!("{label}_{factor}")
}

/// Per factor pair `(i, j)`, the generator pairs `(s, t)` that commute.
pub type Relations = Vec<((usize, usize), Vec<(usize, usize)>)>;

/// Factors `(W_i, S_i)` with relations `R_ij ⊆ S_i × S_j` for `i < j`;
/// `R_ji` is the transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<CoxeterMatrix>,
    relations: BTreeMap<(usize, usize), BTreeSet<(usize, usize)>>,
}

impl ProductSpec {
    /// `relations` lists `((i, j), pairs)`; pairs are generator indices in
    /// `S_i × S_j`. When both `(i, j)` and `(j, i)` are given they must be
    /// transposes of each other.
    pub fn new(
        factors: Vec<CoxeterMatrix>,
        relations: Relations,
    ) -> Result<Self> {
        if factors.is_empty() {
            return Err(invalid("a product needs at least one factor"));
        }
        let p = factors.len();
        let mut given: BTreeMap<(usize, usize), BTreeSet<(usize, usize)>> = BTreeMap::new();
        for ((i, j), pairs) in relations {
            if i >= p || j >= p || i == j {
                return Err(invalid(format!("relation index ({i}, {j}) is invalid")));
            }
            let mut set = BTreeSet::new();
            for (s, t) in pairs {
                if s >= factors[i].rank() || t >= factors[j].rank() {
                    return Err(invalid(format!("pair ({s}, {t}) out of range in R_{i}{j}")));
                }
                set.insert((s, t));
            }
            if given.insert((i, j), set).is_some() {
                return Err(invalid(format!("R_{i}{j} given twice")));
            }
        }
        let mut relations = BTreeMap::new();
        for (&(i, j), set) in &given {
            let (a, b, norm): (usize, usize, BTreeSet<(usize, usize)>) = if i < j {
                (i, j, set.clone())
            } else {
                (j, i, set.iter().map(|&(s, t)| (t, s)).collect())
            };
            if let Some(prev) = relations.insert((a, b), norm.clone()) {
                if prev != norm {
                    return Err(invalid(format!("R_{j}{i} is not the transpose of R_{i}{j}")));
                }
            }
        }
        Ok(Self { factors, relations })
    }

    /// All `R_ij` empty.
    pub fn direct(factors: Vec<CoxeterMatrix>) -> Self {
        Self::new(factors, Vec::new()).expect("no relations")
    }

    /// All `R_ij = S_i × S_j`.
    pub fn free(factors: Vec<CoxeterMatrix>) -> Self {
        Self::graph(factors, &[]).expect("no edges")
    }

    /// Factors joined by an edge of the graph commute; all other cross pairs
    /// are free.
    pub fn graph(factors: Vec<CoxeterMatrix>, edges: &[(usize, usize)]) -> Result<Self> {
        let p = factors.len();
        let edge_set: BTreeSet<(usize, usize)> =
            edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        if let Some(&(a, b)) = edge_set.iter().find(|&&(a, b)| a == b || b >= p) {
            return Err(invalid(format!("graph edge ({a}, {b}) is invalid")));
        }
        let mut relations = Vec::new();
        for i in 0..p {
            for j in i + 1..p {
                if !edge_set.contains(&(i, j)) {
                    let pairs = (0..factors[i].rank())
                        .flat_map(|s| (0..factors[j].rank()).map(move |t| (s, t)))
                        .collect();
                    relations.push(((i, j), pairs));
                }
            }
        }
        Self::new(factors, relations)
    }

    pub fn factors(&self) -> &[CoxeterMatrix] {
        &self.factors
    }

    /// `R_ij` for any `i ≠ j`.
    pub fn relation(&self, i: usize, j: usize) -> BTreeSet<(usize, usize)> {
        if i < j {
            self.relations.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.relations
                .get(&(j, i))
                .map(|r| r.iter().map(|&(s, t)| (t, s)).collect())
                .unwrap_or_default()
        }
    }

    fn related(&self, i: usize, s: usize, j: usize, t: usize) -> bool {
        if i < j {
            self.relations.get(&(i, j)).is_some_and(|r| r.contains(&(s, t)))
        } else {
            self.relations.get(&(j, i)).is_some_and(|r| r.contains(&(t, s)))
        }
    }

    /// `(factor, local generator)` of each assembled generator.
    pub fn owners(&self) -> Vec<(usize, usize)> {
        self.factors
            .iter()
            .enumerate()
            .flat_map(|(i, f)| (0..f.rank()).map(move |s| (i, s)))
            .collect()
    }

    pub fn generators(&self) -> Vec<String> {
        self.owners()
            .into_iter()
            .map(|(i, s)| namespaced(self.factors[i].label(s), i))
            .collect()
    }

    /// Splits an assembled subset into one local subset per factor.
    pub fn decompose(&self, t: GenSet) -> Vec<GenSet> {
        let owners = self.owners();
        let mut parts = vec![GenSet::empty(); self.factors.len()];
        for g in t.iter() {
            let (i, s) = owners[g];
            parts[i].insert(s);
        }
        parts
    }
}

/// Block diagonal within factors, `∞` on pairs in `R_ij`, `2` otherwise.
pub fn product_matrix(spec: &ProductSpec) -> Result<CoxeterMatrix> {
    let owners = spec.owners();
    CoxeterMatrix::from_fn(spec.generators(), |a, b| {
        let ((i, s), (j, t)) = (owners[a], owners[b]);
        if i == j {
            spec.factors[i].m(s, t)
        } else if spec.related(i, s, j, t) {
            Order::Infinite
        } else {
            Order::Finite(2)
        }
    })
}

/// Spherical in the product iff every part is spherical in its factor and
/// no cross pair is related.
pub fn product_spherical_check(spec: &ProductSpec, t: GenSet) -> bool {
    let parts = spec.decompose(t);
    let local = parts.iter().zip(&spec.factors).all(|(&p, f)| f.is_spherical(p));
    let cross = (0..parts.len()).all(|i| {
        (i + 1..parts.len()).all(|j| {
            parts[i]
                .iter()
                .all(|s| parts[j].iter().all(|u| !spec.related(i, s, j, u)))
        })
    });
    local && cross
}

/// Equinumerous factors with a compatible family of bijections
/// `θ_ij: S_i → S_j`, stored as `θ_0j` for each `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareSpec {
    factors: Vec<CoxeterMatrix>,
    theta: Vec<Vec<usize>>,
}

impl SquareSpec {
    /// `theta[j][v]` is the image of generator `v` of factor 0 in factor `j`.
    pub fn new(factors: Vec<CoxeterMatrix>, theta: Vec<Vec<usize>>) -> Result<Self> {
        if factors.is_empty() {
            return Err(invalid("a product needs at least one factor"));
        }
        let n = factors[0].rank();
        if factors.iter().any(|f| f.rank() != n) {
            return Err(invalid("square product factors must have equal rank"));
        }
        if theta.len() != factors.len() {
            return Err(invalid("one bijection per factor is required"));
        }
        for (j, map) in theta.iter().enumerate() {
            let mut sorted = map.clone();
            sorted.sort_unstable();
            if sorted != (0..n).collect::<Vec<_>>() {
                return Err(invalid(format!("θ_0{j} is not a bijection")));
            }
        }
        if theta[0] != (0..n).collect::<Vec<_>>() {
            return Err(invalid("θ_00 must be the identity"));
        }
        Ok(Self { factors, theta })
    }

    /// Generators matched by position.
    pub fn positional(factors: Vec<CoxeterMatrix>) -> Result<Self> {
        let n = factors.first().map_or(0, CoxeterMatrix::rank);
        let theta = vec![(0..n).collect(); factors.len()];
        Self::new(factors, theta)
    }

    /// From a full family `family[i][j] = θ_ij`, checked for compatibility:
    /// `θ_ii = id` and `θ_jk ∘ θ_ij = θ_ik`.
    pub fn from_family(factors: Vec<CoxeterMatrix>, family: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let p = factors.len();
        if family.len() != p || family.iter().any(|row| row.len() != p) {
            return Err(invalid("the bijection family must be indexed by pairs of factors"));
        }
        let n = factors.first().map_or(0, CoxeterMatrix::rank);
        for i in 0..p {
            for j in 0..p {
                if family[i][j].len() != n || family[i][j].iter().any(|&x| x >= n) {
                    return Err(invalid(format!("θ_{i}{j} is not a map of the generators")));
                }
            }
            if family[i][i] != (0..n).collect::<Vec<_>>() {
                return Err(invalid(format!("θ_{i}{i} is not the identity")));
            }
        }
        for i in 0..p {
            for j in 0..p {
                for k in 0..p {
                    if (0..n).any(|s| family[j][k][family[i][j][s]] != family[i][k][s]) {
                        return Err(invalid(format!("θ_{j}{k} ∘ θ_{i}{j} differs from θ_{i}{k}")));
                    }
                }
            }
        }
        let theta = family[0].clone();
        Self::new(factors, theta)
    }

    pub fn factors(&self) -> &[CoxeterMatrix] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors[0].rank()
    }

    /// `θ_ij(s)`.
    pub fn theta(&self, i: usize, j: usize, s: usize) -> usize {
        let v = self.theta[i].iter().position(|&x| x == s).expect("bijection");
        self.theta[j][v]
    }

    /// `R_ij` is the graph of `θ_ij`.
    pub fn to_product_spec(&self) -> ProductSpec {
        let p = self.factors.len();
        let mut relations = Vec::new();
        for i in 0..p {
            for j in i + 1..p {
                let pairs = (0..self.rank()).map(|s| (s, self.theta(i, j, s))).collect();
                relations.push(((i, j), pairs));
            }
        }
        ProductSpec::new(self.factors.clone(), relations).expect("θ relations are well formed")
    }
}

/// `∞` exactly on `θ`-matched cross pairs, `2` on other cross pairs.
pub fn square_matrix(spec: &SquareSpec) -> Result<CoxeterMatrix> {
    product_matrix(&spec.to_product_spec())
}

/// A square-product nerve drawn inside the octahedral complex `O(p, V)`,
/// `V = S_0`, with vertex `(v, g)` labelled `v:g`.
#[derive(Clone, Debug)]
pub struct SquareNerve {
    /// Faces are the images of tuples `(T_0, ..., T_p)` with each `T_i`
    /// spherical in its factor and the `θ_i0(T_i)` pairwise disjoint.
    pub complex: SimplicialComplex,
    pub octahedral: SimplicialComplex,
    /// The nerve of the assembled matrix, relabelled along the embedding.
    pub nerve_image: SimplicialComplex,
}

impl SquareNerve {
    pub fn matches_nerve(&self) -> bool {
        self.complex.same_labeled(&self.nerve_image)
    }

    pub fn is_whole_octahedral(&self) -> bool {
        self.complex.same_labeled(&self.octahedral)
    }

    pub fn dim(&self) -> Option<isize> {
        self.complex.dim()
    }
}

pub fn square_nerve(spec: &SquareSpec) -> Result<SquareNerve> {
    let p = spec.factors.len() - 1;
    let base: Vec<&str> = spec.factors[0].generators().iter().map(String::as_str).collect();
    let octahedral = SimplicialComplex::octahedral(p, &base)?;
    let vertex = |i: usize, s: usize| format!("{}:{}", base[spec.theta(i, 0, s)], i);

    // faces from the per-factor description
    let local: Vec<Vec<GenSet>> = spec.factors.iter().map(|f| f.spherical_poset().subsets().to_vec()).collect();
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut tuple = vec![GenSet::empty(); spec.factors.len()];
    fn walk(
        spec: &SquareSpec,
        local: &[Vec<GenSet>],
        i: usize,
        used: GenSet,
        tuple: &mut Vec<GenSet>,
        out: &mut Vec<Vec<String>>,
        vertex: &dyn Fn(usize, usize) -> String,
    ) {
        if i == local.len() {
            let labels: Vec<String> = tuple
                .iter()
                .enumerate()
                .flat_map(|(k, t)| t.iter().map(move |s| vertex(k, s)))
                .collect();
            out.push(labels);
            return;
        }
        for &t in &local[i] {
            let u: GenSet = t.iter().map(|s| spec.theta(i, 0, s)).collect();
            if u.intersection(used).is_empty() {
                tuple[i] = t;
                walk(spec, local, i + 1, used.union(u), tuple, out, vertex);
            }
        }
    }
    walk(spec, &local, 0, GenSet::empty(), &mut tuple, &mut facets, &vertex);
    let complex = SimplicialComplex::from_labeled_facets(octahedral.vertices().to_vec(), &facets)?;

    let assembled = square_matrix(spec)?;
    let owners = spec.to_product_spec().owners();
    let nerve = assembled.nerve();
    let relabel: Vec<String> = owners.iter().map(|&(i, s)| vertex(i, s)).collect();
    let nerve_facets: Vec<Vec<String>> = nerve
        .facets()
        .iter()
        .map(|f| f.iter().map(|&v| relabel[v].clone()).collect())
        .collect();
    let nerve_image = SimplicialComplex::from_labeled_facets(octahedral.vertices().to_vec(), &nerve_facets)?;
    Ok(SquareNerve {
        complex,
        octahedral,
        nerve_image,
    })
}

/// For two finite factors: the spherical subsets of the square product
/// correspond to the faces of the `n`-cube, `v ∈ T_0` to coordinate 0,
/// `v ∈ T_1` to coordinate 1 and `v` in neither to a free coordinate, and
/// inclusion of subsets reverses inclusion of faces. Checks that this map is
/// a bijection onto all `3^n` faces and an order anti-isomorphism.
pub fn square_cube_check(spec: &SquareSpec) -> Result<bool> {
    if spec.factors.len() != 2 {
        return Err(invalid("the cube comparison needs exactly two factors"));
    }
    let n = spec.rank();
    let assembled = square_matrix(spec)?;
    let poset = assembled.spherical_poset();
    let owners = spec.to_product_spec().owners();
    // face word: 0, 1, or 2 for a free coordinate
    let face = |t: GenSet| -> Vec<u8> {
        let mut word = vec![2u8; n];
        for g in t.iter() {
            let (i, s) = owners[g];
            word[spec.theta(i, 0, s)] = i as u8;
        }
        word
    };
    let words: Vec<Vec<u8>> = poset.subsets().iter().map(|&t| face(t)).collect();
    let distinct: BTreeSet<&Vec<u8>> = words.iter().collect();
    if words.len() != 3usize.pow(n as u32) || distinct.len() != words.len() {
        return Ok(false);
    }
    // face a ⊆ face b iff each coordinate of a equals b's or b's is free
    let contained = |a: &[u8], b: &[u8]| a.iter().zip(b).all(|(&x, &y)| x == y || y == 2);
    let subsets = poset.subsets();
    for (x, &t) in subsets.iter().enumerate() {
        for (y, &u) in subsets.iter().enumerate() {
            if t.is_subset(u) != contained(&words[y], &words[x]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The building of a partial product: `C'` is the product of the factor
/// buildings, `L` the nerve of the assembled system and `f` the identity.
pub fn product_cover_pipeline(
    spec: &ProductSpec,
    buildings: &[Building],
    base: usize,
    radius: usize,
    opts: BallOptions,
) -> Result<CoveredBall> {
    if buildings.len() != spec.factors.len() {
        return Err(invalid(format!(
            "{} buildings for {} factors",
            buildings.len(),
            spec.factors.len()
        )));
    }
    let mut renamed = Vec::with_capacity(buildings.len());
    for (i, (b, f)) in buildings.iter().zip(&spec.factors).enumerate() {
        if b.coxeter() != f {
            return Err(invalid(format!("building {i} does not have the type of factor {i}")));
        }
        let labels = f.generators().iter().map(|g| namespaced(g, i)).collect();
        renamed.push(b.relabeled(labels)?);
    }
    let cprime = Building::product(&renamed)?;
    let assembled = product_matrix(spec)?;
    let nerve = assembled.nerve();
    let f = (0..assembled.rank()).collect();
    let fd = FoldingData::new(nerve, cprime.coxeter().clone(), f)?;
    build_ball(&fd, &cprime, base, radius, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Order;

    fn i2(m: u32) -> CoxeterMatrix {
        CoxeterMatrix::dihedral(Order::from_code(m))
    }

    fn a1(label: &str) -> CoxeterMatrix {
        CoxeterMatrix::type_a(1).relabeled(vec![label.into()]).unwrap()
    }

    #[test]
    fn direct_free_and_graph_products() {
        let direct = product_matrix(&ProductSpec::direct(vec![i2(3), i2(4)])).unwrap();
        assert_eq!(direct.generators(), ["s_0", "t_0", "s_1", "t_1"]);
        assert_eq!(direct.m(0, 2), Order::Finite(2));
        assert_eq!(direct.m(2, 3), Order::Finite(4));

        let free = product_matrix(&ProductSpec::free(vec![i2(3), i2(4)])).unwrap();
        assert!((0..2).all(|a| (2..4).all(|b| free.m(a, b) == Order::Infinite)));

        let g = ProductSpec::graph(vec![a1("x"), a1("y"), a1("z")], &[(0, 1)]).unwrap();
        let m = product_matrix(&g).unwrap();
        assert_eq!(m.m(0, 1), Order::Finite(2));
        assert_eq!(m.m(0, 2), Order::Infinite);
        assert_eq!(m.m(1, 2), Order::Infinite);
        // right-angled specialization
        let ra = CoxeterMatrix::right_angled(["x_0", "y_1", "z_2"], &[(0, 1)]).unwrap();
        assert_eq!(m, ra);
    }

    #[test]
    fn transpose_is_validated() {
        let ok = ProductSpec::new(
            vec![i2(3), i2(3)],
            vec![((0, 1), vec![(0, 1)]), ((1, 0), vec![(1, 0)])],
        );
        assert!(ok.is_ok());
        let bad = ProductSpec::new(
            vec![i2(3), i2(3)],
            vec![((0, 1), vec![(0, 1)]), ((1, 0), vec![(0, 1)])],
        );
        assert!(bad.is_err());
        assert!(ProductSpec::new(vec![i2(3)], vec![((0, 0), vec![])]).is_err());
    }

    #[test]
    fn square_matrix_examples() {
        let sq = SquareSpec::positional(vec![i2(3), i2(3)]).unwrap();
        let m = square_matrix(&sq).unwrap();
        let ix = |l: &str| m.index_of(l).unwrap();
        assert_eq!(m.m(ix("s_0"), ix("s_1")), Order::Infinite);
        assert_eq!(m.m(ix("t_0"), ix("t_1")), Order::Infinite);
        assert_eq!(m.m(ix("s_0"), ix("t_1")), Order::Finite(2));
        assert_eq!(m.spherical_poset().len(), 9);

        let single = square_matrix(&SquareSpec::positional(vec![i2(5)]).unwrap()).unwrap();
        assert_eq!(single.m(0, 1), Order::Finite(5));

        let rank_one = square_matrix(&SquareSpec::positional(vec![a1("x"), a1("x")]).unwrap()).unwrap();
        assert_eq!(rank_one.m(0, 1), Order::Infinite);
    }

    #[test]
    fn incompatible_family_is_rejected() {
        let id = vec![0, 1];
        let swap = vec![1, 0];
        let fam = vec![
            vec![id.clone(), swap.clone(), id.clone()],
            vec![swap.clone(), id.clone(), swap.clone()],
            vec![id.clone(), id.clone(), id.clone()],
        ];
        assert!(SquareSpec::from_family(vec![i2(3), i2(3), i2(3)], fam).is_err());
        let good = vec![
            vec![id.clone(), swap.clone(), id.clone()],
            vec![swap.clone(), id.clone(), swap.clone()],
            vec![id.clone(), swap.clone(), id.clone()],
        ];
        let sq = SquareSpec::from_family(vec![i2(3), i2(3), i2(3)], good).unwrap();
        assert_eq!(sq.theta(1, 2, 0), 1);
        assert_eq!(sq.theta(0, 2, 0), 0);
    }

    #[test]
    fn spherical_check_agrees_with_classification() {
        let specs = vec![
            ProductSpec::direct(vec![i2(3), i2(4)]),
            ProductSpec::free(vec![i2(3), i2(0)]),
            SquareSpec::positional(vec![i2(3), i2(5)]).unwrap().to_product_spec(),
            ProductSpec::new(vec![CoxeterMatrix::type_a(3), i2(4)], vec![((0, 1), vec![(1, 0), (2, 1)])]).unwrap(),
        ];
        for spec in specs {
            let m = product_matrix(&spec).unwrap();
            for t in m.all().subsets() {
                assert_eq!(product_spherical_check(&spec, t), m.is_spherical(t));
            }
        }
    }

    #[test]
    fn square_nerves() {
        let finite = SquareSpec::positional(vec![i2(3), i2(3)]).unwrap();
        let sn = square_nerve(&finite).unwrap();
        assert!(sn.matches_nerve() && sn.is_whole_octahedral());

        let d_inf = SquareSpec::positional(vec![i2(0), i2(0)]).unwrap();
        let sn = square_nerve(&d_inf).unwrap();
        assert!(sn.matches_nerve());
        assert!(!sn.is_whole_octahedral());
        // only the two off-diagonal cross pairs commute
        assert_eq!(sn.complex.f_vector(), vec![4, 2]);

        let three = SquareSpec::positional(vec![CoxeterMatrix::type_a(3); 3]).unwrap();
        let sn = square_nerve(&three).unwrap();
        assert!(sn.matches_nerve() && sn.is_whole_octahedral());
        assert_eq!(sn.dim(), Some(2));
    }

    #[test]
    fn cube_comparison() {
        for n in 2..=3 {
            let spec = SquareSpec::positional(vec![CoxeterMatrix::type_a(n); 2]).unwrap();
            assert!(square_cube_check(&spec).unwrap());
        }
        let infinite = SquareSpec::positional(vec![i2(0), i2(0)]).unwrap();
        assert!(!square_cube_check(&infinite).unwrap());
    }

    #[test]
    fn square_product_cover_counts() {
        let hex = Building::thin(&i2(3), 100).unwrap();
        let spec = SquareSpec::positional(vec![i2(3), i2(3)]).unwrap().to_product_spec();
        let ball = product_cover_pipeline(&spec, &[hex.clone(), hex], 0, 2, BallOptions::default()).unwrap();
        assert_eq!(ball.sphere_sizes(), vec![1, 4, 10]);
        // oracle: distinct reduced words of length 2 in the assembled group
        let w = product_matrix(&spec).unwrap();
        let mut length_two = BTreeSet::new();
        for a in 0..w.rank() {
            for b in 0..w.rank() {
                let r = w.reduce(&crate::coxeter::Word::from(vec![a, b])).unwrap();
                if r.len() == 2 {
                    length_two.insert(r);
                }
            }
        }
        assert_eq!(length_two.len(), 10);
    }

    #[test]
    fn free_product_tree() {
        let two = Building::thin(&a1("a"), 10).unwrap();
        let three = Building::rank_one("b", 3);
        let spec = ProductSpec::free(vec![a1("a"), a1("b")]);
        let ball = product_cover_pipeline(&spec, &[two, three], 0, 3, BallOptions::default()).unwrap();
        assert_eq!(ball.sphere_sizes(), vec![1, 3, 4, 6]);
    }

    #[test]
    fn complete_graph_product_is_trivial_cover() {
        let hex = Building::thin(&i2(3), 100).unwrap();
        let two = Building::thin(&a1("a"), 10).unwrap();
        let spec = ProductSpec::graph(vec![i2(3), a1("a")], &[(0, 1)]).unwrap();
        let ball = product_cover_pipeline(&spec, &[hex, two], 0, 4, BallOptions::default()).unwrap();
        assert_eq!(ball.len(), 12);
    }
}
