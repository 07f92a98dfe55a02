//! Filtrations of hypergraphs, persistent embedded homology via the rank
//! invariant, and interval decompositions.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chainalg::{Ambient, Field};
use crate::embedded::{infimum_chain_in, HomologyBasis, HomologyMap};
use crate::error::{Error, Result};
use crate::hypergraph::{mv_condition, Hypergraph, Vertex};
use crate::mayer_vietoris::{field_mul, matrices_equal, mayer_vietoris_row_in, row_maps, ExactnessPosition};
use crate::rational::sqrt_upper;

/// A symmetric distance function on a finite vertex set with exact values.
///
/// Point clouds store squared Euclidean distances so that comparisons with
/// a radius stay exact (`d < r ⇔ d² < r²`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    vertices: Vec<Vertex>,
    values: Vec<Vec<BigRational>>,
    squared: bool,
}

impl DistanceMatrix {
    /// Validates symmetry, a zero diagonal and positive off-diagonal values.
    /// The triangle inequality is not required.
    pub fn new(vertices: Vec<Vertex>, values: Vec<Vec<BigRational>>) -> Result<Self> {
        Self::build(vertices, values, false)
    }

    fn build(vertices: Vec<Vertex>, values: Vec<Vec<BigRational>>, squared: bool) -> Result<Self> {
        let n = vertices.len();
        if values.len() != n || values.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidDistance("matrix is not square over the vertex list".into()));
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(Error::InvalidDistance("duplicate vertex".into()));
        }
        for i in 0..n {
            if !values[i][i].is_zero() {
                return Err(Error::InvalidDistance(format!("d({0}, {0}) is not 0", vertices[i])));
            }
            for j in 0..n {
                if values[i][j] != values[j][i] {
                    return Err(Error::AsymmetricDistance(
                        vertices[i].to_string(),
                        vertices[j].to_string(),
                    ));
                }
                if i != j && !values[i][j].is_positive() {
                    return Err(Error::InvalidDistance(format!(
                        "d({}, {}) must be positive",
                        vertices[i], vertices[j]
                    )));
                }
            }
        }
        // Store in canonical vertex order.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let values = order
            .iter()
            .map(|&i| order.iter().map(|&j| values[i][j].clone()).collect())
            .collect();
        Ok(DistanceMatrix {
            vertices: order.iter().map(|&i| vertices[i].clone()).collect(),
            values,
            squared,
        })
    }

    /// Euclidean distances between labelled points with rational
    /// coordinates.
    pub fn from_points(points: &[(Vertex, Vec<BigRational>)]) -> Result<Self> {
        if let Some(d) = points.first().map(|p| p.1.len()) {
            if points.iter().any(|p| p.1.len() != d) {
                return Err(Error::InvalidDistance("points have different dimensions".into()));
            }
        }
        let values = points
            .iter()
            .map(|(_, a)| {
                points
                    .iter()
                    .map(|(_, b)| {
                        a.iter()
                            .zip(b)
                            .map(|(x, y)| (x - y) * (x - y))
                            .fold(BigRational::zero(), |acc, t| acc + t)
                    })
                    .collect()
            })
            .collect();
        Self::build(points.iter().map(|p| p.0.clone()).collect(), values, true)
    }

    /// Every pair at the same distance.
    pub fn uniform(vertices: &[Vertex], d: BigRational) -> Result<Self> {
        let n = vertices.len();
        let values = (0..n)
            .map(|i| (0..n).map(|j| if i == j { BigRational::zero() } else { d.clone() }).collect())
            .collect();
        Self::new(vertices.to_vec(), values)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    fn index(&self, v: &Vertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Whether the stored values are squared distances.
    pub fn is_squared(&self) -> bool {
        self.squared
    }

    /// The stored value for a pair (a squared distance for point clouds).
    pub fn raw(&self, u: &Vertex, v: &Vertex) -> Option<&BigRational> {
        Some(&self.values[self.index(u)?][self.index(v)?])
    }

    /// d(u, v) < r.
    pub fn closer_than(&self, u: &Vertex, v: &Vertex, r: &BigRational) -> bool {
        let d = self.raw(u, v).expect("vertex has a distance");
        if self.squared {
            *d < r * r
        } else {
            d < r
        }
    }

    fn check_covers(&self, h: &Hypergraph) -> Result<()> {
        match h.universe().iter().find(|v| self.index(v).is_none()) {
            Some(v) => Err(Error::InvalidDistance(format!("no distances for vertex {v}"))),
            None => Ok(()),
        }
    }

    /// Sorted distinct positive raw values.
    fn distinct_values(&self) -> Vec<BigRational> {
        let mut vals: Vec<BigRational> = self
            .values
            .iter()
            .flatten()
            .filter(|x| x.is_positive())
            .cloned()
            .collect();
        vals.sort();
        vals.dedup();
        vals
    }

    /// Critical radii: a radius below every distance, then each distinct
    /// pairwise distance plus ε. The default ε is 1/1000 of the smallest
    /// positive gap between consecutive distances (counting the gap from 0).
    pub fn critical_radii(&self, epsilon: Option<BigRational>) -> Vec<BigRational> {
        // Exact distances, or rational upper bounds on square roots.
        let dists: Vec<BigRational> = self
            .distinct_values()
            .iter()
            .map(|q| if self.squared { sqrt_upper(q) } else { q.clone() })
            .collect();
        let Some(first) = dists.first() else {
            return vec![BigRational::new(1.into(), 1000.into())];
        };
        let eps = epsilon.unwrap_or_else(|| {
            let mut gap = first.clone();
            for w in dists.windows(2) {
                let g = &w[1] - &w[0];
                if g.is_positive() && g < gap {
                    gap = g;
                }
            }
            gap / BigRational::from_integer(1000.into())
        });
        let mut radii = vec![eps.clone()];
        radii.extend(dists.iter().map(|d| d + &eps));
        radii.dedup();
        radii
    }

    /// Largest pairwise distance bound (an upper bound for point clouds).
    pub fn max_distance(&self) -> BigRational {
        let m = self.distinct_values().pop().unwrap_or_else(BigRational::zero);
        if self.squared {
            sqrt_upper(&m)
        } else {
            m
        }
    }
}

/// Hyperedges of `h` whose vertices are pairwise closer than `r`.
pub fn hypergraph_at(h: &Hypergraph, dist: &DistanceMatrix, r: &BigRational) -> Hypergraph {
    Hypergraph::from_edges(
        h.edges()
            .filter(|e| {
                let vs = e.vertices();
                (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| dist.closer_than(&vs[i], &vs[j], r)))
            })
            .cloned(),
    )
}

/// Whether the parameter grows (metric radii) or shrinks (superlevel
/// thresholds) along the nested sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParameterOrder {
    Increasing,
    Decreasing,
}

/// A nested sequence of sub-hypergraphs of a base hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    base: Hypergraph,
    order: ParameterOrder,
    steps: Vec<(BigRational, Hypergraph)>,
}

impl Filtration {
    pub fn new(base: Hypergraph, order: ParameterOrder, steps: Vec<(BigRational, Hypergraph)>) -> Result<Self> {
        for w in steps.windows(2) {
            let monotone = match order {
                ParameterOrder::Increasing => w[0].0 < w[1].0,
                ParameterOrder::Decreasing => w[0].0 > w[1].0,
            };
            if !monotone {
                return Err(Error::NonIncreasingRadii);
            }
            if !w[0].1.is_subset(&w[1].1) {
                return Err(Error::PreconditionViolated("filtration steps are not nested".into()));
            }
        }
        if let Some((_, last)) = steps.last() {
            if !last.is_subset(&base) {
                return Err(Error::PreconditionViolated("filtration leaves its base hypergraph".into()));
            }
        }
        Ok(Filtration { base, order, steps })
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn order(&self) -> ParameterOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn parameters(&self) -> Vec<BigRational> {
        self.steps.iter().map(|s| s.0.clone()).collect()
    }

    pub fn step(&self, i: usize) -> &Hypergraph {
        &self.steps[i].1
    }

    pub fn steps(&self) -> &[(BigRational, Hypergraph)] {
        &self.steps
    }
}

fn check_radii(radii: &[BigRational]) -> Result<()> {
    if radii.iter().any(|r| !r.is_positive()) || radii.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasingRadii);
    }
    Ok(())
}

/// 𝓗(r) = 𝓗 ∩ K(𝓗, r) for each radius, with strict `d < r`.
pub fn metric_filtration(h: &Hypergraph, dist: &DistanceMatrix, radii: &[BigRational]) -> Result<Filtration> {
    check_radii(radii)?;
    dist.check_covers(h)?;
    let steps = radii.iter().map(|r| (r.clone(), hypergraph_at(h, dist, r))).collect();
    Filtration::new(h.clone(), ParameterOrder::Increasing, steps)
}

/// Values φ(v) ∈ [0, 1] for every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexValues(BTreeMap<Vertex, BigRational>);

impl VertexValues {
    pub fn new(values: BTreeMap<Vertex, BigRational>) -> Result<Self> {
        let one = BigRational::from_integer(1.into());
        for (v, x) in &values {
            if x.is_negative() || *x > one {
                return Err(Error::ValueOutOfRange(v.to_string()));
            }
        }
        Ok(VertexValues(values))
    }

    pub fn constant(vertices: &[Vertex], value: BigRational) -> Result<Self> {
        Self::new(vertices.iter().map(|v| (v.clone(), value.clone())).collect())
    }

    pub fn get(&self, v: &Vertex) -> Option<&BigRational> {
        self.0.get(v)
    }

    pub fn map(&self) -> &BTreeMap<Vertex, BigRational> {
        &self.0
    }

    /// Fails unless every vertex of `h` has a value.
    pub fn check_covers(&self, h: &Hypergraph) -> Result<()> {
        match h.universe().iter().find(|v| !self.0.contains_key(*v)) {
            Some(v) => Err(Error::InvalidValues(format!("no value for vertex {v}"))),
            None => Ok(()),
        }
    }

    /// Distinct values together with 0, in decreasing order.
    pub fn critical_thresholds(&self) -> Vec<BigRational> {
        let mut t: Vec<BigRational> = self.0.values().cloned().collect();
        t.push(BigRational::zero());
        t.sort();
        t.dedup();
        t.reverse();
        t
    }

    /// The same multiset of values assigned to the vertices in `order`.
    pub fn reassigned(&self, values: &[BigRational]) -> VertexValues {
        VertexValues(self.0.keys().cloned().zip(values.iter().cloned()).collect())
    }

    pub fn values(&self) -> Vec<BigRational> {
        self.0.values().cloned().collect()
    }
}

/// Hyperedges all of whose vertices have φ(v) ≥ t.
pub fn superlevel_at(h: &Hypergraph, phi: &VertexValues, t: &BigRational) -> Hypergraph {
    h.restrict(|v| phi.get(v).is_some_and(|x| x >= t))
}

/// 𝓗(t) = Δ[v : φ(v) ≥ t] ∩ 𝓗 at the critical thresholds, in decreasing t
/// so that the steps grow.
pub fn sublevel_filtration(h: &Hypergraph, phi: &VertexValues) -> Result<Filtration> {
    phi.check_covers(h)?;
    let steps = phi
        .critical_thresholds()
        .into_iter()
        .map(|t| {
            let step = superlevel_at(h, phi, &t);
            (t, step)
        })
        .collect();
    Filtration::new(h.clone(), ParameterOrder::Decreasing, steps)
}

/// Homology bases of every step of a filtration in one degree, computed in
/// the common ambient complex of the base hypergraph.
#[derive(Clone, Debug)]
pub struct PersistenceModule {
    degree: usize,
    field: Field,
    ambient: Arc<Ambient>,
    bases: Vec<HomologyBasis>,
}

impl PersistenceModule {
    pub fn new(f: &Filtration, degree: usize, field: Field) -> Result<Self> {
        let ambient = Arc::new(Ambient::of(f.base()));
        let bases = f
            .steps()
            .par_iter()
            .map(|(_, step)| infimum_chain_in(step, &ambient, field.into())?.homology_basis(degree))
            .collect::<Result<Vec<_>>>()?;
        Ok(PersistenceModule {
            degree,
            field,
            ambient,
            bases,
        })
    }

    pub fn betti(&self, i: usize) -> usize {
        self.bases[i].rank()
    }

    /// The structure map H(step i) → H(step j), i ≤ j.
    pub fn map(&self, i: usize, j: usize) -> Result<HomologyMap> {
        let dim = self.ambient.count(self.degree);
        let matrix = crate::mayer_vietoris::inclusion_matrix(&self.bases[i], &self.bases[j], dim)?;
        Ok(HomologyMap {
            degree: self.degree,
            field: self.field,
            source_rank: self.bases[i].rank(),
            target_rank: self.bases[j].rank(),
            matrix,
        })
    }

    /// β[i][j] = rank of the map from step i to step j (0 below the
    /// diagonal).
    pub fn rank_matrix(&self) -> Result<Vec<Vec<usize>>> {
        let m = self.bases.len();
        let rows = (0..m)
            .into_par_iter()
            .map(|i| {
                (0..m)
                    .map(|j| if j < i { Ok(0) } else { Ok(self.map(i, j)?.rank()) })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(rows)
    }
}

pub fn persistent_betti(f: &Filtration, degree: usize, field: Field) -> Result<Vec<Vec<usize>>> {
    PersistenceModule::new(f, degree, field)?.rank_matrix()
}

/// One interval, alive at steps `birth_index..death_index`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub birth_index: usize,
    /// `None` when the class survives the last step.
    pub death_index: Option<usize>,
    pub birth: BigRational,
    pub death: Option<BigRational>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistenceDiagram {
    pub degree: usize,
    pub intervals: Vec<Interval>,
}

fn beta_at(beta: &[Vec<usize>], i: isize, j: usize) -> i64 {
    if i < 0 || j >= beta.len() {
        0
    } else {
        beta[i as usize][j] as i64
    }
}

/// Interval decomposition by inclusion–exclusion on the rank matrix.
pub fn persistence_diagram(beta: &[Vec<usize>], parameters: &[BigRational], degree: usize) -> Result<PersistenceDiagram> {
    let m = beta.len();
    if parameters.len() != m || beta.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch("rank matrix and parameters disagree".into()));
    }
    let mut intervals = Vec::new();
    for i in 0..m {
        for j in i..m {
            // alive exactly on steps i..=j
            let ii = i as isize;
            let mu = (beta_at(beta, ii, j) - beta_at(beta, ii, j + 1)) - (beta_at(beta, ii - 1, j) - beta_at(beta, ii - 1, j + 1));
            if mu < 0 {
                return Err(Error::NegativeMultiplicity(i, j));
            }
            if mu > 0 {
                let death_index = (j + 1 < m).then_some(j + 1);
                intervals.push(Interval {
                    birth_index: i,
                    death_index,
                    birth: parameters[i].clone(),
                    death: death_index.map(|d| parameters[d].clone()),
                    multiplicity: mu as usize,
                });
            }
        }
    }
    Ok(PersistenceDiagram { degree, intervals })
}

/// β reconstructed from a diagram on `m` steps.
pub fn rank_matrix_from_diagram(d: &PersistenceDiagram, m: usize) -> Vec<Vec<usize>> {
    let mut beta = vec![vec![0; m]; m];
    for iv in &d.intervals {
        let end = iv.death_index.unwrap_or(m);
        for i in iv.birth_index..end {
            for j in i..end {
                beta[i][j] += iv.multiplicity;
            }
        }
    }
    beta
}

/// Diagrams of a filtration in degrees 0..=dim(base).
pub fn filtration_diagrams(f: &Filtration, field: Field) -> Result<Vec<PersistenceDiagram>> {
    let top = f.base().dimension().map_or(0, |d| d + 1);
    let params = f.parameters();
    (0..top)
        .map(|n| persistence_diagram(&persistent_betti(f, n, field)?, &params, n))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SquareKind {
    /// H(∩) → H(h) ⊕ H(g)
    Inclusion,
    /// H(h) ⊕ H(g) → H(∪)
    Sum,
    /// H_n(∪) → H_{n−1}(∩)
    Connecting,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareCheck {
    pub lower_row: usize,
    pub upper_row: usize,
    pub degree: usize,
    pub kind: SquareKind,
    pub commutes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MvRowReport {
    /// `None` for the base pair itself.
    pub radius: Option<BigRational>,
    pub hypothesis_satisfied: bool,
    pub positions: Vec<ExactnessPosition>,
}

impl MvRowReport {
    pub fn exact(&self) -> bool {
        self.hypothesis_satisfied && self.positions.iter().all(|p| p.exact)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PersistentMvReport {
    pub rows: Vec<MvRowReport>,
    pub squares: Vec<SquareCheck>,
}

impl PersistentMvReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(MvRowReport::exact) && self.squares.iter().all(|s| s.commutes)
    }
}

/// Checks every Mayer-Vietoris row of the metric filtrations of (h, g) and
/// the commutativity of the ladder between consecutive rows; the base pair
/// is the final row.
pub fn verify_persistent_mv(
    h: &Hypergraph,
    g: &Hypergraph,
    dist: &DistanceMatrix,
    radii: &[BigRational],
    field: Field,
) -> Result<PersistentMvReport> {
    if !mv_condition(h, g) {
        return Err(Error::HypothesisViolated("the base pair fails the intersection condition".into()));
    }
    check_radii(radii)?;
    let union = h.union(g);
    dist.check_covers(&union)?;
    let ambient = Arc::new(Ambient::of(&union));
    let top = union.dimension().map_or(0, |d| d + 1);
    let mut pairs: Vec<(Option<BigRational>, Hypergraph, Hypergraph)> = radii
        .iter()
        .map(|r| (Some(r.clone()), hypergraph_at(h, dist, r), hypergraph_at(g, dist, r)))
        .collect();
    pairs.push((None, h.clone(), g.clone()));

    let rows = pairs
        .par_iter()
        .map(|(_, a, b)| {
            if mv_condition(a, b) {
                mayer_vietoris_row_in(a, b, &ambient, field, top).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let reports = pairs
        .iter()
        .zip(&rows)
        .map(|((r, _, _), row)| MvRowReport {
            radius: r.clone(),
            hypothesis_satisfied: row.is_some(),
            positions: row.as_ref().map(|row| row.sequence.check()).unwrap_or_default(),
        })
        .collect();

    let mut squares = Vec::new();
    for k in 0..rows.len().saturating_sub(1) {
        let (Some(lower), Some(upper)) = (&rows[k], &rows[k + 1]) else {
            continue;
        };
        let v = row_maps(lower, upper, &ambient)?;
        let (ls, us) = (&lower.sequence, &upper.sequence);
        for n in 0..=top {
            let [vi, vs, vu] = &v[n];
            let mut push = |kind, commutes| {
                squares.push(SquareCheck {
                    lower_row: k,
                    upper_row: k + 1,
                    degree: n,
                    kind,
                    commutes,
                })
            };
            push(
                SquareKind::Inclusion,
                matrices_equal(field, &field_mul(field, vs, &ls.f[n]), &field_mul(field, &us.f[n], vi)),
            );
            push(
                SquareKind::Sum,
                matrices_equal(field, &field_mul(field, vu, &ls.g[n]), &field_mul(field, &us.g[n], vs)),
            );
            if n >= 1 {
                let [vi_below, _, _] = &v[n - 1];
                push(
                    SquareKind::Connecting,
                    matrices_equal(
                        field,
                        &field_mul(field, vi_below, &ls.delta[n]),
                        &field_mul(field, &us.delta[n], vu),
                    ),
                );
            }
        }
    }
    Ok(PersistentMvReport { rows: reports, squares })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedded::{betti_numbers, induced_map};
    use crate::hypergraph::HypergraphMorphism;

    const Q: Field = Field::Rationals;

    fn hg(edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_tokens(edges).unwrap()
    }

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn unit(h: &Hypergraph) -> DistanceMatrix {
        DistanceMatrix::uniform(h.universe(), r(1, 1)).unwrap()
    }

    fn hollow_triangle() -> Hypergraph {
        hg(&[&["v0", "v1"], &["v1", "v2"], &["v0", "v2"]])
    }

    #[test]
    fn strict_inequality_in_metric_filtration() {
        let h = hollow_triangle();
        let f = metric_filtration(&h, &unit(&h), &[r(1, 2), r(1, 1), r(3, 2)]).unwrap();
        assert!(f.step(0).is_empty());
        assert!(f.step(1).is_empty(), "d = r is excluded");
        assert_eq!(f.step(2), &h);
    }

    #[test]
    fn singletons_survive_small_radii() {
        let h = hg(&[&["a"], &["b"], &["a", "b"]]);
        let f = metric_filtration(&h, &unit(&h), &[r(1, 10)]).unwrap();
        assert_eq!(f.step(0), &hg(&[&["a"], &["b"]]));
    }

    #[test]
    fn radii_must_increase() {
        let h = hollow_triangle();
        assert_eq!(
            metric_filtration(&h, &unit(&h), &[r(1, 1), r(1, 2)]),
            Err(Error::NonIncreasingRadii)
        );
        assert_eq!(metric_filtration(&h, &unit(&h), &[r(0, 1)]), Err(Error::NonIncreasingRadii));
    }

    #[test]
    fn asymmetric_distances_are_rejected() {
        let vs: Vec<Vertex> = ["a", "b"].iter().map(|t| Vertex::new(t).unwrap()).collect();
        let m = vec![vec![r(0, 1), r(1, 1)], vec![r(2, 1), r(0, 1)]];
        assert!(matches!(DistanceMatrix::new(vs, m), Err(Error::AsymmetricDistance(..))));
    }

    #[test]
    fn hollow_triangle_barcode() {
        let h = hollow_triangle();
        let f = metric_filtration(&h, &unit(&h), &[r(1, 2), r(3, 2)]).unwrap();
        let beta = persistent_betti(&f, 1, Q).unwrap();
        assert_eq!(beta, vec![vec![0, 0], vec![0, 1]]);
        let d = persistence_diagram(&beta, &f.parameters(), 1).unwrap();
        assert_eq!(d.intervals.len(), 1);
        assert_eq!(d.intervals[0].birth, r(3, 2));
        assert_eq!(d.intervals[0].death, None);
        assert_eq!(rank_matrix_from_diagram(&d, 2), beta);
    }

    #[test]
    fn constant_filtration() {
        let h = hg(&[&["a"], &["b"], &["a", "b"]]);
        let f = Filtration::new(
            h.clone(),
            ParameterOrder::Increasing,
            vec![(r(1, 1), h.clone()), (r(2, 1), h.clone()), (r(3, 1), h.clone())],
        )
        .unwrap();
        let beta = persistent_betti(&f, 0, Q).unwrap();
        assert_eq!(beta, vec![vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]);
        let d = persistence_diagram(&beta, &f.parameters(), 0).unwrap();
        assert_eq!(d.intervals.len(), 1);
        assert_eq!((d.intervals[0].birth_index, d.intervals[0].death_index), (0, None));
        let empty = persistence_diagram(&[], &[], 0).unwrap();
        assert!(empty.intervals.is_empty());
    }

    #[test]
    fn unrealizable_rank_matrix() {
        let beta = vec![vec![1, 2], vec![0, 1]];
        assert_eq!(
            persistence_diagram(&beta, &[r(1, 1), r(2, 1)], 0),
            Err(Error::NegativeMultiplicity(0, 0))
        );
    }

    #[test]
    fn structure_maps_agree_with_induced_maps() {
        let h = hg(&[&["a"], &["b"], &["c"], &["a", "b"], &["b", "c"], &["a", "c"], &["a", "b", "c"]]);
        let vs = h.universe().to_vec();
        let d = vec![
            vec![r(0, 1), r(1, 1), r(2, 1)],
            vec![r(1, 1), r(0, 1), r(3, 1)],
            vec![r(2, 1), r(3, 1), r(0, 1)],
        ];
        let dist = DistanceMatrix::new(vs, d).unwrap();
        let f = metric_filtration(&h, &dist, &dist.critical_radii(None)).unwrap();
        for n in 0..2 {
            let module = PersistenceModule::new(&f, n, Q).unwrap();
            for i in 0..f.len() {
                for j in i..f.len() {
                    let direct = module.map(i, j).unwrap();
                    let incl = HypergraphMorphism::inclusion(f.step(i), f.step(j)).unwrap();
                    let induced = induced_map(&incl, n, Q).unwrap();
                    assert_eq!(direct.rank(), induced.rank());
                }
            }
        }
        let last = f.step(f.len() - 1);
        assert_eq!(last, &h);
        assert_eq!(
            (0..3).map(|n| PersistenceModule::new(&f, n, Q).unwrap().betti(f.len() - 1)).collect::<Vec<_>>(),
            betti_numbers(&h, Q)
        );
    }

    #[test]
    fn critical_radii_capture_each_distance() {
        let vs: Vec<Vertex> = ["a", "b", "c"].iter().map(|t| Vertex::new(t).unwrap()).collect();
        let d = vec![
            vec![r(0, 1), r(1, 1), r(2, 1)],
            vec![r(1, 1), r(0, 1), r(2, 1)],
            vec![r(2, 1), r(2, 1), r(0, 1)],
        ];
        let dist = DistanceMatrix::new(vs, d).unwrap();
        assert_eq!(dist.critical_radii(None), vec![r(1, 1000), r(1001, 1000), r(2001, 1000)]);
    }

    #[test]
    fn point_cloud_distances_are_exact() {
        let pts = vec![
            (Vertex::new("a").unwrap(), vec![r(0, 1), r(0, 1)]),
            (Vertex::new("b").unwrap(), vec![r(1, 1), r(1, 1)]),
        ];
        let dist = DistanceMatrix::from_points(&pts).unwrap();
        let (a, b) = (&pts[0].0, &pts[1].0);
        // |ab| = √2 ≈ 1.41421356
        assert!(!dist.closer_than(a, b, &r(141421356, 100000000)));
        assert!(dist.closer_than(a, b, &r(141421357, 100000000)));
        let radii = dist.critical_radii(None);
        assert!(dist.closer_than(a, b, &radii[1]));
        assert!(!dist.closer_than(a, b, &radii[0]));
    }

    #[test]
    fn superlevel_steps() {
        let h = hg(&[&["a"], &["b"], &["a", "b"]]);
        let phi = VertexValues::new(
            [("a", r(1, 1)), ("b", r(0, 1))]
                .iter()
                .map(|(t, x)| (Vertex::new(t).unwrap(), x.clone()))
                .collect(),
        )
        .unwrap();
        let f = sublevel_filtration(&h, &phi).unwrap();
        assert_eq!(f.parameters(), vec![r(1, 1), r(0, 1)]);
        assert_eq!(f.step(0), &hg(&[&["a"]]));
        assert_eq!(f.step(1), &h);
        assert_eq!(superlevel_at(&h, &phi, &r(1, 2)), hg(&[&["a"]]));
    }

    #[test]
    fn persistent_mv_small_pair() {
        let h = hg(&[&["a"], &["a", "b"]]);
        let g = hg(&[&["a"], &["a", "c"]]);
        let u = h.union(&g);
        let report = verify_persistent_mv(&h, &g, &unit(&u), &[r(1, 2), r(3, 2)], Q).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.rows.len(), 3);
        assert!(!report.squares.is_empty());
        assert!(matches!(
            verify_persistent_mv(&hg(&[&["a", "b"]]), &hg(&[&["b", "c"]]), &unit(&u), &[r(1, 1)], Q),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
