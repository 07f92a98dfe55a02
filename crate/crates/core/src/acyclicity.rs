//! Acyclicity by vertex/hyperedge deletion (the GYO reduction), the
//! homological consequences of acyclicity, and cone augmentation.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::Serialize;

use crate::chainalg::CoefficientRing;
use crate::embedded::{component_count, embedded_homology, simplicial_homology, HomologyGroup};
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, SimplicialComplex, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Operation {
    /// Delete a vertex that lies in exactly one hyperedge.
    O1,
    /// Delete a hyperedge strictly contained in another.
    O2,
    /// Delete a vertex that lies in exactly one hyperedge of size ≥ 2.
    #[serde(rename = "O1'")]
    O1Prime,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::O1 => "O1",
            Operation::O2 => "O2",
            Operation::O1Prime => "O1'",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Removed {
    Vertex(Vertex),
    Edge(Hyperedge),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub op: Operation,
    pub removed: Removed,
    /// The hyperedge a vertex was deleted from, or the hyperedge that
    /// contains a deleted hyperedge.
    pub from_edge: Option<Hyperedge>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub result: Hypergraph,
}

impl ReductionTrace {
    /// Applies the recorded steps to `h`, checking that each was legal.
    pub fn replay(&self, h: &Hypergraph) -> Result<Hypergraph> {
        let mut edges: BTreeSet<Hyperedge> = h.edge_set().clone();
        for step in &self.steps {
            let ok = match (&step.removed, &step.from_edge) {
                (Removed::Edge(e), Some(sup)) => {
                    step.op == Operation::O2 && e != sup && e.is_subset(sup) && edges.contains(sup) && edges.remove(e)
                }
                (Removed::Vertex(v), Some(e)) => {
                    let containing: Vec<&Hyperedge> = match step.op {
                        Operation::O1 => edges.iter().filter(|x| x.contains(v)).collect(),
                        Operation::O1Prime => edges.iter().filter(|x| x.len() >= 2 && x.contains(v)).collect(),
                        Operation::O2 => Vec::new(),
                    };
                    if containing == [e] {
                        delete_vertex(&mut edges, e, v);
                        true
                    } else {
                        false
                    }
                }
                _ => false,
            };
            if !ok {
                return Err(Error::PreconditionViolated(format!("illegal reduction step {step:?}")));
            }
        }
        Ok(Hypergraph::from_edges(edges))
    }
}

fn delete_vertex(edges: &mut BTreeSet<Hyperedge>, e: &Hyperedge, v: &Vertex) {
    edges.remove(e);
    // Emptied hyperedges vanish; duplicates merge in the set.
    if let Some(rest) = e.without(v) {
        edges.insert(rest);
    }
}

fn o2_candidates(edges: &BTreeSet<Hyperedge>) -> Vec<ReductionStep> {
    edges
        .iter()
        .filter_map(|e| {
            edges.iter().rev().find(|s| s.len() > e.len() && e.is_subset(s)).map(|s| ReductionStep {
                op: Operation::O2,
                removed: Removed::Edge(e.clone()),
                from_edge: Some(s.clone()),
            })
        })
        .collect()
}

fn vertex_candidates(edges: &BTreeSet<Hyperedge>, op: Operation) -> Vec<ReductionStep> {
    let min_len = if op == Operation::O1Prime { 2 } else { 1 };
    let vertices: BTreeSet<&Vertex> = edges.iter().flat_map(|e| e.vertices()).collect();
    vertices
        .into_iter()
        .filter_map(|v| {
            let mut containing = edges.iter().filter(|e| e.len() >= min_len && e.contains(v));
            match (containing.next(), containing.next()) {
                (Some(e), None) => Some(ReductionStep {
                    op,
                    removed: Removed::Vertex(v.clone()),
                    from_edge: Some(e.clone()),
                }),
                _ => None,
            }
        })
        .collect()
}

fn apply(edges: &mut BTreeSet<Hyperedge>, step: &ReductionStep) {
    match (&step.removed, &step.from_edge) {
        (Removed::Edge(e), _) => {
            edges.remove(e);
        }
        (Removed::Vertex(v), Some(e)) => delete_vertex(edges, e, v),
        (Removed::Vertex(_), None) => unreachable!("vertex deletions record their hyperedge"),
    }
}

/// Exhaustive reduction with O2 tried before the vertex operation, each
/// in canonical order.
fn reduce(h: &Hypergraph, vertex_op: Operation) -> ReductionTrace {
    let mut edges = h.edge_set().clone();
    let mut steps = Vec::new();
    loop {
        let next = o2_candidates(&edges)
            .into_iter()
            .next()
            .or_else(|| vertex_candidates(&edges, vertex_op).into_iter().next());
        let Some(step) = next else { break };
        apply(&mut edges, &step);
        steps.push(step);
    }
    ReductionTrace {
        steps,
        result: Hypergraph::from_edges(edges),
    }
}

/// Whether O1 and O2 reduce `h` to the empty hypergraph.
pub fn is_acyclic(h: &Hypergraph) -> (bool, ReductionTrace) {
    let trace = reduce(h, Operation::O1);
    (trace.result.is_empty(), trace)
}

/// The same reduction, choosing uniformly among all applicable operations at
/// each step.
pub fn is_acyclic_random_order<R: Rng + ?Sized>(h: &Hypergraph, rng: &mut R) -> (bool, ReductionTrace) {
    let mut edges = h.edge_set().clone();
    let mut steps = Vec::new();
    loop {
        let mut candidates = o2_candidates(&edges);
        candidates.extend(vertex_candidates(&edges, Operation::O1));
        let Some(step) = candidates.choose(rng).cloned() else { break };
        apply(&mut edges, &step);
        steps.push(step);
    }
    let result = Hypergraph::from_edges(edges);
    (result.is_empty(), ReductionTrace { steps, result })
}

/// Reduction by O1' and O2; succeeds when only 0-hyperedges remain. The
/// verdict is checked against [`is_acyclic`].
pub fn reduce_to_discrete(h: &Hypergraph) -> Result<(bool, ReductionTrace)> {
    let trace = reduce(h, Operation::O1Prime);
    let discrete = trace.result.edges().all(|e| e.len() == 1);
    if discrete != is_acyclic(h).0 {
        return Err(Error::internal(format!(
            "reductions disagree on {h}: O1'/O2 gives {discrete}"
        )));
    }
    Ok((discrete, trace))
}

/// H_*(K_𝓗; ℤ) before and after every O1'/O2 step of the discrete
/// reduction, which must all agree.
pub fn check_reduction_invariance(h: &Hypergraph) -> Result<bool> {
    let (_, trace) = reduce_to_discrete(h)?;
    // Trailing zero groups are dropped since the dimension may shrink.
    let homology = |edges: &BTreeSet<Hyperedge>| {
        let mut groups = simplicial_homology(
            &Hypergraph::from_edges(edges.iter().cloned()).associated_complex(),
            CoefficientRing::Integers,
        );
        while groups.last().is_some_and(HomologyGroup::is_zero) {
            groups.pop();
        }
        groups
    };
    let mut edges = h.edge_set().clone();
    let mut before = homology(&edges);
    for step in &trace.steps {
        apply(&mut edges, step);
        let after = homology(&edges);
        if after != before {
            return Ok(false);
        }
        before = after;
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremAReport {
    pub components: usize,
    /// H_n(K_𝓗; ℤ) for n = 0..=dim.
    pub complex_homology: Vec<HomologyGroup>,
    /// H_{dim 𝓗}(𝓗; ℤ).
    pub top_embedded: Option<HomologyGroup>,
    pub holds: bool,
}

/// For an acyclic hypergraph: H_0(K_𝓗) is free on the components, higher
/// H_n(K_𝓗) vanish, and the top embedded homology vanishes when dim ≥ 1.
pub fn check_theorem_5a(h: &Hypergraph) -> Result<TheoremAReport> {
    if !is_acyclic(h).0 {
        return Err(Error::PreconditionViolated("hypergraph is not acyclic".into()));
    }
    let components = component_count(h.universe(), h.edges());
    let complex_homology = simplicial_homology(&h.associated_complex(), CoefficientRing::Integers);
    let mut holds = complex_homology.iter().all(|g| {
        g.torsion.is_empty() && g.free_rank == if g.degree == 0 { components } else { 0 }
    });
    let top_embedded = match h.dimension() {
        Some(d) => {
            let top = embedded_homology(h, CoefficientRing::Integers).swap_remove(d);
            if d >= 1 {
                holds &= top.is_zero();
            }
            Some(top)
        }
        None => None,
    };
    Ok(TheoremAReport {
        components,
        complex_homology,
        top_embedded,
        holds,
    })
}

/// Whether K_𝓗 is a disjoint union of full simplices, i.e. each connected
/// component's vertex set is itself a hyperedge of K_𝓗. When it is, `h` is
/// checked to be acyclic.
pub fn check_theorem_5b(h: &Hypergraph) -> Result<bool> {
    let mut components: Vec<BTreeSet<Vertex>> = Vec::new();
    for e in h.edges() {
        let mut merged: BTreeSet<Vertex> = e.vertices().iter().cloned().collect();
        components.retain(|c| {
            if c.is_disjoint(&merged) {
                true
            } else {
                merged.extend(c.iter().cloned());
                false
            }
        });
        components.push(merged);
    }
    let holds = components.iter().all(|c| h.edges().any(|e| e.len() == c.len() && e.vertices().iter().all(|v| c.contains(v))));
    if holds && !is_acyclic(h).0 {
        return Err(Error::internal(format!("{h} is a union of simplices but not acyclic")));
    }
    Ok(holds)
}

fn fresh_pair(h: &Hypergraph) -> Result<(Vertex, Vertex)> {
    let taken = |t: &str| h.universe().iter().any(|v| v.token() == t);
    let candidates = std::iter::once(("x".to_string(), "y".to_string()))
        .chain((0..1000).map(|i| (format!("x{i}"), format!("y{i}"))));
    for (x, y) in candidates {
        if !taken(&x) && !taken(&y) {
            return Ok((Vertex::new(&x)?, Vertex::new(&y)?));
        }
    }
    Err(Error::TokenCollision)
}

/// 𝓗 ∪ {V_𝓗 ∪ {x, y}} for fresh vertices x, y. The result is checked to be
/// acyclic with K = Δ[n], n = |V_𝓗| + 1, to keep H_i for i ≤ n − 2 and to
/// have H_{n−1} = H_n = 0.
pub fn cone_augmentation(h: &Hypergraph) -> Result<Hypergraph> {
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    let (x, y) = fresh_pair(h)?;
    let top = Hyperedge::new(h.universe().iter().cloned().chain([x, y])).expect("non-empty");
    let n = top.dimension();
    let augmented = h.union(&Hypergraph::from_edges([top.clone()]));

    if !is_acyclic(&augmented).0 {
        return Err(Error::internal("cone augmentation is not acyclic"));
    }
    if augmented.associated_complex() != SimplicialComplex::full_simplex(top.vertices())? {
        return Err(Error::internal("cone augmentation does not close to a simplex"));
    }
    let before = embedded_homology(h, CoefficientRing::Integers);
    let after = embedded_homology(&augmented, CoefficientRing::Integers);
    let zero = |i: usize| HomologyGroup::zero(i, CoefficientRing::Integers);
    for i in 0..=n {
        let expected = if i + 2 <= n { before.get(i).cloned().unwrap_or_else(|| zero(i)) } else { zero(i) };
        if after[i] != expected {
            return Err(Error::internal(format!(
                "cone augmentation changed H_{i}: {} vs {}",
                after[i], expected
            )));
        }
    }
    Ok(augmented)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn hg(edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_tokens(edges).unwrap()
    }

    fn two_triangles() -> Hypergraph {
        hg(&[&["v0", "v1", "v2"], &["v1", "v2", "v3"]])
    }

    /// The 2-faces of the tetrahedron on v0..v3 except the one opposite v_i.
    fn three_faces(i: usize) -> Hypergraph {
        let faces: Vec<Vec<String>> = (0..4)
            .filter(|&j| j != i)
            .map(|j| (0..4).filter(|&k| k != j).map(|k| format!("v{k}")).collect())
            .collect();
        let refs: Vec<&[String]> = faces.iter().map(Vec::as_slice).collect();
        Hypergraph::from_tokens(&refs).unwrap()
    }

    #[test]
    fn acyclic_examples() {
        let (yes, trace) = is_acyclic(&two_triangles());
        assert!(yes);
        assert_eq!(trace.replay(&two_triangles()).unwrap(), trace.result);
        for i in 0..4 {
            let (no, trace) = is_acyclic(&three_faces(i));
            assert!(!no);
            assert!(trace.steps.is_empty());
        }
        assert!(is_acyclic(&Hypergraph::empty()).0);
    }

    #[test]
    fn discrete_reduction() {
        let (yes, trace) = reduce_to_discrete(&two_triangles()).unwrap();
        assert!(yes);
        assert!(trace.result.edges().all(|e| e.len() == 1));
        assert!(!reduce_to_discrete(&three_faces(3)).unwrap().0);
        let (yes, trace) = reduce_to_discrete(&hg(&[&["v"]])).unwrap();
        assert!(yes && trace.steps.is_empty());
        assert!(check_reduction_invariance(&two_triangles()).unwrap());
    }

    #[test]
    fn random_orders_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for h in [two_triangles(), three_faces(0), hg(&[&["a", "b"], &["b", "c"], &["a", "c"]])] {
            let verdict = is_acyclic(&h).0;
            for _ in 0..10 {
                let (v, trace) = is_acyclic_random_order(&h, &mut rng);
                assert_eq!(v, verdict);
                assert_eq!(trace.replay(&h).unwrap(), trace.result);
            }
        }
    }

    #[test]
    fn theorem_a() {
        let report = check_theorem_5a(&two_triangles()).unwrap();
        assert!(report.holds);
        assert_eq!(report.components, 1);
        assert!(report.top_embedded.unwrap().is_zero());
        let report = check_theorem_5a(&hg(&[&["a"], &["b"]])).unwrap();
        assert_eq!(report.complex_homology[0].free_rank, 2);
        assert!(matches!(check_theorem_5a(&three_faces(1)), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn theorem_b() {
        assert!(check_theorem_5b(&hg(&[&["v0", "v1", "v2"]])).unwrap());
        assert!(!check_theorem_5b(&hg(&[&["a", "b"], &["b", "c"], &["a", "c"]])).unwrap());
        assert!(!check_theorem_5b(&two_triangles()).unwrap());
        assert!(check_theorem_5b(&hg(&[&["a", "b"], &["a"], &["c"]])).unwrap());
    }

    #[test]
    fn cone() {
        let h = hg(&[&["v0", "v1"], &["v1", "v2"], &["v0", "v2"]]);
        let c = cone_augmentation(&h).unwrap();
        assert_eq!(c.edge_count(), 4);
        assert_eq!(embedded_homology(&c, CoefficientRing::Integers)[1].free_rank, 1);
        let c = cone_augmentation(&hg(&[&["v"]])).unwrap();
        assert_eq!(c, hg(&[&["v"], &["v", "x", "y"]]));
        let c = cone_augmentation(&hg(&[&["x", "y"]])).unwrap();
        assert!(c.universe().iter().any(|v| v.token() == "x0"));
        assert_eq!(cone_augmentation(&Hypergraph::empty()), Err(Error::EmptyHypergraph));
    }
}
