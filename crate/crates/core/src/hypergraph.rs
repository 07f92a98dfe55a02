//! Hypergraphs, simplicial complexes and morphisms between them.
//!
//! Vertices are identified by their tokens and totally ordered
//! lexicographically. Hyperedges are kept as strictly increasing vertex lists
//! and are themselves ordered first by cardinality and then lexicographically;
//! every enumeration in the crate (and therefore every matrix row or column
//! order) follows that order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A vertex token. Tokens are non-empty and contain neither whitespace nor `#`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex(Arc<str>);

impl Vertex {
    pub fn new(token: &str) -> Result<Self> {
        if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(Error::InvalidToken(token.to_string()));
        }
        Ok(Vertex(Arc::from(token)))
    }

    pub fn token(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A non-empty set of vertices stored in increasing order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hyperedge(Vec<Vertex>);

impl Hyperedge {
    /// Builds a hyperedge from any collection of vertices; duplicates are
    /// merged. Returns `None` for an empty collection.
    pub fn new<I: IntoIterator<Item = Vertex>>(vertices: I) -> Option<Self> {
        let mut vs: Vec<Vertex> = vertices.into_iter().collect();
        vs.sort();
        vs.dedup();
        if vs.is_empty() {
            None
        } else {
            Some(Hyperedge(vs))
        }
    }

    pub fn from_tokens<S: AsRef<str>>(tokens: &[S]) -> Result<Self> {
        let vs = tokens
            .iter()
            .map(|t| Vertex::new(t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Hyperedge::new(vs).ok_or(Error::EmptyEdge { line: 0 })
    }

    pub fn singleton(v: Vertex) -> Self {
        Hyperedge(vec![v])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    // never empty, so there is no is_empty
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// An n-hyperedge has n + 1 vertices.
    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset(&self, other: &Hyperedge) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &Hyperedge) -> Option<Hyperedge> {
        let common: Vec<Vertex> = self.0.iter().filter(|v| other.contains(v)).cloned().collect();
        if common.is_empty() {
            None
        } else {
            Some(Hyperedge(common))
        }
    }

    pub fn union(&self, other: &Hyperedge) -> Hyperedge {
        Hyperedge::new(self.0.iter().chain(other.0.iter()).cloned()).expect("non-empty")
    }

    /// The hyperedge with `v` removed; `None` if nothing is left.
    pub fn without(&self, v: &Vertex) -> Option<Hyperedge> {
        let rest: Vec<Vertex> = self.0.iter().filter(|w| *w != v).cloned().collect();
        if rest.is_empty() {
            None
        } else {
            Some(Hyperedge(rest))
        }
    }

    /// The face obtained by deleting the `i`-th vertex (the face map d_i).
    pub fn face(&self, i: usize) -> Option<Hyperedge> {
        if self.0.len() < 2 {
            return None;
        }
        let mut vs = self.0.clone();
        vs.remove(i);
        Some(Hyperedge(vs))
    }

    /// All non-empty subsets, the hyperedge itself included.
    pub fn subsets(&self) -> impl Iterator<Item = Hyperedge> + '_ {
        let k = self.0.len();
        assert!(k < 64, "hyperedge too large to enumerate its faces");
        (1u64..(1u64 << k)).map(move |mask| {
            Hyperedge(
                (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.0[i].clone())
                    .collect(),
            )
        })
    }
}

impl Ord for Hyperedge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Hyperedge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A finite set of hyperedges. The vertex universe is always the union of the
/// hyperedges' vertices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Hypergraph {
    universe: Vec<Vertex>,
    edges: BTreeSet<Hyperedge>,
}

impl Hypergraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_edges<I: IntoIterator<Item = Hyperedge>>(edges: I) -> Self {
        let edges: BTreeSet<Hyperedge> = edges.into_iter().collect();
        let universe: BTreeSet<Vertex> = edges.iter().flat_map(|e| e.0.iter().cloned()).collect();
        Hypergraph {
            universe: universe.into_iter().collect(),
            edges,
        }
    }

    /// Convenience constructor from nested token lists.
    pub fn from_tokens<S: AsRef<str>>(edges: &[&[S]]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|e| Hyperedge::from_tokens(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_edges(edges))
    }

    pub fn universe(&self) -> &[Vertex] {
        &self.universe
    }

    /// Position of `v` in the ordered universe.
    pub fn order_index(&self, v: &Vertex) -> Option<usize> {
        self.universe.binary_search(v).ok()
    }

    pub fn edges(&self) -> impl DoubleEndedIterator<Item = &Hyperedge> + ExactSizeIterator + '_ {
        self.edges.iter()
    }

    pub fn edge_set(&self) -> &BTreeSet<Hyperedge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains_edge(&self, e: &Hyperedge) -> bool {
        self.edges.contains(e)
    }

    /// Largest n with a non-empty n-hyperedge set; `None` for the empty
    /// hypergraph (dimension −1).
    pub fn dimension(&self) -> Option<usize> {
        self.edges.iter().next_back().map(Hyperedge::dimension)
    }

    /// The n-hyperedges, in canonical order.
    pub fn edges_of_dim(&self, n: usize) -> impl Iterator<Item = &Hyperedge> + '_ {
        self.edges.iter().filter(move |e| e.dimension() == n)
    }

    /// Number of hyperedges per degree 0..=dim.
    pub fn edge_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for e in &self.edges {
            counts[e.dimension()] += 1;
        }
        counts
    }

    /// Number of hyperedges containing `v`.
    pub fn vertex_degree(&self, v: &Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn is_subset(&self, other: &Hypergraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    pub fn union(&self, other: &Hypergraph) -> Hypergraph {
        Hypergraph::from_edges(self.edges.union(&other.edges).cloned())
    }

    pub fn intersection(&self, other: &Hypergraph) -> Hypergraph {
        Hypergraph::from_edges(self.edges.intersection(&other.edges).cloned())
    }

    pub fn difference(&self, other: &Hypergraph) -> Hypergraph {
        Hypergraph::from_edges(self.edges.difference(&other.edges).cloned())
    }

    /// All non-empty subsets of all hyperedges.
    fn closure_edges(&self) -> BTreeSet<Hyperedge> {
        let mut out = BTreeSet::new();
        // Largest first so that faces of already-closed edges can be skipped.
        for e in self.edges.iter().rev() {
            if out.contains(e) {
                continue;
            }
            out.extend(e.subsets());
        }
        out
    }

    /// The associated simplicial complex: the smallest downward-closed family
    /// containing every hyperedge.
    pub fn associated_complex(&self) -> SimplicialComplex {
        SimplicialComplex(Hypergraph {
            universe: self.universe.clone(),
            edges: self.closure_edges(),
        })
    }

    /// Simplices of the associated complex that are not hyperedges.
    pub fn complement(&self) -> Hypergraph {
        let closed = self.closure_edges();
        Hypergraph::from_edges(closed.difference(&self.edges).cloned())
    }

    pub fn is_simplicial(&self) -> bool {
        self.edges
            .iter()
            .all(|e| (0..e.len()).filter_map(|i| e.face(i)).all(|f| self.edges.contains(&f)))
    }

    /// Hyperedges all of whose vertices satisfy `keep`.
    pub fn restrict<F: Fn(&Vertex) -> bool>(&self, keep: F) -> Hypergraph {
        Hypergraph::from_edges(
            self.edges
                .iter()
                .filter(|e| e.vertices().iter().all(&keep))
                .cloned(),
        )
    }

    /// The hypergraph with every vertex added as a 0-hyperedge.
    pub fn with_singletons(&self) -> Hypergraph {
        let mut edges = self.edges.clone();
        edges.extend(self.universe.iter().cloned().map(Hyperedge::singleton));
        Hypergraph {
            universe: self.universe.clone(),
            edges,
        }
    }

    /// Canonical `.hg` rendering: one hyperedge per line in canonical order.
    pub fn to_hg_string(&self) -> String {
        let mut s = String::new();
        for e in &self.edges {
            s.push_str(&e.to_string());
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges.iter()).finish()
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hg_string())
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_hypergraph(s)
    }
}

/// Parses the `.hg` format: one hyperedge per line, whitespace-separated
/// tokens, `#` comments, blank lines ignored, duplicate lines merged.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut edges = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut seen = BTreeSet::new();
        for token in content.split_whitespace() {
            let v = Vertex::new(token).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            if !seen.insert(v) {
                return Err(Error::DuplicateVertexInEdge {
                    line,
                    token: token.to_string(),
                });
            }
        }
        if seen.is_empty() {
            continue;
        }
        edges.insert(Hyperedge(seen.into_iter().collect()));
    }
    Ok(Hypergraph::from_edges(edges))
}

/// A hypergraph whose edge set is closed under taking non-empty subsets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex(Hypergraph);

impl SimplicialComplex {
    pub fn new(h: Hypergraph) -> Result<Self> {
        for e in h.edges() {
            for i in 0..e.len() {
                if let Some(f) = e.face(i) {
                    if !h.contains_edge(&f) {
                        return Err(Error::NotSimplicial(format!("face {f:?} of {e:?} is missing")));
                    }
                }
            }
        }
        Ok(SimplicialComplex(h))
    }

    /// The full simplex Δ[V] on the given vertices.
    pub fn full_simplex(vertices: &[Vertex]) -> Result<Self> {
        let top = Hyperedge::new(vertices.iter().cloned()).ok_or(Error::EmptyHypergraph)?;
        Ok(Hypergraph::from_edges([top]).associated_complex())
    }

    pub fn as_hypergraph(&self) -> &Hypergraph {
        &self.0
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.0
    }

    /// The n-simplices in canonical order.
    pub fn simplices(&self, n: usize) -> Vec<Hyperedge> {
        self.0.edges_of_dim(n).cloned().collect()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.0.dimension()
    }

    pub fn contains(&self, e: &Hyperedge) -> bool {
        self.0.contains_edge(e)
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex(self.0.union(&other.0))
    }

    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex(self.0.intersection(&other.0))
    }
}

/// `true` iff every non-empty pairwise intersection σ ∩ σ' (σ ∈ h, σ' ∈ g)
/// is a hyperedge of both.
pub fn mv_condition(h: &Hypergraph, g: &Hypergraph) -> bool {
    first_mv_violation(h, g).is_none()
}

/// A witness pair (σ, σ') whose intersection is non-empty and not in h ∩ g.
pub fn first_mv_violation(h: &Hypergraph, g: &Hypergraph) -> Option<(Hyperedge, Hyperedge)> {
    for s in h.edges() {
        for t in g.edges() {
            if let Some(common) = s.intersection(t) {
                if !(h.contains_edge(&common) && g.contains_edge(&common)) {
                    return Some((s.clone(), t.clone()));
                }
            }
        }
    }
    None
}

/// A vertex map sending hyperedges to hyperedges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphMorphism {
    source: Hypergraph,
    target: Hypergraph,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl HypergraphMorphism {
    pub fn new(
        source: Hypergraph,
        target: Hypergraph,
        vertex_map: BTreeMap<Vertex, Vertex>,
    ) -> Result<Self> {
        for v in source.universe() {
            match vertex_map.get(v) {
                None => return Err(Error::InvalidMorphism(format!("vertex {v} is not mapped"))),
                Some(w) if target.order_index(w).is_none() => {
                    return Err(Error::InvalidMorphism(format!("image {w} of {v} is not a target vertex")))
                }
                _ => {}
            }
        }
        let f = HypergraphMorphism {
            source,
            target,
            vertex_map,
        };
        for e in f.source.edges() {
            let img = f.image(e);
            if !f.target.contains_edge(&img) {
                return Err(Error::InvalidMorphism(format!(
                    "image {img:?} of hyperedge {e:?} is not a target hyperedge"
                )));
            }
        }
        Ok(f)
    }

    pub fn identity(h: &Hypergraph) -> Self {
        HypergraphMorphism {
            source: h.clone(),
            target: h.clone(),
            vertex_map: h.universe().iter().map(|v| (v.clone(), v.clone())).collect(),
        }
    }

    /// The inclusion of `sub` into `sup`; fails unless `sub` ⊆ `sup`.
    pub fn inclusion(sub: &Hypergraph, sup: &Hypergraph) -> Result<Self> {
        if !sub.is_subset(sup) {
            return Err(Error::InvalidMorphism("source is not a sub-hypergraph of target".into()));
        }
        Ok(HypergraphMorphism {
            source: sub.clone(),
            target: sup.clone(),
            vertex_map: sub.universe().iter().map(|v| (v.clone(), v.clone())).collect(),
        })
    }

    pub fn source(&self) -> &Hypergraph {
        &self.source
    }

    pub fn target(&self) -> &Hypergraph {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn map_vertex(&self, v: &Vertex) -> &Vertex {
        &self.vertex_map[v]
    }

    /// The image vertex set f(σ).
    pub fn image(&self, e: &Hyperedge) -> Hyperedge {
        Hyperedge::new(e.vertices().iter().map(|v| self.map_vertex(v).clone())).expect("non-empty")
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &HypergraphMorphism) -> Result<HypergraphMorphism> {
        if self.target != next.source {
            return Err(Error::InvalidMorphism("morphisms are not composable".into()));
        }
        let map = self
            .vertex_map
            .iter()
            .map(|(v, w)| (v.clone(), next.map_vertex(w).clone()))
            .collect();
        HypergraphMorphism::new(self.source.clone(), next.target.clone(), map)
    }

    /// The induced simplicial map between associated complexes.
    pub fn apply_functor(&self) -> Result<SimplicialMap> {
        let source = self.source.associated_complex();
        let target = self.target.associated_complex();
        for s in source.as_hypergraph().edges() {
            let img = self.image(s);
            if !target.contains(&img) {
                return Err(Error::InvalidMorphism(format!(
                    "image {img:?} of simplex {s:?} is not a simplex"
                )));
            }
        }
        Ok(SimplicialMap {
            source,
            target,
            vertex_map: self.vertex_map.clone(),
        })
    }
}

/// A vertex map between simplicial complexes sending simplices to simplices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl SimplicialMap {
    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn image(&self, s: &Hyperedge) -> Hyperedge {
        Hyperedge::new(s.vertices().iter().map(|v| self.vertex_map[v].clone())).expect("non-empty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(edges: &[&[&str]]) -> Hypergraph {
        Hypergraph::from_tokens(edges).unwrap()
    }

    #[test]
    fn parse_reads_edges_and_universe() {
        let h = parse_hypergraph("a b\nb c").unwrap();
        assert_eq!(h, hg(&[&["a", "b"], &["b", "c"]]));
        let names: Vec<_> = h.universe().iter().map(Vertex::token).collect();
        assert_eq!(names, ["a", "b", "c"]);
    }

    #[test]
    fn parse_rejects_duplicate_vertex() {
        assert_eq!(
            parse_hypergraph("a a").unwrap_err(),
            Error::DuplicateVertexInEdge {
                line: 1,
                token: "a".into()
            }
        );
        assert!(matches!(
            parse_hypergraph("x\n# c\n b c b").unwrap_err(),
            Error::DuplicateVertexInEdge { line: 3, .. }
        ));
    }

    #[test]
    fn parse_handles_comments_blank_lines_and_duplicates() {
        let h = parse_hypergraph("# header\n\nb a   # trailing\na b\n  \nc\n").unwrap();
        assert_eq!(h, hg(&[&["a", "b"], &["c"]]));
    }

    #[test]
    fn parse_is_line_order_independent() {
        let a = parse_hypergraph("v0\nv1\nv2\nv0 v1\nv0 v1 v2").unwrap();
        let b = parse_hypergraph("v0 v1 v2\nv1 v0\nv2\nv1\nv0").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 5);
        assert_eq!(a.edge_counts(), vec![3, 1, 1]);
    }

    #[test]
    fn canonical_edge_order() {
        let h = hg(&[&["b", "c"], &["a", "b", "c"], &["c"], &["a", "c"], &["a"]]);
        let order: Vec<String> = h.edges().map(|e| e.to_string()).collect();
        assert_eq!(order, ["a", "c", "a c", "b c", "a b c"]);
    }

    #[test]
    fn closure_of_worked_example() {
        let h = hg(&[&["v0"], &["v1"], &["v2"], &["v0", "v1"], &["v0", "v1", "v2"]]);
        let k = h.associated_complex();
        assert_eq!(k.as_hypergraph().edge_count(), 7);
        assert_eq!(
            h.complement(),
            hg(&[&["v1", "v2"], &["v0", "v2"]])
        );
    }

    #[test]
    fn closure_small_cases() {
        let h = hg(&[&["a", "b"], &["c"]]);
        assert_eq!(
            h.associated_complex().into_hypergraph(),
            hg(&[&["a"], &["b"], &["c"], &["a", "b"]])
        );
        let t = hg(&[&["a", "b", "c"]]);
        assert_eq!(t.complement().edge_count(), 6);
        let k = t.associated_complex();
        assert!(k.as_hypergraph().complement().is_empty());
        assert!(k.as_hypergraph().complement().universe().is_empty());
        assert_eq!(k.as_hypergraph().associated_complex(), k);
    }

    #[test]
    fn simplicial_complex_validation() {
        assert!(SimplicialComplex::new(hg(&[&["a", "b"]])).is_err());
        assert!(SimplicialComplex::new(hg(&[&["a", "b"], &["a"], &["b"]])).is_ok());
    }

    #[test]
    fn set_operations() {
        let h = hg(&[&["a", "b"]]);
        let g = hg(&[&["b", "c"]]);
        assert_eq!(h.union(&g), hg(&[&["a", "b"], &["b", "c"]]));
        assert!(h.intersection(&g).is_empty());
        assert!(h.intersection(&g).universe().is_empty());
    }

    #[test]
    fn mv_condition_cases() {
        let h = hg(&[&["a", "b"], &["b"]]);
        let g = hg(&[&["b", "c"], &["b"]]);
        assert!(mv_condition(&h, &g));
        assert!(!mv_condition(&hg(&[&["a", "b"]]), &hg(&[&["b", "c"]])));
        assert!(mv_condition(&hg(&[&["a", "b"]]), &hg(&[&["c", "d"]])));
    }

    #[test]
    fn functor_on_collapse() {
        let h = hg(&[&["a", "b"]]);
        let t = hg(&[&["x"]]);
        let map = [("a", "x"), ("b", "x")]
            .iter()
            .map(|(s, d)| (Vertex::new(s).unwrap(), Vertex::new(d).unwrap()))
            .collect();
        let f = HypergraphMorphism::new(h.clone(), t, map).unwrap();
        let sm = f.apply_functor().unwrap();
        let ab = Hyperedge::from_tokens(&["a", "b"]).unwrap();
        assert_eq!(sm.image(&ab), Hyperedge::from_tokens(&["x"]).unwrap());

        let id = HypergraphMorphism::identity(&h).apply_functor().unwrap();
        assert!(id.vertex_map().iter().all(|(v, w)| v == w));
    }

    #[test]
    fn morphism_rejects_non_edge_image() {
        let h = hg(&[&["a", "b"]]);
        let t = hg(&[&["x"], &["y"]]);
        let map = [("a", "x"), ("b", "y")]
            .iter()
            .map(|(s, d)| (Vertex::new(s).unwrap(), Vertex::new(d).unwrap()))
            .collect();
        assert!(matches!(
            HypergraphMorphism::new(h, t, map),
            Err(Error::InvalidMorphism(_))
        ));
    }

    #[test]
    fn round_trip_text() {
        let h = hg(&[&["q", "p"], &["r"], &["p", "q", "r"]]);
        assert_eq!(parse_hypergraph(&h.to_hg_string()).unwrap(), h);
    }

    #[test]
    fn order_index_is_a_bijection() {
        let h = hg(&[&["c", "a"], &["b"]]);
        let idx: Vec<_> = h.universe().iter().map(|v| h.order_index(v).unwrap()).collect();
        assert_eq!(idx, [0, 1, 2]);
    }
}
