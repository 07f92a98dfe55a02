//! Deterministic fixtures for the benchmarks.

use embhom::{mv_condition, BigRational, DistanceMatrix, Hyperedge, Hypergraph, SimplicialComplex, Vertex, VertexValues};

pub fn vertices(n: usize) -> Vec<Vertex> {
    (0..n).map(|i| Vertex::new(&format!("v{i}")).unwrap()).collect()
}

/// The k-skeleton of the simplex on `n` vertices.
pub fn skeleton(n: usize, k: usize) -> SimplicialComplex {
    let full = SimplicialComplex::full_simplex(&vertices(n)).unwrap().into_hypergraph();
    SimplicialComplex::new(Hypergraph::from_edges(full.edges().filter(|e| e.dimension() <= k).cloned())).unwrap()
}

/// The k-skeleton of the n-simplex with every third simplex of dimension ≥ 1
/// removed, so that it is not closed under faces.
pub fn holey(n: usize, k: usize) -> Hypergraph {
    let edges = skeleton(n, k).into_hypergraph().edges().cloned().collect::<Vec<_>>();
    Hypergraph::from_edges(edges.into_iter().enumerate().filter(|(i, e)| e.len() == 1 || i % 3 != 0).map(|(_, e)| e))
}

/// Singletons and consecutive pairs around an n-cycle.
pub fn cycle(n: usize) -> Hypergraph {
    let vs = vertices(n);
    let pairs = (0..n).map(|i| Hyperedge::new([vs[i].clone(), vs[(i + 1) % n].clone()]).unwrap());
    Hypergraph::from_edges(vs.iter().cloned().map(Hyperedge::singleton).chain(pairs))
}

/// Adds every pairwise intersection of hyperedges of `a` and `b` to both
/// until the pair satisfies the Mayer-Vietoris hypothesis.
pub fn mv_pair(mut a: Hypergraph, mut b: Hypergraph) -> (Hypergraph, Hypergraph) {
    while !mv_condition(&a, &b) {
        let meets: Vec<Hyperedge> = a.edges().flat_map(|s| b.edges().filter_map(|t| s.intersection(t))).collect();
        let meets = Hypergraph::from_edges(meets);
        a = a.union(&meets);
        b = b.union(&meets);
    }
    (a, b)
}

/// d(v_i, v_j) = 1 + ((i·j) mod 5) / 2 on the universe of `h`.
pub fn distances(h: &Hypergraph) -> DistanceMatrix {
    let n = h.universe().len();
    let values = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::from_integer(0.into())
                    } else {
                        BigRational::new((2 + (i * j) % 5).into(), 2.into())
                    }
                })
                .collect()
        })
        .collect();
    DistanceMatrix::new(h.universe().to_vec(), values).unwrap()
}

/// φ(v_i) = (i mod 4) / 4.
pub fn values(h: &Hypergraph) -> VertexValues {
    let map = h
        .universe()
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), BigRational::new(((i % 4) as i64).into(), 4.into())))
        .collect();
    VertexValues::new(map).unwrap()
}
