//! Random instance generators and an independent homology oracle shared by
//! the integration tests and the acceptance run.

#![allow(dead_code)]

use std::collections::BTreeSet;

use embhom::{BigRational, DistanceMatrix, Hyperedge, Hypergraph, SimplicialComplex, Vertex};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn vertex_pool(n: usize) -> Vec<Vertex> {
    (0..n).map(|i| Vertex::new(&format!("v{i}")).unwrap()).collect()
}

pub fn hg(edges: &[&[&str]]) -> Hypergraph {
    Hypergraph::from_tokens(edges).unwrap()
}

// Small edges dominate so that cycles and torsion-free higher homology
// actually show up on a handful of vertices.
const SIZES: [usize; 10] = [1, 1, 1, 2, 2, 2, 2, 3, 3, 4];

fn random_edge<R: Rng>(rng: &mut R, pool: &[Vertex]) -> Hyperedge {
    let size = (*SIZES.choose(rng).unwrap()).min(pool.len());
    let mut vs = pool.to_vec();
    vs.shuffle(rng);
    Hyperedge::new(vs.into_iter().take(size)).unwrap()
}

/// A non-empty hypergraph on at most `max_vertices` vertices with at most
/// `max_edges` hyperedges.
pub fn random_hypergraph<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> Hypergraph {
    let pool = vertex_pool(rng.random_range(1..=max_vertices));
    let count = rng.random_range(1..=max_edges);
    if rng.random_bool(0.4) {
        // dense mode: singletons on a few vertices, then edges over them
        let full = vertex_pool(max_vertices);
        let k = rng.random_range(3..=4).min(max_edges / 2).min(max_vertices).max(1);
        let core = &full[..k];
        let mut edges: Vec<Hyperedge> = core.iter().map(|v| Hyperedge::new([v.clone()]).unwrap()).collect();
        for _ in edges.len()..max_edges.max(edges.len() + 1) {
            let mut vs = core.to_vec();
            vs.shuffle(rng);
            vs.truncate(if rng.random_bool(0.75) { 2 } else { 3 });
            edges.push(Hyperedge::new(vs).unwrap());
        }
        return Hypergraph::from_edges(edges);
    }
    Hypergraph::from_edges((0..count).map(|_| random_edge(rng, &pool)))
}

pub fn random_complex<R: Rng>(rng: &mut R, max_vertices: usize) -> SimplicialComplex {
    let pool = vertex_pool(rng.random_range(1..=max_vertices));
    let count = rng.random_range(1..=7);
    let facets: Vec<Hyperedge> = (0..count)
        .map(|_| {
            let size = rng.random_range(1..=pool.len().min(4)).max(rng.random_range(1..=3).min(pool.len()));
            let mut vs = pool.clone();
            vs.shuffle(rng);
            Hyperedge::new(vs.into_iter().take(size)).unwrap()
        })
        .collect();
    Hypergraph::from_edges(facets).associated_complex()
}

/// A pair satisfying the intersection condition: all pairwise
/// intersections are added to both sides until the condition holds.
pub fn random_mv_pair<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> (Hypergraph, Hypergraph) {
    let pool = vertex_pool(rng.random_range(1..=max_vertices));
    let mut a: BTreeSet<Hyperedge> = (0..rng.random_range(1..=max_edges)).map(|_| random_edge(rng, &pool)).collect();
    let mut b: BTreeSet<Hyperedge> = (0..rng.random_range(1..=max_edges)).map(|_| random_edge(rng, &pool)).collect();
    loop {
        let mut missing = Vec::new();
        for s in &a {
            for t in &b {
                if let Some(i) = s.intersection(t) {
                    if !(a.contains(&i) && b.contains(&i)) {
                        missing.push(i);
                    }
                }
            }
        }
        if missing.is_empty() {
            break;
        }
        for i in missing {
            a.insert(i.clone());
            b.insert(i);
        }
    }
    (Hypergraph::from_edges(a), Hypergraph::from_edges(b))
}

/// Each new hyperedge meets the earlier ones inside a single earlier
/// hyperedge (a join tree), so the result reduces to nothing.
pub fn random_acyclic<R: Rng>(rng: &mut R, max_edges: usize) -> Hypergraph {
    let mut next = 0;
    let mut fresh = |k: usize| -> Vec<Vertex> {
        (0..k)
            .map(|_| {
                next += 1;
                Vertex::new(&format!("u{next}")).unwrap()
            })
            .collect()
    };
    let mut edges: Vec<Hyperedge> = vec![Hyperedge::new(fresh(rng.random_range(1..=3))).unwrap()];
    for _ in 1..rng.random_range(1..=max_edges) {
        let parent = edges.choose(rng).unwrap().clone();
        let mut shared: Vec<Vertex> = parent.vertices().to_vec();
        shared.shuffle(rng);
        shared.truncate(rng.random_range(0..=parent.len()));
        // Occasionally start a new component.
        if rng.random_bool(0.15) {
            shared.clear();
        }
        let extra = rng.random_range(if shared.is_empty() { 1 } else { 0 }..=2);
        shared.extend(fresh(extra));
        edges.push(Hyperedge::new(shared).unwrap());
    }
    Hypergraph::from_edges(edges)
}

/// A random symmetric distance function with values p/q, 1 ≤ p ≤ 8,
/// 1 ≤ q ≤ 3.
pub fn random_distances<R: Rng>(rng: &mut R, vertices: &[Vertex]) -> DistanceMatrix {
    let n = vertices.len();
    let mut d = vec![vec![r(0, 1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let x = r(rng.random_range(1..=8), rng.random_range(1..=3));
            d[i][j] = x.clone();
            d[j][i] = x;
        }
    }
    DistanceMatrix::new(vertices.to_vec(), d).unwrap()
}

/// The 6-vertex projective plane: H_1 = Z/2 over the integers.
pub fn projective_plane() -> SimplicialComplex {
    const FACETS: [[usize; 3]; 10] =
        [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5], [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5]];
    let pool = vertex_pool(6);
    Hypergraph::from_edges(FACETS.iter().map(|f| Hyperedge::new(f.iter().map(|&i| pool[i].clone())).unwrap()))
        .associated_complex()
}

/// Boundary of the tetrahedron on v0..v3: H_2 = Z.
pub fn hollow_tetrahedron() -> SimplicialComplex {
    let pool = vertex_pool(4);
    Hypergraph::from_edges((0..4).map(|j| Hyperedge::new(pool.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone())).unwrap()))
        .associated_complex()
}

/// Classical homology of a simplicial complex, written from scratch on
/// bitmask simplices with a 128-bit Smith normal form.
pub mod oracle {
    use super::*;

    /// Invariant factors (all non-zero diagonal entries) of an integer
    /// matrix.
    pub fn invariant_factors(mut a: Vec<Vec<i128>>) -> Vec<i128> {
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        let mut out = Vec::new();
        let mut t = 0;
        while t < rows.min(cols) {
            // smallest non-zero entry in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / a[t][t];
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / a[t][t];
                for i in t..rows {
                    a[i][j] -= q * a[i][t];
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % a[t][t] != 0)) {
                for j in t..cols {
                    a[t][j] += a[i][j];
                }
                continue;
            }
            out.push(a[t][t].abs());
            t += 1;
        }
        out
    }

    fn masks(k: &SimplicialComplex) -> Vec<Vec<u32>> {
        let h = k.as_hypergraph();
        let mut by_dim: Vec<Vec<u32>> = Vec::new();
        for e in h.edges() {
            let m = e.vertices().iter().fold(0u32, |m, v| m | 1 << h.order_index(v).unwrap());
            let d = e.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(m);
        }
        by_dim
    }

    fn boundary(rows: &[u32], cols: &[u32]) -> Vec<Vec<i128>> {
        let mut a = vec![vec![0i128; cols.len()]; rows.len()];
        for (j, &s) in cols.iter().enumerate() {
            let mut sign = 1;
            for bit in 0..32 {
                if s & (1 << bit) != 0 {
                    let face = s & !(1 << bit);
                    if let Some(i) = rows.iter().position(|&f| f == face) {
                        a[i][j] = sign;
                    }
                    sign = -sign;
                }
            }
        }
        a
    }

    /// (free rank, torsion coefficients > 1) per degree 0..=dim.
    pub fn homology(k: &SimplicialComplex) -> Vec<(usize, Vec<i128>)> {
        let by_dim = masks(k);
        let top = by_dim.len();
        // factors[n] are those of ∂_n : C_n → C_{n−1}; ∂_0 and ∂_{top} are 0
        let factors: Vec<Vec<i128>> = (0..=top)
            .map(|n| {
                if n == 0 || n == top {
                    Vec::new()
                } else {
                    invariant_factors(boundary(&by_dim[n - 1], &by_dim[n]))
                }
            })
            .collect();
        (0..top)
            .map(|n| {
                let free = by_dim[n].len() - factors[n].len() - factors[n + 1].len();
                (free, factors[n + 1].iter().copied().filter(|&d| d > 1).collect())
            })
            .collect()
    }
}
