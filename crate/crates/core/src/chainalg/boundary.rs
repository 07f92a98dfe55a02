//! Boundary matrices of simplicial complexes.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::matrix::IntMatrix;
use super::ring::CoefficientRing;
use crate::hypergraph::{Hyperedge, Hypergraph, SimplicialComplex};

/// Matrix of ∂_n : C_n(K) → C_{n−1}(K). Rows follow K_{n−1}, columns K_n,
/// both in canonical order; ∂_0 is the `0 × |K_0|` matrix.
pub fn boundary_matrix(k: &SimplicialComplex, n: usize, ring: CoefficientRing) -> IntMatrix {
    let cols = k.simplices(n);
    let rows = if n == 0 { Vec::new() } else { k.simplices(n - 1) };
    boundary_between(&rows, &cols, ring)
}

fn boundary_between(rows: &[Hyperedge], cols: &[Hyperedge], ring: CoefficientRing) -> IntMatrix {
    let index: HashMap<&Hyperedge, usize> = rows.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, s) in cols.iter().enumerate() {
        if s.len() == 1 {
            continue;
        }
        for i in 0..s.len() {
            let face = s.face(i).expect("simplex of dimension ≥ 1");
            let r = index[&face];
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m[(r, j)] = ring.reduce(&BigInt::from(sign));
        }
    }
    m
}

/// A simplicial complex with its simplices indexed per degree and its
/// integer boundary matrices precomputed.
#[derive(Clone, Debug)]
pub struct Ambient {
    complex: SimplicialComplex,
    simplices: Vec<Vec<Hyperedge>>,
    index: Vec<HashMap<Hyperedge, usize>>,
    boundaries: Vec<IntMatrix>,
}

impl Ambient {
    pub fn new(complex: SimplicialComplex) -> Self {
        let top = complex.dimension().map_or(0, |d| d + 1);
        let simplices: Vec<Vec<Hyperedge>> = (0..=top).map(|n| complex.simplices(n)).collect();
        let index = simplices
            .iter()
            .map(|s| s.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect())
            .collect();
        let boundaries = (0..=top)
            .map(|n| {
                let rows: &[Hyperedge] = if n == 0 { &[] } else { &simplices[n - 1] };
                boundary_between(rows, &simplices[n], CoefficientRing::Integers)
            })
            .collect();
        Ambient {
            complex,
            simplices,
            index,
            boundaries,
        }
    }

    /// The associated complex of `h`.
    pub fn of(h: &Hypergraph) -> Self {
        Self::new(h.associated_complex())
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Number of degrees stored: dimension + 2 (the last one is empty).
    pub fn degrees(&self) -> usize {
        self.simplices.len()
    }

    pub fn simplices(&self, n: usize) -> &[Hyperedge] {
        self.simplices.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, n: usize) -> usize {
        self.simplices(n).len()
    }

    pub fn index_of(&self, e: &Hyperedge) -> Option<usize> {
        self.index.get(e.dimension()).and_then(|m| m.get(e).copied())
    }

    /// Integer matrix of ∂_n, valid for every `n` (zero-width beyond the top).
    pub fn boundary(&self, n: usize) -> IntMatrix {
        match self.boundaries.get(n) {
            Some(b) => b.clone(),
            None => IntMatrix::zeros(self.count(n.saturating_sub(1)), 0),
        }
    }

    /// Column indices of the n-hyperedges of `h` (which must lie in the
    /// complex), in canonical order.
    pub fn coordinates_of(&self, h: &Hypergraph, n: usize) -> Option<Vec<usize>> {
        h.edges_of_dim(n).map(|e| self.index_of(e)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Vertex;

    fn simplex(tokens: &[&str]) -> SimplicialComplex {
        let vs: Vec<Vertex> = tokens.iter().map(|t| Vertex::new(t).unwrap()).collect();
        SimplicialComplex::full_simplex(&vs).unwrap()
    }

    #[test]
    fn boundary_of_an_edge() {
        let k = simplex(&["v0", "v1"]);
        let d1 = boundary_matrix(&k, 1, CoefficientRing::Integers);
        assert_eq!(d1, IntMatrix::from_i64_rows(&[&[-1], &[1]]));
        let d0 = boundary_matrix(&k, 0, CoefficientRing::Integers);
        assert_eq!((d0.rows(), d0.cols()), (0, 2));
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = simplex(&["v0", "v1", "v2", "v3"]);
        for n in 1..=4 {
            let a = boundary_matrix(&k, n - 1, CoefficientRing::Integers);
            let b = boundary_matrix(&k, n, CoefficientRing::Integers);
            assert!(a.mul(&b).is_zero(), "∂∂ ≠ 0 in degree {n}");
        }
        let amb = Ambient::new(k);
        assert_eq!(amb.degrees(), 5);
        assert_eq!(amb.boundary(7).cols(), 0);
    }

    #[test]
    fn prime_two_drops_signs() {
        let k = simplex(&["a", "b"]);
        let d = boundary_matrix(&k, 1, CoefficientRing::PrimeField(2));
        assert_eq!(d, IntMatrix::from_i64_rows(&[&[1], &[1]]));
    }
}
