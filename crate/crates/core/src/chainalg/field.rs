//! Gaussian elimination over ℚ and ℤ/p.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::matrix::{IntMatrix, RatMatrix};
use super::ring::Field;

pub fn to_field_matrix(field: Field, a: &IntMatrix) -> RatMatrix {
    a.map(|x| field.from_int(x))
}

/// Reduced row echelon form with pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub pivots: Vec<usize>,
}

/// Row-reduces `m` in place, choosing pivots only among the first
/// `pivot_cols` columns. Returns the pivot columns; row `i` carries pivot
/// `pivots[i]` with value 1.
fn eliminate(field: Field, m: &mut RatMatrix, pivot_cols: usize) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = field.inv(&m[(r, c)]);
        for j in c..cols {
            if !m[(r, j)].is_zero() {
                m[(r, j)] = field.mul(&m[(r, j)], &inv);
            }
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..cols {
                if m[(r, j)].is_zero() {
                    continue;
                }
                let d = field.mul(&f, &m[(r, j)]);
                m[(i, j)] = field.sub(&m[(i, j)], &d);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rref(field: Field, a: &RatMatrix) -> Rref {
    let mut m = a.clone();
    let pivots = eliminate(field, &mut m, a.cols());
    Rref { matrix: m, pivots }
}

pub fn rank(field: Field, a: &RatMatrix) -> usize {
    rref(field, a).pivots.len()
}

/// Basis of `{x : a·x = 0}` as columns, one per free variable in increasing
/// order.
pub fn kernel(field: Field, a: &RatMatrix) -> RatMatrix {
    let n = a.cols();
    let r = rref(field, a);
    let free: Vec<usize> = (0..n).filter(|c| !r.pivots.contains(c)).collect();
    let mut k = RatMatrix::zeros(n, free.len());
    for (j, &f) in free.iter().enumerate() {
        k[(f, j)] = field.one();
        for (i, &p) in r.pivots.iter().enumerate() {
            k[(p, j)] = field.neg(&r.matrix[(i, f)]);
        }
    }
    k
}

/// Solves `a·y = b` for many right-hand sides with one elimination.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    field: Field,
    transform: RatMatrix,
    pivots: Vec<usize>,
    order: Vec<usize>,
}

impl LinearSolver {
    pub fn new(field: Field, a: &RatMatrix) -> Self {
        Self::with_column_order(field, a, &(0..a.cols()).collect::<Vec<_>>())
    }

    /// Pivots are chosen scanning the columns of `a` in `order`; different
    /// orders give different particular solutions.
    pub fn with_column_order(field: Field, a: &RatMatrix, order: &[usize]) -> Self {
        assert_eq!(order.len(), a.cols(), "column order must be a permutation");
        let m = a.rows();
        let permuted = a.select_columns(order);
        let mut aug = permuted.hstack(&RatMatrix::identity(m));
        let pivots = eliminate(field, &mut aug, permuted.cols());
        let transform = aug.column_range(permuted.cols(), permuted.cols() + m);
        LinearSolver {
            field,
            transform,
            pivots,
            order: order.to_vec(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        let c: Vec<BigRational> = self
            .transform
            .mul_vec(b)
            .into_iter()
            .map(|x| self.field.normalize(x))
            .collect();
        if c[self.pivots.len()..].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let mut y = vec![BigRational::zero(); self.order.len()];
        for (i, &p) in self.pivots.iter().enumerate() {
            y[self.order[p]] = c[i].clone();
        }
        Some(y)
    }

    pub fn solve_int(&self, b: &[BigInt]) -> Option<Vec<BigRational>> {
        let b: Vec<BigRational> = b.iter().map(|x| self.field.from_int(x)).collect();
        self.solve(&b)
    }
}
