//! Integer matrix reductions: column Hermite normal form, Smith normal form
//! and the lattice operations built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Column-style Hermite normal form `H = A·U` of an integer matrix.
///
/// The first `rank` columns of `h` are non-zero; column `j` has its first
/// non-zero entry (positive) at row `pivots[j]`, the pivot rows strictly
/// increase, and every entry to the left of a pivot lies in `0..pivot`.
/// The remaining columns are zero and the matching columns of `u` generate
/// the integer kernel of `A`.
#[derive(Clone, Debug)]
pub struct ColumnHnf {
    pub h: IntMatrix,
    pub u: Option<IntMatrix>,
    pub pivots: Vec<usize>,
}

impl ColumnHnf {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The canonical basis: the non-zero columns of `h`.
    pub fn basis(&self) -> IntMatrix {
        self.h.column_range(0, self.rank())
    }
}

// col_a <- x col_a + y col_b ; col_b <- s col_a + t col_b   (applied to both h and u)
fn combine_cols(
    m: &mut IntMatrix,
    a: usize,
    b: usize,
    (x, y, s, t): (&BigInt, &BigInt, &BigInt, &BigInt),
) {
    for i in 0..m.rows() {
        let va = m[(i, a)].clone();
        let vb = m[(i, b)].clone();
        if va.is_zero() && vb.is_zero() {
            continue;
        }
        m[(i, a)] = x * &va + y * &vb;
        m[(i, b)] = s * &va + t * &vb;
    }
}

// col_dst -= q col_src
fn sub_col_multiple(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for i in 0..m.rows() {
        if m[(i, src)].is_zero() {
            continue;
        }
        let d = q * &m[(i, src)];
        m[(i, dst)] -= d;
    }
}

fn negate_col(m: &mut IntMatrix, j: usize) {
    for i in 0..m.rows() {
        let v = -std::mem::take(&mut m[(i, j)]);
        m[(i, j)] = v;
    }
}

pub fn column_hnf(a: &IntMatrix, track_transform: bool) -> ColumnHnf {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = track_transform.then(|| IntMatrix::identity(n));
    let mut pivots = Vec::new();
    let mut c = 0;
    for i in 0..m {
        if c == n {
            break;
        }
        for j in c + 1..n {
            if h[(i, j)].is_zero() {
                continue;
            }
            if h[(i, c)].is_zero() {
                h.swap_cols(c, j);
                if let Some(u) = u.as_mut() {
                    u.swap_cols(c, j);
                }
                continue;
            }
            let p = h[(i, c)].clone();
            let q = h[(i, j)].clone();
            let e = p.extended_gcd(&q);
            let (g, x, y) = (e.gcd, e.x, e.y);
            let s = -(&q / &g);
            let t = &p / &g;
            combine_cols(&mut h, c, j, (&x, &y, &s, &t));
            if let Some(u) = u.as_mut() {
                combine_cols(u, c, j, (&x, &y, &s, &t));
            }
        }
        if h[(i, c)].is_zero() {
            continue;
        }
        if h[(i, c)].is_negative() {
            negate_col(&mut h, c);
            if let Some(u) = u.as_mut() {
                negate_col(u, c);
            }
        }
        let p = h[(i, c)].clone();
        for k in 0..c {
            let q = h[(i, k)].div_floor(&p);
            sub_col_multiple(&mut h, k, c, &q);
            if let Some(u) = u.as_mut() {
                sub_col_multiple(u, k, c, &q);
            }
        }
        pivots.push(i);
        c += 1;
    }
    ColumnHnf { h, u, pivots }
}

/// Solves `basis · y = v` over ℤ where `basis` is in column HNF with the
/// given pivot rows. Returns `None` when `v` is not in the lattice.
pub fn solve_in_hnf(basis: &IntMatrix, pivots: &[usize], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut residual = v.to_vec();
    let mut y = Vec::with_capacity(pivots.len());
    for (j, &p) in pivots.iter().enumerate() {
        let piv = &basis[(p, j)];
        let (q, r) = residual[p].div_rem(piv);
        if !r.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (i, res) in residual.iter_mut().enumerate().skip(p) {
                if !basis[(i, j)].is_zero() {
                    *res -= &q * &basis[(i, j)];
                }
            }
        }
        y.push(q);
    }
    residual.iter().all(Zero::is_zero).then_some(y)
}

/// Pivot rows of a matrix already in column HNF.
pub fn hnf_pivots(basis: &IntMatrix) -> Vec<usize> {
    (0..basis.cols())
        .map(|j| {
            (0..basis.rows())
                .find(|&i| !basis[(i, j)].is_zero())
                .expect("HNF basis has no zero columns")
        })
        .collect()
}

/// Generators of the full integer kernel `{x ∈ ℤⁿ : A x = 0}` (saturated),
/// as columns of an `n × k` matrix in column HNF.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let hnf = column_hnf(a, true);
    let u = hnf.u.as_ref().expect("transform tracked");
    let raw = u.column_range(hnf.rank(), a.cols());
    column_hnf(&raw, false).basis()
}

/// Smith normal form `U·A·V = S`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// The non-zero diagonal entries d₁ | d₂ | … (all positive).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols()))
            .map(|i| self.s[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    // row_dst -= q row_src
    if q.is_zero() {
        return;
    }
    for j in 0..m.cols() {
        if m[(src, j)].is_zero() {
            continue;
        }
        let d = q * &m[(src, j)];
        m[(dst, j)] -= d;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        let v = -std::mem::take(&mut m[(i, j)]);
        m[(i, j)] = v;
    }
}

/// Smith normal form by minimal-absolute-value pivoting with ties broken by
/// lowest (row, column) index.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    'outer: for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &s[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);
            if s[(t, t)].is_negative() {
                negate_row(&mut s, t);
                negate_row(&mut u, t);
            }
            let p = s[(t, t)].clone();

            let mut clean = true;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&p);
                row_axpy(&mut s, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                clean &= s[(i, t)].is_zero();
            }
            if !clean {
                continue;
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&p);
                sub_col_multiple(&mut s, j, t, &q);
                sub_col_multiple(&mut v, j, t, &q);
                clean &= s[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&p)));
            match bad_row {
                Some(i) => {
                    // row_t += row_i
                    let minus_one = BigInt::from(-1);
                    row_axpy(&mut s, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
    }
    SnfResult { u, s, v }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> BigInt {
    assert_eq!(a.rows(), a.cols(), "determinant of non-square matrix");
    let n = a.rows();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut m = a.clone();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let val = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = val;
            }
        }
        prev = m[(k, k)].clone();
    }
    sign * &m[(n - 1, n - 1)]
}
