//! Subgroups (over ℤ) and subspaces (over a field) of a free chain group,
//! stored in a canonical echelon basis so that equality is plain comparison.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{self, to_field_matrix};
use super::integer::{column_hnf, integer_kernel, smith_normal_form};
use super::matrix::{IntMatrix, RatMatrix};
use super::ring::CoefficientRing;
use crate::error::{Error, Result};

/// A subgroup of `R^ambient_dim` for a coefficient ring `R`.
///
/// The basis columns are in column echelon form: column `j` is zero above
/// row `pivots[j]` and pivot rows strictly increase. Over ℤ the basis is the
/// Hermite normal form of the lattice; over ℚ it is the reduced echelon
/// basis with every column scaled to a primitive integer vector; over ℤ/p
/// it is the reduced echelon basis with entries in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainSubspace {
    ring: CoefficientRing,
    ambient_dim: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

fn primitive_integer_column(col: &[BigRational]) -> Vec<BigInt> {
    let lcm = col
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = col.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(BigInt::one(), |x| x.signum());
    ints.into_iter().map(|x| x * &sign / &g).collect()
}

/// Converts field vectors (columns of `m`) to integer vectors spanning the
/// same subspace.
fn field_columns_to_int(ring: CoefficientRing, m: &RatMatrix) -> IntMatrix {
    let cols: Vec<Vec<BigInt>> = m
        .columns()
        .iter()
        .map(|c| match ring {
            CoefficientRing::PrimeField(_) => c.iter().map(|x| x.to_integer()).collect(),
            _ => primitive_integer_column(c),
        })
        .collect();
    IntMatrix::from_columns(m.rows(), &cols)
}

/// Generators of `{x : a·x = 0}` over the ring (saturated over ℤ).
pub(crate) fn ring_kernel(ring: CoefficientRing, a: &IntMatrix) -> IntMatrix {
    match ring.field() {
        Err(_) => integer_kernel(a),
        Ok(f) => field_columns_to_int(ring, &field::kernel(f, &to_field_matrix(f, a))),
    }
}

impl ChainSubspace {
    /// The span of the columns of `generators`.
    pub fn span(ring: CoefficientRing, ambient_dim: usize, generators: &IntMatrix) -> Self {
        assert_eq!(generators.rows(), ambient_dim, "generator length mismatch");
        let (basis, pivots) = match ring.field() {
            Err(_) => {
                let h = column_hnf(generators, false);
                (h.basis(), h.pivots)
            }
            Ok(f) => {
                let r = field::rref(f, &to_field_matrix(f, &generators.transpose()));
                let k = r.pivots.len();
                let rows = r.matrix.select_rows(&(0..k).collect::<Vec<_>>());
                let basis = field_columns_to_int(ring, &rows.transpose());
                (basis, r.pivots)
            }
        };
        let basis = if basis.cols() == 0 {
            IntMatrix::zeros(ambient_dim, 0)
        } else {
            basis
        };
        ChainSubspace {
            ring,
            ambient_dim,
            basis,
            pivots,
        }
    }

    pub fn from_vectors(ring: CoefficientRing, ambient_dim: usize, vectors: &[Vec<BigInt>]) -> Self {
        Self::span(ring, ambient_dim, &IntMatrix::from_columns(ambient_dim, vectors))
    }

    pub fn zero(ring: CoefficientRing, ambient_dim: usize) -> Self {
        Self::span(ring, ambient_dim, &IntMatrix::zeros(ambient_dim, 0))
    }

    pub fn full(ring: CoefficientRing, ambient_dim: usize) -> Self {
        Self::span(ring, ambient_dim, &IntMatrix::identity(ambient_dim))
    }

    /// The coordinate subgroup spanned by the listed basis vectors.
    pub fn coordinate(ring: CoefficientRing, ambient_dim: usize, indices: &[usize]) -> Self {
        let mut m = IntMatrix::zeros(ambient_dim, indices.len());
        for (j, &i) in indices.iter().enumerate() {
            m[(i, j)] = BigInt::one();
        }
        Self::span(ring, ambient_dim, &m)
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<BigInt>> {
        self.basis.columns()
    }

    fn check_same_ambient(&self, other: &ChainSubspace) -> Result<()> {
        if self.ring != other.ring || self.ambient_dim != other.ambient_dim {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// Coefficients of `v` in the canonical basis, or `None` if `v` is not
    /// in the subgroup. Over ℤ the coefficients are integers.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigRational>> {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        let f = self.ring.field().ok();
        let norm = |x: BigRational| match f {
            Some(f) => f.normalize(x),
            None => x,
        };
        let mut residual: Vec<BigRational> = v
            .iter()
            .map(|x| norm(BigRational::from_integer(x.clone())))
            .collect();
        let mut coords = Vec::with_capacity(self.rank());
        for (j, &p) in self.pivots.iter().enumerate() {
            let piv = BigRational::from_integer(self.basis[(p, j)].clone());
            let c = match f {
                Some(f) => f.div(&residual[p], &piv),
                None => {
                    let c = &residual[p] / &piv;
                    if !c.is_integer() {
                        return None;
                    }
                    c
                }
            };
            if !c.is_zero() {
                for (i, res) in residual.iter_mut().enumerate().skip(p) {
                    if !self.basis[(i, j)].is_zero() {
                        let d = &c * BigRational::from_integer(self.basis[(i, j)].clone());
                        *res = norm(&*res - d);
                    }
                }
            }
            coords.push(c);
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &ChainSubspace) -> Result<bool> {
        self.check_same_ambient(other)?;
        Ok(other.vectors().iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &ChainSubspace) -> Result<ChainSubspace> {
        self.check_same_ambient(other)?;
        Ok(Self::span(self.ring, self.ambient_dim, &self.basis.hstack(&other.basis)))
    }

    pub fn intersection(&self, other: &ChainSubspace) -> Result<ChainSubspace> {
        self.check_same_ambient(other)?;
        self.preimage_within(&IntMatrix::identity(self.ambient_dim), other)
    }

    /// The image under a linear map given as a `target_dim × ambient_dim`
    /// matrix.
    pub fn image(&self, map: &IntMatrix) -> Result<ChainSubspace> {
        if map.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "map has {} columns, subspace lives in dimension {}",
                map.cols(),
                self.ambient_dim
            )));
        }
        Ok(Self::span(self.ring, map.rows(), &map.mul(&self.basis)))
    }

    /// `{x ∈ self : map·x ∈ target}`.
    pub fn preimage_within(&self, map: &IntMatrix, target: &ChainSubspace) -> Result<ChainSubspace> {
        if map.cols() != self.ambient_dim || map.rows() != target.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "map is {}x{}, expected {}x{}",
                map.rows(),
                map.cols(),
                target.ambient_dim,
                self.ambient_dim
            )));
        }
        if self.ring != target.ring {
            return Err(Error::AmbientMismatch);
        }
        let image = map.mul(&self.basis);
        let neg_target = target.basis.map(|x| -x);
        let block = image.hstack(&neg_target);
        let k = ring_kernel(self.ring, &block);
        let y = k.select_rows(&(0..self.rank()).collect::<Vec<_>>());
        Ok(Self::span(self.ring, self.ambient_dim, &self.basis.mul(&y)))
    }
}

/// Generators of the kernel of `a` as a subspace of the column space.
pub fn kernel_basis(a: &IntMatrix, ring: CoefficientRing) -> ChainSubspace {
    ChainSubspace::span(ring, a.cols(), &ring_kernel(ring, a))
}

pub fn lattice_intersection(a: &ChainSubspace, b: &ChainSubspace) -> Result<ChainSubspace> {
    a.intersection(b)
}

/// Structure of `sup / sub` as `(free rank, torsion coefficients)`, with
/// torsion coefficients ≥ 2 in divisibility order.
pub fn quotient_structure(sub: &ChainSubspace, sup: &ChainSubspace) -> Result<(usize, Vec<BigInt>)> {
    sup.check_same_ambient(sub)?;
    let mut coords = Vec::with_capacity(sub.rank());
    for v in sub.vectors() {
        let c = sup.coordinates(&v).ok_or(Error::NotASubgroup)?;
        coords.push(c);
    }
    if sub.ring.is_field() {
        return Ok((sup.rank() - sub.rank(), Vec::new()));
    }
    let cols: Vec<Vec<BigInt>> = coords
        .into_iter()
        .map(|c| c.into_iter().map(|x| x.to_integer()).collect())
        .collect();
    let m = IntMatrix::from_columns(sup.rank(), &cols);
    let snf = smith_normal_form(&m);
    let factors = snf.invariant_factors();
    let torsion = factors.iter().filter(|d| !d.is_one()).cloned().collect();
    debug_assert!(factors.iter().all(|d| d.is_positive()));
    Ok((sup.rank() - factors.len(), torsion))
}
