//! Mayer-Vietoris sequences of embedded homology, built explicitly on
//! homology bases over a field and checked for exactness spot by spot.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::chainalg::field::{rank, to_field_matrix};
use crate::chainalg::{Ambient, ChainSubspace, CoefficientRing, Field, IntMatrix, LinearSolver, RatMatrix};
use crate::embedded::{infimum_chain_in, HomologyBasis, SubChainComplex};
use crate::error::{Error, Result};
use crate::hypergraph::{first_mv_violation, Hypergraph};

/// Which group of a long exact sequence a position refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Spot {
    /// H(𝓗 ∩ 𝓗')
    Intersection,
    /// H(𝓗) ⊕ H(𝓗')
    DirectSum,
    /// H(𝓗 ∪ 𝓗')
    Union,
    /// H(Inf(𝓗) + Inf(𝓗'))
    Sum,
    /// H(Inf(𝓗 ∪ 𝓗') / (Inf(𝓗) + Inf(𝓗')))
    Quotient,
}

/// Exactness data at one group of a long exact sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessPosition {
    pub degree: usize,
    pub spot: Spot,
    pub dimension: usize,
    pub ker_rank: usize,
    pub im_rank: usize,
    pub composite_zero: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    pub hypothesis_satisfied: bool,
    pub positions: Vec<ExactnessPosition>,
}

impl ExactnessReport {
    pub fn all_exact(&self) -> bool {
        self.positions.iter().all(|p| p.exact)
    }
}

/// A long exact sequence `… → X_n →f Y_n →g Z_n →δ X_{n−1} → …` given by
/// matrices on homology bases, for degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct LongExactSequence {
    pub field: Field,
    pub spots: [Spot; 3],
    /// dim X_n, dim Y_n, dim Z_n.
    pub ranks: Vec<[usize; 3]>,
    pub f: Vec<RatMatrix>,
    pub g: Vec<RatMatrix>,
    /// `delta[n] : Z_n → X_{n−1}`; `delta[0]` has no rows.
    pub delta: Vec<RatMatrix>,
}

pub(crate) fn field_mul(field: Field, a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.mul(b).map(|x| field.normalize(x.clone()))
}

fn position(field: Field, degree: usize, spot: Spot, dim: usize, incoming: &RatMatrix, outgoing: &RatMatrix) -> ExactnessPosition {
    let ker_rank = dim - rank(field, outgoing);
    let im_rank = rank(field, incoming);
    let composite_zero = field_mul(field, outgoing, incoming).is_zero();
    ExactnessPosition {
        degree,
        spot,
        dimension: dim,
        ker_rank,
        im_rank,
        composite_zero,
        exact: composite_zero && ker_rank == im_rank,
    }
}

impl LongExactSequence {
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn check(&self) -> Vec<ExactnessPosition> {
        let mut out = Vec::new();
        for n in 0..self.ranks.len() {
            let [x, y, z] = self.ranks[n];
            let incoming_x = match self.delta.get(n + 1) {
                Some(d) => d.clone(),
                None => RatMatrix::zeros(x, 0),
            };
            out.push(position(self.field, n, self.spots[0], x, &incoming_x, &self.f[n]));
            out.push(position(self.field, n, self.spots[1], y, &self.f[n], &self.g[n]));
            out.push(position(self.field, n, self.spots[2], z, &self.g[n], &self.delta[n]));
        }
        out
    }

    /// Σ (−1)^n dim of each of the three homology families.
    pub fn euler_characteristics(&self) -> [i64; 3] {
        let mut chi = [0i64; 3];
        for (n, r) in self.ranks.iter().enumerate() {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            for k in 0..3 {
                chi[k] += sign * r[k] as i64;
            }
        }
        chi
    }
}

fn apply(field: Field, m: &IntMatrix, v: &[BigRational]) -> Vec<BigRational> {
    to_field_matrix(field, m)
        .mul_vec(v)
        .into_iter()
        .map(|x| field.normalize(x))
        .collect()
}

fn to_field_vec(field: Field, v: &[num_bigint::BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| field.from_int(x)).collect()
}

/// Stacks `top` over `bottom`.
fn vstack(top: &RatMatrix, bottom: &RatMatrix) -> RatMatrix {
    top.transpose().hstack(&bottom.transpose()).transpose()
}

fn block_diag(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let mut m = RatMatrix::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m[(i, j)] = a[(i, j)].clone();
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m[(a.rows() + i, a.cols() + j)] = b[(i, j)].clone();
        }
    }
    m
}

fn bases(c: &SubChainComplex, top: usize) -> Result<Vec<HomologyBasis>> {
    (0..=top).map(|n| c.homology_basis(n)).collect()
}

/// Matrix on homology of the identity chain map between two subcomplexes of
/// one ambient complex (an inclusion).
pub(crate) fn inclusion_matrix(source: &HomologyBasis, target: &HomologyBasis, dim: usize) -> Result<RatMatrix> {
    source.map_to(&IntMatrix::identity(dim), target)
}

/// One row of the Mayer-Vietoris diagram: homology bases of the four
/// complexes in a common ambient and the maps between them.
#[derive(Clone, Debug)]
pub struct MayerVietorisRow {
    pub intersection: Vec<HomologyBasis>,
    pub left: Vec<HomologyBasis>,
    pub right: Vec<HomologyBasis>,
    pub target: Vec<HomologyBasis>,
    pub sequence: LongExactSequence,
}

/// `0 → C∩ → Ch ⊕ Cg → T → 0` with T = Ch + Cg (or a complex equal to
/// it); builds the long exact sequence with ∂*[z] = [∂a] for z = a + b.
fn sum_sequence(
    field: Field,
    top: usize,
    inter: &SubChainComplex,
    left: &SubChainComplex,
    right: &SubChainComplex,
    target: &SubChainComplex,
    target_spot: Spot,
) -> Result<MayerVietorisRow> {
    let ambient = target.ambient().clone();
    let ib = bases(inter, top)?;
    let lb = bases(left, top)?;
    let rb = bases(right, top)?;
    let tb = bases(target, top)?;
    let mut ranks = Vec::new();
    let (mut f, mut g, mut delta) = (Vec::new(), Vec::new(), Vec::new());
    for n in 0..=top {
        let dim = ambient.count(n);
        ranks.push([ib[n].rank(), lb[n].rank() + rb[n].rank(), tb[n].rank()]);
        let to_left = inclusion_matrix(&ib[n], &lb[n], dim)?;
        let to_right = inclusion_matrix(&ib[n], &rb[n], dim)?.map(|x| field.neg(x));
        f.push(vstack(&to_left, &to_right));
        let from_left = inclusion_matrix(&lb[n], &tb[n], dim)?;
        let from_right = inclusion_matrix(&rb[n], &tb[n], dim)?;
        g.push(from_left.hstack(&from_right));
        delta.push(if n == 0 {
            RatMatrix::zeros(0, tb[0].rank())
        } else {
            connecting_matrix(field, &ambient, n, left, right, &tb[n], &ib[n - 1])?
        });
    }
    Ok(MayerVietorisRow {
        intersection: ib,
        left: lb,
        right: rb,
        target: tb,
        sequence: LongExactSequence {
            field,
            spots: [Spot::Intersection, Spot::DirectSum, target_spot],
            ranks,
            f,
            g,
            delta,
        },
    })
}

/// ∂* on the target homology basis in degree n, computed with two different
/// splittings z = a + b that must agree on homology.
fn connecting_matrix(
    field: Field,
    ambient: &Ambient,
    n: usize,
    left: &SubChainComplex,
    right: &SubChainComplex,
    target: &HomologyBasis,
    inter: &HomologyBasis,
) -> Result<RatMatrix> {
    let lgroup = left.group(n);
    let split = lgroup.basis().hstack(right.group(n).basis());
    let split = to_field_matrix(field, &split);
    let forward: Vec<usize> = (0..split.cols()).collect();
    let backward: Vec<usize> = forward.iter().rev().copied().collect();
    let solvers = [
        LinearSolver::with_column_order(field, &split, &forward),
        LinearSolver::with_column_order(field, &split, &backward),
    ];
    let left_basis = to_field_matrix(field, lgroup.basis());
    let boundary = ambient.boundary(n);
    let mut m = RatMatrix::zeros(inter.rank(), target.rank());
    for (j, z) in target.representatives().iter().enumerate() {
        let z = to_field_vec(field, z);
        let mut classes = Vec::with_capacity(2);
        for solver in &solvers {
            let y = solver
                .solve(&z)
                .ok_or_else(|| Error::internal(format!("cycle in degree {n} does not split as a + b")))?;
            let a: Vec<BigRational> = left_basis
                .mul_vec(&y[..lgroup.rank()])
                .into_iter()
                .map(|x| field.normalize(x))
                .collect();
            let da = apply(field, &boundary, &a);
            let c = inter
                .classify_field(&da)
                .ok_or_else(|| Error::internal(format!("∂a is not a cycle of the intersection in degree {}", n - 1)))?;
            classes.push(c);
        }
        if classes[0] != classes[1] {
            return Err(Error::internal(format!(
                "connecting map depends on the splitting in degree {n}"
            )));
        }
        for (i, x) in classes.swap_remove(0).into_iter().enumerate() {
            m[(i, j)] = x;
        }
    }
    Ok(m)
}

fn check_hypothesis(h: &Hypergraph, g: &Hypergraph) -> Result<()> {
    match first_mv_violation(h, g) {
        None => Ok(()),
        Some((a, b)) => Err(Error::HypothesisViolated(format!(
            "{a:?} ∩ {b:?} is neither empty nor a hyperedge of both"
        ))),
    }
}

fn top_degree(h: &Hypergraph, g: &Hypergraph) -> usize {
    h.union(g).dimension().map_or(0, |d| d + 1)
}

/// The Mayer-Vietoris row of (h, g) computed inside `ambient`, which must
/// contain h ∪ g; degrees run over `0..=top`.
pub fn mayer_vietoris_row_in(
    h: &Hypergraph,
    g: &Hypergraph,
    ambient: &Arc<Ambient>,
    field: Field,
    top: usize,
) -> Result<MayerVietorisRow> {
    check_hypothesis(h, g)?;
    let ring = field.into();
    let inter = infimum_chain_in(&h.intersection(g), ambient, ring)?;
    let left = infimum_chain_in(h, ambient, ring)?;
    let right = infimum_chain_in(g, ambient, ring)?;
    let union = infimum_chain_in(&h.union(g), ambient, ring)?;
    sum_sequence(field, top, &inter, &left, &right, &union, Spot::Union)
}

/// Degreewise check that `0 → Inf(h∩g) → Inf(h) ⊕ Inf(g) → Inf(h∪g) → 0`
/// is exact inside K_{h∪g}, over any coefficient ring.
pub fn short_exact_check(h: &Hypergraph, g: &Hypergraph, ring: CoefficientRing) -> Result<bool> {
    check_hypothesis(h, g)?;
    let ambient = Arc::new(Ambient::of(&h.union(g)));
    let inter = infimum_chain_in(&h.intersection(g), &ambient, ring)?;
    let left = infimum_chain_in(h, &ambient, ring)?;
    let right = infimum_chain_in(g, &ambient, ring)?;
    let union = infimum_chain_in(&h.union(g), &ambient, ring)?;
    for n in 0..ambient.degrees() {
        let (i, l, r, u) = (inter.group(n), left.group(n), right.group(n), union.group(n));
        // x ↦ (x, −x) is injective on any subgroup; the kernel of
        // (a, b) ↦ a + b is {(x, −x) : x ∈ Inf(h) ∩ Inf(g)}.
        if l.intersection(&r)? != i {
            return Ok(false);
        }
        // (a, b) ↦ a + b lands in and onto Inf(h ∪ g).
        if l.sum(&r)? != u {
            return Ok(false);
        }
    }
    Ok(true)
}

/// ∂* : H_n(h ∪ g) → H_{n−1}(h ∩ g) on the chosen homology bases.
pub fn connecting_homomorphism(h: &Hypergraph, g: &Hypergraph, n: usize, field: Field) -> Result<RatMatrix> {
    if n == 0 {
        return Err(Error::DegreeOutOfRange(0));
    }
    check_hypothesis(h, g)?;
    let ambient = Arc::new(Ambient::of(&h.union(g)));
    let top = top_degree(h, g).max(n);
    let row = mayer_vietoris_row_in(h, g, &ambient, field, top)?;
    Ok(row.sequence.delta[n].clone())
}

/// Builds the Mayer-Vietoris long exact sequence of (h, g) and checks every
/// spot in degrees 0..=dim(h ∪ g)+1.
pub fn verify_long_exact(h: &Hypergraph, g: &Hypergraph, field: Field) -> Result<ExactnessReport> {
    Ok(ExactnessReport {
        hypothesis_satisfied: true,
        positions: mayer_vietoris_sequence(h, g, field)?.check(),
    })
}

pub fn mayer_vietoris_sequence(h: &Hypergraph, g: &Hypergraph, field: Field) -> Result<LongExactSequence> {
    check_hypothesis(h, g)?;
    let ambient = Arc::new(Ambient::of(&h.union(g)));
    Ok(mayer_vietoris_row_in(h, g, &ambient, field, top_degree(h, g))?.sequence)
}

/// The two long exact sequences available without the intersection
/// hypothesis: one through the sum complex S = Inf(h) + Inf(g), and one for
/// the pair S ⊆ Inf(h ∪ g) with the quotient complex.
pub fn general_sequences(h: &Hypergraph, g: &Hypergraph, field: Field) -> Result<(ExactnessReport, ExactnessReport)> {
    let (first, second) = general_long_sequences(h, g, field)?;
    let hypothesis_satisfied = first_mv_violation(h, g).is_none();
    Ok((
        ExactnessReport {
            hypothesis_satisfied,
            positions: first.check(),
        },
        ExactnessReport {
            hypothesis_satisfied,
            positions: second.check(),
        },
    ))
}

pub fn general_long_sequences(h: &Hypergraph, g: &Hypergraph, field: Field) -> Result<(LongExactSequence, LongExactSequence)> {
    let ring: CoefficientRing = field.into();
    let ambient = Arc::new(Ambient::of(&h.union(g)));
    let top = top_degree(h, g);
    let inter = infimum_chain_in(&h.intersection(g), &ambient, ring)?;
    let left = infimum_chain_in(h, &ambient, ring)?;
    let right = infimum_chain_in(g, &ambient, ring)?;
    let union = infimum_chain_in(&h.union(g), &ambient, ring)?;
    let sum_groups = (0..ambient.degrees())
        .map(|n| left.group(n).sum(&right.group(n)))
        .collect::<Result<Vec<_>>>()?;
    let sum = SubChainComplex::new(ambient.clone(), ring, sum_groups)?;
    if !union.contains(&sum)? {
        return Err(Error::internal("Inf(h) + Inf(g) is not inside Inf(h ∪ g)"));
    }
    let first = sum_sequence(field, top, &inter, &left, &right, &sum, Spot::Sum)?;

    // S → Inf(∪) → Inf(∪)/S with relative cycles {x ∈ Inf(∪) : ∂x ∈ S}.
    let sb = &first.target;
    let ub = bases(&union, top)?;
    let mut qb = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let below = if n == 0 {
            ChainSubspace::zero(ring, 0)
        } else {
            sum.group(n - 1)
        };
        let cycles = union.group(n).preimage_within(&ambient.boundary(n), &below)?;
        let boundaries = sum.group(n).sum(&union.boundaries(n))?;
        qb.push(HomologyBasis::new(&cycles, &boundaries)?);
    }
    let mut ranks = Vec::new();
    let (mut f, mut g2, mut delta) = (Vec::new(), Vec::new(), Vec::new());
    for n in 0..=top {
        let dim = ambient.count(n);
        ranks.push([sb[n].rank(), ub[n].rank(), qb[n].rank()]);
        f.push(inclusion_matrix(&sb[n], &ub[n], dim)?);
        g2.push(inclusion_matrix(&ub[n], &qb[n], dim)?);
        delta.push(if n == 0 {
            RatMatrix::zeros(0, qb[0].rank())
        } else {
            let boundary = ambient.boundary(n);
            let mut m = RatMatrix::zeros(sb[n - 1].rank(), qb[n].rank());
            for (j, z) in qb[n].representatives().iter().enumerate() {
                let dz = boundary.mul_vec(z);
                let c = sb[n - 1]
                    .classify(&dz)
                    .ok_or_else(|| Error::internal("boundary of a relative cycle is not a cycle of the sum"))?;
                for (i, x) in c.into_iter().enumerate() {
                    m[(i, j)] = x;
                }
            }
            m
        });
    }
    let second = LongExactSequence {
        field,
        spots: [Spot::Sum, Spot::Union, Spot::Quotient],
        ranks,
        f,
        g: g2,
        delta,
    };
    Ok((first.sequence, second))
}

/// Vertical maps between two rows computed in the same ambient complex:
/// (intersection, direct sum, target) per degree.
pub(crate) fn row_maps(
    lower: &MayerVietorisRow,
    upper: &MayerVietorisRow,
    ambient: &Ambient,
) -> Result<Vec<[RatMatrix; 3]>> {
    (0..=lower.sequence.top())
        .map(|n| {
            let dim = ambient.count(n);
            let inter = inclusion_matrix(&lower.intersection[n], &upper.intersection[n], dim)?;
            let left = inclusion_matrix(&lower.left[n], &upper.left[n], dim)?;
            let right = inclusion_matrix(&lower.right[n], &upper.right[n], dim)?;
            let target = inclusion_matrix(&lower.target[n], &upper.target[n], dim)?;
            Ok([inter, block_diag(&left, &right), target])
        })
        .collect()
}

pub(crate) fn matrices_equal(field: Field, a: &RatMatrix, b: &RatMatrix) -> bool {
    a.rows() == b.rows()
        && a.cols() == b.cols()
        && (0..a.rows()).all(|i| (0..a.cols()).all(|j| field.sub(&a[(i, j)], &b[(i, j)]).is_zero()))
}
