//! Infimum and supremum chain complexes of a hypergraph inside a simplicial
//! complex, and their homology.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chainalg::field::to_field_matrix;
use crate::chainalg::{
    quotient_structure, smith_normal_form, Ambient, ChainSubspace, CoefficientRing, Field, IntMatrix,
    LinearSolver, RatMatrix,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, HypergraphMorphism, SimplicialComplex, Vertex};

/// One homology group: `R^free_rank ⊕ ⊕ R/t_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub ring: CoefficientRing,
}

impl HomologyGroup {
    pub fn zero(degree: usize, ring: CoefficientRing) -> Self {
        HomologyGroup {
            degree,
            free_rank: 0,
            torsion: Vec::new(),
            ring,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Rank and torsion, ignoring degree and ring.
    pub fn structure(&self) -> (usize, &[BigInt]) {
        (self.free_rank, &self.torsion)
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let base = match self.ring {
            CoefficientRing::PrimeField(p) => format!("(Z/{p})"),
            r => r.to_string(),
        };
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push(base),
            r => parts.push(format!("{base}^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// A graded family of subgroups of the chains of an ambient complex that is
/// closed under the boundary.
#[derive(Clone, Debug)]
pub struct SubChainComplex {
    ambient: Arc<Ambient>,
    ring: CoefficientRing,
    groups: Vec<ChainSubspace>,
}

impl SubChainComplex {
    /// Wraps per-degree subgroups; checks closure under ∂.
    pub fn new(ambient: Arc<Ambient>, ring: CoefficientRing, groups: Vec<ChainSubspace>) -> Result<Self> {
        let c = SubChainComplex { ambient, ring, groups };
        c.check_closed()?;
        Ok(c)
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn degrees(&self) -> usize {
        self.groups.len()
    }

    /// The degree-n subgroup (zero beyond the stored range).
    pub fn group(&self, n: usize) -> ChainSubspace {
        self.groups
            .get(n)
            .cloned()
            .unwrap_or_else(|| ChainSubspace::zero(self.ring, self.ambient.count(n)))
    }

    pub fn groups(&self) -> &[ChainSubspace] {
        &self.groups
    }

    fn check_closed(&self) -> Result<()> {
        for n in 1..self.groups.len() {
            let image = self.groups[n].image(&self.ambient.boundary(n))?;
            if !self.groups[n - 1].contains(&image)? {
                return Err(Error::internal(format!("boundary leaves the complex in degree {n}")));
            }
        }
        Ok(())
    }

    pub fn cycles(&self, n: usize) -> ChainSubspace {
        let below = if n == 0 { 0 } else { self.ambient.count(n - 1) };
        let zero = ChainSubspace::zero(self.ring, below);
        self.group(n)
            .preimage_within(&self.ambient.boundary(n), &zero)
            .expect("dimensions agree")
    }

    pub fn boundaries(&self, n: usize) -> ChainSubspace {
        self.group(n + 1)
            .image(&self.ambient.boundary(n + 1))
            .expect("dimensions agree")
    }

    pub fn homology(&self, n: usize) -> Result<HomologyGroup> {
        let (free_rank, torsion) = quotient_structure(&self.boundaries(n), &self.cycles(n))
            .map_err(|_| Error::internal(format!("boundaries are not cycles in degree {n}")))?;
        Ok(HomologyGroup {
            degree: n,
            free_rank,
            torsion,
            ring: self.ring,
        })
    }

    /// A basis of homology in degree n over a field.
    pub fn homology_basis(&self, n: usize) -> Result<HomologyBasis> {
        HomologyBasis::new(&self.cycles(n), &self.boundaries(n))
    }

    pub fn contains(&self, other: &SubChainComplex) -> Result<bool> {
        let top = self.degrees().max(other.degrees());
        for n in 0..top {
            if !self.group(n).contains(&other.group(n))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_groups(&self, other: &SubChainComplex) -> bool {
        let top = self.degrees().max(other.degrees());
        (0..top).all(|n| self.group(n) == other.group(n))
    }
}

/// Homology classes over a field: cycle representatives complementary to
/// the boundaries, chosen greedily from the canonical cycle basis.
#[derive(Clone, Debug)]
pub struct HomologyBasis {
    field: Field,
    boundary_rank: usize,
    representatives: Vec<Vec<BigInt>>,
    solver: LinearSolver,
}

impl HomologyBasis {
    pub fn new(cycles: &ChainSubspace, boundaries: &ChainSubspace) -> Result<Self> {
        let field = cycles.ring().field()?;
        let dim = cycles.ambient_dim();
        let mut span = boundaries.clone();
        let mut representatives = Vec::new();
        for z in cycles.vectors() {
            if !span.contains_vector(&z) {
                span = span.sum(&ChainSubspace::from_vectors(cycles.ring(), dim, std::slice::from_ref(&z)))?;
                representatives.push(z);
            }
        }
        let gens = boundaries
            .basis()
            .hstack(&IntMatrix::from_columns(dim, &representatives));
        let solver = LinearSolver::new(field, &to_field_matrix(field, &gens));
        Ok(HomologyBasis {
            field,
            boundary_rank: boundaries.rank(),
            representatives,
            solver,
        })
    }

    pub fn rank(&self) -> usize {
        self.representatives.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn representatives(&self) -> &[Vec<BigInt>] {
        &self.representatives
    }

    /// Coordinates of the class of cycle `v`; `None` when `v` is not a cycle
    /// of the complex.
    pub fn classify(&self, v: &[BigInt]) -> Option<Vec<BigRational>> {
        self.solver
            .solve_int(v)
            .map(|y| y[self.boundary_rank..].to_vec())
    }

    /// As [`HomologyBasis::classify`] for a vector with field entries.
    pub fn classify_field(&self, v: &[BigRational]) -> Option<Vec<BigRational>> {
        self.solver.solve(v).map(|y| y[self.boundary_rank..].to_vec())
    }

    /// Matrix of a chain map on homology: columns are the classes of the
    /// images of this basis' representatives in `target`.
    pub fn map_to(&self, chain_map: &IntMatrix, target: &HomologyBasis) -> Result<RatMatrix> {
        let mut m = RatMatrix::zeros(target.rank(), self.rank());
        for (j, z) in self.representatives.iter().enumerate() {
            let img = chain_map.mul_vec(z);
            let c = target
                .classify(&img)
                .ok_or_else(|| Error::internal("chain map does not send cycles to cycles"))?;
            for (i, x) in c.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        Ok(m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    Infimum,
    Supremum,
}

/// The infimum or supremum chain complex of a hypergraph.
#[derive(Clone, Debug)]
pub struct EmbeddedChainComplex {
    kind: ChainKind,
    chains: SubChainComplex,
}

impl EmbeddedChainComplex {
    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn chains(&self) -> &SubChainComplex {
        &self.chains
    }

    pub fn into_chains(self) -> SubChainComplex {
        self.chains
    }
}

impl std::ops::Deref for EmbeddedChainComplex {
    type Target = SubChainComplex;

    fn deref(&self) -> &SubChainComplex {
        &self.chains
    }
}

/// The coordinate subgroups G(𝓗_n) inside the ambient chains, per degree.
pub fn hyperedge_subgroups(h: &Hypergraph, ambient: &Ambient, ring: CoefficientRing) -> Result<Vec<ChainSubspace>> {
    if !h.is_subset(ambient.complex().as_hypergraph()) {
        return Err(Error::NotContained);
    }
    (0..ambient.degrees())
        .map(|n| {
            let idx = ambient.coordinates_of(h, n).ok_or(Error::NotContained)?;
            Ok(ChainSubspace::coordinate(ring, ambient.count(n), &idx))
        })
        .collect()
}

/// Inf_n = D_n ∩ ∂⁻¹(D_{n−1}) inside the given ambient complex.
pub fn infimum_chain_in(h: &Hypergraph, ambient: &Arc<Ambient>, ring: CoefficientRing) -> Result<EmbeddedChainComplex> {
    let d = hyperedge_subgroups(h, ambient, ring)?;
    let groups = (0..d.len())
        .map(|n| {
            if n == 0 {
                Ok(d[0].clone())
            } else {
                d[n].preimage_within(&ambient.boundary(n), &d[n - 1])
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EmbeddedChainComplex {
        kind: ChainKind::Infimum,
        chains: SubChainComplex::new(ambient.clone(), ring, groups)?,
    })
}

/// Sup_n = D_n + ∂D_{n+1} inside the given ambient complex.
pub fn supremum_chain_in(h: &Hypergraph, ambient: &Arc<Ambient>, ring: CoefficientRing) -> Result<EmbeddedChainComplex> {
    let d = hyperedge_subgroups(h, ambient, ring)?;
    let groups = (0..d.len())
        .map(|n| match d.get(n + 1) {
            Some(next) => d[n].sum(&next.image(&ambient.boundary(n + 1))?),
            None => Ok(d[n].clone()),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(EmbeddedChainComplex {
        kind: ChainKind::Supremum,
        chains: SubChainComplex::new(ambient.clone(), ring, groups)?,
    })
}

pub fn infimum_chain(h: &Hypergraph, ring: CoefficientRing) -> EmbeddedChainComplex {
    infimum_chain_in(h, &Arc::new(Ambient::of(h)), ring).expect("h lies in its own closure")
}

pub fn supremum_chain(h: &Hypergraph, ring: CoefficientRing) -> EmbeddedChainComplex {
    supremum_chain_in(h, &Arc::new(Ambient::of(h)), ring).expect("h lies in its own closure")
}

fn reported_degrees(h: &Hypergraph) -> std::ops::Range<usize> {
    0..h.dimension().map_or(0, |d| d + 1)
}

/// Embedded homology in degrees 0..=dim h, computed as
/// Ker(∂_n|G(𝓗_n)) / (G(𝓗_n) ∩ ∂_{n+1}G(𝓗_{n+1})).
pub fn embedded_homology(h: &Hypergraph, ring: CoefficientRing) -> Vec<HomologyGroup> {
    let ambient = Ambient::of(h);
    let d = hyperedge_subgroups(h, &ambient, ring).expect("h lies in its own closure");
    reported_degrees(h)
        .map(|n| {
            let target = ChainSubspace::zero(ring, if n == 0 { 0 } else { ambient.count(n - 1) });
            let cycles = d[n]
                .preimage_within(&ambient.boundary(n), &target)
                .expect("dimensions agree");
            let image = d[n + 1].image(&ambient.boundary(n + 1)).expect("dimensions agree");
            let boundaries = d[n].intersection(&image).expect("same ambient");
            let (free_rank, torsion) = quotient_structure(&boundaries, &cycles).expect("boundaries are cycles");
            HomologyGroup {
                degree: n,
                free_rank,
                torsion,
                ring,
            }
        })
        .collect()
}

/// Homology of the supremum chain complex in degrees 0..=dim h.
pub fn sup_homology(h: &Hypergraph, ring: CoefficientRing) -> Vec<HomologyGroup> {
    let sup = supremum_chain(h, ring);
    reported_degrees(h)
        .map(|n| sup.homology(n).expect("supremum complex is a chain complex"))
        .collect()
}

/// Betti numbers over a field, degrees 0..=dim h.
pub fn betti_numbers(h: &Hypergraph, field: Field) -> Vec<usize> {
    embedded_homology(h, field.into()).iter().map(|g| g.free_rank).collect()
}

/// Classical simplicial homology of `k` in degrees 0..=dim k from the Smith
/// normal forms (over ℤ) or ranks (over a field) of its boundary matrices.
pub fn simplicial_homology(k: &SimplicialComplex, ring: CoefficientRing) -> Vec<HomologyGroup> {
    let Some(dim) = k.dimension() else {
        return Vec::new();
    };
    let ambient = Ambient::new(k.clone());
    // (rank, torsion) of ∂_n for n in 0..=dim+1
    let data: Vec<(usize, Vec<BigInt>)> = (0..=dim + 1)
        .map(|n| {
            let b = ambient.boundary(n);
            match ring.field() {
                Ok(f) => (crate::chainalg::field::rank(f, &to_field_matrix(f, &b)), Vec::new()),
                Err(_) => {
                    let factors = smith_normal_form(&b).invariant_factors();
                    let torsion = factors.iter().filter(|d| !d.is_one()).cloned().collect();
                    (factors.len(), torsion)
                }
            }
        })
        .collect();
    (0..=dim)
        .map(|n| HomologyGroup {
            degree: n,
            free_rank: ambient.count(n) - data[n].0 - data[n + 1].0,
            torsion: data[n + 1].1.clone(),
            ring,
        })
        .collect()
}

/// Number of connected components via H_0. Requires every vertex to be a
/// 0-hyperedge; the answer is cross-checked against union-find on the
/// graph of 0- and 1-hyperedges.
pub fn zeroth_homology_components(h: &Hypergraph) -> Result<usize> {
    if let Some(v) = h.universe().iter().find(|v| !h.contains_edge(&Hyperedge::singleton((*v).clone()))) {
        return Err(Error::PreconditionViolated(format!("vertex {v} is not a 0-hyperedge")));
    }
    let rank = embedded_homology(h, CoefficientRing::Integers)
        .first()
        .map_or(0, |g| g.free_rank);
    let components = component_count(h.universe(), h.edges().filter(|e| e.len() == 2));
    if rank != components {
        return Err(Error::internal(format!(
            "rank H_0 = {rank} but the 1-skeleton has {components} components"
        )));
    }
    Ok(rank)
}

/// Connected components of the graph on `vertices` whose edges join the
/// vertices of each given hyperedge.
pub fn component_count<'a>(vertices: &[Vertex], edges: impl Iterator<Item = &'a Hyperedge>) -> usize {
    let index: BTreeMap<&Vertex, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut count = vertices.len();
    for e in edges {
        let vs = e.vertices();
        let a = find(&mut parent, index[&vs[0]]);
        for v in &vs[1..] {
            let b = find(&mut parent, index[v]);
            let a = find(&mut parent, a);
            if a != b {
                parent[b] = a;
                count -= 1;
            }
        }
    }
    count
}

/// H_{dim h}(𝓗;ℤ), which coincides with H_{dim h}(K_𝓗;ℤ).
pub fn top_homology(h: &Hypergraph) -> Result<HomologyGroup> {
    let n = h.dimension().ok_or(Error::EmptyHypergraph)?;
    let embedded = embedded_homology(h, CoefficientRing::Integers).swap_remove(n);
    let classical = simplicial_homology(&h.associated_complex(), CoefficientRing::Integers).swap_remove(n);
    if embedded != classical {
        return Err(Error::internal(format!(
            "top homology {embedded} differs from H_{n}(K) = {classical}"
        )));
    }
    Ok(embedded)
}

/// A linear map on homology in one degree, in the chosen homology bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyMap {
    pub degree: usize,
    pub field: Field,
    pub source_rank: usize,
    pub target_rank: usize,
    pub matrix: RatMatrix,
}

impl HomologyMap {
    pub fn rank(&self) -> usize {
        crate::chainalg::field::rank(self.field, &self.matrix)
    }

    pub fn is_identity(&self) -> bool {
        self.source_rank == self.target_rank && self.matrix == RatMatrix::identity(self.source_rank)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &HomologyMap) -> Result<HomologyMap> {
        if self.target_rank != next.source_rank || self.field != next.field {
            return Err(Error::DimensionMismatch("homology maps are not composable".into()));
        }
        let matrix = next.matrix.mul(&self.matrix).map(|x| self.field.normalize(x.clone()));
        Ok(HomologyMap {
            degree: self.degree,
            field: self.field,
            source_rank: self.source_rank,
            target_rank: next.target_rank,
            matrix,
        })
    }
}

/// Sign of the permutation sorting `items`, or `None` if two coincide.
fn sorting_sign<T: Ord>(items: &[T]) -> Option<i64> {
    let mut sign = 1;
    for i in 0..items.len() {
        for j in i + 1..items.len() {
            match items[i].cmp(&items[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(sign)
}

/// Matrix of the chain map induced by a vertex map in degree n: a simplex
/// goes to its image simplex (with the orientation sign) when the images of
/// its vertices are distinct, and to 0 otherwise.
pub fn chain_map_matrix(f: &HypergraphMorphism, source: &Ambient, target: &Ambient, n: usize) -> Result<IntMatrix> {
    let mut m = IntMatrix::zeros(target.count(n), source.count(n));
    for (j, s) in source.simplices(n).iter().enumerate() {
        let images: Vec<&Vertex> = s.vertices().iter().map(|v| f.map_vertex(v)).collect();
        let Some(sign) = sorting_sign(&images) else {
            continue;
        };
        let img = f.image(s);
        let i = target
            .index_of(&img)
            .ok_or_else(|| Error::InvalidMorphism(format!("image {img:?} of {s:?} is not a simplex")))?;
        m[(i, j)] = BigInt::from(sign);
    }
    Ok(m)
}

/// The map f_* : H_n(source) → H_n(target) over a field.
pub fn induced_map(f: &HypergraphMorphism, degree: usize, field: Field) -> Result<HomologyMap> {
    f.apply_functor()?;
    let ring = field.into();
    let src_amb = Arc::new(Ambient::of(f.source()));
    let tgt_amb = Arc::new(Ambient::of(f.target()));
    let src = infimum_chain_in(f.source(), &src_amb, ring)?;
    let tgt = infimum_chain_in(f.target(), &tgt_amb, ring)?;
    let chain = chain_map_matrix(f, &src_amb, &tgt_amb, degree)?;
    let image = src.group(degree).image(&chain)?;
    if !tgt.group(degree).contains(&image)? {
        return Err(Error::internal("induced chain map leaves the infimum complex"));
    }
    let sb = src.homology_basis(degree)?;
    let tb = tgt.homology_basis(degree)?;
    let matrix = sb.map_to(&chain, &tb)?;
    Ok(HomologyMap {
        degree,
        field,
        source_rank: sb.rank(),
        target_rank: tb.rank(),
        matrix,
    })
}

/// Whether Inf and Sup of `h` computed inside `k` agree with those computed
/// inside K_𝓗.
pub fn ambient_independence_check(h: &Hypergraph, k: &SimplicialComplex, ring: CoefficientRing) -> Result<bool> {
    if !h.is_subset(k.as_hypergraph()) {
        return Err(Error::NotContained);
    }
    let big = Arc::new(Ambient::new(k.clone()));
    let small = Arc::new(Ambient::of(h));
    let pairs = [
        (infimum_chain_in(h, &big, ring)?, infimum_chain_in(h, &small, ring)?),
        (supremum_chain_in(h, &big, ring)?, supremum_chain_in(h, &small, ring)?),
    ];
    for (in_big, in_small) in &pairs {
        for n in 0..big.degrees().max(small.degrees()) {
            let g = in_big.group(n);
            // Restrict k's coordinates to those of K_𝓗.
            let rows: Vec<Option<usize>> = big.simplices(n).iter().map(|s| small.index_of(s)).collect();
            let mut restricted = IntMatrix::zeros(small.count(n), g.rank());
            for (j, v) in g.vectors().iter().enumerate() {
                for (i, x) in v.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    match rows[i] {
                        Some(r) => restricted[(r, j)] = x.clone(),
                        None => return Ok(false),
                    }
                }
            }
            if ChainSubspace::span(ring, small.count(n), &restricted) != in_small.group(n) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
