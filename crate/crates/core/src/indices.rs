//! The connectivity, differentiation and correlation indices of a
//! hypergraph, with the step-function arithmetic behind them.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::chainalg::Field;
use crate::embedded::betti_numbers;
use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, Vertex};
use crate::persistence::VertexValues;
use crate::rational::{sqrt_lower, sqrt_upper};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn pow2(k: usize) -> BigRational {
    BigRational::from_integer(BigInt::one() << k)
}

/// The (Rk) operation applied until it no longer applies: a vertex lying in
/// exactly `k` hyperedges is removed from all of them, in canonical vertex
/// order.
pub fn rk_reduce(h: &Hypergraph, k: usize) -> Hypergraph {
    let mut edges: BTreeSet<Hyperedge> = h.edge_set().clone();
    loop {
        let vertices: BTreeSet<&Vertex> = edges.iter().flat_map(|e| e.vertices()).collect();
        let Some(v) = vertices
            .into_iter()
            .find(|v| edges.iter().filter(|e| e.contains(v)).count() == k)
            .cloned()
        else {
            break;
        };
        edges = edges.into_iter().filter_map(|e| if e.contains(&v) { e.without(&v) } else { Some(e) }).collect();
    }
    Hypergraph::from_edges(edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IndexKind {
    Conn,
    Diff,
    Corr,
}

/// How the expectation over reassigned values was formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SamplingInfo {
    pub seed: u64,
    /// Number of reassignments averaged.
    pub samples: usize,
    /// True when every distinct reassignment was enumerated.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub kind: IndexKind,
    pub value: BigRational,
    /// Weighted contributions per k (Conn) or per degree (Diff, Corr).
    pub terms: Vec<BigRational>,
    /// Closed-form geometric tail of the Conn series.
    pub tail: Option<BigRational>,
    pub sampling: Option<SamplingInfo>,
}

/// Conn(𝓗) = Σ_k dim H_0(𝓗^k; ℚ) / (2^{k+1} |V_{𝓗^k}|), summed exactly.
///
/// 𝓗^0 is `h` with every vertex added as a 0-hyperedge. An empty 𝓗^k
/// contributes ratio 1, the value a discrete hypergraph has at every k. Once
/// k exceeds the hyperedge count the sequence is constant and the remaining
/// series is added in closed form.
pub fn connectivity_index(h: &Hypergraph) -> Result<IndexReport> {
    if h.is_empty() {
        return Err(Error::EmptyHypergraph);
    }
    let mut current = h.with_singletons();
    let mut terms = Vec::new();
    let mut k = 0;
    loop {
        let ratio = if current.is_empty() {
            BigRational::one()
        } else {
            let b0 = betti_numbers(&current, Field::Rationals)[0];
            rat(b0 as i64, current.universe().len() as i64)
        };
        let weight = pow2(k + 1);
        terms.push(&ratio / &weight);
        if k + 1 > current.edge_count() {
            let tail = ratio / weight;
            let value = terms.iter().fold(tail.clone(), |acc, t| acc + t);
            return Ok(IndexReport {
                kind: IndexKind::Conn,
                value,
                terms,
                tail: Some(tail),
                sampling: None,
            });
        }
        k += 1;
        current = rk_reduce(&current, k);
    }
}

/// A piecewise-constant function on [0, 1]. The first piece is [b_0, b_1]
/// and the others (b_k, b_{k+1}], matching superlevel sets `φ ≥ t`, which
/// are constant on such intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction1D {
    breakpoints: Vec<BigRational>,
    values: Vec<BigRational>,
}

fn check_breaks(b: &[BigRational]) -> Result<()> {
    let ok = b.len() >= 2
        && b[0].is_zero()
        && b[b.len() - 1].is_one()
        && b.windows(2).all(|w| w[0] < w[1]);
    if ok {
        Ok(())
    } else {
        Err(Error::PreconditionViolated("breakpoints must increase from 0 to 1".into()))
    }
}

fn piece_of(breaks: &[BigRational], t: &BigRational) -> Option<usize> {
    if t < &breaks[0] || t > &breaks[breaks.len() - 1] {
        return None;
    }
    // first k with t ≤ b_{k+1}
    Some(breaks[1..].partition_point(|b| b < t).min(breaks.len() - 2))
}

fn merged(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut all: Vec<BigRational> = a.iter().chain(b).cloned().collect();
    all.sort();
    all.dedup();
    all
}

impl StepFunction1D {
    pub fn new(breakpoints: Vec<BigRational>, values: Vec<BigRational>) -> Result<Self> {
        check_breaks(&breakpoints)?;
        if values.len() + 1 != breakpoints.len() || values.iter().any(|v| v < &BigRational::zero()) {
            return Err(Error::PreconditionViolated("one non-negative value per piece".into()));
        }
        Ok(StepFunction1D { breakpoints, values })
    }

    pub fn constant(value: BigRational) -> Self {
        StepFunction1D {
            breakpoints: vec![BigRational::zero(), BigRational::one()],
            values: vec![value],
        }
    }

    pub fn breakpoints(&self) -> &[BigRational] {
        &self.breakpoints
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn evaluate(&self, t: &BigRational) -> Option<&BigRational> {
        piece_of(&self.breakpoints, t).map(|k| &self.values[k])
    }

    /// The same function on a finer set of breakpoints.
    pub fn refine(&self, extra: &[BigRational]) -> Result<Self> {
        let breaks = merged(&self.breakpoints, extra);
        check_breaks(&breaks)?;
        let values = breaks.windows(2).map(|w| self.evaluate(&w[1]).expect("in range").clone()).collect();
        Ok(StepFunction1D { breakpoints: breaks, values })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let breaks = merged(&self.breakpoints, &other.breakpoints);
        let values = breaks
            .windows(2)
            .map(|w| f(self.evaluate(&w[1]).expect("in range"), other.evaluate(&w[1]).expect("in range")))
            .collect();
        StepFunction1D { breakpoints: breaks, values }
    }

    /// ∫ f² over [0, 1].
    pub fn norm_squared(&self) -> BigRational {
        self.breakpoints
            .windows(2)
            .zip(&self.values)
            .fold(BigRational::zero(), |acc, (w, v)| acc + v * v * (&w[1] - &w[0]))
    }

    /// ‖f − g‖₂² without forming a signed step function.
    pub fn distance_squared(&self, other: &Self) -> BigRational {
        self.zip_with(other, |a, b| if a > b { a - b } else { b - a }).norm_squared()
    }
}

/// A piecewise-constant function on [0, 1]², constant on products of the
/// 1-D pieces. Values are stored row-major by x piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFunction2D {
    x_breaks: Vec<BigRational>,
    y_breaks: Vec<BigRational>,
    values: Vec<BigRational>,
}

impl StepFunction2D {
    pub fn new(x_breaks: Vec<BigRational>, y_breaks: Vec<BigRational>, values: Vec<BigRational>) -> Result<Self> {
        check_breaks(&x_breaks)?;
        check_breaks(&y_breaks)?;
        if values.len() != (x_breaks.len() - 1) * (y_breaks.len() - 1) || values.iter().any(|v| v < &BigRational::zero()) {
            return Err(Error::PreconditionViolated("one non-negative value per cell".into()));
        }
        Ok(StepFunction2D {
            x_breaks,
            y_breaks,
            values,
        })
    }

    pub fn x_breaks(&self) -> &[BigRational] {
        &self.x_breaks
    }

    pub fn y_breaks(&self) -> &[BigRational] {
        &self.y_breaks
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn evaluate(&self, x: &BigRational, y: &BigRational) -> Option<&BigRational> {
        let i = piece_of(&self.x_breaks, x)?;
        let j = piece_of(&self.y_breaks, y)?;
        Some(&self.values[i * (self.y_breaks.len() - 1) + j])
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let xs = merged(&self.x_breaks, &other.x_breaks);
        let ys = merged(&self.y_breaks, &other.y_breaks);
        let mut values = Vec::with_capacity((xs.len() - 1) * (ys.len() - 1));
        for x in &xs[1..] {
            for y in &ys[1..] {
                values.push(f(self.evaluate(x, y).expect("in range"), other.evaluate(x, y).expect("in range")));
            }
        }
        StepFunction2D {
            x_breaks: xs,
            y_breaks: ys,
            values,
        }
    }

    pub fn norm_squared(&self) -> BigRational {
        let ny = self.y_breaks.len() - 1;
        let mut total = BigRational::zero();
        for (i, wx) in self.x_breaks.windows(2).enumerate() {
            for (j, wy) in self.y_breaks.windows(2).enumerate() {
                let v = &self.values[i * ny + j];
                total += v * v * (&wx[1] - &wx[0]) * (&wy[1] - &wy[0]);
            }
        }
        total
    }

    pub fn distance_squared(&self, other: &Self) -> BigRational {
        self.zip_with(other, |a, b| if a > b { a - b } else { b - a }).norm_squared()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Barcode {
    One(StepFunction1D),
    Two(StepFunction2D),
}

/// Degree of fitness ‖a − b‖₂ / (‖a‖₂ + ‖b‖₂).
///
/// Squared norms are exact. The result is a rational lower bound on the
/// true ratio within 10^-39 (exact whenever the norms are rational). Two
/// zero functions have fitness 0; a zero and a non-zero function have 1.
pub fn fit(a: &Barcode, b: &Barcode) -> Result<BigRational> {
    let (d, na, nb) = match (a, b) {
        (Barcode::One(a), Barcode::One(b)) => (a.distance_squared(b), a.norm_squared(), b.norm_squared()),
        (Barcode::Two(a), Barcode::Two(b)) => (a.distance_squared(b), a.norm_squared(), b.norm_squared()),
        _ => return Err(Error::DomainMismatch),
    };
    Ok(match (na.is_zero(), nb.is_zero()) {
        (true, true) => BigRational::zero(),
        (true, false) | (false, true) => BigRational::one(),
        (false, false) => sqrt_lower(&d) / (sqrt_upper(&na) + sqrt_upper(&nb)),
    })
}

/// Betti numbers of `h` restricted to surviving vertex sets, memoized.
struct BettiCache {
    h: Hypergraph,
    memo: Mutex<HashMap<Vec<bool>, Arc<Vec<usize>>>>,
}

impl BettiCache {
    fn new(h: &Hypergraph) -> Self {
        BettiCache {
            h: h.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }

    fn betti(&self, keep: Vec<bool>) -> Arc<Vec<usize>> {
        if let Some(b) = self.memo.lock().expect("cache lock").get(&keep) {
            return b.clone();
        }
        let sub = self
            .h
            .restrict(|v| self.h.order_index(v).is_some_and(|i| keep[i]));
        let b = Arc::new(betti_numbers(&sub, Field::Rationals));
        self.memo.lock().expect("cache lock").insert(keep, b.clone());
        b
    }

    /// dim H_i of the hyperedges whose vertices all pass `pass`.
    fn dim(&self, i: usize, pass: impl Fn(usize) -> bool) -> usize {
        let keep = (0..self.h.universe().len()).map(pass).collect();
        self.betti(keep).get(i).copied().unwrap_or(0)
    }
}

/// Value vector aligned with the universe of `h`.
fn aligned(h: &Hypergraph, phi: &VertexValues) -> Result<Vec<BigRational>> {
    phi.check_covers(h)?;
    Ok(h.universe().iter().map(|v| phi.get(v).expect("covered").clone()).collect())
}

fn thresholds(values: &[BigRational]) -> Vec<BigRational> {
    merged(values, &[BigRational::zero(), BigRational::one()])
}

fn barcode_from(cache: &BettiCache, values: &[BigRational], breaks: &[BigRational], i: usize) -> StepFunction1D {
    let vals = breaks
        .windows(2)
        .map(|w| BigRational::from_integer(cache.dim(i, |v| values[v] >= w[1]).into()))
        .collect();
    StepFunction1D {
        breakpoints: breaks.to_vec(),
        values: vals,
    }
}

fn barcode2_from(
    cache: &BettiCache,
    phi: &[BigRational],
    psi: &[BigRational],
    xs: &[BigRational],
    ys: &[BigRational],
    i: usize,
) -> StepFunction2D {
    let mut values = Vec::with_capacity((xs.len() - 1) * (ys.len() - 1));
    for x in &xs[1..] {
        for y in &ys[1..] {
            values.push(BigRational::from_integer(
                cache.dim(i, |v| phi[v] >= *x && psi[v] >= *y).into(),
            ));
        }
    }
    StepFunction2D {
        x_breaks: xs.to_vec(),
        y_breaks: ys.to_vec(),
        values,
    }
}

/// f_{i,φ}(t) = dim H_i(𝓗(t); ℚ) with 𝓗(t) the hyperedges whose vertices
/// all have φ ≥ t. Breakpoints are 0, 1 and the values of φ.
pub fn barcode_function(h: &Hypergraph, phi: &VertexValues, i: usize) -> Result<StepFunction1D> {
    let values = aligned(h, phi)?;
    Ok(barcode_from(&BettiCache::new(h), &values, &thresholds(&values), i))
}

/// g_{i,φ,ψ}(t, s) = dim H_i(𝓗(t, s); ℚ) where vertices need φ ≥ t and
/// ψ ≥ s.
pub fn barcode_function_2d(h: &Hypergraph, phi: &VertexValues, psi: &VertexValues, i: usize) -> Result<StepFunction2D> {
    let (a, b) = (aligned(h, phi)?, aligned(h, psi)?);
    Ok(barcode2_from(&BettiCache::new(h), &a, &b, &thresholds(&a), &thresholds(&b), i))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplingOptions {
    pub samples: usize,
    pub seed: u64,
    /// Enumerate every distinct reassignment when there are at most this
    /// many.
    pub enumeration_bound: usize,
}

impl Default for SamplingOptions {
    fn default() -> Self {
        SamplingOptions {
            samples: 200,
            seed: 0,
            enumeration_bound: 5040,
        }
    }
}

/// n! / Π m_i! for the multiplicities of `values`.
fn distinct_permutations(values: &[BigRational]) -> BigUint {
    let mut sorted = values.to_vec();
    sorted.sort();
    let fact = |n: usize| (1..=n).fold(BigUint::one(), |acc, k| acc * k);
    let mut count = fact(values.len());
    for run in sorted.chunk_by(|a, b| a == b) {
        count /= fact(run.len());
    }
    count
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[i - 1] < v[j]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn all_arrangements(values: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut v = values.to_vec();
    v.sort();
    let mut out = vec![v.clone()];
    while next_permutation(&mut v) {
        out.push(v.clone());
    }
    out
}

fn shuffled(values: &[BigRational], seed: u64, stream: u64) -> Vec<BigRational> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let mut v = values.to_vec();
    v.shuffle(&mut rng);
    v
}

fn mean_values(sum: Vec<BigRational>, n: usize) -> Vec<BigRational> {
    let n = BigRational::from_integer(n.into());
    sum.into_iter().map(|x| x / &n).collect()
}

fn add_into(acc: &mut [BigRational], xs: &[BigRational]) {
    for (a, x) in acc.iter_mut().zip(xs) {
        *a += x;
    }
}

/// E f_{i,γ} over γ in W_φ, the reassignments of φ's values to the vertices,
/// for each degree in `degrees`. Enumerates W_φ when small enough, otherwise
/// averages `samples` uniform shuffles drawn from per-sample streams of a
/// generator seeded with `seed`.
pub fn expected_barcodes(
    h: &Hypergraph,
    phi: &VertexValues,
    degrees: usize,
    opts: SamplingOptions,
) -> Result<(Vec<StepFunction1D>, SamplingInfo)> {
    let values = aligned(h, phi)?;
    expected_barcodes_with(&BettiCache::new(h), &values, degrees, opts)
}

fn expected_barcodes_with(
    cache: &BettiCache,
    values: &[BigRational],
    degrees: usize,
    opts: SamplingOptions,
) -> Result<(Vec<StepFunction1D>, SamplingInfo)> {
    if opts.samples == 0 {
        return Err(Error::PreconditionViolated("at least one sample is required".into()));
    }
    let breaks = thresholds(values);
    let exhaustive = distinct_permutations(values) <= BigUint::from(opts.enumeration_bound);
    let arrangements: Vec<Vec<BigRational>> = if exhaustive {
        all_arrangements(values)
    } else {
        (0..opts.samples as u64).map(|s| shuffled(values, opts.seed, s)).collect()
    };
    let pieces = breaks.len() - 1;
    let per_arrangement: Vec<Vec<Vec<BigRational>>> = arrangements
        .par_iter()
        .map(|g| (0..degrees).map(|i| barcode_from(cache, g, &breaks, i).values).collect())
        .collect();
    let mut sums = vec![vec![BigRational::zero(); pieces]; degrees];
    for bars in &per_arrangement {
        for (acc, b) in sums.iter_mut().zip(bars) {
            add_into(acc, b);
        }
    }
    let functions = sums
        .into_iter()
        .map(|s| StepFunction1D {
            breakpoints: breaks.clone(),
            values: mean_values(s, arrangements.len()),
        })
        .collect();
    let info = SamplingInfo {
        seed: opts.seed,
        samples: arrangements.len(),
        exhaustive,
    };
    Ok((functions, info))
}

/// E f_{i,γ} for a single degree.
pub fn expected_barcode(h: &Hypergraph, phi: &VertexValues, i: usize, opts: SamplingOptions) -> Result<StepFunction1D> {
    let (mut fs, _) = expected_barcodes(h, phi, i + 1, opts)?;
    Ok(fs.swap_remove(i))
}

fn degree_count(h: &Hypergraph) -> usize {
    h.dimension().map_or(0, |d| d + 1)
}

fn weighted_sum(kind: IndexKind, fits: Vec<BigRational>, sampling: SamplingInfo) -> IndexReport {
    let terms: Vec<BigRational> = fits.into_iter().enumerate().map(|(i, f)| f / pow2(i + 1)).collect();
    IndexReport {
        kind,
        value: terms.iter().fold(BigRational::zero(), |a, t| a + t),
        terms,
        tail: None,
        sampling: Some(sampling),
    }
}

/// Diff(φ, 𝓗) = Σ_i Fit(f_{i,φ}, E f_{i,γ}) / 2^{i+1} for i = 0..=dim 𝓗;
/// higher degrees contribute nothing.
pub fn differentiation_index(h: &Hypergraph, phi: &VertexValues, opts: SamplingOptions) -> Result<IndexReport> {
    let values = aligned(h, phi)?;
    let cache = BettiCache::new(h);
    let degrees = degree_count(h);
    let breaks = thresholds(&values);
    let (expected, info) = expected_barcodes_with(&cache, &values, degrees, opts)?;
    let fits = (0..degrees)
        .map(|i| {
            let actual = barcode_from(&cache, &values, &breaks, i);
            fit(&Barcode::One(actual), &Barcode::One(expected[i].clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(weighted_sum(IndexKind::Diff, fits, info))
}

/// Corr(φ, ψ, 𝓗) = Σ_i Fit(g_{i,φ,ψ}, E g_{i,γ1,γ2}) / 2^{i+1} with γ1, γ2
/// independent reassignments of φ and ψ. Pair `s` of a sampled run draws
/// γ1 from stream 2s and γ2 from stream 2s + 1.
pub fn correlation_index(
    h: &Hypergraph,
    phi: &VertexValues,
    psi: &VertexValues,
    opts: SamplingOptions,
) -> Result<IndexReport> {
    if opts.samples == 0 {
        return Err(Error::PreconditionViolated("at least one sample is required".into()));
    }
    let (a, b) = (aligned(h, phi)?, aligned(h, psi)?);
    let cache = BettiCache::new(h);
    let degrees = degree_count(h);
    let (xs, ys) = (thresholds(&a), thresholds(&b));

    let count = distinct_permutations(&a) * distinct_permutations(&b);
    let exhaustive = count <= BigUint::from(opts.enumeration_bound);
    let pairs: Vec<(Vec<BigRational>, Vec<BigRational>)> = if exhaustive {
        let (ga, gb) = (all_arrangements(&a), all_arrangements(&b));
        ga.iter().flat_map(|x| gb.iter().map(move |y| (x.clone(), y.clone()))).collect()
    } else {
        (0..opts.samples as u64)
            .map(|s| (shuffled(&a, opts.seed, 2 * s), shuffled(&b, opts.seed, 2 * s + 1)))
            .collect()
    };
    let cells = (xs.len() - 1) * (ys.len() - 1);
    let per_pair: Vec<Vec<Vec<BigRational>>> = pairs
        .par_iter()
        .map(|(g1, g2)| (0..degrees).map(|i| barcode2_from(&cache, g1, g2, &xs, &ys, i).values).collect())
        .collect();
    let mut sums = vec![vec![BigRational::zero(); cells]; degrees];
    for bars in &per_pair {
        for (acc, g) in sums.iter_mut().zip(bars) {
            add_into(acc, g);
        }
    }
    let fits = sums
        .into_iter()
        .enumerate()
        .map(|(i, s)| {
            let expected = StepFunction2D {
                x_breaks: xs.clone(),
                y_breaks: ys.clone(),
                values: mean_values(s, pairs.len()),
            };
            let actual = barcode2_from(&cache, &a, &b, &xs, &ys, i);
            fit(&Barcode::Two(actual), &Barcode::Two(expected))
        })
        .collect::<Result<Vec<_>>>()?;
    let info = SamplingInfo {
        seed: opts.seed,
        samples: pairs.len(),
        exhaustive,
    };
    Ok(weighted_sum(IndexKind::Corr, fits, info))
}
