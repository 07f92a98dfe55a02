//! Exact embedded homology of hypergraphs.
//!
//! A hypergraph is a set of non-empty vertex subsets that need not be closed
//! under taking faces. Its embedded homology is computed from the largest
//! subchain complex of its associated simplicial complex that lies inside the
//! span of the hyperedges. All arithmetic is exact: integer lattices use
//! Hermite and Smith normal forms, fields use rationals or integers mod p.
//!
//! ```
//! use embhom::{embedded_homology, CoefficientRing, Hypergraph};
//!
//! let h = Hypergraph::from_tokens(&[&["v0"], &["v1"], &["v2"], &["v0", "v1"], &["v0", "v1", "v2"]]).unwrap();
//! let groups = embedded_homology(&h, CoefficientRing::Integers);
//! let ranks: Vec<usize> = groups.iter().map(|g| g.free_rank).collect();
//! assert_eq!(ranks, [2, 0, 0]);
//! ```

pub mod acyclicity;
pub mod chainalg;
pub mod embedded;
pub mod error;
pub mod formats;
pub mod hypergraph;
pub mod indices;
pub mod mayer_vietoris;
pub mod persistence;
pub mod rational;
pub mod report;

pub use acyclicity::{
    check_reduction_invariance, check_theorem_5a, check_theorem_5b, cone_augmentation, is_acyclic, reduce_to_discrete,
    Operation, ReductionStep, ReductionTrace,
};
pub use chainalg::{Ambient, ChainSubspace, CoefficientRing, Field, IntMatrix, RatMatrix};
pub use embedded::{
    betti_numbers, embedded_homology, induced_map, infimum_chain, simplicial_homology, sup_homology, supremum_chain,
    HomologyGroup, HomologyMap,
};
pub use error::{Error, Result};
pub use hypergraph::{mv_condition, parse_hypergraph, Hyperedge, Hypergraph, HypergraphMorphism, SimplicialComplex, Vertex};
pub use indices::{
    barcode_function, connectivity_index, correlation_index, differentiation_index, expected_barcode, fit, Barcode,
    IndexReport, SamplingOptions, StepFunction1D, StepFunction2D,
};
pub use mayer_vietoris::{verify_long_exact, ExactnessReport};
pub use persistence::{
    metric_filtration, persistence_diagram, persistent_betti, sublevel_filtration, verify_persistent_mv, DistanceMatrix,
    Filtration, PersistenceDiagram, VertexValues,
};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
