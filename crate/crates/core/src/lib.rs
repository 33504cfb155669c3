//! Combinatorial commutative algebra and toric topology of finite simplicial
//! complexes: characteristic maps over GF(2) and over the integers, Buchstaber
//! invariants, and bigraded Betti numbers computed by several independent
//! routes.

pub mod betti;
pub mod buchstaber;
pub mod charmap;
pub mod complex;
pub mod error;
pub mod homology;
pub mod lift;
pub mod linalg;
pub mod random;
pub mod taylor;
pub mod universal;
pub mod vertexset;

pub use betti::{
    betti_hochster, betti_hochster_multigraded, betti_koszul, betti_koszul_multigraded,
    betti_minimal_taylor, betti_minimal_taylor_multigraded, h_vector_identity_holds,
    zk_cohomology_dims, BettiMethod, BettiTable, MultigradedBetti,
};
pub use buchstaber::{
    buchstaber_report, erokhovets_witness, real_r, real_r_bounds, BuchstaberReport, RealRResult,
    RealRShortcut, SExactReason, DEFAULT_BUDGET,
};
pub use charmap::{zero_one_lift, CharMapGF2, CharMapInt};
pub use complex::{
    boundary_simplex, empty_complex, simplex, SetSystem, SimplicialComplex, VectorStats,
};
pub use error::{Error, Result};
pub use homology::reduced_cohomology_dims;
pub use lift::{ru4_lift_search, LiftCandidate, LiftMode, SearchReport};
pub use linalg::{FieldSpec, SparseMat};
pub use taylor::{
    check_d_squared, check_exactness, check_leibniz, taylor_differential, taylor_is_minimal,
    taylor_product, tor_product_table, TaylorGenerator, TaylorTerm, TorProductTable,
};
pub use universal::RUComplex;
pub use vertexset::VertexSet;
