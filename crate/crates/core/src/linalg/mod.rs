pub mod exact;
pub mod field;
pub mod gf2;

pub use exact::{bareiss_rank, det4, is_primitive, smith_invariant_factors, unimodular};
pub use field::{field_rank, FieldSpec, SparseMat};
pub use gf2::{gf2_independent, gf2_rank, BitMatrix, Gf2Basis, Gf2Vec};
