//! The modular isogeny complex and generic field complexes.

pub mod field_complex;
pub mod modular;

pub use field_complex::{cohomology, FieldComplex, HomologyProfile};
pub use modular::{
    build_complex, complex_dims, compositions, expected_top_rank, h2_cokernel_check,
    rank_generating_check, H2CokernelReport, RankGeneratingReport, Specialization,
};
