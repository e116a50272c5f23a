//! Deformation complex of an algebra over a binary Koszul presentation:
//! the convolution complex from the dual cooperad to the endomorphisms of
//! the algebra, with its preLie product, intrinsic bracket, twisting
//! cochain and differential, and the multiplicative (cosimplicial + cup)
//! structure in the regular case. The sign conventions are pinned by one
//! requirement: for the associative presentation the whole structure
//! coincides with the classical Hochschild complex.

mod algebra;
mod convolution;
pub mod hochschild;
mod multilinear;
mod quotient;

pub use algebra::{
    algebra_from_file, algebra_to_file, associative_examples, dendriform_example,
    op_from_entries, AlgebraFile, AlgebraOpFile, AlgebraStructure,
};
pub use convolution::{
    bracket, build_dual_cooperad, cosimplicial_d, cup, differential, face_maps,
    minus_one_bracket, mult_differential, multiplication, star, twisting_cochain,
    ConvolutionElement, DeformationContext, DualCooperad,
};
pub use multilinear::MultiMap;
pub use quotient::QuotientTrunc;
