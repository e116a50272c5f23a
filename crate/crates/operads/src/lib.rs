//! Exact computer algebra for binary quadratic operads.
//!
//! The crate computes with operads presented by generators and relations,
//! `P = F(V)/(R)`, where `V` is a space of binary operations and `R` a
//! subspace of the weight-two part `F(V)(3)` of the free operad. Everything
//! is done over the rationals with exact arithmetic.
//!
//! Main features:
//! - Koszul duals `P! = F(V^)/(R^perp)` via the signed weight-two pairing,
//! - Manin white/black products for symmetric operads and the square
//!   variants for regular (non-symmetric) operads,
//! - dimension tables of quotient operads through ideal spans,
//! - Poincare-series tests for the Koszul property,
//! - the convolution deformation complex of an algebra over a binary
//!   Koszul operad (preLie product, intrinsic bracket, cup product,
//!   cosimplicial structure).

pub mod defcomplex;
mod error;
pub mod exact;
pub mod freeop;
pub mod manin;
pub mod presentations;
pub mod series;

pub use error::{Error, Result};
pub use exact::{Matrix, Perm, Rat, Subspace};
pub use freeop::{FreeOperad, FreeSpan, GenSpace, Kind, Weight2Vector};
pub use presentations::QuadPresentation;

