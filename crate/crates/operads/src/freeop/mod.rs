//! Bases and linear models of the free operad F(V)(n): weight-2 spaces with
//! their S3 action and bilinear pairing, decorated-tree bases at higher
//! arities, partial composition, and the ideal generated by a space of
//! quadratic relations.

mod genspace;
mod ideal;
mod span;
mod weight2;

pub use genspace::{GenSpace, Kind};
pub use ideal::{ideal_span, ideal_spans, quotient_dims_from, DimRow};
pub use span::{w2_basis_tree, FreeOperad, FreeSpan, SpanVec, Tree};
pub use weight2::{
    comp_count, pairing_form, s3_action, s3_action_matrix, w2_dim, w2_index, w2_unindex,
    weight2_pairing, Weight2Vector,
};
