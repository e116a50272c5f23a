//! Quadratic presentations: the central `QuadPresentation` type, the
//! built-in operad zoo, the canonical file format and presentation
//! equality checks.

pub mod expr;
mod format;
mod presentation;
mod vtable;
mod zoo;

pub use format::{from_file, from_json, to_file, to_json, PresentationFile};
pub use presentation::{presentation_equal, symmetrize, weight2_map, QuadPresentation};
pub use vtable::{format_v_linear, has_v_coordinates, v_to_index, V_TRIPLES};
pub use zoo::{black_square_rows, zoo_entry, zoo_get, zoo_names, ZooEntry};
