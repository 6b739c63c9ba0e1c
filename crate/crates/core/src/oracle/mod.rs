//! Independent ground truth: explicit weight sets, exact hulls and
//! enumerated group elements.

pub mod group;
pub mod hull;
pub mod verify;
pub mod weights;

pub use group::{brute_stabilizer, enumerate_group, StabilizerData};
pub use hull::{affine_dimension, hull_face_lattice, HullFaceLattice};
pub use verify::{cross_validate, CrossReport, PairVerdict, Verdict};
pub use weights::{
    default_depth, module_weights_truncated, polyhedron_vertices, simple_module_weights, WeightSet,
};
