//! Gram matrices and hyperbolic volumes of realized polyhedra.

mod gram;
mod lobachevsky;
mod volume;

pub use gram::{gram, GramMatrix, PairKind, CLASSIFY_TOL};
pub use lobachevsky::lobachevsky;
pub use volume::{volume_ideal, volume_with_apex, IdealTetrahedron, VolumeReport};
