//! Combinatorial 3-polytopes: construction, surgery, Andreev's conditions
//! and isomorphism.

mod andreev;
mod build;
mod format;
mod iso;
mod polytope;
mod surgery;

pub use andreev::{check_andreev, AndreevVerdict, ForbiddenShape, Violation};
pub use build::{antiprism, cube, prism, pyramid, tetrahedron, triangular_prism};
pub use format::{parse_polytope, HEADER};
pub use iso::{canonical_code, is_isomorphic, isomorphism, Isomorphism};
pub use polytope::{CombinatorialPolytope, Edge, VertexClass, VertexKind};
pub use surgery::{edge_twist, glue, glue_antiprisms, twisted_antiprism};
