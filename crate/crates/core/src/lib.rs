//! Construction, realization and classification of ideal right-angled
//! hyperbolic 3-polyhedra and of hybrid Coxeter gluings.
//!
//! The pipeline runs in stages, each in its own module:
//!
//! * [`combinatorics`] builds face complexes (antiprisms, edge twists,
//!   gluings), checks Andreev's right-angled conditions and decides
//!   combinatorial isomorphism.
//! * [`realization`] solves for unit spacelike face normals in the
//!   hyperboloid model of `H^3`.
//! * [`invariants`] derives the Gram matrix and the hyperbolic volume.
//! * [`arithmetics`] runs the cycle-product arithmeticity test and computes
//!   minimal-polynomial fingerprints.
//! * [`hybrid`] checks even-angle interfaces, glues Coxeter polygons and
//!   issues nonarithmeticity verdicts for glued pieces and link families.

pub mod arithmetics;
pub mod combinatorics;
pub mod dd;
mod error;
pub mod hybrid;
pub mod invariants;
pub mod lorentz;
pub mod realization;

pub use arithmetics::{
    cycle_products, field_fingerprint, rational_detect, test_arithmetic_rightangled,
    ArithmeticConfig, ArithmeticityReport, CycleClass, CycleProduct, FieldFingerprint, Verdict,
};
pub use combinatorics::{
    antiprism, check_andreev, edge_twist, glue, is_isomorphic, twisted_antiprism, AndreevVerdict,
    CombinatorialPolytope, Edge, VertexClass, VertexKind,
};
pub use error::{Error, Result};
pub use hybrid::{
    check_even_angle_interface, classify_link, glue_polygons, hybrid_verdict, CoxeterPolygon,
    GluingSpec, HybridReport, LinkDescriptor, LinkFamily, LinkReport,
};
pub use invariants::{gram, lobachevsky, volume_ideal, GramMatrix, VolumeReport};
pub use lorentz::{lorentz_dot, LorentzVector};
pub use realization::{
    realize_ideal_right_angled, validate_realization, Realization, SolverConfig,
};
