//! Finite-dimensional quantum group workbench.
//!
//! Builds finite-dimensional *-algebras with coproducts, solves for invariant
//! (Haar) functionals, constructs GNS representations and modular data, the
//! left and right regular representation unitaries, the antipode through the
//! polar decomposition of an involutive conjugate-linear operator, and the
//! dual quantum group, then verifies a catalog of structural identities
//! numerically.

pub mod algebra;
pub mod antilinear;
pub mod antipode;
pub mod duality;
pub mod examples;
pub mod gns;
pub mod io;
pub mod linalg;
pub mod pipeline;
pub mod quantum_group;
pub mod relations;
pub mod report;

pub use algebra::{AlgebraSpec, Element, Functional, Violation};
pub use antilinear::AntilinearOp;
pub use antipode::AntipodeData;
pub use duality::DualData;
pub use gns::{GnsData, ModularData, RelativeModularData};
pub use linalg::{CMat, CVec, C};
pub use pipeline::QuantumGroup;
pub use quantum_group::{Coproduct, HaarPair, ModularElementData, RegularRepresentations};
pub use relations::{
    catalog, run_suite, unitary_groups, Expected, OneParamGroup, RelationCatalogEntry,
    UnknownRelation,
};
pub use report::{ReportEntry, VerificationReport};
