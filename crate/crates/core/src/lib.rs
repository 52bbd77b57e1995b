//! Exact domination numbers, minimum dominating set counts and per-vertex
//! domination values for paths, cycles, ladders (`P2 □ Pn`) and prisms
//! (`P2 □ Cn`).
//!
//! Three independent engines compute the same [`DominationReport`]:
//!
//! * [`formulas`]: closed forms,
//! * [`oracle`]: exhaustive enumeration of every minimum dominating set,
//! * [`dp`]: a linear-time frontier dynamic program for ladders and prisms.
//!
//! They are registered by name in an [`EngineRegistry`] and compared by the
//! [`verify`] harness.

pub mod dp;
pub mod engine;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod oracle;
pub mod report;
pub mod verify;

pub use engine::{DpEngine, Engine, EngineRegistry, FormulaEngine, OracleEngine};
pub use error::{Error, Result};
pub use family::{Family, FamilyId};
pub use graph::{Graph, Layout, Row, VertexRef, VertexSet};
pub use report::{Count, DominationReport};
