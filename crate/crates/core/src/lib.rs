//! Modal logic over finite Kripke frames and finite topological spaces.
//!
//! Formulas are checked for validity by one engine that reads `◇` as
//! "some neighbour satisfies the argument". A frame supplies successor
//! sets, a space under the derivative reading supplies punctured minimal
//! neighbourhoods `U_x − {x}`, and under the closure reading supplies
//! `U_x` itself.

#![no_std]

extern crate alloc;

pub mod check;
pub mod dsem;
pub mod error;
pub mod formula;
pub mod glue;
pub mod kripke;
pub mod pointset;
pub mod topo;
pub mod valuation;

pub use check::{Countermodel, Validity, DEFAULT_BIT_BUDGET};
pub use dsem::{DMorphism, DMorphismViolation, Semantics, TopoModel, Transfer};
pub use error::{Error, Result};
pub use formula::Formula;
pub use glue::{default_assignment, glue, glue_topology, ClusterAssignment, ClusterSpace, GluedSpace};
pub use kripke::{ClusterDecomposition, ClusterKind, Frame, FrameConstraints};
pub use pointset::{PointSet, MAX_POINTS};
pub use topo::{Classification, TopSpace};
pub use valuation::Valuation;
