//! Brush cleaning on graphs: Jaco graphs, Mycielski transforms, the
//! cleaning process, exact brush numbers and brush centres.

pub mod centre;
pub mod cleaning;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod iso;
pub mod jaco;
pub mod mycielski;
pub mod orientation;
pub mod solvers;

pub use cleaning::{BrushAllocation, CleaningTrace, Outcome, Policy};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, SimpleGraph, VertexId};
pub use jaco::{JacoGraph, JaconianData};
pub use mycielski::{mycielskian, MycielskiGraph};
pub use orientation::Orientation;
