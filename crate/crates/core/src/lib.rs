//! Finite-quandle knot invariants: colorings of long, closed, tangle and
//! virtual diagrams, colored quandle longitudes, and their formal sums used
//! as chirality, tangle-embedding and non-classicality tests.

pub mod cli;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod longitude;
pub mod obstruction;
pub mod perm;
pub mod quandle;

pub use coloring::{Coloring, InvariantQuery};
pub use diagram::{ClosedDiagram, Diagram, LongDiagram, Sign, TangleDiagram};
pub use error::{Error, Result};
pub use longitude::{AutomorphismFamily, FormalSum};
pub use obstruction::{Verdict, VerdictKind};
pub use perm::{ElementSet, Permutation};
pub use quandle::{Automorphism, FiniteQuandle, QuandleWord};
