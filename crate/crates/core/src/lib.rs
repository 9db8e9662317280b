//! Finite topological spaces on abstract simplicial complexes.
//!
//! Complexes carry the star topology whose basis consists of the sets of
//! simplices containing a given simplex. On top of that the crate provides
//! graph conversions and refinements, recursive sphere and manifold
//! recognition, Euler and Wu characteristics, connection and Green matrices,
//! Hodge and interaction cohomology, Lefschetz numbers and a homeomorphism
//! checker.

pub mod characteristics;
pub mod complex;
pub mod dynamics;
pub mod energy;
pub mod error;
pub mod graph;
pub mod hodge;
pub mod homeo;
pub mod io;
pub mod iso;
pub mod linalg;
mod masks;
pub mod morse;
pub mod random;
pub mod recognition;
pub mod registry;
pub mod set;
pub mod simplex;
pub mod topology;
pub mod wubetti;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use graph::Graph;
pub use set::SimplexSet;
pub use simplex::{Simplex, VertexId};
