//! Exact symbolic computation in finite Hecke algebras over Q(q): the fusion
//! procedure, seminormal representations on the resulting basis, induced
//! modules, and the eigenvalues of the canonical intertwining operator.
//!
//! Everything is computed over exact rational-function arithmetic; there is
//! no floating point anywhere. Start with the `examples/` directory for
//! runnable walkthroughs of each capability.

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod fusion;
pub mod intertwiner;
pub mod linalg;
pub mod seminormal;
pub mod scalars;
pub mod verify;

pub use error::Error;
