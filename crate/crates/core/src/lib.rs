//! Odd vertex-colourings of graphs embedded on orientable surfaces.
//!
//! A colouring is *odd* when every non-isolated vertex sees some colour an
//! odd number of times among its neighbours. This crate builds the 6-regular
//! torus triangulations `T(m, n, t)` with their rotation systems, constructs
//! a proper odd colouring with at most nine colours for each simple one,
//! verifies colourings, computes the odd chromatic number of small graphs
//! exactly, and runs a discharging procedure with exact rational charges.

pub mod construct;
pub mod discharge;
pub mod embedding;
pub mod error;
pub mod graphs;
pub mod io;
pub mod solver;
pub mod torus;
pub mod verify;

pub use construct::{colour_torus, construct, Construction};
pub use embedding::{EmbeddedGraph, Face};
pub use error::{ColouringError, ConstructError, DischargeError, EmbeddingError, ParseError, SolverError, TorusError};
pub use torus::{generate, is_simple, TorusParams};
pub use verify::Colouring;
