//! Exact computations with finite-dimensional Hopf algebras given by
//! structure constants, their quasitriangular structures, and twisted
//! tensor product decompositions.

pub mod algebra;
pub mod error;
pub mod hopf;
pub mod kernel;
pub mod par;
pub mod qt;
pub mod report;
pub mod serial;
pub mod splitting;

pub use error::{Error, Result};
