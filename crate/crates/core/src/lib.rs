//! Exact and numeric tools for q-deformed Bessel functions, their
//! polynomial families, operator algebras, transforms and limits.

pub mod besselfam;
pub mod cli;
pub mod error;
pub mod families;
pub mod limits;
pub mod numerics;
pub mod opalgebra;
pub mod qseries;
pub mod report;
pub mod transforms;

pub use error::{Error, Result};
