//! Exact computer algebra for generalized Delta conjectures: bivariate
//! rational functions, symmetric functions with plethysm, modified Macdonald
//! polynomials, Delta operators, decorated labelled Dyck paths and ordered
//! multiset partitions with their statistics and bijections.

pub mod delta_side;
pub mod error;
pub mod macdonald;
pub mod omp;
pub mod paths;
pub mod qt;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
