//! Exact local algebra for plane curve singularities.
//!
//! The crate is `no_std` and only needs `alloc`. It provides exact arithmetic over
//! rational-function parameter fields, Newton diagrams and weighted filtrations,
//! Mora division in the local ring, Lipschitz-triviality certificates, branch series
//! for the `J_{3,0}` family, and the classification tables with a modality verdict.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod branches;
pub mod classify;
pub mod error;
pub mod local;
pub mod newton;
pub mod triviality;

pub use algebra::{parse_expr, ParamField, ParamPoly, Poly, Rat, Space};
pub use error::{Error, Result};
