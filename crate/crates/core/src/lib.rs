//! Exact arithmetic over five small principal ideal domains and their
//! polynomial rings, with decision procedures for maximal ideals of `A[x]`
//! and their heights.

pub mod capacity;
pub mod cli;
pub mod domain;
pub mod error;
pub mod ideal;
pub mod lab;
pub mod poly;
pub mod rng;

pub use domain::{Elem, IrreducibleStream, Ring};
pub use poly::{Degree, Poly, PseudoDivision};
pub use error::{Error, Result};
pub use ideal::{parse_ideal, Classification, IdealAx, Status};
