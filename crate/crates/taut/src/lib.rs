//! Finite, executable models of graded sets, nonsymmetric operads, globular
//! sets, collections and globular operads, built around the composition
//! tensor product and its internal hom.
//!
//! Everything here is bounded and exhaustive: infinite objects (free monoids,
//! pasting diagrams, hom fibers) are only ever materialized fiberwise, up to
//! caller-supplied bounds, and the algebraic laws are verified by enumeration.

pub mod coll;
pub mod dsl;
pub mod fib;
pub mod glob;
pub mod globhom;
pub mod globop;
pub mod graded;
pub mod hom;
pub mod monad;
pub mod operad;
pub mod report;
pub mod tensor;
pub mod tree;

pub use report::{CheckReport, Status};
