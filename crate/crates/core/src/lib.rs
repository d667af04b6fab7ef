//! Exact arithmetic on integral lattices: characteristic covectors and their
//! minimal squares, linking pairings and Gauss sums, quaternionic gluing into
//! unimodular lattices, and d-invariant obstructions for surgeries on torus
//! knots.

pub mod charvec;
pub mod cli;
mod enumerate;
pub mod error;
pub mod exact;
pub mod glue;
pub mod lattices;
pub mod linking;
pub mod numtheory;
pub mod surgery;

pub use error::{Error, Result};
pub use exact::{IntMatrix, RatMatrix, Rational, Signature, SymGram};
