//! Exact computation in finite p-groups given by consistent
//! power-commutator presentations.
//!
//! The crate is `no_std` and only needs `alloc`. File IO, JSON output and the
//! command-line front end live in the `pgroup` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod arith;
pub mod collector;
pub mod consistency;
pub mod corpus;
pub mod error;
pub mod presentation;
pub mod properties;
pub mod report;
pub mod subgroup;
pub mod theorems;
pub mod word;

pub use collector::{Element, Group, Limits};
pub use error::{Error, Result};
pub use presentation::{parse, PcPresentation, PresentationBuilder};
pub use subgroup::{Chain, Subgroup};
pub use word::Word;
