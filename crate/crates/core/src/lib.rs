//! Finite posets, order complexes, and the machinery to decide
//! dismantlability and non-evasiveness at exhaustive-search scale.
//!
//! The crate is organized around a handful of small value types:
//! [`FinitePoset`] (a reflexive/antisymmetric/transitive relation on dense
//! ids), [`ElemSet`] (a bitset of ids), [`SimplicialComplex`] (an explicit
//! down-closed face family), and the certificate types produced by the
//! search routines. Everything is pure and deterministic; memo tables are
//! owned by explicit solver values so callers control sharing.
//!
//! `no_std` + `alloc`: all I/O, file formats, and the CLI live in the
//! companion binary crate.

#![no_std]

extern crate alloc;

pub mod bw;
pub mod complex;
pub mod dismantle;
pub mod error;
pub mod evasive;
pub mod generate;
pub mod maps;
pub mod poset;
pub mod set;

pub use complex::SimplicialComplex;
pub use error::Error;
pub use evasive::{Certificate, NonEvasiveSolver};
pub use poset::{FinitePoset, IdRemap};
pub use set::ElemSet;
