//! Exact-arithmetic toolkit for determinantal facet ideals.
//!
//! The crate builds ideals of minors of a generic `m x n` matrix from
//! simplicial-complex data, certifies Groebner bases by S-pair reduction,
//! enumerates and verifies minimal-prime decompositions driven by interval
//! ("prime") sequences, and computes resolution invariants (graded Betti
//! tables, Hilbert series, multiplicity) with independent oracles.
//!
//! Modules follow the pipeline:
//!
//! * [`ring`] - exact multivariate polynomials over `Q` or `F_p` with
//!   permuted-lex term orders,
//! * [`groebner`] - Buchberger engine, normal forms, ideal arithmetic,
//! * [`complex`] - facet combinatorics: cliques, closedness, block structure,
//! * [`minors`] - minor expansion and the generator families of the ideals,
//! * [`decompose`] - prime-sequence enumeration and decomposition harness,
//! * [`resolution`] - Betti numbers, Hilbert series, multiplicity,
//! * [`document`] - JSON surface used by the CLI.

pub mod complex;
pub mod decompose;
pub mod document;
pub mod error;
pub mod groebner;
pub mod minors;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
