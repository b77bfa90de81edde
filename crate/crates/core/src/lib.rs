//! Exact computation engine for Lyubeznik tables of squarefree monomial ideals.
//!
//! Given a squarefree monomial ideal `I` in a polynomial ring over a field
//! (the rationals or a prime field, chosen at run time), this crate computes:
//!
//! - the Lyubeznik table `Λ(R/I)`,
//! - the deficiency modules `K^i(R/I)` with their dimension/depth profiles,
//! - the classification predicates: Cohen-Macaulay, sequentially
//!   Cohen-Macaulay (by two independent criteria), canonically
//!   Cohen-Macaulay, unmixed,
//! - the structural checks relating all of the above (Euler characteristic
//!   of the table, Hochster-Huneke component count, table-shape results).
//!
//! Everything is exact: the linear algebra runs over arbitrary-precision
//! rationals or over `F_p`, never over floats. The homological side works
//! entirely inside the category of squarefree modules, where a module is a
//! finite family of vector spaces indexed by subsets of `{1..n}` together
//! with compatible multiplication maps; minimal multigraded free resolutions
//! and `Ext` against the canonical module are computed degree by degree over
//! the subset lattice.
//!
//! The combinatorial side (Stanley-Reisner dictionary, links, skeleta,
//! Alexander duality, corpus generation) lives in [`complex`], [`ideal`] and
//! [`corpus`]; the exact linear algebra in [`field`], [`matrix`] and
//! [`chain`]; the squarefree-module engine in [`sqmod`], [`resolution`] and
//! [`ext`]; the tables and classifications in [`lyub`].

pub mod chain;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod ext;
pub mod field;
pub mod homology;
pub mod ideal;
pub mod input;
pub mod lyub;
pub mod matrix;
pub mod resolution;
pub mod serialize;
pub mod sqmod;
pub mod subsets;

pub use complex::SimplicialComplex;
pub use error::Error;
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use ideal::SquarefreeIdeal;
pub use lyub::{Analysis, Classification, LyubeznikTable};
pub use sqmod::{ModuleProfile, SqfModule};
pub use subsets::Mask;

/// Version tag mixed into cache keys; bump to invalidate cached resolutions.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
