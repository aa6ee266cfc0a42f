//! Constructive idempotent and conjugate factorizations in the finite full
//! transformation semigroup, paired with an exhaustive small-degree oracle.
//!
//! The library works with total maps of `[n] = {1, ..., n}` composed left to
//! right. Its two construction pillars:
//!
//! - [`factor::factor_idempotents`] writes any singular transformation as a
//!   product of idempotents of its own rank, by splitting off an idempotent
//!   seed and absorbing the permutation tail one transposition at a time;
//! - the [`conjugacy`] module redoes every step inside a single conjugacy
//!   class, producing factor lists whose members are all conjugates of one
//!   fixed element, each carrying its conjugating permutation as a witness.
//!
//! The [`oracle`] module provides the ground truth these constructions are
//! tested against: brute-force enumeration, deterministic breadth-first
//! closure of generated subsemigroups, word search with witnesses, and
//! whole-theorem checks (`verify_theorem2`, `verify_theorem5`) that are
//! exhaustive for small `n`.

pub mod conjugacy;
pub mod error;
pub mod factor;
pub mod idempotent;
pub mod oracle;
pub mod transform;

pub use conjugacy::{ConjugateFactor, Word};
pub use error::{Error, Result};
pub use factor::{Factor, FactorKind, Factorization};
pub use idempotent::{Idempotent, IdempotentPattern, KernelPartition, PatternEntry};
pub use oracle::{ElementSet, Oracle};
pub use transform::{Permutation, Transformation};
