//! A workbench for finite BCK-algebras.
//!
//! A BCK-algebra is a set with a constant `0` and a binary operation `·`
//! satisfying
//!
//! ```text
//! (1)  ((x·y)·(z·y))·(x·z) = 0
//! (2)  (x·(x·y))·y = 0
//! (3)  x·0 = x
//! (4)  0·x = 0
//! (5)  x·y = y·x = 0  implies  x = y
//! ```
//!
//! and carries the partial order `x ≤ y ⇔ x·y = 0`.
//!
//! This crate certifies Cayley tables against those axioms ([`validate`]),
//! computes BCK-sequences and how far their interleaved chains descend
//! ([`sequences`]), measures n-commutativity, builds several parametric
//! families ([`constructions`]), and enumerates all algebras of small
//! order ([`search`]).
//!
//! ```
//! use bck_core::{catalog, sequences::{prolongation_depth, Depth}};
//!
//! let a = catalog::nonprolongable_a();
//! assert_eq!(a.maximal_elements(), vec![4, 5]);
//! let report = prolongation_depth(&a, 4, 5).unwrap();
//! assert_eq!(report.depth, Depth::Bounded(3));
//! ```

pub mod algebra;
pub mod axioms;
pub mod canonical;
pub mod catalog;
pub mod constructions;
pub mod search;
pub mod sequences;
pub mod table;

pub use algebra::{validate, validate_with_cap, BckAlgebra, ElementOutOfRange, RestrictError, ValidationError};
pub use axioms::{Axiom, AxiomViolation};
pub use canonical::{canonical_form, is_isomorphic};
pub use table::{CayleyTable, TableError};

// Compiles every Rust snippet in the guide as a doc-test.
#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/tables.md")]
    mod tables {}
    #[doc = include_str!("../../../book/src/order.md")]
    mod order {}
    #[doc = include_str!("../../../book/src/sequences.md")]
    mod sequences {}
    #[doc = include_str!("../../../book/src/commutativity.md")]
    mod commutativity {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
