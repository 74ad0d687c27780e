//! Partial orders and pseudo-metrics induced by isomorphism invariants.
//!
//! An invariant on a finite category generates a pre-order on its values
//! (one relation per morphism, closed under chaining). Condensing that
//! pre-order gives a partial order, and shortest paths in its cover graph
//! give a pseudo-metric on objects. The crate implements that pipeline
//! for finite presentations, plus concrete invariants:
//!
//! * [`graph`]: chromatic number and chromatic polynomial;
//! * [`arith`]: group order under divisibility;
//! * [`abelian`]: divisor chains of finite abelian groups;
//! * [`forms`]: matrices of linear forms of class-2 algebras and their minors.

#![allow(clippy::needless_range_loop)]

pub mod abelian;
pub mod arith;
pub mod category;
mod error;
mod extnat;
pub mod forms;
pub mod graph;
pub mod metric;
pub mod poset;

pub use error::{Error, Result};
pub use extnat::ExtendedNat;
pub use metric::{check_pseudometric, DistanceTable, PseudometricReport, Violation};
pub use poset::{build_preorder, Class, CoverGraph, PartialOrder, Preorder};
