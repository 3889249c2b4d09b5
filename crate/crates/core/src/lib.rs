//! Exact computations on matroids and hyperplane arrangements.
//!
//! * [`matroid`]: rank oracles for linear, uniform, graphic and explicit
//!   basis-list matroids, with minors and duality.
//! * [`tutte`]: Tutte, characteristic and `h(u,v)` polynomials, each by two
//!   independent routes.
//! * [`orlik_solomon`]: Orlik–Solomon algebras over exact fields, nbc bases
//!   and normal forms.
//! * [`localization`]: Euler characteristics of `∧^p S_L ⊗ ∧^q Q_L` on the
//!   permutohedral variety by summing over torus-fixed points.
//! * [`toric_white`]: degree-by-degree connectivity of toric fibers under
//!   symmetric-exchange moves.
//! * [`corpus`] and [`cli`]: the shipped test corpus and the command-line
//!   front end.

pub mod catalog;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod field;
pub mod localization;
pub mod matroid;
pub mod orlik_solomon;
pub mod poly;
pub mod subset;
pub mod toric_white;
pub mod tutte;

pub use error::{Result, WorkbenchError};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matroid::{Descriptor, Matroid};
pub use subset::ElementSet;
