//! Exact q,t-enumeration of decorated Dyck paths and reduced polyominoes,
//! the `F_{n,k;p}^{(d,ℓ)}` recursion, and the bijections relating them.
//!
//! * [`qtpoly`] — sparse bivariate polynomials with big-integer coefficients
//!   and q-binomials.
//! * [`dyck`] — decorated Dyck paths in three flavors, their statistics,
//!   enumeration and labellings.
//! * [`polyomino`] — reduced parallelogram polyominoes via barred area words.
//! * [`recursion`] — memoized evaluation of `F_{n,k;p}^{(d,ℓ)}`.
//! * [`bijections`] — sweep, zeta and the polyomino ↔ Dyck path map.
//! * [`verify`] — exhaustive checks with JSON reports.
//! * [`json`] — the interchange format for objects.

pub mod bijections;
pub mod dyck;
pub mod error;
pub mod json;
pub mod polyomino;
pub mod qtpoly;
pub mod recursion;
pub mod verify;

pub use dyck::{DecoratedDyckPath, DyckFlavor, DyckPath, LabelledDyckPath};
pub use error::{DeltaError, Result};
pub use json::DeltaObject;
pub use polyomino::{Letter, PolyDecorations, PolyFlavor, ReducedPolyomino};
pub use qtpoly::{qbinom, QtPoly};
pub use recursion::{f_eval, FEvaluator, FIndex};
pub use verify::{Report, Suite};
