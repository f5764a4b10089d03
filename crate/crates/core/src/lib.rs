//! Promotion on Young tableaux, the arc diagrams that control it, and fast
//! orbit-length certificates.
//!
//! The crate is organized around one pipeline:
//!
//! * [`tableau`] — shapes, standard and column-semistandard fillings, the
//!   promotion operator, and horizontal decomposition into uniformly
//!   proper rectangular pieces.
//! * [`mdiagram`] — the layered noncrossing arc diagram attached to a
//!   standard tableau, rotation of diagrams, and the decomposition into
//!   components under the share-an-endpoint-or-cross relation.
//! * [`orbit`] — promotion restricted to components, the rotational
//!   symmetry order of a diagram, and two routes to the promotion orbit
//!   length of a rectangular tableau: direct iteration and the component
//!   certificate `(N, ell)`.
//! * [`ssyt`] — promotion of column-semistandard tableaux, the
//!   standardization map linking them to standard tableaux, and the orbit
//!   length formula built from the cyclic period of the content.
//! * [`enumerate`] — exhaustive generation of standard and
//!   column-semistandard tableaux, hook-length counting, and per-shape
//!   orbit censuses.

#![forbid(unsafe_code)]

pub mod enumerate;
pub mod error;
pub mod mdiagram;
pub mod orbit;
pub mod ssyt;
pub mod tableau;

pub use error::{Error, Result};
