//! Exact constructions of multivariate Goppa codes, tensor products of
//! generalized Reed-Solomon codes, and augmented Cartesian codes over
//! finite-field towers, together with their duals, hulls, and the
//! entanglement-assisted quantum, LCD, self-orthogonal and self-dual codes
//! derived from them.
//!
//! Every identity relating these families is exposed as a checked operation:
//! the library builds both sides independently and reports
//! [`Error::MismatchDetected`] if they ever disagree.

pub mod codes;
pub mod error;
pub mod export;
pub mod gf;
pub mod gfla;
pub mod notation;
pub mod poly;
pub mod theory;

pub use codes::LinearCode;
pub use error::{Error, ErrorClass, Result};
pub use gf::{make_field, Elem, Field, FieldTower};
pub use gfla::{Distance, Matrix};
pub use poly::{CartesianSet, MultiPoly, Polynomial, ProductPoly, UniPoly};
