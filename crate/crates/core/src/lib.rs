//! Exact-arithmetic toolkit for lattice 3-topes: Fine interiors, supports,
//! canonical and reflexive hulls, Ehrhart data, facet typing, fundamental
//! group orders, lattice width, and the classification of canonical Fano
//! 3-topes into regimes.
//!
//! All computation is over arbitrary-precision integers and rationals; no
//! floating point is used anywhere. Types are immutable values and every
//! operation is a pure function, so the library is safe for unrestricted
//! concurrent use.

pub mod arith;
pub mod classify;
pub mod cone;
pub mod ehrhart;
pub mod error;
pub mod fine;
pub mod fixtures;
pub mod geom;
pub mod lattice;
pub mod matrix;
pub mod polygon;
pub mod polytope;

pub use arith::{Int, Rat};
pub use classify::{classify, classify_with_id, ClassificationRecord, HollowRecord, Regime};
pub use error::{Error, Result};
pub use lattice::{AffineLatticeSpec, LatticeVector, RationalVector};
pub use polytope::{HalfSpace, LatticePolytope, RationalPolytope};
