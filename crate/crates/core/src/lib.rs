//! Constantly curved holomorphic 2-spheres of degree 6 in the Grassmannian G(2,5).
//!
//! The crate builds explicit curves from moduli parameters `(t0, t1, t6)`,
//! certifies them (Plücker relations, Gram/Calabi test, ramification) and maps
//! the semialgebraic moduli set. Exact arithmetic is used whenever the inputs
//! allow it; otherwise a configurable-precision binary float path is taken.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod grassmann;
pub mod moduli;
pub mod paperlab;
pub mod sl2rep;

pub use error::{Error, Result};

/// Default working precision of the float path, in bits.
pub const DEFAULT_PRECISION: usize = 200;

/// Default residual and defect threshold of the float path.
pub const DEFAULT_TOL: f64 = 1e-10;
