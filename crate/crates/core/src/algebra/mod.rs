//! Scalar kinds and polynomial kernels.

pub mod bigfloat;
pub mod complex;
pub mod cxroots;
pub mod matrix;
pub mod multipoly;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod surd;
pub mod unipoly;

pub type Rational = num_rational::BigRational;

pub use bigfloat::{BigComplex, BigFloat};
pub use complex::{Cplx, C64};
pub use multipoly::{ExactField, MultiPoly};
pub use scalar::{RealField, Scalar, SqrtQ};
pub use surd::{Surd, SurdComplex};
pub use unipoly::UniPoly;
