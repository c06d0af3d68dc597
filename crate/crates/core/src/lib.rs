//! Exact verification of classical Yang-Baxter structures on small Lie
//! algebras: CYBE solutions, Rota-Baxter operators of any weight, the
//! operator/tensor correspondence through an invariant form, Lie-bialgebra
//! axioms for coboundary cobrackets, and a symbolic catalog of the
//! quasitriangular structures on gl₂.
//!
//! The core is generic over [`Scalar`]; the aliases below fix the two scalar
//! types used in practice (exact ℚ(i) numbers and polynomials over them).

pub mod autos;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod formats;
pub mod liealg;
pub mod linalg;
pub mod rbop;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use liealg::{Element, LieAlgebra};
pub use linalg::{Matrix, Subspace};
pub use rbop::{LinOp, Weight};
pub use scalar::{GaussRat, ParamSet, Poly, Scalar};
pub use tensor::{Cobracket, Tensor2, Tensor3};

pub type Rational = num_rational::BigRational;

pub type ExactAlgebra = LieAlgebra<GaussRat>;
pub type ExactElement = Element<GaussRat>;
pub type ExactTensor = Tensor2<GaussRat>;
pub type ExactOp = LinOp<GaussRat>;
pub type ExactAuto = autos::AutoMap<GaussRat>;

pub type SymbolicAlgebra = LieAlgebra<Poly>;
pub type SymbolicElement = Element<Poly>;
pub type SymbolicTensor = Tensor2<Poly>;
pub type SymbolicOp = LinOp<Poly>;
pub type SymbolicAuto = autos::AutoMap<Poly>;
