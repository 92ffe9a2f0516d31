//! Exact-arithmetic toolkit for finite-dimensional Leibniz algebras:
//! structure constants, the Loday cochain complex, second cohomology,
//! linear deformations and degeneration limits.
//!
//! All computations are exact: scalars are rationals or rational
//! functions in a parameter `t`, never floating point. The linear algebra
//! kernels are generic over the scalar [`field::Field`]; the concrete
//! instantiations used throughout are re-exported here.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod deformation;
pub mod degeneration;
pub mod field;
pub mod io;
pub mod linalg;
pub mod ratfun;
pub mod report;

pub use algebra::Algebra;
pub use field::Q;
pub use ratfun::RatFun;

/// Algebra over the rationals (the default scalar).
pub type RationalAlgebra = Algebra<Q>;
/// Algebra whose structure constants are rational functions in `t`.
pub type ParamAlgebra = Algebra<RatFun>;
/// Matrix over the rationals.
pub type RationalMatrix = linalg::Matrix<Q>;
/// Matrix over the rational functions (a parametric basis change).
pub type ParamMatrix = linalg::Matrix<RatFun>;
