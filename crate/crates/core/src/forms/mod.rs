//! Class-2 algebras over `F_p`, their matrices of linear forms, and the
//! quadratic ideals cut out by minors of those matrices.

mod algebra;
mod field;
mod linalg;
mod matrix;
mod poly;
mod span;

pub use algebra::{heisenberg_algebra, StructureConstants};
pub use field::{parse_univariate, PrimeField};
pub use matrix::{linear_form_matrix, minors, submatrix_determinants, LinearFormMatrix, Minor};
pub use poly::FpMultiPoly;
pub use span::{quadratic_span_dimension, quadratic_span_equal};
