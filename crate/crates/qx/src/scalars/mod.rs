//! Exact scalars: rational functions in `q` and optional auxiliary variables.

pub mod gcd;
pub mod poly;
pub mod qnum;
pub mod rat;
pub mod scalar;
pub mod text;

pub use poly::{var_index, var_name, Mono, Poly};
pub use qnum::{bar_involution, gauss_number, q_factorial, q_number, qdiff};
pub use rat::Rat;
pub use scalar::{Scalar, ScalarError};
pub use text::{parse_scalar, ParseError};
