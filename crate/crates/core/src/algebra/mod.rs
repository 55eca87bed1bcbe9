//! Exact arithmetic: integer Laurent polynomials with half-integer exponents,
//! the quadratic extension by `Y`, and coefficient tables.

mod laurent;
mod lpoly;
mod table;
mod yext;

pub use laurent::{Laurent1, SquareRoot};
pub use lpoly::{Exp2, LPoly, VarMap};
pub use table::{to_coeff_table, CoeffTable};
pub use yext::{y_squared, YExt};

pub use num_bigint::BigInt as ArbInt;
pub use num_rational::BigRational as Rational;
