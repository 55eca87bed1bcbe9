//! Exact computation of the Links–Gould invariant of braid closures and
//! checks of concavity and Lorentzian properties of its coefficients.

pub mod algebra;
pub mod braid;
pub mod checks;
pub mod error;
pub mod families;
pub mod lorentzian;
pub mod rmatrix;

pub use algebra::{ArbInt, CoeffTable, LPoly, Laurent1, Rational, YExt};
pub use braid::{lg_of_braid, parse_braid, BraidWord};
pub use checks::{
    interior_zeros, log_concave_2d, seq_checks_1d, sign_pattern, unimodal_2d, Conjecture, Verdict,
};
pub use error::{Error, Result};
pub use families::{alexander_from_lg, square_specialization_check, torus_lg, twist_lg};
pub use lorentzian::{is_denorm_lorentzian, is_lorentzian, positive_eigenvalues, MPoly, SymMat};
pub use rmatrix::{build_h, build_r, invert_r, verify_axioms};
