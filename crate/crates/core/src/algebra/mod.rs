//! Exact arithmetic: rationals, parameter polynomials, the parameter field and
//! sparse polynomials in the main variables.

mod field;
mod param;
mod parse;
mod poly;
mod rat;

pub use field::{normalize_fraction, ParamField};
pub use param::{gcd as param_gcd, ParamPoly};
pub use parse::{parse_expr, parse_expr_in};
pub use poly::{Constraint, Monomial, Poly, Space};
pub use rat::{int, parse_rat, rat, Rat};
