//! Branches of `∂f/∂x = 0` for `f = x^3 + b x^2 y^3 + y^9 + c x y^7` and the invariants
//! read off the restrictions of `f`.

mod jet30;
mod obstruction;
mod series;

pub use jet30::{
    branch_residual, hp_invariants, restrict_on_branch, solve_branch_series, Branch, HPInvariants, DEFAULT_ORDER,
    HP_ORDER,
};
pub use obstruction::{
    equivalence_obstruction, equivalence_obstruction_numeric, ObstructionReport, ObstructionVerdict, REL_TOL,
};
pub use series::{series_sqrt, Coeff, GaussRat, SeriesQ};
