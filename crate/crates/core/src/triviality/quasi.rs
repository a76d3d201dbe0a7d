use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Poly, Rat, Space};
use crate::error::{Error, Result};
use crate::local::milnor_number;
use crate::newton::{filtration, initial_part, is_quasihomogeneous, Weight};

#[derive(Clone, Debug, PartialEq)]
pub struct QuasiReport {
    pub weight: Weight,
    pub d: Rat,
    pub fil_theta: Rat,
    pub max_diff: Rat,
    /// `fil_w(θ) - d - max_{i,j}(w_i - w_j)`.
    pub margin: Rat,
    pub holds: bool,
}

/// Sufficient criterion for `g + t·θ` with `g` quasihomogeneous of type `(w; d)`:
/// `fil_w(θ) ≥ d + max_{i,j}(w_i - w_j)`. The initial part of `g + t·θ` must have an
/// isolated singularity for generic `t`.
pub fn check_quasihomogeneous_triviality(g: &Poly, theta: &Poly) -> Result<QuasiReport> {
    if g.space() != theta.space() {
        return Err(Error::SpaceMismatch);
    }
    let (weight, d) = is_quasihomogeneous(g)?.ok_or(Error::NotQuasihomogeneous)?;
    let fil_theta = filtration(theta, &weight)?;

    // Initial part of g + t·θ with a fresh generic t.
    let space = g.space();
    let mut params: Vec<String> = space.params.clone();
    let mut fresh = String::from("t");
    while params.contains(&fresh) || space.vars.contains(&fresh) {
        fresh.push('_');
    }
    params.push(fresh);
    let big = Space::new(&space.vars, &params);
    let t = Poly::param(&big, params.len() - 1);
    let total = g.embed(&big)?.checked_add(&(&t * &theta.embed(&big)?))?;
    let init = initial_part(&total, &weight)?;
    milnor_number(&init, &[])?;

    let max_diff = weight.max_diff();
    let margin = &fil_theta - &d - &max_diff;
    let holds = margin >= Rat::from_integer(0.into());
    Ok(QuasiReport { weight, d, fil_theta, max_diff, margin, holds })
}
