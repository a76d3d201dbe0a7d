use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{Constraint, Poly};
use crate::error::{Error, Result};

/// `F_t = f + t·g` with `t` one of the parameters of the space.
#[derive(Clone, Debug, PartialEq)]
pub struct Family {
    pub total: Poly,
    pub base: Poly,
    pub direction: Poly,
    pub param: String,
    pub constraints: Vec<Constraint>,
}

impl Family {
    /// Splits a polynomial that is affine in the parameter `t`.
    pub fn new(total: &Poly, t: &str, constraints: Vec<Constraint>) -> Result<Self> {
        let space = total.space();
        let ti = space
            .param_index(t)
            .ok_or_else(|| Error::UnknownSymbol(t.to_string()))?;
        let direction = total.param_derivative(ti);
        if !direction.param_derivative(ti).is_zero() {
            return Err(Error::InvalidArgument(alloc::format!("family is not of the form f + {}*g", t)));
        }
        let base = total.checked_sub(&(&Poly::param(space, ti) * &direction))?;
        if direction.is_zero() {
            return Err(Error::InvalidArgument(alloc::format!("family does not depend on {}", t)));
        }
        Ok(Self { total: total.clone(), base, direction, param: t.to_string(), constraints })
    }

    /// Partial derivatives of `F_t` in the main variables.
    pub fn jacobian(&self) -> Vec<Poly> {
        self.total.jacobian()
    }
}
