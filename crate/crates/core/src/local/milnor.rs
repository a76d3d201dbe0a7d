use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::order::LocalOrder;
use super::stdbasis::{quotient_basis, std_basis_with, StdOptions};
use crate::algebra::{Constraint, ParamField, Poly, Rat};
use crate::error::{Error, Result};

/// Rejects inputs with constant or linear terms.
pub fn check_germ(f: &Poly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::NonGermInput("zero polynomial".to_string()));
    }
    if let Some(d) = f.min_degree() {
        if d < 2 {
            let kind = if d == 0 { "constant" } else { "linear" };
            return Err(Error::NonGermInput(alloc::format!("{} term present", kind)));
        }
    }
    Ok(())
}

/// Nonzero partial derivatives of `f`.
pub fn jacobian_ideal(f: &Poly) -> Vec<Poly> {
    f.jacobian().into_iter().filter(|g| !g.is_zero()).collect()
}

/// Milnor number over the parameter field, i.e. for generic parameter values.
/// Constraints are only recorded by callers; the generic computation already treats
/// every nonzero parameter expression as invertible.
pub fn milnor_number(f: &Poly, constraints: &[Constraint]) -> Result<usize> {
    milnor_number_with(f, constraints, StdOptions::default().limit)
}

pub fn milnor_number_with(f: &Poly, _constraints: &[Constraint], limit: usize) -> Result<usize> {
    check_germ(f)?;
    let jac = jacobian_ideal(f);
    if jac.is_empty() {
        return Err(Error::NotIsolated);
    }
    let sb = std_basis_with(&jac, &LocalOrder::ds(f.nvars()), StdOptions { limit, truncate: true, ..StdOptions::default() })?;
    quotient_basis(&sb).map(|q| q.len()).ok_or(Error::NotIsolated)
}

/// `n` minus the rank of the Hessian of the quadratic part at the origin.
pub fn corank(f: &Poly) -> Result<usize> {
    check_germ(f)?;
    let n = f.nvars();
    let mut h: Vec<Vec<ParamField>> = (0..n).map(|_| (0..n).map(|_| ParamField::zero()).collect()).collect();
    for (e, c) in f.terms() {
        if e.iter().sum::<u32>() != 2 {
            continue;
        }
        let idx: Vec<usize> = (0..n).filter(|&i| e[i] > 0).collect();
        if idx.len() == 1 {
            let i = idx[0];
            h[i][i] = c.scale(&crate::algebra::int(2));
        } else {
            let (i, j) = (idx[0], idx[1]);
            h[i][j] = c.clone();
            h[j][i] = c.clone();
        }
    }
    Ok(n - rank(h))
}

fn rank(mut m: Vec<Vec<ParamField>>) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].mul(&inv);
                for j in c..cols {
                    let v = m[i][j].sub(&k.mul(&m[r][j]));
                    m[i][j] = v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Multiplicity: the smallest total degree of a term.
pub fn order_of_germ(f: &Poly) -> Result<u32> {
    f.min_degree().ok_or(Error::ZeroPolynomial)
}

/// Substitutes rational values for every parameter, checking that no constraint vanishes.
pub fn specialize(f: &Poly, assignment: &[(&str, Rat)], constraints: &[Constraint]) -> Result<Poly> {
    for p in &f.space().params {
        if !assignment.iter().any(|(n, _)| n == p) {
            return Err(Error::InvalidArgument(alloc::format!("no value for parameter `{}`", p)));
        }
    }
    f.specialize_params(assignment, constraints)
}

/// Renders a monomial in the variables of `f`'s space.
pub fn monomial_name(f: &Poly, m: &[u32]) -> String {
    f.monomial_string(m)
}
