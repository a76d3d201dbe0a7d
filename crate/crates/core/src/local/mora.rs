//! Mora's tangent-cone normal form with tracked representations.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::order::LocalOrder;
use super::sorted::{divides, poly_sub_mul, quotient, Sorted};
use super::stdbasis::{std_basis_with, StdOptions};
use crate::algebra::{ParamField, Poly, Space};
use crate::error::{Error, Result};

/// Reduction counter shared by one standard-basis or division call.
pub(crate) struct Budget {
    pub used: usize,
    pub limit: usize,
}

impl Budget {
    pub fn new(limit: usize) -> Self {
        Self { used: 0, limit }
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::ResourceLimit(self.limit))
        } else {
            Ok(())
        }
    }
}

/// A polynomial together with its expression in some fixed list of generators.
#[derive(Clone, Debug)]
pub(crate) struct Item {
    pub p: Sorted,
    pub ecart: u64,
    pub rep: Option<Vec<Poly>>,
}

impl Item {
    pub fn new(p: Sorted, rep: Option<Vec<Poly>>, ord: &LocalOrder) -> Self {
        let ecart = p.ecart(ord);
        Self { p, ecart, rep }
    }
}

fn rep_sub_mul(a: &[Poly], c: &ParamField, m: &[u32], b: &[Poly]) -> Vec<Poly> {
    a.iter().zip(b).map(|(x, y)| poly_sub_mul(x, c, m, y)).collect()
}

/// Weak normal form of `h` with respect to `basis`: repeatedly cancels the leading
/// term using the reducer of smallest ecart (ties by position), appending
/// intermediate results to the reducer set whenever the reducer's ecart exceeds the
/// current one. The returned item is zero or has a leading monomial divisible by
/// no leading monomial of `basis`.
///
/// With `bound`, terms of degree above it are dropped after every step; the result
/// is then only determined modulo those degrees.
pub(crate) fn nf_mora(h: Item, basis: &[Item], ord: &LocalOrder, bound: Option<u64>, budget: &mut Budget) -> Result<Item> {
    let mut h = h;
    if let Some(b) = bound {
        let mut p = h.p;
        p.truncate_above(b, ord);
        h = Item::new(p, h.rep, ord);
    }
    let mut extra: Vec<Item> = Vec::new();
    loop {
        if h.p.is_zero() {
            return Ok(h);
        }
        let lm = h.p.lm().clone();
        let mut best: Option<(bool, usize, u64)> = None;
        for (k, t) in basis.iter().enumerate() {
            if divides(t.p.lm(), &lm) && best.is_none_or(|b| t.ecart < b.2) {
                best = Some((false, k, t.ecart));
            }
        }
        for (k, t) in extra.iter().enumerate() {
            if divides(t.p.lm(), &lm) && best.is_none_or(|b| t.ecart < b.2) {
                best = Some((true, k, t.ecart));
            }
        }
        let Some((is_extra, k, e)) = best else {
            return Ok(h);
        };
        budget.tick()?;
        let t = if is_extra { extra[k].clone() } else { basis[k].clone() };
        if e > h.ecart {
            extra.push(h.clone());
        }
        let m = quotient(&lm, t.p.lm());
        let c = h.p.lc().div(t.p.lc()).expect("leading coefficient is nonzero");
        let mut p = h.p.sub_mul(&c, &m, &t.p, ord);
        if let Some(b) = bound {
            p.truncate_above(b, ord);
        }
        let rep = match (&h.rep, &t.rep) {
            (Some(a), Some(b)) => Some(rep_sub_mul(a, &c, &m, b)),
            _ => None,
        };
        h = Item::new(p, rep, ord);
    }
}

/// Unit, quotients and remainder with `unit * f = sum quotients[i] * gens[i] + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisionResult {
    pub unit: Poly,
    pub quotients: Vec<Poly>,
    pub remainder: Poly,
}

impl DivisionResult {
    /// Checks the division identity exactly.
    pub fn verify(&self, f: &Poly, gens: &[Poly]) -> bool {
        if self.quotients.len() != gens.len() {
            return false;
        }
        let mut lhs = (&self.unit * f) - self.remainder.clone();
        for (q, g) in self.quotients.iter().zip(gens) {
            lhs = lhs - q * g;
        }
        lhs.is_zero() && !self.unit.constant_term().is_zero()
    }

    /// Divides unit, quotients and remainder by a common nonzero constant.
    pub fn rescaled(&self, c: &ParamField) -> Self {
        let k = c.inv().expect("nonzero rescaling constant");
        Self {
            unit: self.unit.scale(&k),
            quotients: self.quotients.iter().map(|q| q.scale(&k)).collect(),
            remainder: self.remainder.scale(&k),
        }
    }
}

/// Division of `f` by the ideal generated by `gens` in the local ring.
///
/// A standard basis of the ideal is computed with its expression in `gens`; the weak
/// normal form of `f` against it is then mapped back to quotients of the original
/// generators. The leading monomial of a nonzero remainder is divisible by no leading
/// monomial of the standard basis.
pub fn mora_normal_form(f: &Poly, gens: &[Poly], ord: &LocalOrder) -> Result<DivisionResult> {
    divide_with(f, gens, ord, StdOptions::default().limit)
}

pub fn divide_with(f: &Poly, gens: &[Poly], ord: &LocalOrder, limit: usize) -> Result<DivisionResult> {
    if f.is_zero() {
        for g in gens {
            if g.space() != f.space() {
                return Err(Error::SpaceMismatch);
            }
        }
        let zero = Poly::zero(f.space());
        return Ok(DivisionResult { unit: Poly::one(f.space()), quotients: vec![zero.clone(); gens.len()], remainder: zero });
    }
    Divider::new(gens, ord, limit)?.divide(f)
}

/// Divides many dividends by one ideal, computing its standard basis once.
#[derive(Clone, Debug)]
pub struct Divider {
    space: Arc<Space>,
    gens: Vec<Poly>,
    ord: LocalOrder,
    limit: usize,
    basis: Vec<Item>,
}

impl Divider {
    pub fn new(gens: &[Poly], ord: &LocalOrder, limit: usize) -> Result<Self> {
        let space = match gens.first() {
            Some(g) => g.space().clone(),
            None => return Err(Error::InvalidArgument("empty generator list".into())),
        };
        if gens.iter().any(|g| g.space() != &space) {
            return Err(Error::SpaceMismatch);
        }
        let sb = std_basis_with(gens, ord, StdOptions { limit, track: true, ..StdOptions::default() })?;
        let reps = sb.reps.as_ref().expect("tracked representations");
        let zero = Poly::zero(&space);
        let mut basis = Vec::new();
        for (g, r) in sb.generators.iter().zip(reps) {
            let mut rep = vec![zero.clone()];
            rep.extend(r.iter().cloned());
            basis.push(Item::new(Sorted::from_poly(g, ord), Some(rep), ord));
        }
        Ok(Self { space, gens: gens.to_vec(), ord: ord.clone(), limit, basis })
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    pub fn divide(&self, f: &Poly) -> Result<DivisionResult> {
        if f.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        let m = self.gens.len();
        let zero = Poly::zero(&self.space);
        let mut rep0 = vec![zero; m + 1];
        rep0[0] = Poly::one(&self.space);
        let start = Item::new(Sorted::from_poly(f, &self.ord), Some(rep0), &self.ord);
        let mut budget = Budget::new(self.limit);
        let h = nf_mora(start, &self.basis, &self.ord, None, &mut budget)?;
        let rep = h.rep.expect("tracked representation");
        Ok(DivisionResult {
            unit: rep[0].clone(),
            quotients: rep[1..].iter().map(|q| q.neg()).collect(),
            remainder: h.p.to_poly(&self.space),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    #[test]
    fn small_divisions() {
        let v = ["x", "y"];
        let none: [&str; 0] = [];
        let x = parse_expr("x", &v, &none).unwrap();
        let g = parse_expr("x - x^2", &v, &none).unwrap();
        let d = mora_normal_form(&x, &[g.clone()], &LocalOrder::ds(2)).unwrap();
        assert!(d.verify(&x, &[g]));
        assert_eq!(d.unit, parse_expr("1 - x", &v, &none).unwrap());
        assert_eq!(d.quotients[0], Poly::one(x.space()));
        assert!(d.remainder.is_zero());

        let y = parse_expr("y", &v, &none).unwrap();
        let d = mora_normal_form(&y, &[x.clone()], &LocalOrder::ds(2)).unwrap();
        assert_eq!(d.remainder, y);
        assert!(d.unit == Poly::one(x.space()));
    }
}
