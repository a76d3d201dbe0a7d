//! Term lists kept in descending local order, the working representation of the
//! division and standard-basis engines.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::order::LocalOrder;
use crate::algebra::{Monomial, ParamField, Poly, Space};

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Sorted {
    pub terms: Vec<(Monomial, ParamField)>,
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn quotient(b: &[u32], a: &[u32]) -> Monomial {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub(crate) fn lcm(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

impl Sorted {
    pub fn from_poly(p: &Poly, ord: &LocalOrder) -> Self {
        let mut terms: Vec<(Monomial, ParamField)> = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        Self { terms }
    }

    pub fn to_poly(&self, space: &Arc<Space>) -> Poly {
        Poly::from_terms(space, self.terms.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lc(&self) -> &ParamField {
        &self.terms[0].1
    }

    pub fn ecart(&self, ord: &LocalOrder) -> u64 {
        if self.terms.is_empty() {
            return 0;
        }
        let top = self.terms.iter().map(|(m, _)| ord.deg(m)).max().unwrap_or(0);
        top - ord.deg(self.lm())
    }

    /// `self - c * x^m * o`, merged in order.
    pub fn sub_mul(&self, c: &ParamField, m: &[u32], o: &Sorted, ord: &LocalOrder) -> Sorted {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let mut i = 0;
        let mut j = 0;
        let shifted = |k: usize| -> Monomial { o.terms[k].0.iter().zip(m).map(|(a, b)| a + b).collect() };
        let mut pending: Option<Monomial> = if o.terms.is_empty() { None } else { Some(shifted(0)) };
        while i < self.terms.len() || pending.is_some() {
            let ord_ij = match (&pending, self.terms.get(i)) {
                (None, _) => Ordering::Greater,
                (Some(_), None) => Ordering::Less,
                (Some(pm), Some((sm, _))) => ord.cmp(sm, pm),
            };
            match ord_ij {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let pm = pending.take().expect("pending term");
                    out.push((pm, o.terms[j].1.mul(c).neg()));
                    j += 1;
                    pending = if j < o.terms.len() { Some(shifted(j)) } else { None };
                }
                Ordering::Equal => {
                    let pm = pending.take().expect("pending term");
                    let v = self.terms[i].1.sub(&o.terms[j].1.mul(c));
                    if !v.is_zero() {
                        out.push((pm, v));
                    }
                    i += 1;
                    j += 1;
                    pending = if j < o.terms.len() { Some(shifted(j)) } else { None };
                }
            }
        }
        Sorted { terms: out }
    }

    /// Drops every term of degree above `bound`.
    pub fn truncate_above(&mut self, bound: u64, ord: &LocalOrder) {
        self.terms.retain(|(m, _)| ord.deg(m) <= bound);
    }

    pub fn scale(&self, c: &ParamField) -> Sorted {
        Sorted { terms: self.terms.iter().map(|(m, x)| (m.clone(), x.mul(c))).collect() }
    }
}

/// `p - c * x^m * q` on plain polynomials.
pub(crate) fn poly_sub_mul(p: &Poly, c: &ParamField, m: &[u32], q: &Poly) -> Poly {
    if q.is_zero() || c.is_zero() {
        return p.clone();
    }
    let mut r = p.clone();
    for (e, x) in q.terms() {
        let ne: Monomial = e.iter().zip(m).map(|(a, b)| a + b).collect();
        r.add_term(ne, x.mul(c).neg());
    }
    r
}
