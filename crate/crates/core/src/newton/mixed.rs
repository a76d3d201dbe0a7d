use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Monomial, ParamField, Poly, Space};
use crate::error::{Error, Result};

/// Polynomial in `x` and `x̄`: terms `c · x^ν · x̄^μ`. Supports, diagrams and
/// filtrations only see the combined exponent `ν + μ`.
///
/// Conjugation acts on the variables only. Every identity checked here is between
/// expressions built with the same formal conjugation, so the choice does not
/// affect exactness.
#[derive(Clone, PartialEq, Eq)]
pub struct MixedPoly {
    space: Arc<Space>,
    terms: BTreeMap<(Monomial, Monomial), ParamField>,
}

impl MixedPoly {
    pub fn zero(space: &Arc<Space>) -> Self {
        Self { space: space.clone(), terms: BTreeMap::new() }
    }

    /// Holomorphic embedding (`μ = 0`).
    pub fn from_poly(p: &Poly) -> Self {
        let n = p.nvars();
        let mut r = Self::zero(p.space());
        for (e, c) in p.terms() {
            r.add_term(e.clone(), vec![0; n], c.clone());
        }
        r
    }

    /// Formal conjugate `p̄` (`ν = 0`).
    pub fn conj_of(p: &Poly) -> Self {
        let n = p.nvars();
        let mut r = Self::zero(p.space());
        for (e, c) in p.terms() {
            r.add_term(vec![0; n], e.clone(), c.clone());
        }
        r
    }

    /// `|x^e|^2 = x^e · x̄^e` with coefficient `c`.
    pub fn abs_square(space: &Arc<Space>, e: Monomial, c: ParamField) -> Self {
        let mut r = Self::zero(space);
        r.add_term(e.clone(), e, c);
        r
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Monomial, ParamField)>>(space: &Arc<Space>, it: I) -> Self {
        let mut r = Self::zero(space);
        for (a, b, c) in it {
            r.add_term(a, b, c);
        }
        r
    }

    fn add_term(&mut self, nu: Monomial, mu: Monomial, c: ParamField) {
        if c.is_zero() {
            return;
        }
        let k = (nu, mu);
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn space(&self) -> &Arc<Space> {
        &self.space
    }

    pub fn nvars(&self) -> usize {
        self.space.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Monomial, &ParamField)> {
        self.terms.iter().map(|((a, b), c)| (a, b, c))
    }

    /// Whether no conjugate variable occurs.
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|(_, mu)| mu.iter().all(|&e| e == 0))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch);
        }
        let mut r = self.clone();
        for ((a, b), c) in &o.terms {
            r.add_term(a.clone(), b.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch);
        }
        let mut r = Self::zero(&self.space);
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                let a = a1.iter().zip(a2).map(|(x, y)| x + y).collect();
                let b = b1.iter().zip(b2).map(|(x, y)| x + y).collect();
                r.add_term(a, b, c1.mul(c2));
            }
        }
        Ok(r)
    }

    pub fn mul_poly(&self, p: &Poly) -> Result<Self> {
        self.mul(&MixedPoly::from_poly(p))
    }

    /// Combined exponents `ν + μ` of all terms (deduplicated, sorted).
    pub fn support(&self) -> Vec<Monomial> {
        let mut pts: Vec<Monomial> = self
            .terms
            .keys()
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        pts.sort();
        pts.dedup();
        pts
    }

    /// Terms whose combined exponent is `p`.
    pub fn terms_at(&self, p: &[u32]) -> Vec<(Monomial, Monomial, ParamField)> {
        self.terms
            .iter()
            .filter(|((a, b), _)| a.iter().zip(b).zip(p).all(|((x, y), z)| x + y == *z))
            .map(|((a, b), c)| (a.clone(), b.clone(), c.clone()))
            .collect()
    }

    /// Drops every term whose combined exponent fails `keep`.
    pub fn filter_support<F: Fn(&[u32]) -> bool>(&self, keep: F) -> Self {
        Self {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| {
                    let p: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    keep(&p)
                })
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for ((a, b), c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let cs = c.to_string_with(&self.space.params);
            write!(f, "({})", cs)?;
            for (i, v) in self.space.vars.iter().enumerate() {
                if a[i] > 0 {
                    write!(f, "*{}^{}", v, a[i])?;
                }
                if b[i] > 0 {
                    write!(f, "*conj({})^{}", v, b[i])?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MixedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedPoly({})", self)
    }
}
