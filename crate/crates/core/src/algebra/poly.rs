use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::ParamField;
use super::param::{mono_string, ParamPoly};
use super::rat::Rat;
use crate::error::{Error, Result};

/// Exponent vector in the main variables, one entry per declared variable.
pub type Monomial = Vec<u32>;

/// Declared main variables and parameters, shared by every value built from them.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Space {
    pub vars: Vec<String>,
    pub params: Vec<String>,
}

impl Space {
    pub fn new<S: AsRef<str>, T: AsRef<str>>(vars: &[S], params: &[T]) -> Arc<Space> {
        Arc::new(Space {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            params: params.iter().map(|s| s.as_ref().to_string()).collect(),
        })
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn param_index(&self, name: &str) -> Option<usize> {
        self.params.iter().position(|v| v == name)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
}

/// A parameter polynomial assumed not to vanish.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Constraint {
    pub nonvanishing: ParamPoly,
    pub text: String,
}

impl Constraint {
    pub fn new(nonvanishing: ParamPoly, text: impl Into<String>) -> Result<Self> {
        if nonvanishing.is_zero() {
            return Err(Error::InvalidArgument("constraint polynomial is identically zero".to_string()));
        }
        Ok(Self { nonvanishing, text: text.into() })
    }

    /// Parses a constraint written as a parameter-only expression.
    pub fn parse(text: &str, space: &Arc<Space>) -> Result<Self> {
        let p = super::parse::parse_expr_in(text, space)?;
        if !p.is_zero() && p.degree() > 0 {
            return Err(Error::InvalidArgument(alloc::format!(
                "constraint `{}` involves main variables",
                text
            )));
        }
        let c = p.coeff(&vec![0; space.nvars()]);
        let poly = c
            .as_poly()
            .unwrap_or_else(|| c.numerator().clone());
        Self::new(poly, text)
    }
}

/// Sparse polynomial in the main variables with coefficients in Q(params).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    space: Arc<Space>,
    terms: BTreeMap<Monomial, ParamField>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

fn same(a: &Arc<Space>, b: &Arc<Space>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Poly {
    pub fn zero(space: &Arc<Space>) -> Self {
        Self { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn one(space: &Arc<Space>) -> Self {
        Self::constant(space, ParamField::one())
    }

    pub fn constant(space: &Arc<Space>, c: ParamField) -> Self {
        Self::monomial(space, vec![0; space.nvars()], c)
    }

    pub fn var(space: &Arc<Space>, i: usize) -> Self {
        let mut e = vec![0; space.nvars()];
        e[i] = 1;
        Self::monomial(space, e, ParamField::one())
    }

    pub fn param(space: &Arc<Space>, i: usize) -> Self {
        Self::constant(space, ParamField::param(i))
    }

    pub fn monomial(space: &Arc<Space>, exp: Monomial, c: ParamField) -> Self {
        assert_eq!(exp.len(), space.nvars(), "exponent length must match variable count");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { space: space.clone(), terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, ParamField)>>(space: &Arc<Space>, it: I) -> Self {
        let mut p = Self::zero(space);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, e: Monomial, c: ParamField) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ParamField)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &[u32]) -> ParamField {
        self.terms.get(e).cloned().unwrap_or_else(ParamField::zero)
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    /// Largest total degree (0 for the zero polynomial).
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Smallest total degree of a term.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Terms of total degree at most `k`.
    pub fn jet(&self, k: u32) -> Self {
        self.filter(|e, _| e.iter().sum::<u32>() <= k)
    }

    /// Terms of total degree exactly `k`.
    pub fn homogeneous_part(&self, k: u32) -> Self {
        self.filter(|e, _| e.iter().sum::<u32>() == k)
    }

    pub fn filter<F: Fn(&Monomial, &ParamField) -> bool>(&self, f: F) -> Self {
        Self {
            space: self.space.clone(),
            terms: self.terms.iter().filter(|(e, c)| f(e, c)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if same(&self.space, &o.space) {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.neg());
        }
        Ok(r)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut r = Self::zero(&self.space);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Monomial = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul(c2));
            }
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        Self {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &ParamField) -> Self {
        if k.is_zero() {
            return Self::zero(&self.space);
        }
        Self {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul(k))).collect(),
        }
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: &[u32]) -> Self {
        Self {
            space: self.space.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.space);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to the main variable with index `v`.
    pub fn derivative(&self, v: usize) -> Self {
        let mut r = Self::zero(&self.space);
        for (e, c) in &self.terms {
            if e[v] > 0 {
                let mut ne = e.clone();
                ne[v] -= 1;
                r.add_term(ne, c.scale(&Rat::from_integer(BigInt::from(e[v]))));
            }
        }
        r
    }

    /// Formal partial derivative with respect to a named main variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        let v = self.space.var_index(var).ok_or_else(|| Error::UnknownSymbol(var.to_string()))?;
        Ok(self.derivative(v))
    }

    /// Derivative with respect to a parameter.
    pub fn param_derivative(&self, p: usize) -> Self {
        let mut r = Self::zero(&self.space);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), c.derivative(p));
        }
        r
    }

    /// Gradient in the main variables.
    pub fn jacobian(&self) -> Vec<Self> {
        (0..self.nvars()).map(|v| self.derivative(v)).collect()
    }

    /// Simultaneous substitution of main variables by polynomials; variables not in
    /// `map` are kept.
    pub fn substitute(&self, map: &[(&str, Poly)]) -> Result<Self> {
        let mut images: Vec<Poly> = (0..self.nvars()).map(|i| Poly::var(&self.space, i)).collect();
        for (name, img) in map {
            let v = self.space.var_index(name).ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
            self.check(img)?;
            images[v] = img.clone();
        }
        Ok(self.substitute_all(&images))
    }

    /// Substitution with one image per main variable (same space assumed).
    pub fn substitute_all(&self, images: &[Poly]) -> Self {
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&self.space), p.clone()]).collect();
        let mut r = Self::zero(&self.space);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(&self.space, c.clone());
            for (i, k) in e.iter().enumerate() {
                let k = *k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k];
                }
            }
            for (m, c) in t.terms {
                r.add_term(m, c);
            }
        }
        r
    }

    /// Re-expresses the polynomial in another space, matching variables and parameters by name.
    pub fn embed(&self, target: &Arc<Space>) -> Result<Self> {
        let vmap: Vec<usize> = self
            .space
            .vars
            .iter()
            .map(|v| target.var_index(v).ok_or_else(|| Error::UnknownSymbol(v.clone())))
            .collect::<Result<_>>()?;
        let pmap: Vec<usize> = self
            .space
            .params
            .iter()
            .map(|p| target.param_index(p).ok_or_else(|| Error::UnknownSymbol(p.clone())))
            .collect::<Result<_>>()?;
        let remap = |p: &ParamPoly| {
            ParamPoly::from_terms(p.terms().map(|(e, c)| {
                let mut ne = vec![0; target.params.len()];
                for (i, k) in e.iter().enumerate() {
                    ne[pmap[i]] += k;
                }
                (ne, c.clone())
            }))
        };
        let mut r = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.nvars()];
            for (i, k) in e.iter().enumerate() {
                ne[vmap[i]] += k;
            }
            let nc = ParamField::new(&remap(c.numerator()), &remap(c.denominator()))?;
            r.add_term(ne, nc);
        }
        Ok(r)
    }

    /// Substitutes rational values for parameters. Parameters with an assigned value are
    /// removed from the space; the others are kept.
    pub fn specialize_params(&self, assignment: &[(&str, Rat)], constraints: &[Constraint]) -> Result<Self> {
        let mut point: Vec<Option<Rat>> = vec![None; self.space.params.len()];
        for (name, v) in assignment {
            let i = self.space.param_index(name).ok_or_else(|| Error::UnknownSymbol(name.to_string()))?;
            point[i] = Some(v.clone());
        }
        for c in constraints {
            if c.nonvanishing.partial_eval(&point).is_zero() {
                return Err(Error::ConstraintViolated(c.text.clone()));
            }
        }
        let kept: Vec<usize> = (0..point.len()).filter(|&i| point[i].is_none()).collect();
        let names: Vec<&String> = kept.iter().map(|&i| &self.space.params[i]).collect();
        let target = Space::new(&self.space.vars, &names);
        let compress = |p: &ParamPoly| {
            ParamPoly::from_terms(p.padded_terms(point.len()).into_iter().map(|(e, c)| {
                (kept.iter().map(|&i| e[i]).collect::<Vec<u32>>(), c)
            }))
        };
        let mut r = Self::zero(&target);
        for (e, c) in &self.terms {
            let c = c.partial_eval(&point).map_err(|_| {
                Error::ConstraintViolated(alloc::format!("denominator of {}", c.to_string_with(&self.space.params)))
            })?;
            r.add_term(e.clone(), ParamField::new(&compress(c.numerator()), &compress(c.denominator()))?);
        }
        Ok(r)
    }

    /// Whether every coefficient is a polynomial in the parameters (no denominators).
    pub fn has_polynomial_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_polynomial())
    }

    /// Exact quotient `self / d` in the polynomial ring, or `None` when `d` does not
    /// divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dl, dc) = d.terms.iter().next_back()?;
        let dinv = dc.inv()?;
        let mut rem = self.clone();
        let mut q = Poly::zero(&self.space);
        while let Some((rl, rc)) = rem.terms.iter().next_back() {
            if !rl.iter().zip(dl).all(|(a, b)| a >= b) {
                return None;
            }
            let e: Monomial = rl.iter().zip(dl).map(|(a, b)| a - b).collect();
            let c = rc.mul(&dinv);
            for (m, x) in &d.terms {
                let me: Monomial = m.iter().zip(&e).map(|(a, b)| a + b).collect();
                rem.add_term(me, x.mul(&c).neg());
            }
            q.add_term(e, c);
        }
        Some(q)
    }

    /// The constant term.
    pub fn constant_term(&self) -> ParamField {
        self.coeff(&vec![0; self.nvars()])
    }

    /// Monomial in variable names, `1` for the constant monomial.
    pub fn monomial_string(&self, e: &[u32]) -> String {
        let s = mono_string(e, &self.space.vars);
        if s.is_empty() {
            "1".to_string()
        } else {
            s
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        // highest total degree first, then lexicographically
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for e in keys {
            let c = &self.terms[e];
            let mono = mono_string(e, &self.space.vars);
            let (neg, body) = match c.as_rat() {
                Some(r) => {
                    let neg = r < Rat::zero();
                    let a = if neg { -r } else { r };
                    let body = if mono.is_empty() {
                        alloc::format!("{}", a)
                    } else if a.is_one() {
                        mono.clone()
                    } else {
                        alloc::format!("{}*{}", a, mono)
                    };
                    (neg, body)
                }
                None => {
                    let neg = c.numerator().leading_coeff() < Rat::zero();
                    let a = if neg { c.neg() } else { c.clone() };
                    let cs = a.to_string_with(&self.space.params);
                    let cs = if a.is_compound() { alloc::format!("({})", cs) } else { cs };
                    let body = if mono.is_empty() { cs } else { alloc::format!("{}*{}", cs, mono) };
                    (neg, body)
                }
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            f.write_str(&body)?;
            first = false;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl core::ops::$tr<&Poly> for &Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly {
                self.$checked(o).expect("polynomials from different declarations")
            }
        }
        impl core::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly {
                (&self).$checked(&o).expect("polynomials from different declarations")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl core::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

impl core::ops::Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(&self)
    }
}
