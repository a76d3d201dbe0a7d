use alloc::vec::Vec;
use core::fmt::Debug;

use num_complex::Complex;
use num_traits::{Signed, Zero};

use crate::algebra::{ParamField, Rat};
use crate::error::{Error, Result};

/// Gaussian rational `re + i·im`.
pub type GaussRat = Complex<Rat>;

/// Exact coefficient field for truncated series.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn from_rat(r: Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Option<Self>;
    /// A square root inside the field, when one is found.
    fn sqrt_exact(&self) -> Option<Self>;

    fn one() -> Self {
        Self::from_rat(Rat::from_integer(1.into()))
    }
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rat::new(n, d))
}

impl Coeff for ParamField {
    fn zero() -> Self {
        ParamField::zero()
    }
    fn from_rat(r: Rat) -> Self {
        ParamField::from_rat(r)
    }
    fn is_zero(&self) -> bool {
        ParamField::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        ParamField::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        ParamField::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        ParamField::mul(self, o)
    }
    fn inv(&self) -> Option<Self> {
        ParamField::inv(self)
    }
    fn sqrt_exact(&self) -> Option<Self> {
        rat_sqrt(&self.as_rat()?).map(ParamField::from_rat)
    }
}

impl Coeff for GaussRat {
    fn zero() -> Self {
        Complex::new(Rat::zero(), Rat::zero())
    }
    fn from_rat(r: Rat) -> Self {
        Complex::new(r, Rat::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Option<Self> {
        (!Coeff::is_zero(self)).then(|| self.inv())
    }
    fn sqrt_exact(&self) -> Option<Self> {
        if !self.im.is_zero() {
            return None;
        }
        match rat_sqrt(&self.re) {
            Some(r) => Some(Complex::new(r, Rat::zero())),
            None => rat_sqrt(&-self.re.clone()).map(|r| Complex::new(Rat::zero(), r)),
        }
    }
}

/// Power series in `y` known modulo `y^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesQ<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> SeriesQ<C> {
    /// Series with the given leading coefficients, known modulo `y^order`; missing
    /// coefficients are zero.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.truncate(order);
        coeffs.resize(order, C::zero());
        Self { coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(alloc::vec![c], order)
    }

    /// `c·y^k` modulo `y^order`.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut v = alloc::vec![C::zero(); k.min(order)];
        v.push(c);
        Self::new(v, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of `y^i`; an error at or beyond the truncation order.
    pub fn coeff(&self, i: usize) -> Result<&C> {
        self.coeffs.get(i).ok_or(Error::BeyondTruncation { index: i, order: self.order() })
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self { coeffs: (0..n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self { coeffs: (0..n).map(|i| self.coeffs[i].sub(&o.coeffs[i])).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut coeffs = alloc::vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Multiplication by `y^k`, which also raises the known order by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = alloc::vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Series `t` with `t² = self`, with `t(0)` the field square root of `self(0)`.
    pub fn sqrt(&self) -> Result<Self> {
        series_sqrt(self)
    }
}

/// Square root of a series whose constant term is a nonzero square in the field.
pub fn series_sqrt<C: Coeff>(s: &SeriesQ<C>) -> Result<SeriesQ<C>> {
    let n = s.order();
    if n == 0 {
        return Ok(s.clone());
    }
    let c0 = &s.coeffs[0];
    if c0.is_zero() {
        return Err(Error::NonUnitConstantTerm);
    }
    let t0 = c0.sqrt_exact().ok_or(Error::NonSquareConstant)?;
    let inv2t0 = t0.add(&t0).inv().ok_or(Error::NonUnitConstantTerm)?;
    let mut t = alloc::vec![t0];
    for k in 1..n {
        let mut acc = s.coeffs[k].clone();
        for i in 1..k {
            acc = acc.sub(&t[i].mul(&t[k - i]));
        }
        t.push(acc.mul(&inv2t0));
    }
    Ok(SeriesQ { coeffs: t })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn q(n: i64, d: i64) -> ParamField {
        ParamField::from_rat(rat(n, d))
    }

    #[test]
    fn binomial_sqrt() {
        let s = SeriesQ::new(alloc::vec![q(1, 1), q(1, 1)], 5);
        let t = series_sqrt(&s).unwrap();
        assert_eq!(t.coeffs(), &[q(1, 1), q(1, 2), q(-1, 8), q(1, 16), q(-5, 128)]);
        assert_eq!(t.mul(&t), s);
    }

    #[test]
    fn sqrt_errors() {
        let s = SeriesQ::new(alloc::vec![q(0, 1), q(1, 1)], 3);
        assert_eq!(series_sqrt(&s), Err(Error::NonUnitConstantTerm));
        let s = SeriesQ::new(alloc::vec![q(2, 1)], 3);
        assert_eq!(series_sqrt(&s), Err(Error::NonSquareConstant));
        let g: SeriesQ<GaussRat> = SeriesQ::constant(Complex::new(rat(-4, 9), rat(0, 1)), 2);
        assert_eq!(series_sqrt(&g).unwrap().coeff(0).unwrap(), &Complex::new(rat(0, 1), rat(2, 3)));
    }

    #[test]
    fn truncation_is_tracked() {
        let a = SeriesQ::new(alloc::vec![q(1, 1)], 4);
        let b = SeriesQ::new(alloc::vec![q(1, 1)], 2);
        assert_eq!(a.mul(&b).order(), 2);
        assert_eq!(a.add(&b).coeff(2), Err(Error::BeyondTruncation { index: 2, order: 2 }));
        assert_eq!(b.shift(3).order(), 5);
    }
}
