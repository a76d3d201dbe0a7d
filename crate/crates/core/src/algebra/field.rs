use alloc::string::String;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::param::{gcd, ParamPoly};
use super::rat::Rat;
use crate::error::{Error, Result};

/// Element of the rational function field Q(params).
///
/// Canonical form: numerator and denominator are coprime polynomials with integer
/// coefficients, their joint integer content is 1 and the lexicographically leading
/// coefficient of the denominator is positive. Equal fractions are therefore
/// structurally equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamField {
    num: ParamPoly,
    den: ParamPoly,
}

impl Default for ParamField {
    fn default() -> Self {
        Self::zero()
    }
}

/// Divides numerator and denominator by their joint content and fixes the sign.
/// Assumes they are already coprime as polynomials.
fn scale_canonical(num: ParamPoly, den: ParamPoly) -> ParamField {
    if num.is_zero() {
        return ParamField::zero();
    }
    if let (Some(n), Some(d)) = (num.as_constant(), den.as_constant()) {
        return ParamField::from_rat(n / d);
    }
    let l = num.denominator_lcm().lcm(&den.denominator_lcm());
    let lr = Rat::from_integer(l);
    let num = num.scale(&lr);
    let den = den.scale(&lr);
    let mut g: BigInt = num.numerator_gcd().gcd(&den.numerator_gcd());
    if den.leading_coeff().is_negative() {
        g = -g;
    }
    let gi = Rat::from_integer(g).recip();
    ParamField { num: num.scale(&gi), den: den.scale(&gi) }
}

/// Brings an arbitrary fraction into canonical form.
pub fn normalize_fraction(num: &ParamPoly, den: &ParamPoly) -> Result<ParamField> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if den.is_constant() || num.is_constant() {
        return Ok(scale_canonical(num.clone(), den.clone()));
    }
    let g = gcd(num, den);
    let n = num.exact_div(&g).expect("gcd divides numerator");
    let d = den.exact_div(&g).expect("gcd divides denominator");
    Ok(scale_canonical(n, d))
}

impl ParamField {
    pub fn zero() -> Self {
        Self { num: ParamPoly::zero(), den: ParamPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(super::rat::int(n))
    }

    pub fn from_rat(c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: ParamPoly::constant(Rat::from_integer(c.numer().clone())),
            den: ParamPoly::constant(Rat::from_integer(c.denom().clone())),
        }
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        scale_canonical(p, ParamPoly::one())
    }

    /// The parameter with index `i`.
    pub fn param(i: usize) -> Self {
        Self::from_poly(ParamPoly::var(i))
    }

    pub fn new(num: &ParamPoly, den: &ParamPoly) -> Result<Self> {
        normalize_fraction(num, den)
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational value when the element does not depend on the parameters.
    pub fn as_rat(&self) -> Option<Rat> {
        Some(self.num.as_constant()? / self.den.as_constant()?)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Whether the denominator is a constant, i.e. the element is a polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The element as a polynomial in the parameters, if it is one.
    pub fn as_poly(&self) -> Option<ParamPoly> {
        let d = self.den.as_constant()?;
        Some(self.num.scale(&d.recip()))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if let (Some(a), Some(b)) = (self.as_rat(), o.as_rat()) {
            return Self::from_rat(a + b);
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            if self.den.is_constant() {
                return scale_canonical(n, self.den.clone());
            }
            return normalize_fraction(&n, &self.den).expect("nonzero denominator");
        }
        if self.den.is_constant() && o.den.is_constant() {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return scale_canonical(n, self.den.mul(&o.den));
        }
        let g = gcd(&self.den, &o.den);
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = o.den.exact_div(&g).expect("gcd divides");
        let n = self.num.mul(&d2).add(&o.num.mul(&d1));
        let d = self.den.mul(&d2);
        normalize_fraction(&n, &d).expect("nonzero denominator")
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let (Some(a), Some(b)) = (self.as_rat(), o.as_rat()) {
            return Self::from_rat(a * b);
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = o.den.exact_div(&g1).expect("gcd divides");
        let n2 = o.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        scale_canonical(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        scale_canonical(self.num.scale(k), self.den.clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(scale_canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv().ok_or(Error::ZeroDenominator)?))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Value at a rational point; `None` when the denominator vanishes there.
    pub fn eval(&self, point: &[Rat]) -> Option<Rat> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(point) / d)
    }

    /// Substitutes values for some parameters.
    pub fn partial_eval(&self, point: &[Option<Rat>]) -> Result<Self> {
        let d = self.den.partial_eval(point);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        normalize_fraction(&self.num.partial_eval(point), &d)
    }

    pub fn derivative(&self, v: usize) -> Self {
        let n = self.num.derivative(v).mul(&self.den).sub(&self.num.mul(&self.den.derivative(v)));
        normalize_fraction(&n, &self.den.mul(&self.den)).expect("nonzero denominator")
    }

    /// Whether the element is a positive rational constant.
    pub fn is_positive_rat(&self) -> bool {
        self.as_rat().is_some_and(|r| r.is_positive())
    }

    /// Renders the element so that the expression parser reads it back.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if let Some(r) = self.as_rat() {
            return alloc::format!("{}", r);
        }
        let n = self.num.to_string_with(names);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.to_string_with(names);
        let n = if self.num.len() > 1 { alloc::format!("({})", n) } else { n };
        if self.den.is_constant() {
            alloc::format!("{}/{}", n, d)
        } else {
            alloc::format!("{}/({})", n, d)
        }
    }

    /// Whether the printed form needs parentheses when used as a factor.
    pub(crate) fn is_compound(&self) -> bool {
        self.num.len() > 1 && self.den.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    #[test]
    fn spec_normalizations() {
        let s = ParamPoly::var(0);
        let t = ParamPoly::var(1);
        let f = ParamField::new(&s.pow(2).mul(&t), &s.mul(&t)).unwrap();
        assert_eq!(f.numerator(), &s);
        assert!(f.denominator().is_one());
        let f = ParamField::new(&ParamPoly::constant(int(-1)), &s.neg()).unwrap();
        assert!(f.numerator().is_one());
        assert_eq!(f.denominator(), &s);
        let f = ParamField::new(&s.scale(&int(2)).add(&ParamPoly::constant(int(2))), &ParamPoly::constant(int(4)))
            .unwrap();
        assert_eq!(f.numerator(), &s.add(&ParamPoly::one()));
        assert_eq!(f.denominator(), &ParamPoly::constant(int(2)));
        assert_eq!(ParamField::new(&s, &ParamPoly::zero()), Err(Error::ZeroDenominator));
    }
}
