use num_complex::{Complex, Complex64};
use num_traits::Zero;

use super::series::GaussRat;
use crate::algebra::rat;
use crate::error::{Error, Result};

/// Relative tolerance for floating-point inputs.
pub const REL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionVerdict {
    /// Neither necessary relation holds.
    NotEquivalent,
    /// A necessary relation holds; equivalence is not decided.
    PossiblyEquivalent,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionReport {
    pub verdict: ObstructionVerdict,
    /// `b1^3 = b2^3` and `c1^9 = c2^9`.
    pub cube_relation: bool,
    /// `A1·A2 = 1` and `(b1c1/(b2c2))^9 = -A1^19`, with `A = (4/27)b^3 + 1`.
    pub product_relation: bool,
    /// Float inputs compared with [`REL_TOL`].
    pub numeric: bool,
}

trait Scalar: Clone {
    fn frac(n: i64, d: i64) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn same(&self, o: &Self) -> bool;
    fn vanishes(&self) -> bool;
    fn near_zero(&self) -> bool {
        self.vanishes()
    }

    fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::frac(1, 1), |acc, _| acc.mul(self))
    }
}

impl Scalar for GaussRat {
    fn frac(n: i64, d: i64) -> Self {
        Complex::new(rat(n, d), rat(0, 1))
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn same(&self, o: &Self) -> bool {
        self == o
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
}

fn modulus(z: &Complex64) -> f64 {
    libm::hypot(z.re, z.im)
}

impl Scalar for Complex64 {
    fn frac(n: i64, d: i64) -> Self {
        Complex64::new(n as f64 / d as f64, 0.0)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn same(&self, o: &Self) -> bool {
        modulus(&(self - o)) <= REL_TOL * modulus(self).max(modulus(o))
    }
    fn vanishes(&self) -> bool {
        *self == Complex64::zero()
    }
    fn near_zero(&self) -> bool {
        modulus(self) <= REL_TOL
    }
}

fn invariant_a<S: Scalar>(b: &S) -> S {
    S::frac(4, 27).mul(&b.pow(3)).add(&S::frac(1, 1))
}

fn obstruction<S: Scalar>(b1: &S, c1: &S, b2: &S, c2: &S, numeric: bool) -> Result<ObstructionReport> {
    for (name, v) in [("b1", b1), ("c1", c1), ("b2", b2), ("c2", c2)] {
        if v.vanishes() {
            return Err(Error::DomainViolation(alloc::format!("{} = 0", name)));
        }
    }
    let a1 = invariant_a(b1);
    let a2 = invariant_a(b2);
    // A is of unit scale here, so the numeric test is absolute.
    if a1.near_zero() || a2.near_zero() {
        return Err(Error::DomainViolation("(4/27)b^3 + 1 = 0".into()));
    }
    let cube_relation = b1.pow(3).same(&b2.pow(3)) && c1.pow(9).same(&c2.pow(9));
    let ratio = b1.mul(c1).div(&b2.mul(c2));
    let minus_one = S::frac(-1, 1);
    let product_relation = a1.mul(&a2).same(&S::frac(1, 1)) && ratio.pow(9).same(&minus_one.mul(&a1.pow(19)));
    let verdict = if cube_relation || product_relation {
        ObstructionVerdict::PossiblyEquivalent
    } else {
        ObstructionVerdict::NotEquivalent
    };
    Ok(ObstructionReport { verdict, cube_relation, product_relation, numeric })
}

/// Necessary conditions for `f_{b1,c1}` and `f_{b2,c2}` to be Lipschitz equivalent, over
/// Gaussian rationals. Only non-equivalence is ever certified.
pub fn equivalence_obstruction(b1: &GaussRat, c1: &GaussRat, b2: &GaussRat, c2: &GaussRat) -> Result<ObstructionReport> {
    obstruction(b1, c1, b2, c2, false)
}

/// Floating-point variant of [`equivalence_obstruction`]; the report is marked numeric.
pub fn equivalence_obstruction_numeric(
    b1: Complex64,
    c1: Complex64,
    b2: Complex64,
    c2: Complex64,
) -> Result<ObstructionReport> {
    obstruction(&b1, &c1, &b2, &c2, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        Complex::new(rat(n, 1), rat(0, 1))
    }

    #[test]
    fn exact_cases() {
        let r = equivalence_obstruction(&g(1), &g(1), &g(-1), &g(1)).unwrap();
        assert_eq!(r.verdict, ObstructionVerdict::NotEquivalent);
        let r = equivalence_obstruction(&g(2), &g(5), &g(2), &g(5)).unwrap();
        assert!(r.cube_relation);
        assert_eq!(r.verdict, ObstructionVerdict::PossiblyEquivalent);
        assert!(matches!(equivalence_obstruction(&g(0), &g(1), &g(1), &g(1)), Err(Error::DomainViolation(_))));
    }

    #[test]
    fn numeric_cases() {
        let one = Complex64::new(1.0, 0.0);
        let r = equivalence_obstruction_numeric(one, one, -one, one).unwrap();
        assert!(r.numeric);
        assert_eq!(r.verdict, ObstructionVerdict::NotEquivalent);
        let w = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
        let r = equivalence_obstruction_numeric(one, one, w, one).unwrap();
        assert!(r.cube_relation);
        let root = Complex64::new(-libm::cbrt(27.0 / 4.0), 0.0);
        assert!(matches!(equivalence_obstruction_numeric(root, one, one, one), Err(Error::DomainViolation(_))));
    }
}
