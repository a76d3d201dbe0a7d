use alloc::string::String;

use super::series::{Coeff, SeriesQ};
use crate::algebra::rat;
use crate::error::{Error, Result};

/// Default truncation order for branch expansions.
pub const DEFAULT_ORDER: usize = 16;

/// Which root of `∂f/∂x = 0`: branch 1 starts at `-(2b/3)y^3`, branch 2 at `-(c/(2b))y^4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    One,
    Two,
}

impl Branch {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Branch::One),
            2 => Ok(Branch::Two),
            _ => Err(Error::InvalidArgument(alloc::format!("branch must be 1 or 2, got {}", i))),
        }
    }
}

fn frac<C: Coeff>(n: i64, d: i64) -> C {
    C::from_rat(rat(n, d))
}

/// `u = x / y^3` on the branch, known modulo `y^order`.
fn branch_unit<C: Coeff>(b: &C, c: &C, branch: Branch, order: usize) -> Result<SeriesQ<C>> {
    let binv = b.inv().ok_or_else(|| Error::DomainViolation("b = 0".into()))?;
    // 3x^2 + 2bxy^3 + cy^7 = 0 gives x = (b y^3 / 3)(-1 ∓ sqrt(1 - 3cy/b^2)).
    let lin = frac::<C>(-3, 1).mul(c).mul(&binv).mul(&binv);
    let s = SeriesQ::new(alloc::vec![C::one(), lin], order).sqrt()?;
    let minus_one = SeriesQ::constant(C::one().neg(), order);
    let inner = match branch {
        Branch::One => minus_one.sub(&s),
        Branch::Two => minus_one.add(&s),
    };
    Ok(inner.scale(&b.mul(&frac(1, 3))))
}

/// Branch `x(y)` of `3x^2 + 2bxy^3 + cy^7 = 0`, known modulo `y^n`.
pub fn solve_branch_series<C: Coeff>(b: &C, c: &C, branch: Branch, n: usize) -> Result<SeriesQ<C>> {
    if n < 5 {
        return Err(Error::TruncationTooSmall { got: n, need: 5 });
    }
    Ok(branch_unit(b, c, branch, n - 3)?.shift(3))
}

/// `∂f/∂x` evaluated along the branch truncated at `n`.
pub fn branch_residual<C: Coeff>(b: &C, c: &C, branch: Branch, n: usize) -> Result<SeriesQ<C>> {
    let x = solve_branch_series(b, c, branch, n)?;
    let three = SeriesQ::constant(frac(3, 1), n);
    let cy7 = SeriesQ::monomial(c.clone(), 7, n);
    Ok(three.mul(&x).mul(&x).add(&x.shift(3).scale(&b.mul(&frac(2, 1)))).add(&cy7))
}

/// `f = x^3 + b x^2 y^3 + y^9 + c x y^7` restricted to a branch, modulo `y^n`.
pub fn restrict_on_branch<C: Coeff>(b: &C, c: &C, branch: Branch, n: usize) -> Result<SeriesQ<C>> {
    if n < 11 {
        return Err(Error::TruncationTooSmall { got: n, need: 11 });
    }
    // With x = y^3 u: f = y^9 (u^3 + b u^2 + 1 + c y u).
    let m = n - 9;
    let u = branch_unit(b, c, branch, m)?;
    let u2 = u.mul(&u);
    let inner = u2
        .mul(&u)
        .add(&u2.scale(b))
        .add(&SeriesQ::constant(C::one(), m))
        .add(&u.scale(c).shift(1));
    Ok(inner.shift(9))
}

#[derive(Clone, Debug, PartialEq)]
pub struct HPInvariants<C> {
    /// Coefficient of `y^9` on branch 1, `(4/27)b^3 + 1`.
    pub a: C,
    /// Negated coefficient of `y^10` on branch 1, `(2/3)bc`.
    pub b: C,
    pub provenance: String,
}

/// Truncation used by [`hp_invariants`].
pub const HP_ORDER: usize = 12;

/// Reads `A` and `B` off the branch-1 restriction and checks that branch 2 gives `y^9 + 0·y^10`.
pub fn hp_invariants<C: Coeff>(b: &C, c: &C) -> Result<HPInvariants<C>> {
    let r1 = restrict_on_branch(b, c, Branch::One, HP_ORDER)?;
    let r2 = restrict_on_branch(b, c, Branch::Two, HP_ORDER)?;
    if *r2.coeff(9)? != C::one() || !r2.coeff(10)?.is_zero() {
        return Err(Error::Inconclusive("branch 2 restriction is not y^9 + o(y^10)".into()));
    }
    Ok(HPInvariants {
        a: r1.coeff(9)?.clone(),
        b: r1.coeff(10)?.neg(),
        provenance: alloc::format!(
            "branch 1 coefficients of y^9 and -y^10 at truncation {}; branch 2 gives (1, 0)",
            HP_ORDER
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ParamField;

    fn q(n: i64, d: i64) -> ParamField {
        ParamField::from_rat(rat(n, d))
    }

    #[test]
    fn unit_parameters() {
        let x = solve_branch_series(&q(1, 1), &q(1, 1), Branch::One, 6).unwrap();
        assert_eq!(&x.coeffs()[..5], &[q(0, 1), q(0, 1), q(0, 1), q(-2, 3), q(1, 2)]);
        let r = restrict_on_branch(&q(1, 1), &q(1, 1), Branch::One, 11).unwrap();
        assert_eq!(r.coeff(9).unwrap(), &q(31, 27));
        assert_eq!(r.coeff(10).unwrap(), &q(-2, 3));
        assert!(r.coeff(11).is_err());
    }

    #[test]
    fn small_truncation() {
        assert_eq!(
            solve_branch_series(&q(1, 1), &q(1, 1), Branch::One, 4),
            Err(Error::TruncationTooSmall { got: 4, need: 5 })
        );
        assert_eq!(
            restrict_on_branch(&q(1, 1), &q(1, 1), Branch::Two, 10),
            Err(Error::TruncationTooSmall { got: 10, need: 11 })
        );
        assert!(matches!(hp_invariants(&q(0, 1), &q(1, 1)), Err(Error::DomainViolation(_))));
    }

    #[test]
    fn symbolic_invariants() {
        let (b, c) = (ParamField::param(0), ParamField::param(1));
        let hp = hp_invariants(&b, &c).unwrap();
        assert_eq!(hp.a, b.pow(3).mul(&q(4, 27)).add(&q(1, 1)));
        assert_eq!(hp.b, b.mul(&c).mul(&q(2, 3)));
        for br in [Branch::One, Branch::Two] {
            let r = branch_residual(&b, &c, br, 10).unwrap();
            assert!(r.coeffs().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn invariants_at_three_one() {
        let hp = hp_invariants(&q(3, 1), &q(1, 1)).unwrap();
        assert_eq!((hp.a, hp.b), (q(5, 1), q(2, 1)));
    }
}
