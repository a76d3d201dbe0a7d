use crate::algebra::{int, Poly};
use crate::error::{Error, Result};
use crate::local::milnor_number;
use crate::newton::{filtration, Weight};

/// Weight `(3, 1)` of the J3,0 filtration test.
pub fn j30_weight() -> Weight {
    Weight::from_ints(&[3, 1]).expect("positive weight")
}

/// `fil_(3,1)(f) >= 9`, a sufficient condition for `f` to deform to J3,0.
pub fn deforms_to_j30_by_filtration(f: &Poly) -> Result<bool> {
    if f.nvars() != 2 {
        return Err(Error::UnsupportedDimension(f.nvars()));
    }
    milnor_number(f, &[])?;
    Ok(filtration(f, &j30_weight())? >= int(9))
}

/// Every term of `f` has degree at least 7; such germs deform to J3,0.
pub fn zero_six_jet_bound(f: &Poly) -> Result<bool> {
    milnor_number(f, &[])?;
    Ok(f.min_degree().is_some_and(|d| d >= 7))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    fn p(s: &str) -> Poly {
        parse_expr(s, &["x", "y"], &["a", "b", "c", "s", "t"]).unwrap()
    }

    #[test]
    fn filtration_test() {
        assert!(deforms_to_j30_by_filtration(&p("x^3 + b*x^2*y^3 + y^9 + c*x*y^7")).unwrap());
        assert!(deforms_to_j30_by_filtration(&p("x^3 + y^10 + a*x*y^7")).unwrap());
        assert!(!deforms_to_j30_by_filtration(&p("x^4 + x^2*y^3 + s*y^8 + t*y^9")).unwrap());
        assert_eq!(deforms_to_j30_by_filtration(&p("x^3")), Err(Error::NotIsolated));
    }

    #[test]
    fn six_jet() {
        assert!(zero_six_jet_bound(&p("x^7 + y^7")).unwrap());
        assert!(!zero_six_jet_bound(&p("x^6 + y^7")).unwrap());
        assert!(!zero_six_jet_bound(&p("x^3 + y^4")).unwrap());
    }
}
