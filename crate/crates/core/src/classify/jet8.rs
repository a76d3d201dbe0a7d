use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use super::label::{Series, TypeLabel};
use crate::algebra::{Poly, Rat};
use crate::error::{Error, Result};

/// 8-jet `a·x^3 + G_4 + ... + G_8`, where `G_d = Σ_i c_i x^{d-i} y^i`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PreparedJet8 {
    pub a: Rat,
    pub p: [Rat; 5],
    pub q: [Rat; 6],
    pub u: [Rat; 7],
    pub v: [Rat; 8],
    pub m: [Rat; 9],
}

impl PreparedJet8 {
    /// Coefficient of `x^{d-i} y^i` in `G_d`.
    pub fn coeff(&self, d: usize, i: usize) -> Option<&Rat> {
        match d {
            4 => self.p.get(i),
            5 => self.q.get(i),
            6 => self.u.get(i),
            7 => self.v.get(i),
            8 => self.m.get(i),
            _ => None,
        }
    }

    fn coeff_mut(&mut self, d: usize, i: usize) -> Option<&mut Rat> {
        match d {
            4 => self.p.get_mut(i),
            5 => self.q.get_mut(i),
            6 => self.u.get_mut(i),
            7 => self.v.get_mut(i),
            8 => self.m.get_mut(i),
            _ => None,
        }
    }

    /// Reads the 8-jet of a germ in two variables with rational coefficients.
    /// The jet must have no terms below degree 3 and its cubic part must be a multiple of `x^3`.
    pub fn from_poly(f: &Poly) -> Result<Self> {
        if f.nvars() != 2 {
            return Err(Error::UnsupportedDimension(f.nvars()));
        }
        let mut j = PreparedJet8::default();
        for (e, c) in f.jet(8).terms() {
            let c = c
                .as_rat()
                .ok_or_else(|| Error::InvalidArgument("prepared jet needs rational coefficients".into()))?;
            let d = (e[0] + e[1]) as usize;
            let i = e[1] as usize;
            match d {
                3 if i == 0 => j.a = c,
                4..=8 => *j.coeff_mut(d, i).expect("index below degree") = c,
                _ => {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "term of degree {} is not allowed in a prepared 8-jet",
                        d
                    )))
                }
            }
        }
        Ok(j)
    }
}

/// Leaves of the prepared 8-jet decision tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Jet8Class {
    Type(TypeLabel),
    ReducibleTangentCone,
    ZeroFourJet,
    /// `W_{1,0}`, `W#_{1,2q-1}` or `W#_{1,2q}`.
    W10OrWSharp,
    /// `W_{1,p}` with `p > 2`.
    W1pAbove2,
    /// Deeper jets are needed.
    Indeterminate,
}

impl fmt::Display for Jet8Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Jet8Class::Type(l) => write!(f, "{}", l),
            Jet8Class::ReducibleTangentCone => f.write_str("reducible tangent cone"),
            Jet8Class::ZeroFourJet => f.write_str("zero 4-jet"),
            Jet8Class::W10OrWSharp => f.write_str("W1,0 or W#1,2q-1 or W#1,2q"),
            Jet8Class::W1pAbove2 => f.write_str("W1,p with p > 2"),
            Jet8Class::Indeterminate => f.write_str("indeterminate"),
        }
    }
}

fn label(series: Series, sub: &[u32]) -> Jet8Class {
    Jet8Class::Type(TypeLabel::new(series, None, sub.to_vec()))
}

/// Decision tree on the coefficients of a prepared 8-jet.
///
/// With `a = 0` the tree assumes `p_3 = p_4 = q_5 = 0`; other inputs are indeterminate.
pub fn classify_prepared_8jet(j: &PreparedJet8) -> Jet8Class {
    let nz = |r: &Rat| !r.is_zero();
    let (p, q, u, v, m) = (&j.p, &j.q, &j.u, &j.v, &j.m);
    if nz(&j.a) {
        return if nz(&p[4]) {
            label(Series::E, &[6])
        } else if nz(&p[3]) {
            label(Series::E, &[7])
        } else if nz(&q[5]) {
            label(Series::E, &[8])
        } else {
            Jet8Class::Indeterminate
        };
    }
    if nz(&p[3]) || nz(&p[4]) || nz(&q[5]) {
        return Jet8Class::Indeterminate;
    }
    if nz(&p[1]) || nz(&p[2]) {
        return Jet8Class::ReducibleTangentCone;
    }
    if !nz(&p[0]) {
        return Jet8Class::ZeroFourJet;
    }
    if nz(&q[4]) {
        return label(Series::W, &[13]);
    }
    if nz(&u[6]) {
        return Jet8Class::W10OrWSharp;
    }
    if nz(&u[5]) {
        return label(Series::Z, &[17]);
    }
    match (nz(&q[3]), nz(&v[7]), nz(&m[8])) {
        (true, true, _) => label(Series::W, &[1, 1]),
        (false, true, _) => label(Series::W, &[18]),
        (true, false, true) => label(Series::W, &[1, 2]),
        (true, false, false) => Jet8Class::W1pAbove2,
        (false, false, _) => Jet8Class::Indeterminate,
    }
}

/// Every leaf of the tree, for exhaustiveness checks.
pub fn jet8_leaves() -> Vec<Jet8Class> {
    alloc::vec![
        label(Series::E, &[6]),
        label(Series::E, &[7]),
        label(Series::E, &[8]),
        Jet8Class::ReducibleTangentCone,
        Jet8Class::ZeroFourJet,
        label(Series::W, &[13]),
        Jet8Class::W10OrWSharp,
        label(Series::Z, &[17]),
        label(Series::W, &[1, 1]),
        label(Series::W, &[18]),
        label(Series::W, &[1, 2]),
        Jet8Class::W1pAbove2,
        Jet8Class::Indeterminate,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, parse_expr};

    #[test]
    fn leaves() {
        let mut j = PreparedJet8 { a: int(1), ..Default::default() };
        j.p[4] = int(1);
        assert_eq!(classify_prepared_8jet(&j).to_string(), "E6");

        let mut j = PreparedJet8::default();
        j.p[0] = int(1);
        j.q[3] = int(1);
        j.m[8] = int(1);
        assert_eq!(classify_prepared_8jet(&j).to_string(), "W1,2");
        j.m[8] = int(0);
        assert_eq!(classify_prepared_8jet(&j), Jet8Class::W1pAbove2);

        let mut j = PreparedJet8::default();
        j.p[0] = int(1);
        j.u[5] = int(1);
        assert_eq!(classify_prepared_8jet(&j).to_string(), "Z17");
    }

    #[test]
    fn from_poly() {
        let f = parse_expr("x^4 + x^2*y^3 + 2*y^8 + y^9", &["x", "y"], &[] as &[&str]).unwrap();
        let j = PreparedJet8::from_poly(&f).unwrap();
        assert_eq!((j.p[0].clone(), j.q[3].clone(), j.m[8].clone()), (int(1), int(1), int(2)));
        assert_eq!(classify_prepared_8jet(&j).to_string(), "W1,2");
        let g = parse_expr("x^2*y + y^4", &["x", "y"], &[] as &[&str]).unwrap();
        assert!(PreparedJet8::from_poly(&g).is_err());
    }
}
