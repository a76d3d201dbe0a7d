use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::mixed::MixedPoly;
use super::weight::Weight;
use crate::algebra::{Monomial, Poly, Rat};
use crate::error::{Error, Result};

/// Anything with a support in `ℕⁿ`.
pub trait Supported {
    fn nvars(&self) -> usize;
    fn support_points(&self) -> Vec<Monomial>;
}

impl Supported for Poly {
    fn nvars(&self) -> usize {
        Poly::nvars(self)
    }
    fn support_points(&self) -> Vec<Monomial> {
        Poly::support(self)
    }
}

impl Supported for MixedPoly {
    fn nvars(&self) -> usize {
        MixedPoly::nvars(self)
    }
    fn support_points(&self) -> Vec<Monomial> {
        MixedPoly::support(self)
    }
}

/// Combined-exponent support; zero input is an error.
pub fn support<P: Supported>(p: &P) -> Result<Vec<Monomial>> {
    let s = p.support_points();
    if s.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(s)
}

fn check_len<P: Supported>(p: &P, w: &Weight) -> Result<()> {
    if p.nvars() != w.len() {
        return Err(Error::InvalidArgument(alloc::format!(
            "weight has {} components for {} variables",
            w.len(),
            p.nvars()
        )));
    }
    Ok(())
}

/// Minimal weighted degree over the support.
pub fn filtration<P: Supported>(p: &P, w: &Weight) -> Result<Rat> {
    check_len(p, w)?;
    support(p)?
        .iter()
        .map(|e| w.degree(e))
        .min()
        .ok_or(Error::ZeroPolynomial)
}

/// Terms of `p` of weighted degree `fil_w(p)`.
pub fn initial_part(p: &Poly, w: &Weight) -> Result<Poly> {
    let d = filtration(p, w)?;
    Ok(p.filter(|e, _| w.degree(e) == d))
}

fn normalize(mut v: Vec<Rat>) -> Option<Vec<Rat>> {
    if v.iter().all(|c| c.is_zero()) {
        return None;
    }
    if v.iter().any(|c| c.is_negative()) {
        if v.iter().any(|c| c.is_positive()) {
            return None;
        }
        v = v.into_iter().map(|c| -c).collect();
    }
    let pivot = if v.len() > 1 && v[1].is_positive() {
        v[1].clone()
    } else {
        v.iter().find(|c| c.is_positive()).cloned()?
    };
    Some(v.into_iter().map(|c| c / &pivot).collect())
}

/// Solution space of `M w = 0` via reduced row echelon form; free variables set to 1.
fn kernel_vector(mut m: Vec<Vec<Rat>>, n: usize) -> Vec<Rat> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for j in 0..n {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let k = m[i][c].clone();
                for j in 0..n {
                    let v = &m[i][j] - &k * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut w = vec![Rat::one(); n];
    for (row, &c) in pivots.iter().enumerate() {
        let mut s = Rat::zero();
        for j in 0..n {
            if !pivots.contains(&j) {
                s -= &m[row][j];
            }
        }
        w[c] = s;
    }
    w
}

/// Type `(w; d)` when every support point has the same weighted degree for some
/// non-negative `w`. When the solution space has dimension above one (a single
/// monomial, or a variable that never occurs) free components are set to 1.
pub fn is_quasihomogeneous(p: &Poly) -> Result<Option<(Weight, Rat)>> {
    let pts = support(p)?;
    let n = p.nvars();
    let base = &pts[0];
    let rows: Vec<Vec<Rat>> = pts[1..]
        .iter()
        .map(|q| (0..n).map(|i| Rat::from_integer((q[i] as i64 - base[i] as i64).into())).collect())
        .collect();
    let Some(v) = normalize(kernel_vector(rows, n)) else { return Ok(None) };
    let w = Weight::new(v)?;
    let d = w.degree(base);
    if pts.iter().all(|q| w.degree(q) == d) {
        Ok(Some((w, d)))
    } else {
        Ok(None)
    }
}
