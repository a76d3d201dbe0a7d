use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::family::Family;
use crate::algebra::{Monomial, ParamField, Poly, Rat};
use crate::error::{Error, Result};
use crate::local::{CornerDivider, LocalOrder, DEFAULT_LIMIT};
use crate::newton::{filtration, MixedPoly, Weight};

/// One division `u · m = Σ_i c_i · ∂F/∂x_i` with `u(0) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SchemeTerm {
    pub monomial: Monomial,
    pub unit: Poly,
    pub cofactors: Vec<Poly>,
}

impl SchemeTerm {
    pub fn verify(&self, jac: &[Poly]) -> bool {
        if self.cofactors.len() != jac.len() || self.unit.constant_term().is_zero() {
            return false;
        }
        let space = self.unit.space();
        let mut lhs = &self.unit * &Poly::monomial(space, self.monomial.clone(), ParamField::one());
        for (c, g) in self.cofactors.iter().zip(jac) {
            lhs = lhs - c * g;
        }
        lhs.is_zero()
    }
}

/// Control function `h = Σ_k conj(m_k) · u_k · m_k` assembled from divisions of the
/// monomials `m_k` by the Jacobian ideal of `F_t`.
#[derive(Clone, Debug, PartialEq)]
pub struct ControlScheme {
    pub terms: Vec<SchemeTerm>,
}

impl ControlScheme {
    pub fn h(&self) -> MixedPoly {
        let space = self.terms[0].unit.space();
        let mut h = MixedPoly::zero(space);
        for t in &self.terms {
            let m = Poly::monomial(space, t.monomial.clone(), ParamField::one());
            let part = MixedPoly::conj_of(&m).mul_poly(&(&t.unit * &m)).expect("same space");
            h = h.add(&part).expect("same space");
        }
        h
    }

    /// `P_j = Σ_k conj(m_k) · c_{k,j}`, so that `h = Σ_j P_j · ∂F/∂x_j`.
    pub fn decomposition(&self) -> Vec<MixedPoly> {
        let space = self.terms[0].unit.space();
        let n = self.terms[0].cofactors.len();
        (0..n)
            .map(|j| {
                let mut p = MixedPoly::zero(space);
                for t in &self.terms {
                    let m = Poly::monomial(space, t.monomial.clone(), ParamField::one());
                    p = p.add(&MixedPoly::conj_of(&m).mul_poly(&t.cofactors[j]).expect("same space")).expect("same space");
                }
                p
            })
            .collect()
    }
}

/// Divides each monomial by the Jacobian ideal of `F_t`; every monomial must lie in
/// the local Jacobian ideal. Units have constant term 1.
pub fn build_scheme(fam: &Family, monomials: &[Monomial], limit: usize) -> Result<ControlScheme> {
    let divider = scheme_divider(fam, limit)?;
    let mut terms = Vec::new();
    for m in monomials {
        match divide_monomial(&divider, m)? {
            Some(t) => terms.push(t),
            None => {
                return Err(Error::SchemeFails {
                    which: fam.total.monomial_string(m),
                    reason: "nonzero remainder".to_string(),
                })
            }
        }
    }
    Ok(ControlScheme { terms })
}

fn scheme_divider(fam: &Family, limit: usize) -> Result<CornerDivider> {
    let jac = fam.jacobian();
    if jac.iter().any(|g| g.is_zero()) {
        return Err(Error::NotIsolated);
    }
    CornerDivider::new(&jac, &LocalOrder::ds(fam.total.nvars()), limit)
}

/// `None` when `m` is not in the local Jacobian ideal.
fn divide_monomial(divider: &CornerDivider, m: &Monomial) -> Result<Option<SchemeTerm>> {
    let space = divider.generators()[0].space();
    let d = divider.divide(&Poly::monomial(space, m.clone(), ParamField::one()))?;
    Ok(d.map(|(unit, cofactors)| SchemeTerm { monomial: m.clone(), unit, cofactors }))
}

/// Data of the two-exponent scheme `h = u_1 |x|^{2a} + u_2 |y|^{2b}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrivialityCertificate {
    pub family: Family,
    pub a: u32,
    pub b: u32,
    /// `(b/a, 1)`.
    pub weight: Weight,
    pub alpha1: Poly,
    pub beta1: Poly,
    pub alpha2: Poly,
    pub beta2: Poly,
    pub u1: Poly,
    pub u2: Poly,
    /// `min_i {fil_w α_i, fil_w β_i}`.
    pub min_fil: Rat,
    /// `fil_w(∂F/∂t)`.
    pub fil_direction: Rat,
    pub margin: Rat,
}

impl TrivialityCertificate {
    pub fn scheme(&self) -> ControlScheme {
        ControlScheme {
            terms: vec![
                SchemeTerm {
                    monomial: vec![self.a, 0],
                    unit: self.u1.clone(),
                    cofactors: vec![self.alpha1.clone(), self.beta1.clone()],
                },
                SchemeTerm {
                    monomial: vec![0, self.b],
                    unit: self.u2.clone(),
                    cofactors: vec![self.alpha2.clone(), self.beta2.clone()],
                },
            ],
        }
    }

    /// Re-checks the cofactor identities, the units and every recorded filtration
    /// and margin from the stored data alone.
    pub fn verify(&self) -> Result<bool> {
        let jac = self.family.jacobian();
        if !self.scheme().terms.iter().all(|t| t.verify(&jac)) {
            return Ok(false);
        }
        let w = scheme_weight(self.a, self.b)?;
        let (min_fil, fil_g, margin) = scheme_margin(&w, self.a, self.b, &[&self.alpha1, &self.beta1, &self.alpha2, &self.beta2], &self.family.direction)?;
        Ok(w == self.weight && min_fil == self.min_fil && fil_g == self.fil_direction && margin == self.margin)
    }

    pub fn passes(&self) -> bool {
        self.margin >= Rat::zero()
    }
}

pub fn scheme_weight(a: u32, b: u32) -> Result<Weight> {
    Weight::new(vec![Rat::new(b.into(), a.into()), Rat::from_integer(1.into())])
}

/// `(min fil, fil_w(g), margin)` for condition (ii).
fn scheme_margin(w: &Weight, a: u32, b: u32, cofactors: &[&Poly], g: &Poly) -> Result<(Rat, Rat, Rat)> {
    let mut min_fil: Option<Rat> = None;
    for c in cofactors {
        if c.is_zero() {
            continue;
        }
        let f = filtration(*c, w)?;
        min_fil = Some(match min_fil {
            Some(m) if m <= f => m,
            _ => f,
        });
    }
    let min_fil = min_fil.ok_or(Error::ZeroPolynomial)?;
    let fil_g = filtration(g, w)?;
    let margin = &min_fil + &fil_g - Rat::new(b.into(), a.into()) - Rat::from_integer(b.into());
    Ok((min_fil, fil_g, margin))
}

/// Divides `x^a` and `y^b` by the Jacobian ideal of `F_t` and evaluates condition (ii).
pub fn build_control_scheme(fam: &Family, a: u32, b: u32) -> Result<TrivialityCertificate> {
    build_control_scheme_with(fam, a, b, DEFAULT_LIMIT)
}

pub fn build_control_scheme_with(fam: &Family, a: u32, b: u32, limit: usize) -> Result<TrivialityCertificate> {
    if fam.total.nvars() != 2 {
        return Err(Error::UnsupportedDimension(fam.total.nvars()));
    }
    if a == 0 || a > b {
        return Err(Error::InvalidArgument(alloc::format!("scheme needs 0 < a <= b, got ({}, {})", a, b)));
    }
    let sch = build_scheme(fam, &[vec![a, 0], vec![0, b]], limit)?;
    certificate_from_scheme(fam, a, b, &sch)
}

fn certificate_from_scheme(fam: &Family, a: u32, b: u32, sch: &ControlScheme) -> Result<TrivialityCertificate> {
    let [t1, t2] = [&sch.terms[0], &sch.terms[1]];
    let w = scheme_weight(a, b)?;
    let (min_fil, fil_direction, margin) = scheme_margin(
        &w,
        a,
        b,
        &[&t1.cofactors[0], &t1.cofactors[1], &t2.cofactors[0], &t2.cofactors[1]],
        &fam.direction,
    )?;
    Ok(TrivialityCertificate {
        family: fam.clone(),
        a,
        b,
        weight: w,
        alpha1: t1.cofactors[0].clone(),
        beta1: t1.cofactors[1].clone(),
        alpha2: t2.cofactors[0].clone(),
        beta2: t2.cofactors[1].clone(),
        u1: t1.unit.clone(),
        u2: t2.unit.clone(),
        min_fil,
        fil_direction,
        margin,
    })
}

/// Tries every `1 <= a <= b <= max_b`, reusing one standard basis; returns the first
/// certificate with non-negative margin in order of increasing `b`, then `a`.
pub fn search_scheme(fam: &Family, max_b: u32, limit: usize) -> Result<Option<TrivialityCertificate>> {
    if fam.total.nvars() != 2 {
        return Err(Error::UnsupportedDimension(fam.total.nvars()));
    }
    let divider = scheme_divider(fam, limit)?;
    let mut cache: Vec<Option<Option<SchemeTerm>>> = vec![None; 2 * (max_b as usize + 1)];
    let mut term = |m: Monomial, slot: usize| -> Result<Option<SchemeTerm>> {
        if let Some(t) = &cache[slot] {
            return Ok(t.clone());
        }
        let t = divide_monomial(&divider, &m)?;
        cache[slot] = Some(t.clone());
        Ok(t)
    };
    for b in 1..=max_b {
        let Some(tb) = term(vec![0, b], 2 * b as usize + 1)? else { continue };
        for a in 1..=b {
            let Some(ta) = term(vec![a, 0], 2 * a as usize)? else { continue };
            let cert = certificate_from_scheme(fam, a, b, &ControlScheme { terms: vec![ta, tb.clone()] })?;
            if cert.passes() {
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}
