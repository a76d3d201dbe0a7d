use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Signed;

use super::diagram::{newton_polyhedron, Facet, NewtonDiagram};
use super::filtration::support;
use super::mixed::MixedPoly;
use crate::algebra::{Monomial, ParamField};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ControlCheck {
    pub holds: bool,
    pub reason: String,
    pub failing_face: Option<Facet>,
}

impl ControlCheck {
    fn yes(reason: String) -> Self {
        Self { holds: true, reason, failing_face: None }
    }
    fn no(reason: String, face: Option<Facet>) -> Self {
        Self { holds: false, reason, failing_face: face }
    }
}

/// Splits `h = Σ_k u_k · m_k · conj(m_k)` when every term's conjugate part
/// divides its holomorphic part; returns `(m_k, constant term of u_k)`.
pub fn scheme_form(h: &MixedPoly) -> Option<Vec<(Monomial, ParamField)>> {
    let mut groups: BTreeMap<Monomial, ParamField> = BTreeMap::new();
    for (nu, mu, _) in h.terms() {
        if mu.iter().all(|&e| e == 0) || nu.iter().zip(mu).any(|(a, b)| a < b) {
            return None;
        }
        groups.entry(mu.clone()).or_insert_with(ParamField::zero);
    }
    for (nu, mu, c) in h.terms() {
        if nu == mu {
            groups.insert(mu.clone(), c.clone());
        }
    }
    if groups.values().any(|c| c.is_zero()) {
        return None;
    }
    Some(groups.into_iter().collect())
}

/// Sufficient test that `h` is a control function in two variables: `Γ(h)` must be
/// convenient and every facet restriction must be free of zeros in `(ℂ*)²`.
/// A restriction `Σ c_k |m_k|²` with positive rational ratios qualifies; a
/// holomorphic restriction with two or more terms always has zeros. Any other
/// mixed restriction is reported as `Inconclusive`.
pub fn is_control_function(h: &MixedPoly) -> Result<ControlCheck> {
    let pts = support(h)?;
    let diagram = newton_polyhedron(&pts)?;
    if !diagram.convenient {
        return Ok(ControlCheck::no("Newton diagram is not convenient".into(), None));
    }
    let scheme = scheme_form(h).is_some();
    for facet in &diagram.facets {
        let on_face = h.filter_support(|p| facet.contains(p));
        let terms: Vec<_> = on_face.terms().collect();
        if on_face.is_holomorphic() {
            return Ok(ControlCheck::no(
                alloc::format!("holomorphic restriction to face {} has zeros in (C*)^2", facet.weight),
                Some(facet.clone()),
            ));
        }
        let all_squares = terms.iter().all(|(nu, mu, _)| nu == mu);
        let first = terms[0].2;
        let positive = all_squares
            && terms.iter().all(|(_, _, c)| {
                c.div(first).ok().and_then(|r| r.as_rat()).map_or(false, |r| r.is_positive())
            });
        if !positive {
            return Err(Error::Inconclusive(alloc::format!(
                "mixed restriction to face {} is not a positive combination of |m|^2",
                facet.weight
            )));
        }
    }
    let how = if scheme { "scheme form, " } else { "" };
    Ok(ControlCheck::yes(alloc::format!(
        "{}convenient diagram, every face restriction is a positive sum of |m|^2",
        how
    )))
}

/// A standard control function `ρ_Γ` vanishes only at the origin iff `Γ` is convenient.
pub fn is_standard_control_function(diagram: &NewtonDiagram) -> bool {
    diagram.convenient
}
