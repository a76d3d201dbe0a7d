use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use super::family::Family;
use crate::algebra::Rat;
use crate::error::{Error, Result};
use crate::newton::{filtration, is_control_function, newton_polyhedron, support, Facet, MixedPoly};

/// Margins of one compact facet `σ`, one per partial derivative.
#[derive(Clone, Debug, PartialEq)]
pub struct FaceMargin {
    pub facet: Facet,
    pub w_star: Rat,
    pub fil_direction: Rat,
    pub fil_h: Rat,
    pub fil_p: Vec<Rat>,
    /// `fil(g) + fil(P_i) - fil(h) - w_*`.
    pub margins: Vec<Rat>,
}

impl FaceMargin {
    pub fn min_margin(&self) -> Rat {
        self.margins.iter().min().cloned().unwrap_or_else(Rat::zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FaceCheckReport {
    pub faces: Vec<FaceMargin>,
    /// How the control property of `h` was settled.
    pub control: String,
    /// True iff every margin is non-negative. False only means the criterion is
    /// inconclusive.
    pub verdict: bool,
}

/// Checks `h = Σ P_i ∂F/∂x_i` exactly, the control property of `h`, t-independence of
/// `Γ(h_t)`, and the facet inequality for every compact facet of `Γ(h)`.
/// `allow_inconclusive` accepts an `h` whose control property cannot be decided.
pub fn check_face_margins(fam: &Family, p: &[MixedPoly], h: &MixedPoly, allow_inconclusive: bool) -> Result<FaceCheckReport> {
    let jac = fam.jacobian();
    if p.len() != jac.len() {
        return Err(Error::DecompositionMismatch);
    }
    let mut rhs = MixedPoly::zero(h.space());
    for (pi, gi) in p.iter().zip(&jac) {
        rhs = rhs.add(&pi.mul_poly(gi)?)?;
    }
    if &rhs != h {
        return Err(Error::DecompositionMismatch);
    }

    let control = match is_control_function(h) {
        Ok(c) if c.holds => c.reason,
        Ok(c) => return Err(Error::NotControlFunction(c.reason)),
        Err(Error::Inconclusive(r)) if allow_inconclusive => alloc::format!("accepted without proof: {}", r),
        Err(e) => return Err(e),
    };

    let diagram = newton_polyhedron(&support(h)?)?;
    let ti = h.space().param_index(&fam.param).expect("family parameter is declared");
    for v in &diagram.vertices {
        let stable = h
            .terms_at(v)
            .iter()
            .any(|(_, _, c)| c.numerator().degree_in(ti) == 0);
        if !stable {
            return Err(Error::Inconclusive(alloc::format!(
                "vertex {:?} of the Newton diagram of h may vanish for special {}",
                v,
                fam.param
            )));
        }
    }

    let mut faces = Vec::new();
    for facet in &diagram.facets {
        let w = &facet.weight;
        let fil_direction = filtration(&fam.direction, w)?;
        let fil_h = filtration(h, w)?;
        let w_star = w.star().clone();
        let mut fil_p = Vec::new();
        let mut margins = Vec::new();
        for pi in p {
            if pi.is_zero() {
                // A vanishing P_i imposes no condition.
                continue;
            }
            let f = filtration(pi, w)?;
            margins.push(&fil_direction + &f - &fil_h - &w_star);
            fil_p.push(f);
        }
        faces.push(FaceMargin { facet: facet.clone(), w_star, fil_direction, fil_h, fil_p, margins });
    }
    let verdict = faces.iter().all(|f| f.margins.iter().all(|m| *m >= Rat::zero()));
    Ok(FaceCheckReport { faces, control, verdict })
}
