use alloc::vec::Vec;
use core::cmp::Ordering;

use super::weight::Weight;
use crate::algebra::{Monomial, Rat};
use crate::error::{Error, Result};

/// A compact one-dimensional face with its weight `w` and total weight `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Facet {
    pub weight: Weight,
    pub d: Rat,
    pub endpoints: (Monomial, Monomial),
}

impl Facet {
    /// Whether the lattice point lies on the face's supporting line.
    pub fn contains(&self, p: &[u32]) -> bool {
        self.weight.degree(p) == self.d
    }
}

/// Newton diagram of a two-variable support.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonDiagram {
    pub support: Vec<Monomial>,
    /// Increasing in the first coordinate.
    pub vertices: Vec<Monomial>,
    pub facets: Vec<Facet>,
    pub convenient: bool,
}

fn cross(o: &[u32], a: &[u32], b: &[u32]) -> i64 {
    let (ox, oy) = (o[0] as i64, o[1] as i64);
    (a[0] as i64 - ox) * (b[1] as i64 - oy) - (a[1] as i64 - oy) * (b[0] as i64 - ox)
}

pub fn newton_polyhedron(support: &[Monomial]) -> Result<NewtonDiagram> {
    if support.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let n = support[0].len();
    if n != 2 || support.iter().any(|p| p.len() != n) {
        return Err(Error::UnsupportedDimension(n));
    }
    let mut pts: Vec<Monomial> = support.to_vec();
    pts.sort();
    pts.dedup();

    // Pareto-minimal points form the staircase seen from the origin.
    let mut stair: Vec<Monomial> = Vec::new();
    for p in &pts {
        match stair.last() {
            Some(l) if l[1] <= p[1] => {}
            _ => stair.push(p.clone()),
        }
    }

    let mut hull: Vec<Monomial> = Vec::new();
    for p in stair {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }

    let mut facets = Vec::new();
    for pair in hull.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let slope = Rat::new((a[1] - b[1]).into(), (b[0] - a[0]).into());
        let weight = Weight::new(alloc::vec![slope, Rat::from_integer(1.into())])?;
        let d = weight.degree(a);
        facets.push(Facet { weight, d, endpoints: (a.clone(), b.clone()) });
    }

    let convenient = pts.iter().any(|p| p[1] == 0) && pts.iter().any(|p| p[0] == 0);
    Ok(NewtonDiagram { support: pts, vertices: hull, facets, convenient })
}

impl NewtonDiagram {
    /// Lattice points of the support lying on `facet`.
    pub fn points_on(&self, facet: &Facet) -> Vec<Monomial> {
        self.support.iter().filter(|p| facet.contains(p)).cloned().collect()
    }

    /// Whether `p` lies in the Newton polyhedron.
    pub fn contains(&self, p: &[u32]) -> bool {
        let first = &self.vertices[0];
        let last = &self.vertices[self.vertices.len() - 1];
        if p[0] < first[0] || p[1] < last[1] {
            return false;
        }
        self.facets.iter().all(|f| f.weight.degree(p).cmp(&f.d) != Ordering::Less)
    }
}

/// `Σ_{α ∈ V} Π |x_i|^{α_i}` at a complex point given as `(re, im)` pairs.
pub fn rho_gamma(diagram: &NewtonDiagram, point: &[(f64, f64)]) -> f64 {
    let moduli: Vec<f64> = point.iter().map(|&(re, im)| libm::hypot(re, im)).collect();
    diagram
        .vertices
        .iter()
        .map(|v| {
            v.iter()
                .zip(&moduli)
                .map(|(&e, &m)| if e == 0 { 1.0 } else { libm::pow(m, e as f64) })
                .product::<f64>()
        })
        .sum()
}
