//! Division with units for ideals of finite colength, by truncated reduction.
//!
//! Let `M` be the monomial ideal of all monomials lying in the localized ideal `I`.
//! Reducing a generator `m_k` of `M` against a standard basis only until every term
//! lies in `𝔪·M` is a finite computation and gives `m_k = A_k·g + Σ_j C_kj m_j` with
//! `C_kj ∈ 𝔪`. With `P = 1 - C` and `D = det P` (so `D(0) = 1`), Cramer's rule turns
//! these rows into exact identities `D·m_k = (adj P · A)_k · g`. A dividend in `M` is
//! reduced the same way and closed up with the rows.
//!
//! Mora's normal form produces the same kind of identity but its unit can need
//! hundreds of reduction steps with quickly growing coefficients over `Q(params)`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::mora::{Budget, Item};
use super::order::LocalOrder;
use super::sorted::{divides, poly_sub_mul, quotient, Sorted};
use super::stdbasis::{quotient_basis, std_basis_with, StdOptions};
use crate::algebra::{Monomial, ParamField, Poly, Space};
use crate::error::{Error, Result};

/// Row `m = A·g + Σ_j C_j m_j` of the closure system.
#[derive(Clone, Debug)]
struct Row {
    a: Vec<Poly>,
    c: Vec<Poly>,
}

/// Division engine for monomials and polynomials lying in a zero-dimensional
/// local ideal; see the module documentation.
#[derive(Clone, Debug)]
pub struct CornerDivider {
    space: Arc<Space>,
    gens: Vec<Poly>,
    ord: LocalOrder,
    limit: usize,
    basis: Vec<Item>,
    /// Minimal generators of the monomial ideal of monomials in the local ideal.
    corner: Vec<Monomial>,
    rows: Vec<Row>,
}

/// Outcome of reducing until every remaining term passes a test.
enum Reduced {
    /// `h = f + Σ rep_i g_i` with every term of `h` accepted.
    Done(Item),
    /// A term outside the accepted set and outside the leading ideal.
    Stuck,
}

fn reduce_until<F: Fn(&Monomial) -> bool>(
    mut h: Item,
    basis: &[Item],
    ord: &LocalOrder,
    accept: F,
    budget: &mut Budget,
) -> Result<Reduced> {
    loop {
        let Some((m, c)) = h.p.terms.iter().find(|(m, _)| !accept(m)).cloned() else {
            return Ok(Reduced::Done(h));
        };
        let mut best: Option<&Item> = None;
        for t in basis {
            if divides(t.p.lm(), &m) && best.is_none_or(|b| (t.ecart, t.p.terms.len()) < (b.ecart, b.p.terms.len())) {
                best = Some(t);
            }
        }
        let Some(t) = best else {
            return Ok(Reduced::Stuck);
        };
        budget.tick()?;
        let q = quotient(&m, t.p.lm());
        let k = c.div(t.p.lc()).expect("leading coefficient is nonzero");
        let p = h.p.sub_mul(&k, &q, &t.p, ord);
        let rep = match (&h.rep, &t.rep) {
            (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| poly_sub_mul(x, &k, &q, y)).collect()),
            _ => None,
        };
        h = Item::new(p, rep, ord);
    }
}

fn monomials_of_degree(n: usize, d: u32, out: &mut Vec<Monomial>) {
    fn rec(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(cur, i + 1, left - e, out);
        }
    }
    if n == 0 {
        return;
    }
    rec(&mut vec![0; n], 0, d, out);
}

/// Fraction-free solution of `P x = D b` by Bareiss elimination, with `D = det P`.
/// The leading principal minors of `P` must be nonzero.
fn bareiss_solve(p: &[Vec<Poly>], b: &[Poly], space: &Arc<Space>) -> Result<(Poly, Vec<Poly>)> {
    let n = p.len();
    let mut m: Vec<Vec<Poly>> = p.iter().zip(b).map(|(row, bi)| {
        let mut r = row.clone();
        r.push(bi.clone());
        r
    }).collect();
    let mut prev = Poly::one(space);
    for k in 0..n {
        if m[k][k].is_zero() {
            return Err(Error::InvalidArgument("singular closure system".into()));
        }
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Poly::zero(space);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    let mut x = vec![Poly::zero(space); n];
    for i in (0..n).rev() {
        let mut acc = &det * &m[i][n];
        for j in i + 1..n {
            acc = &acc - &(&m[i][j] * &x[j]);
        }
        x[i] = acc.exact_div(&m[i][i]).expect("Cramer numerators are exact");
    }
    Ok((det, x))
}

impl CornerDivider {
    pub fn new(gens: &[Poly], ord: &LocalOrder, limit: usize) -> Result<Self> {
        let space = match gens.first() {
            Some(g) => g.space().clone(),
            None => return Err(Error::InvalidArgument("empty generator list".into())),
        };
        if gens.iter().any(|g| g.space() != &space) {
            return Err(Error::SpaceMismatch);
        }
        if ord.weights.iter().any(|&w| w != 1) {
            return Err(Error::InvalidArgument("corner division needs a degree ordering".into()));
        }
        let n = space.nvars();
        let sb = std_basis_with(gens, ord, StdOptions { limit, track: true, truncate: true, ..StdOptions::default() })?;
        let standard = quotient_basis(&sb).ok_or(Error::NotIsolated)?;
        let reps = sb.reps.as_ref().expect("tracked representations");
        let basis: Vec<Item> = sb
            .generators
            .iter()
            .zip(reps)
            .map(|(g, r)| Item::new(Sorted::from_poly(g, ord), Some(r.clone()), ord))
            .collect();
        // Every monomial of degree >= top lies in the leading ideal, hence in the ideal.
        let top = standard.iter().map(|m| ord.deg(m)).max().map_or(0, |d| d + 1);

        let mut this = Self { space, gens: gens.to_vec(), ord: ord.clone(), limit, basis, corner: Vec::new(), rows: Vec::new() };
        let mut budget = Budget::new(limit);
        let lms = sb.leading_monomials();
        let mut corner: Vec<Monomial> = Vec::new();
        let mut d = 0u32;
        loop {
            let mut layer = Vec::new();
            monomials_of_degree(n, d, &mut layer);
            for m in layer {
                if corner.iter().any(|c| divides(c, &m)) || !lms.iter().any(|l| divides(l, &m)) {
                    continue;
                }
                let member = (d as u64) >= top || {
                    let start = this.start(&Poly::monomial(&this.space, m.clone(), ParamField::one()));
                    matches!(reduce_until(start, &this.basis, ord, |e| ord.deg(e) >= top, &mut budget)?, Reduced::Done(_))
                };
                if member {
                    corner.push(m);
                }
            }
            if d as u64 >= top {
                break;
            }
            d += 1;
        }
        corner.sort_by(|a, b| ord.cmp(b, a));
        this.corner = corner;

        let rows = this
            .corner
            .iter()
            .map(|m| {
                let f = Poly::monomial(&this.space, m.clone(), ParamField::one());
                let strict = |e: &Monomial| this.corner.iter().any(|c| divides(c, e) && c != e);
                match reduce_until(this.start(&f), &this.basis, ord, strict, &mut budget)? {
                    Reduced::Done(h) => Ok(this.row_from(h, true)),
                    Reduced::Stuck => Err(Error::InvalidArgument("monomial ideal escaped the local ideal".into())),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        this.rows = rows;
        Ok(this)
    }

    fn start(&self, f: &Poly) -> Item {
        let rep = vec![Poly::zero(&self.space); self.gens.len()];
        Item::new(Sorted::from_poly(f, &self.ord), Some(rep), &self.ord)
    }

    /// Splits a reduced item into `A` and the coefficients on the corner generators.
    /// With `strict`, every term is attributed to a proper multiple of a generator.
    fn row_from(&self, h: Item, strict: bool) -> Row {
        let a = h.rep.expect("tracked").iter().map(|q| q.neg()).collect();
        let mut c = vec![Poly::zero(&self.space); self.corner.len()];
        for (m, x) in h.p.terms {
            let j = self
                .corner
                .iter()
                .rposition(|g| divides(g, &m) && (!strict || *g != m))
                .expect("term lies in the corner ideal");
            c[j].add_term(quotient(&m, &self.corner[j]), x);
        }
        Row { a, c }
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// Minimal monomial generators of the monomials lying in the local ideal.
    pub fn corner(&self) -> &[Monomial] {
        &self.corner
    }

    /// Whether `f` lies in the local ideal.
    pub fn contains(&self, f: &Poly) -> Result<bool> {
        let mut budget = Budget::new(self.limit);
        let inside = |e: &Monomial| self.corner.iter().any(|c| divides(c, e));
        Ok(matches!(reduce_until(self.start(f), &self.basis, &self.ord, inside, &mut budget)?, Reduced::Done(_)))
    }

    /// `unit·f = Σ quotients_i·gens_i` with `unit(0) = 1`, or `None` when `f` is
    /// not in the local ideal.
    pub fn divide(&self, f: &Poly) -> Result<Option<(Poly, Vec<Poly>)>> {
        if f.space() != &self.space {
            return Err(Error::SpaceMismatch);
        }
        let mut budget = Budget::new(self.limit);
        let inside = |e: &Monomial| self.corner.iter().any(|c| divides(c, e));
        let h = match reduce_until(self.start(f), &self.basis, &self.ord, inside, &mut budget)? {
            Reduced::Done(h) => h,
            Reduced::Stuck => return Ok(None),
        };
        let row = self.row_from(h, false);
        let r = self.corner.len();
        let one = Poly::one(&self.space);
        // Solve P^T z = D c_f with P = 1 - C.
        let pt: Vec<Vec<Poly>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let c = self.rows[j].c[i].neg();
                        if i == j {
                            &c + &one
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        let (det, z) = bareiss_solve(&pt, &row.c, &self.space)?;
        let quotients = (0..self.gens.len())
            .map(|i| {
                let mut q = &det * &row.a[i];
                for (zk, rk) in z.iter().zip(&self.rows) {
                    q = &q + &(zk * &rk.a[i]);
                }
                q
            })
            .collect();
        Ok(Some((det, quotients)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    #[test]
    fn cusp_division() {
        let f = parse_expr("x^3 + y^4", &["x", "y"], &[] as &[&str]).unwrap();
        let jac = f.jacobian();
        let dv = CornerDivider::new(&jac, &LocalOrder::ds(2), 10_000).unwrap();
        for m in ["x^2", "y^3", "x^2*y + y^4", "x^3 + y"] {
            let g = parse_expr(m, &["x", "y"], &[] as &[&str]).unwrap();
            let res = dv.divide(&g).unwrap();
            if m == "x^3 + y" {
                assert!(res.is_none());
                continue;
            }
            let (u, q) = res.unwrap();
            assert!(u.constant_term().is_one());
            let lhs = &(&u * &g) - &(&(&q[0] * &jac[0]) + &(&q[1] * &jac[1]));
            assert!(lhs.is_zero());
        }
    }
}
