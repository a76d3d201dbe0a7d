use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::mora::{nf_mora, Budget, Item};
use super::order::LocalOrder;
use super::sorted::{divides, lcm, poly_sub_mul, quotient, Sorted};
use crate::algebra::{Monomial, ParamField, Poly, Space};
use crate::error::{Error, Result};

/// Default bound on reductions per standard-basis computation.
pub const DEFAULT_LIMIT: usize = 200_000;

#[derive(Clone, Debug)]
pub struct StdOptions {
    /// Maximal number of reduction steps before giving up with `ResourceLimit`.
    pub limit: usize,
    /// Keep the expression of every basis element in the input generators.
    pub track: bool,
    /// Skip pairs by the chain criterion.
    pub chain_criterion: bool,
    /// Once the leading monomials contain every monomial of some degree `N`, drop
    /// terms of degree above `N` during reductions. Leading monomials are unaffected.
    /// With tracking, the returned generators are recomputed exactly from their
    /// representations; without it they are only correct up to degree `N`.
    pub truncate: bool,
}

impl Default for StdOptions {
    fn default() -> Self {
        Self { limit: DEFAULT_LIMIT, track: false, chain_criterion: true, truncate: false }
    }
}

/// Local standard basis: minimal with respect to leading monomials, leading
/// coefficients equal to 1.
#[derive(Clone, Debug)]
pub struct StdBasis {
    pub generators: Vec<Poly>,
    pub order: LocalOrder,
    /// `generators[j] = sum reps[j][i] * input[i]` when tracking was requested.
    pub reps: Option<Vec<Vec<Poly>>>,
    /// Reductions spent.
    pub reductions: usize,
    /// Degree above which generator tails were dropped, when truncation was used
    /// without tracking.
    pub truncated_above: Option<u64>,
}

impl StdBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators.iter().map(|g| Sorted::from_poly(g, &self.order).lm().clone()).collect()
    }
}

/// `1 +` the largest degree of a monomial outside the ideal generated by `lms`, or
/// `None` when that ideal has infinite colength.
pub(crate) fn corner_degree(lms: &[Monomial], ord: &LocalOrder) -> Option<u64> {
    let std = standard_monomials(lms, ord.nvars())?;
    Some(std.iter().map(|m| ord.deg(m)).max().map_or(0, |d| d + 1))
}

pub fn std_basis(gens: &[Poly], ord: &LocalOrder) -> Result<StdBasis> {
    std_basis_with(gens, ord, StdOptions::default())
}

pub fn std_basis_with(gens: &[Poly], ord: &LocalOrder, opts: StdOptions) -> Result<StdBasis> {
    let space: Arc<Space> = match gens.first() {
        Some(g) => g.space().clone(),
        None => return Err(Error::InvalidArgument("empty generator list".into())),
    };
    if ord.nvars() != space.nvars() {
        return Err(Error::InvalidArgument("order and polynomial variable counts differ".into()));
    }
    let m = gens.len();
    let zero = Poly::zero(&space);
    let mut items: Vec<Item> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.space() != &space {
            return Err(Error::SpaceMismatch);
        }
        if g.is_zero() {
            continue;
        }
        let rep = opts.track.then(|| {
            let mut r = vec![zero.clone(); m];
            r[i] = Poly::one(&space);
            r
        });
        items.push(Item::new(Sorted::from_poly(g, ord), rep, ord));
    }
    let mut budget = Budget::new(opts.limit);
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..items.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    let mut done: Vec<Vec<bool>> = Vec::new();
    let mark = |done: &mut Vec<Vec<bool>>, i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        while done.len() <= b {
            done.push(Vec::new());
        }
        if done[b].len() <= a {
            done[b].resize(a + 1, false);
        }
        done[b][a] = true;
    };
    let is_done = |done: &Vec<Vec<bool>>, i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        done.get(b).and_then(|r| r.get(a)).copied().unwrap_or(false)
    };
    let mut bound: Option<u64> = None;
    let update_bound = |items: &[Item], bound: &mut Option<u64>| {
        if !opts.truncate {
            return;
        }
        let lms: Vec<Monomial> = items.iter().map(|it| it.p.lm().clone()).collect();
        if let Some(n) = corner_degree(&lms, ord) {
            if bound.is_none_or(|b| n < b) {
                *bound = Some(n);
            }
        }
    };
    update_bound(&items, &mut bound);
    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree first
        let (pos, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, (i, j))| ord.deg(&lcm(items[*i].p.lm(), items[*j].p.lm())))
            .expect("nonempty pair list");
        let (i, j) = pairs.remove(pos);
        mark(&mut done, i, j);
        let li = items[i].p.lm().clone();
        let lj = items[j].p.lm().clone();
        let l = lcm(&li, &lj);
        if li.iter().zip(&lj).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        if opts.chain_criterion
            && (0..items.len()).any(|k| {
                k != i
                    && k != j
                    && divides(items[k].p.lm(), &l)
                    && is_done(&done, i, k)
                    && is_done(&done, j, k)
            })
        {
            continue;
        }
        budget.tick()?;
        let mi = quotient(&l, &li);
        let mj = quotient(&l, &lj);
        let ci = items[i].p.lc().inv().expect("nonzero");
        let cj = items[j].p.lc().inv().expect("nonzero");
        let empty = Sorted { terms: Vec::new() };
        let a = empty.sub_mul(&ci.neg(), &mi, &items[i].p, ord);
        let sp = a.sub_mul(&cj, &mj, &items[j].p, ord);
        let rep = match (&items[i].rep, &items[j].rep) {
            (Some(ri), Some(rj)) => Some(
                ri.iter()
                    .zip(rj)
                    .map(|(x, y)| {
                        let t = poly_sub_mul(&zero, &ci.neg(), &mi, x);
                        poly_sub_mul(&t, &cj, &mj, y)
                    })
                    .collect(),
            ),
            _ => None,
        };
        let h = nf_mora(Item::new(sp, rep, ord), &items, ord, bound, &mut budget)?;
        if !h.p.is_zero() {
            let n = items.len();
            items.push(h);
            update_bound(&items, &mut bound);
            for k in 0..n {
                pairs.push((k, n));
            }
        }
    }
    // minimalize and normalize
    let mut keep = vec![true; items.len()];
    for i in 0..items.len() {
        for j in 0..items.len() {
            if i != j && keep[j] && divides(items[j].p.lm(), items[i].p.lm()) {
                let same = items[j].p.lm() == items[i].p.lm();
                if !same || j < i {
                    keep[i] = false;
                    break;
                }
            }
        }
    }
    let mut generators = Vec::new();
    let mut reps = opts.track.then(Vec::new);
    for (k, it) in items.iter().enumerate() {
        if !keep[k] {
            continue;
        }
        let c: ParamField = it.p.lc().inv().expect("nonzero");
        match (reps.as_mut(), it.rep.as_ref()) {
            (Some(rs), Some(r)) => {
                let r: Vec<Poly> = r.iter().map(|q| q.scale(&c)).collect();
                if bound.is_some() {
                    let mut g = Poly::zero(&space);
                    for (q, x) in r.iter().zip(gens) {
                        g = &g + &(q * x);
                    }
                    generators.push(g);
                } else {
                    generators.push(it.p.scale(&c).to_poly(&space));
                }
                rs.push(r);
            }
            _ => generators.push(it.p.scale(&c).to_poly(&space)),
        }
    }
    let truncated_above = if opts.track { None } else { bound };
    Ok(StdBasis { generators, order: ord.clone(), reps, reductions: budget.used, truncated_above })
}

/// Monomials outside the leading ideal, sorted in decreasing local order;
/// `None` when there are infinitely many.
pub fn quotient_basis(basis: &StdBasis) -> Option<Vec<Monomial>> {
    let mut out = standard_monomials(&basis.leading_monomials(), basis.order.nvars())?;
    out.sort_by(|a, b| basis.order.cmp(b, a));
    Some(out)
}

/// Monomials divisible by none of `lms`; `None` when there are infinitely many.
fn standard_monomials(lms: &[Monomial], n: usize) -> Option<Vec<Monomial>> {
    let mut bounds = vec![0u32; n];
    for (v, b) in bounds.iter_mut().enumerate() {
        let pure = lms
            .iter()
            .filter(|m| m.iter().enumerate().all(|(i, e)| i == v || *e == 0))
            .map(|m| m[v])
            .min()?;
        *b = pure;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        if !lms.iter().any(|l| divides(l, &cur)) {
            out.push(cur.clone());
        }
        // odometer over the box [0, bounds)
        let mut v = 0;
        loop {
            if v == n {
                return Some(out);
            }
            cur[v] += 1;
            if cur[v] < bounds[v] {
                break;
            }
            cur[v] = 0;
            v += 1;
        }
    }
}
