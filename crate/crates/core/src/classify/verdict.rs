use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::label::TypeLabel;
use super::screen::j30_weight;
use super::table::{template_rows, Lmod, NormalFormEntry, Source};
use crate::algebra::{int, Constraint, Monomial, ParamField, ParamPoly, Poly, Rat, Space};
use crate::error::Result;
use crate::local::{check_germ, milnor_number};
use crate::newton::filtration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Modality {
    Zero,
    One,
    AtLeast2,
    Unknown,
}

impl fmt::Display for Modality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Modality::Zero => "0",
            Modality::One => "1",
            Modality::AtLeast2 => "AtLeast2",
            Modality::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub criterion: String,
    pub citation: String,
    pub data: String,
}

fn entry(criterion: &str, citation: &str, data: impl Into<String>) -> TraceEntry {
    TraceEntry { criterion: criterion.to_string(), citation: citation.to_string(), data: data.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModalityVerdict {
    pub value: Modality,
    pub trace: Vec<TraceEntry>,
    /// Label of the matched template, when a table rule fired.
    pub label: Option<TypeLabel>,
    pub mu: usize,
}

/// Criterion names used in traces.
pub mod rules {
    pub const MILNOR: &str = "milnor";
    pub const SPLITTING: &str = "splitting";
    pub const SIMPLE: &str = "simple-table";
    pub const UNIMODAL: &str = "unimodal-table";
    pub const FILTRATION: &str = "filtration-3-1";
    pub const ZERO_SIX_JET: &str = "zero-6-jet";
    pub const J30: &str = "j30-form";
    pub const NONE: &str = "no-rule";
}

/// A template matched by `f`, with the parameter values it needs.
#[derive(Clone, Debug, PartialEq)]
pub struct TemplateMatch {
    pub entry: NormalFormEntry,
    /// `x_i ↦ λ_i x_{σ(i)}` takes the template to `f`.
    pub permutation: Vec<usize>,
    pub scaling: Vec<Rat>,
    /// Template parameter values, in the parameter field of `f`.
    pub params: Vec<(String, ParamField)>,
    /// Restrictions that are not constant at the matched values, hence hold only generically.
    pub generic_restrictions: Vec<String>,
}

/// Variables that only occur in a single term `c·v^2`, which the splitting lemma removes.
pub fn split_quadratic_tail(f: &Poly) -> (Option<Poly>, Vec<String>) {
    let n = f.nvars();
    let tail: Vec<usize> = (0..n)
        .filter(|&v| {
            let mut occurrences = f.terms().filter(|(e, _)| e[v] > 0);
            let first = occurrences.next();
            occurrences.next().is_none()
                && first.is_some_and(|(e, _)| e[v] == 2 && e.iter().enumerate().all(|(i, &k)| i == v || k == 0))
        })
        .collect();
    let names = tail.iter().map(|&v| f.space().vars[v].clone()).collect();
    if tail.is_empty() {
        return (Some(f.clone()), names);
    }
    let keep: Vec<usize> = (0..n).filter(|v| !tail.contains(v)).collect();
    if keep.is_empty() {
        return (None, names);
    }
    let space = f.space();
    let vars: Vec<&String> = keep.iter().map(|&v| &space.vars[v]).collect();
    let reduced = Space::new(&vars, &space.params);
    let g = Poly::from_terms(
        &reduced,
        f.terms()
            .filter(|(e, _)| tail.iter().all(|&v| e[v] == 0))
            .map(|(e, c)| (keep.iter().map(|&v| e[v]).collect(), c.clone())),
    );
    (Some(g), names)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// `adj(M)[i][j]`.
fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m
                        .iter()
                        .enumerate()
                        .filter(|&(r, _)| r != j)
                        .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != i).map(|(_, &v)| v).collect())
                        .collect();
                    let s = if (i + j) % 2 == 0 { 1 } else { -1 };
                    s * det(&minor)
                })
                .collect()
        })
        .collect()
}

fn rat_pow(r: &Rat, e: i64) -> Rat {
    let p = num_traits::pow(r.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.abs().nth_root(k);
    (num_traits::pow(r.clone(), k as usize) == n.abs()).then_some(if n.is_negative() { -r } else { r })
}

/// Rational `k`-th roots of `r`.
fn rat_roots(r: &Rat, k: u32) -> Vec<Rat> {
    if r.is_negative() && k % 2 == 0 {
        return Vec::new();
    }
    let (Some(n), Some(d)) = (int_root(r.numer(), k), int_root(r.denom(), k)) else {
        return Vec::new();
    };
    let root = Rat::new(n, d);
    if k % 2 == 0 {
        vec![root.clone(), -root]
    } else {
        vec![root]
    }
}

fn monomial_value(lambda: &[Rat], m: &[u32]) -> Rat {
    lambda.iter().zip(m).fold(Rat::one(), |acc, (l, &e)| acc * num_traits::pow(l.clone(), e as usize))
}

/// Rational `λ` with `λ^m = r_m` for every pair, if one exists.
fn solve_scaling(n: usize, eqs: &[(Monomial, Rat)]) -> Option<Vec<Rat>> {
    // Pick a maximal independent set of exponent vectors, completed by unit vectors.
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    let rank_with = |rows: &[Vec<i64>], v: &[i64]| {
        let mut all: Vec<Vec<i64>> = rows.to_vec();
        all.push(v.to_vec());
        rank_i64(&all)
    };
    for (m, r) in eqs {
        let v: Vec<i64> = m.iter().map(|&e| e as i64).collect();
        if rank_with(&rows, &v) > rows.len() {
            rows.push(v);
            rhs.push(r.clone());
        }
    }
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        if rows.len() < n && rank_with(&rows, &v) > rows.len() {
            rows.push(v);
            rhs.push(Rat::one());
        }
    }
    let d = det(&rows);
    if d == 0 {
        return None;
    }
    let adj = adjugate(&rows);
    // λ_i^d = Π_j rhs_j^adj[i][j]
    let mut choices: Vec<Vec<Rat>> = Vec::new();
    for row in adj.iter() {
        let mut target = Rat::one();
        for (a, r) in row.iter().zip(&rhs) {
            target *= rat_pow(r, *a);
        }
        let (k, target) = if d < 0 { ((-d) as u32, target.recip()) } else { (d as u32, target) };
        let roots = rat_roots(&target, k);
        if roots.is_empty() {
            return None;
        }
        choices.push(roots);
    }
    let mut idx = vec![0usize; n];
    loop {
        let lambda: Vec<Rat> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        if eqs.iter().all(|(m, r)| monomial_value(&lambda, m) == *r) {
            return Some(lambda);
        }
        let mut i = 0;
        while i < n && idx[i] + 1 == choices[i].len() {
            idx[i] = 0;
            i += 1;
        }
        if i == n {
            return None;
        }
        idx[i] += 1;
    }
}

fn rank_i64(m: &[Vec<i64>]) -> usize {
    let rows: Vec<Vec<Rat>> = m.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
    let mut rows = rows;
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = &rows[i][c] / &rows[r][c];
                for j in c..cols {
                    let v = &rows[i][j] - &k * &rows[r][j];
                    rows[i][j] = v;
                }
            }
        }
        r += 1;
    }
    r
}

/// Evaluates a template restriction at parameter values in another parameter field.
fn eval_param_poly(p: &ParamPoly, values: &[ParamField]) -> ParamField {
    let mut acc = ParamField::zero();
    for (e, c) in p.terms() {
        let mut t = ParamField::from_rat(c.clone());
        for (j, &k) in e.iter().enumerate() {
            if k > 0 {
                t = t.mul(&values[j].pow(k));
            }
        }
        acc = acc.add(&t);
    }
    acc
}

/// Coefficient shape of a template term: constant, or a rational multiple of one parameter.
enum Slot {
    Fixed(Rat),
    Param(usize, Rat),
}

fn slot(c: &ParamField) -> Option<Slot> {
    if let Some(r) = c.as_rat() {
        return Some(Slot::Fixed(r));
    }
    let p = c.as_poly()?;
    if p.len() != 1 {
        return None;
    }
    let (e, r) = p.leading()?;
    let nz: Vec<usize> = (0..e.len()).filter(|&j| e[j] > 0).collect();
    (nz.len() == 1 && e[nz[0]] == 1).then(|| Slot::Param(nz[0], r.clone()))
}

/// Syntactic match of `f` against one instantiated template, up to permuting and rescaling
/// the variables and renaming the parameters.
pub fn match_template(f: &Poly, t: &NormalFormEntry) -> Option<TemplateMatch> {
    let n = f.nvars();
    let tmpl = &t.normal_form;
    if tmpl.nvars() != n {
        return None;
    }
    let mut slots: Vec<(Monomial, Slot)> = Vec::new();
    let mut used = vec![false; tmpl.space().params.len()];
    for (m, c) in tmpl.terms() {
        let s = slot(c)?;
        if let Slot::Param(j, _) = s {
            if core::mem::replace(&mut used[j], true) {
                return None;
            }
        }
        slots.push((m.clone(), s));
    }
    for perm in permutations(n) {
        // Exponents of f in template variable order: template variable i is f's variable perm[i].
        let g: Vec<(Monomial, &ParamField)> =
            f.terms().map(|(e, c)| ((0..n).map(|i| e[perm[i]]).collect(), c)).collect();
        if g.iter().any(|(m, _)| !slots.iter().any(|(s, _)| s == m)) {
            continue;
        }
        let coeff = |m: &Monomial| g.iter().find(|(e, _)| e == m).map(|(_, c)| *c);
        let mut eqs = Vec::new();
        let mut ok = true;
        for (m, s) in &slots {
            if let Slot::Fixed(r) = s {
                match coeff(m).and_then(|c| c.as_rat()) {
                    Some(c) => eqs.push((m.clone(), c / r)),
                    None => ok = false,
                }
            }
        }
        if !ok {
            continue;
        }
        let Some(lambda) = solve_scaling(n, &eqs) else { continue };
        let nparams = tmpl.space().params.len();
        let mut values = vec![ParamField::zero(); nparams];
        for (m, s) in &slots {
            if let (Slot::Param(j, r), Some(c)) = (s, coeff(m)) {
                let k = r * monomial_value(&lambda, m);
                values[*j] = c.scale(&k.recip());
            }
        }
        let mut generic = Vec::new();
        let mut fine = true;
        for cons in &t.restrictions {
            let v = eval_param_poly(&cons.nonvanishing, &values);
            if v.is_zero() {
                fine = false;
                break;
            }
            if !v.is_constant() {
                generic.push(cons.text.clone());
            }
        }
        if !fine {
            continue;
        }
        let params = tmpl.space().params.iter().cloned().zip(values).collect();
        return Some(TemplateMatch {
            entry: t.clone(),
            permutation: perm,
            scaling: lambda,
            params,
            generic_restrictions: generic,
        });
    }
    None
}

/// First template of the given sources matched by `f`, scanning instances up to `max_degree`.
pub fn find_match(f: &Poly, sources: &[Source], max_degree: u32) -> Result<Option<TemplateMatch>> {
    for row in template_rows()?.iter().filter(|r| sources.contains(&r.source) && r.vars.len() == f.nvars()) {
        for e in row.instances(max_degree)? {
            if let Some(m) = match_template(f, &e) {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

fn describe(m: &TemplateMatch, f: &Poly) -> String {
    let names: Vec<String> = f.space().params.clone();
    let mut s = alloc::format!("{} ({}): {}", m.entry.label, m.entry.source.name(), m.entry.normal_form);
    for (p, v) in &m.params {
        s.push_str(&alloc::format!("; {} = {}", p, v.to_string_with(&names)));
    }
    if !m.generic_restrictions.is_empty() {
        s.push_str(&alloc::format!("; generic: {} != 0", m.generic_restrictions.join(", ")));
    }
    s
}

/// Cascade: simple list, unimodal list, J3,0 deformation tests, J3,0 form.
pub fn modality_verdict(f: &Poly, constraints: &[Constraint]) -> Result<ModalityVerdict> {
    check_germ(f)?;
    let mu = milnor_number(f, constraints)?;
    let mut trace = vec![entry(rules::MILNOR, "isolated singularity", alloc::format!("mu = {}", mu))];
    let (reduced, stripped) = split_quadratic_tail(f);
    if !stripped.is_empty() {
        trace.push(entry(
            rules::SPLITTING,
            "splitting lemma: quadratic tail removed",
            alloc::format!("removed {}", stripped.join(", ")),
        ));
    }
    let Some(g) = reduced else {
        trace.push(entry(rules::SIMPLE, "Lipschitz simple germs", "A1 (Morse)"));
        return Ok(ModalityVerdict { value: Modality::Zero, trace, label: Some("A1".parse()?), mu });
    };
    let bound = g.degree() + 2;
    if let Some(m) = find_match(&g, &[Source::Simple], bound)? {
        trace.push(entry(rules::SIMPLE, "Lipschitz simple germs", describe(&m, &g)));
        return Ok(ModalityVerdict { value: Modality::Zero, trace, label: Some(m.entry.label), mu });
    }
    if let Some(m) = find_match(&g, &[Source::Unimodal], bound)? {
        debug_assert_eq!(m.entry.lmod, Lmod::One);
        trace.push(entry(rules::UNIMODAL, "Lipschitz unimodal corank 2 germs", describe(&m, &g)));
        return Ok(ModalityVerdict { value: Modality::One, trace, label: Some(m.entry.label), mu });
    }
    let mut label = None;
    if g.nvars() == 2 && g.min_degree().is_some_and(|d| d >= 3) {
        let w = j30_weight();
        for (name, h) in [("(x, y)", g.clone()), ("(y, x)", swap_xy(&g))] {
            let fil = filtration(&h, &w)?;
            if fil >= int(9) {
                trace.push(entry(
                    rules::FILTRATION,
                    "fil_(3,1) >= 9 implies deforming to J3,0",
                    alloc::format!("fil_(3,1) = {} in coordinates {}", fil, name),
                ));
                break;
            }
        }
    }
    if g.min_degree().is_some_and(|d| d >= 7) {
        trace.push(entry(rules::ZERO_SIX_JET, "germs with zero 6-jet deform to J3,0", "all terms of degree >= 7"));
    }
    let j30 = template_rows()?
        .into_iter()
        .filter(|r| r.source == Source::Bimodal && r.name == "J_3,0" && r.vars.len() == g.nvars())
        .find_map(|r| r.instantiate(&[]).ok().flatten().and_then(|e| match_template(&g, &e)));
    if let Some(m) = j30 {
        trace.push(entry(
            rules::J30,
            "J3,0 germs have Lipschitz modality exactly 2 (branch invariants)",
            describe(&m, &g),
        ));
        label = Some(m.entry.label);
    }
    let value = if trace.iter().any(|t| [rules::FILTRATION, rules::ZERO_SIX_JET, rules::J30].contains(&t.criterion.as_str())) {
        Modality::AtLeast2
    } else {
        trace.push(entry(rules::NONE, "no template or deformation test applies", ""));
        Modality::Unknown
    };
    Ok(ModalityVerdict { value, trace, label, mu })
}

fn swap_xy(g: &Poly) -> Poly {
    Poly::from_terms(g.space(), g.terms().map(|(e, c)| (vec![e[1], e[0]], c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_expr;

    fn p(s: &str, params: &[&str]) -> Poly {
        parse_expr(s, &["x", "y"], params).unwrap()
    }

    #[test]
    fn scaling() {
        let eqs = vec![(vec![3, 0], int(8)), (vec![0, 4], int(81))];
        let l = solve_scaling(2, &eqs).unwrap();
        assert_eq!(monomial_value(&l, &[3, 0]), int(8));
        assert_eq!(monomial_value(&l, &[0, 4]), int(81));
        assert!(solve_scaling(2, &[(vec![3, 0], int(2))]).is_none());
        assert!(solve_scaling(2, &[(vec![0, 2], int(-1))]).is_none());
    }

    #[test]
    fn verdicts() {
        let v = modality_verdict(&p("x^3 + y^4", &[]), &[]).unwrap();
        assert_eq!(v.value, Modality::Zero);
        let v = modality_verdict(&p("x^3 + y^2", &[]), &[]).unwrap();
        assert_eq!((v.value, v.label.unwrap().to_string()), (Modality::Zero, "A2".to_string()));
        let v = modality_verdict(&p("x^3 + t*x*y^4 + y^6", &["t"]), &[]).unwrap();
        assert_eq!(v.value, Modality::One);
        let v = modality_verdict(&p("8*y^3 + x^4", &[]), &[]).unwrap();
        assert_eq!(v.label.unwrap().to_string(), "E6");
        let v = modality_verdict(&p("x^7 + y^7", &[]), &[]).unwrap();
        assert_eq!(v.value, Modality::AtLeast2);
        assert!(v.trace.iter().any(|t| t.criterion == rules::ZERO_SIX_JET));
        let v = modality_verdict(&p("x^3 + b*x^2*y^3 + y^9 + c*x*y^7", &["b", "c"]), &[]).unwrap();
        assert_eq!(v.value, Modality::AtLeast2);
        assert!(v.trace.iter().any(|t| t.criterion == rules::J30));
    }
}
