use std::str::FromStr;
use std::sync::Arc;

use lipmod_core::algebra::{parse_expr_in, parse_rat, Constraint, Monomial, ParamField, Poly, Rat, Space};
use lipmod_core::branches::{
    equivalence_obstruction, equivalence_obstruction_numeric, hp_invariants, restrict_on_branch, solve_branch_series,
    Branch, GaussRat, ObstructionReport, DEFAULT_ORDER,
};
use lipmod_core::classify::{modality_verdict, normal_form_lookup, TypeLabel};
use lipmod_core::local::{
    corank, divide_with, milnor_number_with, order_of_germ, quotient_basis, std_basis_with, LocalOrder, StdOptions,
    DEFAULT_LIMIT,
};
use lipmod_core::newton::{filtration, initial_part, newton_polyhedron, Weight};
use lipmod_core::triviality::{
    build_control_scheme_with, build_scheme, check_face_margins, check_quasihomogeneous_triviality, search_scheme,
    verify_table8_with, wsharp_even_scheme, wsharp_odd, FaceCheckReport, Family, TrivialityCertificate, TABLE8_ROWS,
};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::args::{CheckTrivialArgs, Global};
use crate::report::{Failure, Payload};

type Out = Result<Payload, Failure>;

const DEFAULT_VARS: [&str; 3] = ["x", "y", "z"];

/// Names in an expression; a name glued to a number (as in `2e`) is skipped with it.
fn identifiers(text: &str) -> Vec<String> {
    let b = text.as_bytes();
    let word = |c: u8| c.is_ascii_alphanumeric() || c == b'_';
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let start = i;
        if word(b[i]) {
            while i < b.len() && word(b[i]) {
                i += 1;
            }
            if !b[start].is_ascii_digit() {
                out.push(text[start..i].to_string());
            }
        } else {
            i += 1;
        }
    }
    out
}

impl Global {
    fn limit(&self) -> usize {
        self.limit.unwrap_or(DEFAULT_LIMIT)
    }

    /// Variables and parameters for a set of input texts. Explicit `--vars`/`--params`
    /// win; otherwise x, y, z are variables and every other identifier is a parameter.
    pub fn space(&self, texts: &[&str]) -> Arc<Space> {
        let mut seen: Vec<String> = Vec::new();
        for t in texts.iter().copied().chain(self.constraint.iter().map(String::as_str)) {
            for id in identifiers(t) {
                if !seen.contains(&id) {
                    seen.push(id);
                }
            }
        }
        let vars: Vec<String> = match &self.vars {
            Some(v) => v.clone(),
            None => {
                let v: Vec<String> = DEFAULT_VARS.iter().filter(|d| seen.iter().any(|s| s == *d)).map(|s| s.to_string()).collect();
                if v.is_empty() {
                    vec!["x".into(), "y".into()]
                } else {
                    v
                }
            }
        };
        let params: Vec<String> = match &self.params {
            Some(p) => p.clone(),
            None => {
                let mut p: Vec<String> = seen.into_iter().filter(|s| !vars.contains(s)).collect();
                p.sort();
                p
            }
        };
        Space::new(&vars, &params)
    }

    fn constraints(&self, space: &Arc<Space>) -> Result<Vec<Constraint>, Failure> {
        Ok(self.constraint.iter().map(|c| Constraint::parse(c, space)).collect::<Result<_, _>>()?)
    }
}

fn space_json(space: &Space) -> Value {
    json!({ "vars": space.vars, "params": space.params })
}

fn inputs_with(space: &Space, extra: Value) -> Value {
    let mut v = space_json(space);
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

fn rat(r: &Rat) -> Value {
    json!(r.to_string())
}

fn weight_json(w: &Weight) -> Value {
    json!(w.to_text())
}

fn mono_list(p: &Poly, ms: &[Monomial]) -> Value {
    json!(ms.iter().map(|m| p.monomial_string(m)).collect::<Vec<_>>())
}

fn single(g: &Global, expr: &str) -> Result<(Arc<Space>, Poly, Vec<Constraint>), Failure> {
    let space = g.space(&[expr]);
    let f = parse_expr_in(expr, &space)?;
    let cons = g.constraints(&space)?;
    Ok((space, f, cons))
}

fn constraint_texts(cons: &[Constraint]) -> Value {
    json!(cons.iter().map(|c| c.text.clone()).collect::<Vec<_>>())
}

pub fn milnor(g: &Global, expr: &str) -> Out {
    let (space, f, cons) = single(g, expr)?;
    let mu = milnor_number_with(&f, &cons, g.limit())?;
    let inputs = inputs_with(&space, json!({ "f": f.to_string(), "constraints": constraint_texts(&cons) }));
    Ok(Payload::new(inputs, json!({ "mu": mu })))
}

pub fn corank_cmd(g: &Global, expr: &str) -> Out {
    let (space, f, _) = single(g, expr)?;
    let c = corank(&f)?;
    Ok(Payload::new(inputs_with(&space, json!({ "f": f.to_string() })), json!({ "corank": c })))
}

pub fn order(g: &Global, expr: &str) -> Out {
    let (space, f, _) = single(g, expr)?;
    let o = order_of_germ(&f)?;
    Ok(Payload::new(inputs_with(&space, json!({ "f": f.to_string() })), json!({ "order": o })))
}

pub fn newton(g: &Global, expr: &str) -> Out {
    let (space, f, _) = single(g, expr)?;
    let d = newton_polyhedron(&f.support())?;
    let facets: Vec<Value> = d
        .facets
        .iter()
        .map(|fc| {
            json!({
                "weight": weight_json(&fc.weight),
                "degree": rat(&fc.d),
                "endpoints": [fc.endpoints.0, fc.endpoints.1],
            })
        })
        .collect();
    let result = json!({ "vertices": d.vertices, "facets": facets, "convenient": d.convenient });
    Ok(Payload::new(inputs_with(&space, json!({ "f": f.to_string() })), result))
}

pub fn fil(g: &Global, expr: &str, weight: &str) -> Out {
    let (space, f, _) = single(g, expr)?;
    let w = Weight::parse(weight)?;
    let v = filtration(&f, &w)?;
    let inputs = inputs_with(&space, json!({ "f": f.to_string(), "weight": weight_json(&w) }));
    Ok(Payload::new(inputs, json!({ "fil": rat(&v) })))
}

pub fn initial(g: &Global, expr: &str, weight: &str) -> Out {
    let (space, f, _) = single(g, expr)?;
    let w = Weight::parse(weight)?;
    let init = initial_part(&f, &w)?;
    let inputs = inputs_with(&space, json!({ "f": f.to_string(), "weight": weight_json(&w) }));
    Ok(Payload::new(inputs, json!({ "initial": init.to_string() })))
}

pub fn divide(g: &Global, dividend: &str, jacobian_of: Option<&str>, by: &[String]) -> Out {
    let mut texts = vec![dividend];
    texts.extend(jacobian_of);
    texts.extend(by.iter().map(String::as_str));
    let space = g.space(&texts);
    let f = parse_expr_in(dividend, &space)?;
    let gens: Vec<Poly> = match jacobian_of {
        Some(p) => parse_expr_in(p, &space)?.jacobian(),
        None if !by.is_empty() => by.iter().map(|b| parse_expr_in(b, &space)).collect::<Result<_, _>>()?,
        None => return Err(Failure::input("give --jacobian-of or at least one --by")),
    };
    if gens.iter().all(Poly::is_zero) {
        return Err(Failure::input("all divisors are zero"));
    }
    let d = divide_with(&f, &gens, &LocalOrder::ds(space.nvars()), g.limit())?;
    let inputs = inputs_with(
        &space,
        json!({
            "dividend": f.to_string(),
            "divisors": gens.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        }),
    );
    let result = json!({
        "unit": d.unit.to_string(),
        "quotients": d.quotients.iter().map(|q| q.to_string()).collect::<Vec<_>>(),
        "remainder": d.remainder.to_string(),
        "identity_holds": d.verify(&f, &gens),
        "member": d.remainder.is_zero(),
    });
    Ok(Payload::new(inputs, result))
}

fn ideal(g: &Global, gens: &[String], explicit: bool) -> Result<(Arc<Space>, Vec<Poly>), Failure> {
    let texts: Vec<&str> = gens.iter().map(String::as_str).collect();
    let space = g.space(&texts);
    let polys: Vec<Poly> = gens.iter().map(|t| parse_expr_in(t, &space)).collect::<Result<_, _>>()?;
    if explicit {
        return Ok((space, polys));
    }
    if polys.len() != 1 {
        return Err(Failure::input("expected one polynomial; pass --ideal to give generators"));
    }
    let jac: Vec<Poly> = polys[0].jacobian().into_iter().filter(|p| !p.is_zero()).collect();
    if jac.is_empty() {
        return Err(Failure::input("Jacobian ideal is zero"));
    }
    Ok((space, jac))
}

pub fn std_basis(g: &Global, gens: &[String], explicit: bool) -> Out {
    let (space, polys) = ideal(g, gens, explicit)?;
    let opts = StdOptions { limit: g.limit(), ..StdOptions::default() };
    let sb = std_basis_with(&polys, &LocalOrder::ds(space.nvars()), opts)?;
    let inputs = inputs_with(&space, json!({ "generators": polys.iter().map(|p| p.to_string()).collect::<Vec<_>>() }));
    let result = json!({
        "basis": sb.generators.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "leading_monomials": mono_list(&polys[0], &sb.leading_monomials()),
    });
    Ok(Payload::new(inputs, result))
}

pub fn quotient(g: &Global, gens: &[String], explicit: bool) -> Out {
    let (space, polys) = ideal(g, gens, explicit)?;
    let opts = StdOptions { limit: g.limit(), truncate: true, ..StdOptions::default() };
    let sb = std_basis_with(&polys, &LocalOrder::ds(space.nvars()), opts)?;
    let basis = quotient_basis(&sb).ok_or(lipmod_core::Error::NotIsolated)?;
    let inputs = inputs_with(&space, json!({ "generators": polys.iter().map(|p| p.to_string()).collect::<Vec<_>>() }));
    Ok(Payload::new(inputs, json!({ "basis": mono_list(&polys[0], &basis), "dim": basis.len() })))
}

fn family_json(fam: &Family) -> Value {
    let space = fam.total.space();
    json!({
        "total": fam.total.to_string(),
        "param": fam.param,
        "constraints": constraint_texts(&fam.constraints),
        "vars": space.vars,
        "params": space.params,
    })
}

pub fn certificate_json(c: &TrivialityCertificate) -> Value {
    json!({
        "family": family_json(&c.family),
        "a": c.a,
        "b": c.b,
        "weight": weight_json(&c.weight),
        "alpha1": c.alpha1.to_string(),
        "beta1": c.beta1.to_string(),
        "alpha2": c.alpha2.to_string(),
        "beta2": c.beta2.to_string(),
        "u1": c.u1.to_string(),
        "u2": c.u2.to_string(),
        "min_fil": rat(&c.min_fil),
        "fil_direction": rat(&c.fil_direction),
        "margin": rat(&c.margin),
        "passes": c.passes(),
    })
}

fn faces_json(r: &FaceCheckReport) -> Value {
    let faces: Vec<Value> = r
        .faces
        .iter()
        .map(|f| {
            json!({
                "weight": weight_json(&f.facet.weight),
                "degree": rat(&f.facet.d),
                "w_star": rat(&f.w_star),
                "fil_direction": rat(&f.fil_direction),
                "fil_h": rat(&f.fil_h),
                "fil_p": f.fil_p.iter().map(rat).collect::<Vec<_>>(),
                "margins": f.margins.iter().map(rat).collect::<Vec<_>>(),
                "min_margin": rat(&f.min_margin()),
            })
        })
        .collect();
    json!({ "faces": faces, "control": r.control, "verdict": r.verdict })
}

fn parse_monomial(text: &str, space: &Arc<Space>) -> Result<Monomial, Failure> {
    let p = parse_expr_in(text, space)?;
    let terms: Vec<_> = p.terms().collect();
    match terms.as_slice() {
        [(m, c)] if c.is_one() => Ok((*m).clone()),
        _ => Err(Failure::input(format!("`{text}` is not a monic monomial"))),
    }
}

pub fn check_trivial(g: &Global, a: &CheckTrivialArgs) -> Out {
    let limit = g.limit();
    if let Some(qh) = &a.quasi {
        let theta = a.theta.as_deref().ok_or_else(|| Failure::input("--quasi needs --theta"))?;
        let space = g.space(&[qh, theta]);
        let base = parse_expr_in(qh, &space)?;
        let th = parse_expr_in(theta, &space)?;
        let r = check_quasihomogeneous_triviality(&base, &th)?;
        let inputs = inputs_with(&space, json!({ "mode": "quasihomogeneous", "g": base.to_string(), "theta": th.to_string() }));
        let result = json!({
            "weight": weight_json(&r.weight),
            "d": rat(&r.d),
            "fil_theta": rat(&r.fil_theta),
            "max_diff": rat(&r.max_diff),
            "margin": rat(&r.margin),
            "holds": r.holds,
        });
        return Ok(Payload::new(inputs, result).holds(r.holds));
    }
    if let Some(kind) = &a.wsharp {
        let (lo, hi) = g.q_range.ok_or_else(|| Failure::input("--wsharp needs --q-range a..b"))?;
        let mut rows = Vec::new();
        let mut all = true;
        for q in lo..=hi {
            if kind == "odd" {
                let cert = build_control_scheme_with(&wsharp_odd(q)?, q + 4, q + 7, limit)?;
                all &= cert.passes();
                rows.push(json!({ "q": q, "certificate": certificate_json(&cert) }));
            } else {
                let (fam, sch) = wsharp_even_scheme(q)?;
                let r = check_face_margins(&fam, &sch.decomposition(), &sch.h(), a.allow_inconclusive)?;
                all &= r.verdict;
                rows.push(json!({ "q": q, "family": family_json(&fam), "h": sch.h().to_string(), "check": faces_json(&r) }));
            }
        }
        let inputs = json!({ "mode": "wsharp", "series": kind, "q_range": [lo, hi] });
        return Ok(Payload::new(inputs, json!({ "rows": rows, "holds": all })).holds(all));
    }

    let text = a.family.as_deref().ok_or_else(|| Failure::input("give --family, --quasi or --wsharp"))?;
    let mut texts = vec![text];
    if let Some(c) = &a.control {
        texts.extend(c.iter().map(String::as_str));
    }
    let space = g.space(&texts);
    let total = parse_expr_in(text, &space)?;
    let fam = Family::new(&total, &a.param, g.constraints(&space)?)?;
    let modes = [a.scheme.is_some(), a.search.is_some(), a.control.is_some()];
    if modes.iter().filter(|m| **m).count() != 1 {
        return Err(Failure::input("give exactly one of --scheme, --search, --control"));
    }
    let base_inputs = |mode: &str| inputs_with(&space, json!({ "mode": mode, "family": family_json(&fam) }));

    if let Some((sa, sb)) = a.scheme {
        let cert = build_control_scheme_with(&fam, sa, sb, limit)?;
        let verified = cert.verify()?;
        let holds = verified && cert.passes();
        let result = json!({ "certificate": certificate_json(&cert), "verified": verified, "margin": rat(&cert.margin), "passes": cert.passes() });
        return Ok(Payload::new(base_inputs("scheme"), result).holds(holds));
    }
    if let Some(max_b) = a.search {
        let found = search_scheme(&fam, max_b, limit)?;
        let result = match &found {
            Some(cert) => json!({ "found": true, "certificate": certificate_json(cert), "margin": rat(&cert.margin), "a": cert.a, "b": cert.b }),
            None => json!({ "found": false, "max_b": max_b }),
        };
        return Ok(Payload::new(base_inputs("search"), result).holds(found.is_some()));
    }
    let monos: Vec<Monomial> = a
        .control
        .as_ref()
        .expect("one mode is set")
        .iter()
        .map(|m| parse_monomial(m, &space))
        .collect::<Result<_, _>>()?;
    let sch = build_scheme(&fam, &monos, limit)?;
    let h = sch.h();
    let p = sch.decomposition();
    let r = check_face_margins(&fam, &p, &h, a.allow_inconclusive)?;
    let result = json!({
        "h": h.to_string(),
        "p": p.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "check": faces_json(&r),
    });
    Ok(Payload::new(base_inputs("control"), result).holds(r.verdict))
}

pub fn verify_table8(g: &Global, labels: &[String], max_b: u32) -> Out {
    let labels: Vec<String> = if labels.is_empty() { TABLE8_ROWS.iter().map(|s| s.to_string()).collect() } else { labels.to_vec() };
    let mut rows = Vec::new();
    let mut all = true;
    for l in &labels {
        let r = verify_table8_with(l, max_b, g.limit())?;
        all &= r.consistent();
        let search = match &r.search {
            None => Value::Null,
            Some(None) => json!({ "found": false, "max_b": max_b }),
            Some(Some(c)) => json!({ "found": true, "a": c.a, "b": c.b, "margin": rat(&c.margin) }),
        };
        let c = &r.certificate;
        rows.push(json!({
            "label": r.label,
            "a": c.a,
            "b": c.b,
            "margin": rat(&c.margin),
            "min_fil": rat(&c.min_fil),
            "claimed_min_fil": rat(&r.claimed_min_fil),
            "fil_direction": rat(&c.fil_direction),
            "claimed_fil_direction": rat(&r.claimed_fil_direction),
            "missing": r.missing.iter().map(|(k, m)| json!([k, m])).collect::<Vec<_>>(),
            "discrepancies": r.discrepancies,
            "consistent": r.consistent(),
            "search": search,
        }));
    }
    Ok(Payload::new(json!({ "labels": labels, "max_b": max_b }), json!({ "rows": rows, "consistent": all })).holds(all))
}

pub fn hp(g: &Global, b: &str, c: &str) -> Out {
    let mut names: Vec<String> = Vec::new();
    for t in [b, c] {
        for id in identifiers(t) {
            if !names.contains(&id) {
                names.push(id);
            }
        }
    }
    names.sort();
    let names = g.params.clone().unwrap_or(names);
    let space = Space::new(&[] as &[&str], &names);
    let bv = parse_expr_in(b, &space)?.constant_term();
    let cv = parse_expr_in(c, &space)?.constant_term();
    let n = g.truncation.unwrap_or(DEFAULT_ORDER);
    let inv = hp_invariants(&bv, &cv)?;
    let show = |x: &ParamField| x.to_string_with(&names);
    let mut branches = Vec::new();
    for (i, br) in [(1, Branch::One), (2, Branch::Two)] {
        let x = solve_branch_series(&bv, &cv, br, n)?;
        let r = restrict_on_branch(&bv, &cv, br, n)?;
        branches.push(json!({
            "branch": i,
            "x": x.coeffs().iter().map(show).collect::<Vec<_>>(),
            "restriction": r.coeffs().iter().map(show).collect::<Vec<_>>(),
        }));
    }
    let inputs = json!({ "b": show(&bv), "c": show(&cv), "params": names, "truncation": n });
    let result = json!({
        "invariant_a": show(&inv.a),
        "invariant_b": show(&inv.b),
        "provenance": inv.provenance,
        "branches": branches,
    });
    Ok(Payload::new(inputs, result))
}

/// Splits `re+imi` style text into real and imaginary parts.
fn split_complex(s: &str) -> (String, String) {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = s.strip_suffix('i') else {
        return (s, "0".into());
    };
    let bytes = body.as_bytes();
    let cut = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match cut {
        Some(k) => (body[..k].to_string(), body[k..].to_string()),
        None => ("0".to_string(), body.to_string()),
    };
    let im = match im.as_str() {
        "" | "+" => "1".to_string(),
        "-" => "-1".to_string(),
        _ => im,
    };
    (re, im)
}

fn gauss(s: &str) -> Result<GaussRat, Failure> {
    let (re, im) = split_complex(s);
    let p = |t: &str| parse_rat(t.trim_start_matches('+')).ok_or_else(|| Failure::input(format!("bad Gaussian rational `{s}`")));
    Ok(GaussRat::new(p(&re)?, p(&im)?))
}

fn float(s: &str) -> Result<Complex64, Failure> {
    let (re, im) = split_complex(s);
    let p = |t: &str| -> Result<f64, Failure> {
        if let Some(r) = parse_rat(t.trim_start_matches('+')) {
            let (n, d) = (r.numer().to_string(), r.denom().to_string());
            return Ok(n.parse::<f64>().unwrap_or(f64::NAN) / d.parse::<f64>().unwrap_or(f64::NAN));
        }
        t.parse::<f64>().map_err(|_| Failure::input(format!("bad complex number `{s}`")))
    };
    Ok(Complex64::new(p(&re)?, p(&im)?))
}

pub fn obstruction(pair: &str) -> Out {
    let parts: Vec<&str> = pair.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Failure::input("--pair expects b1,c1,b2,c2"));
    }
    let numeric = parts.iter().any(|p| p.contains('.'));
    let report: ObstructionReport = if numeric {
        let v: Vec<Complex64> = parts.iter().map(|p| float(p)).collect::<Result<_, _>>()?;
        equivalence_obstruction_numeric(v[0], v[1], v[2], v[3])?
    } else {
        let v: Vec<GaussRat> = parts.iter().map(|p| gauss(p)).collect::<Result<_, _>>()?;
        equivalence_obstruction(&v[0], &v[1], &v[2], &v[3])?
    };
    let inputs = json!({ "b1": parts[0], "c1": parts[1], "b2": parts[2], "c2": parts[3] });
    let result = json!({
        "verdict": format!("{:?}", report.verdict),
        "cube_relation": report.cube_relation,
        "product_relation": report.product_relation,
        "numeric": report.numeric,
    });
    Ok(Payload::new(inputs, result))
}

pub fn classify(g: &Global, expr: &str) -> Out {
    let (space, f, cons) = single(g, expr)?;
    let v = modality_verdict(&f, &cons)?;
    let trace: Vec<Value> = v
        .trace
        .iter()
        .map(|t| json!({ "criterion": t.criterion, "citation": t.citation, "data": t.data }))
        .collect();
    let inputs = inputs_with(&space, json!({ "f": f.to_string(), "constraints": constraint_texts(&cons) }));
    let result = json!({
        "modality": v.value.to_string(),
        "label": v.label.map(|l| l.to_string()),
        "mu": v.mu,
    });
    Ok(Payload::new(inputs, result).trace(trace))
}

pub fn lookup(label: &str) -> Out {
    let l = TypeLabel::from_str(label)?;
    let e = normal_form_lookup(&l)?;
    let result = json!({
        "label": e.label.to_string(),
        "source": e.source.name(),
        "row": e.row,
        "indices": e.indices.iter().map(|(k, v)| json!([k, v])).collect::<Vec<_>>(),
        "normal_form": e.normal_form.to_string(),
        "vars": e.normal_form.space().vars,
        "params": e.normal_form.space().params,
        "restrictions": constraint_texts(&e.restrictions),
        "mu": e.mu,
        "smod": e.smod,
        "lmod": e.lmod.to_string(),
    });
    Ok(Payload::new(json!({ "label": label }), result))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, Failure> {
    v.get(key).ok_or_else(|| Failure::input(format!("certificate lacks `{key}`")))
}

fn text_field<'a>(v: &'a Value, key: &str) -> Result<&'a str, Failure> {
    field(v, key)?.as_str().ok_or_else(|| Failure::input(format!("`{key}` is not a string")))
}

fn strings(v: &Value, key: &str) -> Result<Vec<String>, Failure> {
    field(v, key)?
        .as_array()
        .and_then(|a| a.iter().map(|x| x.as_str().map(String::from)).collect())
        .ok_or_else(|| Failure::input(format!("`{key}` is not a list of strings")))
}

fn rat_field(v: &Value, key: &str) -> Result<Rat, Failure> {
    let t = text_field(v, key)?;
    parse_rat(t).ok_or_else(|| Failure::input(format!("`{key}` is not a rational")))
}

fn exponent(v: &Value, key: &str) -> Result<u32, Failure> {
    field(v, key)?.as_u64().and_then(|n| u32::try_from(n).ok()).ok_or_else(|| Failure::input(format!("`{key}` is not an exponent")))
}

/// Rebuilds a two-exponent certificate from its JSON form.
pub fn certificate_from_json(v: &Value) -> Result<TrivialityCertificate, Failure> {
    let fj = field(v, "family")?;
    let space = Space::new(&strings(fj, "vars")?, &strings(fj, "params")?);
    let total = parse_expr_in(text_field(fj, "total")?, &space)?;
    let cons = strings(fj, "constraints")?.iter().map(|c| Constraint::parse(c, &space)).collect::<Result<_, _>>()?;
    let family = Family::new(&total, text_field(fj, "param")?, cons)?;
    let poly = |k: &str| -> Result<Poly, Failure> { Ok(parse_expr_in(text_field(v, k)?, &space)?) };
    Ok(TrivialityCertificate {
        a: exponent(v, "a")?,
        b: exponent(v, "b")?,
        weight: Weight::parse(text_field(v, "weight")?)?,
        alpha1: poly("alpha1")?,
        beta1: poly("beta1")?,
        alpha2: poly("alpha2")?,
        beta2: poly("beta2")?,
        u1: poly("u1")?,
        u2: poly("u2")?,
        min_fil: rat_field(v, "min_fil")?,
        fil_direction: rat_field(v, "fil_direction")?,
        margin: rat_field(v, "margin")?,
        family,
    })
}

/// Accepts a full `check-trivial` report or a bare certificate object.
pub fn verify_certificate(path: &std::path::Path) -> Out {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let cert_json = v.pointer("/result/certificate").unwrap_or(&v);
    let cert = certificate_from_json(cert_json)?;
    let verified = cert.verify()?;
    let recorded = cert_json.get("passes").and_then(Value::as_bool);
    let reproduced = recorded.is_none_or(|p| p == cert.passes());
    let result = json!({
        "verified": verified,
        "passes": cert.passes(),
        "margin": rat(&cert.margin),
        "verdict_reproduced": reproduced,
    });
    Ok(Payload::new(json!({ "file": path.display().to_string() }), result).holds(verified && reproduced))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifier_scan() {
        assert_eq!(identifiers("x^3 + s*x2*y^4 - 2*t"), vec!["x", "s", "x2", "y", "t"]);
        assert_eq!(identifiers("3x"), Vec::<String>::new());
    }

    #[test]
    fn space_inference() {
        let g = Global { constraint: vec!["s^2-4".into()], ..Global::default() };
        let sp = g.space(&["x^4 + s*x^2*y^3 + t*x^2*y^4 + y^6"]);
        assert_eq!(sp.vars, vec!["x", "y"]);
        assert_eq!(sp.params, vec!["s", "t"]);
        let g = Global { vars: Some(vec!["u".into()]), ..Global::default() };
        assert_eq!(g.space(&["u^3 + a*u^2"]).params, vec!["a"]);
    }

    #[test]
    fn complex_splitting() {
        assert_eq!(split_complex("1/2+3/4i"), ("1/2".into(), "+3/4".into()));
        assert_eq!(split_complex("-i"), ("0".into(), "-1".into()));
        assert_eq!(split_complex("-5"), ("-5".into(), "0".into()));
        assert_eq!(split_complex("1.5e-3-2i"), ("1.5e-3".into(), "-2".into()));
        assert!(gauss("1/0").is_err());
        assert!(gauss("abc").is_err());
        assert_eq!(float("1/4").unwrap(), Complex64::new(0.25, 0.0));
    }

    #[test]
    fn monomial_arguments() {
        let sp = Space::new(&["x", "y"], &[] as &[&str]);
        assert_eq!(parse_monomial("x^2*y", &sp).unwrap(), vec![2, 1]);
        assert!(parse_monomial("2*x", &sp).is_err());
        assert!(parse_monomial("x+y", &sp).is_err());
    }
}
