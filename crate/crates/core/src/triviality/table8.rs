use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::family::Family;
use super::scheme::{build_control_scheme_with, build_scheme, search_scheme, ControlScheme, TrivialityCertificate};
use crate::algebra::{parse_expr_in, Constraint, Monomial, Rat, Space};
use crate::error::{Error, Result};
use crate::local::DEFAULT_LIMIT;

struct Row {
    label: &'static str,
    family: &'static str,
    constraint: &'static str,
    /// Listed monomials of α_1, β_1, α_2, β_2.
    listed: [&'static [&'static str]; 4],
    min_fil: i64,
    fil_direction: i64,
}

const ROWS: [Row; 5] = [
    Row {
        label: "Z1,1",
        family: "x^3*y + x^2*y^3 + s*y^8 + t*y^9",
        constraint: "s",
        listed: [&["x^2*y", "x*y^4", "y^6"], &["x^2", "x*y^2"], &["x^2", "x*y^2", "y^5"], &["x*y", "y^3"]],
        min_fil: 3,
        fil_direction: 9,
    },
    Row {
        label: "Z17",
        family: "x^3*y + y^8 + s*x*y^6 + t*x*y^7",
        constraint: "s",
        listed: [&["x^3", "x*y^4", "x^2*y^2", "y^6"], &["x^2", "x*y^3", "y^5"], &["x^2", "x*y^2", "y^5"], &["x*y", "y^3"]],
        min_fil: 3,
        fil_direction: 9,
    },
    Row {
        label: "W1,1",
        family: "x^4 + x^2*y^3 + s*y^7 + t*y^8",
        constraint: "s",
        listed: [&["x^2", "y^4"], &["x*y"], &["x*y^3"], &["x^2*y", "y^4"]],
        min_fil: 3,
        fil_direction: 9,
    },
    Row {
        label: "W1,2",
        family: "x^4 + x^2*y^3 + s*y^8 + t*y^9",
        constraint: "s",
        listed: [&["x^2", "y^5"], &["x*y"], &["x*y^2"], &["x^2", "y^3"]],
        min_fil: 3,
        fil_direction: 9,
    },
    Row {
        label: "W18",
        family: "x^4 + y^7 + s*x^2*y^4 + t*x^2*y^5",
        constraint: "s",
        listed: [&["x^2", "y^4"], &["x*y^2"], &["x*y^4"], &["x^2*y", "y^4"]],
        min_fil: 4,
        fil_direction: 9,
    },
];

/// Labels accepted by [`verify_table8`].
pub const TABLE8_ROWS: [&str; 5] = ["Z1,1", "Z17", "W1,1", "W1,2", "W18"];

pub const COFACTOR_NAMES: [&str; 4] = ["alpha1", "beta1", "alpha2", "beta2"];

#[derive(Clone, Debug, PartialEq)]
pub struct Table8Report {
    pub label: String,
    pub certificate: TrivialityCertificate,
    /// Listed monomials absent from the recomputed cofactors, as `(cofactor, monomial)`.
    pub missing: Vec<(String, String)>,
    pub claimed_min_fil: Rat,
    pub claimed_fil_direction: Rat,
    pub discrepancies: Vec<String>,
    /// Outcome of the `(a, b)` search run when the row's own scheme has negative margin:
    /// `Some(Some(cert))` found, `Some(None)` exhausted.
    pub search: Option<Option<TrivialityCertificate>>,
}

impl Table8Report {
    pub fn consistent(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn family_space() -> alloc::sync::Arc<Space> {
    Space::new(&["x", "y"], &["s", "t"])
}

pub fn row_family(label: &str) -> Result<Family> {
    let row = ROWS
        .iter()
        .find(|r| r.label == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
    let space = family_space();
    let f = parse_expr_in(row.family, &space)?;
    Family::new(&f, "t", vec![Constraint::parse(row.constraint, &space)?])
}

/// Recomputes one row of the cofactor table with `(a, b) = (5, 10)`.
pub fn verify_table8(label: &str) -> Result<Table8Report> {
    verify_table8_with(label, 12, DEFAULT_LIMIT)
}

pub fn verify_table8_with(label: &str, max_b: u32, limit: usize) -> Result<Table8Report> {
    let row = ROWS
        .iter()
        .find(|r| r.label == label)
        .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
    let fam = row_family(label)?;
    let cert = build_control_scheme_with(&fam, 5, 10, limit)?;
    let space = fam.total.space().clone();
    let cofactors = [&cert.alpha1, &cert.beta1, &cert.alpha2, &cert.beta2];
    let mut missing = Vec::new();
    for (k, listed) in row.listed.iter().enumerate() {
        for m in listed.iter() {
            let mono = parse_expr_in(m, &space)?;
            let e = mono.support().pop().expect("monomial");
            if cofactors[k].coeff(&e).is_zero() {
                missing.push((COFACTOR_NAMES[k].to_string(), m.to_string()));
            }
        }
    }
    let claimed_min_fil = Rat::from_integer(row.min_fil.into());
    let claimed_fil_direction = Rat::from_integer(row.fil_direction.into());
    let mut discrepancies = Vec::new();
    for (c, m) in &missing {
        discrepancies.push(alloc::format!("listed monomial {} not in {}", m, c));
    }
    if cert.min_fil != claimed_min_fil {
        discrepancies.push(alloc::format!("min fil: table {}, computed {}", claimed_min_fil, cert.min_fil));
    }
    if cert.fil_direction != claimed_fil_direction {
        discrepancies.push(alloc::format!(
            "fil of dF/dt: table {}, computed {}",
            claimed_fil_direction,
            cert.fil_direction
        ));
    }
    if !cert.passes() {
        discrepancies.push(alloc::format!("margin at (5,10) is {}", cert.margin));
    }
    let search = if cert.passes() { None } else { Some(search_scheme(&fam, max_b, limit)?) };
    Ok(Table8Report {
        label: label.to_string(),
        certificate: cert,
        missing,
        claimed_min_fil,
        claimed_fil_direction,
        discrepancies,
        search,
    })
}

/// `W#_{1,2q-1}: (x^2+y^3)^2 + s·x·y^{4+q} + t·x·y^{5+q}`.
pub fn wsharp_odd(q: u32) -> Result<Family> {
    let space = family_space();
    let f = parse_expr_in(&alloc::format!("(x^2+y^3)^2 + s*x*y^{} + t*x*y^{}", 4 + q, 5 + q), &space)?;
    Family::new(&f, "t", vec![Constraint::parse("s", &space)?])
}

/// `W#_{1,2q}: (x^2+y^3)^2 + s·x^2·y^{3+q} + t·x^2·y^{4+q}`.
pub fn wsharp_even(q: u32) -> Result<Family> {
    let space = family_space();
    let f = parse_expr_in(&alloc::format!("(x^2+y^3)^2 + s*x^2*y^{} + t*x^2*y^{}", 3 + q, 4 + q), &space)?;
    Family::new(&f, "t", vec![Constraint::parse("s", &space)?])
}

/// Three-term control function `u_1|y|^{2q+16} + u_2|x|^2|y|^{2q+12} + u_3|x|^{2q+8}` for `W#_{1,2q}`.
pub fn wsharp_even_scheme(q: u32) -> Result<(Family, ControlScheme)> {
    let fam = wsharp_even(q)?;
    let monos: Vec<Monomial> = vec![vec![0, q + 8], vec![1, q + 6], vec![q + 4, 0]];
    let sch = build_scheme(&fam, &monos, DEFAULT_LIMIT)?;
    Ok((fam, sch))
}
