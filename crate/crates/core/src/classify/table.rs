use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::label::{split_label, Series, TypeLabel};
use crate::algebra::{parse_expr_in, Constraint, Poly, Space};
use crate::error::{Error, Result};

/// The embedded dataset, one row per normal-form template.
pub const NORMAL_FORMS: &str = include_str!("data/normal_forms.txt");

/// Dataset version, bumped whenever a row changes.
pub const DATASET_VERSION: u32 = 1;

/// Default bound on the total degree of instantiated templates.
pub const DEFAULT_DEGREE_BOUND: u32 = 14;

/// Which list a row comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    /// Corank 1 and 2 Lipschitz simple germs.
    Simple,
    /// Non-simple corank 2 germs with nonzero 3-jet.
    Jet3,
    /// Classes X and Y with k > 1.
    XY,
    /// Classes X and Y with k = 1.
    XY1,
    /// Class Z.
    Z,
    /// Class W.
    W,
    /// The eight bimodal series.
    Bimodal,
    /// The eight bimodal exceptional families.
    Exceptional,
    /// Lipschitz unimodal corank 2 germs with nonzero 4-jet.
    Unimodal,
}

impl Source {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "simple" => Source::Simple,
            "jet3" => Source::Jet3,
            "xy" => Source::XY,
            "xy1" => Source::XY1,
            "z" => Source::Z,
            "w" => Source::W,
            "bimodal" => Source::Bimodal,
            "exceptional" => Source::Exceptional,
            "unimodal" => Source::Unimodal,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Source::Simple => "simple",
            Source::Jet3 => "jet3",
            Source::XY => "xy",
            Source::XY1 => "xy1",
            Source::Z => "z",
            Source::W => "w",
            Source::Bimodal => "bimodal",
            Source::Exceptional => "exceptional",
            Source::Unimodal => "unimodal",
        }
    }
}

/// Lipschitz modality recorded for a row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Lmod {
    Zero,
    One,
    Two,
    /// Known only to be at least 2.
    AtLeastTwo,
}

impl Lmod {
    fn parse(s: &str) -> Option<Self> {
        Some(match s.trim() {
            "0" => Lmod::Zero,
            "1" => Lmod::One,
            "2" => Lmod::Two,
            ">=2" => Lmod::AtLeastTwo,
            _ => return None,
        })
    }

    /// Smallest value compatible with the record.
    pub fn lower_bound(self) -> u32 {
        match self {
            Lmod::Zero => 0,
            Lmod::One => 1,
            Lmod::Two | Lmod::AtLeastTwo => 2,
        }
    }
}

impl fmt::Display for Lmod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lmod::Zero => "0",
            Lmod::One => "1",
            Lmod::Two => "2",
            Lmod::AtLeastTwo => ">=2",
        })
    }
}

type Env = BTreeMap<String, i64>;

fn bad_row(line: usize, what: &str) -> Error {
    Error::InvalidArgument(alloc::format!("normal form dataset line {}: {}", line, what))
}

/// Integer expression over the index names: `+ - *`, parentheses, literals.
fn eval(expr: &str, env: &Env) -> Option<i64> {
    struct P<'a> {
        s: &'a [u8],
        i: usize,
        env: &'a Env,
    }
    impl P<'_> {
        fn ws(&mut self) {
            while self.s.get(self.i).is_some_and(|c| c.is_ascii_whitespace()) {
                self.i += 1;
            }
        }
        fn sum(&mut self) -> Option<i64> {
            let mut v = self.prod()?;
            loop {
                self.ws();
                match self.s.get(self.i) {
                    Some(b'+') => {
                        self.i += 1;
                        v = v.checked_add(self.prod()?)?;
                    }
                    Some(b'-') => {
                        self.i += 1;
                        v = v.checked_sub(self.prod()?)?;
                    }
                    _ => return Some(v),
                }
            }
        }
        fn prod(&mut self) -> Option<i64> {
            let mut v = self.atom()?;
            loop {
                self.ws();
                if self.s.get(self.i) == Some(&b'*') {
                    self.i += 1;
                    v = v.checked_mul(self.atom()?)?;
                } else {
                    return Some(v);
                }
            }
        }
        fn atom(&mut self) -> Option<i64> {
            self.ws();
            let start = self.i;
            match *self.s.get(self.i)? {
                b'(' => {
                    self.i += 1;
                    let v = self.sum()?;
                    self.ws();
                    (self.s.get(self.i) == Some(&b')')).then(|| self.i += 1)?;
                    Some(v)
                }
                b'-' => {
                    self.i += 1;
                    Some(-self.atom()?)
                }
                c if c.is_ascii_digit() => {
                    while self.s.get(self.i).is_some_and(u8::is_ascii_digit) {
                        self.i += 1;
                    }
                    core::str::from_utf8(&self.s[start..self.i]).ok()?.parse().ok()
                }
                c if c.is_ascii_alphabetic() => {
                    while self.s.get(self.i).is_some_and(u8::is_ascii_alphanumeric) {
                        self.i += 1;
                    }
                    self.env.get(core::str::from_utf8(&self.s[start..self.i]).ok()?).copied()
                }
                _ => None,
            }
        }
    }
    let mut p = P { s: expr.as_bytes(), i: 0, env };
    let v = p.sum()?;
    p.ws();
    (p.i == expr.len()).then_some(v)
}

/// `lhs op rhs` with `op` among `>= <= == > <`.
fn holds(cond: &str, env: &Env) -> Option<bool> {
    for op in [">=", "<=", "==", ">", "<"] {
        if let Some((l, r)) = cond.split_once(op) {
            let (l, r) = (eval(l, env)?, eval(r, env)?);
            return Some(match op {
                ">=" => l >= r,
                "<=" => l <= r,
                "==" => l == r,
                ">" => l > r,
                _ => l < r,
            });
        }
    }
    None
}

fn all_hold(conds: &str, env: &Env) -> Option<bool> {
    let mut ok = true;
    for c in conds.split('&').map(str::trim).filter(|c| !c.is_empty()) {
        ok &= holds(c, env)?;
    }
    Some(ok)
}

/// Replaces every `{expr}` by its value.
fn instantiate_text(text: &str, env: &Env) -> Option<String> {
    let mut out = String::new();
    let mut rest = text;
    while let Some(open) = rest.find('{') {
        let close = open + rest[open..].find('}')?;
        out.push_str(&rest[..open]);
        let v = eval(&rest[open + 1..close], env)?;
        if v < 0 {
            return None;
        }
        out.push_str(&v.to_string());
        rest = &rest[close + 1..];
    }
    out.push_str(rest);
    Some(out)
}

/// One dataset row, with index expressions still symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateRow {
    pub source: Source,
    pub name: String,
    pub vars: Vec<String>,
    pub params: Vec<String>,
    /// Index names in order of first appearance in the domain.
    pub indices: Vec<String>,
    pub domain: String,
    pub normal_form: String,
    pub restrictions: Vec<String>,
    pub mu: String,
    pub smod: String,
    pub lmod: String,
    pub line: usize,
}

/// A row with every index fixed.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormEntry {
    pub label: TypeLabel,
    pub source: Source,
    /// Row name with its index expressions, e.g. `W#_k,2*q-1`.
    pub row: String,
    pub indices: Vec<(String, i64)>,
    pub normal_form: Poly,
    pub restrictions: Vec<Constraint>,
    pub mu: usize,
    pub smod: u32,
    pub lmod: Lmod,
}

fn index_names(domain: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut cur = String::new();
    for c in domain.chars().chain(core::iter::once(' ')) {
        if c.is_ascii_alphabetic() || (!cur.is_empty() && c.is_ascii_alphanumeric()) {
            cur.push(c);
        } else if !cur.is_empty() {
            if !out.contains(&cur) {
                out.push(core::mem::take(&mut cur));
            }
            cur.clear();
        }
    }
    out
}

fn split_list(s: &str, sep: char) -> Vec<String> {
    s.split(sep).map(str::trim).filter(|t| !t.is_empty()).map(String::from).collect()
}

/// Parses the embedded dataset.
pub fn template_rows() -> Result<Vec<TemplateRow>> {
    parse_rows(NORMAL_FORMS)
}

pub fn parse_rows(text: &str) -> Result<Vec<TemplateRow>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = t.split('|').map(str::trim).collect();
        if cols.len() != 10 {
            return Err(bad_row(line, "expected 10 columns"));
        }
        let source = Source::parse(cols[0]).ok_or_else(|| bad_row(line, "unknown source"))?;
        if split_label(cols[1]).is_none() {
            return Err(bad_row(line, "bad name"));
        }
        rows.push(TemplateRow {
            source,
            name: cols[1].to_string(),
            vars: split_list(cols[2], ','),
            params: split_list(cols[3], ','),
            indices: index_names(cols[4]),
            domain: cols[4].replace(';', "&"),
            normal_form: cols[5].to_string(),
            restrictions: split_list(cols[6], ';'),
            mu: cols[7].to_string(),
            smod: cols[8].to_string(),
            lmod: cols[9].to_string(),
            line,
        });
    }
    Ok(rows)
}

impl TemplateRow {
    pub fn space(&self) -> Arc<Space> {
        Space::new(&self.vars, &self.params)
    }

    fn label_at(&self, env: &Env) -> Option<TypeLabel> {
        let (series, sup, sub) = split_label(&self.name)?;
        let num = |e: &str| u32::try_from(eval(e, env)?).ok();
        let sup = match sup {
            Some(e) => Some(num(e)?),
            None => None,
        };
        let sub = sub.into_iter().map(num).collect::<Option<Vec<_>>>()?;
        Some(TypeLabel::new(series, sup, sub))
    }

    fn lmod_at(&self, env: &Env) -> Option<Lmod> {
        for case in self.lmod.split(',') {
            match case.split_once(':') {
                Some((cond, v)) => {
                    if all_hold(cond, env)? {
                        return Lmod::parse(v);
                    }
                }
                None => return Lmod::parse(case),
            }
        }
        None
    }

    pub fn series(&self) -> Series {
        split_label(&self.name).expect("checked on parse").0
    }

    /// The entry at the given index values, or `None` outside the row's domain.
    pub fn instantiate(&self, values: &[i64]) -> Result<Option<NormalFormEntry>> {
        if values.len() != self.indices.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "row {} takes {} indices",
                self.name,
                self.indices.len()
            )));
        }
        let env: Env = self.indices.iter().cloned().zip(values.iter().copied()).collect();
        let bad = |what: &str| bad_row(self.line, what);
        if !all_hold(&self.domain, &env).ok_or_else(|| bad("bad domain"))? {
            return Ok(None);
        }
        let space = self.space();
        let text = instantiate_text(&self.normal_form, &env).ok_or_else(|| bad("bad exponent"))?;
        let normal_form = parse_expr_in(&text, &space)?;
        let restrictions =
            self.restrictions.iter().map(|r| Constraint::parse(r, &space)).collect::<Result<Vec<_>>>()?;
        let count = |e: &str| eval(e, &env).and_then(|v| u32::try_from(v).ok());
        Ok(Some(NormalFormEntry {
            label: self.label_at(&env).ok_or_else(|| bad("bad name"))?,
            source: self.source,
            row: self.name.clone(),
            indices: self.indices.iter().cloned().zip(values.iter().copied()).collect(),
            normal_form,
            restrictions,
            mu: count(&self.mu).ok_or_else(|| bad("bad mu"))? as usize,
            smod: count(&self.smod).ok_or_else(|| bad("bad smod"))?,
            lmod: self.lmod_at(&env).ok_or_else(|| bad("bad lmod"))?,
        }))
    }

    /// All instances whose normal form has total degree at most `max_degree`.
    pub fn instances(&self, max_degree: u32) -> Result<Vec<NormalFormEntry>> {
        let mut out = Vec::new();
        let n = self.indices.len();
        let top = i64::from(max_degree);
        let mut values = alloc::vec![0i64; n];
        loop {
            if let Some(e) = self.instantiate(&values)? {
                if e.normal_form.degree() <= max_degree {
                    out.push(e);
                }
            }
            // Odometer over 0..=top for every index.
            let mut i = 0;
            while i < n && values[i] == top {
                values[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            values[i] += 1;
        }
        Ok(out)
    }

    /// Index values for which this row carries `label`, searched up to `bound`.
    fn solve_label(&self, label: &TypeLabel, bound: i64) -> Option<Vec<i64>> {
        let (series, _, sub) = split_label(&self.name)?;
        if series != label.series || sub.len() != label.sub.len() {
            return None;
        }
        let n = self.indices.len();
        let mut values = alloc::vec![0i64; n];
        loop {
            let env: Env = self.indices.iter().cloned().zip(values.iter().copied()).collect();
            if all_hold(&self.domain, &env) == Some(true) && self.label_at(&env).as_ref() == Some(label) {
                return Some(values);
            }
            let mut i = 0;
            while i < n && values[i] == bound {
                values[i] = 0;
                i += 1;
            }
            if i == n {
                return None;
            }
            values[i] += 1;
        }
    }
}

/// Every instance of every row up to the given total degree.
pub fn all_instances(max_degree: u32) -> Result<Vec<NormalFormEntry>> {
    let mut out = Vec::new();
    for row in template_rows()? {
        out.extend(row.instances(max_degree)?);
    }
    Ok(out)
}

/// Rational values standing in for generic parameters.
pub const GENERIC_VALUES: [(i64, i64); 6] = [(3, 7), (-5, 11), (7, 13), (-11, 17), (13, 19), (17, 23)];

impl NormalFormEntry {
    /// The normal form at fixed generic-looking parameter values; every restriction is
    /// checked to be nonzero there.
    pub fn generic_instance(&self) -> Result<Poly> {
        let params = &self.normal_form.space().params;
        if params.len() > GENERIC_VALUES.len() {
            return Err(Error::InvalidArgument("too many parameters for generic instance".into()));
        }
        let assignment: Vec<(&str, crate::algebra::Rat)> = params
            .iter()
            .zip(GENERIC_VALUES)
            .map(|(p, (n, d))| (p.as_str(), crate::algebra::rat(n, d)))
            .collect();
        self.normal_form.specialize_params(&assignment, &self.restrictions)
    }
}

/// Lookup priority: the unimodal list, then the simple list, then the remaining rows.
fn priority(s: Source) -> u8 {
    match s {
        Source::Unimodal => 0,
        Source::Simple => 1,
        _ => 2,
    }
}

/// The row carrying `label`, instantiated.
pub fn normal_form_lookup(label: &TypeLabel) -> Result<NormalFormEntry> {
    let mut rows = template_rows()?;
    rows.sort_by_key(|r| priority(r.source));
    let bound = label.sub.iter().chain(label.sup.iter()).copied().max().unwrap_or(0).max(1) as i64;
    for row in &rows {
        if let Some(values) = row.solve_label(label, bound) {
            if let Some(e) = row.instantiate(&values)? {
                return Ok(e);
            }
        }
    }
    Err(Error::UnknownLabel(label.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let env: Env = [("k".to_string(), 2), ("q".to_string(), 3)].into_iter().collect();
        assert_eq!(eval("12*k+6*q-1", &env), Some(41));
        assert_eq!(eval("(k+1)*(q-1)", &env), Some(6));
        assert_eq!(eval("k+z", &env), None);
        assert_eq!(holds("k+q>=5", &env), Some(true));
        assert_eq!(all_hold("k==2&q<3", &env), Some(false));
        assert_eq!(instantiate_text("x^{k+1}*y^{2*q}", &env).as_deref(), Some("x^3*y^6"));
    }

    #[test]
    fn dataset_parses() {
        let rows = template_rows().unwrap();
        assert!(rows.len() > 60);
        assert!(rows.iter().all(|r| r.instances(8).is_ok()));
    }
}
