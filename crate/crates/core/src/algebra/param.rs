use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::Rat;

/// Exponent vector with trailing zeros trimmed, so that the empty vector is the
/// constant monomial and the derived `Ord` coincides with lexicographic order.
type Exp = Vec<u32>;

fn trim(mut e: Exp) -> Exp {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn exp_add(a: &[u32], b: &[u32]) -> Exp {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
        .collect()
}

fn exp_divides(a: &[u32], b: &[u32]) -> bool {
    a.len() <= b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_sub(b: &[u32], a: &[u32]) -> Exp {
    let mut r: Exp = b.to_vec();
    for (i, x) in a.iter().enumerate() {
        r[i] -= x;
    }
    trim(r)
}

/// Polynomial over Q in the parameters. Parameter names live in the enclosing
/// [`Space`](super::Space); a `ParamPoly` only knows parameter indices.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ParamPoly {
    terms: BTreeMap<Exp, Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { terms }
    }

    /// The parameter with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        Self::monomial(e, Rat::one())
    }

    pub fn monomial(exp: Vec<u32>, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exp), c);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(trim(e), c);
        }
        p
    }

    fn add_term(&mut self, e: Exp, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms with exponent vectors trimmed of trailing zeros.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rat)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Exponent vector padded to `n` entries.
    pub fn padded_terms(&self, n: usize) -> Vec<(Vec<u32>, Rat)> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut v = e.clone();
                v.resize(n.max(v.len()), 0);
                (v, c.clone())
            })
            .collect()
    }

    /// Number of parameter slots actually used (highest index + 1).
    pub fn width(&self) -> usize {
        self.terms.keys().map(|e| e.len()).max().unwrap_or(0)
    }

    /// Leading term under lexicographic order.
    pub fn leading(&self) -> Option<(&[u32], &Rat)> {
        self.terms.iter().next_back().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn leading_coeff(&self) -> Rat {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rat::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|e| e.get(v).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut r = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(exp_add(e1, e2), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dl, dc) = d.leading().map(|(e, c)| (e.to_vec(), c.clone()))?;
        if d.len() == 1 {
            let k = dc.recip();
            let mut q = Self::zero();
            for (e, c) in &self.terms {
                if !exp_divides(&dl, e) {
                    return None;
                }
                q.terms.insert(exp_sub(e, &dl), c * &k);
            }
            return Some(q);
        }
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((re, rc)) = rem.leading().map(|(e, c)| (e.to_vec(), c.clone())) {
            if !exp_divides(&dl, &re) {
                return None;
            }
            let qe = exp_sub(&re, &dl);
            let qc = rc / &dc;
            for (e, c) in &d.terms {
                rem.add_term(exp_add(&qe, e), -(c * &qc));
            }
            q.terms.insert(qe, qc);
        }
        Some(q)
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut s = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, k) in e.iter().enumerate() {
                if *k > 0 {
                    t *= num_traits::pow(point[i].clone(), *k as usize);
                }
            }
            s += t;
        }
        s
    }

    /// Substitutes values for some parameters (`None` keeps the parameter).
    pub fn partial_eval(&self, point: &[Option<Rat>]) -> Self {
        let mut r = Self::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            let mut ne = e.clone();
            for (i, k) in e.iter().enumerate() {
                if let Some(Some(v)) = point.get(i) {
                    if *k > 0 {
                        t *= num_traits::pow(v.clone(), *k as usize);
                    }
                    ne[i] = 0;
                }
            }
            r.add_term(trim(ne), t);
        }
        r
    }

    pub fn derivative(&self, v: usize) -> Self {
        let mut r = Self::zero();
        for (e, c) in &self.terms {
            let k = e.get(v).copied().unwrap_or(0);
            if k > 0 {
                let mut ne = e.clone();
                ne[v] -= 1;
                r.add_term(trim(ne), c * Rat::from_integer(BigInt::from(k)));
            }
        }
        r
    }

    /// Least common multiple of the coefficient denominators.
    pub(crate) fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the (integer) numerators, assuming integer coefficients.
    pub(crate) fn numerator_gcd(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// Integer primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let l = self.denominator_lcm();
        let p = self.scale(&Rat::from_integer(l));
        let mut g = p.numerator_gcd();
        if p.leading_coeff().is_negative() {
            g = -g;
        }
        p.scale(&Rat::from_integer(g).recip())
    }

    fn vars_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.width()];
        for e in self.terms.keys() {
            for (i, k) in e.iter().enumerate() {
                if *k > 0 {
                    used[i] = true;
                }
            }
        }
        used
    }

    /// Writes the polynomial with `*` and `^` using the given parameter names.
    pub fn write_with(&self, names: &[String], out: &mut String) {
        if self.is_zero() {
            out.push('0');
            return;
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { "-" } else { "+" });
            }
            first = false;
            let mono = mono_string(e, names);
            if mono.is_empty() {
                let _ = write!(out, "{}", a);
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{}*{}", a, mono);
            }
        }
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        self.write_with(names, &mut s);
        s
    }
}

pub(crate) fn mono_string(e: &[u32], names: &[String]) -> String {
    let mut s = String::new();
    for (i, k) in e.iter().enumerate() {
        if *k == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&names[i]);
        if *k > 1 {
            let _ = write!(s, "^{}", k);
        }
    }
    s
}

// ---------------------------------------------------------------------------
// multivariate gcd

/// Polynomial in one distinguished parameter with coefficients in the others.
type Univ = Vec<ParamPoly>;

fn to_univ(p: &ParamPoly, v: usize) -> Univ {
    let mut u: Univ = vec![ParamPoly::zero(); p.degree_in(v) as usize + 1];
    for (e, c) in &p.terms {
        let k = e.get(v).copied().unwrap_or(0) as usize;
        let mut ne = e.clone();
        if v < ne.len() {
            ne[v] = 0;
        }
        u[k].add_term(trim(ne), c.clone());
    }
    u
}

fn from_univ(u: &Univ, v: usize) -> ParamPoly {
    let mut r = ParamPoly::zero();
    for (k, c) in u.iter().enumerate() {
        for (e, x) in &c.terms {
            let mut ne = e.clone();
            if k > 0 {
                if ne.len() <= v {
                    ne.resize(v + 1, 0);
                }
                ne[v] += k as u32;
            }
            r.add_term(trim(ne), x.clone());
        }
    }
    r
}

fn univ_trim(u: &mut Univ) {
    while u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn univ_deg(u: &Univ) -> usize {
    u.len() - 1
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
fn prem(a: &Univ, b: &Univ) -> Univ {
    let db = univ_deg(b);
    let lb = &b[db];
    let mut r = a.clone();
    let mut e = a.len() as i64 - b.len() as i64 + 1;
    while !r.is_empty() && r.len() > db {
        let dr = univ_deg(&r);
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] = r[i + shift].sub(&lr.mul(bc));
        }
        univ_trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

fn univ_content(u: &Univ) -> ParamPoly {
    let mut g = ParamPoly::zero();
    for c in u.iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            return ParamPoly::one();
        }
    }
    g
}

fn univ_div(u: &Univ, d: &ParamPoly) -> Univ {
    u.iter()
        .map(|c| c.exact_div(d).expect("content divides every coefficient"))
        .collect()
}

/// Subresultant PRS gcd of two primitive polynomials (up to a factor in the coefficient ring).
fn subresultant(mut a: Univ, mut b: Univ) -> Univ {
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    let mut g = ParamPoly::one();
    let mut h = ParamPoly::one();
    loop {
        let delta = (univ_deg(&a) - univ_deg(&b)) as u32;
        let r = prem(&a, &b);
        if r.is_empty() {
            return b;
        }
        if r.len() == 1 {
            return vec![ParamPoly::one()];
        }
        a = b;
        let div = g.mul(&h.pow(delta));
        b = univ_div(&r, &div);
        g = a[univ_deg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).exact_div(&h.pow(delta - 1)).expect("subresultant h update is exact")
        };
    }
}

/// gcd of the monomial `m` with `p`: the componentwise minimum of exponents.
fn monomial_gcd(m: &ParamPoly, p: &ParamPoly) -> ParamPoly {
    let (e, _) = m.leading().expect("nonzero monomial");
    let mut g: Exp = e.to_vec();
    for (f, _) in p.terms() {
        g.truncate(f.len());
        for (x, y) in g.iter_mut().zip(f) {
            *x = (*x).min(*y);
        }
    }
    ParamPoly::monomial(g, Rat::one())
}

/// Greatest common divisor in Q[params], normalized to an integer primitive
/// polynomial with positive leading coefficient (the zero polynomial if both are zero).
pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPoly::one();
    }
    if a == b {
        return a.primitive();
    }
    if a.len() == 1 {
        return monomial_gcd(a, b);
    }
    if b.len() == 1 {
        return monomial_gcd(b, a);
    }
    let ua = a.vars_used();
    let ub = b.vars_used();
    let n = ua.len().max(ub.len());
    let v = (0..n)
        .find(|&i| ua.get(i).copied().unwrap_or(false) || ub.get(i).copied().unwrap_or(false))
        .expect("non-constant polynomial uses a variable");
    let in_a = ua.get(v).copied().unwrap_or(false);
    let in_b = ub.get(v).copied().unwrap_or(false);
    if !in_a {
        return gcd(a, &univ_content(&to_univ(b, v)));
    }
    if !in_b {
        return gcd(&univ_content(&to_univ(a, v)), b);
    }
    let pa = to_univ(a, v);
    let pb = to_univ(b, v);
    let ca = univ_content(&pa);
    let cb = univ_content(&pb);
    let c = gcd(&ca, &cb);
    let pa = univ_div(&pa, &ca);
    let pb = univ_div(&pb, &cb);
    let g = subresultant(pa, pb);
    let g = univ_div(&g, &univ_content(&g));
    from_univ(&g, v).mul(&c).primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::int;

    fn s() -> ParamPoly {
        ParamPoly::var(0)
    }
    fn t() -> ParamPoly {
        ParamPoly::var(1)
    }

    #[test]
    fn gcd_of_products() {
        let a = s().add(&t()).mul(&s().sub(&ParamPoly::one()));
        let b = s().add(&t()).mul(&t().add(&ParamPoly::constant(int(3))));
        assert_eq!(gcd(&a, &b), s().add(&t()));
        let c = s().pow(5).mul(&s().pow(2).sub(&ParamPoly::constant(int(4))));
        let d = s().pow(7).scale(&int(6));
        assert_eq!(gcd(&c, &d), s().pow(5));
    }

    #[test]
    fn exact_division() {
        let a = s().add(&t()).pow(3);
        assert_eq!(a.exact_div(&s().add(&t())), Some(s().add(&t()).pow(2)));
        assert_eq!(s().exact_div(&t()), None);
    }
}
