use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `n` or `n/d` with optional leading sign.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str_radix(n, 10).ok()?;
    let d = BigInt::from_str_radix(d, 10).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}
