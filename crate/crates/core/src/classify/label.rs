use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// Series letter of an Arnold class name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    D,
    E,
    J,
    X,
    Y,
    Z,
    W,
    WSharp,
    T,
    Q,
}

impl Series {
    pub fn symbol(self) -> &'static str {
        match self {
            Series::A => "A",
            Series::D => "D",
            Series::E => "E",
            Series::J => "J",
            Series::X => "X",
            Series::Y => "Y",
            Series::Z => "Z",
            Series::W => "W",
            Series::WSharp => "W#",
            Series::T => "T",
            Series::Q => "Q",
        }
    }

    /// Splits a leading series symbol off `s`.
    fn split(s: &str) -> Option<(Series, &str)> {
        if let Some(rest) = s.strip_prefix("W#") {
            return Some((Series::WSharp, rest));
        }
        let series = match s.chars().next()? {
            'A' => Series::A,
            'D' => Series::D,
            'E' => Series::E,
            'J' => Series::J,
            'X' => Series::X,
            'Y' => Series::Y,
            'Z' => Series::Z,
            'W' => Series::W,
            'T' => Series::T,
            'Q' => Series::Q,
            _ => return None,
        };
        Some((series, &s[1..]))
    }
}

/// Class name such as `J10`, `W#1,3`, `Y^1_2,3` or `T2,4,5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub series: Series,
    /// Superscript index, e.g. the `k` of `Z^k_{i,0}`.
    pub sup: Option<u32>,
    pub sub: Vec<u32>,
}

impl TypeLabel {
    pub fn new(series: Series, sup: Option<u32>, sub: Vec<u32>) -> Self {
        Self { series, sup, sub }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.series.symbol())?;
        if let Some(k) = self.sup {
            write!(f, "^{}_", k)?;
        }
        for (i, s) in self.sub.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

/// Splits a label into series, superscript text and subscript texts, without
/// interpreting the index fields.
pub(crate) fn split_label(s: &str) -> Option<(Series, Option<&str>, Vec<&str>)> {
    let s = s.trim();
    let (series, rest) = Series::split(s)?;
    let (sup, rest) = match rest.strip_prefix('^') {
        Some(r) => {
            let (k, r) = r.split_once('_')?;
            (Some(k), r)
        }
        None => (None, rest.strip_prefix('_').unwrap_or(rest)),
    };
    let sub = if rest.is_empty() { Vec::new() } else { rest.split(',').map(str::trim).collect() };
    Some((series, sup, sub))
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        let (series, sup, sub) = split_label(s).ok_or_else(bad)?;
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let sup = sup.map(num).transpose()?;
        let sub = sub.into_iter().map(num).collect::<Result<Vec<_>>>()?;
        if sub.is_empty() {
            return Err(bad());
        }
        Ok(TypeLabel { series, sup, sub })
    }
}

impl From<TypeLabel> for String {
    fn from(l: TypeLabel) -> String {
        l.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["J10", "W#1,3", "Y^1_2,3", "T2,4,5", "Z^2_23", "A1"] {
            let l: TypeLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        let l: TypeLabel = "J_2,1".parse().unwrap();
        assert_eq!(l.to_string(), "J2,1");
        assert!("K3".parse::<TypeLabel>().is_err());
        assert!("J".parse::<TypeLabel>().is_err());
        assert!("Jx".parse::<TypeLabel>().is_err());
    }
}
