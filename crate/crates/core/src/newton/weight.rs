use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{parse_rat, Rat};
use crate::error::{Error, Result};

/// Non-negative rational weight vector with at least one positive component.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    components: Vec<Rat>,
    star: Rat,
}

impl Weight {
    pub fn new(components: Vec<Rat>) -> Result<Self> {
        if components.iter().any(|c| c.is_negative()) {
            return Err(Error::InvalidArgument("weights must be non-negative".into()));
        }
        let star = components.iter().max().cloned().unwrap_or_else(Rat::zero);
        if !star.is_positive() {
            return Err(Error::InvalidArgument("weight needs a positive component".into()));
        }
        Ok(Self { components, star })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&v| crate::algebra::int(v)).collect())
    }

    /// Parses a comma separated list such as `8/5,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let comps: Option<Vec<Rat>> = text.split(',').map(parse_rat).collect();
        Self::new(comps.ok_or_else(|| Error::InvalidArgument(alloc::format!("bad weight `{}`", text)))?)
    }

    /// All-ones weight.
    pub fn ones(n: usize) -> Self {
        Self::new((0..n).map(|_| Rat::one()).collect()).expect("positive")
    }

    pub fn components(&self) -> &[Rat] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Largest component.
    pub fn star(&self) -> &Rat {
        &self.star
    }

    /// Largest difference `w_i - w_j`.
    pub fn max_diff(&self) -> Rat {
        let min = self.components.iter().min().cloned().unwrap_or_else(Rat::zero);
        &self.star - min
    }

    /// Weighted degree of a lattice point.
    pub fn degree(&self, p: &[u32]) -> Rat {
        let mut s = Rat::zero();
        for (w, e) in self.components.iter().zip(p) {
            if *e > 0 {
                s += w * Rat::from_integer((*e).into());
            }
        }
        s
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(|c| alloc::format!("{}", c)).collect();
        parts.join(",")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}
