use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Local degree ordering: smaller weighted degree is larger, ties broken
/// reverse-lexicographically (`ds` for unit weights). `1` is the largest monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalOrder {
    pub weights: Vec<u32>,
}

impl LocalOrder {
    /// Negative degree reverse lexicographic order on `n` variables.
    pub fn ds(n: usize) -> Self {
        Self { weights: vec![1; n] }
    }

    /// Negative weighted-degree order with reverse-lexicographic tie-break.
    pub fn weighted(weights: Vec<u32>) -> Self {
        assert!(weights.iter().all(|&w| w > 0), "local order weights must be positive");
        Self { weights }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn deg(&self, m: &[u32]) -> u64 {
        m.iter().zip(&self.weights).map(|(a, w)| *a as u64 * *w as u64).sum()
    }

    /// `Greater` means `a` is the larger (more leading) monomial.
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.deg(b).cmp(&self.deg(a)) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ds_examples() {
        let o = LocalOrder::ds(2);
        assert_eq!(o.cmp(&[0, 0], &[1, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 0], &[0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[2, 1], &[1, 2]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 3], &[0, 4]), Ordering::Greater);
        assert_eq!(o.cmp(&[5, 0], &[0, 4]), Ordering::Less);
    }
}
