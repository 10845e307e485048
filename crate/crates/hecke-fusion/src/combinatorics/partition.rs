use std::fmt;

use num::{BigInt, One};

use crate::error::Error;

/// Partition: weakly decreasing positive parts. The Young diagram is the set
/// of nodes (a, b) with 1 <= a and 1 <= b <= lambda_a (matrix convention,
/// 1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::NotAPartition { detail: format!("zero part in {parts:?}") });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition { detail: format!("parts not weakly decreasing: {parts:?}") });
        }
        Ok(Partition { parts })
    }

    /// Accepts trailing zeros and strips them.
    pub fn from_padded(parts: Vec<usize>) -> Result<Self, Error> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// lambda_a, with zero beyond the last row (1-based).
    pub fn part(&self, a: usize) -> usize {
        if a >= 1 && a <= self.parts.len() {
            self.parts[a - 1]
        } else {
            0
        }
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn num_cols(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.num_cols();
        let parts = (1..=cols)
            .map(|b| self.parts.iter().filter(|&&p| p >= b).count())
            .collect();
        Partition { parts }
    }

    /// Nodes (a, b) of the diagram, row by row, 1-based.
    pub fn nodes(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (a0, &len) in self.parts.iter().enumerate() {
            for b in 1..=len {
                out.push((a0 + 1, b));
            }
        }
        out
    }

    pub fn contains_node(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && b <= self.part(a)
    }

    /// Nodewise containment inner <= self.
    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.num_rows()).all(|a| inner.part(a) <= self.part(a))
    }

    /// Hook length of the node (a, b): lambda_a + lambda*_b - a - b + 1.
    pub fn hook_length(&self, a: usize, b: usize) -> usize {
        let conj = self.conjugate();
        self.part(a) + conj.part(b) - a - b + 1
    }

    /// Number of standard tableaux, n! / (product of hook lengths).
    pub fn num_standard_tableaux(&self) -> usize {
        let mut numer = BigInt::one();
        for k in 1..=self.size() {
            numer *= BigInt::from(k);
        }
        let mut denom = BigInt::one();
        for (a, b) in self.nodes() {
            denom *= BigInt::from(self.hook_length(a, b));
        }
        let (q, r) = num::Integer::div_rem(&numer, &denom);
        assert!(num::Zero::is_zero(&r), "hook product must divide n!");
        let digits = q.to_string();
        digits.parse().expect("tableau count fits in usize")
    }

    /// All partitions of n, in reverse lexicographic order ((n) first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: current.clone() });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                current.push(next);
                rec(remaining - next, next, current, out);
                current.pop();
            }
        }
        rec(n, n, &mut current, &mut out);
        out
    }

    pub fn parse(text: &str) -> Result<Self, Error> {
        let parts: Result<Vec<usize>, _> = text
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect();
        match parts {
            Ok(v) if !v.is_empty() => Self::new(v),
            _ => Err(Error::argument(format!("cannot parse partition '{text}'"))),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_involution() {
        for n in 1..=7 {
            for lam in Partition::all(n) {
                assert_eq!(lam.conjugate().conjugate(), lam);
                assert_eq!(lam.conjugate().size(), lam.size());
            }
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::from_padded(vec![2, 1, 0, 0]).is_ok());
    }

    #[test]
    fn hook_lengths() {
        let lam = p(&[2, 1]);
        assert_eq!(lam.hook_length(1, 1), 3);
        assert_eq!(lam.hook_length(1, 2), 1);
        assert_eq!(lam.hook_length(2, 1), 1);
        assert_eq!(lam.num_standard_tableaux(), 2);
        assert_eq!(p(&[3, 2]).num_standard_tableaux(), 5);
        assert_eq!(p(&[2, 2, 1]).num_standard_tableaux(), 5);
    }

    #[test]
    fn partition_counts() {
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(5).len(), 7);
        assert_eq!(Partition::all(6).len(), 11);
        assert_eq!(Partition::all(4)[0], p(&[4]));
    }

    #[test]
    fn display_and_parse() {
        let lam = p(&[3, 2, 1]);
        assert_eq!(lam.to_string(), "3,2,1");
        assert_eq!(Partition::parse("3,2,1").unwrap(), lam);
        assert!(Partition::parse("1,2").is_err());
    }
}
