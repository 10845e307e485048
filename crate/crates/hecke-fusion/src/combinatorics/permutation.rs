use std::fmt;

use crate::error::Error;

/// Permutation of {1, ..., n} in one-line notation: `images[i-1] = sigma(i)`.
///
/// Composition is function composition: `(a.compose(b))(x) = a(b(x))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn from_one_line(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::argument(format!("not a permutation: {images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The adjacent transposition (i, i+1) in S_n, 1 <= i <= n-1.
    pub fn adjacent(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "adjacent transposition index out of range");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// sigma(i) = n + 1 - i, the longest element.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Function composition self after rhs.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        Permutation { images: rhs.images.iter().map(|&v| self.images[v - 1]).collect() }
    }

    /// self * sigma_i (swaps the entries at positions i, i+1).
    pub fn mul_adjacent_right(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// sigma_i * self (swaps the values i, i+1).
    pub fn mul_adjacent_left(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { images }
    }

    /// True iff l(self * sigma_i) > l(self).
    pub fn right_ascent(&self, i: usize) -> bool {
        self.images[i - 1] < self.images[i]
    }

    /// True iff l(sigma_i * self) > l(self), i.e. i occurs before i+1.
    pub fn left_ascent(&self, i: usize) -> bool {
        let mut pos_i = 0;
        let mut pos_i1 = 0;
        for (p, &v) in self.images.iter().enumerate() {
            if v == i {
                pos_i = p;
            } else if v == i + 1 {
                pos_i1 = p;
            }
        }
        pos_i < pos_i1
    }

    /// The smallest right descent, if any.
    pub fn first_right_descent(&self) -> Option<usize> {
        (1..self.degree()).find(|&i| !self.right_ascent(i))
    }

    /// A reduced word sigma = sigma_{i_1} ... sigma_{i_L}.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = w.first_right_descent() {
            word.push(i);
            w = w.mul_adjacent_right(i);
        }
        word.reverse();
        word
    }

    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.mul_adjacent_right(i);
        }
        p
    }

    /// Image under the embedding S_n -> S_big fixing everything above n.
    pub fn pad(&self, big: usize) -> Self {
        assert!(big >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=big);
        Permutation { images }
    }

    /// Image under the shift embedding S_n -> S_big fixing 1..offset and
    /// sending offset+i to offset+sigma(i).
    pub fn shift(&self, offset: usize, big: usize) -> Self {
        assert!(big >= offset + self.degree());
        let mut images: Vec<usize> = (1..=offset).collect();
        images.extend(self.images.iter().map(|&v| v + offset));
        images.extend(offset + self.degree() + 1..=big);
        Permutation { images }
    }

    /// All of S_n, ordered by (length, one-line lexicographic).
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(n)];
        let mut images: Vec<usize> = (1..=n).collect();
        heap_permutations(&mut images, &mut out, n);
        out.sort_by(|a, b| (a.length(), &a.images).cmp(&(b.length(), &b.images)));
        out.dedup();
        out
    }
}

fn heap_permutations(v: &mut Vec<usize>, out: &mut Vec<Permutation>, k: usize) {
    if k == 1 {
        out.push(Permutation { images: v.clone() });
        return;
    }
    for i in 0..k {
        heap_permutations(v, out, k - 1);
        if k % 2 == 0 {
            v.swap(i, k - 1);
        } else {
            v.swap(0, k - 1);
        }
    }
}

/// The shuffle sending (1, ..., m, m+1, ..., l+m) to (l+1, ..., l+m, 1, ..., l):
/// the first m values land after the last l.
pub fn tau_permutation(l: usize, m: usize) -> Permutation {
    assert!(l >= 1 && m >= 1);
    let mut images = Vec::with_capacity(l + m);
    images.extend(l + 1..=l + m);
    images.extend(1..=l);
    Permutation { images }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_element_examples() {
        assert!(Permutation::longest(1).is_identity());
        assert_eq!(Permutation::longest(2).one_line(), &[2, 1]);
        let w0 = Permutation::longest(4);
        assert_eq!(w0.one_line(), &[4, 3, 2, 1]);
        // oracle: inversion count
        assert_eq!(w0.length(), 6);
        assert_eq!(w0.length(), 4 * 3 / 2);
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau_permutation(2, 1).one_line(), &[3, 1, 2]);
        assert_eq!(tau_permutation(1, 1).one_line(), &[2, 1]);
        let t = tau_permutation(2, 2);
        assert_eq!(t.one_line(), &[3, 4, 1, 2]);
        assert_eq!(t.length(), 4);
        // l(tau) = l * m in general
        for l in 1..=3 {
            for m in 1..=3 {
                assert_eq!(tau_permutation(l, m).length(), l * m);
            }
        }
    }

    #[test]
    fn reduced_words_multiply_back() {
        for p in Permutation::all(4) {
            let w = p.reduced_word();
            assert_eq!(w.len(), p.length());
            assert_eq!(Permutation::from_word(4, &w), p);
        }
    }

    #[test]
    fn composition_and_inverse() {
        for p in Permutation::all(4) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert!(p.inverse().compose(&p).is_identity());
        }
        // associativity spot check
        let all = Permutation::all(3);
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(a.compose(b).compose(c), a.compose(&b.compose(c)));
                }
            }
        }
    }

    #[test]
    fn tau_reduced_decomposition() {
        // tau = prod_{i=l..1} prod_{j=1..m} sigma_{i+j-1}
        let (l, m) = (3, 2);
        let mut word = Vec::new();
        for i in (1..=l).rev() {
            for j in 1..=m {
                word.push(i + j - 1);
            }
        }
        assert_eq!(Permutation::from_word(l + m, &word), tau_permutation(l, m));
        assert_eq!(word.len(), tau_permutation(l, m).length());
    }
}
