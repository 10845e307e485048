use std::fmt;

use crate::combinatorics::partition::Partition;
use crate::combinatorics::permutation::Permutation;
use crate::error::Error;

/// Standard tableau: bijective filling of a Young diagram with 1..l,
/// increasing along rows and down columns. Both the node -> entry and the
/// entry -> node maps are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StandardTableau {
    shape: Partition,
    entry_at: Vec<Vec<usize>>,      // entry_at[a-1][b-1]
    node_of: Vec<(usize, usize)>,   // node_of[e-1] = (a, b), 1-based
}

impl StandardTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|e| Error::NotStandard { detail: e.to_string() })?;
        let l = shape.size();
        let mut node_of = vec![(0, 0); l];
        for (a0, row) in rows.iter().enumerate() {
            for (b0, &e) in row.iter().enumerate() {
                if e == 0 || e > l || node_of[e - 1] != (0, 0) {
                    return Err(Error::NotStandard { detail: format!("entries not a bijection onto 1..{l}") });
                }
                node_of[e - 1] = (a0 + 1, b0 + 1);
            }
        }
        let tab = StandardTableau { shape, entry_at: rows, node_of };
        tab.check_standard()?;
        Ok(tab)
    }

    fn check_standard(&self) -> Result<(), Error> {
        for (a, b) in self.shape.nodes() {
            let e = self.entry(a, b);
            if b > 1 && self.entry(a, b - 1) >= e {
                return Err(Error::NotStandard { detail: format!("row {a} not increasing") });
            }
            if a > 1 && self.entry(a - 1, b) >= e {
                return Err(Error::NotStandard { detail: format!("column {b} not increasing") });
            }
        }
        Ok(())
    }

    /// Fills columns consecutively: the entry below is the successor.
    pub fn column_tableau(shape: &Partition) -> Self {
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut next = 1;
        for b in 1..=shape.num_cols() {
            for a in 1..=conj.part(b) {
                rows[a - 1][b - 1] = next;
                next += 1;
            }
        }
        Self::from_rows(rows).expect("column filling is standard")
    }

    /// Fills rows consecutively: the entry to the right is the successor.
    pub fn row_tableau(shape: &Partition) -> Self {
        let mut rows = Vec::new();
        let mut next = 1;
        for &len in shape.parts() {
            rows.push((next..next + len).collect::<Vec<usize>>());
            next += len;
        }
        Self::from_rows(rows).expect("row filling is standard")
    }

    /// All standard tableaux of the shape, lexicographic on the entry -> node
    /// sequence.
    pub fn enumerate(shape: &Partition) -> Vec<StandardTableau> {
        let l = shape.size();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
        let mut out = Vec::new();
        fn rec(shape: &Partition, rows: &mut Vec<Vec<usize>>, entry: usize, l: usize, out: &mut Vec<StandardTableau>) {
            if entry > l {
                out.push(StandardTableau::from_rows(rows.clone()).expect("construction is standard"));
                return;
            }
            for (a, b) in shape.nodes() {
                if rows[a - 1][b - 1] != 0 {
                    continue;
                }
                let row_ok = b == 1 || rows[a - 1][b - 2] != 0;
                let col_ok = a == 1 || rows[a - 2][b - 1] != 0;
                if row_ok && col_ok {
                    rows[a - 1][b - 1] = entry;
                    rec(shape, rows, entry + 1, l, out);
                    rows[a - 1][b - 1] = 0;
                }
            }
        }
        rec(shape, &mut rows, 1, l, &mut out);
        out
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.node_of.len()
    }

    pub fn entry(&self, a: usize, b: usize) -> usize {
        self.entry_at[a - 1][b - 1]
    }

    pub fn node(&self, entry: usize) -> (usize, usize) {
        self.node_of[entry - 1]
    }

    pub fn row_of(&self, entry: usize) -> usize {
        self.node(entry).0
    }

    pub fn column_of(&self, entry: usize) -> usize {
        self.node(entry).1
    }

    /// Content of entry i: column minus row of its node.
    pub fn content(&self, entry: usize) -> i64 {
        let (a, b) = self.node(entry);
        b as i64 - a as i64
    }

    pub fn contents(&self) -> Vec<i64> {
        (1..=self.size()).map(|i| self.content(i)).collect()
    }

    /// d_k = c_k - c_{k+1}. Values -1/+1 exactly when k, k+1 are row/column
    /// neighbours; |d_k| >= 2 exactly when swapping them stays standard.
    pub fn d(&self, k: usize) -> i64 {
        self.content(k) - self.content(k + 1)
    }

    /// The tableau with entries k and k+1 exchanged, if it is standard.
    pub fn swap_entries(&self, k: usize) -> Option<StandardTableau> {
        if self.d(k).abs() < 2 {
            return None;
        }
        let (a1, b1) = self.node(k);
        let (a2, b2) = self.node(k + 1);
        let mut rows = self.entry_at.clone();
        rows[a1 - 1][b1 - 1] = k + 1;
        rows[a2 - 1][b2 - 1] = k;
        Some(Self::from_rows(rows).expect("separated swap stays standard"))
    }

    /// Permutation rho with self = rho . column_tableau, acting on entries.
    pub fn rho(&self) -> Permutation {
        let col = Self::column_tableau(&self.shape);
        let mut images = vec![0; self.size()];
        for (a, b) in self.shape.nodes() {
            images[col.entry(a, b) - 1] = self.entry(a, b);
        }
        Permutation::from_one_line(images).expect("tableau entries are a bijection")
    }

    /// For each j, the entries i < j placed after j in column order,
    /// listed by decreasing position (the reversal in the definition).
    pub fn a_sequences(&self) -> Vec<Vec<usize>> {
        let rho = self.rho();
        let rho_inv = rho.inverse();
        let l = self.size();
        (1..=l)
            .map(|j| {
                let mut seq: Vec<usize> = (1..j)
                    .filter(|&i| rho_inv.apply(i) > rho_inv.apply(j))
                    .collect();
                seq.sort_by_key(|&i| std::cmp::Reverse(rho_inv.apply(i)));
                seq
            })
            .collect()
    }

    /// For each j, the entries i < j placed before j in column order,
    /// listed by increasing position.
    pub fn b_sequences(&self) -> Vec<Vec<usize>> {
        let rho = self.rho();
        let rho_inv = rho.inverse();
        let l = self.size();
        (1..=l)
            .map(|j| {
                let mut seq: Vec<usize> = (1..j)
                    .filter(|&i| rho_inv.apply(i) < rho_inv.apply(j))
                    .collect();
                seq.sort_by_key(|&i| rho_inv.apply(i));
                seq
            })
            .collect()
    }

    /// Entries transposed onto the conjugate shape.
    pub fn transpose(&self) -> StandardTableau {
        let conj = self.shape.conjugate();
        let mut rows: Vec<Vec<usize>> = conj.parts().iter().map(|&len| vec![0; len]).collect();
        for (a, b) in self.shape.nodes() {
            rows[b - 1][a - 1] = self.entry(a, b);
        }
        Self::from_rows(rows).expect("transpose of standard is standard")
    }

    /// Remove the largest entry; returns the truncated tableau and the row
    /// the entry was removed from.
    pub fn remove_largest(&self) -> (StandardTableau, usize) {
        let l = self.size();
        let (a, _) = self.node(l);
        let mut rows = self.entry_at.clone();
        rows[a - 1].pop();
        if rows[a - 1].is_empty() {
            rows.pop();
        }
        (Self::from_rows(rows).expect("truncation is standard"), a)
    }

    /// Restriction to entries 1..=k.
    pub fn truncate(&self, k: usize) -> StandardTableau {
        let mut t = self.clone();
        for _ in k..self.size() {
            t = t.remove_largest().0;
        }
        t
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entry_at.clone()
    }

    pub fn parse_rows(text: &str) -> Result<Self, Error> {
        let rows: Vec<Vec<usize>> = serde_json::from_str(text)
            .map_err(|_| Error::argument(format!("cannot parse tableau '{text}'")))?;
        Self::from_rows(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entry_at.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Brute-force oracle: all bijective fillings filtered by standardness.
    fn brute_force_count(shape: &Partition) -> usize {
        let nodes = shape.nodes();
        let l = nodes.len();
        let mut count = 0;
        for perm in Permutation::all(l) {
            let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
            for (idx, &(a, b)) in nodes.iter().enumerate() {
                rows[a - 1][b - 1] = perm.apply(idx + 1);
            }
            if StandardTableau::from_rows(rows).is_ok() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn enumeration_matches_brute_force_and_hooks() {
        for n in 1..=5 {
            for lam in Partition::all(n) {
                let tabs = StandardTableau::enumerate(&lam);
                assert_eq!(tabs.len(), lam.num_standard_tableaux(), "hook count for {lam}");
                if n <= 4 {
                    assert_eq!(tabs.len(), brute_force_count(&lam), "brute force for {lam}");
                }
                // duplicate-free
                for i in 0..tabs.len() {
                    for j in (i + 1)..tabs.len() {
                        assert_ne!(tabs[i], tabs[j]);
                    }
                }
            }
        }
        assert_eq!(StandardTableau::enumerate(&p(&[2])).len(), 1);
        assert_eq!(StandardTableau::enumerate(&p(&[1, 1])).len(), 1);
        assert_eq!(StandardTableau::enumerate(&p(&[2, 1])).len(), 2);
    }

    #[test]
    fn distinguished_tableaux() {
        let lam = p(&[2, 1]);
        let col = StandardTableau::column_tableau(&lam);
        assert_eq!(col.rows(), vec![vec![1, 3], vec![2]]);
        let row = StandardTableau::row_tableau(&lam);
        assert_eq!(row.rows(), vec![vec![1, 2], vec![3]]);
        // defining recurrences at every node
        for (a, b) in lam.nodes() {
            if lam.contains_node(a + 1, b) {
                assert_eq!(col.entry(a + 1, b), col.entry(a, b) + 1);
            }
            if lam.contains_node(a, b + 1) {
                assert_eq!(row.entry(a, b + 1), row.entry(a, b) + 1);
            }
        }
        // single column: both coincide
        let hook = p(&[1, 1, 1]);
        assert_eq!(StandardTableau::column_tableau(&hook), StandardTableau::row_tableau(&hook));
    }

    #[test]
    fn contents() {
        let lam = p(&[2, 1]);
        let col = StandardTableau::column_tableau(&lam);
        assert_eq!(col.contents(), vec![0, -1, 1]);
        let row = StandardTableau::row_tableau(&lam);
        assert_eq!(row.contents(), vec![0, 1, -1]);
        // first entry always sits at (1,1)
        for n in 1..=5 {
            for lam in Partition::all(n) {
                for t in StandardTableau::enumerate(&lam) {
                    assert_eq!(t.content(1), 0);
                }
            }
        }
    }

    #[test]
    fn d_values() {
        assert_eq!(StandardTableau::row_tableau(&p(&[2])).d(1), -1);
        assert_eq!(StandardTableau::column_tableau(&p(&[1, 1])).d(1), 1);
        assert_eq!(StandardTableau::row_tableau(&p(&[2, 1])).d(2), 2);
        // swap is standard exactly when |d| >= 2
        for n in 2..=5 {
            for lam in Partition::all(n) {
                for t in StandardTableau::enumerate(&lam) {
                    for k in 1..n {
                        let (a1, b1) = t.node(k);
                        let (a2, b2) = t.node(k + 1);
                        let neighbours = (a1 == a2 && b2 == b1 + 1) || (b1 == b2 && a2 == a1 + 1);
                        if neighbours {
                            assert!(t.d(k) == 1 || t.d(k) == -1);
                            assert!(t.swap_entries(k).is_none());
                        } else {
                            assert!(t.d(k).abs() >= 2);
                            assert!(t.swap_entries(k).is_some());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rho_round_trip() {
        let lam = p(&[2, 1]);
        let row = StandardTableau::row_tableau(&lam);
        assert_eq!(row.rho().one_line(), &[1, 3, 2]);
        let col = StandardTableau::column_tableau(&lam);
        assert!(col.rho().is_identity());
        // rho applied to the column tableau reproduces the tableau
        for n in 1..=5 {
            for lam in Partition::all(n) {
                let col = StandardTableau::column_tableau(&lam);
                for t in StandardTableau::enumerate(&lam) {
                    let rho = t.rho();
                    for (a, b) in lam.nodes() {
                        assert_eq!(t.entry(a, b), rho.apply(col.entry(a, b)));
                    }
                    assert_eq!(rho.is_identity(), t == col);
                }
            }
        }
    }

    #[test]
    fn sequence_words_are_reduced() {
        for n in 1..=5 {
            for lam in Partition::all(n) {
                for t in StandardTableau::enumerate(&lam) {
                    let rho = t.rho();
                    let aseqs = t.a_sequences();
                    let bseqs = t.b_sequences();
                    let mut a_total = 0;
                    for j in 1..=n {
                        // A_j and B_j partition {1, ..., j-1}
                        let mut merged: Vec<usize> = aseqs[j - 1]
                            .iter()
                            .chain(bseqs[j - 1].iter())
                            .copied()
                            .collect();
                        merged.sort_unstable();
                        assert_eq!(merged, (1..j).collect::<Vec<_>>());
                        a_total += aseqs[j - 1].len();
                    }
                    assert_eq!(a_total, rho.length());
                    // word built from the A-sequences is reduced for rho
                    let mut word = Vec::new();
                    for j in 1..=n {
                        for k in 1..=aseqs[j - 1].len() {
                            word.push(j - k);
                        }
                    }
                    assert_eq!(word.len(), rho.length());
                    assert_eq!(Permutation::from_word(n, &word), rho);
                    // word built from the B-sequences is reduced for rho * w0
                    let target = rho.compose(&Permutation::longest(n));
                    let mut bword = Vec::new();
                    for j in 1..=n {
                        for k in 1..=bseqs[j - 1].len() {
                            bword.push(j - k);
                        }
                    }
                    assert_eq!(bword.len(), target.length());
                    assert_eq!(Permutation::from_word(n, &bword), target);
                }
            }
        }
    }

    #[test]
    fn a_sequence_example() {
        let row = StandardTableau::row_tableau(&p(&[2, 1]));
        let aseqs = row.a_sequences();
        assert_eq!(aseqs[2], vec![2]);
        let col = StandardTableau::column_tableau(&p(&[2, 2]));
        for (j, seq) in col.a_sequences().iter().enumerate() {
            assert!(seq.is_empty(), "column tableau has empty A_{}", j + 1);
        }
        for (j, seq) in col.b_sequences().iter().enumerate() {
            assert_eq!(seq, &(1..=j).collect::<Vec<_>>());
        }
    }

    #[test]
    fn content_multiset_depends_only_on_shape() {
        for lam in Partition::all(5) {
            let tabs = StandardTableau::enumerate(&lam);
            let mut reference: Vec<i64> = tabs[0].contents();
            reference.sort_unstable();
            let mut seen = Vec::new();
            for t in &tabs {
                let mut c = t.contents();
                c.sort_unstable();
                assert_eq!(c, reference);
                // ordered vectors distinguish tableaux
                let ordered = t.contents();
                assert!(!seen.contains(&ordered));
                seen.push(ordered);
            }
        }
    }
}
