//! Small exact linear algebra over Q(q): dense matrices for representation
//! checks and an incremental span solver for left ideals spanned by algebra
//! elements.

use crate::algebra::AlgebraElement;
use crate::combinatorics::Permutation;
use crate::scalars::RationalFunction;

/// Dense matrix over Q(q), row major.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalFunction>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![RationalFunction::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = RationalFunction::one();
        }
        m
    }

    pub fn from_columns(cols: Vec<Vec<RationalFunction>>) -> Self {
        let ncols = cols.len();
        let nrows = cols.first().map(|c| c.len()).unwrap_or(0);
        let mut m = Self::zero(nrows, ncols);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), nrows, "ragged columns");
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out[(i, j)] = out[(i, j)].add_ref(&a.mul_ref(b));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = a.add_ref(b);
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = a.sub_ref(b);
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = a.mul_ref(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn trace(&self) -> RationalFunction {
        assert_eq!(self.rows, self.cols);
        let mut t = RationalFunction::zero();
        for i in 0..self.rows {
            t = t.add_ref(&self[(i, i)]);
        }
        t
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Rank by fraction-field Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m[(r, col)].is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(rank, p);
            let inv = m[(rank, col)].inv().expect("pivot nonzero");
            for j in col..m.cols {
                m[(rank, j)] = m[(rank, j)].mul_ref(&inv);
            }
            for r in 0..m.rows {
                if r != rank && !m[(r, col)].is_zero() {
                    let factor = m[(r, col)].clone();
                    for j in col..m.cols {
                        let t = m[(rank, j)].mul_ref(&factor);
                        m[(r, j)] = m[(r, j)].sub_ref(&t);
                    }
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        rank
    }

    /// det(self) == 0, decided exactly.
    pub fn is_singular(&self) -> bool {
        assert_eq!(self.rows, self.cols);
        self.rank() < self.rows
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row-major JSON array of arrays.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| {
                    serde_json::Value::Array((0..self.cols).map(|j| self[(i, j)].to_json()).collect())
                })
                .collect(),
        )
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = RationalFunction;
    fn index(&self, (i, j): (usize, usize)) -> &RationalFunction {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RationalFunction {
        &mut self.data[i * self.cols + j]
    }
}

struct SpanRow {
    pivot: Permutation,
    reduced: AlgebraElement,
    // reduced = sum_j expr[j] * basis[j]
    expr: Vec<RationalFunction>,
}

/// Incremental basis of a subspace of the algebra, supporting membership
/// tests with exact coordinates in the inserted basis.
#[derive(Default)]
pub struct SpanSolver {
    rows: Vec<SpanRow>,
    basis_len: usize,
}

impl SpanSolver {
    pub fn new() -> Self {
        SpanSolver { rows: Vec::new(), basis_len: 0 }
    }

    pub fn dimension(&self) -> usize {
        self.basis_len
    }

    fn reduce(&self, v: &AlgebraElement) -> (AlgebraElement, Vec<RationalFunction>) {
        let mut res = v.clone();
        let mut coords = vec![RationalFunction::zero(); self.basis_len];
        for row in &self.rows {
            let c = res.coefficient(&row.pivot);
            if c.is_zero() {
                continue;
            }
            res = res.sub(&row.reduced.scale(&c));
            for (j, e) in row.expr.iter().enumerate() {
                coords[j] = coords[j].add_ref(&c.mul_ref(e));
            }
        }
        (res, coords)
    }

    /// Insert `v` as a new basis vector if it is independent of the span so
    /// far; returns whether it was inserted.
    pub fn try_insert(&mut self, v: &AlgebraElement) -> bool {
        let (res, coords) = self.reduce(v);
        if res.is_zero() {
            return false;
        }
        let pivot = res
            .terms()
            .map(|(p, _)| p.clone())
            .max_by_key(|p| (p.length(), p.one_line().to_vec()))
            .expect("nonzero residual");
        let c = res.coefficient(&pivot);
        let c_inv = c.inv().expect("pivot coefficient nonzero");
        let reduced = res.scale(&c_inv);
        // residual = v - sum coords[j] basis[j]; normalize and register v as
        // the new basis vector
        let mut expr: Vec<RationalFunction> =
            coords.iter().map(|x| x.mul_ref(&c_inv).neg_ref()).collect();
        expr.push(c_inv);
        self.basis_len += 1;
        // keep every stored row fully reduced against the new pivot
        for row in self.rows.iter_mut() {
            row.expr.push(RationalFunction::zero());
            let f = row.reduced.coefficient(&pivot);
            if f.is_zero() {
                continue;
            }
            row.reduced = row.reduced.sub(&reduced.scale(&f));
            for (a, b) in row.expr.iter_mut().zip(expr.iter()) {
                *a = a.sub_ref(&f.mul_ref(b));
            }
        }
        self.rows.push(SpanRow { pivot, reduced, expr });
        true
    }

    /// Coordinates of `v` in the inserted basis, if it lies in the span.
    pub fn express(&self, v: &AlgebraElement) -> Option<Vec<RationalFunction>> {
        let (res, coords) = self.reduce(v);
        if res.is_zero() {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &AlgebraElement) -> bool {
        self.express(v).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::RationalFunction as RF;

    fn q_pow(k: i64) -> RF {
        RF::q_pow(k)
    }

    #[test]
    fn rank_and_singularity() {
        let mut m = Matrix::identity(3);
        assert_eq!(m.rank(), 3);
        assert!(!m.is_singular());
        m[(2, 2)] = RF::zero();
        m[(2, 0)] = q_pow(1);
        m[(0, 2)] = q_pow(-1);
        // row 2 = q * row 0 makes it singular when the corner matches
        m[(2, 2)] = q_pow(1).mul_ref(&q_pow(-1));
        assert!(m.is_singular());
    }

    #[test]
    fn span_solver_expresses_members() {
        let t1 = AlgebraElement::gen(3, 1);
        let t2 = AlgebraElement::gen(3, 2);
        let a = t1.add(&t2.scale(&q_pow(2)));
        let b = t2.add(&AlgebraElement::unit(3));
        let mut solver = SpanSolver::new();
        assert!(solver.try_insert(&a));
        assert!(solver.try_insert(&b));
        assert_eq!(solver.dimension(), 2);
        // a + 3b is in the span with coordinates (1, 3)
        let v = a.add(&b.scale(&RF::from_integer(3)));
        let coords = solver.express(&v).unwrap();
        assert_eq!(coords, vec![RF::one(), RF::from_integer(3)]);
        // dependent vector is rejected
        assert!(!solver.try_insert(&v));
        // outside vector is not expressible
        assert!(solver.express(&AlgebraElement::unit(3)).is_none());
    }
}
