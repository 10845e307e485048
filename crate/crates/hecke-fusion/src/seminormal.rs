//! Matrix realization of the irreducible module attached to a partition, on
//! the basis indexed by standard tableaux, together with characters, the
//! diagonal action of the commuting family, branching, and agreement with
//! the left-ideal model.

use std::collections::BTreeMap;

use num::BigRational;

use crate::algebra::AlgebraElement;
use crate::combinatorics::{hook_scalar, Partition, Permutation, StandardTableau};
use crate::error::Error;
use crate::fusion::seminormal_element;
use crate::linalg::{Matrix, SpanSolver};
use crate::scalars::{big_rat, RationalFunction};

/// Generator matrices acting on the tableau basis, verified against the
/// defining relations at construction time.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    shape: Partition,
    basis: Vec<StandardTableau>,
    generators: Vec<Matrix>,
}

/// The two-term action of a generator on a basis vector: diagonal part plus,
/// when the swapped tableau is standard, the swap part.
fn generator_action(tab: &StandardTableau, k: usize) -> (RationalFunction, Option<RationalFunction>) {
    let d = tab.d(k);
    match d {
        -1 => (RationalFunction::q_pow(1), None),
        1 => (RationalFunction::q_pow(-1).neg_ref(), None),
        _ => {
            let u = RationalFunction::q_minus_qinv();
            let diag = u
                .div_ref(&RationalFunction::one().sub_ref(&RationalFunction::q_pow(2 * d)))
                .expect("separation at least two keeps the denominator nonzero");
            let off = if d >= 2 {
                RationalFunction::one()
            } else {
                let gap = RationalFunction::q_pow(d).sub_ref(&RationalFunction::q_pow(-d));
                RationalFunction::one()
                    .sub_ref(&u.mul_ref(&u).div_ref(&gap.mul_ref(&gap)).expect("nonzero gap"))
            };
            (diag, Some(off))
        }
    }
}

pub fn build_rep(shape: &Partition) -> Result<SeminormalRep, Error> {
    let l = shape.size();
    let basis = StandardTableau::enumerate(shape);
    let dim = basis.len();
    let index: BTreeMap<Vec<Vec<usize>>, usize> =
        basis.iter().enumerate().map(|(i, t)| (t.rows(), i)).collect();
    let mut generators = Vec::new();
    for k in 1..l {
        let mut m = Matrix::zero(dim, dim);
        for (j, tab) in basis.iter().enumerate() {
            let (diag, off) = generator_action(tab, k);
            m[(j, j)] = diag;
            if let Some(off) = off {
                let swapped = tab.swap_entries(k).expect("separated swap is standard");
                let i = index[&swapped.rows()];
                m[(i, j)] = off;
            }
        }
        generators.push(m);
    }
    let rep = SeminormalRep { shape: shape.clone(), basis, generators };
    rep.verify_relations()?;
    Ok(rep)
}

impl SeminormalRep {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StandardTableau] {
        &self.basis
    }

    /// Matrix of T_k.
    pub fn generator(&self, k: usize) -> &Matrix {
        &self.generators[k - 1]
    }

    fn verify_relations(&self) -> Result<(), Error> {
        let dim = self.dimension();
        let id = Matrix::identity(dim);
        let u = RationalFunction::q_minus_qinv();
        for (k0, m) in self.generators.iter().enumerate() {
            // quadratic relation: M^2 = (q - q^-1) M + 1
            let lhs = m.mul(m);
            let rhs = m.scale(&u).add(&id);
            if lhs != rhs {
                return Err(Error::invariant(format!(
                    "quadratic relation fails for generator {} of shape {}",
                    k0 + 1,
                    self.shape
                )));
            }
        }
        for k in 0..self.generators.len().saturating_sub(1) {
            let a = &self.generators[k];
            let b = &self.generators[k + 1];
            if a.mul(b).mul(a) != b.mul(a).mul(b) {
                return Err(Error::invariant(format!(
                    "braid relation fails at {} for shape {}",
                    k + 1,
                    self.shape
                )));
            }
        }
        for i in 0..self.generators.len() {
            for j in (i + 2)..self.generators.len() {
                let a = &self.generators[i];
                let b = &self.generators[j];
                if a.mul(b) != b.mul(a) {
                    return Err(Error::invariant(format!(
                        "distant generators {} and {} fail to commute for shape {}",
                        i + 1,
                        j + 1,
                        self.shape
                    )));
                }
            }
        }
        Ok(())
    }

    /// Matrix of a basis word, multiplied letter by letter.
    pub fn represent_word(&self, sigma: &Permutation) -> Matrix {
        let mut memo: BTreeMap<Permutation, Matrix> = BTreeMap::new();
        memo.insert(Permutation::identity(sigma.degree()), Matrix::identity(self.dimension()));
        self.word_matrix(&mut memo, sigma)
    }

    fn word_matrix(&self, memo: &mut BTreeMap<Permutation, Matrix>, sigma: &Permutation) -> Matrix {
        if let Some(hit) = memo.get(sigma) {
            return hit.clone();
        }
        let i = sigma.first_right_descent().expect("non-identity has a descent");
        let shorter = sigma.mul_adjacent_right(i);
        let m = self.word_matrix(memo, &shorter).mul(self.generator(i));
        memo.insert(sigma.clone(), m.clone());
        m
    }

    /// Matrix of an arbitrary element.
    pub fn represent(&self, a: &AlgebraElement) -> Result<Matrix, Error> {
        if a.rank() != self.shape.size() {
            return Err(Error::RankMismatch { left: a.rank(), right: self.shape.size() });
        }
        let mut memo: BTreeMap<Permutation, Matrix> = BTreeMap::new();
        memo.insert(Permutation::identity(a.rank()), Matrix::identity(self.dimension()));
        let mut out = Matrix::zero(self.dimension(), self.dimension());
        for (sigma, c) in a.terms() {
            out = out.add(&self.word_matrix(&mut memo, sigma).scale(c));
        }
        Ok(out)
    }

    /// Trace of the represented element.
    pub fn character(&self, a: &AlgebraElement) -> Result<RationalFunction, Error> {
        Ok(self.represent(a)?.trace())
    }

    /// Generator matrices with q set to the given rational point.
    pub fn specialize(&self, q0: &BigRational) -> Result<Vec<Matrix>, Error> {
        self.generators
            .iter()
            .map(|m| {
                let dim = self.dimension();
                let mut out = Matrix::zero(dim, dim);
                for i in 0..dim {
                    for j in 0..dim {
                        out[(i, j)] =
                            RationalFunction::from_rational(m[(i, j)].specialize(q0)?);
                    }
                }
                Ok(out)
            })
            .collect()
    }
}

/// The identity-supported trace functional decomposes over the irreducible
/// characters with inverse hook scalars as coefficients: applied to any
/// inverse basis word, the sum is 1 on the identity and 0 elsewhere.
pub fn check_trace_decomposition(l: usize) -> Result<bool, Error> {
    let reps: Vec<(SeminormalRep, RationalFunction)> = Partition::all(l)
        .into_iter()
        .map(|lam| {
            let h_inv = hook_scalar(&lam).inv()?;
            Ok((build_rep(&lam)?, h_inv))
        })
        .collect::<Result<_, Error>>()?;
    for sigma in Permutation::all(l) {
        let element = AlgebraElement::inv_basis(l, &sigma);
        let mut total = RationalFunction::zero();
        for (rep, h_inv) in &reps {
            total = total.add_ref(&rep.character(&element)?.mul_ref(h_inv));
        }
        let expected = if sigma.is_identity() {
            RationalFunction::one()
        } else {
            RationalFunction::zero()
        };
        if total != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The commuting family acts diagonally with entries q^{2 content}, and the
/// ordered eigenvalue tuples separate the basis vectors.
pub fn check_murphy_diagonal(shape: &Partition) -> Result<bool, Error> {
    let rep = build_rep(shape)?;
    let l = shape.size();
    let mut tuples: Vec<Vec<RationalFunction>> = vec![Vec::new(); rep.dimension()];
    for i in 1..=l {
        let m = rep.represent(&AlgebraElement::murphy(l, i))?;
        if !m.is_diagonal() {
            return Ok(false);
        }
        for (j, tab) in rep.basis().iter().enumerate() {
            let expected = RationalFunction::q_pow(2 * tab.content(i));
            if m[(j, j)] != expected {
                return Ok(false);
            }
            tuples[j].push(expected);
        }
    }
    for a in 0..tuples.len() {
        for b in (a + 1)..tuples.len() {
            if tuples[a] == tuples[b] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Restriction to the subalgebra dropping the last generator: the span of
/// the basis vectors with the largest entry in a fixed removable row is
/// invariant, and the restricted matrices are exactly those of the truncated
/// shape (so the restricted eigenvalue data matches as well).
pub fn check_branching(shape: &Partition) -> Result<bool, Error> {
    let l = shape.size();
    let rep = build_rep(shape)?;
    if l == 1 {
        return Ok(true);
    }
    let mut covered = 0;
    for a in 1..=shape.num_rows() {
        if shape.part(a) <= shape.part(a + 1) {
            continue;
        }
        let block: Vec<usize> = rep
            .basis()
            .iter()
            .enumerate()
            .filter(|(_, t)| t.node(l) == (a, shape.part(a)))
            .map(|(j, _)| j)
            .collect();
        covered += block.len();
        // the truncated shape and its representation
        let (sample, _) = rep.basis()[block[0]].remove_largest();
        let kappa = sample.shape().clone();
        let small = build_rep(&kappa)?;
        let small_index: BTreeMap<Vec<Vec<usize>>, usize> = small
            .basis()
            .iter()
            .enumerate()
            .map(|(i, t)| (t.rows(), i))
            .collect();
        let mapped: Vec<usize> = block
            .iter()
            .map(|&j| small_index[&rep.basis()[j].remove_largest().0.rows()])
            .collect();
        for k in 1..l - 1 {
            let m = rep.generator(k);
            for (pos_j, &j) in block.iter().enumerate() {
                for i in 0..rep.dimension() {
                    let inside = block.iter().position(|&b| b == i);
                    match inside {
                        None => {
                            if !m[(i, j)].is_zero() {
                                return Ok(false);
                            }
                        }
                        Some(pos_i) => {
                            let expected = &small.generator(k)[(mapped[pos_i], mapped[pos_j])];
                            if &m[(i, j)] != expected {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(covered == rep.dimension())
}

/// The abstract matrices agree with the left-ideal model: expanding the left
/// action of each generator on the computed basis elements reproduces the
/// matrix columns exactly, the basis elements are independent, and they all
/// lie in the ideal generated by the column tableau's fused element.
pub fn check_left_ideal_model(shape: &Partition) -> Result<bool, Error> {
    let l = shape.size();
    let rep = build_rep(shape)?;
    let elements: Vec<AlgebraElement> = rep
        .basis()
        .iter()
        .map(seminormal_element)
        .collect::<Result<_, Error>>()?;
    let mut solver = SpanSolver::new();
    for el in &elements {
        if !solver.try_insert(el) {
            return Err(Error::invariant(format!(
                "seminormal elements of shape {shape} are linearly dependent"
            )));
        }
    }
    for k in 1..l {
        let m = rep.generator(k);
        for (j, el) in elements.iter().enumerate() {
            let image = AlgebraElement::gen(l, k).mul(el);
            let Some(coords) = solver.express(&image) else {
                return Err(Error::invariant(format!(
                    "generator image leaves the span for shape {shape}"
                )));
            };
            for (i, c) in coords.iter().enumerate() {
                if c != &m[(i, j)] {
                    return Ok(false);
                }
            }
        }
    }
    // membership in the left ideal of the column tableau's fused element
    let col = StandardTableau::column_tableau(shape);
    let generator = crate::fusion::fused_element(&col)?;
    let mut ideal = SpanSolver::new();
    for sigma in Permutation::all(l) {
        ideal.try_insert(&AlgebraElement::t_word(l, &sigma).mul(&generator));
        if ideal.dimension() == rep.dimension() {
            break;
        }
    }
    if ideal.dimension() != rep.dimension() {
        return Ok(false);
    }
    Ok(elements.iter().all(|el| ideal.contains(el)))
}

/// At q = 1 the generator matrices satisfy the symmetric-group Coxeter
/// relations and the commuting family degenerates to the identity.
pub fn check_coxeter_specialization(shape: &Partition) -> Result<bool, Error> {
    let rep = build_rep(shape)?;
    let l = shape.size();
    let one = big_rat(1, 1);
    let mats = rep.specialize(&one)?;
    let dim = rep.dimension();
    let id = Matrix::identity(dim);
    for m in &mats {
        if m.mul(m) != id {
            return Ok(false);
        }
    }
    for k in 0..mats.len().saturating_sub(1) {
        let a = &mats[k];
        let b = &mats[k + 1];
        if a.mul(b).mul(a) != b.mul(a).mul(b) {
            return Ok(false);
        }
    }
    for i in 0..mats.len() {
        for j in (i + 2)..mats.len() {
            if mats[i].mul(&mats[j]) != mats[j].mul(&mats[i]) {
                return Ok(false);
            }
        }
    }
    for i in 1..=l {
        let m = rep.represent(&AlgebraElement::murphy(l, i))?;
        let mut spec = Matrix::zero(dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                spec[(r, c)] = RationalFunction::from_rational(m[(r, c)].specialize(&one)?);
            }
        }
        if spec != id {
            return Ok(false);
        }
    }
    Ok(true)
}
