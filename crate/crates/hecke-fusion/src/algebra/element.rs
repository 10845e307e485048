use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::combinatorics::Permutation;
use crate::error::Error;
use crate::scalars::{Coefficient, RationalFunction};

/// Element of the rank-l Hecke algebra in normal form: a finitely supported
/// map from basis words T_sigma to scalars. Zero coefficients are never
/// stored, so structural equality is algebra equality.
///
/// The scalar type is generic so the same engine runs over Q(q) and over
/// Q(q)(eps) while a limit is being taken.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraElement<S: Coefficient = RationalFunction> {
    rank: usize,
    terms: BTreeMap<Permutation, S>,
}

impl<S: Coefficient> AlgebraElement<S> {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement { rank, terms: BTreeMap::new() }
    }

    pub fn unit(rank: usize) -> Self {
        Self::term(rank, Permutation::identity(rank), S::one())
    }

    /// A single T_sigma with the given coefficient.
    pub fn term(rank: usize, sigma: Permutation, coeff: S) -> Self {
        assert_eq!(sigma.degree(), rank, "permutation degree must equal rank");
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(sigma, coeff);
        }
        AlgebraElement { rank, terms }
    }

    /// The generator T_i, 1 <= i <= rank-1.
    pub fn gen(rank: usize, i: usize) -> Self {
        Self::term(rank, Permutation::adjacent(rank, i), S::one())
    }

    /// T_i^{-1} = T_i - q + q^{-1}.
    pub fn inv_gen(rank: usize, i: usize) -> Self {
        let c = S::embed(&RationalFunction::q_pow(-1).sub_ref(&RationalFunction::q_pow(1)));
        Self::gen(rank, i).add(&Self::term(rank, Permutation::identity(rank), c))
    }

    pub fn scalar(rank: usize, coeff: S) -> Self {
        Self::term(rank, Permutation::identity(rank), coeff)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, sigma: &Permutation) -> S {
        self.terms.get(sigma).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &S)> {
        self.terms.iter()
    }

    /// Support ordered by (word length, one-line lexicographic).
    pub fn support_sorted(&self) -> Vec<&Permutation> {
        let mut v: Vec<&Permutation> = self.terms.keys().collect();
        v.sort_by_key(|p| (p.length(), p.one_line().to_vec()));
        v
    }

    fn add_term(&mut self, sigma: Permutation, coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&sigma) {
            Some(c) => {
                let s = c.add_ref(&coeff);
                if s.is_zero() {
                    self.terms.remove(&sigma);
                } else {
                    *c = s;
                }
            }
            None => {
                self.terms.insert(sigma, coeff);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (p, c) in rhs.terms.iter() {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        AlgebraElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(p, k)| (p.clone(), k.mul_ref(c))).collect(),
        }
    }

    /// Right multiplication by T_i: T_sigma T_i is T_{sigma sigma_i} when the
    /// length goes up, and T_{sigma sigma_i} + (q - q^-1) T_sigma otherwise.
    pub fn mul_gen_right(&self, i: usize) -> Self {
        let u = S::embed(&RationalFunction::q_minus_qinv());
        let mut out = Self::zero(self.rank);
        for (p, c) in self.terms.iter() {
            let swapped = p.mul_adjacent_right(i);
            if p.right_ascent(i) {
                out.add_term(swapped, c.clone());
            } else {
                out.add_term(swapped, c.clone());
                out.add_term(p.clone(), c.mul_ref(&u));
            }
        }
        out
    }

    /// Left multiplication by T_i.
    pub fn mul_gen_left(&self, i: usize) -> Self {
        let u = S::embed(&RationalFunction::q_minus_qinv());
        let mut out = Self::zero(self.rank);
        for (p, c) in self.terms.iter() {
            let swapped = p.mul_adjacent_left(i);
            if p.left_ascent(i) {
                out.add_term(swapped, c.clone());
            } else {
                out.add_term(swapped, c.clone());
                out.add_term(p.clone(), c.mul_ref(&u));
            }
        }
        out
    }

    /// Right multiplication by T_i^{-1} = T_i - q + q^{-1}.
    pub fn mul_inv_gen_right(&self, i: usize) -> Self {
        let c = S::embed(&RationalFunction::q_pow(-1).sub_ref(&RationalFunction::q_pow(1)));
        self.mul_gen_right(i).add(&self.scale(&c))
    }

    /// Right multiplication by the word T_{i_1} ... T_{i_k} (need not be
    /// reduced; the quadratic relation is applied on the fly).
    pub fn mul_word_right(&self, word: &[usize]) -> Self {
        let mut acc = self.clone();
        for &i in word {
            acc = acc.mul_gen_right(i);
        }
        acc
    }

    /// General product, expanding the right factor word by word. Prefixes of
    /// basis words are shared through a memo keyed by the word.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut memo: BTreeMap<Permutation, AlgebraElement<S>> = BTreeMap::new();
        memo.insert(Permutation::identity(self.rank), self.clone());
        let mut out = Self::zero(self.rank);
        for (p, c) in rhs.terms.iter() {
            let prod = Self::word_product(&mut memo, p);
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Checked variant of `mul` for rank mismatches coming from user input.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch { left: self.rank, right: rhs.rank });
        }
        Ok(self.mul(rhs))
    }

    fn word_product(memo: &mut BTreeMap<Permutation, AlgebraElement<S>>, sigma: &Permutation) -> AlgebraElement<S> {
        if let Some(hit) = memo.get(sigma) {
            return hit.clone();
        }
        let i = sigma.first_right_descent().expect("non-identity word has a descent");
        let shorter = sigma.mul_adjacent_right(i);
        let prod = Self::word_product(memo, &shorter).mul_gen_right(i);
        memo.insert(sigma.clone(), prod.clone());
        prod
    }

    /// T_sigma, well defined independently of the reduced word chosen.
    pub fn t_word(rank: usize, sigma: &Permutation) -> Self {
        assert_eq!(sigma.degree(), rank);
        Self::term(rank, sigma.clone(), S::one())
    }

    /// T_sigma^{-1}, built from the reversed reduced word.
    pub fn inv_basis(rank: usize, sigma: &Permutation) -> Self {
        let mut word = sigma.reduced_word();
        word.reverse();
        let mut out = Self::unit(rank);
        for &i in word.iter() {
            out = out.mul_inv_gen_right(i);
        }
        out
    }

    /// The commuting family X_i = T_{i-1} ... T_1 T_1 ... T_{i-1}; X_1 = 1.
    pub fn murphy(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        let mut word: Vec<usize> = (1..i).rev().collect();
        word.extend(1..i);
        Self::unit(rank).mul_word_right(&word)
    }

    /// X_i^{-1}.
    pub fn murphy_inverse(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        let mut word: Vec<usize> = (1..i).rev().collect();
        word.extend(1..i);
        let mut out = Self::unit(rank);
        for &j in word.iter().rev() {
            out = out.mul_inv_gen_right(j);
        }
        out
    }

    /// The involutive antiautomorphism fixing every generator: T_sigma maps
    /// to T_{sigma^{-1}}, coefficients untouched.
    pub fn antiauto(&self) -> Self {
        AlgebraElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(p, c)| (p.inverse(), c.clone())).collect(),
        }
    }

    /// Image under the embedding into a larger rank fixing the generators.
    pub fn embed_low(&self, big: usize) -> Result<Self, Error> {
        if big < self.rank {
            return Err(Error::BadRank { detail: format!("cannot embed rank {} into {}", self.rank, big) });
        }
        Ok(AlgebraElement {
            rank: big,
            terms: self.terms.iter().map(|(p, c)| (p.pad(big), c.clone())).collect(),
        })
    }

    /// Image under the shift embedding T_i -> T_{i+offset}.
    pub fn embed_shift(&self, offset: usize, big: usize) -> Result<Self, Error> {
        if big < self.rank + offset {
            return Err(Error::BadRank {
                detail: format!("cannot shift rank {} by {} into {}", self.rank, offset, big),
            });
        }
        Ok(AlgebraElement {
            rank: big,
            terms: self.terms.iter().map(|(p, c)| (p.shift(offset, big), c.clone())).collect(),
        })
    }

    pub fn map_coefficients<T: Coefficient>(
        &self,
        mut f: impl FnMut(&S) -> Result<T, Error>,
    ) -> Result<AlgebraElement<T>, Error> {
        let mut terms = BTreeMap::new();
        for (p, c) in self.terms.iter() {
            let mapped = f(c)?;
            if !mapped.is_zero() {
                terms.insert(p.clone(), mapped);
            }
        }
        Ok(AlgebraElement { rank: self.rank, terms })
    }

    /// Coefficients in the basis of inverse words T_sigma^{-1}. The change of
    /// basis is triangular: T_sigma^{-1} = T_{sigma^{-1}} + shorter words, so
    /// the longest surviving word tau is cleared by T_{tau^{-1}}^{-1}.
    pub fn expand_inverse_basis(&self) -> BTreeMap<Permutation, S> {
        let mut rest = self.clone();
        let mut out = BTreeMap::new();
        while !rest.is_zero() {
            let tau = rest
                .terms
                .keys()
                .max_by_key(|p| (p.length(), p.one_line().to_vec()))
                .expect("nonzero element")
                .clone();
            let c = rest.coefficient(&tau);
            let label = tau.inverse();
            rest = rest.sub(&Self::inv_basis(self.rank, &label).scale(&c));
            out.insert(label, c);
        }
        out
    }

    /// JSON form { "rank": l, "terms": [{ "perm": [...], "coeff": ... }] },
    /// terms sorted by (length, lexicographic one-line).
    pub fn to_json_with(&self, coeff_json: impl Fn(&S) -> Value) -> Value {
        let terms: Vec<Value> = self
            .support_sorted()
            .into_iter()
            .map(|p| {
                json!({
                    "perm": p.one_line(),
                    "coeff": coeff_json(&self.terms[p]),
                })
            })
            .collect();
        json!({ "rank": self.rank, "terms": terms })
    }
}

impl AlgebraElement<RationalFunction> {
    /// The ring automorphism over Q sending q to q^-1 and each generator to
    /// its negative; basis words pick up (-1)^{length}.
    pub fn bar_negate(&self) -> Self {
        AlgebraElement {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| {
                    let b = c.bar();
                    let signed = if p.length() % 2 == 1 { b.neg_ref() } else { b };
                    (p.clone(), signed)
                })
                .collect(),
        }
    }

    /// Coefficient-wise value at q = q0 as an exact rational combination;
    /// errors if any coefficient has a pole there.
    pub fn specialize_q(&self, q0: &num::BigRational) -> Result<BTreeMap<Permutation, num::BigRational>, Error> {
        let mut out = BTreeMap::new();
        for (p, c) in self.terms.iter() {
            let v = c.specialize(q0)?;
            if !num::Zero::is_zero(&v) {
                out.insert(p.clone(), v);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        self.to_json_with(|c| c.to_json())
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        let rank = v
            .get("rank")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::argument("missing rank"))? as usize;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::argument("missing terms"))?;
        let mut out = Self::zero(rank);
        for t in terms {
            let perm: Vec<usize> = t
                .get("perm")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::argument("missing perm"))?
                .iter()
                .map(|x| x.as_u64().map(|v| v as usize).ok_or_else(|| Error::argument("bad perm entry")))
                .collect::<Result<_, _>>()?;
            let sigma = Permutation::from_one_line(perm)?;
            if sigma.degree() != rank {
                return Err(Error::RankMismatch { left: sigma.degree(), right: rank });
            }
            let coeff = RationalFunction::from_json(
                t.get("coeff").ok_or_else(|| Error::argument("missing coeff"))?,
            )?;
            out.add_term(sigma, coeff);
        }
        Ok(out)
    }
}

impl<S: Coefficient> fmt::Display for AlgebraElement<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for p in self.support_sorted() {
            let c = &self.terms[p];
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if p.is_identity() {
                write!(f, "({c})")?;
            } else {
                let word = p.reduced_word();
                let word_str: Vec<String> = word.iter().map(|i| format!("T{i}")).collect();
                write!(f, "({c})*{}", word_str.join("."))?;
            }
        }
        Ok(())
    }
}
