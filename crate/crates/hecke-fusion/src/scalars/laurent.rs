use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::Error;

/// Laurent polynomial in q with exact rational coefficients.
///
/// Stored as a map from exponent to coefficient; zero coefficients are never
/// kept, so structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// c * q^k
    pub fn monomial(exp: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPolynomial { terms }
    }

    /// q^k
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, BigRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms.iter() {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in self.terms.iter() {
            for (eb, cb) in rhs.terms.iter() {
                // exponents stay tiny in this application; overflow is a bug
                let e = ea.checked_add(*eb).expect("q-exponent overflow");
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Multiply by q^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.checked_add(k).expect("q-exponent overflow"), c.clone()))
                .collect(),
        }
    }

    /// The q -> q^-1 substitution.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Exact evaluation at a nonzero rational point (zero is allowed when no
    /// negative exponents are present).
    pub fn eval(&self, point: &BigRational) -> Result<BigRational, Error> {
        let mut acc = BigRational::zero();
        for (e, c) in self.terms.iter() {
            if *e < 0 && point.is_zero() {
                return Err(Error::Pole { point: point.to_string() });
            }
            acc += c * rational_pow(point, *e);
        }
        Ok(acc)
    }

    /// Split off the smallest power of q: self = q^shift * p with p an
    /// ordinary polynomial whose constant term is nonzero. Zero maps to
    /// (0, zero).
    pub fn split_shift(&self) -> (i64, LaurentPolynomial) {
        match self.min_exp() {
            None => (0, Self::zero()),
            Some(s) => (s, self.shift(-s)),
        }
    }

    /// Dense coefficient vector of an ordinary polynomial (min exponent 0).
    fn dense(&self) -> Vec<BigRational> {
        debug_assert!(self.min_exp().map(|m| m >= 0).unwrap_or(true));
        let deg = self.max_exp().unwrap_or(0);
        let mut v = vec![BigRational::zero(); (deg + 1) as usize];
        for (e, c) in self.terms.iter() {
            v[*e as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: &[BigRational]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
    }

    /// Exact division; panics if the division is not exact (callers only
    /// divide by known factors).
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        let (sa, a) = self.split_shift();
        let (sb, b) = divisor.split_shift();
        let mut rem = a.dense();
        let den = b.dense();
        let dd = den.len() - 1;
        let lead = den[dd].clone();
        assert!(rem.len() >= den.len(), "inexact polynomial division");
        let qdeg = rem.len() - den.len();
        let mut quot = vec![BigRational::zero(); qdeg + 1];
        for i in (0..=qdeg).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in den.iter().enumerate() {
                    let t = &c * d;
                    rem[i + j] -= t;
                }
            }
            quot[i] = c;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::from_dense(&quot).shift(sa - sb)
    }

    /// Primitive gcd of the underlying ordinary polynomials (q-power factors
    /// discarded). Result is primitive over Z with positive leading
    /// coefficient; gcd with zero returns the other argument made primitive.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let a = self.to_int_primitive();
        let b = other.to_int_primitive();
        let g = int_poly_gcd(a, b);
        Self::from_terms(
            g.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64, BigRational::from_integer(c))),
        )
    }

    fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let v = self.to_int_primitive();
        Self::from_terms(
            v.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64, BigRational::from_integer(c))),
        )
    }

    /// Clear the q-power and denominators, divide by integer content. The
    /// leading coefficient of the result is positive.
    fn to_int_primitive(&self) -> Vec<BigInt> {
        let (_, p) = self.split_shift();
        let dense = p.dense();
        let mut lcm = BigInt::one();
        for c in dense.iter() {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
        let mut v: Vec<BigInt> = dense.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let mut content = BigInt::zero();
        for c in v.iter() {
            content = num::integer::gcd(content, c.clone());
        }
        if !content.is_zero() {
            for c in v.iter_mut() {
                *c /= &content;
            }
        }
        if v.last().map(|c| c.is_negative()).unwrap_or(false) {
            for c in v.iter_mut() {
                *c = -c.clone();
            }
        }
        v
    }
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let mut acc = BigRational::one();
    let b = if exp > 0 { base.clone() } else { base.recip() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn int_content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = num::integer::gcd(g, c.clone());
    }
    g
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim_int(&mut v);
    let content = int_content(&v);
    if !content.is_zero() && !content.is_one() {
        for c in v.iter_mut() {
            *c /= &content;
        }
    }
    if v.last().map(|c| c.is_negative()).unwrap_or(false) {
        for c in v.iter_mut() {
            *c = -c.clone();
        }
    }
    v
}

/// Pseudo-remainder of a by b (both nonzero, deg a >= deg b).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let c = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lead;
        }
        let off = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[off + j] -= &c * bj;
        }
        trim_int(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Primitive polynomial remainder sequence over Z.
fn int_poly_gcd(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let mut u = make_primitive(a);
    let mut v = make_primitive(b);
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = make_primitive(pseudo_rem(&u, &v));
        u = v;
        v = r;
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
    }
    u
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}
