use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::Error;
use crate::scalars::rational::RationalFunction;

/// Element of Q(q)(eps): a reduced fraction of polynomials in the limit
/// variable eps with coefficients in Q(q). The tower exists only to carry the
/// regularized fusion limit eps -> 0; everything long-lived collapses back
/// into `RationalFunction`.
#[derive(Clone, PartialEq, Debug)]
pub struct EpsilonFunction {
    // dense in eps, index = power of eps, trailing zeros trimmed
    num: Vec<RationalFunction>,
    den: Vec<RationalFunction>,
}

fn trim(v: &mut Vec<RationalFunction>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn poly_is_zero(v: &[RationalFunction]) -> bool {
    v.is_empty()
}

fn poly_add(a: &[RationalFunction], b: &[RationalFunction]) -> Vec<RationalFunction> {
    let mut out = vec![RationalFunction::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] = out[i].add_ref(c);
    }
    for (i, c) in b.iter().enumerate() {
        out[i] = out[i].add_ref(c);
    }
    trim(&mut out);
    out
}

fn poly_neg(a: &[RationalFunction]) -> Vec<RationalFunction> {
    a.iter().map(|c| c.neg_ref()).collect()
}

fn poly_mul(a: &[RationalFunction], b: &[RationalFunction]) -> Vec<RationalFunction> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![RationalFunction::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add_ref(&ca.mul_ref(cb));
        }
    }
    trim(&mut out);
    out
}

fn poly_scale(a: &[RationalFunction], c: &RationalFunction) -> Vec<RationalFunction> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x.mul_ref(c)).collect()
}

/// Remainder of a modulo b over the field Q(q); b nonzero.
fn poly_rem(a: &[RationalFunction], b: &[RationalFunction]) -> Vec<RationalFunction> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].mul_ref(&lead_inv);
        let off = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[off + j] = r[off + j].sub_ref(&c.mul_ref(bj));
        }
        trim(&mut r);
    }
    r
}

/// Exact quotient a / b (must divide evenly).
fn poly_exact_div(a: &[RationalFunction], b: &[RationalFunction]) -> Vec<RationalFunction> {
    if poly_is_zero(a) {
        return Vec::new();
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut q = vec![RationalFunction::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].mul_ref(&lead_inv);
        let off = dr - db;
        q[off] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            r[off + j] = r[off + j].sub_ref(&c.mul_ref(bj));
        }
        trim(&mut r);
    }
    assert!(poly_is_zero(&r), "inexact eps-polynomial division");
    trim(&mut q);
    q
}

/// Monic gcd over the field Q(q).
fn poly_gcd(a: &[RationalFunction], b: &[RationalFunction]) -> Vec<RationalFunction> {
    let mut u = a.to_vec();
    let mut v = b.to_vec();
    trim(&mut u);
    trim(&mut v);
    while !poly_is_zero(&v) {
        let r = poly_rem(&u, &v);
        u = v;
        v = r;
    }
    if let Some(lead) = u.last().cloned() {
        let inv = lead.inv().expect("nonzero leading coefficient");
        u = poly_scale(&u, &inv);
    }
    u
}

impl EpsilonFunction {
    fn reduced(mut num: Vec<RationalFunction>, mut den: Vec<RationalFunction>) -> Self {
        trim(&mut num);
        trim(&mut den);
        assert!(!poly_is_zero(&den), "zero denominator in eps-function");
        if poly_is_zero(&num) {
            return EpsilonFunction { num, den: vec![RationalFunction::one()] };
        }
        let g = poly_gcd(&num, &den);
        if g.len() > 1 {
            num = poly_exact_div(&num, &g);
            den = poly_exact_div(&den, &g);
        }
        let lead = den.last().expect("nonzero denominator");
        if !lead.is_one() {
            let inv = lead.inv().expect("nonzero leading coefficient");
            num = poly_scale(&num, &inv);
            den = poly_scale(&den, &inv);
        }
        EpsilonFunction { num, den }
    }

    pub fn zero() -> Self {
        EpsilonFunction { num: Vec::new(), den: vec![RationalFunction::one()] }
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    pub fn constant(c: RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        EpsilonFunction { num: vec![c], den: vec![RationalFunction::one()] }
    }

    /// The limit variable itself.
    pub fn eps() -> Self {
        EpsilonFunction {
            num: vec![RationalFunction::zero(), RationalFunction::one()],
            den: vec![RationalFunction::one()],
        }
    }

    /// c0 + c1 * eps
    pub fn linear(c0: RationalFunction, c1: RationalFunction) -> Self {
        let mut num = vec![c0, c1];
        trim(&mut num);
        EpsilonFunction { num, den: vec![RationalFunction::one()] }
    }

    pub fn is_zero(&self) -> bool {
        poly_is_zero(&self.num)
    }

    pub fn is_one(&self) -> bool {
        self.den.len() == 1
            && self.den[0].is_one()
            && self.num.len() == 1
            && self.num[0].is_one()
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let num = poly_add(
            &poly_mul(&self.num, &rhs.den),
            &poly_mul(&rhs.num, &self.den),
        );
        Self::reduced(num, poly_mul(&self.den, &rhs.den))
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        self.add_ref(&rhs.neg_ref())
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        Self::reduced(poly_mul(&self.num, &rhs.num), poly_mul(&self.den, &rhs.den))
    }

    pub fn neg_ref(&self) -> Self {
        EpsilonFunction { num: poly_neg(&self.num), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div_ref(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    /// Value at eps = 0. After reduction a vanishing constant term in the
    /// denominator is a genuine pole.
    pub fn eval_eps_zero(&self) -> Result<RationalFunction, Error> {
        let d0 = self.den.first().cloned().unwrap_or_else(RationalFunction::zero);
        if d0.is_zero() {
            return Err(Error::NotRegular);
        }
        let n0 = self.num.first().cloned().unwrap_or_else(RationalFunction::zero);
        n0.div_ref(&d0)
    }
}

impl fmt::Display for EpsilonFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn poly(v: &[RationalFunction], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if v.is_empty() {
                return write!(f, "0");
            }
            let mut first = true;
            for (i, c) in v.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                match i {
                    0 => write!(f, "({c})")?,
                    1 => write!(f, "({c})*eps")?,
                    _ => write!(f, "({c})*eps^{i}")?,
                }
            }
            Ok(())
        }
        poly(&self.num, f)?;
        if self.den.len() > 1 || !self.den[0].is_one() {
            write!(f, " // ")?;
            poly(&self.den, f)?;
        }
        Ok(())
    }
}

macro_rules! forward_eps_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait for &EpsilonFunction {
            type Output = EpsilonFunction;
            fn $method(self, rhs: &EpsilonFunction) -> EpsilonFunction {
                self.$imp(rhs)
            }
        }
        impl $trait for EpsilonFunction {
            type Output = EpsilonFunction;
            fn $method(self, rhs: EpsilonFunction) -> EpsilonFunction {
                (&self).$imp(&rhs)
            }
        }
    };
}

forward_eps_binop!(Add, add, add_ref);
forward_eps_binop!(Sub, sub, sub_ref);
forward_eps_binop!(Mul, mul, mul_ref);

impl Div for &EpsilonFunction {
    type Output = EpsilonFunction;
    fn div(self, rhs: &EpsilonFunction) -> EpsilonFunction {
        self.div_ref(rhs).expect("division by zero")
    }
}

impl Neg for &EpsilonFunction {
    type Output = EpsilonFunction;
    fn neg(self) -> EpsilonFunction {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::big_rat;

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_integer(n)
    }

    #[test]
    fn apparent_pole_cancels() {
        // ((b2 - b1) eps) / ((b2 - b1) eps) reduces to 1 before evaluation
        let b1 = rf(2);
        let b2 = rf(5);
        let num = EpsilonFunction::linear(RationalFunction::zero(), b2.sub_ref(&b1));
        let x = num.div_ref(&num).unwrap();
        assert_eq!(x.eval_eps_zero().unwrap(), RationalFunction::one());
    }

    #[test]
    fn polynomial_evaluation() {
        // q^2 + 3 eps at eps = 0
        let x = EpsilonFunction::linear(RationalFunction::q_pow(2), rf(3));
        assert_eq!(x.eval_eps_zero().unwrap(), RationalFunction::q_pow(2));
    }

    #[test]
    fn genuine_pole_detected() {
        let x = EpsilonFunction::one().div_ref(&EpsilonFunction::eps()).unwrap();
        assert_eq!(x.eval_eps_zero(), Err(Error::NotRegular));
    }

    #[test]
    fn association_order_is_irrelevant() {
        // product of one simple-pole and one simple-zero factor, multiplied in
        // both association orders against a regular factor
        let pole = EpsilonFunction::one().div_ref(&EpsilonFunction::eps()).unwrap();
        let zero = EpsilonFunction::linear(RationalFunction::zero(), RationalFunction::q_pow(3));
        let regular = EpsilonFunction::linear(rf(7), RationalFunction::from_rational(big_rat(1, 2)));
        let a = pole.mul_ref(&zero).mul_ref(&regular);
        let b = pole.mul_ref(&regular).mul_ref(&zero);
        assert_eq!(a, b);
        assert_eq!(
            a.eval_eps_zero().unwrap(),
            RationalFunction::q_pow(3).mul_ref(&rf(7))
        );
    }
}
