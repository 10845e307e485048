use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};
use serde_json::{json, Value};

use crate::error::Error;
use crate::scalars::laurent::LaurentPolynomial;

/// Element of Q(q): a reduced fraction of Laurent polynomials.
///
/// Canonical form: numerator and denominator are coprime after clearing
/// q-powers, the denominator is an ordinary polynomial with nonzero constant
/// term and leading coefficient 1. Structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction { num, den: LaurentPolynomial::one() };
        }
        // push the denominator's q-power into the numerator
        let (sd, mut den) = den.split_shift();
        let mut num = num.shift(-sd);
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g);
            den = den.exact_div(&g);
        }
        let lead = den.leading_coeff().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.mul_scalar(&inv);
            den = den.mul_scalar(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPolynomial::zero(), den: LaurentPolynomial::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: LaurentPolynomial::one(), den: LaurentPolynomial::one() }
    }

    pub fn from_integer(n: i64) -> Self {
        RationalFunction { num: LaurentPolynomial::from_integer(n), den: LaurentPolynomial::one() }
    }

    pub fn from_rational(r: BigRational) -> Self {
        RationalFunction { num: LaurentPolynomial::constant(r), den: LaurentPolynomial::one() }
    }

    pub fn from_polynomial(p: LaurentPolynomial) -> Self {
        RationalFunction { num: p, den: LaurentPolynomial::one() }
    }

    /// q^k
    pub fn q_pow(k: i64) -> Self {
        RationalFunction { num: LaurentPolynomial::q_pow(k), den: LaurentPolynomial::one() }
    }

    /// c * q^k
    pub fn monomial(k: i64, c: BigRational) -> Self {
        RationalFunction { num: LaurentPolynomial::monomial(k, c), den: LaurentPolynomial::one() }
    }

    /// q - q^-1, the recurring structure constant.
    pub fn q_minus_qinv() -> Self {
        Self::from_polynomial(LaurentPolynomial::q_pow(1).sub(&LaurentPolynomial::q_pow(-1)))
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add_ref(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::reduced(num, den)
    }

    pub fn sub_ref(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::reduced(num, den)
    }

    pub fn mul_ref(&self, rhs: &Self) -> Self {
        // cross-cancel before multiplying to keep intermediate degrees low
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = if g1.is_one() { self.num.clone() } else { self.num.exact_div(&g1) };
        let d = if g1.is_one() { rhs.den.clone() } else { rhs.den.exact_div(&g1) };
        let c = if g2.is_one() { rhs.num.clone() } else { rhs.num.exact_div(&g2) };
        let b = if g2.is_one() { self.den.clone() } else { self.den.exact_div(&g2) };
        Self::reduced(a.mul(&c), b.mul(&d))
    }

    pub fn neg_ref(&self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den.clone() }
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

    /// The q -> q^-1 involution.
    pub fn bar(&self) -> Self {
        Self::reduced(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Exact value at a rational point q = q0; errors on a pole (and on q0 = 0
    /// whenever a negative q-power survives reduction).
    pub fn specialize(&self, q0: &BigRational) -> Result<BigRational, Error> {
        let d = self.den.eval(q0)?;
        if d.is_zero() {
            return Err(Error::Pole { point: q0.to_string() });
        }
        Ok(self.num.eval(q0)? / d)
    }

    /// JSON form { "num": [[k, "c"], ...], "den": [[k, "c"], ...] } with
    /// exponents ascending and coefficients as exact rational strings.
    pub fn to_json(&self) -> Value {
        fn poly(p: &LaurentPolynomial) -> Value {
            Value::Array(
                p.terms()
                    .map(|(e, c)| json!([e, c.to_string()]))
                    .collect(),
            )
        }
        json!({ "num": poly(&self.num), "den": poly(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self, Error> {
        fn poly(v: &Value) -> Result<LaurentPolynomial, Error> {
            let arr = v.as_array().ok_or_else(|| Error::argument("expected array of [k, c] pairs"))?;
            let mut p = LaurentPolynomial::zero();
            for item in arr {
                let pair = item.as_array().filter(|a| a.len() == 2).ok_or_else(|| Error::argument("expected [k, c] pair"))?;
                let e = pair[0].as_i64().ok_or_else(|| Error::argument("exponent must be an integer"))?;
                let c: BigRational = pair[1]
                    .as_str()
                    .ok_or_else(|| Error::argument("coefficient must be a string"))?
                    .parse()
                    .map_err(|_| Error::argument("bad rational coefficient"))?;
                p = p.add(&LaurentPolynomial::monomial(e, c));
            }
            Ok(p)
        }
        let num = poly(v.get("num").ok_or_else(|| Error::argument("missing num"))?)?;
        let den = poly(v.get("den").ok_or_else(|| Error::argument("missing den"))?)?;
        Self::new(num, den)
    }

    /// Parse "5", "3/2", "q^3", "q^-2", or "c*q^k".
    pub fn parse(text: &str) -> Result<Self, Error> {
        let s = text.trim();
        let bad = || Error::argument(format!("cannot parse scalar '{s}'"));
        let parse_q = |part: &str| -> Result<i64, Error> {
            if part == "q" {
                Ok(1)
            } else if let Some(e) = part.strip_prefix("q^") {
                e.parse::<i64>().map_err(|_| bad())
            } else {
                Err(bad())
            }
        };
        if let Some((c, qpart)) = s.split_once('*') {
            let coeff: BigRational = c.trim().parse().map_err(|_| bad())?;
            let e = parse_q(qpart.trim())?;
            return Ok(Self::monomial(e, coeff));
        }
        if s.starts_with('q') {
            return Ok(Self::q_pow(parse_q(s)?));
        }
        let r: BigRational = s.parse().map_err(|_| bad())?;
        Ok(Self::from_rational(r))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.num_terms() > 1 {
            write!(f, "({}) / ({})", self.num, self.den)
        } else {
            write!(f, "{} / ({})", self.num, self.den)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$imp(rhs)
            }
        }
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.div_ref(rhs).expect("division by zero")
    }
}

impl Div for RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: RationalFunction) -> RationalFunction {
        (&self).div(&rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_ref()
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        (&self).neg_ref()
    }
}

pub fn big_rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RationalFunction {
        RationalFunction::q_pow(1)
    }

    #[test]
    fn cancellation_to_monomial() {
        // (q - q^-1) / (q^2 - 1) = q^-1
        let num = &q() - &RationalFunction::q_pow(-1);
        let den = &RationalFunction::q_pow(2) - &RationalFunction::one();
        let r = num / den;
        assert_eq!(r, RationalFunction::q_pow(-1));
    }

    #[test]
    fn additive_identity() {
        let x = (&q() + &RationalFunction::from_integer(3)) / (&RationalFunction::q_pow(2) + &RationalFunction::from_integer(1));
        assert_eq!(&x + &RationalFunction::zero(), x);
    }

    #[test]
    fn polynomial_product() {
        let a = &RationalFunction::q_pow(2) - &RationalFunction::one();
        let b = &RationalFunction::q_pow(2) + &RationalFunction::one();
        assert_eq!(&a * &b, &RationalFunction::q_pow(4) - &RationalFunction::one());
    }

    #[test]
    fn bar_negates_exponents() {
        let x = &RationalFunction::q_pow(2) + &RationalFunction::q_pow(-1);
        let y = &RationalFunction::q_pow(-2) + &RationalFunction::q_pow(1);
        assert_eq!(x.bar(), y);
        assert_eq!(RationalFunction::one().bar(), RationalFunction::one());
    }

    #[test]
    fn bar_is_involutive_on_fractions() {
        let x = (&q() + &RationalFunction::from_integer(2))
            / (&RationalFunction::q_pow(3) - &RationalFunction::from_integer(5));
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn specialization() {
        // 1 + q^-2 at q = 1 is 2 (hook product of the one-row shape of size 2)
        let x = &RationalFunction::one() + &RationalFunction::q_pow(-2);
        assert_eq!(x.specialize(&big_rat(1, 1)).unwrap(), big_rat(2, 1));
        assert_eq!(q().specialize(&big_rat(5, 1)).unwrap(), big_rat(5, 1));
        let pole = RationalFunction::one() / (&q() - &RationalFunction::one());
        assert!(matches!(pole.specialize(&big_rat(1, 1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn inverse_of_zero_rejected() {
        assert_eq!(RationalFunction::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn json_round_trip() {
        let x = (&q() + &RationalFunction::monomial(-2, big_rat(3, 2)))
            / (&RationalFunction::q_pow(2) - &RationalFunction::from_integer(7));
        let v = x.to_json();
        assert_eq!(RationalFunction::from_json(&v).unwrap(), x);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(RationalFunction::parse("5").unwrap(), RationalFunction::from_integer(5));
        assert_eq!(RationalFunction::parse("3/2").unwrap(), RationalFunction::from_rational(big_rat(3, 2)));
        assert_eq!(RationalFunction::parse("q^-2").unwrap(), RationalFunction::q_pow(-2));
        assert_eq!(
            RationalFunction::parse("2*q^3").unwrap(),
            RationalFunction::monomial(3, big_rat(2, 1))
        );
    }
}
