//! Exact scalar arithmetic: the ground field Q(q) and its extension
//! Q(q)(eps) used transiently for regularized limits.

pub mod epsilon;
pub mod laurent;
pub mod rational;

pub use epsilon::EpsilonFunction;
pub use laurent::LaurentPolynomial;
pub use rational::{big_rat, RationalFunction};

use crate::error::Error;

/// The coefficient fields the algebra engine runs over. Q(q) is the common
/// case; Q(q)(eps) is used only while a fusion limit is being taken.
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Result<Self, Error>;
    /// Embedding of the ground field Q(q).
    fn embed(r: &RationalFunction) -> Self;
}

impl Coefficient for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        RationalFunction::add_ref(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        RationalFunction::sub_ref(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        RationalFunction::mul_ref(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        RationalFunction::neg_ref(self)
    }
    fn inv(&self) -> Result<Self, Error> {
        RationalFunction::inv(self)
    }
    fn embed(r: &RationalFunction) -> Self {
        r.clone()
    }
}

impl Coefficient for EpsilonFunction {
    fn zero() -> Self {
        EpsilonFunction::zero()
    }
    fn one() -> Self {
        EpsilonFunction::one()
    }
    fn is_zero(&self) -> bool {
        EpsilonFunction::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        EpsilonFunction::add_ref(self, rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        EpsilonFunction::sub_ref(self, rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        EpsilonFunction::mul_ref(self, rhs)
    }
    fn neg_ref(&self) -> Self {
        EpsilonFunction::neg_ref(self)
    }
    fn inv(&self) -> Result<Self, Error> {
        EpsilonFunction::inv(self)
    }
    fn embed(r: &RationalFunction) -> Self {
        EpsilonFunction::constant(r.clone())
    }
}
