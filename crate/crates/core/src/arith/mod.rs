//! Exact coefficient fields carrying a non-trivial real valuation.
//!
//! Two instances are provided: the rationals with a p-adic valuation
//! ([`PAdic`]) and the rational function field ℚ(t) with the t-adic
//! valuation ([`TAdic`]). Valuation values are exact rationals.

pub mod modp;
mod ratfunc;
mod rational;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use ratfunc::{RatFunc, TAdic, UniPoly};
pub use rational::{ord_p, parse_rational, PAdic};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a prime")]
    NotPrime(BigInt),
}

/// A value of `ord`: a finite rational or `∞` (only for zero).
///
/// The derived ordering places every finite value below `Infinity`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Val {
    Finite(Rational),
    Infinity,
}

impl Val {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Val::Infinity)
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Val::Finite(r) => Some(r),
            Val::Infinity => None,
        }
    }

    pub fn add(&self, other: &Val) -> Val {
        match (self, other) {
            (Val::Finite(a), Val::Finite(b)) => Val::Finite(a + b),
            _ => Val::Infinity,
        }
    }

    pub fn from_int(i: i64) -> Val {
        Val::Finite(Rational::from_integer(i.into()))
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Finite(r) => write!(f, "{r}"),
            Val::Infinity => write!(f, "inf"),
        }
    }
}

/// How a coefficient renders inside a product such as `3*x^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffText {
    pub negative: bool,
    /// Text of the absolute value, safe to place before `*`.
    pub body: String,
    /// The absolute value is one, so the body may be omitted in front of a monomial.
    pub unit: bool,
}

/// An exact field usable as the coefficient domain of polynomials.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, ArithError>;

    fn div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&other.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn from_bigint(n: BigInt) -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(n.into())
    }

    /// Constant symbols that belong to the field itself (`t` for ℚ(t)).
    fn scalar_symbol(_name: &str) -> Option<Self> {
        None
    }

    /// The nonzero scalar `s` such that `s·c` for the given coefficients is
    /// canonical: integral, content one, and the first coefficient positive.
    /// Coefficients are passed in the order whose first entry is the leading one.
    fn normalizer(coeffs: &[&Self]) -> Self;

    fn coeff_text(&self) -> CoeffText;

    /// Image in `𝔽_p`, when the field maps there; enables modular shortcuts.
    fn residue(&self, _p: u64) -> Option<u64> {
        None
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, ArithError> {
        if Zero::is_zero(self) {
            Err(ArithError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn from_bigint(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn normalizer(coeffs: &[&Self]) -> Self {
        rational::integral_normalizer(coeffs.iter().copied())
    }
    fn coeff_text(&self) -> CoeffText {
        rational::coeff_text(self)
    }
    fn residue(&self, p: u64) -> Option<u64> {
        modp::residue(self, p)
    }
}

/// A real valuation `ord` on a field.
pub trait Valuation<F: Field>: Send + Sync {
    fn ord(&self, a: &F) -> Val;
}
