use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::integral_normalizer;
use super::{ArithError, CoeffText, Rational, Val, Valuation};

/// Dense univariate polynomial in `t` over ℚ, coefficients in ascending degree.
///
/// Invariant: no trailing zero coefficient; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c·t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Rational::zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
            .collect();
        UniPoly::new(c)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by zero polynomial");
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / dl;
            if !c.is_zero() {
                for (j, b) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Text with the coefficients taken as they are, e.g. `2*t^2 - 1`.
    fn text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{k}"),
            };
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

/// An element of ℚ(t) as a reduced fraction with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc { num, den: UniPoly::constant(Rational::one()) });
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let l = den.leading().unwrap().recip();
        Ok(RatFunc { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc { num: p, den: UniPoly::constant(Rational::one()) }
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::from_poly(UniPoly::monomial(Rational::one(), 1))
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.den.is_constant() && self.num.is_constant() {
            Some(self.num.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    /// Numerator and denominator scaled together to integral content one.
    fn integral_parts(&self) -> (UniPoly, UniPoly) {
        let all = self.den.coeffs.iter().rev().chain(self.num.coeffs.iter());
        let s = integral_normalizer(all).abs();
        (self.num.scale(&s), self.den.scale(&s))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let (num, den) = self.integral_parts();
        let wrap = |p: &UniPoly| {
            let atomic = p.term_count() == 1
                && (p.degree() == Some(0) || p.leading().is_some_and(|c| c.abs().is_one()));
            if atomic {
                p.text()
            } else {
                format!("({})", p.text())
            }
        };
        if den.is_constant() && den.leading().is_some_and(One::is_one) {
            write!(f, "{}", num.text())
        } else {
            write!(f, "{}/{}", wrap(&num), wrap(&den))
        }
    }
}

impl super::Field for RatFunc {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::constant(<Rational as One>::one()))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFunc::new(num, self.den.mul(&other.den)).unwrap()
    }
    fn sub(&self, other: &Self) -> Self {
        super::Field::add(self, &super::Field::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }
    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Result<Self, ArithError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    fn from_bigint(n: BigInt) -> Self {
        Self::from_poly(UniPoly::constant(Rational::from_integer(n)))
    }
    fn from_rational(r: &Rational) -> Self {
        Self::from_poly(UniPoly::constant(r.clone()))
    }
    fn scalar_symbol(name: &str) -> Option<Self> {
        (name == "t").then(RatFunc::t)
    }

    fn normalizer(coeffs: &[&Self]) -> Self {
        let nonzero: Vec<&RatFunc> = coeffs.iter().copied().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() {
            return Self::one();
        }
        let mut den_lcm = UniPoly::constant(<Rational as One>::one());
        for c in &nonzero {
            let g = den_lcm.gcd(&c.den);
            den_lcm = den_lcm.mul(&c.den).div_rem(&g).0;
        }
        let polys: Vec<UniPoly> = nonzero
            .iter()
            .map(|c| c.num.mul(&den_lcm.div_rem(&c.den).0))
            .collect();
        let mut g = UniPoly::zero();
        for p in &polys {
            g = g.gcd(p);
        }
        // leading coefficient of the first polynomial decides the sign
        let all = polys
            .iter()
            .flat_map(|p| p.div_rem(&g).0.coeffs.into_iter().rev())
            .collect::<Vec<_>>();
        let s = integral_normalizer(all.iter());
        RatFunc::new(den_lcm.scale(&s), g).unwrap()
    }

    fn coeff_text(&self) -> CoeffText {
        if let Some(r) = self.as_rational() {
            return super::Field::coeff_text(&r);
        }
        let negative = self.num.leading().is_some_and(Signed::is_negative);
        let abs = if negative { super::Field::neg(self) } else { self.clone() };
        CoeffText { negative, body: abs.to_string(), unit: false }
    }
}

/// The t-adic valuation on ℚ(t): lowest exponent of the numerator minus that of the denominator.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TAdic;

impl Valuation<RatFunc> for TAdic {
    fn ord(&self, a: &RatFunc) -> Val {
        match (a.num.low_degree(), a.den.low_degree()) {
            (Some(n), Some(d)) => Val::from_int(n as i64 - d as i64),
            _ => Val::Infinity,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| q(x)).collect())
    }

    #[test]
    fn t_adic_order() {
        // t^2 (1 + t) / t
        let a = RatFunc::new(up(&[0, 0, 1, 1]), up(&[0, 1])).unwrap();
        assert_eq!(TAdic.ord(&a), Val::from_int(1));
        assert_eq!(TAdic.ord(&RatFunc::zero()), Val::Infinity);
        let b = RatFunc::new(up(&[1]), up(&[0, 0, 3])).unwrap();
        assert_eq!(TAdic.ord(&b), Val::from_int(-2));
    }

    #[test]
    fn reduced_form() {
        // (t^2 - 1)/(2t - 2) = (t + 1)/2
        let a = RatFunc::new(up(&[-1, 0, 1]), up(&[-2, 2])).unwrap();
        assert_eq!(a.denom(), &up(&[1]));
        assert_eq!(a.to_string(), "(t + 1)/2");
        let b = RatFunc::new(up(&[1, 0, 1]), up(&[0, 2])).unwrap();
        assert_eq!(b.to_string(), "(t^2 + 1)/(2*t)");
        assert_eq!(RatFunc::t().to_string(), "t");
    }

    #[test]
    fn field_inverse() {
        let a = RatFunc::new(up(&[1, 1]), up(&[0, 1])).unwrap();
        assert!(Field::mul(&a, &a.inv().unwrap()).is_one());
        assert_eq!(RatFunc::zero().inv(), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn normalizer_gives_integral_polys() {
        let a = RatFunc::new(up(&[1]), up(&[0, 2])).unwrap(); // 1/(2t)
        let b = RatFunc::from_poly(up(&[0, 0, 3])); // 3t^2
        let s = RatFunc::normalizer(&[&a, &b]);
        assert_eq!(Field::mul(&a, &s), RatFunc::from_poly(up(&[1])));
        assert_eq!(Field::mul(&b, &s), RatFunc::from_poly(up(&[0, 0, 0, 6])));
    }
}
