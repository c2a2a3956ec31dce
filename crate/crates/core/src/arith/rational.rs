use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, CoeffText, Rational, Val, Valuation};

/// The p-adic valuation on ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdic {
    p: BigInt,
}

impl PAdic {
    pub fn new(p: impl Into<BigInt>) -> Result<Self, ArithError> {
        let p = p.into();
        if !is_prime(&p) {
            return Err(ArithError::NotPrime(p));
        }
        Ok(PAdic { p })
    }

    pub fn prime(&self) -> &BigInt {
        &self.p
    }
}

impl Valuation<Rational> for PAdic {
    fn ord(&self, a: &Rational) -> Val {
        ord_p(a, &self.p)
    }
}

fn is_prime(p: &BigInt) -> bool {
    if p < &BigInt::from(2) {
        return false;
    }
    let mut d = BigInt::from(2);
    while &d * &d <= *p {
        if (p % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

fn multiplicity(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return k;
        }
        n = q;
        k += 1;
    }
}

/// The exponent of `p` in `a`; `Infinity` for zero.
pub fn ord_p(a: &Rational, p: &BigInt) -> Val {
    if a.is_zero() {
        return Val::Infinity;
    }
    let k = multiplicity(a.numer(), p) - multiplicity(a.denom(), p);
    Val::from_int(k)
}

/// Parses `n` or `n/d` with optional leading sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub(super) fn integral_normalizer<'a>(coeffs: impl Iterator<Item = &'a Rational>) -> Rational {
    let mut den_lcm = BigInt::one();
    let mut num_gcd = BigInt::zero();
    let mut first_negative = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        if first_negative.is_none() {
            first_negative = Some(c.is_negative());
        }
        den_lcm = den_lcm.lcm(c.denom());
        num_gcd = num_gcd.gcd(c.numer());
    }
    if num_gcd.is_zero() {
        return Rational::one();
    }
    let s = Rational::new(den_lcm, num_gcd);
    if first_negative == Some(true) {
        -s
    } else {
        s
    }
}

pub(super) fn coeff_text(c: &Rational) -> CoeffText {
    let abs = c.abs();
    CoeffText {
        negative: c.is_negative(),
        unit: abs.is_one(),
        body: abs.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Field;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn two_adic_orders() {
        let v = PAdic::new(2).unwrap();
        assert_eq!(v.ord(&q(4, 1)), Val::from_int(2));
        assert_eq!(v.ord(&q(3, 8)), Val::from_int(-3));
        assert_eq!(v.ord(&q(0, 1)), Val::Infinity);
        assert_eq!(v.ord(&q(49, 1)), Val::from_int(0));
        assert_eq!(v.ord(&q(-12, 5)), Val::from_int(2));
    }

    #[test]
    fn rejects_non_prime() {
        assert!(PAdic::new(4).is_err());
        assert!(PAdic::new(1).is_err());
        assert!(PAdic::new(7).is_ok());
    }

    #[test]
    fn field_ops() {
        assert_eq!(Field::add(&q(1, 2), &q(1, 2)), q(1, 1));
        assert_eq!(Field::mul(&q(3, 4), &q(4, 3)), q(1, 1));
        assert_eq!(Field::inv(&q(0, 1)), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn normalizer_clears_denominators() {
        let cs = [q(-1, 2), q(3, 4), q(1, 6)];
        let s = Rational::normalizer(&cs.iter().collect::<Vec<_>>());
        let scaled: Vec<_> = cs.iter().map(|c| c * &s).collect();
        assert_eq!(scaled, vec![q(6, 1), q(-9, 1), q(-2, 1)]);
    }

    #[test]
    fn parse_print_round_trip() {
        for s in ["3", "-7/4", "0", "12/8"] {
            let a = parse_rational(s).unwrap();
            assert_eq!(parse_rational(&a.to_string()).unwrap(), a);
        }
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
    }
}
