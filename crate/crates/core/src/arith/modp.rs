//! Word-size prime fields and the lifting back to ℚ.
//!
//! Moduli stay below 2³¹, so a product of two residues fits in a `u64`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// `a⁻¹ mod p` for prime `p` and `a ≢ 0`.
pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow(a, p - 2, p)
}

/// Deterministic Miller–Rabin for `n < 2³²`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7, 11, 13] {
        if n % q == 0 {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 7, 61] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below 2³¹ in decreasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..1u64 << 31).rev().filter(|&n| n % 2 == 1 && is_prime(n))
}

fn big_mod(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue below p")
}

/// Image of `r` in `𝔽_p`, or `None` when `p` divides the denominator.
pub fn residue(r: &Rational, p: u64) -> Option<u64> {
    let d = big_mod(r.denom(), p);
    if d == 0 {
        return None;
    }
    Some(mul(big_mod(r.numer(), p), inv(d, p), p))
}

/// Combines `x ≡ a (mod m)` with `x ≡ b (mod p)` into a residue modulo `m·p`,
/// in `[0, m·p)`.
pub fn crt(a: &BigInt, m: &BigInt, b: u64, p: u64) -> BigInt {
    let am = big_mod(a, p);
    let minv = inv(big_mod(m, p), p);
    let k = mul(add(b, neg(am, p), p), minv, p);
    a + m * BigInt::from(k)
}

/// The unique `n/d` with `|n|, d ≤ √(m/2)` and `n ≡ a·d (mod m)`, if any.
pub fn reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        (r0, r1, t0, t1) = (r1, r2, t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    Some(Rational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
        // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(3_215_031_751));
        let ps: Vec<u64> = primes().take(3).collect();
        assert_eq!(ps[0], 2_147_483_647);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn residues_and_inverse() {
        let p = 1_000_003;
        let r = Rational::new((-7).into(), 12.into());
        let x = residue(&r, p).unwrap();
        assert_eq!(mul(x, 12, p), p - 7);
        assert_eq!(residue(&Rational::new(1.into(), p.into()), p), None);
        assert_eq!(mul(inv(123_456, p), 123_456, p), 1);
    }

    #[test]
    fn lift_by_crt() {
        let target = Rational::new(BigInt::from(-123_456_789_012_345i64), BigInt::from(98_765_431u64));
        let mut a = BigInt::zero();
        let mut m = BigInt::one();
        let mut got = None;
        for p in primes().take(6) {
            a = crt(&a, &m, residue(&target, p).unwrap(), p);
            m *= p;
            got = reconstruct(&a, &m);
        }
        assert_eq!(got, Some(target));
        assert_eq!(reconstruct(&BigInt::from(5), &BigInt::from(1_000_003)), Some(Rational::from_integer(5.into())));
    }
}
