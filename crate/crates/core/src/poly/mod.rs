//! Sparse multivariate (Laurent-capable) polynomials over an exact field.

mod order;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::arith::Field;

pub use order::MonomialOrder;
pub use parse::{parse_polynomial, parse_scalar, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("variable `{0}` is not in the ring")]
    UnknownVariable(String),
    #[error("kernel matrix has {got} columns, ring has {expected} variables")]
    KernelShape { expected: usize, got: usize },
    #[error("variable `{0}` occurs but the target ring drops it")]
    DroppedVariable(String),
}

/// Exponent vector; Laurent polynomials may carry negative entries.
///
/// The derived ordering is lexicographic with index 0 most significant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| i64::from(e)).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, without divisibility check.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// ⟨α, u⟩.
    pub fn dot(&self, u: &[i64]) -> i64 {
        self.0.iter().zip(u).map(|(&a, &b)| i64::from(a) * b).sum()
    }
}

/// Variable names of a polynomial ring; the field is the polynomial's type parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Arc<Ring> {
        Arc::new(Ring { vars: vars.into_iter().map(Into::into).collect() })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// This ring with fresh variables appended; clashing names get a `_` prefix.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        for name in extra {
            let mut name = name.as_ref().to_string();
            while vars.contains(&name) {
                name.insert(0, '_');
            }
            vars.push(name);
        }
        Arc::new(Ring { vars })
    }

    /// The ring on the listed variables, in the given order.
    pub fn sub_ring(&self, keep: &[usize]) -> Arc<Ring> {
        Arc::new(Ring { vars: keep.iter().map(|&i| self.vars[i].clone()).collect() })
    }
}

/// Sparse polynomial with terms kept in descending lex order and no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F> {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: F) -> Self {
        Self::from_terms(ring, [(Monomial::one(ring.arity()), c)])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::from_terms(ring, [(Monomial::var(ring.arity(), i), F::one())])
    }

    /// Collects terms, summing coefficients of equal monomials and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut acc: BTreeMap<Monomial, F> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity differs from ring");
            match acc.get_mut(&m) {
                Some(e) => *e = e.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { ring: ring.clone(), terms }
    }


    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.ring.arity()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Any negative exponent present.
    pub fn is_laurent(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.exps().iter().any(|&e| e < 0))
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.iter().map(|(m, _)| m.clone()).collect()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    /// Leading term under lex.
    pub fn lex_leading(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.exps()[var]).max()
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exps()[var] != 0)
    }

    /// Componentwise minimum exponent over all terms (the largest dividing Laurent monomial).
    pub fn monomial_content(&self) -> Option<Monomial> {
        let mut it = self.terms.iter().map(|(m, _)| m);
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.gcd(m)))
    }

    fn same_ring(&self, other: &Self) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_ring(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a.1.add(&b.1);
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.same_ring(other)?;
        let mut acc: BTreeMap<Monomial, F> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = e.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    fn neg_ref(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(s))).collect(),
        }
    }

    /// Multiplication by a (possibly Laurent) monomial; preserves term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Scales to the field's canonical representative (for ℚ: integral, content one,
    /// positive lex-leading coefficient).
    pub fn normalized(&self) -> Self {
        let coeffs: Vec<&F> = self.terms.iter().map(|(_, c)| c).collect();
        self.scale(&F::normalizer(&coeffs))
    }

    /// Divides out the largest monomial factor and the coefficient content.
    pub fn strip_monomial_content(&self) -> Result<Self, PolyError> {
        let content = self.monomial_content().ok_or(PolyError::ZeroPolynomial)?;
        let inv = Monomial(content.0.iter().map(|e| -e).collect());
        Ok(self.mul_monomial(&inv).normalized())
    }

    /// Substitutes a value for every variable.
    pub fn eval(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.arity());
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                let base = if e < 0 { x.inv().expect("zero raised to a negative power") } else { x.clone() };
                for _ in 0..e.unsigned_abs() {
                    t = t.mul(&base);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to `map[i]`.
    /// Variables mapped to `None` must not occur.
    pub fn remap(&self, target: &Arc<Ring>, map: &[Option<usize>]) -> Result<Self, PolyError> {
        assert_eq!(map.len(), self.arity());
        let n = target.arity();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &x) in m.exps().iter().enumerate() {
                match map[i] {
                    Some(j) => e[j] += x,
                    None if x != 0 => {
                        return Err(PolyError::DroppedVariable(self.ring.vars[i].clone()))
                    }
                    None => {}
                }
            }
            terms.push((Monomial(e), c.clone()));
        }
        Ok(Self::from_terms(target, terms))
    }

    /// Embeds into a ring whose first variables coincide with this ring's.
    pub fn embed_prefix(&self, target: &Arc<Ring>) -> Self {
        let map: Vec<Option<usize>> = (0..self.arity()).map(Some).collect();
        self.remap(target, &map).expect("prefix embedding never drops variables")
    }

    /// Coefficients `c_k` with `self = Σ c_k · x_var^k`, each free of `var`, for k = 0..=deg.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).unwrap_or(0).max(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let k = m.exps()[var];
            assert!(k >= 0, "negative exponent in coefficient extraction");
            let mut e = m.0.clone();
            e[var] = 0;
            buckets[k as usize].push((Monomial(e), c.clone()));
        }
        buckets.into_iter().map(|t| Self::from_terms(&self.ring, t)).collect()
    }

    /// The image under `x_i ↦ x_i · ∏_j λ_j^{u^{(j)}_i}` in the ring extended by the λ's,
    /// i.e. each term `c·x^α` becomes `c·x^α·λ^{Uα}`. The result may be Laurent.
    pub fn extend_exponents(&self, ext: &Arc<Ring>, kernel: &[Vec<i64>]) -> Result<Self, PolyError> {
        let n = self.arity();
        if let Some(row) = kernel.iter().find(|r| r.len() != n) {
            return Err(PolyError::KernelShape { expected: n, got: row.len() });
        }
        assert_eq!(ext.arity(), n + kernel.len(), "extended ring has the wrong arity");
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.0.clone();
            e.extend(kernel.iter().map(|u| m.dot(u) as i32));
            (Monomial(e), c.clone())
        });
        Ok(Self::from_terms(ext, terms))
    }

    /// Multiplies by the smallest λ-monomial (variables from `first_lambda` on) that makes
    /// every λ-exponent nonnegative.
    pub fn clear_laurent_from(&self, first_lambda: usize) -> Self {
        let n = self.arity();
        let mut shift = vec![0; n];
        for (m, _) in &self.terms {
            for j in first_lambda..n {
                shift[j] = shift[j].max(-m.0[j]);
            }
        }
        self.mul_monomial(&Monomial(shift))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    /// Panics on ring mismatch; use [`Polynomial::try_add`] for a checked version.
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.neg_ref()
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let ct = c.coeff_text();
            match (i, ct.negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !ct.unit || m.is_one() {
                factors.push(ct.body);
            }
            for (v, &e) in self.ring.vars.iter().zip(m.exps()) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    fn ring() -> Arc<Ring> {
        Ring::new(["x", "y", "z"])
    }

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s, &ring()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x+y") + &p("x-y"), p("2*x"));
        assert_eq!(&p("x+1") * &p("x-1"), p("x^2-1"));
        assert!((&p("0") * &p("3*x*y + 2")).is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let other = Ring::new(["x", "y"]);
        let q: Polynomial<Rational> = parse_polynomial("x", &other).unwrap();
        assert_eq!(p("x").try_add(&q), Err(PolyError::RingMismatch));
        assert_eq!(p("x").try_mul(&q), Err(PolyError::RingMismatch));
    }

    #[test]
    fn extend_example_kernels() {
        let ext = ring().extended(&["l"]);
        let f = p("2*x+y-4");
        let g = f.extend_exponents(&ext, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(g, parse_polynomial("2*x*l + y*l^2 - 4", &ext).unwrap());

        let g2 = p("x+2*y+z-1").extend_exponents(&ext, &[vec![1, 2, 0]]).unwrap();
        assert_eq!(g2, parse_polynomial("x*l + 2*y*l^2 + z - 1", &ext).unwrap());

        let lau = f.extend_exponents(&ext, &[vec![-1, 0, 0]]).unwrap();
        assert!(lau.is_laurent());
        assert_eq!(lau, parse_polynomial("2*x*l^-1 + y - 4", &ext).unwrap());
        let cleared = lau.clear_laurent_from(3);
        assert_eq!(cleared, parse_polynomial("2*x + y*l - 4*l", &ext).unwrap());
    }

    #[test]
    fn strip_examples() {
        let y = p("y");
        let inner = p("y*z^2+14*y*z+49*y+6*x^2*z+6*x^2");
        assert_eq!((&y * &inner).strip_monomial_content().unwrap(), inner);
        assert_eq!(p("x^2*y").strip_monomial_content().unwrap(), p("1"));
        assert_eq!(p("2*x+2*y").strip_monomial_content().unwrap(), p("x+y"));
        assert_eq!(p("0").strip_monomial_content(), Err(PolyError::ZeroPolynomial));
        assert_eq!(p("-3/2*x*z + 3*z").strip_monomial_content().unwrap(), p("x - 2"));
    }

    #[test]
    fn supports() {
        let s = p("2*x+y-4").support();
        assert_eq!(
            s,
            vec![Monomial::new(vec![1, 0, 0]), Monomial::new(vec![0, 1, 0]), Monomial::new(vec![0, 0, 0])]
        );
        assert!(p("0").support().is_empty());
        let mut s = p("6*x^2+6*x^2*z+49*y+14*y*z+y*z^2").support();
        s.sort();
        let mut want: Vec<Monomial> = [[2, 0, 0], [2, 0, 1], [0, 1, 0], [0, 1, 1], [0, 1, 2]]
            .iter()
            .map(|e| Monomial::new(e.to_vec()))
            .collect();
        want.sort();
        assert_eq!(s, want);
    }

    #[test]
    fn display_is_canonical_text() {
        assert_eq!(p("3*z - 4*y*x^2 - 7").to_string(), "-4*x^2*y + 3*z - 7");
        assert_eq!(p("-x + 1/2").to_string(), "-x + 1/2");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("1").to_string(), "1");
        assert_eq!(p("-1").to_string(), "-1");
    }

    #[test]
    fn coefficients_in_var() {
        let cs = p("y*z^2 + 2*x*z - 4").coefficients_in(2);
        assert_eq!(cs, vec![p("-4"), p("2*x"), p("y")]);
    }
}
