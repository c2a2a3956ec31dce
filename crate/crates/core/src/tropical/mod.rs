//! Min-plus forms and tropical hypersurfaces.

mod cells;
mod circuits;
mod extend;

use std::collections::HashSet;

use thiserror::Error;

use crate::arith::{Field, Rational, Val, Valuation};
use crate::exec::Exec;
use crate::poly::{Monomial, Polynomial};

pub use cells::{primitive_direction, Cell, Segment, TropicalComplex};
pub use circuits::circuits_linear;
pub use extend::{extend_point, Interval};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropicalError {
    #[error("cannot tropicalize the zero polynomial")]
    ZeroPolynomial,
    #[error("a tropical form needs at least one term")]
    EmptyForm,
    #[error("exponent {0:?} occurs twice")]
    DuplicateExponent(Vec<i32>),
    #[error("coefficient with infinite valuation")]
    InfiniteWeight,
    #[error("point has {got} coordinates, form has {expected} variables")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cell enumeration supports at most 3 variables, got {0}")]
    UnsupportedDimension(usize),
    #[error("a hypersurface needs at least two terms")]
    TooFewTerms,
    #[error("generator is not affine-linear: {0}")]
    Nonlinear(String),
}

/// `min_α { w_α + ⟨α, x⟩ }` given by its (weight, exponent) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalForm {
    terms: Vec<(Rational, Monomial)>,
}

impl TropicalForm {
    pub fn new(terms: Vec<(Rational, Monomial)>) -> Result<Self, TropicalError> {
        let first = terms.first().ok_or(TropicalError::EmptyForm)?;
        let n = first.1.arity();
        let mut seen = HashSet::new();
        for (_, m) in &terms {
            if m.arity() != n {
                return Err(TropicalError::ArityMismatch { expected: n, got: m.arity() });
            }
            if !seen.insert(m.clone()) {
                return Err(TropicalError::DuplicateExponent(m.exps().to_vec()));
            }
        }
        Ok(TropicalForm { terms })
    }

    pub fn terms(&self) -> &[(Rational, Monomial)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.terms[0].1.arity()
    }

    /// Value of each term at `w`, in term order.
    pub fn term_values(&self, w: &[Rational]) -> Vec<Rational> {
        self.terms
            .iter()
            .map(|(c, m)| {
                let mut v = c.clone();
                for (e, x) in m.exps().iter().zip(w) {
                    if *e != 0 {
                        v += x * Rational::from_integer((*e).into());
                    }
                }
                v
            })
            .collect()
    }

    pub fn value(&self, w: &[Rational]) -> Rational {
        self.term_values(w).into_iter().min().expect("form is nonempty")
    }

    /// Whether the minimum at `w` is attained by at least two terms.
    pub fn contains(&self, w: &[Rational]) -> bool {
        assert_eq!(w.len(), self.arity(), "point dimension");
        let vals = self.term_values(w);
        let min = vals.iter().min().expect("form is nonempty");
        vals.iter().filter(|v| *v == min).count() >= 2
    }
}

/// One (ord(c), exponent) pair per term of `f`.
pub fn tropicalize<F: Field, V: Valuation<F> + ?Sized>(
    f: &Polynomial<F>,
    val: &V,
) -> Result<TropicalForm, TropicalError> {
    if f.is_zero() {
        return Err(TropicalError::ZeroPolynomial);
    }
    let terms = f
        .terms()
        .iter()
        .map(|(m, c)| match val.ord(c) {
            Val::Finite(r) => Ok((r, m.clone())),
            Val::Infinity => Err(TropicalError::InfiniteWeight),
        })
        .collect::<Result<Vec<_>, _>>()?;
    TropicalForm::new(terms)
}

pub fn in_hypersurface(form: &TropicalForm, w: &[Rational]) -> bool {
    form.contains(w)
}

/// Membership in the intersection of the hypersurfaces; true for an empty list.
pub fn member_of_intersection(forms: &[TropicalForm], w: &[Rational]) -> bool {
    forms.iter().all(|f| f.contains(w))
}

/// Membership of many points at once; results follow the input order.
pub fn membership_scan(forms: &[TropicalForm], points: &[Vec<Rational>], exec: Exec) -> Vec<bool> {
    exec.map(points, |w| member_of_intersection(forms, w))
}

/// Regular grid `{lo, lo+step, …, hi}^dim`, lexicographic order.
pub fn grid(dim: usize, lo: &Rational, hi: &Rational, step: &Rational) -> Vec<Vec<Rational>> {
    assert!(num_traits::Signed::is_positive(step), "grid step must be positive");
    let mut axis = Vec::new();
    let mut x = lo.clone();
    while &x <= hi {
        axis.push(x.clone());
        x += step;
    }
    let mut points = vec![Vec::new()];
    for _ in 0..dim {
        points = points
            .into_iter()
            .flat_map(|p| {
                axis.iter().map(move |a| {
                    let mut q = p.clone();
                    q.push(a.clone());
                    q
                })
            })
            .collect();
    }
    points
}
