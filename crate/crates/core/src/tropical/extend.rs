use std::fmt;

use num_traits::{One, Zero};

use super::{member_of_intersection, TropicalForm};
use crate::arith::Rational;

/// Closed interval of ℝ; `None` marks an infinite end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Option<Rational>,
    pub hi: Option<Rational>,
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Interval { lo: Some(x.clone()), hi: Some(x) }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo.as_ref().is_none_or(|l| l <= x) && self.hi.as_ref().is_none_or(|h| x <= h)
    }

    /// Some point of the interval.
    pub fn sample(&self) -> Rational {
        match (&self.lo, &self.hi) {
            (Some(l), Some(h)) => (l + h) / Rational::from_integer(2.into()),
            (Some(l), None) => l.clone(),
            (None, Some(h)) => h.clone(),
            (None, None) => Rational::zero(),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.lo, &self.hi) {
            (Some(l), Some(h)) if l == h => write!(f, "{{{l}}}"),
            (lo, hi) => {
                match lo {
                    Some(l) => write!(f, "[{l}, ")?,
                    None => write!(f, "(-inf, ")?,
                }
                match hi {
                    Some(h) => write!(f, "{h}]"),
                    None => write!(f, "inf)"),
                }
            }
        }
    }
}

/// The values `w₀` for which `(w₀, w)` lies on every hypersurface of `forms`
/// (forms in variables `x₀, x₁, …, xₙ`, `w` giving `x₁..xₙ`), as a sorted
/// union of disjoint closed intervals.
///
/// Along the line each term is affine in `w₀`, so membership only changes at
/// points where two term values cross; those breakpoints and one sample in
/// each gap between them decide the whole set.
pub fn extend_point(forms: &[TropicalForm], w: &[Rational]) -> Vec<Interval> {
    let full = |w0: &Rational| -> Vec<Rational> {
        let mut p = Vec::with_capacity(w.len() + 1);
        p.push(w0.clone());
        p.extend_from_slice(w);
        p
    };
    let zero = Rational::zero();
    let mut breaks: Vec<Rational> = Vec::new();
    for form in forms {
        // value = b + a·w₀ per term
        let lines: Vec<(Rational, Rational)> = form
            .terms()
            .iter()
            .zip(form.term_values(&full(&zero)))
            .map(|((_, m), b)| (Rational::from_integer(m.exps()[0].into()), b))
            .collect();
        for (i, (ai, bi)) in lines.iter().enumerate() {
            for (aj, bj) in &lines[i + 1..] {
                if ai != aj {
                    breaks.push((bj - bi) / (ai - aj));
                }
            }
        }
    }
    breaks.sort();
    breaks.dedup();
    let member = |x: &Rational| member_of_intersection(forms, &full(x));

    if breaks.is_empty() {
        return if member(&zero) { vec![Interval { lo: None, hi: None }] } else { Vec::new() };
    }
    let one = Rational::one();
    let two = Rational::from_integer(2.into());
    // pieces in increasing order: gap before breaks[0], breaks[0], gap, breaks[1], …
    let mut pieces: Vec<Interval> = Vec::new();
    let last = breaks.len() - 1;
    if member(&(&breaks[0] - &one)) {
        pieces.push(Interval { lo: None, hi: Some(breaks[0].clone()) });
    }
    for (k, b) in breaks.iter().enumerate() {
        if member(b) {
            pieces.push(Interval::point(b.clone()));
        }
        let gap_sample = if k == last { b + &one } else { (b + &breaks[k + 1]) / &two };
        if member(&gap_sample) {
            let hi = if k == last { None } else { Some(breaks[k + 1].clone()) };
            pieces.push(Interval { lo: Some(b.clone()), hi });
        }
    }
    let mut out: Vec<Interval> = Vec::new();
    for p in pieces {
        if let Some(prev) = out.last_mut() {
            let touches = match (&prev.hi, &p.lo) {
                (Some(h), Some(l)) => l <= h,
                _ => true,
            };
            if touches {
                let extends = match (&prev.hi, &p.hi) {
                    (None, _) => false,
                    (_, None) => true,
                    (Some(a), Some(b)) => b > a,
                };
                if extends {
                    prev.hi = p.hi;
                }
                continue;
            }
        }
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PAdic;
    use crate::poly::{parse_polynomial, Polynomial, Ring};
    use crate::tropical::tropicalize;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn forms(srcs: &[&str], vars: &[&str]) -> Vec<TropicalForm> {
        let ring = Ring::new(vars.iter().copied());
        srcs.iter()
            .map(|s| {
                let f: Polynomial<Rational> = parse_polynomial(s, &ring).unwrap();
                tropicalize(&f, &PAdic::new(2).unwrap()).unwrap()
            })
            .collect()
    }

    #[test]
    fn linear_extension() {
        let b = forms(&["x0-x1-1"], &["x0", "x1"]);
        assert_eq!(extend_point(&b, &[q(5)]), vec![Interval::point(q(0))]);
        assert_eq!(extend_point(&b, &[q(-3)]), vec![Interval::point(q(-3))]);
        // at w₁ = 0 the whole ray w₀ ≥ 0 works
        assert_eq!(extend_point(&b, &[q(0)]), vec![Interval { lo: Some(q(0)), hi: None }]);
    }

    #[test]
    fn binomial_extension() {
        let b = forms(&["x0*x1-1"], &["x0", "x1"]);
        for c in [-4, 0, 3] {
            assert_eq!(extend_point(&b, &[q(c)]), vec![Interval::point(q(-c))]);
        }
    }

    #[test]
    fn infeasible_is_empty() {
        let b = forms(&["x0-x1-1", "x0-2"], &["x0", "x1"]);
        // second form is 0 + w₀ vs 1: needs w₀ = 1; first then needs w₁ ∈ ... at w₁=5: min{1,5,0} once
        assert!(extend_point(&b, &[q(5)]).is_empty());
    }

    #[test]
    fn interval_display() {
        assert_eq!(Interval::point(q(2)).to_string(), "{2}");
        assert_eq!(Interval { lo: None, hi: Some(q(1)) }.to_string(), "(-inf, 1]");
    }
}
