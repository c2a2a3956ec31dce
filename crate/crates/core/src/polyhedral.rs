//! Exact polyhedra in low dimension.
//!
//! Constraints have the form `a·x + b (=, ≤, <) 0` over ℚ. Feasibility uses
//! Fourier–Motzkin elimination with strictness tracking and back-substitution
//! for a witness point; this is adequate for the handful of variables that
//! tropical cells in ℝ³ involve. [`in_convex_hull`] uses a dense exact simplex
//! instead, since hull membership has one unknown per point.

use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::linalg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Eq,
    Le,
    Lt,
}

/// `coeffs · x + constant  rel  0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub rel: Rel,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, constant: Rational, rel: Rel) -> Self {
        Constraint { coeffs, constant, rel }
    }

    pub fn value(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum::<Rational>() + &self.constant
    }

    pub fn holds(&self, x: &[Rational]) -> bool {
        let v = self.value(x);
        match self.rel {
            Rel::Eq => v.is_zero(),
            Rel::Le => !v.is_positive(),
            Rel::Lt => v.is_negative(),
        }
    }

    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// For a constraint without variables: whether it is satisfied.
    fn constant_holds(&self) -> bool {
        let v = &self.constant;
        match self.rel {
            Rel::Eq => v.is_zero(),
            Rel::Le => !v.is_positive(),
            Rel::Lt => v.is_negative(),
        }
    }

    fn scaled(&self, s: &Rational) -> Constraint {
        Constraint {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
            constant: &self.constant * s,
            rel: self.rel,
        }
    }

    /// Scale so the first nonzero coefficient has absolute value one (sign kept
    /// for inequalities).
    fn canonical(&self) -> Constraint {
        let lead = self.coeffs.iter().chain(std::iter::once(&self.constant)).find(|c| !c.is_zero());
        match lead {
            Some(l) => {
                let mut s = l.abs().recip();
                if self.rel == Rel::Eq && l.is_negative() {
                    s = -s;
                }
                self.scaled(&s)
            }
            None => self.clone(),
        }
    }

    fn negated(&self) -> Constraint {
        self.scaled(&-Rational::one())
    }
}

/// Replaces variable `k` using equality `eq` (coefficient of `k` nonzero) in `c`.
fn substitute(c: &Constraint, eq: &Constraint, k: usize) -> Constraint {
    if c.coeffs[k].is_zero() {
        return c.clone();
    }
    let f = &c.coeffs[k] / &eq.coeffs[k];
    let coeffs = c.coeffs.iter().zip(&eq.coeffs).map(|(a, b)| a - &f * b).collect();
    Constraint { coeffs, constant: &c.constant - &f * &eq.constant, rel: c.rel }
}

enum Step {
    /// `x_k` determined by an equality.
    Solved { k: usize, eq: Constraint },
    /// `x_k` eliminated by Fourier–Motzkin; bounds recorded.
    Bounded { k: usize, bounds: Vec<Constraint> },
}

fn dedup(cs: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let mut out: Vec<Constraint> = Vec::new();
    for c in cs {
        if c.is_trivial() {
            if !c.constant_holds() {
                return None;
            }
            continue;
        }
        let c = c.canonical();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Some(out)
}

/// Eliminates `vars` from the system; returns the projected system and the
/// elimination record, or `None` if the system is infeasible.
fn eliminate(mut cs: Vec<Constraint>, vars: &[usize]) -> Option<(Vec<Constraint>, Vec<Step>)> {
    let mut steps = Vec::new();
    cs = dedup(cs)?;
    for &k in vars {
        if let Some(pos) = cs.iter().position(|c| c.rel == Rel::Eq && !c.coeffs[k].is_zero()) {
            let eq = cs.remove(pos);
            cs = dedup(cs.iter().map(|c| substitute(c, &eq, k)).collect())?;
            steps.push(Step::Solved { k, eq });
            continue;
        }
        let (with, without): (Vec<_>, Vec<_>) = cs.into_iter().partition(|c| !c.coeffs[k].is_zero());
        let upper: Vec<&Constraint> = with.iter().filter(|c| c.coeffs[k].is_positive()).collect();
        let lower: Vec<&Constraint> = with.iter().filter(|c| c.coeffs[k].is_negative()).collect();
        let mut next = without;
        for u in &upper {
            for l in &lower {
                // u: a x_k + r ≤ 0 (a > 0), l: b x_k + s ≤ 0 (b < 0)
                let a = &u.coeffs[k];
                let b = -&l.coeffs[k];
                let coeffs = u.coeffs.iter().zip(&l.coeffs).map(|(p, q)| p * &b + q * a).collect();
                let constant = &u.constant * &b + &l.constant * a;
                let rel = if u.rel == Rel::Lt || l.rel == Rel::Lt { Rel::Lt } else { Rel::Le };
                next.push(Constraint { coeffs, constant, rel });
            }
        }
        cs = dedup(next)?;
        steps.push(Step::Bounded { k, bounds: with });
    }
    Some((cs, steps))
}

fn back_substitute(n: usize, steps: &[Step]) -> Vec<Rational> {
    let mut x = vec![Rational::zero(); n];
    for step in steps.iter().rev() {
        match step {
            Step::Solved { k, eq } => {
                let mut rest = eq.clone();
                rest.coeffs[*k] = Rational::zero();
                x[*k] = -rest.value(&x) / &eq.coeffs[*k];
            }
            Step::Bounded { k, bounds } => {
                let mut lo: Option<(Rational, bool)> = None;
                let mut hi: Option<(Rational, bool)> = None;
                for c in bounds {
                    let mut rest = c.clone();
                    rest.coeffs[*k] = Rational::zero();
                    let v = -rest.value(&x) / &c.coeffs[*k];
                    let strict = c.rel == Rel::Lt;
                    if c.coeffs[*k].is_positive() {
                        if hi.as_ref().is_none_or(|(h, s)| v < *h || (v == *h && strict && !s)) {
                            hi = Some((v, strict));
                        }
                    } else if lo.as_ref().is_none_or(|(l, s)| v > *l || (v == *l && strict && !s)) {
                        lo = Some((v, strict));
                    }
                }
                x[*k] = match (lo, hi) {
                    (Some((l, _)), Some((h, _))) if l == h => l,
                    (Some((l, _)), Some((h, _))) => (l + h) / Rational::from_integer(2.into()),
                    (Some((l, s)), None) => if s { l + Rational::one() } else { l },
                    (None, Some((h, s))) => if s { h - Rational::one() } else { h },
                    (None, None) => Rational::zero(),
                };
            }
        }
    }
    x
}

/// A polyhedron `{x ∈ ℚⁿ : all constraints hold}`; strict constraints allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polyhedron {
    pub ambient: usize,
    pub constraints: Vec<Constraint>,
}

impl Polyhedron {
    pub fn new(ambient: usize, constraints: Vec<Constraint>) -> Self {
        debug_assert!(constraints.iter().all(|c| c.coeffs.len() == ambient));
        Polyhedron { ambient, constraints }
    }

    pub fn with(&self, extra: Constraint) -> Polyhedron {
        let mut cs = self.constraints.clone();
        cs.push(extra);
        Polyhedron::new(self.ambient, cs)
    }

    pub fn intersect(&self, other: &Polyhedron) -> Polyhedron {
        let mut cs = self.constraints.clone();
        cs.extend(other.constraints.iter().cloned());
        Polyhedron::new(self.ambient, cs)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.constraints.iter().all(|c| c.holds(x))
    }

    /// Some point of the polyhedron, or `None` if it is empty.
    pub fn feasible_point(&self) -> Option<Vec<Rational>> {
        let vars: Vec<usize> = (0..self.ambient).collect();
        let (_, steps) = eliminate(self.constraints.clone(), &vars)?;
        let x = back_substitute(self.ambient, &steps);
        debug_assert!(self.contains(&x), "witness violates the system");
        Some(x)
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_point().is_none()
    }

    /// Coefficient rows of all equalities that hold on the whole (nonempty)
    /// polyhedron, explicit or implied.
    fn equality_rows(&self) -> Vec<Vec<Rational>> {
        let mut rows = Vec::new();
        for c in &self.constraints {
            match c.rel {
                Rel::Eq => rows.push(c.coeffs.clone()),
                Rel::Le => {
                    let strict = Constraint { rel: Rel::Lt, ..c.clone() };
                    if self.with(strict).is_empty() {
                        rows.push(c.coeffs.clone());
                    }
                }
                Rel::Lt => {}
            }
        }
        rows
    }

    /// Dimension of the affine hull; `None` for the empty set.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        Some(self.ambient - linalg::rank(&self.equality_rows()))
    }

    /// Basis of the linear space parallel to the affine hull (nonempty input).
    pub fn direction_space(&self) -> Vec<Vec<Rational>> {
        linalg::nullspace(&self.equality_rows(), self.ambient)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Polyhedron) -> bool {
        if self.is_empty() {
            return true;
        }
        other.constraints.iter().all(|c| {
            let outside: Vec<Constraint> = match c.rel {
                Rel::Le => vec![Constraint { rel: Rel::Lt, ..c.negated() }],
                Rel::Lt => vec![Constraint { rel: Rel::Le, ..c.negated() }],
                Rel::Eq => vec![
                    Constraint { rel: Rel::Lt, ..c.negated() },
                    Constraint { rel: Rel::Lt, ..c.clone() },
                ],
            };
            outside.into_iter().all(|o| self.with(o).is_empty())
        })
    }

    /// `self + span(dirs)` as a polyhedron in the same space.
    pub fn plus_subspace(&self, dirs: &[Vec<Rational>]) -> Polyhedron {
        if dirs.is_empty() {
            return self.clone();
        }
        let n = self.ambient;
        let k = dirs.len();
        // x = y − Σ μ_j d_j ∈ self, as constraints on (y, μ)
        let lifted: Vec<Constraint> = self
            .constraints
            .iter()
            .map(|c| {
                let mut coeffs = c.coeffs.clone();
                for d in dirs {
                    let dot: Rational = c.coeffs.iter().zip(d).map(|(a, b)| a * b).sum();
                    coeffs.push(-dot);
                }
                Constraint { coeffs, constant: c.constant.clone(), rel: c.rel }
            })
            .collect();
        let mu: Vec<usize> = (n..n + k).collect();
        match eliminate(lifted, &mu) {
            Some((cs, _)) => Polyhedron::new(
                n,
                cs.into_iter()
                    .map(|mut c| {
                        c.coeffs.truncate(n);
                        c
                    })
                    .collect(),
            ),
            None => Polyhedron::new(n, vec![Constraint::new(vec![Rational::zero(); n], Rational::one(), Rel::Le)]),
        }
    }

    /// Range of `t` with `base + t·dir` in the polyhedron, as (lower, upper),
    /// `None` meaning unbounded on that side. Strictness is ignored (closed
    /// polyhedra only). Assumes `base` lies in the polyhedron.
    pub fn line_range(&self, base: &[Rational], dir: &[Rational]) -> (Option<Rational>, Option<Rational>) {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for c in &self.constraints {
            let slope: Rational = c.coeffs.iter().zip(dir).map(|(a, b)| a * b).sum();
            if slope.is_zero() {
                continue;
            }
            let bound = -c.value(base) / &slope;
            let as_upper = |hi: &mut Option<Rational>| {
                if hi.as_ref().is_none_or(|h| bound < *h) {
                    *hi = Some(bound.clone());
                }
            };
            let as_lower = |lo: &mut Option<Rational>| {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    *lo = Some(bound.clone());
                }
            };
            match c.rel {
                Rel::Eq => {
                    as_upper(&mut hi);
                    as_lower(&mut lo);
                }
                _ if slope.is_positive() => as_upper(&mut hi),
                _ => as_lower(&mut lo),
            }
        }
        (lo, hi)
    }
}

/// Whether `p` is a convex combination of `points` (exact phase-one simplex).
pub fn in_convex_hull(p: &[Rational], points: &[Vec<Rational>]) -> bool {
    if points.is_empty() {
        return false;
    }
    let d = p.len();
    // rows: Σ μ_i q_i = p (d rows), Σ μ_i = 1; μ ≥ 0
    let mut a: Vec<Vec<Rational>> = (0..d).map(|r| points.iter().map(|q| q[r].clone()).collect()).collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut b: Vec<Rational> = p.to_vec();
    b.push(Rational::one());
    feasible_nonneg(a, b)
}

/// Feasibility of `{μ ≥ 0 : A μ = b}` by phase one of the simplex method with Bland's rule.
pub fn feasible_nonneg(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> bool {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    for i in 0..m {
        if b[i].is_negative() {
            b[i] = -&b[i];
            for x in a[i].iter_mut() {
                *x = -&*x;
            }
        }
    }
    // tableau columns: n originals, m artificials, then rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = a[i].clone();
            row.extend((0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // objective: minimize sum of artificials; reduced costs row
    let mut obj = vec![Rational::zero(); width];
    for row in &t {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    loop {
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // unbounded direction cannot occur in phase one
            break;
        };
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x = &*x / &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (x, p) in obj.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }
    obj[width - 1].is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn c(a: &[i64], b: i64, rel: Rel) -> Constraint {
        Constraint::new(a.iter().map(|&x| q(x)).collect(), q(b), rel)
    }

    #[test]
    fn feasibility_with_strictness() {
        // x ≤ 1, x ≥ 1
        let p = Polyhedron::new(1, vec![c(&[1], -1, Rel::Le), c(&[-1], 1, Rel::Le)]);
        assert_eq!(p.feasible_point(), Some(vec![q(1)]));
        // x < 1, x ≥ 1
        let p = Polyhedron::new(1, vec![c(&[1], -1, Rel::Lt), c(&[-1], 1, Rel::Le)]);
        assert!(p.is_empty());
    }

    #[test]
    fn dimension_and_directions() {
        // ray {x = y, x ≤ 0} in the plane
        let p = Polyhedron::new(2, vec![c(&[1, -1], 0, Rel::Eq), c(&[1, 0], 0, Rel::Le)]);
        assert_eq!(p.dimension(), Some(1));
        let d = p.direction_space();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0][0], d[0][1]);
        // x ≤ 0, x ≥ 0, y free: a line
        let l = Polyhedron::new(2, vec![c(&[1, 0], 0, Rel::Le), c(&[-1, 0], 0, Rel::Le)]);
        assert_eq!(l.dimension(), Some(1));
    }

    #[test]
    fn containment_and_minkowski() {
        let ray = Polyhedron::new(2, vec![c(&[0, 1], 0, Rel::Eq), c(&[-1, 0], 0, Rel::Le)]);
        let quadrant = Polyhedron::new(2, vec![c(&[-1, 0], 0, Rel::Le), c(&[0, -1], 0, Rel::Le)]);
        assert!(ray.is_subset_of(&quadrant));
        assert!(!quadrant.is_subset_of(&ray));
        // ray + span(e2) = right half plane
        let band = ray.plus_subspace(&[vec![q(0), q(1)]]);
        assert!(band.contains(&[q(3), q(-7)]));
        assert!(!band.contains(&[q(-1), q(0)]));
    }

    #[test]
    fn convex_hull_membership() {
        let pts: Vec<Vec<Rational>> = vec![vec![q(0), q(1), q(0)], vec![q(0), q(1), q(2)]];
        assert!(in_convex_hull(&[q(0), q(1), q(1)], &pts));
        assert!(!in_convex_hull(&[q(0), q(2), q(1)], &pts));
        let square: Vec<Vec<Rational>> =
            vec![vec![q(0), q(0)], vec![q(2), q(0)], vec![q(0), q(2)], vec![q(2), q(2)]];
        assert!(in_convex_hull(&[q(1), q(1)], &square));
        assert!(!in_convex_hull(&[q(3), q(1)], &square));
    }
}
