use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{TropicalError, TropicalForm};
use crate::arith::Rational;
use crate::polyhedral::{Constraint, Polyhedron, Rel};

const MAX_ARITY: usize = 3;

/// A closed cell of a tropical hypersurface or of an intersection of several.
///
/// `ties[f]` lists the terms of form `f` that attain the minimum everywhere on
/// the cell; the polyhedron states that these agree and are at most every
/// other term of that form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub ties: Vec<Vec<usize>>,
    pub polyhedron: Polyhedron,
    pub dimension: usize,
}

impl Cell {
    /// The defining pair of a hypersurface cell.
    pub fn pair(&self) -> (usize, usize) {
        (self.ties[0][0], self.ties[0][1])
    }

    pub fn contains(&self, w: &[Rational]) -> bool {
        self.polyhedron.contains(w)
    }

    pub fn point(&self) -> Vec<Rational> {
        self.polyhedron.feasible_point().expect("cells are nonempty")
    }
}

/// A one-dimensional cell in explicit form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Segment {
    Bounded { from: Vec<Rational>, to: Vec<Rational> },
    Ray { from: Vec<Rational>, direction: Vec<Rational> },
    Line { point: Vec<Rational>, direction: Vec<Rational> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalComplex {
    arity: usize,
    cells: Vec<Cell>,
}

/// `value_i − value_j  rel  0` for terms `i`, `j` of `form`.
fn difference(form: &TropicalForm, i: usize, j: usize, rel: Rel) -> Constraint {
    let (ci, ai) = &form.terms()[i];
    let (cj, aj) = &form.terms()[j];
    let coeffs = ai
        .exps()
        .iter()
        .zip(aj.exps())
        .map(|(a, b)| Rational::from_integer((a - b).into()))
        .collect();
    Constraint::new(coeffs, ci - cj, rel)
}

/// Constraints saying the terms in `tie` attain the minimum of `form`.
fn tie_constraints(form: &TropicalForm, tie: &[usize]) -> Vec<Constraint> {
    let s = tie[0];
    let mut out: Vec<Constraint> = tie[1..].iter().map(|&j| difference(form, s, j, Rel::Eq)).collect();
    out.extend((0..form.len()).filter(|j| !tie.contains(j)).map(|j| difference(form, s, j, Rel::Le)));
    out
}

/// All terms of `form` that are minimal on the whole of `p`, given that `tie`
/// already is.
fn maximal_tie(form: &TropicalForm, tie: &[usize], p: &Polyhedron) -> Vec<usize> {
    let s = tie[0];
    (0..form.len())
        .filter(|&j| tie.contains(&j) || p.with(difference(form, s, j, Rel::Lt)).is_empty())
        .collect()
}

fn check_forms(forms: &[TropicalForm]) -> Result<usize, TropicalError> {
    let n = forms.first().map(TropicalForm::arity).unwrap_or(0);
    if n > MAX_ARITY {
        return Err(TropicalError::UnsupportedDimension(n));
    }
    for f in forms {
        if f.arity() != n {
            return Err(TropicalError::ArityMismatch { expected: n, got: f.arity() });
        }
        if f.len() < 2 {
            return Err(TropicalError::TooFewTerms);
        }
    }
    Ok(n)
}

impl TropicalComplex {
    /// One cell per pair of terms whose tie region is nonempty.
    pub fn hypersurface(form: &TropicalForm) -> Result<Self, TropicalError> {
        let n = check_forms(std::slice::from_ref(form))?;
        let mut cells = Vec::new();
        for i in 0..form.len() {
            for j in i + 1..form.len() {
                let p = Polyhedron::new(n, tie_constraints(form, &[i, j]));
                if let Some(dimension) = p.dimension() {
                    cells.push(Cell { ties: vec![vec![i, j]], polyhedron: p, dimension });
                }
            }
        }
        Ok(TropicalComplex { arity: n, cells })
    }

    /// Cells of the intersection of the hypersurfaces of `forms`, one per
    /// distinct combination of maximal tie sets (all faces included).
    pub fn from_forms(forms: &[TropicalForm]) -> Result<Self, TropicalError> {
        let n = check_forms(forms)?;
        let mut partial: Vec<(Vec<Vec<usize>>, Polyhedron)> = vec![(Vec::new(), Polyhedron::new(n, Vec::new()))];
        for form in forms {
            let mut next: BTreeMap<Vec<Vec<usize>>, Polyhedron> = BTreeMap::new();
            for (ties, p) in &partial {
                for i in 0..form.len() {
                    for j in i + 1..form.len() {
                        let mut q = p.clone();
                        q.constraints.extend(tie_constraints(form, &[i, j]));
                        if q.is_empty() {
                            continue;
                        }
                        let tie = maximal_tie(form, &[i, j], &q);
                        let mut key = ties.clone();
                        key.push(tie.clone());
                        next.entry(key).or_insert_with(|| {
                            let mut r = p.clone();
                            r.constraints.extend(tie_constraints(form, &tie));
                            r
                        });
                    }
                }
            }
            // ties of earlier forms may have grown on the smaller cells
            let mut canon: BTreeMap<Vec<Vec<usize>>, Polyhedron> = BTreeMap::new();
            for (key, p) in next {
                let full: Vec<Vec<usize>> = forms
                    .iter()
                    .zip(&key)
                    .map(|(f, t)| maximal_tie(f, t, &p))
                    .collect();
                canon.entry(full).or_insert(p);
            }
            partial = canon.into_iter().collect();
        }
        // faces: make further terms tight until nothing new appears
        let mut all: BTreeMap<Vec<Vec<usize>>, Polyhedron> = partial.into_iter().collect();
        let mut frontier: Vec<Vec<Vec<usize>>> = all.keys().cloned().collect();
        while let Some(ties) = frontier.pop() {
            let p = all[&ties].clone();
            for (f, form) in forms.iter().enumerate() {
                for j in (0..form.len()).filter(|j| !ties[f].contains(j)) {
                    let mut grown = ties[f].clone();
                    grown.push(j);
                    grown.sort_unstable();
                    let mut q = p.clone();
                    q.constraints.extend(tie_constraints(form, &grown));
                    if q.is_empty() {
                        continue;
                    }
                    let full: Vec<Vec<usize>> = forms.iter().zip(&ties).map(|(g, t)| maximal_tie(g, t, &q)).collect();
                    if !all.contains_key(&full) {
                        all.insert(full.clone(), q);
                        frontier.push(full);
                    }
                }
            }
        }
        let partial = all;
        let mut cells: Vec<Cell> = partial
            .into_iter()
            .map(|(ties, p)| {
                let polyhedron = Polyhedron::new(
                    n,
                    forms.iter().zip(&ties).flat_map(|(f, t)| tie_constraints(f, t)).collect(),
                );
                let dimension = polyhedron.dimension().expect("cell is nonempty");
                debug_assert!(p.is_subset_of(&polyhedron) && polyhedron.is_subset_of(&p));
                Cell { ties, polyhedron, dimension }
            })
            .collect();
        cells.sort_by(|a, b| b.dimension.cmp(&a.dimension).then_with(|| a.ties.cmp(&b.ties)));
        Ok(TropicalComplex { arity: n, cells })
    }

    pub fn empty(arity: usize) -> Self {
        TropicalComplex { arity, cells: Vec::new() }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dimension).max()
    }

    pub fn contains(&self, w: &[Rational]) -> bool {
        self.cells.iter().any(|c| c.contains(w))
    }

    /// Points of the zero-dimensional cells.
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        self.cells.iter().filter(|c| c.dimension == 0).map(Cell::point).collect()
    }

    /// The one-dimensional cells as segments, rays and lines.
    pub fn segments(&self) -> Vec<Segment> {
        self.cells
            .iter()
            .filter(|c| c.dimension == 1)
            .map(|c| {
                let base = c.point();
                let mut dir = c.polyhedron.direction_space().remove(0);
                let at = |t: &Rational, d: &[Rational]| -> Vec<Rational> {
                    base.iter().zip(d).map(|(b, x)| b + t * x).collect()
                };
                match c.polyhedron.line_range(&base, &dir) {
                    (Some(lo), Some(hi)) => Segment::Bounded { from: at(&lo, &dir), to: at(&hi, &dir) },
                    (Some(lo), None) => Segment::Ray { from: at(&lo, &dir), direction: dir },
                    (None, Some(hi)) => {
                        let from = at(&hi, &dir);
                        for x in dir.iter_mut() {
                            *x = -&*x;
                        }
                        Segment::Ray { from, direction: dir }
                    }
                    (None, None) => Segment::Line { point: base.clone(), direction: dir },
                }
            })
            .collect()
    }
}

/// Scales a direction to a primitive integer vector (same orientation).
pub fn primitive_direction(d: &[Rational]) -> Vec<Rational> {
    use num_integer::Integer;
    let lcm = d.iter().fold(num_bigint::BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<num_bigint::BigInt> = d.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return d.to_vec();
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
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

    fn form(src: &str, vars: &[&str]) -> TropicalForm {
        let ring = Ring::new(vars.iter().copied());
        let f: Polynomial<Rational> = parse_polynomial(src, &ring).unwrap();
        tropicalize(&f, &PAdic::new(2).unwrap()).unwrap()
    }

    #[test]
    fn tropical_line_in_the_plane() {
        let c = TropicalComplex::hypersurface(&form("x+y+1", &["x", "y"])).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.cells().iter().all(|cell| cell.dimension == 1));
        let segs = c.segments();
        let mut dirs: Vec<Vec<Rational>> = segs
            .iter()
            .map(|s| match s {
                Segment::Ray { from, direction } => {
                    assert_eq!(from, &vec![q(0), q(0)]);
                    primitive_direction(direction)
                }
                other => panic!("expected a ray, got {other:?}"),
            })
            .collect();
        dirs.sort();
        assert_eq!(dirs, vec![vec![q(-1), q(-1)], vec![q(0), q(1)], vec![q(1), q(0)]]);
    }

    #[test]
    fn planes_meeting_along_a_line() {
        let c = TropicalComplex::hypersurface(&form("2*x+y-4", &["x", "y", "z"])).unwrap();
        assert_eq!(c.len(), 3);
        assert!(c.cells().iter().all(|cell| cell.dimension == 2));
        // the common line 1+x = y = 2
        for cell in c.cells() {
            assert!(cell.contains(&[q(1), q(2), q(-5)]));
        }
    }

    #[test]
    fn single_term_and_high_arity_rejected() {
        assert_eq!(TropicalComplex::hypersurface(&form("x", &["x"])), Err(TropicalError::TooFewTerms));
        assert_eq!(
            TropicalComplex::hypersurface(&form("a+b+c+d", &["a", "b", "c", "d"])),
            Err(TropicalError::UnsupportedDimension(4))
        );
    }

    #[test]
    fn tropical_line_in_space() {
        let vars = ["x", "y", "z"];
        let forms: Vec<TropicalForm> = ["2*x+y-4", "x+2*y+z-1", "3*y+2*z+2", "3*x-z-7"]
            .iter()
            .map(|s| form(s, &vars))
            .collect();
        let c = TropicalComplex::from_forms(&forms).unwrap();
        assert_eq!(c.dimension(), Some(1));
        let segs = c.segments();
        let rays = segs.iter().filter(|s| matches!(s, Segment::Ray { .. })).count();
        assert_eq!(rays, 4);
        assert_eq!(segs.len(), 5);
        let mut verts = c.vertices();
        verts.sort();
        assert_eq!(verts, vec![vec![q(0), q(1), q(0)], vec![q(1), q(2), q(0)]]);
        for s in &segs {
            if let Segment::Bounded { from, to } = s {
                let mid: Vec<Rational> = from.iter().zip(to).map(|(a, b)| (a + b) / q(2)).collect();
                assert!(crate::tropical::member_of_intersection(&forms, &mid));
            }
        }
    }

    #[test]
    fn cells_agree_with_membership() {
        let f = form("x^2+2*x*y+y^2*z+4*z+1", &["x", "y", "z"]);
        let c = TropicalComplex::hypersurface(&f).unwrap();
        let pts = crate::tropical::grid(3, &q(-2), &q(2), &Rational::new(1.into(), 2.into()));
        for w in &pts {
            assert_eq!(c.contains(w), f.contains(w), "{w:?}");
        }
    }
}
