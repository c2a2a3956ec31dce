//! Resultants in one variable, Newton polytopes, and the lattice-point bound
//! `Q_n` for resultants of two polynomials of the shape
//! `a₁x₁λ^{v₁} + ⋯ + aₙxₙλ^{vₙ} + a_{n+1}`.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::arith::{Field, Rational};
use crate::exec::Exec;
use crate::poly::{Monomial, PolyError, Polynomial};
use crate::polyhedral;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NewtonError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("both polynomials have degree 0 in `{0}`")]
    DegreeZero(String),
    #[error("Newton polytope of the zero polynomial")]
    ZeroPolynomial,
    #[error("exponent vector must be strictly decreasing and positive: {0:?}")]
    Precondition(Vec<i64>),
    #[error("polynomial does not have the expected shape: {0}")]
    Shape(String),
}

/// `det` of a square matrix of polynomials by cofactor expansion along rows,
/// memoized on the set of columns still available.
fn determinant<F: Field>(m: &[Vec<Polynomial<F>>]) -> Polynomial<F> {
    let size = m.len();
    assert!(size < 64, "matrix too large for cofactor expansion");
    let ring = m.first().map(|r| r[0].ring().clone());
    let Some(ring) = ring else {
        panic!("determinant of an empty matrix needs a ring");
    };
    let mut memo: HashMap<u64, Polynomial<F>> = HashMap::new();
    fn go<F: Field>(
        m: &[Vec<Polynomial<F>>],
        row: usize,
        cols: u64,
        ring: &std::sync::Arc<crate::poly::Ring>,
        memo: &mut HashMap<u64, Polynomial<F>>,
    ) -> Polynomial<F> {
        if row == m.len() {
            return Polynomial::one(ring);
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = Polynomial::zero(ring);
        let mut sign_neg = false;
        for c in 0..m.len() {
            if cols >> c & 1 == 0 {
                continue;
            }
            let entry = &m[row][c];
            if !entry.is_zero() {
                let minor = go(m, row + 1, cols & !(1 << c), ring, memo);
                let term = entry * &minor;
                acc = if sign_neg { &acc - &term } else { &acc + &term };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let all = if size == 0 { 0 } else { (1u64 << size) - 1 };
    go(m, 0, all, &ring, &mut memo)
}

/// `Res_var(f, g)`: the Sylvester determinant, as a polynomial in the ring
/// without `var`.
///
/// When one input is constant in `var` the usual convention applies
/// (`Res(f, g) = f^{deg g}` for `deg f = 0`); only two constants are rejected.
pub fn sylvester_resultant<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, var: usize) -> Result<Polynomial<F>, NewtonError> {
    if f.ring() != g.ring() {
        return Err(PolyError::RingMismatch.into());
    }
    let ring = f.ring().clone();
    let df = f.degree_in(var).unwrap_or(0).max(0) as usize;
    let dg = g.degree_in(var).unwrap_or(0).max(0) as usize;
    if df == 0 && dg == 0 {
        return Err(NewtonError::DegreeZero(ring.vars()[var].clone()));
    }
    let cf = f.coefficients_in(var);
    let cg = g.coefficients_in(var);
    let size = df + dg;
    let zero = Polynomial::zero(&ring);
    let mut m = vec![vec![zero; size]; size];
    for r in 0..dg {
        for (k, c) in cf.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..df {
        for (k, c) in cg.iter().rev().enumerate() {
            m[dg + r][r + k] = c.clone();
        }
    }
    let det = determinant(&m);
    let keep: Vec<usize> = (0..ring.arity()).filter(|&i| i != var).collect();
    let target = ring.sub_ring(&keep);
    let mut map = vec![None; ring.arity()];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    Ok(det.remap(&target, &map)?)
}

/// Support of a polynomial and the vertices of its convex hull.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolytope {
    pub points: Vec<Vec<i64>>,
    pub vertices: Vec<Vec<i64>>,
}

fn to_rational(p: &[i64]) -> Vec<Rational> {
    p.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

impl NewtonPolytope {
    pub fn from_points(points: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let points: Vec<Vec<i64>> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let vertices = points
            .iter()
            .enumerate()
            .filter(|(i, p)| {
                let others: Vec<Vec<Rational>> =
                    points.iter().enumerate().filter(|(j, _)| j != i).map(|(_, q)| to_rational(q)).collect();
                !polyhedral::in_convex_hull(&to_rational(p), &others)
            })
            .map(|(_, p)| p.clone())
            .collect();
        NewtonPolytope { points, vertices }
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        let verts: Vec<Vec<Rational>> = self.vertices.iter().map(|v| to_rational(v)).collect();
        polyhedral::in_convex_hull(&to_rational(p), &verts)
    }

    /// All integer points of the polytope (bounding-box scan).
    pub fn lattice_points(&self) -> Vec<Vec<i64>> {
        let Some(first) = self.points.first() else {
            return Vec::new();
        };
        let d = first.len();
        let lo: Vec<i64> = (0..d).map(|k| self.points.iter().map(|p| p[k]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..d).map(|k| self.points.iter().map(|p| p[k]).max().unwrap()).collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            if self.contains(&cur) {
                out.push(cur.clone());
            }
            let mut k = d;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k];
            }
        }
    }
}

pub fn newton_polytope<F: Field>(f: &Polynomial<F>) -> Result<NewtonPolytope, NewtonError> {
    if f.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    Ok(NewtonPolytope::from_points(
        f.terms().iter().map(|(m, _)| m.exps().iter().map(|&e| i64::from(e)).collect()),
    ))
}

/// A point `(p, q)` of `Q_n`, each of length `n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QnPoint {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
}

impl QnPoint {
    /// `(p₁+q₁, …, pₙ+qₙ)`.
    pub fn image(&self) -> Vec<i64> {
        let n = self.p.len() - 1;
        (0..n).map(|k| self.p[k] + self.q[k]).collect()
    }
}

fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .rev()
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn check_decreasing(v: &[i64]) -> Result<(), NewtonError> {
    let ok = !v.is_empty() && v.iter().all(|&x| x > 0) && v.windows(2).all(|w| w[0] > w[1]);
    if ok {
        Ok(())
    } else {
        Err(NewtonError::Precondition(v.to_vec()))
    }
}

/// All nonnegative integer `(p, q)` with
/// `Σp = Σq = v₁`, `Σ v_i p_i + Σ v_j q_j = v₁²`, and for all `0 ≤ i, j ≤ v₁`
/// `Σ_{k ≤ n, v₁−v_k ≤ i} (i−v₁+v_k) p_k + Σ_{l ≤ n, v₁−v_l ≤ j} (j−v₁+v_l) q_l ≥ i·j`,
/// with `v_{n+1} = 0` appended. Sorted.
pub fn enumerate_qn(v: &[i64], exec: Exec) -> Result<Vec<QnPoint>, NewtonError> {
    check_decreasing(v)?;
    let n = v.len();
    let mut vv = v.to_vec();
    vv.push(0);
    let v1 = vv[0];
    let comps = compositions(v1, n + 1);
    let weight = |x: &[i64]| -> i64 { x.iter().zip(&vv).map(|(a, b)| a * b).sum() };
    let partial = |x: &[i64], i: i64| -> i64 {
        (0..n).filter(|&k| v1 - vv[k] <= i).map(|k| (i - v1 + vv[k]) * x[k]).sum()
    };
    let per_p = exec.map(&comps, |p| {
        let wp = weight(p);
        let sp: Vec<i64> = (0..=v1).map(|i| partial(p, i)).collect();
        comps
            .iter()
            .filter(|q| wp + weight(q) == v1 * v1)
            .filter(|q| {
                let sq: Vec<i64> = (0..=v1).map(|j| partial(q, j)).collect();
                (0..=v1).all(|i| (0..=v1).all(|j| sp[i as usize] + sq[j as usize] >= i * j))
            })
            .map(|q| QnPoint { p: p.clone(), q: q.clone() })
            .collect::<Vec<_>>()
    });
    let mut out: Vec<QnPoint> = per_p.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

pub fn qn_image(points: &[QnPoint]) -> BTreeSet<Vec<i64>> {
    points.iter().map(QnPoint::image).collect()
}

/// The outcome of comparing a resultant's Newton polytope with `Q_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QnReport {
    /// λ-exponents in decreasing order.
    pub v: Vec<i64>,
    /// `perm[k]` is the ring variable carrying `v[k]`.
    pub perm: Vec<usize>,
    pub resultant: Polynomial<Rational>,
    /// Lattice points of the resultant's Newton polytope, in sorted-`v` coordinates.
    pub lattice_points: Vec<Vec<i64>>,
    pub qn: Vec<QnPoint>,
    pub image: BTreeSet<Vec<i64>>,
    pub violators: Vec<Vec<i64>>,
}

impl QnReport {
    pub fn holds(&self) -> bool {
        self.violators.is_empty()
    }
}

/// Reads off `v` from `a₁x₁λ^{v₁}+⋯+aₙxₙλ^{vₙ}+a_{n+1}`: returns, per non-λ
/// variable, its λ-exponent.
fn shape(f: &Polynomial<Rational>, var: usize) -> Result<Vec<i64>, NewtonError> {
    let n = f.arity();
    let mut v: Vec<Option<i64>> = vec![None; n];
    let mut constant = false;
    for (m, _) in f.terms() {
        let e = m.exps();
        let xs: Vec<usize> = (0..n).filter(|&i| i != var && e[i] != 0).collect();
        match xs.as_slice() {
            [] if e[var] == 0 => constant = true,
            [i] if e[*i] == 1 && v[*i].is_none() => v[*i] = Some(i64::from(e[var])),
            _ => return Err(NewtonError::Shape(f.to_string())),
        }
    }
    if !constant {
        return Err(NewtonError::Shape(format!("{f}: no constant term")));
    }
    (0..n)
        .filter(|&i| i != var)
        .map(|i| v[i].ok_or_else(|| NewtonError::Shape(format!("{f}: variable {} missing", f.ring().vars()[i]))))
        .collect()
}

/// Checks that every lattice point of `New(Res_λ(f, g))` lies in the image
/// of `Q_n` under `(p, q) ↦ (p₁+q₁, …, pₙ+qₙ)`.
pub fn qn_containment(
    f: &Polynomial<Rational>,
    g: &Polynomial<Rational>,
    var: usize,
    exec: Exec,
) -> Result<QnReport, NewtonError> {
    let vf = shape(f, var)?;
    let vg = shape(g, var)?;
    if vf != vg {
        return Err(NewtonError::Shape(format!("λ-exponents differ: {vf:?} vs {vg:?}")));
    }
    let mut perm: Vec<usize> = (0..vf.len()).collect();
    perm.sort_by(|&a, &b| vf[b].cmp(&vf[a]));
    let v: Vec<i64> = perm.iter().map(|&k| vf[k]).collect();
    let qn = enumerate_qn(&v, exec)?;
    let resultant = sylvester_resultant(f, g, var)?;
    let lattice_points: Vec<Vec<i64>> = if resultant.is_zero() {
        Vec::new()
    } else {
        newton_polytope(&resultant)?
            .lattice_points()
            .into_iter()
            .map(|p| perm.iter().map(|&k| p[k]).collect())
            .collect()
    };
    let image = qn_image(&qn);
    let violators = containment_violators(&lattice_points, &image);
    Ok(QnReport { v, perm, resultant, lattice_points, qn, image, violators })
}

pub fn containment_violators(points: &[Vec<i64>], image: &BTreeSet<Vec<i64>>) -> Vec<Vec<i64>> {
    points.iter().filter(|p| !image.contains(*p)).cloned().collect()
}

/// `Σ aᵢ xᵢ λ^{vᵢ} + a_{n+1}` in the ring `x₁..xₙ, λ`.
pub fn shaped_polynomial(
    ring: &std::sync::Arc<crate::poly::Ring>,
    coeffs: &[Rational],
    v: &[i64],
) -> Polynomial<Rational> {
    let n = v.len();
    assert_eq!(ring.arity(), n + 1);
    assert_eq!(coeffs.len(), n + 1);
    let mut terms: Vec<(Monomial, Rational)> = (0..n)
        .map(|i| {
            let mut e = vec![0; n + 1];
            e[i] = 1;
            e[n] = v[i] as i32;
            (Monomial::new(e), coeffs[i].clone())
        })
        .collect();
    terms.push((Monomial::one(n + 1), coeffs[n].clone()));
    Polynomial::from_terms(ring, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn two_by_two() {
        let ring = Ring::new(["a", "b", "c", "d", "l"]);
        let f = parse_polynomial::<Rational>("a*l+b", &ring).unwrap();
        let g = parse_polynomial::<Rational>("c*l+d", &ring).unwrap();
        let r = sylvester_resultant(&f, &g, 4).unwrap();
        let sub = Ring::new(["a", "b", "c", "d"]);
        assert_eq!(r, parse_polynomial("a*d-b*c", &sub).unwrap());
    }

    #[test]
    fn example_resultants() {
        let ring = Ring::new(["x", "y", "z", "l"]);
        let sub = Ring::new(["x", "y", "z"]);
        let p = |s: &str| parse_polynomial::<Rational>(s, &ring).unwrap();
        let r = sylvester_resultant(&p("2*x*l+y-4"), &p("(x+z)*l+2*y-1"), 3).unwrap();
        // 2x(2y−1) − (y−4)(x+z)
        assert_eq!(r, parse_polynomial("3*x*y+2*x-y*z+4*z", &sub).unwrap());
        let r = sylvester_resultant(&p("y*l^2+2*x*l-4"), &p("2*y*l^2+x*l+z-1"), 3).unwrap();
        let want = parse_polynomial::<Rational>("y*(y*z^2+14*y*z+49*y+6*x^2*z+6*x^2)", &sub).unwrap();
        assert!(r == want || r == -&want, "{r}");
        assert_eq!(r.strip_monomial_content().unwrap().normalized(), parse_polynomial("6*x^2+6*x^2*z+49*y+14*y*z+y*z^2", &sub).unwrap());
    }

    #[test]
    fn degree_zero_cases() {
        let ring = Ring::new(["x", "l"]);
        let p = |s: &str| parse_polynomial::<Rational>(s, &ring).unwrap();
        assert!(matches!(sylvester_resultant(&p("x+1"), &p("x"), 1), Err(NewtonError::DegreeZero(_))));
        let sub = Ring::new(["x"]);
        assert_eq!(sylvester_resultant(&p("x+1"), &p("l^2+x"), 1).unwrap(), parse_polynomial("(x+1)^2", &sub).unwrap());
    }

    #[test]
    fn polytopes_of_example() {
        let ring = Ring::new(["x", "y", "z"]);
        let p = |s: &str| parse_polynomial::<Rational>(s, &ring).unwrap();
        let np = newton_polytope(&p("3*x*y+2*x-y*z+4*z")).unwrap();
        assert_eq!(np.vertices, vec![vec![0, 0, 1], vec![0, 1, 1], vec![1, 0, 0], vec![1, 1, 0]]);
        let np = newton_polytope(&p("6*x^2+6*x^2*z+49*y+14*y*z+y*z^2")).unwrap();
        assert_eq!(np.vertices, vec![vec![0, 1, 0], vec![0, 1, 2], vec![2, 0, 0], vec![2, 0, 1]]);
        assert!(!np.vertices.contains(&vec![0, 1, 1]));
        let np = newton_polytope(&p("2*x+y-4")).unwrap();
        assert_eq!(np.vertices.len(), 3);
        assert!(matches!(newton_polytope(&Polynomial::<Rational>::zero(&ring)), Err(NewtonError::ZeroPolynomial)));
    }

    #[test]
    fn lattice_points_of_square() {
        let np = NewtonPolytope::from_points(vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2]]);
        assert_eq!(np.lattice_points().len(), 9);
    }

    #[test]
    fn q1_by_hand() {
        let pts = enumerate_qn(&[1], Exec::Sequential).unwrap();
        assert_eq!(
            pts,
            vec![QnPoint { p: vec![0, 1], q: vec![1, 0] }, QnPoint { p: vec![1, 0], q: vec![0, 1] }]
        );
        assert_eq!(qn_image(&pts), BTreeSet::from([vec![1]]));
        assert!(matches!(enumerate_qn(&[2, 2], Exec::Sequential), Err(NewtonError::Precondition(_))));
        assert!(matches!(enumerate_qn(&[1, 2], Exec::Sequential), Err(NewtonError::Precondition(_))));
        assert_eq!(enumerate_qn(&[3, 1], Exec::Sequential), enumerate_qn(&[3, 1], Exec::Parallel));
    }

    #[test]
    fn containment_small() {
        let ring = Ring::new(["x1", "l"]);
        let f = shaped_polynomial(&ring, &[q(3), q(5)], &[1]);
        let g = shaped_polynomial(&ring, &[q(2), q(-7)], &[1]);
        let r = qn_containment(&f, &g, 1, Exec::Sequential).unwrap();
        assert!(r.holds());
        assert_eq!(r.lattice_points, vec![vec![1]]);

        let ring = Ring::new(["x1", "x2", "l"]);
        let f = shaped_polynomial(&ring, &[q(1), q(2), q(3)], &[2, 1]);
        let g = shaped_polynomial(&ring, &[q(-2), q(5), q(1)], &[2, 1]);
        let r = qn_containment(&f, &g, 2, Exec::Sequential).unwrap();
        assert!(r.holds(), "{:?}", r.violators);
        // negative control: remove everything over one lattice point
        let target = r.lattice_points[0].clone();
        let corrupted: Vec<QnPoint> = r.qn.iter().filter(|p| p.image() != target).cloned().collect();
        assert_eq!(containment_violators(&r.lattice_points, &qn_image(&corrupted)), vec![target]);
    }

    #[test]
    fn shape_is_checked() {
        let ring = Ring::new(["x", "y", "l"]);
        let p = |s: &str| parse_polynomial::<Rational>(s, &ring).unwrap();
        assert!(matches!(
            qn_containment(&p("x*y*l+1"), &p("x*l+y+1"), 2, Exec::Sequential),
            Err(NewtonError::Shape(_))
        ));
    }
}
