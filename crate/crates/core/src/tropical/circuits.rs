use super::TropicalError;
use crate::arith::Field;
use crate::linalg;
use crate::poly::{Monomial, Polynomial};

/// All circuits of the ideal generated by affine-linear `gens`: the nonzero
/// linear forms in their span whose support is minimal, normalized and sorted.
///
/// Coefficient vectors carry the constant term as an extra slot, so a circuit
/// is a support set `S` on which the span restricted to `S` is one-dimensional
/// and its generator uses every coordinate of `S`.
pub fn circuits_linear<F: Field>(gens: &[Polynomial<F>]) -> Result<Vec<Polynomial<F>>, TropicalError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    let n = ring.arity();
    let mut rows = Vec::new();
    for g in gens {
        let mut row = vec![F::zero(); n + 1];
        for (m, c) in g.terms() {
            let e = m.exps();
            match e.iter().position(|&x| x != 0) {
                None => row[n] = c.clone(),
                Some(i) if e[i] == 1 && e.iter().filter(|&&x| x != 0).count() == 1 => row[i] = c.clone(),
                _ => return Err(TropicalError::Nonlinear(g.to_string())),
            }
        }
        rows.push(row);
    }
    let mut basis = rows;
    linalg::rref(&mut basis);
    let k = basis.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let mut out: Vec<Polynomial<F>> = Vec::new();
    for mask in 1u64..(1u64 << (n + 1)) {
        let inside = |i: usize| mask >> i & 1 == 1;
        // combinations c with (c·B)_i = 0 outside the mask
        let cons: Vec<Vec<F>> = (0..=n).filter(|&i| !inside(i)).map(|i| basis.iter().map(|r| r[i].clone()).collect()).collect();
        let ns = linalg::nullspace(&cons, k);
        if ns.len() != 1 {
            continue;
        }
        let v: Vec<F> = (0..=n)
            .map(|i| basis.iter().zip(&ns[0]).fold(F::zero(), |acc, (r, c)| acc.add(&r[i].mul(c))))
            .collect();
        if (0..=n).all(|i| inside(i) != v[i].is_zero()) {
            let terms = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
                let m = if i == n { Monomial::one(n) } else { Monomial::var(n, i) };
                (m, c)
            });
            out.push(Polynomial::from_terms(&ring, terms).normalized());
        }
    }
    out.sort_by_cached_key(|p| p.to_string());
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{RatFunc, Rational};
    use crate::poly::{parse_polynomial, Ring};

    fn polys<F: Field>(srcs: &[&str], vars: &[&str]) -> Vec<Polynomial<F>> {
        let ring = Ring::new(vars.iter().copied());
        srcs.iter().map(|s| parse_polynomial(s, &ring).unwrap()).collect()
    }

    fn texts<F: Field>(ps: &[Polynomial<F>]) -> Vec<String> {
        let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
        v.sort();
        v
    }

    #[test]
    fn example_ideal_circuits() {
        let vars = ["x", "y", "z"];
        let got = circuits_linear(&polys::<Rational>(&["2*x+y-4", "x+2*y+z-1"], &vars)).unwrap();
        // one circuit per eliminated coordinate; x+2*y+z-1 has full support
        let want = polys::<Rational>(&["2*x+y-4", "3*y+2*z+2", "3*x-z-7", "2*x+7*y+4*z"], &vars);
        assert_eq!(texts(&got), texts(&want));
    }

    #[test]
    fn small_cases() {
        let got = circuits_linear(&polys::<Rational>(&["x-y"], &["x", "y"])).unwrap();
        assert_eq!(texts(&got), vec!["x - y".to_string()]);
        // x - y is support-minimal as well
        let got = circuits_linear(&polys::<Rational>(&["x-1", "y-1"], &["x", "y"])).unwrap();
        assert_eq!(texts(&got), texts(&polys::<Rational>(&["x-1", "y-1", "x-y"], &["x", "y"])));
    }

    #[test]
    fn nonlinear_rejected() {
        let r = circuits_linear(&polys::<Rational>(&["x*y-1"], &["x", "y"]));
        assert!(matches!(r, Err(TropicalError::Nonlinear(_))));
    }

    #[test]
    fn works_over_rational_functions() {
        let got = circuits_linear(&polys::<RatFunc>(&["x+t*y", "y+z"], &["x", "y", "z"])).unwrap();
        // x + t*y, y + z, and x - t*z
        assert_eq!(got.len(), 3);
    }
}
