//! Buchberger engine: normal forms, reduced Gröbner bases, elimination,
//! saturation, membership and Krull dimension.
//!
//! Internally a polynomial is a term list sorted descending by the active
//! monomial order; conversion back to [`Polynomial`] restores lex storage.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::arith::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generators live in different rings")]
    RingMismatch,
    #[error("Gröbner input must not carry negative exponents: {0}")]
    LaurentInput(String),
    #[error("the ideal is the whole ring")]
    UnitIdeal,
    #[error("cannot saturate at the zero polynomial")]
    ZeroSaturation,
}

type Terms<F> = Vec<(Monomial, F)>;

fn sorted<F: Field>(p: &Polynomial<F>, order: &MonomialOrder) -> Terms<F> {
    let mut t = p.terms().to_vec();
    if *order != MonomialOrder::Lex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

/// `p - c·x^m·g` for term lists sorted by `order`.
fn sub_scaled<F: Field>(p: &[(Monomial, F)], c: &F, m: &Monomial, g: &[(Monomial, F)], order: &MonomialOrder) -> Terms<F> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), gc.mul(c))).peekable();
    let mut pi = p.iter().peekable();
    loop {
        match (pi.peek(), gi.peek()) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Greater => out.push(pi.next().unwrap().clone()),
                Ordering::Less => {
                    let (bm, bc) = gi.next().unwrap();
                    out.push((bm, bc.neg()));
                }
                Ordering::Equal => {
                    let a = pi.next().unwrap();
                    let (_, bc) = gi.next().unwrap();
                    let c = a.1.sub(&bc);
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                }
            },
            (Some(_), None) => out.push(pi.next().unwrap().clone()),
            (None, Some(_)) => {
                let (bm, bc) = gi.next().unwrap();
                out.push((bm, bc.neg()));
            }
            (None, None) => return out,
        }
    }
}

fn make_monic<F: Field>(t: &mut Terms<F>) {
    if let Some((_, lc)) = t.first() {
        let inv = lc.inv().expect("leading coefficient is nonzero");
        for (_, c) in t.iter_mut() {
            *c = c.mul(&inv);
        }
    }
}

fn make_primitive<F: Field>(t: &mut Terms<F>) {
    let coeffs: Vec<&F> = t.iter().map(|(_, c)| c).collect();
    let s = F::normalizer(&coeffs);
    for (_, c) in t.iter_mut() {
        *c = c.mul(&s);
    }
}

/// Full reduction of `f` by `basis`; `choose` picks among the indices of
/// basis elements whose leading monomial divides the current term.
fn reduce<F: Field>(
    f: &[(Monomial, F)],
    basis: &[Terms<F>],
    order: &MonomialOrder,
    choose: &mut dyn FnMut(&[usize]) -> usize,
) -> Terms<F> {
    let mut p: Terms<F> = f.to_vec();
    let mut rem = Vec::new();
    let mut start = 0;
    while start < p.len() {
        let (m, c) = &p[start];
        let divisors: Vec<usize> = basis
            .iter()
            .enumerate()
            .filter(|(_, g)| g.first().is_some_and(|(lm, _)| lm.divides(m)))
            .map(|(i, _)| i)
            .collect();
        if divisors.is_empty() {
            rem.push(p[start].clone());
            start += 1;
            continue;
        }
        let g = &basis[choose(&divisors)];
        let (lm, lc) = &g[0];
        let q = c.div(lc).expect("leading coefficient is nonzero");
        let shift = m.div(lm);
        p = sub_scaled(&p[start..], &q, &shift, g, order);
        start = 0;
    }
    rem
}

fn first_divisor(d: &[usize]) -> usize {
    d[0]
}

fn s_poly_terms<F: Field>(f: &[(Monomial, F)], g: &[(Monomial, F)], order: &MonomialOrder) -> Terms<F> {
    let (fm, fc) = &f[0];
    let (gm, gc) = &g[0];
    let l = fm.lcm(gm);
    // lc(g)·(l/lm f)·f − lc(f)·(l/lm g)·g
    let left: Terms<F> = f.iter().map(|(m, c)| (m.mul(&l.div(fm)), c.mul(gc))).collect();
    sub_scaled(&left, fc, &l.div(gm), g, order)
}

fn to_poly<F: Field>(ring: &Arc<Ring>, t: Terms<F>) -> Polynomial<F> {
    Polynomial::from_terms(ring, t)
}

fn check_inputs<F: Field>(gens: &[Polynomial<F>]) -> Result<(), GroebnerError> {
    if let Some(first) = gens.first() {
        for g in gens {
            if g.ring() != first.ring() {
                return Err(GroebnerError::RingMismatch);
            }
            if g.is_laurent() {
                return Err(GroebnerError::LaurentInput(g.to_string()));
            }
        }
    }
    Ok(())
}

/// Remainder of multivariate division of `f` by `basis` under `order`.
pub fn normal_form<F: Field>(f: &Polynomial<F>, basis: &[Polynomial<F>], order: &MonomialOrder) -> Polynomial<F> {
    normal_form_with(f, basis, order, first_divisor)
}

/// As [`normal_form`], with a caller-chosen reducer whenever several basis
/// elements apply. For a Gröbner basis the result does not depend on the choice.
pub fn normal_form_with<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &MonomialOrder,
    mut choose: impl FnMut(&[usize]) -> usize,
) -> Polynomial<F> {
    let b: Vec<Terms<F>> = basis.iter().filter(|g| !g.is_zero()).map(|g| sorted(g, order)).collect();
    to_poly(f.ring(), reduce(&sorted(f, order), &b, order, &mut choose))
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, order: &MonomialOrder) -> Polynomial<F> {
    to_poly(f.ring(), s_poly_terms(&sorted(f, order), &sorted(g, order), order))
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>], order: &MonomialOrder) -> bool {
    let b: Vec<Terms<F>> = basis.iter().map(|g| sorted(g, order)).collect();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            let s = s_poly_terms(&b[i], &b[j], order);
            if !reduce(&s, &b, order, &mut first_divisor).is_empty() {
                return false;
            }
        }
    }
    true
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: i64,
}

fn total_degree<F>(t: &[(Monomial, F)]) -> i64 {
    t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

/// Reduced Gröbner basis of `gens`: monic, inter-reduced, sorted descending by
/// leading monomial. The zero ideal yields an empty basis.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>], order: &MonomialOrder) -> Result<Vec<Polynomial<F>>, GroebnerError> {
    check_inputs(gens)?;
    let Some(ring) = gens.first().map(|g| g.ring().clone()) else {
        return Ok(Vec::new());
    };
    let mut basis: Vec<Terms<F>> = Vec::new();
    let mut sugars: Vec<i64> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add = |h: Terms<F>,
               sugar: i64,
               basis: &mut Vec<Terms<F>>,
               sugars: &mut Vec<i64>,
               pairs: &mut Vec<Pair>,
               pending: &mut HashSet<(usize, usize)>| {
        let k = basis.len();
        let lm = h[0].0.clone();
        for (i, g) in basis.iter().enumerate() {
            let gl = &g[0].0;
            // product criterion
            if gl.is_coprime(&lm) {
                continue;
            }
            let lcm = gl.lcm(&lm);
            let s = (sugars[i] + lcm.degree() - gl.degree()).max(sugar + lcm.degree() - lm.degree());
            pairs.push(Pair { i, j: k, lcm, sugar: s });
            pending.insert((i, k));
        }
        basis.push(h);
        sugars.push(sugar);
    };

    let mut input: Vec<Terms<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| sorted(g, order)).collect();
    input.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    for g in input {
        let mut h = reduce(&g, &basis, order, &mut first_divisor);
        if h.is_empty() {
            continue;
        }
        make_primitive(&mut h);
        let s = total_degree(&g).max(total_degree(&h));
        add(h, s, &mut basis, &mut sugars, &mut pairs, &mut pending);
    }

    while !pairs.is_empty() {
        // sugar strategy: smallest sugar, then smallest lcm, ties by index
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let Pair { i, j, lcm, sugar } = pairs.swap_remove(best);
        pending.remove(&(i, j));

        // chain criterion
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chained {
            continue;
        }

        let s = s_poly_terms(&basis[i], &basis[j], order);
        let mut h = reduce(&s, &basis, order, &mut first_divisor);
        if h.is_empty() {
            continue;
        }
        make_primitive(&mut h);
        if h[0].0.is_one() {
            let mut one = h;
            make_monic(&mut one);
            return Ok(vec![to_poly(&ring, one)]);
        }
        add(h, sugar, &mut basis, &mut sugars, &mut pairs, &mut pending);
    }

    // minimize: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Terms<F>> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = &g[0].0;
        let redundant = basis.iter().enumerate().any(|(o, h)| {
            o != idx && h[0].0.divides(lm) && (h[0].0 != *lm || o < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    // inter-reduce
    let mut reduced = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Terms<F>> = keep.iter().enumerate().filter(|(o, _)| *o != idx).map(|(_, g)| g.clone()).collect();
        let mut h = reduce(&keep[idx], &others, order, &mut first_divisor);
        make_monic(&mut h);
        reduced.push(h);
    }
    reduced.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
    Ok(reduced.into_iter().map(|t| to_poly(&ring, t)).collect())
}

/// An ideal with a per-order cache of its reduced Gröbner basis.
pub struct Ideal<F: Field> {
    ring: Arc<Ring>,
    gens: Vec<Polynomial<F>>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial<F>>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Ideal").field("vars", &self.ring.vars()).field("gens", &self.gens).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Zero generators are dropped; every generator must live in `ring` and be non-Laurent.
    pub fn new(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Polynomial<F>>) -> Result<Self, GroebnerError> {
        let gens: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            if g.ring() != ring {
                return Err(GroebnerError::RingMismatch);
            }
        }
        check_inputs(&gens)?;
        Ok(Ideal { ring: ring.clone(), gens, cache: Mutex::new(HashMap::new()) })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<Vec<Polynomial<F>>> {
        if let Some(b) = self.cache.lock().unwrap().get(order) {
            return b.clone();
        }
        let b = Arc::new(buchberger(&self.gens, order).expect("generators validated on construction"));
        self.cache.lock().unwrap().insert(order.clone(), b.clone());
        b
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis(&MonomialOrder::GrevLex).iter().any(Polynomial::is_constant)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool, GroebnerError> {
        ideal_membership(f, self)
    }

    pub fn dimension(&self) -> Result<usize, GroebnerError> {
        ideal_dimension(self)
    }
}

/// True iff the normal form of `f` against the reduced basis is zero.
pub fn ideal_membership<F: Field>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool, GroebnerError> {
    if f.ring() != ideal.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    if f.is_laurent() {
        return Err(GroebnerError::LaurentInput(f.to_string()));
    }
    let order = MonomialOrder::GrevLex;
    let gb = ideal.groebner_basis(&order);
    Ok(normal_form(f, &gb, &order).is_zero())
}

/// `I ∩ K[remaining variables]`, expressed in the ring of the remaining variables
/// (original order). The returned generators are its reduced grevlex basis.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, front: &[usize]) -> Ideal<F> {
    let order = MonomialOrder::block(front.iter().copied());
    let gb = ideal.groebner_basis(&order);
    let n = ideal.ring.arity();
    let keep: Vec<usize> = (0..n).filter(|i| !front.contains(i)).collect();
    let target = ideal.ring.sub_ring(&keep);
    let mut map = vec![None; n];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = Some(new);
    }
    let gens: Vec<Polynomial<F>> = gb
        .iter()
        .filter(|g| front.iter().all(|&v| !g.uses_var(v)))
        .map(|g| g.remap(&target, &map).expect("front-free by filter"))
        .collect();
    let out = Ideal::new(&target, gens.clone()).expect("remapped generators are valid");
    // the block order restricted to the remaining variables is grevlex
    let mut sorted_gens = gens;
    sorted_gens.sort_by(|a, b| {
        let la = sorted(a, &MonomialOrder::GrevLex)[0].0.clone();
        let lb = sorted(b, &MonomialOrder::GrevLex)[0].0.clone();
        MonomialOrder::GrevLex.cmp(&lb, &la)
    });
    out.cache.lock().unwrap().insert(MonomialOrder::GrevLex, Arc::new(sorted_gens));
    out
}

/// `I : h^∞`, via a fresh variable `w`, the generator `1 − w·h`, and elimination of `w`.
pub fn saturate<F: Field>(ideal: &Ideal<F>, h: &Polynomial<F>) -> Result<Ideal<F>, GroebnerError> {
    if h.is_zero() {
        return Err(GroebnerError::ZeroSaturation);
    }
    if h.ring() != ideal.ring() {
        return Err(GroebnerError::RingMismatch);
    }
    let n = ideal.ring.arity();
    let ext = ideal.ring.extended(&["w"]);
    let w = Polynomial::var(&ext, n);
    let mut gens: Vec<Polynomial<F>> = ideal.gens.iter().map(|g| g.embed_prefix(&ext)).collect();
    gens.push(&Polynomial::one(&ext) - &(&w * &h.embed_prefix(&ext)));
    let big = Ideal::new(&ext, gens)?;
    let elim = eliminate(&big, &[n]);
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let gens = elim
        .gens
        .iter()
        .map(|g| g.remap(&ideal.ring, &map).expect("same variables"))
        .collect::<Vec<_>>();
    Ideal::new(&ideal.ring, gens)
}

/// `I : x_var^∞` without an auxiliary elimination variable.
///
/// The grevlex basis of `I` is homogenized with a new variable `h`; for the
/// homogeneous ideal, the grevlex basis with `x_var` ordered last divided by
/// the largest powers of `x_var` is a basis of the saturation, and setting
/// `h = 1` brings it back.
pub fn saturate_variable<F: Field>(ideal: &Ideal<F>, var: usize) -> Ideal<F> {
    let n = ideal.ring.arity();
    // slots in the working ring: other variables, then h, then x_var
    let slot = |i: usize| if i < var { i } else if i == var { n } else { i - 1 };
    let mut names: Vec<String> = (0..n).filter(|&i| i != var).map(|i| ideal.ring.vars()[i].clone()).collect();
    names.push("_h".to_string());
    names.push(ideal.ring.vars()[var].clone());
    let work = Ring::new(names);
    let homogenized: Vec<Polynomial<F>> = ideal
        .groebner_basis(&MonomialOrder::GrevLex)
        .iter()
        .map(|g| {
            let top = g.total_degree().unwrap_or(0);
            let terms = g.terms().iter().map(|(m, c)| {
                let mut e = vec![0; n + 1];
                for (i, &k) in m.exps().iter().enumerate() {
                    e[slot(i)] = k;
                }
                e[n - 1] = (top - m.degree()) as i32;
                (Monomial::new(e), c.clone())
            });
            Polynomial::from_terms(&work, terms)
        })
        .collect();
    let gb = buchberger(&homogenized, &MonomialOrder::GrevLex).expect("validated generators");
    let saturated = gb.iter().map(|g| {
        let k = g.terms().iter().map(|(m, _)| m.exps()[n]).min().unwrap_or(0);
        let terms = g.terms().iter().map(|(m, c)| {
            let e: Vec<i32> = (0..n).map(|i| m.exps()[slot(i)] - if i == var { k } else { 0 }).collect();
            (Monomial::new(e), c.clone())
        });
        Polynomial::from_terms(&ideal.ring, terms)
    });
    Ideal::new(&ideal.ring, saturated).expect("same ring")
}

/// Krull dimension: the largest variable set `S` such that no leading monomial
/// of the grevlex basis lies in `K[S]`.
pub fn ideal_dimension<F: Field>(ideal: &Ideal<F>) -> Result<usize, GroebnerError> {
    let n = ideal.ring.arity();
    let gb = ideal.groebner_basis(&MonomialOrder::GrevLex);
    if gb.iter().any(Polynomial::is_constant) {
        return Err(GroebnerError::UnitIdeal);
    }
    let supports: Vec<u64> = gb
        .iter()
        .map(|g| {
            let lm = &sorted(g, &MonomialOrder::GrevLex)[0].0;
            lm.exps().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u64, |acc, (i, _)| acc | (1 << i))
        })
        .collect();
    assert!(n < 64, "dimension search supports fewer than 64 variables");
    let mut best = 0;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as usize;
        if size > best && supports.iter().all(|&s| s & !set != 0) {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::poly::parse_polynomial;

    fn ring3() -> Arc<Ring> {
        Ring::new(["x", "y", "z"])
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial<Rational> {
        parse_polynomial(s, r).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring3();
        let lex = MonomialOrder::Lex;
        assert!(normal_form(&p(&r, "x^2"), &[p(&r, "x")], &lex).is_zero());
        assert_eq!(normal_form(&p(&r, "x+1"), &[p(&r, "x")], &lex), p(&r, "1"));
        let gb = buchberger(&[p(&r, "2*x+y-4"), p(&r, "x+2*y+z-1")], &lex).unwrap();
        assert!(normal_form(&p(&r, "3*y+2*z+2"), &gb, &lex).is_zero());
    }

    #[test]
    fn linear_elimination_basis() {
        let r = ring3();
        let gb = buchberger(&[p(&r, "x-y"), p(&r, "y-z")], &MonomialOrder::Lex).unwrap();
        assert_eq!(gb, vec![p(&r, "x-z"), p(&r, "y-z")]);
        let gb = buchberger(&[p(&r, "x")], &MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb, vec![p(&r, "x")]);
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = ring3();
        let gb = buchberger(&[p(&r, "x*y-1"), p(&r, "y")], &MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb, vec![p(&r, "1")]);
        let i = Ideal::new(&r, [p(&r, "x*y-1"), p(&r, "y")]).unwrap();
        assert_eq!(i.dimension(), Err(GroebnerError::UnitIdeal));
    }

    #[test]
    fn rejects_laurent_input() {
        let r = ring3();
        let f = p(&r, "x^-1 + y");
        assert!(matches!(buchberger(&[f], &MonomialOrder::Lex), Err(GroebnerError::LaurentInput(_))));
    }

    #[test]
    fn variable_saturation_matches_general() {
        let r = Ring::new(["x", "y", "z"]);
        for gens in [vec!["y*x-y"], vec!["y^2*x-y", "z*y^3"], vec!["x*y*z-z^2", "y^2-x*z"]] {
            let i = Ideal::new(&r, gens.iter().map(|g| p(&r, g))).unwrap();
            let a = saturate_variable(&i, 1);
            let b = saturate(&i, &p(&r, "y")).unwrap();
            assert_eq!(a.groebner_basis(&MonomialOrder::GrevLex), b.groebner_basis(&MonomialOrder::GrevLex), "{gens:?}");
        }
    }

    #[test]
    fn saturation_examples() {
        let r = Ring::new(["x", "y"]);
        let i = Ideal::new(&r, [p(&r, "y*(x-1)")]).unwrap();
        let s = saturate(&i, &p(&r, "y")).unwrap();
        assert_eq!(*s.groebner_basis(&MonomialOrder::Lex), vec![p(&r, "x-1")]);

        let i = Ideal::new(&r, [p(&r, "x")]).unwrap();
        let s = saturate(&i, &p(&r, "y")).unwrap();
        assert_eq!(*s.groebner_basis(&MonomialOrder::Lex), vec![p(&r, "x")]);

        let i = Ideal::new(&r, [p(&r, "y^2*x - y")]).unwrap();
        let s = saturate(&i, &p(&r, "y")).unwrap();
        assert_eq!(*s.groebner_basis(&MonomialOrder::Lex), vec![p(&r, "x*y-1")]);
    }

    #[test]
    fn eliminate_to_zero_ideal() {
        let r = Ring::new(["x", "l"]);
        let i = Ideal::new(&r, [p(&r, "x - l")]).unwrap();
        let e = eliminate(&i, &[1]);
        assert!(e.is_zero());
        assert_eq!(e.ring().vars(), &["x".to_string()]);
    }

    #[test]
    fn membership_examples() {
        let r = ring3();
        let i = Ideal::new(&r, [p(&r, "2*x+y-4"), p(&r, "x+2*y+z-1")]).unwrap();
        assert!(i.contains(&p(&r, "3*y+2*z+2")).unwrap());
        assert!(i.contains(&p(&r, "6*x^2+6*x^2*z+49*y+14*y*z+y*z^2")).unwrap());
        let j = Ideal::new(&r, [p(&r, "y")]).unwrap();
        assert!(!j.contains(&p(&r, "x")).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = ring3();
        let i = Ideal::new(&r, [p(&r, "2*x+y-4"), p(&r, "x+2*y+z-1")]).unwrap();
        assert_eq!(i.dimension().unwrap(), 1);
        let z: Ideal<Rational> = Ideal::new(&r, []).unwrap();
        assert_eq!(z.dimension().unwrap(), 3);
        let r2 = Ring::new(["x", "y"]);
        let h = Ideal::new(&r2, [p(&r2, "x*y")]).unwrap();
        assert_eq!(h.dimension().unwrap(), 1);
    }

    #[test]
    fn bases_satisfy_buchberger_criterion() {
        let r = ring3();
        let gens = [p(&r, "x^2*y - z"), p(&r, "x*y^2 - x"), p(&r, "y*z + x - 1")];
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex, MonomialOrder::block([0])] {
            let gb = buchberger(&gens, &order).unwrap();
            assert!(is_groebner_basis(&gb, &order));
            for g in &gens {
                assert!(normal_form(g, &gb, &order).is_zero());
            }
        }
    }
}
