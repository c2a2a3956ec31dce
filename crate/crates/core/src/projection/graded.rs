//! Projected hypersurfaces by a degree-by-degree search.
//!
//! For prime `I`, `(J : (λx)^∞) ∩ K[x]` is the largest ideal inside
//! `I : (x₁⋯xₙ)^∞` that is homogeneous for the grading `deg xᵢ = uᵢ` (one
//! grading per kernel row). Its generator is the nonzero graded element of
//! that saturation of least total degree. Monomials are added by increasing
//! degree; each weight class keeps an echelon form of the normal forms of its
//! monomials modulo the grevlex basis, and the first dependency is `g`.
//!
//! Over ℚ the search runs modulo word-size primes. Reduction mod `p` can only
//! create dependencies, so the first degree found mod `p` is a lower bound;
//! the dependency is lifted by CRT and rational reconstruction, then checked
//! by exact membership, which makes it the answer. Anything inconsistent falls
//! back to the exact search.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;

use super::ProjectionError;
use crate::arith::{modp, Field, Rational};
use crate::groebner::{self, GroebnerError, Ideal};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Primes tried before giving up on the modular route.
const MAX_PRIMES: usize = 48;

/// Exponent vectors of total degree exactly `d` in `n` variables.
fn monomials_of_degree(n: usize, d: i32) -> Vec<Vec<i32>> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn weight(kernel: &[Vec<i64>], e: &[i32]) -> Vec<i64> {
    kernel.iter().map(|u| u.iter().zip(e).map(|(a, &b)| a * i64::from(b)).sum()).collect()
}

/// Incremental sparse echelon form of the normal forms in one weight class;
/// each row remembers which class monomials it combines.
struct Echelon<F: Field> {
    rows: Vec<(BTreeMap<Monomial, F>, BTreeMap<usize, F>)>,
    pivot: HashMap<Monomial, usize>,
}

impl<F: Field> Echelon<F> {
    fn new() -> Self {
        Echelon { rows: Vec::new(), pivot: HashMap::new() }
    }

    /// Adds column `col` with normal form `v`; returns the combination of
    /// columns if `v` is dependent on the earlier ones.
    fn push(&mut self, col: usize, v: &Polynomial<F>) -> Option<BTreeMap<usize, F>> {
        let mut vec: BTreeMap<Monomial, F> = v.terms().iter().cloned().collect();
        let mut combo = BTreeMap::from([(col, F::one())]);
        while let Some((lead, c)) = vec.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let Some(&r) = self.pivot.get(&lead) else {
                self.pivot.insert(lead, self.rows.len());
                self.rows.push((vec, combo));
                return None;
            };
            let (row, row_combo) = &self.rows[r];
            let q = c.div(&row[&lead]).expect("pivot is nonzero");
            for (m, a) in row {
                let e = vec.entry(m.clone()).or_insert_with(F::zero);
                *e = e.sub(&q.mul(a));
                if e.is_zero() {
                    vec.remove(m);
                }
            }
            for (k, a) in row_combo {
                let e = combo.entry(*k).or_insert_with(F::zero);
                *e = e.sub(&q.mul(a));
                if e.is_zero() {
                    combo.remove(k);
                }
            }
        }
        Some(combo)
    }
}

/// The same hypersurface as [`super::project_hypersurface`], found without an
/// elimination order. A miss up to `max_degree` is
/// [`ProjectionError::ZeroElimination`]; several least-degree candidates give
/// [`ProjectionError::NonPrincipal`].
pub fn graded_search<F: Field>(
    ideal: &Ideal<F>,
    kernel: &[Vec<i64>],
    max_degree: u32,
) -> Result<Polynomial<F>, ProjectionError> {
    let ring = ideal.ring().clone();
    let order = MonomialOrder::GrevLex;
    if ideal.groebner_basis(&order).iter().any(Polynomial::is_constant) {
        return Err(GroebnerError::UnitIdeal.into());
    }
    // Work in the Laurent ring: a monomial in I leaves nothing in the torus.
    let mut sat = ideal.clone();
    for v in 0..ring.arity() {
        sat = groebner::saturate_variable(&sat, v);
    }
    let gb = sat.groebner_basis(&order);
    if gb.iter().any(Polynomial::is_constant) {
        return Ok(Polynomial::one(&ring));
    }
    if let Some(r) = modular_search(&gb, kernel, max_degree) {
        return r;
    }
    exact_search(&gb, kernel, max_degree)
}

fn exact_search<F: Field>(
    gb: &[Polynomial<F>],
    kernel: &[Vec<i64>],
    max_degree: u32,
) -> Result<Polynomial<F>, ProjectionError> {
    let ring = gb[0].ring().clone();
    let n = ring.arity();
    let order = MonomialOrder::GrevLex;
    let mut nf: HashMap<Vec<i32>, Polynomial<F>> = HashMap::new();
    let mut classes: HashMap<Vec<i64>, (Vec<Vec<i32>>, Echelon<F>)> = HashMap::new();
    for d in 0..=max_degree as i32 {
        let mut found: Vec<Polynomial<F>> = Vec::new();
        for e in monomials_of_degree(n, d) {
            let reduced = match e.iter().position(|&k| k > 0) {
                None => groebner::normal_form(&Polynomial::one(&ring), gb, &order),
                Some(i) => {
                    let mut prev = e.clone();
                    prev[i] -= 1;
                    groebner::normal_form(&(&nf[&prev] * &Polynomial::var(&ring, i)), gb, &order)
                }
            };
            let (cols, echelon) = classes.entry(weight(kernel, &e)).or_insert_with(|| (Vec::new(), Echelon::new()));
            cols.push(e.clone());
            if let Some(combo) = echelon.push(cols.len() - 1, &reduced) {
                let terms = combo.into_iter().map(|(k, c)| (Monomial::new(cols[k].clone()), c));
                found.push(Polynomial::from_terms(&ring, terms).normalized());
            }
            nf.insert(e, reduced);
        }
        match found.len() {
            0 => continue,
            1 => return Ok(found.pop().expect("one element")),
            k => return Err(ProjectionError::NonPrincipal(k)),
        }
    }
    Err(ProjectionError::ZeroElimination)
}

/// A sparse vector over the standard monomials, sorted by index.
type Sparse = Vec<(u32, u64)>;

/// A monic grevlex basis reduced mod `p`: `x^lead ≡ Σ c·x^m` over the tail.
struct ModBasis {
    p: u64,
    rules: Vec<(Vec<i32>, Vec<(Vec<i32>, u64)>)>,
    /// Largest degree gap between a leading monomial and its tail.
    drop: i32,
}

impl ModBasis {
    fn new<F: Field>(gb: &[Polynomial<F>], p: u64) -> Option<ModBasis> {
        let order = MonomialOrder::GrevLex;
        let mut rules = Vec::new();
        let mut drop = 0;
        for g in gb {
            let mut terms: Vec<&(Monomial, F)> = g.terms().iter().collect();
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
            let (lead, lc) = terms[0];
            let lc_inv = modp::inv(lc.residue(p).filter(|&r| r != 0)?, p);
            let mut tail = Vec::new();
            for (m, c) in &terms[1..] {
                let r = modp::mul(c.residue(p)?, lc_inv, p);
                tail.push((m.exps().to_vec(), modp::neg(r, p)));
                drop = drop.max((lead.degree() - m.degree()) as i32);
            }
            rules.push((lead.exps().to_vec(), tail));
        }
        Some(ModBasis { p, rules, drop })
    }
}

/// The modular echelon of one weight class.
#[derive(Default)]
struct ModEchelon {
    rows: Vec<(Sparse, Sparse)>,
    pivot: HashMap<u32, usize>,
}

impl ModEchelon {
    fn push(&mut self, col: u32, v: &Sparse, p: u64) -> Option<Sparse> {
        let mut vec: BTreeMap<u32, u64> = v.iter().copied().collect();
        let mut combo: BTreeMap<u32, u64> = BTreeMap::from([(col, 1)]);
        let axpy = |acc: &mut BTreeMap<u32, u64>, q: u64, row: &Sparse| {
            for &(k, a) in row {
                let e = acc.entry(k).or_insert(0);
                *e = modp::add(*e, modp::neg(modp::mul(q, a, p), p), p);
                if *e == 0 {
                    acc.remove(&k);
                }
            }
        };
        while let Some((&lead, &c)) = vec.iter().next_back() {
            let Some(&r) = self.pivot.get(&lead) else {
                // store rows scaled to a unit pivot
                let s = modp::inv(c, p);
                let scale = |m: BTreeMap<u32, u64>| m.into_iter().map(|(k, a)| (k, modp::mul(a, s, p))).collect();
                self.pivot.insert(lead, self.rows.len());
                self.rows.push((scale(vec), scale(combo)));
                return None;
            };
            let (row, row_combo) = &self.rows[r];
            axpy(&mut vec, c, row);
            axpy(&mut combo, c, row_combo);
        }
        Some(combo.into_iter().collect())
    }
}

/// What one prime reports: the first degree with a dependency and, per
/// dependency, its weight class, the class columns so far and the combination.
struct ModFound {
    degree: i32,
    deps: Vec<(Vec<i64>, Vec<Vec<i32>>, Sparse)>,
}

/// Runs the search mod `basis.p`. With `only`, a single weight class is
/// tracked and the search stops after the given degree.
fn search_mod(
    basis: &ModBasis,
    n: usize,
    kernel: &[Vec<i64>],
    max_degree: i32,
    only: Option<(&[i64], i32)>,
) -> Option<ModFound> {
    let p = basis.p;
    let order = MonomialOrder::GrevLex;
    let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
    let mut nf: HashMap<Vec<i32>, Sparse> = HashMap::new();
    let mut layers: Vec<Vec<Vec<i32>>> = Vec::new();
    let mut classes: HashMap<Vec<i64>, (Vec<Vec<i32>>, ModEchelon)> = HashMap::new();
    let mut acc: Vec<u64> = Vec::new();
    let mut touched: Vec<u32> = Vec::new();
    let last = only.map_or(max_degree, |(_, d)| d);
    for d in 0..=last {
        let mut layer = monomials_of_degree(n, d);
        // tails reduce to smaller monomials, so ascending order has them ready
        layer.sort_by(|a, b| order.cmp(&Monomial::new(a.clone()), &Monomial::new(b.clone())));
        let mut deps = Vec::new();
        for e in &layer {
            let rule = basis.rules.iter().find(|(lead, _)| lead.iter().zip(e).all(|(l, x)| l <= x));
            let v: Sparse = match rule {
                None => {
                    let i = index.len() as u32;
                    index.insert(e.clone(), i);
                    acc.push(0);
                    vec![(i, 1)]
                }
                Some((lead, tail)) => {
                    for (m, c) in tail {
                        let key: Vec<i32> = e.iter().zip(lead).zip(m).map(|((x, l), y)| x - l + y).collect();
                        for &(k, a) in &nf[&key] {
                            let slot = &mut acc[k as usize];
                            if *slot == 0 {
                                touched.push(k);
                            }
                            *slot = modp::add(*slot, modp::mul(*c, a, p), p);
                        }
                    }
                    touched.sort_unstable();
                    let v = touched.iter().filter(|&&k| acc[k as usize] != 0).map(|&k| (k, acc[k as usize])).collect();
                    for k in touched.drain(..) {
                        acc[k as usize] = 0;
                    }
                    v
                }
            };
            let w = weight(kernel, e);
            if only.is_none_or(|(target, _)| target == w.as_slice()) {
                let (cols, ech) = classes.entry(w.clone()).or_default();
                cols.push(e.clone());
                if let Some(combo) = ech.push(cols.len() as u32 - 1, &v, p) {
                    deps.push((w, cols.clone(), combo));
                }
            }
            nf.insert(e.clone(), v);
        }
        if !deps.is_empty() {
            return Some(ModFound { degree: d, deps });
        }
        // degree d + 1 reads nothing below d + 1 - drop
        layers.push(layer);
        if let Ok(old) = usize::try_from(d - basis.drop) {
            for e in std::mem::take(&mut layers[old]) {
                nf.remove(&e);
            }
        }
    }
    None
}

/// `Some` when the modular route settles the answer; `None` defers to the
/// exact search.
fn modular_search<F: Field>(
    gb: &[Polynomial<F>],
    kernel: &[Vec<i64>],
    max_degree: u32,
) -> Option<Result<Polynomial<F>, ProjectionError>> {
    if F::one().residue(2).is_none() {
        return None;
    }
    let ring = gb[0].ring().clone();
    let n = ring.arity();
    let mut primes = modp::primes().filter_map(|p| ModBasis::new(gb, p)).take(MAX_PRIMES);
    let first = primes.next()?;
    let Some(found) = search_mod(&first, n, kernel, max_degree as i32, None) else {
        return Some(Err(ProjectionError::ZeroElimination));
    };
    let [(class, cols, combo)] = found.deps.as_slice() else {
        return None;
    };
    let width = cols.len();
    let dense = |c: &Sparse| {
        let mut v = vec![0u64; width];
        for &(k, a) in c {
            v[k as usize] = a;
        }
        v
    };
    let mut residues: Vec<BigInt> = dense(combo).into_iter().map(BigInt::from).collect();
    let mut modulus = BigInt::from(first.p);
    let mut previous: Option<Vec<Rational>> = None;
    let order = MonomialOrder::GrevLex;
    for basis in primes {
        let again = search_mod(&basis, n, kernel, found.degree, Some((class, found.degree)))?;
        let [(c2, cols2, combo2)] = again.deps.as_slice() else {
            return None;
        };
        if again.degree != found.degree || c2 != class || cols2.len() != width {
            return None;
        }
        for (r, b) in residues.iter_mut().zip(dense(combo2)) {
            *r = modp::crt(r, &modulus, b, basis.p);
        }
        modulus *= basis.p;
        let lifted: Option<Vec<Rational>> = residues.iter().map(|r| modp::reconstruct(r, &modulus)).collect();
        let Some(lifted) = lifted else { continue };
        if previous.as_ref() == Some(&lifted) {
            let terms = cols
                .iter()
                .zip(&lifted)
                .filter(|(_, c)| !Zero::is_zero(*c))
                .map(|(e, c)| (Monomial::new(e.clone()), F::from_rational(c)));
            let g = Polynomial::from_terms(&ring, terms);
            if groebner::normal_form(&g, gb, &order).is_zero() {
                return Some(Ok(g.normalized()));
            }
        }
        previous = Some(lifted);
    }
    None
}
