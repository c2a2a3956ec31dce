//! Regular projections and the tropical basis driver.
//!
//! A projection `π: ℝⁿ → ℝ^{m+1}` is given by an integer basis `U` of its
//! kernel. For each kernel row the generators are lifted along a fresh variable
//! `λ_j` (`x_i ↦ x_i ∏_j λ_j^{u_i^{(j)}}`), the lifted ideal is saturated at
//! every variable and the λ's are eliminated; the resulting principal ideal
//! gives one hypersurface `g` with `T(g) = π⁻¹π(T(I))`.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arith::{Field, Rational};
use crate::exec::Exec;
use crate::groebner::{self, GroebnerError, Ideal};
use crate::linalg;
use crate::poly::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};
use crate::polyhedral::Polyhedron;
use crate::tropical::{TropicalComplex, TropicalError};

mod graded;

pub use graded::graded_search;

pub const DEFAULT_RETRY_CAP: usize = 32;
pub const DEFAULT_BOUND: i64 = 10;
/// Failures after which the random entry bound doubles.
const WIDEN_EVERY: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectionError {
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Tropical(#[from] TropicalError),
    #[error("no generators given")]
    NoGenerators,
    #[error("kernel has rank {rank}, expected {expected} independent rows")]
    KernelRank { expected: usize, rank: usize },
    #[error("kernel row has {got} entries, ring has {expected} variables")]
    KernelShape { expected: usize, got: usize },
    #[error("{got} projections given, codimension {codim} needs {expected}")]
    KernelCount { expected: usize, got: usize, codim: usize },
    #[error("dimension {dim} out of range for {n} variables")]
    BadDimension { dim: usize, n: usize },
    #[error("elimination ideal is not principal after stripping monomials ({0} generators)")]
    NonPrincipal(usize),
    #[error("elimination ideal is zero")]
    ZeroElimination,
    #[error("projection {index}: no usable kernel after {attempts} attempts")]
    RetryCapExhausted { index: usize, attempts: usize },
}

/// Kernel basis `U` (`l × n`, integer) of a projection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectionSpec {
    kernel: Vec<Vec<i64>>,
    n: usize,
}

fn as_rational(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect()
}

impl ProjectionSpec {
    pub fn new(n: usize, kernel: Vec<Vec<i64>>) -> Result<Self, ProjectionError> {
        if let Some(r) = kernel.iter().find(|r| r.len() != n) {
            return Err(ProjectionError::KernelShape { expected: n, got: r.len() });
        }
        let rank = linalg::rank(&as_rational(&kernel));
        if rank != kernel.len() {
            return Err(ProjectionError::KernelRank { expected: kernel.len(), rank });
        }
        Ok(ProjectionSpec { kernel, n })
    }

    pub fn kernel(&self) -> &[Vec<i64>] {
        &self.kernel
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.kernel.len()
    }

    /// A row matrix `A` with `A·Uᵀ = 0`; its rows span the orthogonal complement.
    pub fn row_matrix(&self) -> Vec<Vec<Rational>> {
        linalg::nullspace(&as_rational(&self.kernel), self.n)
    }
}

/// 64-bit mixing step used to derive independent seeds.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed for attempt `attempt` of projection `index`.
pub fn derive_seed(seed: u64, index: usize, attempt: usize) -> u64 {
    splitmix64(splitmix64(seed ^ splitmix64(index as u64)) ^ attempt as u64)
}

/// `l = n − (m+1)` kernel rows with entries uniform in `[−bound, bound]`,
/// drawn from ChaCha8 seeded with `seed`, redrawn until independent.
pub fn random_kernel(n: usize, m: usize, seed: u64, bound: i64) -> ProjectionSpec {
    assert!(m < n, "dimension must be below the number of variables");
    assert!(bound >= 1, "bound must be positive");
    let l = n - (m + 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<i64>> = (0..l).map(|_| (0..n).map(|_| rng.random_range(-bound..=bound)).collect()).collect();
        if let Ok(spec) = ProjectionSpec::new(n, rows) {
            return spec;
        }
    }
}

/// Two support monomials of one generator with equal dot product against a kernel row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collision {
    pub generator: usize,
    pub row: usize,
    pub alpha: Monomial,
    pub beta: Monomial,
}

/// Whether, for every generator and kernel row, the dot products `⟨α, u⟩` over
/// the support are pairwise distinct; the first collision otherwise.
pub fn check_algebraic_regularity<F: Field>(gens: &[Polynomial<F>], kernel: &[Vec<i64>]) -> Result<(), Collision> {
    for (gi, g) in gens.iter().enumerate() {
        for (row, u) in kernel.iter().enumerate() {
            let terms = g.terms();
            for (i, (a, _)) in terms.iter().enumerate() {
                for (b, _) in &terms[i + 1..] {
                    if a.dot(u) == b.dot(u) {
                        return Err(Collision { generator: gi, row, alpha: a.clone(), beta: b.clone() });
                    }
                }
            }
        }
    }
    Ok(())
}

fn lambda_names(l: usize) -> Vec<String> {
    if l == 1 {
        vec!["l".to_string()]
    } else {
        (1..=l).map(|j| format!("l{j}")).collect()
    }
}

/// The lifted generators in `K[x₁..xₙ, λ₁..λ_l]`, Laurent denominators cleared.
pub fn build_j<F: Field>(gens: &[Polynomial<F>], kernel: &[Vec<i64>]) -> Result<Ideal<F>, ProjectionError> {
    let ring = gens.first().ok_or(ProjectionError::NoGenerators)?.ring().clone();
    let n = ring.arity();
    if kernel.is_empty() {
        return Ok(Ideal::new(&ring, gens.iter().cloned())?);
    }
    let ext = ring.extended(&lambda_names(kernel.len()));
    let lifted = gens
        .iter()
        .map(|g| Ok(g.extend_exponents(&ext, kernel)?.clear_laurent_from(n)))
        .collect::<Result<Vec<_>, ProjectionError>>()?;
    Ok(Ideal::new(&ext, lifted)?)
}

/// The generator of `(J : (λ₁⋯λ_l·x₁⋯xₙ)^∞) ∩ K[x]`, normalized.
pub fn project_hypersurface<F: Field>(gens: &[Polynomial<F>], kernel: &[Vec<i64>]) -> Result<Polynomial<F>, ProjectionError> {
    let ring = gens.first().ok_or(ProjectionError::NoGenerators)?.ring().clone();
    let n = ring.arity();
    let mut j = build_j(gens, kernel)?;
    let total = j.ring().arity();
    // Saturating at each λ, then eliminating, then saturating at each x gives
    // the same ideal as saturating at the full product first: saturation at a
    // variable that survives elimination commutes with it.
    for v in n..total {
        j = groebner::saturate_variable(&j, v);
    }
    let front: Vec<usize> = (n..total).collect();
    let mut elim = if front.is_empty() { j } else { groebner::eliminate(&j, &front) };
    for v in 0..n {
        elim = groebner::saturate_variable(&elim, v);
    }
    debug_assert_eq!(elim.ring().vars(), ring.vars());
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let mut stripped: Vec<Polynomial<F>> = Vec::new();
    for g in elim.generators() {
        let g = g.remap(&ring, &map)?.strip_monomial_content()?.normalized();
        if !stripped.contains(&g) {
            stripped.push(g);
        }
    }
    match stripped.len() {
        0 => Err(ProjectionError::ZeroElimination),
        1 => Ok(stripped.pop().expect("one element")),
        k => {
            let gb = groebner::buchberger(&stripped, &MonomialOrder::GrevLex)?;
            if gb.len() == 1 {
                Ok(gb[0].normalized())
            } else {
                Err(ProjectionError::NonPrincipal(k))
            }
        }
    }
}

/// Whether all support monomials of `g` have the same dot product with each row.
pub fn kernel_homogeneous<F: Field>(g: &Polynomial<F>, kernel: &[Vec<i64>]) -> bool {
    kernel.iter().all(|u| {
        let mut dots = g.terms().iter().map(|(m, _)| m.dot(u));
        let first = dots.next();
        dots.all(|d| Some(d) == first)
    })
}

/// Where projection kernels come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelSource {
    /// Seeded random search with regularity checks and retries.
    Random { seed: u64, bound: i64, retry_cap: usize },
    /// One kernel basis per projection, used as given.
    Explicit(Vec<Vec<Vec<i64>>>),
}

/// How each projected hypersurface is computed. Both methods return the same
/// polynomial; elimination slows down sharply as kernel entries grow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProjectionMethod {
    /// Elimination for explicit kernels, graded search for random ones.
    #[default]
    Auto,
    /// [`project_hypersurface`].
    Elimination,
    /// [`graded_search`] up to [`MAX_SEARCH_DEGREE`].
    GradedSearch,
}

impl ProjectionMethod {
    fn resolve(self, source: &KernelSource) -> ProjectionMethod {
        match (self, source) {
            (ProjectionMethod::Auto, KernelSource::Explicit(_)) => ProjectionMethod::Elimination,
            (ProjectionMethod::Auto, KernelSource::Random { .. }) => ProjectionMethod::GradedSearch,
            (m, _) => m,
        }
    }

    fn run<F: Field>(self, ideal: &Ideal<F>, kernel: &[Vec<i64>]) -> Result<Polynomial<F>, ProjectionError> {
        match self {
            ProjectionMethod::GradedSearch => graded_search(ideal, kernel, MAX_SEARCH_DEGREE),
            _ => project_hypersurface(ideal.generators(), kernel),
        }
    }
}

/// Degree cap for [`ProjectionMethod::GradedSearch`] inside the driver.
pub const MAX_SEARCH_DEGREE: u32 = 48;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisOptions {
    pub kernels: KernelSource,
    /// Overrides the computed Krull dimension.
    pub dimension: Option<usize>,
    pub method: ProjectionMethod,
    pub exec: Exec,
}

impl Default for BasisOptions {
    fn default() -> Self {
        BasisOptions {
            kernels: KernelSource::Random { seed: 0, bound: DEFAULT_BOUND, retry_cap: DEFAULT_RETRY_CAP },
            dimension: None,
            method: ProjectionMethod::Auto,
            exec: Exec::default(),
        }
    }
}

/// Recorded checks for one projection output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionChecks {
    /// `g ∈ I`.
    pub contained: bool,
    pub kernel_homogeneous: bool,
    /// Outcome of the per-row distinct-dot-product test on the generators.
    pub regularity: Result<(), Collision>,
    /// Whether the regularity test was required to pass (random search) or only
    /// reported (explicit kernels).
    pub regularity_enforced: bool,
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport<F: Field = Rational> {
    pub ring: Arc<Ring>,
    pub generators: Vec<Polynomial<F>>,
    pub dimension: usize,
    /// The method actually used (never `Auto`).
    pub method: ProjectionMethod,
    pub projections: Vec<Outcome<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome<F: Field> {
    pub spec: ProjectionSpec,
    pub polynomial: Polynomial<F>,
    pub checks: ProjectionChecks,
}

impl<F: Field> BasisReport<F> {
    /// `f₁..f_r` followed by `g₀..g_{n−m}`.
    pub fn basis(&self) -> Vec<Polynomial<F>> {
        let mut out = self.generators.clone();
        out.extend(self.projections.iter().map(|p| p.polynomial.clone()));
        out
    }

    pub fn codimension(&self) -> usize {
        self.ring.arity() - self.dimension
    }

    pub fn all_checks_pass(&self) -> bool {
        self.projections.iter().all(|p| p.checks.contained && p.checks.kernel_homogeneous)
    }
}

fn one_projection<F: Field>(
    ideal: &Ideal<F>,
    gens: &[Polynomial<F>],
    m: usize,
    index: usize,
    source: &KernelSource,
    method: ProjectionMethod,
) -> Result<Outcome<F>, ProjectionError> {
    let n = ideal.ring().arity();
    let (spec, polynomial, regularity, enforced, attempts) = match source {
        KernelSource::Explicit(all) => {
            let spec = ProjectionSpec::new(n, all[index].clone())?;
            let regularity = check_algebraic_regularity(gens, spec.kernel());
            let g = method.run(ideal, spec.kernel())?;
            (spec, g, regularity, false, 1)
        }
        KernelSource::Random { seed, bound, retry_cap } => {
            let mut found = None;
            for attempt in 0..*retry_cap {
                let b = bound.saturating_mul(1 << (attempt / WIDEN_EVERY).min(30));
                let spec = random_kernel(n, m, derive_seed(*seed, index, attempt), b);
                if check_algebraic_regularity(gens, spec.kernel()).is_err() {
                    continue;
                }
                match method.run(ideal, spec.kernel()) {
                    Ok(g) => {
                        found = Some((spec, g, attempt + 1));
                        break;
                    }
                    Err(ProjectionError::NonPrincipal(_) | ProjectionError::ZeroElimination) => continue,
                    Err(e) => return Err(e),
                }
            }
            let (spec, g, attempts) =
                found.ok_or(ProjectionError::RetryCapExhausted { index, attempts: *retry_cap })?;
            (spec, g, Ok(()), true, attempts)
        }
    };
    let contained = groebner::ideal_membership(&polynomial, ideal)?;
    let kernel_homogeneous = kernel_homogeneous(&polynomial, spec.kernel());
    Ok(Outcome {
        spec,
        polynomial,
        checks: ProjectionChecks { contained, kernel_homogeneous, regularity, regularity_enforced: enforced, attempts },
    })
}

/// The input generators plus one hypersurface per projection, `codim I + 1`
/// projections in all.
pub fn compute_tropical_basis<F: Field>(gens: &[Polynomial<F>], opts: &BasisOptions) -> Result<BasisReport<F>, ProjectionError> {
    let ring = gens.first().ok_or(ProjectionError::NoGenerators)?.ring().clone();
    let n = ring.arity();
    let ideal = Ideal::new(&ring, gens.iter().cloned())?;
    let m = match opts.dimension {
        Some(d) if d >= n => return Err(ProjectionError::BadDimension { dim: d, n }),
        Some(d) => d,
        None => {
            let d = groebner::ideal_dimension(&ideal)?;
            if d >= n {
                return Err(ProjectionError::BadDimension { dim: d, n });
            }
            d
        }
    };
    let count = n - m + 1;
    if let KernelSource::Explicit(all) = &opts.kernels {
        if all.len() != count {
            return Err(ProjectionError::KernelCount { expected: count, got: all.len(), codim: n - m });
        }
        let l = n - m - 1;
        if let Some(k) = all.iter().find(|k| k.len() != l) {
            return Err(ProjectionError::KernelRank { expected: l, rank: k.len() });
        }
    }
    let method = opts.method.resolve(&opts.kernels);
    // warm the shared grevlex basis before fanning out
    let _ = ideal.groebner_basis(&MonomialOrder::GrevLex);
    let outcomes = opts.exec.map_range(count, |i| one_projection(&ideal, gens, m, i, &opts.kernels, method));
    let projections = outcomes.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(BasisReport { ring, generators: gens.to_vec(), dimension: m, method, projections })
}

/// First violated condition of geometric regularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometricViolation {
    /// The cell loses dimension under the projection.
    DimensionDrop { cell: usize },
    /// `π(σ) ⊆ π(τ)` although `σ ⊄ τ`.
    Containment { sigma: usize, tau: usize },
}

/// Checks that `π` keeps every cell's dimension and reflects cell containment.
pub fn check_geometric_regularity(
    complex: &TropicalComplex,
    spec: &ProjectionSpec,
) -> Result<Result<(), GeometricViolation>, ProjectionError> {
    if complex.arity() > 3 {
        return Err(TropicalError::UnsupportedDimension(complex.arity()).into());
    }
    if spec.ambient() != complex.arity() && !complex.is_empty() {
        return Err(ProjectionError::KernelShape { expected: complex.arity(), got: spec.ambient() });
    }
    let u = as_rational(spec.kernel());
    let cells = complex.cells();
    for (i, c) in cells.iter().enumerate() {
        let mut rows = c.polyhedron.direction_space();
        rows.extend(u.iter().cloned());
        if linalg::rank(&rows) != c.dimension + u.len() {
            return Ok(Err(GeometricViolation::DimensionDrop { cell: i }));
        }
    }
    let widened: Vec<Polyhedron> = cells.iter().map(|c| c.polyhedron.plus_subspace(&u)).collect();
    for (i, sigma) in cells.iter().enumerate() {
        for (j, tau) in cells.iter().enumerate() {
            if i != j && sigma.polyhedron.is_subset_of(&widened[j]) && !sigma.polyhedron.is_subset_of(&tau.polyhedron) {
                return Ok(Err(GeometricViolation::Containment { sigma: i, tau: j }));
            }
        }
    }
    Ok(Ok(()))
}

/// `A·Uᵀ = 0`.
pub fn orthogonal(a: &[Vec<Rational>], kernel: &[Vec<i64>]) -> bool {
    a.iter().all(|row| {
        as_rational(kernel)
            .iter()
            .all(|u| num_traits::Zero::is_zero(&row.iter().zip(u).map(|(x, y)| x * y).sum::<Rational>()))
    })
}
