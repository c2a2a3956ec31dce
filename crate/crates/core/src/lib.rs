//! Short tropical bases of prime ideals by regular projections.
//!
//! The pipeline substitutes `x_i ↦ x_i·∏ λ_j^{u_i^{(j)}}` for an integer kernel
//! basis `U` of a projection, saturates on the torus, and eliminates the λ's.
//! The single polynomial left over cuts out `π⁻¹π(T(I))`; `codim I + 1`
//! such polynomials together with the generators form a tropical basis.
//!
//! Everything is exact: coefficients live in ℚ (p-adic valuation) or ℚ(t)
//! (t-adic valuation), and every tropical comparison is a rational one.

pub mod arith;
pub mod exec;
pub mod groebner;
pub mod linalg;
pub mod newton;
pub mod poly;
pub mod polyhedral;
pub mod projection;
pub mod tropical;

pub use arith::{Field, PAdic, RatFunc, Rational, TAdic, Val, Valuation};
pub use exec::Exec;
pub use groebner::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Ring};
pub use projection::{compute_tropical_basis, BasisOptions, BasisReport, KernelSource, ProjectionMethod, ProjectionSpec};
pub use tropical::{tropicalize, TropicalComplex, TropicalForm};
