//! JSON documents written by the subcommands.
//!
//! Rationals are exact strings (`"-3/2"`); polynomials use the canonical text
//! form. Plot data under `segments` additionally carries floating-point
//! coordinates.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use tropbase::polyhedral::{Constraint, Rel};
use tropbase::projection::{Collision, KernelSource, Outcome, ProjectionChecks, ProjectionMethod};
use tropbase::tropical::{Interval, Segment, TropicalComplex};
use tropbase::{BasisReport, Field, Rational};

pub const SCHEMA: u32 = 1;

pub fn q(r: &Rational) -> String {
    r.to_string()
}

pub fn qs(v: &[Rational]) -> Vec<String> {
    v.iter().map(q).collect()
}

fn approx(v: &[Rational]) -> Vec<f64> {
    v.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub schema: u32,
    pub vars: Vec<String>,
    pub field: String,
    pub inputs: Vec<String>,
    pub dimension: usize,
    pub codimension: usize,
    pub kernels: KernelsDoc,
    /// `elimination` or `graded`.
    pub method: String,
    pub projections: Vec<ProjectionDoc>,
    pub basis: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timings_ms: Option<Timings>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum KernelsDoc {
    Explicit,
    Random { seed: u64, bound: i64, retry_cap: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Timings {
    pub parse: f64,
    pub basis: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProjectionDoc {
    pub kernel: Vec<Vec<i64>>,
    pub polynomial: String,
    pub checks: ChecksDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ChecksDoc {
    pub contained: bool,
    pub kernel_homogeneous: bool,
    pub algebraic_regularity: RegularityDoc,
    pub attempts: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RegularityDoc {
    pub passed: bool,
    /// Random search requires the check; explicit kernels only report it.
    pub enforced: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub collision: Option<CollisionDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CollisionDoc {
    pub generator: usize,
    pub row: usize,
    pub alpha: Vec<i32>,
    pub beta: Vec<i32>,
}

impl From<&Collision> for CollisionDoc {
    fn from(c: &Collision) -> Self {
        CollisionDoc { generator: c.generator, row: c.row, alpha: c.alpha.exps().to_vec(), beta: c.beta.exps().to_vec() }
    }
}

pub fn checks_doc(c: &ProjectionChecks) -> ChecksDoc {
    ChecksDoc {
        contained: c.contained,
        kernel_homogeneous: c.kernel_homogeneous,
        algebraic_regularity: RegularityDoc {
            passed: c.regularity.is_ok(),
            enforced: c.regularity_enforced,
            collision: c.regularity.as_ref().err().map(CollisionDoc::from),
        },
        attempts: c.attempts,
    }
}

pub fn projection_doc<F: Field>(o: &Outcome<F>) -> ProjectionDoc {
    ProjectionDoc { kernel: o.spec.kernel().to_vec(), polynomial: o.polynomial.to_string(), checks: checks_doc(&o.checks) }
}

pub fn basis_report<F: Field>(r: &BasisReport<F>, field: String, source: &KernelSource) -> Report {
    Report {
        schema: SCHEMA,
        vars: r.ring.vars().to_vec(),
        field,
        inputs: r.generators.iter().map(ToString::to_string).collect(),
        dimension: r.dimension,
        codimension: r.codimension(),
        kernels: match source {
            KernelSource::Explicit(_) => KernelsDoc::Explicit,
            KernelSource::Random { seed, bound, retry_cap } => {
                KernelsDoc::Random { seed: *seed, bound: *bound, retry_cap: *retry_cap }
            }
        },
        method: match r.method {
            ProjectionMethod::GradedSearch => "graded".into(),
            _ => "elimination".into(),
        },
        projections: r.projections.iter().map(projection_doc).collect(),
        basis: r.basis().iter().map(ToString::to_string).collect(),
        timings_ms: None,
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ConstraintDoc {
    pub coeffs: Vec<String>,
    pub constant: String,
    pub rel: &'static str,
}

impl From<&Constraint> for ConstraintDoc {
    fn from(c: &Constraint) -> Self {
        ConstraintDoc {
            coeffs: qs(&c.coeffs),
            constant: q(&c.constant),
            rel: match c.rel {
                Rel::Eq => "=",
                Rel::Le => "<=",
                Rel::Lt => "<",
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CellDoc {
    pub ties: Vec<Vec<usize>>,
    pub dimension: usize,
    pub point: Vec<String>,
    pub constraints: Vec<ConstraintDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SegmentDoc {
    Segment { from: Vec<String>, to: Vec<String>, plot: [Vec<f64>; 2] },
    Ray { from: Vec<String>, direction: Vec<String>, plot: [Vec<f64>; 2] },
    Line { point: Vec<String>, direction: Vec<String>, plot: [Vec<f64>; 2] },
}

impl From<&Segment> for SegmentDoc {
    fn from(s: &Segment) -> Self {
        match s {
            Segment::Bounded { from, to } => SegmentDoc::Segment { from: qs(from), to: qs(to), plot: [approx(from), approx(to)] },
            Segment::Ray { from, direction } => {
                let d = tropbase::tropical::primitive_direction(direction);
                SegmentDoc::Ray { from: qs(from), direction: qs(&d), plot: [approx(from), approx(&d)] }
            }
            Segment::Line { point, direction } => {
                let d = tropbase::tropical::primitive_direction(direction);
                SegmentDoc::Line { point: qs(point), direction: qs(&d), plot: [approx(point), approx(&d)] }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct CellsReport {
    pub schema: u32,
    pub vars: Vec<String>,
    pub field: String,
    pub polynomials: Vec<String>,
    pub dimension: Option<usize>,
    pub cells: Vec<CellDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segments: Option<Vec<SegmentDoc>>,
}

pub fn cells_docs(c: &TropicalComplex) -> Vec<CellDoc> {
    c.cells()
        .iter()
        .map(|cell| CellDoc {
            ties: cell.ties.clone(),
            dimension: cell.dimension,
            point: qs(&cell.point()),
            constraints: cell.polyhedron.constraints.iter().map(ConstraintDoc::from).collect(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct IntervalDoc {
    pub lo: Option<String>,
    pub hi: Option<String>,
}

impl From<&Interval> for IntervalDoc {
    fn from(i: &Interval) -> Self {
        IntervalDoc { lo: i.lo.as_ref().map(q), hi: i.hi.as_ref().map(q) }
    }
}
