//! Smooth / one-singular-point classification of `X_A`.
//!
//! Two independent criteria are evaluated and must agree:
//!
//! * membership of a fixed list of vectors in `A` (after moving the candidate
//!   singular vertex to position 0), and
//! * the affine charts: chart `i` is smooth iff the minimal generating set of
//!   its semigroup has as many elements as the rank of its lattice.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{BitSet, GeneratorSet, LatticeVector, SimplexSlice};
use crate::linalg;

/// One affine chart: the homogenized generators with coordinate `index`
/// deleted, leaving out `D·ε_index` itself (which becomes zero).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AffineChart {
    pub index: usize,
    pub generators: Vec<LatticeVector>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Smooth,
    OneSingular,
    Other,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Smooth => "Smooth",
            Verdict::OneSingular => "OneSingular",
            Verdict::Other => "Other",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Certificates {
    /// Vectors required by the criterion, all found in `A` (for the singular
    /// case, in the frame where the singular vertex sits at position 0).
    pub required: Vec<LatticeVector>,
    /// For `e = 1`: a unit vector missing from `A`.
    pub missing_unit: Option<LatticeVector>,
    /// For `Other`: the charts that are not smooth.
    pub non_smooth_charts: Vec<usize>,
    /// For `Other`: human-readable reasons.
    pub failed: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    /// `1` for smooth, the divisor `e` for one-singular, `None` otherwise.
    pub e: Option<i64>,
    pub singular_vertex: Option<usize>,
    pub certificates: Certificates,
    /// Smoothness of charts `0..=d`.
    pub chart_smooth: Vec<bool>,
    /// The smooth set of dimension `d − 1` behind an `e = D` instance.
    pub reduced: Option<GeneratorSet>,
}

impl ClassificationReport {
    pub fn is_supported(&self) -> bool {
        self.verdict != Verdict::Other
    }
}

/// Affine charts `0..=d` of the homogenized set.
pub fn charts(a: &GeneratorSet) -> Vec<AffineChart> {
    let h = a.homogenize();
    let degree = a.degree();
    (0..=a.dim())
        .map(|i| {
            let mut generators: Vec<LatticeVector> = h
                .points()
                .iter()
                .filter(|b| b.coords()[i] != degree)
                .map(|b| b.delete_coord(i))
                .collect();
            generators.sort();
            generators.dedup();
            AffineChart {
                index: i,
                generators,
            }
        })
        .collect()
}

/// Minimal generating set of the affine semigroup `⟨B⟩`, `B` nonzero.
///
/// `b ∈ B` is kept iff it is not `g + z` with `g ∈ B` and `z ∈ ⟨B⟩ ∖ {0}`.
/// Semigroup membership is tabulated over all points of norm `≤ max|b|`.
pub fn minimal_generators(b: &[LatticeVector]) -> Vec<LatticeVector> {
    if b.is_empty() {
        return Vec::new();
    }
    let dim = b[0].dim();
    assert!(b.iter().all(|v| v.norm() > 0), "generators must be nonzero");
    let top = b.iter().map(LatticeVector::norm).max().unwrap_or(0);
    let region = SimplexSlice::new(dim, top, 1, 1);
    let mut member = BitSet::new(region.size() as usize);
    member.insert(0);
    // Colex order refines the componentwise order, so y − g is settled before y.
    for (idx, y) in region.iter().enumerate().skip(1) {
        if b
            .iter()
            .filter_map(|g| y.checked_sub(g))
            .any(|z| member.contains(region.rank_unchecked(z.coords()) as usize))
        {
            member.insert(idx);
        }
    }
    let mut out: Vec<LatticeVector> = b
        .iter()
        .filter(|&v| {
            !b.iter().any(|g| {
                g != v
                    && v.checked_sub(g)
                        .is_some_and(|z| member.contains(region.rank_unchecked(z.coords()) as usize))
            })
        })
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Rank of the rational span of a set of vectors.
pub fn span_rank(b: &[LatticeVector]) -> usize {
    let rows: Vec<Vec<i64>> = b.iter().map(|v| v.coords().to_vec()).collect();
    linalg::rank_q(&rows)
}

pub fn is_chart_smooth(chart: &AffineChart) -> bool {
    minimal_generators(&chart.generators).len() == span_rank(&chart.generators)
}

/// Smallest `λ` with `0 < λ < D` and `(D−λ)εᵢ + λεⱼ` among the homogenized
/// generators. `λ = D` always exists (`D·εⱼ`) and is not reported.
pub fn lambda_min(a: &GeneratorSet, i: usize, j: usize) -> Option<i64> {
    assert!(i != j && i <= a.dim() && j <= a.dim());
    let degree = a.degree();
    a.homogenize()
        .points()
        .iter()
        .filter_map(|b| {
            let c = b.coords();
            let lambda = c[j];
            (lambda > 0 && lambda < degree && c[i] == degree - lambda).then_some(lambda)
        })
        .min()
}

fn smooth_requirements(d: usize, degree: i64) -> Vec<LatticeVector> {
    let mut req = vec![LatticeVector::zero(d)];
    for i in 0..d {
        req.push(LatticeVector::axis(d, i, 1));
        req.push(LatticeVector::axis(d, i, degree - 1));
        for j in 0..d {
            if i != j {
                req.push(LatticeVector::axis(d, i, 1).add(&LatticeVector::axis(d, j, degree - 1)));
            }
        }
    }
    req.sort();
    req.dedup();
    req
}

fn singular_requirements(d: usize, degree: i64, e: i64) -> Vec<LatticeVector> {
    let mut req = vec![LatticeVector::zero(d)];
    for i in 0..d {
        req.push(LatticeVector::axis(d, i, degree - e));
        for j in 0..d {
            req.push(LatticeVector::axis(d, i, degree - 1).add(&LatticeVector::axis(d, j, 1)));
        }
    }
    req.sort();
    req.dedup();
    req
}

/// Tests the one-singular criterion with the singular vertex at position 0.
/// Returns `(e, required, missing unit)` on success.
fn singular_at_origin(a: &GeneratorSet) -> Option<(i64, Vec<LatticeVector>, Option<LatticeVector>)> {
    let d = a.dim();
    let e = a.norm_divisor();
    let req = singular_requirements(d, a.degree(), e);
    if !req.iter().all(|v| a.contains(v)) {
        return None;
    }
    let missing = if e == 1 {
        let m = (0..d)
            .map(|j| LatticeVector::axis(d, j, 1))
            .find(|u| !a.contains(u))?;
        Some(m)
    } else {
        None
    };
    Some((e, req, missing))
}

/// `B' = {(a₂,…,a_d) : a ∈ A, |a| = D}` for an `e = D` instance with the
/// singular vertex at 0. `None` when `d = 1`.
pub fn reduce_e_equals_d(a: &GeneratorSet, report: &ClassificationReport) -> Result<Option<GeneratorSet>> {
    let (Verdict::OneSingular, Some(e), Some(k)) = (report.verdict, report.e, report.singular_vertex) else {
        return Err(Error::Precondition("the reduction needs a one-singular instance".into()));
    };
    if e != a.degree() {
        return Err(Error::Precondition(format!(
            "the reduction needs e = D, got e = {e}, D = {}",
            a.degree()
        )));
    }
    if a.dim() == 1 {
        return Ok(None);
    }
    let frame = a.swap_vertex(k);
    let pts: Vec<Vec<i64>> = frame
        .points()
        .iter()
        .filter(|p| p.norm() == a.degree())
        .map(|p| p.coords()[1..].to_vec())
        .collect();
    GeneratorSet::new(a.dim() - 1, pts).map(Some)
}

/// Classifies `X_A`. Inputs whose homogenized coordinates share a factor are
/// rejected, since the criteria assume that factor is 1.
pub fn classify(a: &GeneratorSet) -> Result<ClassificationReport> {
    let g = a.coordinate_gcd();
    if g > 1 {
        return Err(Error::InvalidInstance(format!(
            "all homogenized coordinates are divisible by {g}; divide the points by {g} first"
        )));
    }
    let d = a.dim();
    let chart_smooth: Vec<bool> = charts(a).iter().map(is_chart_smooth).collect();
    let non_smooth: Vec<usize> = (0..=d).filter(|&i| !chart_smooth[i]).collect();

    let smooth_req = smooth_requirements(d, a.degree());
    if smooth_req.iter().all(|v| a.contains(v)) {
        if !non_smooth.is_empty() {
            return Err(Error::Internal(format!(
                "membership criterion says smooth but charts {non_smooth:?} are singular"
            )));
        }
        return Ok(ClassificationReport {
            verdict: Verdict::Smooth,
            e: Some(1),
            singular_vertex: None,
            certificates: Certificates {
                required: smooth_req,
                ..Certificates::default()
            },
            chart_smooth,
            reduced: None,
        });
    }

    for k in 0..=d {
        let frame = a.swap_vertex(k);
        let Some((e, required, missing_unit)) = singular_at_origin(&frame) else {
            continue;
        };
        if non_smooth != [k] {
            return Err(Error::Internal(format!(
                "membership criterion puts the singular point at vertex {k} but the non-smooth charts are {non_smooth:?}"
            )));
        }
        let mut report = ClassificationReport {
            verdict: Verdict::OneSingular,
            e: Some(e),
            singular_vertex: Some(k),
            certificates: Certificates {
                required,
                missing_unit,
                ..Certificates::default()
            },
            chart_smooth,
            reduced: None,
        };
        if e == a.degree() {
            report.reduced = reduce_e_equals_d(a, &report)?;
        }
        return Ok(report);
    }

    if non_smooth.len() <= 1 {
        return Err(Error::Internal(format!(
            "no membership criterion holds but the non-smooth charts are {non_smooth:?}"
        )));
    }
    let failed = vec![
        "the smooth configuration is not contained in A".to_string(),
        "no vertex satisfies the one-singular configuration".to_string(),
    ];
    Ok(ClassificationReport {
        verdict: Verdict::Other,
        e: None,
        singular_vertex: None,
        certificates: Certificates {
            non_smooth_charts: non_smooth,
            failed,
            ..Certificates::default()
        },
        chart_smooth,
        reduced: None,
    })
}
