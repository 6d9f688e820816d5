//! Hole set `ℋ` and sumsets regularity `σ(A)`.
//!
//! Everything here works in the frame where the singular vertex (if any)
//! sits at position 0; see [`normal_frame`].

use serde::Serialize;

use crate::classify::{ClassificationReport, Verdict};
use crate::error::{Error, Result};
use crate::lattice::{step_threshold, GeneratorSet, LatticeVector, SimplexSlice, SumsetTower};

/// `A` with its singular vertex moved to position 0 (identity when smooth).
pub fn normal_frame(a: &GeneratorSet, report: &ClassificationReport) -> Result<GeneratorSet> {
    match report.verdict {
        Verdict::Smooth => Ok(a.clone()),
        Verdict::OneSingular => Ok(a.swap_vertex(report.singular_vertex.unwrap_or(0))),
        Verdict::Other => Err(Error::Unsupported(
            "σ is only defined for smooth and one-singular instances".into(),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaBounds {
    pub t0: i64,
    pub s0: i64,
    /// `⌈d − (d+e−1)/D⌉`, also the step threshold.
    pub lower: i64,
    /// `⌈d − (d−e+1)/D⌉`, the variant printed with the general bound.
    pub lower_alt: i64,
    pub upper: i64,
}

fn ceil_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}

pub fn sigma_bounds(d: usize, degree: i64, e: i64, verdict: Verdict) -> SigmaBounds {
    let di = d as i64;
    let q = degree / e;
    let t0 = ((degree - 2) * (di - 1) + q - 2).max(0);
    let s0 = q * t0;
    let lower = step_threshold(d, degree, e);
    let lower_alt = ceil_div(di * degree - di + e - 1, degree).max(0);
    let upper = match (verdict, degree) {
        (Verdict::Smooth, 2) => di - di / 2,
        (Verdict::Smooth, _) => di * (degree - 2),
        (_, 2) => (di - 1 + 1) / 2,
        _ => q * ((di - 1) * (degree - 2) + q - 2),
    };
    SigmaBounds {
        t0,
        s0,
        lower,
        lower_alt,
        upper,
    }
}

/// Points of `ℕ_e^d` outside `⟨A⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoleSet {
    pub points: Vec<LatticeVector>,
    /// Smallest `s` with every hole in `Δ_{s,e}`.
    pub enclosing_level: u32,
}

impl HoleSet {
    pub fn empty() -> Self {
        HoleSet {
            points: Vec::new(),
            enclosing_level: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn from_points(points: Vec<LatticeVector>, degree: i64) -> Self {
        let top = points.iter().map(LatticeVector::norm).max().unwrap_or(0);
        HoleSet {
            points,
            enclosing_level: ceil_div(top, degree) as u32,
        }
    }

    /// Holes of norm at most `bound`.
    pub fn count_within(&self, bound: i64) -> u64 {
        self.points.iter().filter(|p| p.norm() <= bound).count() as u64
    }
}

/// `Δ_{t,e} ∖ L·A` read off a computed level `L ≥ t`.
pub fn holes_at_level(tower: &mut SumsetTower, t: u32, level: u32) -> Result<HoleSet> {
    tower.ensure(level.max(t))?;
    let gens = tower.generators();
    let slice = SimplexSlice::new(gens.dim(), gens.degree(), t, gens.norm_divisor());
    let lv = tower.level(level);
    let points = slice.iter().filter(|p| !lv.contains(p)).collect();
    Ok(HoleSet::from_points(points, tower.generators().degree()))
}

/// `ℋ = Δ_{t₀,e} ∖ s₀A` for one-singular instances; for smooth ones checks
/// `d(D−2)A = Δ_{d(D−2)}` and returns the empty set.
///
/// `tower` must be built on the normal frame.
pub fn compute_holes(tower: &mut SumsetTower, report: &ClassificationReport) -> Result<HoleSet> {
    let gens = tower.generators().clone();
    let (d, degree) = (gens.dim(), gens.degree());
    match report.verdict {
        Verdict::Other => Err(Error::Unsupported(
            "holes are only computed for smooth and one-singular instances".into(),
        )),
        Verdict::Smooth => {
            let t = (d as i64 * (degree - 2)).max(0) as u32;
            let lv = tower.sumset(t)?;
            if lv.cardinality() != lv.slice().size() {
                return Err(Error::Contradiction(format!(
                    "smooth instance with {t}A ≠ Δ_{t}"
                )));
            }
            Ok(HoleSet::empty())
        }
        Verdict::OneSingular => {
            let e = gens.norm_divisor();
            let b = sigma_bounds(d, degree, e, report.verdict);
            holes_at_level(tower, b.t0 as u32, b.s0 as u32)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaResult {
    pub sigma: u32,
    pub holes: Vec<LatticeVector>,
    pub enclosing_level: u32,
    pub t0: i64,
    pub s0: i64,
    pub lower: i64,
    pub lower_alt: i64,
    pub upper: i64,
    /// Levels `[a, b]` on which `s′A = Δ_{s′,e} ∖ ℋ` was checked.
    pub window_verified: [u32; 2],
    pub step_threshold: i64,
    pub e: i64,
}

impl SigmaResult {
    pub fn hole_set(&self) -> HoleSet {
        HoleSet {
            points: self.holes.clone(),
            enclosing_level: self.enclosing_level,
        }
    }

    pub fn bounds(&self) -> SigmaBounds {
        SigmaBounds {
            t0: self.t0,
            s0: self.s0,
            lower: self.lower,
            lower_alt: self.lower_alt,
            upper: self.upper,
        }
    }
}

/// Whether `sA = Δ_{s,e} ∖ ℋ`. Requires level `s` computed.
pub fn level_matches(tower: &SumsetTower, s: u32, holes: &HoleSet) -> bool {
    let lv = tower.level(s);
    let inside = holes.count_within(lv.slice().bound());
    lv.cardinality() + inside == lv.slice().size()
        && holes.points.iter().all(|h| !lv.contains(h))
}

/// `σ(A)` for a smooth or one-singular instance. `tower` must be built on
/// the normal frame.
pub fn sigma(tower: &mut SumsetTower, report: &ClassificationReport) -> Result<SigmaResult> {
    let gens = tower.generators().clone();
    let (d, degree, e) = (gens.dim(), gens.degree(), gens.norm_divisor());
    let holes = compute_holes(tower, report)?;
    let b = sigma_bounds(d, degree, e, report.verdict);
    let threshold = b.lower;
    let make = |sigma: u32, window: [u32; 2], holes: &HoleSet| SigmaResult {
        sigma,
        holes: holes.points.clone(),
        enclosing_level: holes.enclosing_level,
        t0: b.t0,
        s0: b.s0,
        lower: b.lower,
        lower_alt: b.lower_alt,
        upper: b.upper,
        window_verified: window,
        step_threshold: threshold,
        e,
    };
    match report.verdict {
        Verdict::Other => unreachable!("rejected by compute_holes"),
        Verdict::Smooth => {
            let start = threshold.max(0) as u32;
            let limit = b.upper.max(threshold) as u32;
            for s in start..=limit {
                tower.ensure(s)?;
                if level_matches(tower, s, &holes) {
                    return Ok(make(s, [s, s], &holes));
                }
            }
            Err(Error::Contradiction(format!(
                "no level in [{start}, {limit}] satisfies sA = Δ_s"
            )))
        }
        Verdict::OneSingular => {
            let start = (holes.enclosing_level as i64).max(threshold) as u32;
            let limit = b.upper.max(threshold).max(b.s0) as u32;
            let s0 = b.s0 as u32;
            let top = limit.max(s0);
            tower.ensure(top)?;
            let good: Vec<bool> = (0..=top).map(|s| level_matches(tower, s, &holes)).collect();
            for s in start..=limit {
                let end = s.max(s0);
                if (s..=end).all(|t| good[t as usize]) {
                    return Ok(make(s, [s, end], &holes));
                }
            }
            Err(Error::Contradiction(format!(
                "no level in [{start}, {limit}] stabilizes to Δ_{{s,{e}}} ∖ ℋ"
            )))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaBoundsReport {
    pub sigma: u32,
    pub lower: i64,
    pub lower_alt: i64,
    pub upper: i64,
    pub lower_holds: bool,
    pub lower_alt_holds: bool,
    pub upper_holds: bool,
    pub slack_lower: i64,
    pub slack_upper: i64,
}

impl SigmaBoundsReport {
    pub fn holds(&self) -> bool {
        self.lower_holds && self.upper_holds
    }
}

pub fn verify_sigma_bounds(res: &SigmaResult) -> SigmaBoundsReport {
    let s = res.sigma as i64;
    SigmaBoundsReport {
        sigma: res.sigma,
        lower: res.lower,
        lower_alt: res.lower_alt,
        upper: res.upper,
        lower_holds: res.lower <= s,
        lower_alt_holds: res.lower_alt <= s,
        upper_holds: s <= res.upper,
        slack_lower: s - res.lower,
        slack_upper: res.upper - s,
    }
}

/// `(s+1)A ∖ sA = Δ_{s+1,e} ∖ Δ_{s,e}` for every `s` in the verified window.
pub fn stabilization_holds(tower: &mut SumsetTower, res: &SigmaResult) -> Result<bool> {
    let [a, b] = res.window_verified;
    tower.ensure(b + 1)?;
    for s in a..=b {
        let lo = tower.level(s);
        let hi = tower.level(s + 1);
        let bound = lo.slice().bound();
        for p in hi.slice().iter() {
            let new = hi.contains(&p) && !lo.contains(&p);
            if new != (p.norm() > bound) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
