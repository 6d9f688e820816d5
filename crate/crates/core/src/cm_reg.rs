//! Castelnuovo–Mumford regularity through the complexes `T_y`, the degree
//! through maximal minors, and the Eisenbud–Goto comparison.
//!
//! `reg = max { |y|/D − (i+1) : y ∈ S_A, β̃_i(T_y) ≠ 0 }`. The sweep visits
//! every `y` up to a level past which no `y` can contribute: `σ+d+1` for
//! smooth sets and `σ+d+2` for one-singular ones.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classify::{classify, ClassificationReport, Verdict};
use crate::error::{Error, Result};
use crate::homology::{build_t, reduced_homology, Field};
use crate::lattice::{GeneratorSet, LatticeVector, SumsetTower, DEFAULT_MAX_SLICE};
use crate::linalg;
use crate::sumset_reg::{normal_frame, sigma, SigmaResult};

fn ser_big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_u64() {
        Some(x) => s.serialize_u64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeResult {
    #[serde(serialize_with = "ser_big")]
    pub theta: BigInt,
    #[serde(serialize_with = "ser_big")]
    pub degree: BigInt,
    pub codim: i64,
    pub minors_checked: u64,
}

/// `θ = gcd` of the `(d+1)×(d+1)` minors of the homogenized generator
/// matrix, `deg = D^{d+1}/θ`, `codim = |A| − 1 − d`.
///
/// `D` divides every minor (each column sums to `D`), so the scan stops as
/// soon as the running gcd reaches `D`.
pub fn degree(a: &GeneratorSet) -> Result<DegreeResult> {
    let h = a.homogenize();
    let cols: Vec<&[i64]> = h.points().iter().map(|p| p.coords()).collect();
    let k = a.dim() + 1;
    let n = cols.len();
    let floor = BigInt::from(a.degree());
    let mut g = BigInt::zero();
    let mut checked = 0u64;
    let mut idx: Vec<usize> = (0..k).collect();
    let mut m = vec![vec![0i64; k]; k];
    loop {
        for (c, &j) in idx.iter().enumerate() {
            for r in 0..k {
                m[r][c] = cols[j][r];
            }
        }
        let minor = linalg::det(&m);
        g = g.gcd(&minor);
        checked += 1;
        if g == floor {
            break;
        }
        // next k-subset of 0..n in lexicographic order
        let Some(p) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            break;
        };
        idx[p] += 1;
        for q in p + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    if g.is_zero() {
        return Err(Error::InvalidInstance(
            "every maximal minor vanishes; the set is not simplicial".into(),
        ));
    }
    let top: BigInt = Pow::pow(BigInt::from(a.degree()), k as u32);
    if !(&top % &g).is_zero() {
        return Err(Error::Internal(format!("θ = {g} does not divide D^(d+1) = {top}")));
    }
    Ok(DegreeResult {
        degree: &top / &g,
        theta: g,
        codim: n as i64 - 1 - a.dim() as i64,
        minors_checked: checked,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RegMethod {
    /// Smooth: the sweep, checked against `reg = σ`.
    Smooth,
    /// One-singular with `e < D`: the sweep, checked against `reg ≤ σ+1`.
    BrialesEnumeration,
    /// One-singular with `e = D`: the smooth reduction, checked against the sweep.
    EqualsDReduction,
    /// `A = {0, D·ε₁, …, D·ε_d}`: a polynomial ring.
    CoordinateSimplex,
    /// Verdict `Other` with a caller-chosen cutoff: only a lower bound.
    LowerBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityResult {
    pub reg: i64,
    /// In the coordinates of the input set.
    pub witness_y: LatticeVector,
    pub witness_i: i64,
    pub cutoff_level: u32,
    pub cutoff_norm: i64,
    pub method: RegMethod,
    pub sigma: Option<u32>,
    pub field: Field,
    pub certified: bool,
}

impl RegularityResult {
    pub fn witness_value(&self, degree: i64) -> i64 {
        self.witness_y.norm() / degree - (self.witness_i + 1)
    }
}

#[derive(Clone, Debug)]
pub struct RegOptions {
    pub field: Field,
    /// Required for verdict `Other`; ignored otherwise.
    pub cutoff: Option<u32>,
    /// Extra levels swept beyond the certified cutoff.
    pub extra_levels: u32,
    pub max_slice: u64,
}

impl Default for RegOptions {
    fn default() -> Self {
        RegOptions {
            field: Field::Rationals,
            cutoff: None,
            extra_levels: 0,
            max_slice: DEFAULT_MAX_SLICE,
        }
    }
}

/// A nonvanishing `β̃_i(T_y)`, worth `|y|/D − (i+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contribution {
    pub value: i64,
    pub y: LatticeVector,
    pub i: i64,
}

/// Larger value wins; ties go to the smaller `|y|`, then to the
/// lexicographically larger `y`.
fn better(a: &Contribution, b: &Contribution) -> Ordering {
    a.value
        .cmp(&b.value)
        .then_with(|| b.y.norm().cmp(&a.y.norm()))
        .then_with(|| a.y.coords().cmp(b.y.coords()))
}

fn pick(a: Option<Contribution>, b: Option<Contribution>) -> Option<Contribution> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if better(&x, &y) == Ordering::Less { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Best contribution of one `y`.
pub fn contribution(tower: &SumsetTower, y: &LatticeVector, field: Field) -> Result<Option<Contribution>> {
    let degree = tower.generators().degree();
    let c = build_t(tower, y)?;
    let p = reduced_homology(&c, field);
    let level = y.norm() / degree;
    Ok(p.nonzero_degrees().into_iter().map(|i| Contribution {
        value: level - (i + 1),
        y: y.clone(),
        i,
    }).reduce(|a, b| pick(Some(a), Some(b)).unwrap()))
}

/// Every `y ∈ S_A` with `|y| ≤ top·D`, as `(L·D − |b|, b)` for `b ∈ L·A`.
pub fn semigroup_points(tower: &SumsetTower, level: u32) -> Vec<LatticeVector> {
    let degree = tower.generators().degree();
    let lv = tower.level(level);
    lv.points()
        .map(|b| {
            let mut c = Vec::with_capacity(b.dim() + 1);
            c.push(level as i64 * degree - b.norm());
            c.extend_from_slice(b.coords());
            LatticeVector::new(c).expect("b lies in the slice")
        })
        .collect()
}

/// Maximum contribution over all `y ∈ S_A` with `|y|/D ≤ top`. The tower
/// must hold levels up to `top`.
pub fn sweep(tower: &SumsetTower, top: u32, field: Field) -> Result<Option<Contribution>> {
    let mut best = None;
    for level in 0..=top {
        let ys = semigroup_points(tower, level);
        let local = ys
            .par_iter()
            .map(|y| contribution(tower, y, field))
            .try_reduce(|| None, |a, b| Ok(pick(a, b)))?;
        best = pick(best, local);
    }
    Ok(best)
}

fn unswap(y: &LatticeVector, vertex: usize) -> LatticeVector {
    let mut c = y.coords().to_vec();
    c.swap(0, vertex);
    LatticeVector::new(c).expect("permutation keeps coordinates nonnegative")
}

/// `reg` of `A`, classifying it first.
pub fn reg(a: &GeneratorSet, opts: &RegOptions) -> Result<RegularityResult> {
    if a.coordinate_gcd() == a.degree() {
        return Ok(coordinate_simplex(a, opts.field));
    }
    let report = classify(a)?;
    let frame = match report.verdict {
        Verdict::Other => a.clone(),
        _ => normal_frame(a, &report)?,
    };
    let mut tower = SumsetTower::with_max_slice(frame, opts.max_slice);
    let sig = match report.verdict {
        Verdict::Other => None,
        _ => Some(sigma(&mut tower, &report)?),
    };
    reg_with(&mut tower, &report, sig.as_ref(), opts)
}

fn coordinate_simplex(a: &GeneratorSet, field: Field) -> RegularityResult {
    RegularityResult {
        reg: 0,
        witness_y: LatticeVector::zero(a.dim() + 1),
        witness_i: -1,
        cutoff_level: 0,
        cutoff_norm: 0,
        method: RegMethod::CoordinateSimplex,
        sigma: None,
        field,
        certified: true,
    }
}

/// `reg` from a tower already built on the normal frame (or on `A` itself
/// for verdict `Other`) and, for supported verdicts, its `σ`.
pub fn reg_with(
    tower: &mut SumsetTower,
    report: &ClassificationReport,
    sig: Option<&SigmaResult>,
    opts: &RegOptions,
) -> Result<RegularityResult> {
    let d = tower.generators().dim() as u32;
    let degree = tower.generators().degree();
    let vertex = report.singular_vertex.unwrap_or(0);
    let (cutoff, method, certified) = match report.verdict {
        Verdict::Other => {
            let Some(c) = opts.cutoff else {
                return Err(Error::Unsupported(
                    "verdict Other: pass a cutoff to get a lower bound for reg".into(),
                ));
            };
            (c, RegMethod::LowerBound, false)
        }
        Verdict::Smooth => (sigma_of(sig)? + d + 1, RegMethod::Smooth, true),
        Verdict::OneSingular => {
            let m = if report.e == Some(degree) {
                RegMethod::EqualsDReduction
            } else {
                RegMethod::BrialesEnumeration
            };
            (sigma_of(sig)? + d + 2, m, true)
        }
    };
    let top = cutoff + opts.extra_levels;
    tower.ensure(top)?;
    let best = sweep(tower, top, opts.field)?
        .ok_or_else(|| Error::Internal("the origin always contributes β̃₋₁ = 1".into()))?;
    let sigma_val = sig.map(|s| s.sigma);
    match (report.verdict, sigma_val) {
        (Verdict::Smooth, Some(s)) if best.value != s as i64 => {
            return Err(Error::Contradiction(format!(
                "smooth instance with reg = {} but σ = {s}",
                best.value
            )));
        }
        (Verdict::OneSingular, Some(s)) if best.value > s as i64 + 1 => {
            return Err(Error::Contradiction(format!(
                "one-singular instance with reg = {} > σ + 1 = {}",
                best.value,
                s + 1
            )));
        }
        _ => {}
    }
    if method == RegMethod::EqualsDReduction {
        let reduced = match &report.reduced {
            Some(b) => reg(b, &RegOptions { extra_levels: 0, cutoff: None, ..opts.clone() })?.reg,
            None => 0,
        };
        if reduced != best.value {
            return Err(Error::Internal(format!(
                "e = D: the reduced set has reg {reduced} but the sweep gives {}",
                best.value
            )));
        }
    }
    let witness_y = match report.verdict {
        Verdict::OneSingular => unswap(&best.y, vertex),
        _ => best.y.clone(),
    };
    Ok(RegularityResult {
        reg: best.value,
        witness_y,
        witness_i: best.i,
        cutoff_level: top,
        cutoff_norm: top as i64 * degree,
        method,
        sigma: sigma_val,
        field: opts.field,
        certified,
    })
}

fn sigma_of(sig: Option<&SigmaResult>) -> Result<u32> {
    sig.map(|s| s.sigma)
        .ok_or_else(|| Error::Precondition("σ is required for supported verdicts".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub value: i64,
    pub bound: i64,
    pub slack: i64,
    pub holds: bool,
}

impl BoundCheck {
    fn new(value: i64, bound: i64) -> Self {
        BoundCheck {
            value,
            bound,
            slack: bound - value,
            holds: value <= bound,
        }
    }
}

/// Smooth case: `reg ≤ d(D−2)` for `D ≥ 3`, `reg ≤ ⌈d/2⌉` for `D = 2`.
pub fn herzog_hibi_bound(d: usize, degree: i64, reg: i64) -> Result<BoundCheck> {
    let d = d as i64;
    let bound = if degree == 2 { (d + 1) / 2 } else { d * (degree - 2) };
    let c = BoundCheck::new(reg, bound);
    if !c.holds {
        return Err(Error::Contradiction(format!(
            "smooth instance with reg = {reg} above {bound}"
        )));
    }
    Ok(c)
}

/// One-singular case: `reg ≤ (D/e)[(d−1)(D−2) + D/e − 2] + 1` for `D ≥ 3`,
/// `reg ≤ ⌈(d−1)/2⌉` for `D = 2`.
pub fn one_singular_bound(d: usize, degree: i64, e: i64, reg: i64) -> Result<BoundCheck> {
    let d = d as i64;
    let q = degree / e;
    let bound = if degree == 2 {
        d / 2
    } else {
        q * ((d - 1) * (degree - 2) + q - 2) + 1
    };
    let c = BoundCheck::new(reg, bound);
    if !c.holds {
        return Err(Error::Contradiction(format!(
            "one-singular instance with reg = {reg} above {bound}"
        )));
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EgCheck {
    pub reg: i64,
    #[serde(serialize_with = "ser_big")]
    pub degree: BigInt,
    pub codim: i64,
    #[serde(serialize_with = "ser_big")]
    pub bound: BigInt,
    pub holds: bool,
    #[serde(serialize_with = "ser_big")]
    pub slack: BigInt,
}

/// `reg ≤ deg − codim`. A failure is an error only where it is proven:
/// one-singular with `d ≥ 3`, and smooth.
pub fn eg_check(reg: i64, deg: &DegreeResult, verdict: Option<Verdict>, d: usize) -> Result<EgCheck> {
    let bound = &deg.degree - BigInt::from(deg.codim);
    let slack = &bound - BigInt::from(reg);
    let holds = slack >= BigInt::zero();
    let proven = matches!(verdict, Some(Verdict::Smooth)) || (verdict == Some(Verdict::OneSingular) && d >= 3);
    if !holds && proven {
        return Err(Error::Contradiction(format!(
            "Eisenbud–Goto fails: reg = {reg} > {} − {}",
            deg.degree, deg.codim
        )));
    }
    Ok(EgCheck {
        reg,
        degree: deg.degree.clone(),
        codim: deg.codim,
        bound,
        holds,
        slack,
    })
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Largest `|A|` for `A ⊂ ℕ_e^d` with norms `≤ D`: `Σ_{i ≤ D/e} C(ie+d−1, d−1)`.
pub fn max_size(d: usize, degree: i64, e: i64) -> BigInt {
    let d = d as i64;
    (0..=degree / e).map(|i| binom(i * e + d - 1, d - 1)).sum()
}

/// `|A| ≤ (D/e + d)/(D + d) · C(D+d, d)`, cleared of denominators.
pub fn size_bound_holds(d: usize, degree: i64, e: i64, size: &BigInt) -> bool {
    let di = d as i64;
    size * BigInt::from(e * (degree + di)) <= BigInt::from(degree + di * e) * binom(degree + di, di)
}

/// Both sides of `(d−1)(D−2) ≤ D^{d−1} − C(D+d−1, d−1) + d`.
pub fn eg_sides_e_eq_d(d: usize, degree: i64) -> (BigInt, BigInt) {
    let di = d as i64;
    let lhs = BigInt::from((di - 1) * (degree - 2));
    let rhs: BigInt = Pow::pow(BigInt::from(degree), (d - 1) as u32) - binom(degree + di - 1, di - 1) + di;
    (lhs, rhs)
}

/// Both sides of the `e < D` inequality multiplied by `e(D+d)`:
/// `(D+d)·D·[(d−1)(D−2) + D/e − 2] ≤ (D+d)·D^d − (D+de)·C(D+d,d) + ed(D+d)`.
pub fn eg_sides_e_neq_d(d: usize, degree: i64, e: i64) -> (BigInt, BigInt) {
    let di = d as i64;
    let q = degree / e;
    let lhs = BigInt::from((degree + di) * degree * ((di - 1) * (degree - 2) + q - 2));
    let dd: BigInt = Pow::pow(BigInt::from(degree), d as u32);
    let rhs = BigInt::from(degree + di) * dd - BigInt::from(degree + di * e) * binom(degree + di, di)
        + BigInt::from(e * di * (degree + di));
    (lhs, rhs)
}

/// `5eD³ − (3e²+15e+6)D² + (34e−9e²)D + 12e²`, the `d = 3` form.
pub fn cubic_d3(degree: i64, e: i64) -> BigInt {
    let dd = BigInt::from(degree);
    let e = BigInt::from(e);
    BigInt::from(5) * &e * &dd * &dd * &dd
        - (BigInt::from(3) * &e * &e + BigInt::from(15) * &e + 6) * &dd * &dd
        + (BigInt::from(34) * &e - BigInt::from(9) * &e * &e) * &dd
        + BigInt::from(12) * &e * &e
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EgSuiteReport {
    pub d: usize,
    pub degree: i64,
    pub e: i64,
    pub size_bound: Option<bool>,
    pub e_eq_d: Option<bool>,
    pub e_neq_d: Option<bool>,
    pub cubic: Option<bool>,
}

impl EgSuiteReport {
    pub fn all_hold(&self) -> bool {
        [self.size_bound, self.e_eq_d, self.e_neq_d, self.cubic]
            .iter()
            .all(|x| x.unwrap_or(true))
    }
}

/// Evaluates every inequality that applies to `(d, D, e)`; a failure inside
/// the proven range (`d ≥ 3`, `D ≥ 3`) is an error.
pub fn eg_inequality_suite(d: usize, degree: i64, e: i64) -> Result<EgSuiteReport> {
    if e < 1 || degree % e != 0 {
        return Err(Error::Parameter(format!("e = {e} must divide D = {degree}")));
    }
    let in_range = d >= 3 && degree >= 3;
    let mut r = EgSuiteReport {
        d,
        degree,
        e,
        size_bound: None,
        e_eq_d: None,
        e_neq_d: None,
        cubic: None,
    };
    if e < degree {
        r.size_bound = Some(size_bound_holds(d, degree, e, &max_size(d, degree, e)));
        let (l, rr) = eg_sides_e_neq_d(d, degree, e);
        r.e_neq_d = Some(l <= rr);
        if d == 3 {
            r.cubic = Some(cubic_d3(degree, e) >= BigInt::zero());
        }
    }
    let (l, rr) = eg_sides_e_eq_d(d, degree);
    r.e_eq_d = Some(l <= rr);
    if in_range && !r.all_hold() {
        return Err(Error::Contradiction(format!("inequality failure at d={d}, D={degree}, e={e}: {r:?}")));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex1sing() -> GeneratorSet {
        GeneratorSet::new(
            2,
            vec![
                vec![0, 0],
                vec![4, 0],
                vec![0, 4],
                vec![3, 1],
                vec![1, 3],
                vec![2, 0],
                vec![0, 2],
            ],
        )
        .unwrap()
    }

    #[test]
    fn ex1sing_degree() {
        let r = degree(&ex1sing()).unwrap();
        assert_eq!(r.theta, BigInt::from(8));
        assert_eq!(r.degree, BigInt::from(8));
        assert_eq!(r.codim, 4);
    }

    #[test]
    fn coordinate_simplex_degree() {
        let a = GeneratorSet::new(2, vec![vec![0, 0], vec![3, 0], vec![0, 3]]).unwrap();
        let r = degree(&a).unwrap();
        assert_eq!(r.theta, BigInt::from(27));
        assert_eq!(r.degree, BigInt::one());
        assert_eq!(r.codim, 0);
        let g = reg(&a, &RegOptions::default()).unwrap();
        assert_eq!(g.reg, 0);
        assert!(eg_check(g.reg, &r, None, 2).unwrap().holds);
    }

    #[test]
    fn ex1sing_reg() {
        let r = reg(&ex1sing(), &RegOptions::default()).unwrap();
        assert_eq!(r.reg, 2);
        assert_eq!(r.witness_y.coords(), &[4, 2, 2]);
        assert_eq!(r.witness_i, -1);
        assert_eq!(r.witness_value(4), 2);
    }

    #[test]
    fn suite_samples() {
        assert_eq!(cubic_d3(3, 1), BigInt::from(6));
        let (l, r) = eg_sides_e_eq_d(3, 3);
        assert_eq!((l, r), (BigInt::from(2), BigInt::from(2)));
        for d in 3..=4 {
            for degree in 3..=6 {
                for e in (1..=degree).filter(|e| degree % e == 0) {
                    assert!(eg_inequality_suite(d, degree, e).unwrap().all_hold());
                }
            }
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(one_singular_bound(2, 4, 2, 2).unwrap().bound, 5);
        assert_eq!(one_singular_bound(2, 6, 2, 3).unwrap().bound, 16);
        assert_eq!(herzog_hibi_bound(3, 2, 2).unwrap().bound, 2);
        assert!(herzog_hibi_bound(2, 4, 5).is_err());
    }
}
