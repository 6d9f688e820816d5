//! Instance families. Randomness comes from `ChaCha8Rng::seed_from_u64`, so
//! a `(family, parameters, seed)` triple always yields the same set.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::{classify, Verdict};
use crate::error::{Error, Result};
use crate::lattice::{GeneratorSet, LatticeVector, SimplexSlice};

const MAX_ATTEMPTS: usize = 1000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    MinimalSmooth,
    Veronese,
    OneSingular,
    SmoothSuperset,
    EightPoint,
    Ex1sing,
    Ex1sing2,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::MinimalSmooth,
        Family::Veronese,
        Family::OneSingular,
        Family::SmoothSuperset,
        Family::EightPoint,
        Family::Ex1sing,
        Family::Ex1sing2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::MinimalSmooth => "minimal-smooth",
            Family::Veronese => "veronese",
            Family::OneSingular => "one-singular",
            Family::SmoothSuperset => "smooth-superset",
            Family::EightPoint => "paper-sec1",
            Family::Ex1sing => "ex1sing",
            Family::Ex1sing2 => "ex1sing2",
        }
    }

    /// Verdict every member of the family has.
    pub fn expected_verdict(self) -> Verdict {
        match self {
            Family::MinimalSmooth | Family::Veronese | Family::SmoothSuperset => Verdict::Smooth,
            _ => Verdict::OneSingular,
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                Error::Parameter(format!("unknown family {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug)]
pub struct GenParams {
    pub d: usize,
    pub degree: i64,
    pub e: i64,
    /// Random points added on top of the defining configuration.
    pub extra: usize,
    pub seed: u64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            d: 2,
            degree: 4,
            e: 1,
            extra: 0,
            seed: 0,
        }
    }
}

fn unit(d: usize, i: usize, k: i64) -> Vec<i64> {
    let mut v = vec![0; d];
    v[i] = k;
    v
}

fn build(d: usize, pts: BTreeSet<Vec<i64>>) -> Result<GeneratorSet> {
    GeneratorSet::new(d, pts.into_iter().collect())
}

/// `{0, εᵢ, (D−1)εᵢ, εᵢ + (D−1)εⱼ}`, which includes `D·εᵢ`.
pub fn minimal_smooth_points(d: usize, degree: i64) -> BTreeSet<Vec<i64>> {
    let mut s = BTreeSet::new();
    s.insert(vec![0; d]);
    for i in 0..d {
        s.insert(unit(d, i, 1));
        s.insert(unit(d, i, degree - 1));
        for j in 0..d {
            let mut v = unit(d, i, 1);
            v[j] += degree - 1;
            s.insert(v);
        }
    }
    s
}

/// `{0, D·εᵢ, (D−e)εᵢ, (D−1)εᵢ + εⱼ (i ≠ j)}`.
pub fn one_singular_points(d: usize, degree: i64, e: i64) -> BTreeSet<Vec<i64>> {
    let mut s = BTreeSet::new();
    s.insert(vec![0; d]);
    for i in 0..d {
        s.insert(unit(d, i, degree));
        s.insert(unit(d, i, degree - e));
        for j in 0..d {
            if i != j {
                let mut v = unit(d, i, degree - 1);
                v[j] = 1;
                s.insert(v);
            }
        }
    }
    s
}

/// Every point of `ℕ^d` with norm `≤ D`.
pub fn veronese_points(d: usize, degree: i64) -> BTreeSet<Vec<i64>> {
    SimplexSlice::new(d, degree, 1, 1)
        .iter()
        .map(Vec::from)
        .collect()
}

/// Points of `ℕ_e^d` of norm `≤ D` not in `base`.
fn candidates(d: usize, degree: i64, e: i64, base: &BTreeSet<Vec<i64>>) -> Vec<Vec<i64>> {
    SimplexSlice::new(d, degree, 1, e)
        .iter()
        .map(Vec::from)
        .filter(|p| !base.contains(p))
        .collect()
}

fn check_common(p: &GenParams) -> Result<()> {
    if p.d == 0 {
        return Err(Error::Parameter("d must be at least 1".into()));
    }
    if p.degree < 2 {
        return Err(Error::Parameter("D must be at least 2".into()));
    }
    Ok(())
}

/// A random subset of `ℕ_e^d ∩ {|y| ≤ D}` containing `0` and every `D·εᵢ`,
/// each other point kept with probability `1/2`.
pub fn random_subset(d: usize, degree: i64, e: i64, rng: &mut ChaCha8Rng) -> Result<GeneratorSet> {
    use rand::Rng;
    let mut base = BTreeSet::new();
    base.insert(vec![0; d]);
    for i in 0..d {
        base.insert(unit(d, i, degree));
    }
    for c in candidates(d, degree, e, &base) {
        if rng.gen_bool(0.5) {
            base.insert(c);
        }
    }
    build(d, base)
}

pub fn generate(family: Family, p: &GenParams) -> Result<GeneratorSet> {
    let a = match family {
        Family::EightPoint => eight_point_set(),
        Family::Ex1sing => ex1sing(),
        Family::Ex1sing2 => ex1sing2(),
        Family::MinimalSmooth => {
            check_common(p)?;
            build(p.d, minimal_smooth_points(p.d, p.degree))?
        }
        Family::Veronese => {
            check_common(p)?;
            build(p.d, veronese_points(p.d, p.degree))?
        }
        Family::SmoothSuperset => {
            check_common(p)?;
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            let mut base = minimal_smooth_points(p.d, p.degree);
            let pool = candidates(p.d, p.degree, 1, &base);
            base.extend(pool.choose_multiple(&mut rng, p.extra).cloned());
            build(p.d, base)?
        }
        Family::OneSingular => return one_singular(p),
    };
    confirm(family, a)
}

fn confirm(family: Family, a: GeneratorSet) -> Result<GeneratorSet> {
    let r = classify(&a)?;
    if r.verdict != family.expected_verdict() {
        return Err(Error::Internal(format!(
            "family {} produced verdict {}",
            family.name(),
            r.verdict.as_str()
        )));
    }
    Ok(a)
}

fn one_singular(p: &GenParams) -> Result<GeneratorSet> {
    check_common(p)?;
    let (d, degree, e) = (p.d, p.degree, p.e);
    if e < 1 || degree % e != 0 {
        return Err(Error::Parameter(format!("e = {e} must be a positive divisor of D = {degree}")));
    }
    if d == 1 && e == degree {
        return Err(Error::Parameter("d = 1 with e = D leaves only {0, D}, which is smooth".into()));
    }
    let base = one_singular_points(d, degree, e);
    if e == 1 && (0..d).all(|i| base.contains(&unit(d, i, 1))) {
        return Err(Error::Parameter(
            "e = 1 needs a unit vector outside A, but the configuration forces all of them".into(),
        ));
    }
    let mut pool = candidates(d, degree, e, &base);
    if e == 1 {
        // keep at least one unit vector out
        pool.retain(|c| c != &unit(d, 0, 1));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    for _ in 0..MAX_ATTEMPTS {
        let mut pts = base.clone();
        pts.extend(pool.choose_multiple(&mut rng, p.extra).cloned());
        let Ok(a) = build(d, pts) else { continue };
        if a.coordinate_gcd() != 1 {
            continue;
        }
        let Ok(r) = classify(&a) else { continue };
        if r.verdict == Verdict::OneSingular && r.singular_vertex == Some(0) && r.e == Some(e) {
            return Ok(a);
        }
    }
    Err(Error::Parameter(format!(
        "no one-singular instance with d = {d}, D = {degree}, e = {e} after {MAX_ATTEMPTS} draws"
    )))
}

/// `{(0,0), (6,0), (0,6), (1,5), (5,1), (0,4), (4,0), (1,1)}`, whose
/// homogenization is the eight-vector set in `ℕ³`.
pub fn eight_point_set() -> GeneratorSet {
    GeneratorSet::new(
        2,
        vec![
            vec![0, 0],
            vec![6, 0],
            vec![0, 6],
            vec![1, 5],
            vec![5, 1],
            vec![0, 4],
            vec![4, 0],
            vec![1, 1],
        ],
    )
    .expect("valid")
}

/// `Δ_{1,2} ∖ {(1,1), (2,2)}` with `D = 4`.
pub fn ex1sing() -> GeneratorSet {
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
    .expect("valid")
}

/// `Δ_{1,2} ∖ {(2,4), (3,3)}` with `D = 6`.
pub fn ex1sing2() -> GeneratorSet {
    let pts = SimplexSlice::new(2, 6, 1, 2)
        .iter()
        .map(Vec::from)
        .filter(|p| p != &[2, 4] && p != &[3, 3])
        .collect();
    GeneratorSet::new(2, pts).expect("valid")
}

/// Point list as `LatticeVector`s, for callers that want the raw family.
pub fn to_vectors(pts: &BTreeSet<Vec<i64>>) -> Vec<LatticeVector> {
    pts.iter()
        .map(|p| LatticeVector::new(p.clone()).expect("nonnegative"))
        .collect()
}
