//! Lattice vectors, generator sets, simplex slices and iterated sumsets.
//!
//! A generator set `A ⊂ ℕ^d` always contains the origin and the scaled unit
//! vectors `D·εᵢ`, where `D` is the largest coordinate sum in `A`. Its
//! iterated sumsets `sA` live inside the slices
//! `Δ_{s,e} = {y ∈ ℕ^d : |y| ≤ sD, e divides |y|}` and are stored as dense
//! bit indicators keyed by a colexicographic rank.

mod bitset;
mod slice;
mod sumset;

pub use bitset::BitSet;
pub use slice::{RankTable, SimplexSlice, SliceIter};
pub use sumset::{
    hilbert_function, step_property_holds, step_threshold, SumsetLevel, SumsetTower,
    DEFAULT_MAX_SLICE,
};

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Point of `ℕ^k` with its coordinate sum cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct LatticeVector {
    coords: Vec<i64>,
    norm: i64,
}

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        if let Some(c) = coords.iter().find(|&&c| c < 0) {
            return Err(Error::InvalidInstance(format!(
                "negative coordinate {c} in {coords:?}"
            )));
        }
        let norm = coords
            .iter()
            .try_fold(0i64, |acc, &c| acc.checked_add(c))
            .ok_or_else(|| Error::InvalidInstance(format!("coordinate sum overflows: {coords:?}")))?;
        Ok(LatticeVector { coords, norm })
    }

    /// Caller guarantees nonnegative coordinates.
    pub(crate) fn from_raw(coords: Vec<i64>) -> Self {
        debug_assert!(coords.iter().all(|&c| c >= 0));
        let norm = coords.iter().sum();
        LatticeVector { coords, norm }
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector {
            coords: vec![0; dim],
            norm: 0,
        }
    }

    /// `scale · εᵢ` in `ℕ^dim`, with `i` zero-based.
    pub fn axis(dim: usize, i: usize, scale: i64) -> Self {
        let mut coords = vec![0; dim];
        coords[i] = scale;
        LatticeVector::from_raw(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn norm(&self) -> i64 {
        self.norm
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        debug_assert_eq!(self.dim(), other.dim());
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            norm: self.norm + other.norm,
        }
    }

    /// `self − other`, or `None` when some coordinate would go negative.
    pub fn checked_sub(&self, other: &LatticeVector) -> Option<LatticeVector> {
        debug_assert_eq!(self.dim(), other.dim());
        let mut coords = Vec::with_capacity(self.dim());
        for (a, b) in self.coords.iter().zip(&other.coords) {
            if a < b {
                return None;
            }
            coords.push(a - b);
        }
        Some(LatticeVector {
            coords,
            norm: self.norm - other.norm,
        })
    }

    /// Drops coordinate `i`.
    pub fn delete_coord(&self, i: usize) -> LatticeVector {
        let coords = self
            .coords
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &c)| c)
            .collect();
        LatticeVector::from_raw(coords)
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<i64>> for LatticeVector {
    type Error = Error;

    fn try_from(coords: Vec<i64>) -> Result<Self> {
        LatticeVector::new(coords)
    }
}

impl From<LatticeVector> for Vec<i64> {
    fn from(v: LatticeVector) -> Vec<i64> {
        v.coords
    }
}

/// Generator sets are capped so that `s·D` stays far from `i64` overflow.
const MAX_DEGREE: i64 = 1 << 40;

/// A finite set `A ⊂ ℕ^d` containing `0` and every `D·εᵢ`, where `D` is the
/// maximal coordinate sum. Points are deduplicated and sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorSet {
    dim: usize,
    points: Vec<LatticeVector>,
    degree: i64,
    norm_divisor: i64,
}

impl GeneratorSet {
    /// Validates and builds a generator set. Duplicated points are rejected.
    pub fn new(dim: usize, points: Vec<Vec<i64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInstance("dimension must be at least 1".into()));
        }
        let mut vecs = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != dim {
                return Err(Error::InvalidInstance(format!(
                    "point {p:?} has length {} but d = {dim}",
                    p.len()
                )));
            }
            vecs.push(LatticeVector::new(p)?);
        }
        vecs.sort();
        if let Some(w) = vecs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance(format!(
                "duplicate point {:?}",
                w[0]
            )));
        }
        let degree = vecs.iter().map(LatticeVector::norm).max().unwrap_or(0);
        if degree < 2 {
            return Err(Error::InvalidInstance(format!(
                "the maximal coordinate sum D = {degree} must be at least 2"
            )));
        }
        if degree > MAX_DEGREE {
            return Err(Error::InvalidInstance(format!(
                "D = {degree} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        if vecs.binary_search(&LatticeVector::zero(dim)).is_err() {
            return Err(Error::InvalidInstance("the origin must belong to A".into()));
        }
        for i in 0..dim {
            let top = LatticeVector::axis(dim, i, degree);
            if vecs.binary_search(&top).is_err() {
                return Err(Error::InvalidInstance(format!(
                    "D·ε_{} = {top:?} must belong to A (D = {degree})",
                    i + 1
                )));
            }
        }
        let norm_divisor = vecs.iter().fold(degree, |g, v| g.gcd(&v.norm()));
        Ok(GeneratorSet {
            dim,
            points: vecs,
            degree,
            norm_divisor,
        })
    }

    pub fn from_vectors(dim: usize, points: Vec<LatticeVector>) -> Result<Self> {
        GeneratorSet::new(dim, points.into_iter().map(Vec::from).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `D`, the maximal coordinate sum.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// `gcd(D, |a| for a ∈ A)`: every sumset lives in `ℕ_e^d` for this `e`.
    pub fn norm_divisor(&self) -> i64 {
        self.norm_divisor
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.points.binary_search(v).is_ok()
    }

    pub fn contains_coords(&self, coords: &[i64]) -> bool {
        self.points
            .binary_search_by(|p| p.coords().cmp(coords))
            .is_ok()
    }

    /// Lifts every `a` to `(D − |a|, a) ∈ ℕ^{d+1}`.
    pub fn homogenize(&self) -> HomogenizedGeneratorSet {
        let points = self
            .points
            .iter()
            .map(|a| {
                let mut c = Vec::with_capacity(self.dim + 1);
                c.push(self.degree - a.norm());
                c.extend_from_slice(a.coords());
                LatticeVector::from_raw(c)
            })
            .collect();
        HomogenizedGeneratorSet {
            parent: self.clone(),
            points,
        }
    }

    /// gcd of every coordinate of every homogenized generator.
    pub fn coordinate_gcd(&self) -> i64 {
        self.homogenize()
            .points
            .iter()
            .flat_map(|p| p.coords().to_vec())
            .fold(0, |g, c| g.gcd(&c))
    }

    /// The set obtained by swapping homogenized coordinates `0` and `k`, then
    /// dehomogenizing. Vertex `k` of the simplex moves to vertex `0`.
    pub fn swap_vertex(&self, k: usize) -> GeneratorSet {
        if k == 0 {
            return self.clone();
        }
        let points = self
            .points
            .iter()
            .map(|a| {
                let mut c = a.coords().to_vec();
                c[k - 1] = self.degree - a.norm();
                c
            })
            .collect();
        GeneratorSet::new(self.dim, points).expect("vertex swap preserves validity")
    }
}

/// `A` lifted to `ℕ^{d+1}`; every point has norm exactly `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogenizedGeneratorSet {
    parent: GeneratorSet,
    points: Vec<LatticeVector>,
}

impl HomogenizedGeneratorSet {
    pub fn parent(&self) -> &GeneratorSet {
        &self.parent
    }

    /// Points in the order of the parent's points.
    pub fn points(&self) -> &[LatticeVector] {
        &self.points
    }

    pub fn contains(&self, v: &LatticeVector) -> bool {
        self.points.contains(v)
    }

    pub fn degree(&self) -> i64 {
        self.parent.degree
    }
}
