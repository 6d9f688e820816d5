use std::sync::Arc;

use num_integer::Integer;

use super::{BitSet, GeneratorSet, LatticeVector, RankTable, SimplexSlice};
use crate::error::{Error, Result};

/// Default cap on the number of points of a single slice (2^27).
pub const DEFAULT_MAX_SLICE: u64 = 1 << 27;

/// Indicator of `sA` inside `Δ_{s,e}`.
#[derive(Clone, Debug)]
pub struct SumsetLevel {
    level: u32,
    slice: SimplexSlice,
    members: BitSet,
    cardinality: u64,
}

impl SumsetLevel {
    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn slice(&self) -> &SimplexSlice {
        &self.slice
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn cardinality(&self) -> u64 {
        self.cardinality
    }

    pub fn contains_coords(&self, y: &[i64]) -> bool {
        self.slice.contains_coords(y) && self.members.contains(self.slice.rank_unchecked(y) as usize)
    }

    pub fn contains(&self, y: &LatticeVector) -> bool {
        self.contains_coords(y.coords())
    }

    /// Members in rank order.
    pub fn points(&self) -> impl Iterator<Item = LatticeVector> + '_ {
        self.slice
            .iter()
            .enumerate()
            .filter(|(i, _)| self.members.contains(*i))
            .map(|(_, p)| p)
    }

    /// Points of the slice that are not members, in rank order.
    pub fn missing(&self) -> impl Iterator<Item = LatticeVector> + '_ {
        self.slice
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.members.contains(*i))
            .map(|(_, p)| p)
    }
}

/// Append-only cache of the sumsets `0A, 1A, 2A, …` of one generator set.
///
/// Slices use `e = gcd(D, |a|)`, the largest step every sumset respects.
#[derive(Debug)]
pub struct SumsetTower {
    gens: GeneratorSet,
    max_slice: u64,
    table: Arc<RankTable>,
    levels: Vec<SumsetLevel>,
}

impl SumsetTower {
    pub fn new(gens: GeneratorSet) -> Self {
        SumsetTower::with_max_slice(gens, DEFAULT_MAX_SLICE)
    }

    pub fn with_max_slice(gens: GeneratorSet, max_slice: u64) -> Self {
        let table = Arc::new(RankTable::new(gens.dim(), gens.norm_divisor(), gens.degree()));
        let slice = SimplexSlice::with_table(gens.degree(), 0, table.clone());
        let mut members = BitSet::new(1);
        members.insert(0);
        let zero = SumsetLevel {
            level: 0,
            slice,
            members,
            cardinality: 1,
        };
        SumsetTower {
            gens,
            max_slice,
            table,
            levels: vec![zero],
        }
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn max_slice(&self) -> u64 {
        self.max_slice
    }

    /// Highest level computed so far.
    pub fn top(&self) -> u32 {
        self.levels.len() as u32 - 1
    }

    /// Computes every level up to `level`.
    pub fn ensure(&mut self, level: u32) -> Result<()> {
        if level <= self.top() {
            return Ok(());
        }
        let d = self.gens.dim();
        let degree = self.gens.degree();
        let step = self.gens.norm_divisor();
        let requested = SimplexSlice::size_estimate(d, degree, level, step);
        if requested > self.max_slice as u128 {
            return Err(Error::ResourceLimit {
                requested,
                cap: self.max_slice,
            });
        }
        let needed = degree * level as i64;
        if needed > self.table.max_bound() {
            let grown = needed.max(2 * self.table.max_bound());
            self.table = Arc::new(RankTable::new(d, step, grown));
        }
        while self.top() < level {
            let next = self.step_level();
            self.levels.push(next);
        }
        Ok(())
    }

    /// One Minkowski step `(s+1)A = sA + A`.
    fn step_level(&self) -> SumsetLevel {
        let prev = self.levels.last().expect("level 0 always present");
        let level = prev.level + 1;
        let slice = SimplexSlice::with_table(self.gens.degree(), level, self.table.clone());
        let mut members = BitSet::new(slice.size() as usize);
        let gens: Vec<&[i64]> = self.gens.points().iter().map(|a| a.coords()).collect();
        let mut buf = vec![0i64; self.gens.dim()];
        for (i, p) in prev.slice.iter().enumerate() {
            if !prev.members.contains(i) {
                continue;
            }
            for a in &gens {
                for ((b, x), y) in buf.iter_mut().zip(p.coords()).zip(a.iter()) {
                    *b = x + y;
                }
                members.insert(slice.rank_unchecked(&buf) as usize);
            }
        }
        let cardinality = members.count_ones();
        SumsetLevel {
            level,
            slice,
            members,
            cardinality,
        }
    }

    pub fn level(&self, s: u32) -> &SumsetLevel {
        &self.levels[s as usize]
    }

    pub fn get(&self, s: u32) -> Option<&SumsetLevel> {
        self.levels.get(s as usize)
    }

    /// Computes (if needed) and returns level `s`.
    pub fn sumset(&mut self, s: u32) -> Result<&SumsetLevel> {
        self.ensure(s)?;
        Ok(self.level(s))
    }

    /// Membership of `y ∈ ℕ^{d+1}` in the semigroup generated by the
    /// homogenized set, using levels already computed. `None` when the
    /// required level is not cached.
    pub fn member_cached(&self, y: &[i64]) -> Option<bool> {
        debug_assert_eq!(y.len(), self.gens.dim() + 1);
        if y.iter().any(|&c| c < 0) {
            return Some(false);
        }
        let n: i64 = y.iter().sum();
        let degree = self.gens.degree();
        if n % degree != 0 {
            return Some(false);
        }
        let level = (n / degree) as usize;
        self.levels
            .get(level)
            .map(|l| l.contains_coords(&y[1..]))
    }

    /// `y ∈ S_A`: `D` divides `|y|` and the tail of `y` lies in `(|y|/D)·A`.
    pub fn semigroup_member(&mut self, y: &LatticeVector) -> Result<bool> {
        if y.dim() != self.gens.dim() + 1 {
            return Err(Error::Precondition(format!(
                "expected a point of ℕ^{}, got {y:?}",
                self.gens.dim() + 1
            )));
        }
        let degree = self.gens.degree();
        if y.norm() % degree != 0 {
            return Ok(false);
        }
        self.ensure((y.norm() / degree) as u32)?;
        Ok(self.member_cached(y.coords()).expect("level ensured"))
    }
}

/// `|sA|` for `s = 0..=s_max`.
pub fn hilbert_function(tower: &mut SumsetTower, s_max: u32) -> Result<Vec<u64>> {
    tower.ensure(s_max)?;
    Ok((0..=s_max).map(|s| tower.level(s).cardinality()).collect())
}

/// Smallest `s ≥ 0` with `Δ_{s,e} + {0, Dε₁, …, Dε_d} = Δ_{s+1,e}`,
/// namely `⌈d − (d+e−1)/D⌉` clamped at zero.
pub fn step_threshold(d: usize, degree: i64, step: i64) -> i64 {
    let d = d as i64;
    let num = d * degree - d - step + 1;
    Integer::div_ceil(&num, &degree).max(0)
}

/// Decides `Δ_{s,e} + {0, Dε₁, …, Dε_d} = Δ_{s+1,e}` by building the
/// left-hand side explicitly.
pub fn step_property_holds(d: usize, degree: i64, step: i64, s: u32) -> bool {
    let lower = SimplexSlice::new(d, degree, s, step);
    let upper = SimplexSlice::new(d, degree, s + 1, step);
    let mut hit = BitSet::new(upper.size() as usize);
    for p in lower.iter() {
        hit.insert(upper.rank_unchecked(p.coords()) as usize);
        for j in 0..d {
            let shifted = p.add(&LatticeVector::axis(d, j, degree));
            hit.insert(upper.rank_unchecked(shifted.coords()) as usize);
        }
    }
    hit.count_ones() == upper.size()
}
