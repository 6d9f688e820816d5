use std::fmt;
use std::sync::Arc;

use super::LatticeVector;
use crate::error::{Error, Result};

/// Counting table for lattice points of bounded norm in a residue class.
///
/// `prefix[k][m]` is the number of `z ∈ ℕ^k` with `|z| ≤ m` and
/// `|z| ≡ m (mod e)`. It does not depend on the slice bound, so one table
/// serves every level of a sumset tower.
#[derive(Debug)]
pub struct RankTable {
    dim: usize,
    step: i64,
    max_bound: i64,
    prefix: Vec<Vec<u64>>,
}

impl RankTable {
    pub fn new(dim: usize, step: i64, max_bound: i64) -> Self {
        assert!(step >= 1 && max_bound >= 0);
        let width = max_bound as usize + 1;
        let e = step as usize;
        // exact[k][t] = #{z ∈ ℕ^k : |z| = t}
        let mut exact = vec![vec![0u64; width]; dim + 1];
        exact[0][0] = 1;
        for k in 1..=dim {
            let (done, next) = exact.split_at_mut(k);
            let mut run = 0u64;
            for (x, &prev) in next[0].iter_mut().zip(&done[k - 1]) {
                run = run.saturating_add(prev);
                *x = run;
            }
        }
        let mut prefix = vec![vec![0u64; width]; dim + 1];
        for k in 0..=dim {
            for m in 0..width {
                let below = if m >= e { prefix[k][m - e] } else { 0 };
                prefix[k][m] = exact[k][m].saturating_add(below);
            }
        }
        RankTable {
            dim,
            step,
            max_bound,
            prefix,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    pub fn max_bound(&self) -> i64 {
        self.max_bound
    }

    /// `#{z ∈ ℕ^k : |z| ≤ m, |z| ≡ r (mod e)}`.
    #[inline]
    pub fn count(&self, k: usize, m: i64, r: i64) -> u64 {
        if m < 0 {
            return 0;
        }
        let top = m - (m - r).rem_euclid(self.step);
        if top < 0 {
            0
        } else {
            debug_assert!(top <= self.max_bound);
            self.prefix[k][top as usize]
        }
    }
}

/// `Δ_{s,e} = {y ∈ ℕ^d : |y| ≤ sD, e | |y|}`; `e = 1` gives `Δ_s`.
///
/// Points are ranked colexicographically: the last coordinate is the most
/// significant. Componentwise `y ≤ z` implies `rank(y) ≤ rank(z)`.
#[derive(Clone)]
pub struct SimplexSlice {
    dim: usize,
    degree: i64,
    level: u32,
    step: i64,
    bound: i64,
    size: u64,
    table: Arc<RankTable>,
}

impl SimplexSlice {
    pub fn new(dim: usize, degree: i64, level: u32, step: i64) -> Self {
        let bound = degree * level as i64;
        let table = Arc::new(RankTable::new(dim, step, bound));
        SimplexSlice::with_table(degree, level, table)
    }

    /// Builds a slice sharing an existing table whose bound covers `level·degree`.
    pub fn with_table(degree: i64, level: u32, table: Arc<RankTable>) -> Self {
        let bound = degree * level as i64;
        assert!(bound <= table.max_bound(), "rank table too small for slice");
        let dim = table.dim();
        let step = table.step();
        let size = table.count(dim, bound, 0);
        SimplexSlice {
            dim,
            degree,
            level,
            step,
            bound,
            size,
            table,
        }
    }

    /// Cardinality computed in wide arithmetic without building a table.
    pub fn size_estimate(dim: usize, degree: i64, level: u32, step: i64) -> u128 {
        let bound = degree as u128 * level as u128;
        let e = step as u128;
        // Σ_{t ≤ bound, e | t} C(t + d - 1, d - 1), evaluated stepwise.
        let mut total: u128 = 0;
        let mut t = 0u128;
        while t <= bound {
            total = total.saturating_add(binomial_u128(t + dim as u128 - 1, dim as u128 - 1));
            t += e;
        }
        total
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn step(&self) -> i64 {
        self.step
    }

    /// `sD`, the norm bound.
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn table(&self) -> &Arc<RankTable> {
        &self.table
    }

    pub fn contains_coords(&self, y: &[i64]) -> bool {
        if y.len() != self.dim || y.iter().any(|&c| c < 0) {
            return false;
        }
        let n: i64 = y.iter().sum();
        n <= self.bound && n % self.step == 0
    }

    pub fn contains(&self, y: &LatticeVector) -> bool {
        self.contains_coords(y.coords())
    }

    pub fn rank(&self, y: &LatticeVector) -> Result<u64> {
        if !self.contains(y) {
            return Err(Error::OutOfDomain {
                point: y.coords().to_vec(),
                slice: self.to_string(),
            });
        }
        Ok(self.rank_unchecked(y.coords()))
    }

    /// Rank of a point known to lie in the slice.
    #[inline]
    pub fn rank_unchecked(&self, y: &[i64]) -> u64 {
        let t = &*self.table;
        let e = self.step;
        let mut idx = 0u64;
        let mut rem = self.bound;
        let mut fixed = 0i64;
        for k in (1..=self.dim).rev() {
            let yk = y[k - 1];
            let c = (-fixed).rem_euclid(e);
            idx += t.count(k, rem, c) - t.count(k, rem - yk, (c - yk).rem_euclid(e));
            rem -= yk;
            fixed += yk;
        }
        idx
    }

    pub fn unrank(&self, index: u64) -> Result<LatticeVector> {
        if index >= self.size {
            return Err(Error::OutOfDomain {
                point: vec![index as i64],
                slice: self.to_string(),
            });
        }
        let t = &*self.table;
        let e = self.step;
        let mut idx = index;
        let mut rem = self.bound;
        let mut fixed = 0i64;
        let mut coords = vec![0i64; self.dim];
        for k in (1..=self.dim).rev() {
            let c = (-fixed).rem_euclid(e);
            let full = t.count(k, rem, c);
            let below = |v: i64| full - t.count(k, rem - v, (c - v).rem_euclid(e));
            let mut v = 0i64;
            while v < rem && below(v + 1) <= idx {
                v += 1;
            }
            idx -= below(v);
            coords[k - 1] = v;
            rem -= v;
            fixed += v;
        }
        debug_assert_eq!(idx, 0);
        Ok(LatticeVector::from_raw(coords))
    }

    /// Points in increasing rank order.
    pub fn iter(&self) -> SliceIter {
        SliceIter {
            bound: self.bound,
            step: self.step,
            current: Some(vec![0; self.dim]),
        }
    }
}

impl fmt::Display for SimplexSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Δ_{{{},{}}} (d={}, D={})",
            self.level, self.step, self.dim, self.degree
        )
    }
}

impl fmt::Debug for SimplexSlice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} with {} points", self.size)
    }
}

/// Colex successor walk over a slice.
pub struct SliceIter {
    bound: i64,
    step: i64,
    current: Option<Vec<i64>>,
}

impl SliceIter {
    fn advance(&mut self, y: &mut [i64]) -> bool {
        let d = y.len();
        if d == 0 {
            return false;
        }
        let mut sum: i64 = y.iter().sum();
        if sum + self.step <= self.bound {
            y[0] += self.step;
            return true;
        }
        for k in 1..d {
            for c in y.iter_mut().take(k) {
                *c = 0;
            }
            sum = y.iter().sum();
            if sum + 1 > self.bound {
                continue;
            }
            y[k] += 1;
            sum += 1;
            let need = (-sum).rem_euclid(self.step);
            if sum + need <= self.bound {
                y[0] = need;
                return true;
            }
        }
        false
    }
}

impl Iterator for SliceIter {
    type Item = LatticeVector;

    fn next(&mut self) -> Option<LatticeVector> {
        let out = self.current.clone()?;
        let mut y = out.clone();
        self.current = if self.advance(&mut y) { Some(y) } else { None };
        Some(LatticeVector::from_raw(out))
    }
}

pub(crate) fn binomial_u128(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(dim: usize, bound: i64, step: i64) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut y = vec![0i64; dim];
        loop {
            let n: i64 = y.iter().sum();
            if n <= bound && n % step == 0 {
                out.push(y.clone());
            }
            let mut k = 0;
            loop {
                if k == dim {
                    return out;
                }
                y[k] += 1;
                if y[k] <= bound {
                    break;
                }
                y[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn even_slice_size() {
        let s = SimplexSlice::new(2, 4, 1, 2);
        assert_eq!(s.size(), 9);
        assert_eq!(s.size() as u128, SimplexSlice::size_estimate(2, 4, 1, 2));
    }

    #[test]
    fn rank_of_origin_is_zero() {
        let s = SimplexSlice::new(3, 4, 2, 1);
        assert_eq!(s.rank(&LatticeVector::zero(3)).unwrap(), 0);
    }

    #[test]
    fn round_trip_and_order() {
        for (dim, degree, level, step) in [(2, 4, 2, 1), (3, 3, 2, 3), (2, 6, 2, 2), (1, 5, 3, 5), (4, 2, 2, 2)] {
            let s = SimplexSlice::new(dim, degree, level, step);
            let pts: Vec<LatticeVector> = s.iter().collect();
            assert_eq!(pts.len() as u64, s.size());
            for (i, p) in pts.iter().enumerate() {
                assert_eq!(s.rank(p).unwrap(), i as u64);
                assert_eq!(&s.unrank(i as u64).unwrap(), p);
            }
            let mut all = brute(dim, degree * level as i64, step);
            all.sort();
            let mut seen: Vec<Vec<i64>> = pts.iter().map(|p| p.coords().to_vec()).collect();
            seen.sort();
            assert_eq!(all, seen);
            assert_eq!(s.size() as u128, SimplexSlice::size_estimate(dim, degree, level, step));
        }
    }

    #[test]
    fn out_of_domain() {
        let s = SimplexSlice::new(2, 4, 1, 2);
        assert!(s.rank(&LatticeVector::from_raw(vec![1, 0])).is_err());
        assert!(s.rank(&LatticeVector::from_raw(vec![4, 2])).is_err());
        assert!(s.unrank(9).is_err());
    }
}
