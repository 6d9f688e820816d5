//! Slow reference implementations for tests. Nothing here touches the rank
//! tables, the sumset tower or the homology code; only [`LatticeVector`] is
//! shared.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Largest number of multisets `naive_sumset` is willing to visit.
pub const MULTISET_CAP: u128 = 50_000_000;

/// Largest box `naive_member` will fill.
pub const BOX_CAP: u128 = 20_000_000;

fn multiset_count(n: usize, s: u32) -> u128 {
    // C(n+s-1, s)
    let mut acc: u128 = 1;
    for k in 1..=s as u128 {
        acc = acc * (n as u128 + k - 1) / k;
    }
    acc
}

/// All sums `a_{i_1} + … + a_{i_s}` with `i_1 ≤ … ≤ i_s`.
pub fn naive_sumset(a: &[LatticeVector], s: u32) -> Result<BTreeSet<LatticeVector>> {
    let Some(first) = a.first() else {
        return Err(Error::Parameter("empty generator list".into()));
    };
    let d = first.dim();
    let count = multiset_count(a.len(), s);
    if count > MULTISET_CAP {
        return Err(Error::Parameter(format!(
            "{count} multisets exceed the oracle cap {MULTISET_CAP}"
        )));
    }
    let pts: Vec<&[i64]> = a.iter().map(|p| p.coords()).collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; s as usize];
    let mut acc = vec![0i64; d];
    loop {
        acc.iter_mut().for_each(|x| *x = 0);
        for &i in &idx {
            for (x, y) in acc.iter_mut().zip(pts[i]) {
                *x += y;
            }
        }
        out.insert(LatticeVector::new(acc.clone())?);
        // next nondecreasing index tuple
        let Some(p) = (0..idx.len()).rev().find(|&p| idx[p] + 1 < pts.len()) else {
            break;
        };
        let v = idx[p] + 1;
        for q in idx.iter_mut().skip(p) {
            *q = v;
        }
    }
    Ok(out)
}

/// Whether `y` is a sum of elements of `a` (any number of them).
///
/// Fills the box `{z : z ≤ y}` in lexicographic order of mixed-radix index.
pub fn naive_member(a: &[LatticeVector], y: &LatticeVector) -> Result<bool> {
    let d = y.dim();
    let dims: Vec<usize> = y.coords().iter().map(|&c| c as usize + 1).collect();
    let size: u128 = dims.iter().map(|&x| x as u128).product();
    if size > BOX_CAP {
        return Err(Error::Parameter(format!("box of {size} points exceeds {BOX_CAP}")));
    }
    let gens: Vec<&[i64]> = a
        .iter()
        .filter(|p| p.norm() > 0)
        .map(|p| p.coords())
        .collect();
    if gens.iter().any(|g| g.len() != d) {
        return Err(Error::Parameter("dimension mismatch".into()));
    }
    let mut reach = vec![false; size as usize];
    reach[0] = true;
    let mut z = vec![0i64; d];
    for idx in 1..size as usize {
        // decode idx into z (last coordinate fastest)
        let mut r = idx;
        for k in (0..d).rev() {
            z[k] = (r % dims[k]) as i64;
            r /= dims[k];
        }
        reach[idx] = gens.iter().any(|g| {
            let mut j = 0usize;
            for k in 0..d {
                let c = z[k] - g[k];
                if c < 0 {
                    return false;
                }
                j = j * dims[k] + c as usize;
            }
            reach[j]
        });
    }
    Ok(reach[size as usize - 1])
}

/// Membership of `y ∈ ℕ^{d+1}` in the semigroup of `(D − |a|, a)`.
pub fn naive_member_homogenized(a: &[LatticeVector], degree: i64, y: &LatticeVector) -> Result<bool> {
    let lifted: Vec<LatticeVector> = a
        .iter()
        .map(|p| {
            let mut c = vec![degree - p.norm()];
            c.extend_from_slice(p.coords());
            LatticeVector::new(c)
        })
        .collect::<Result<_>>()?;
    naive_member(&lifted, y)
}

/// Reduced Betti numbers over `𝔽_p`, indexed from degree −1, of the complex
/// whose faces are the bitmasks in `faces` on `n` vertices. The empty face is
/// added if missing; closure under subsets is not checked.
pub fn homology_recheck(faces: &[u32], n: usize, p: u64) -> Vec<u64> {
    assert!(n <= 31 && p >= 2);
    let mut all: HashSet<u32> = faces.iter().copied().collect();
    all.insert(0);
    let top = all.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by_dim[k] holds the faces with k vertices, sorted
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in &all {
        by_dim[f.count_ones() as usize].push(f);
    }
    by_dim.iter_mut().for_each(|v| v.sort_unstable());
    // ranks[k] = rank of ∂ from k-vertex faces to (k−1)-vertex faces
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let index: HashMap<u32, usize> = by_dim[k - 1]
            .iter()
            .enumerate()
            .map(|(i, &f)| (f, i))
            .collect();
        let mut rows: Vec<Vec<i64>> = by_dim[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; by_dim[k - 1].len()];
                let mut sign = 1i64;
                for v in 0..n {
                    if f >> v & 1 == 1 {
                        row[index[&(f & !(1 << v))]] = sign;
                        sign = -sign;
                    }
                }
                row
            })
            .collect();
        ranks[k] = rank_fp(&mut rows, p as i64);
    }
    (0..=top)
        .map(|k| (by_dim[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

fn rank_fp(m: &mut [Vec<i64>], p: i64) -> usize {
    for row in m.iter_mut() {
        row.iter_mut().for_each(|x| *x = x.rem_euclid(p));
    }
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = pow_mod(m[r][c], p - 2, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot = &top[r];
        for row in rest {
            if row[c] != 0 {
                let f = row[c] * inv % p;
                for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        r += 1;
    }
    r
}

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}
