//! The complexes `T_y` on the extremal rays `D·ε₀, …, D·ε_d` and their
//! reduced homology.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{LatticeVector, SumsetTower};
use crate::linalg;

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    pub const F2: Field = Field::Prime(2);
    pub const F32003: Field = Field::Prime(32003);

    pub fn tag(self) -> String {
        match self {
            Field::Rationals => "q".into(),
            Field::Prime(p) => format!("f{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(Field::Rationals),
            "f2" => Ok(Field::F2),
            "f32003" => Ok(Field::F32003),
            other => Err(Error::Parameter(format!(
                "unknown field {other:?}; expected q, f2 or f32003"
            ))),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.tag())
    }
}

/// A simplicial complex on vertices `0..n`, stored as a membership table
/// over all `2^n` vertex subsets (bit `j` = vertex `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    pub y: Option<LatticeVector>,
    n_vertices: usize,
    faces: Vec<bool>,
}

impl FaceComplex {
    /// Builds from an explicit list of faces, adding nothing.
    pub fn from_faces(n_vertices: usize, faces: &[u32]) -> Result<Self> {
        let mut table = vec![false; 1 << n_vertices];
        for &f in faces {
            if (f as usize) >= table.len() {
                return Err(Error::Precondition(format!(
                    "face {f:#b} uses a vertex outside 0..{n_vertices}"
                )));
            }
            table[f as usize] = true;
        }
        let c = FaceComplex {
            y: None,
            n_vertices,
            faces: table,
        };
        c.check_closed()?;
        Ok(c)
    }

    /// The full simplex on `k` vertices.
    pub fn simplex(k: usize) -> Self {
        FaceComplex {
            y: None,
            n_vertices: k,
            faces: vec![true; 1 << k],
        }
    }

    /// The boundary of the simplex on `k` vertices.
    pub fn simplex_boundary(k: usize) -> Self {
        let mut faces = vec![true; 1 << k];
        faces[(1 << k) - 1] = false;
        FaceComplex {
            y: None,
            n_vertices: k,
            faces,
        }
    }

    /// `{∅}`.
    pub fn void(k: usize) -> Self {
        let mut faces = vec![false; 1 << k];
        faces[0] = true;
        FaceComplex {
            y: None,
            n_vertices: k,
            faces,
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.faces.get(mask as usize).copied().unwrap_or(false)
    }

    /// Faces as bitmasks in increasing order.
    pub fn face_masks(&self) -> Vec<u32> {
        (0..self.faces.len() as u32).filter(|&m| self.faces[m as usize]).collect()
    }

    /// Vertices `j` with `{j}` a face.
    pub fn vertex_mask(&self) -> u32 {
        (0..self.n_vertices)
            .filter(|&j| self.faces[1 << j])
            .fold(0, |m, j| m | (1 << j))
    }

    pub fn dimension(&self) -> i64 {
        self.face_masks()
            .iter()
            .map(|m| m.count_ones() as i64 - 1)
            .max()
            .unwrap_or(-2)
    }

    fn check_closed(&self) -> Result<()> {
        for m in 0..self.faces.len() {
            if !self.faces[m] {
                continue;
            }
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if !self.faces[m ^ bit] {
                    return Err(Error::Internal(format!(
                        "face {m:#b} present but its facet {:#b} is missing",
                        m ^ bit
                    )));
                }
            }
        }
        Ok(())
    }

    /// `Σ_F (−1)^{dim F}` including `∅` (dimension −1).
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.face_masks()
            .iter()
            .map(|m| if m.count_ones() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Some vertex `v` with `F ∪ {v}` a face for every face `F`.
    fn cone_apex(&self) -> Option<usize> {
        (0..self.n_vertices).find(|&v| {
            self.faces[1 << v]
                && (0..self.faces.len()).all(|m| !self.faces[m] || self.faces[m | (1 << v)])
        })
    }
}

/// `β̃_i` for `i = −1..=n−1`, stored at index `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomologyProfile {
    pub betti: Vec<u64>,
    pub field: Field,
}

impl ReducedHomologyProfile {
    pub fn betti(&self, i: i64) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.betti.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// Degrees `i` with `β̃_i ≠ 0`.
    pub fn nonzero_degrees(&self) -> Vec<i64> {
        (0..self.betti.len())
            .filter(|&k| self.betti[k] != 0)
            .map(|k| k as i64 - 1)
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }

    pub fn euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { -(b as i64) } else { b as i64 })
            .sum()
    }
}

impl Serialize for ReducedHomologyProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.betti.len()))?;
        for (k, b) in self.betti.iter().enumerate() {
            m.serialize_entry(&(k as i64 - 1).to_string(), b)?;
        }
        m.end()
    }
}

/// `T_y = {F : y − Σ_{j∈F} D·εⱼ ∈ S_A}`. The tower must hold every level up
/// to `|y|/D`.
pub fn build_t(tower: &SumsetTower, y: &LatticeVector) -> Result<FaceComplex> {
    let gens = tower.generators();
    let n = gens.dim() + 1;
    let degree = gens.degree();
    if y.dim() != n {
        return Err(Error::Precondition(format!("expected a point of ℕ^{n}, got {y:?}")));
    }
    let member = |c: &[i64]| {
        tower.member_cached(c).ok_or_else(|| {
            Error::Precondition(format!(
                "level {} is not cached (top is {})",
                c.iter().sum::<i64>() / degree,
                tower.top()
            ))
        })
    };
    if !member(y.coords())? {
        return Err(Error::Precondition(format!("{y:?} is not in the semigroup")));
    }
    let mut faces = vec![false; 1 << n];
    let mut buf = y.coords().to_vec();
    for (mask, face) in faces.iter_mut().enumerate() {
        buf.copy_from_slice(y.coords());
        let mut ok = true;
        for (j, c) in buf.iter_mut().enumerate() {
            if mask & (1 << j) != 0 {
                *c -= degree;
                ok &= *c >= 0;
            }
        }
        *face = ok && member(&buf)?;
    }
    let c = FaceComplex {
        y: Some(y.clone()),
        n_vertices: n,
        faces,
    };
    c.check_closed()?;
    Ok(c)
}

/// Boundary matrix `∂_k : C_k → C_{k−1}` with rows indexed by the
/// `(k−1)`-faces and columns by the `k`-faces (both in mask order).
fn boundary(cells_lo: &[u32], cells_hi: &[u32]) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; cells_hi.len()]; cells_lo.len()];
    for (col, &f) in cells_hi.iter().enumerate() {
        let mut pos = 0;
        for v in 0..32 {
            if f & (1 << v) == 0 {
                continue;
            }
            let g = f & !(1 << v);
            let row = cells_lo.binary_search(&g).expect("complex is closed");
            m[row][col] = if pos % 2 == 0 { 1 } else { -1 };
            pos += 1;
        }
    }
    m
}

fn matrix_rank(m: &[Vec<i64>], field: Field) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    match field {
        Field::Rationals => linalg::rank_q(m),
        Field::Prime(p) => linalg::rank_mod_p(m, p),
    }
}

/// Reduced homology ranks with the empty face as the `(−1)`-cell.
pub fn reduced_homology(c: &FaceComplex, field: Field) -> ReducedHomologyProfile {
    let n = c.n_vertices;
    let mut betti = vec![0u64; n + 1];
    if c.cone_apex().is_some() {
        return ReducedHomologyProfile { betti, field };
    }
    // cells[k] = faces with k vertices, i.e. dimension k − 1
    let mut cells: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for m in c.face_masks() {
        cells[m.count_ones() as usize].push(m);
    }
    // rank of ∂ from size-k faces to size-(k−1) faces, k = 1..=n
    let mut ranks = vec![0usize; n + 2];
    for k in 1..=n {
        if cells[k].is_empty() || cells[k - 1].is_empty() {
            continue;
        }
        ranks[k] = matrix_rank(&boundary(&cells[k - 1], &cells[k]), field);
    }
    for k in 0..=n {
        let dim_c = cells[k].len();
        betti[k] = (dim_c - ranks[k] - ranks[k + 1]) as u64;
    }
    ReducedHomologyProfile { betti, field }
}
