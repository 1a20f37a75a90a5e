//! Reduced simplicial homology over the rationals.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::simplicial::{AbstractComplex, Vertex};

/// Sparse matrix of `∂_k : C_k -> C_{k-1}`, where `C_k` is spanned by the
/// k-dimensional faces in lexicographic order and `C_{-1}` by the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Column `j` lists `(row, ±1)`.
    pub columns: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, s) in col {
                m[i][j] = s as i64;
            }
        }
        m
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        if let Some(r) = echelon_rank(self.to_dense()) {
            return r;
        }
        let big = self.to_dense().into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect();
        echelon_rank::<BigInt>(big).expect("big integers do not overflow")
    }

    /// True iff `self ∘ next` vanishes (`self` = ∂_{k-1}, `next` = ∂_k).
    pub fn composes_to_zero(&self, next: &BoundaryMatrix) -> bool {
        assert_eq!(self.cols, next.rows, "incompatible boundary maps");
        next.columns.iter().all(|col| {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(mid, s) in col {
                for &(row, t) in &self.columns[mid] {
                    *acc.entry(row).or_default() += s as i64 * t as i64;
                }
            }
            acc.values().all(|&x| x == 0)
        })
    }
}

/// Fraction-free row reduction: each elimination step replaces
/// `row <- pivot * row - a * pivot_row` and divides the row by the gcd of its
/// entries. Returns `None` on overflow.
fn echelon_rank<T>(mut m: Vec<Vec<T>>) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub + One,
{
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Prefer a unit pivot to keep entries small.
        let pick =
            (rank..rows)
                .filter(|&r| !m[r][col].is_zero())
                .min_by_key(|&r| if m[r][col].abs().is_one() { 0 } else { 1 });
        let Some(p) = pick else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        let pv = pivot_row[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let a = row[col].clone();
            if a.is_zero() {
                continue;
            }
            let mut g = T::zero();
            for j in col..cols {
                let lhs = row[j].checked_mul(&pv)?;
                let rhs = pivot_row[j].checked_mul(&a)?;
                row[j] = lhs.checked_sub(&rhs)?;
                g = g.gcd(&row[j]);
            }
            if !g.is_zero() && !g.is_one() {
                for x in row[col..].iter_mut() {
                    *x = x.div_floor(&g);
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Faces of `c` grouped by cardinality, with an index for lookups.
struct FaceIndex {
    faces: Vec<Vec<Vec<Vertex>>>,
    index: Vec<HashMap<Vec<Vertex>, usize>>,
}

impl FaceIndex {
    fn new(c: &AbstractComplex, limit: u64) -> Result<Self> {
        let projected = c.facets().iter().fold(0u64, |acc, f| acc.saturating_add(1u64 << f.len().min(63)));
        if projected > limit && count_faces_bounded(c, limit).is_none() {
            return Err(Error::ResourceLimit { what: "face count", projected: projected.to_string(), bound: limit });
        }
        let faces = c.faces_by_cardinality();
        let index = faces.iter().map(|l| l.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()).collect();
        Ok(FaceIndex { faces, index })
    }

    /// `∂` from faces of cardinality `k + 1` to faces of cardinality `k`.
    fn boundary(&self, k: usize) -> BoundaryMatrix {
        let rows = self.faces.get(k).map_or(0, |l| l.len());
        let Some(sources) = self.faces.get(k + 1) else {
            return BoundaryMatrix { rows, cols: 0, columns: Vec::new() };
        };
        let columns = sources
            .par_iter()
            .map(|f| {
                (0..f.len())
                    .map(|i| {
                        let mut sub = f.clone();
                        sub.remove(i);
                        let row = self.index[k][&sub];
                        (row, if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        BoundaryMatrix { rows, cols: sources.len(), columns }
    }
}

/// Number of faces, or `None` once it exceeds `limit`.
fn count_faces_bounded(c: &AbstractComplex, limit: u64) -> Option<u64> {
    let mut seen = std::collections::HashSet::new();
    for f in c.facets() {
        if f.len() >= 40 {
            return None;
        }
        for mask in 0u64..(1u64 << f.len()) {
            let sub: Vec<Vertex> = (0..f.len()).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            seen.insert(sub);
            if seen.len() as u64 > limit {
                return None;
            }
        }
    }
    Some(seen.len() as u64)
}

/// `∂_k`, mapping k-dimensional faces to (k-1)-dimensional faces, for
/// `0 <= k <= dim`. `∂_0` is the augmentation onto the empty face.
pub fn boundary_matrix(c: &AbstractComplex, k: usize) -> Result<BoundaryMatrix> {
    let idx = FaceIndex::new(c, u64::MAX)?;
    Ok(idx.boundary(k))
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, ..., β̃_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBetti(Vec<u64>);

impl ReducedBetti {
    /// `β̃_k` for `k >= -1`.
    pub fn get(&self, k: isize) -> u64 {
        if k < -1 {
            return 0;
        }
        self.0.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// `(β̃_{-1}, β̃_0, ..., β̃_dim)`.
    pub fn from_minus_one(&self) -> &[u64] {
        &self.0
    }

    /// `(β̃_0, ..., β̃_dim)`.
    pub fn nonnegative(&self) -> &[u64] {
        self.0.get(1..).unwrap_or(&[])
    }

    /// `Σ_k (-1)^k β̃_k`.
    pub fn euler_characteristic(&self) -> i128 {
        self.0.iter().enumerate().map(|(i, &b)| if i % 2 == 0 { -(b as i128) } else { b as i128 }).sum()
    }
}

/// Reduced Betti numbers via exact ranks of the boundary maps.
pub fn reduced_betti(c: &AbstractComplex, face_limit: u64) -> Result<ReducedBetti> {
    let Some(dim) = c.dimension() else {
        return Ok(ReducedBetti(Vec::new()));
    };
    let idx = FaceIndex::new(c, face_limit)?;
    let top = (dim + 1) as usize;
    // ranks[k] = rank of the map out of faces of cardinality k, k = 1..=top.
    let ranks: Vec<usize> =
        (0..=top + 1).map(|k| if k == 0 || k > top { 0 } else { idx.boundary(k - 1).rank() }).collect();
    let betti = (0..=top).map(|k| (idx.faces[k].len() - ranks[k] - ranks[k + 1]) as u64).collect();
    Ok(ReducedBetti(betti))
}
