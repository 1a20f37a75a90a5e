//! Materialized Δ^m_W: the valid diagonals, their compatibility graph, and
//! exact face enumeration as cliques of that graph.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::counts::{self, FVector};
use crate::error::{Error, Result};
use crate::params::ComplexParams;
use crate::polygon::{arc_distance, compatible, Chord, Diagonal, Face, Label};

/// Default cap on the number of enumerated faces.
pub const DEFAULT_FACE_LIMIT: u64 = 10_000_000;

/// All valid diagonals of the polygon in canonical order.
///
/// Generated by canonicalizing every chord of the polygon and keeping the
/// ones that are vertices of the complex.
pub fn vertex_set(params: &ComplexParams) -> Vec<Diagonal> {
    let size = params.polygon_size();
    let mut out = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            let Ok(chord) = Chord::new(Label::at(a), Label::at(b), size) else {
                continue;
            };
            if let Ok(d) = Diagonal::from_chord(params, chord) {
                out.push(d);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn intersect_with(&mut self, other: &BitSet) {
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Clears every index `<= i`.
    fn clear_through(&mut self, i: usize) {
        let word = i / 64;
        for w in &mut self.words[..word] {
            *w = 0;
        }
        let bit = i % 64;
        self.words[word] &= if bit == 63 { 0 } else { !0u64 << (bit + 1) };
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Faces grouped by cardinality, each stored as sorted vertex indices into the
/// complex's vertex list. Within a cardinality faces are in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceTable {
    // `flat[k]` holds the faces of cardinality k back to back.
    flat: Vec<Vec<u32>>,
    counts: Vec<u64>,
}

impl FaceTable {
    /// Largest cardinality present in the table.
    pub fn max_cardinality(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn faces(&self, k: usize) -> Box<dyn Iterator<Item = &[u32]> + '_> {
        match k {
            0 => Box::new(std::iter::once(&[][..])),
            _ if k < self.flat.len() => Box::new(self.flat[k].chunks_exact(k)),
            _ => Box::new(std::iter::empty()),
        }
    }
}

/// Δ^m_W with its vertices and compatibility graph.
#[derive(Debug, Clone)]
pub struct DissectionComplex {
    params: ComplexParams,
    vertices: Vec<Diagonal>,
    adjacency: Vec<BitSet>,
    face_limit: u64,
}

impl DissectionComplex {
    pub fn new(params: ComplexParams) -> Self {
        let vertices = vertex_set(&params);
        let nv = vertices.len();
        let mut adjacency = vec![BitSet::new(nv); nv];
        for i in 0..nv {
            for j in i + 1..nv {
                if compatible(&params, &vertices[i], &vertices[j]) {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }
        DissectionComplex { params, vertices, adjacency, face_limit: DEFAULT_FACE_LIMIT }
    }

    pub fn with_face_limit(mut self, limit: u64) -> Self {
        self.face_limit = limit;
        self
    }

    pub fn face_limit(&self) -> u64 {
        self.face_limit
    }

    pub fn params(&self) -> &ComplexParams {
        &self.params
    }

    pub fn vertices(&self) -> &[Diagonal] {
        &self.vertices
    }

    pub fn vertex_index(&self, d: &Diagonal) -> Option<u32> {
        self.vertices.binary_search(d).ok().map(|i| i as u32)
    }

    pub fn compatible_indices(&self, i: u32, j: u32) -> bool {
        i == j || self.adjacency[i as usize].contains(j as usize)
    }

    /// Converts a sorted index set into a [`Face`].
    pub fn face(&self, indices: &[u32]) -> Face {
        Face::from_sorted_unchecked(self.params, indices.iter().map(|&i| self.vertices[i as usize]).collect())
    }

    /// Index form of a face of this complex.
    pub fn indices_of(&self, face: &Face) -> Result<Vec<u32>> {
        if face.params() != &self.params {
            return Err(Error::NotAFace(format!("{face} (parameters differ)")));
        }
        face.diagonals()
            .iter()
            .map(|d| self.vertex_index(d).ok_or_else(|| Error::NotAFace(d.describe(&self.params))))
            .collect()
    }

    fn projected_faces(&self, up_to: usize) -> BigUint {
        (0..=up_to as u32).map(|i| counts::face_count(&self.params, i).unwrap_or_default()).sum()
    }

    /// Enumerates every face of cardinality at most `up_to` (default: the
    /// facet size) by canonical-order backtracking over the compatibility
    /// graph. Top-level branches run in parallel and merge in branch order.
    pub fn enumerate_faces(&self, up_to: Option<usize>) -> Result<FaceTable> {
        let d = self.params.facet_size();
        let up_to = up_to.map_or(d, |u| u.min(d));
        let projected = self.projected_faces(up_to);
        if projected > BigUint::from(self.face_limit) {
            return Err(Error::ResourceLimit {
                what: "face count",
                projected: projected.to_string(),
                bound: self.face_limit,
            });
        }

        let nv = self.vertices.len();
        let branches: Vec<Vec<Vec<u32>>> = (0..nv)
            .into_par_iter()
            .map(|v| {
                let mut flat = vec![Vec::new(); up_to + 1];
                if up_to >= 1 {
                    let mut cand = self.adjacency[v].clone();
                    cand.clear_through(v);
                    let mut stack = vec![v as u32];
                    self.extend(&mut stack, &cand, up_to, &mut flat);
                }
                flat
            })
            .collect();

        let mut flat = vec![Vec::new(); up_to + 1];
        for branch in branches {
            for (k, faces) in branch.into_iter().enumerate() {
                flat[k].extend(faces);
            }
        }
        let mut counts = vec![1u64];
        counts.extend((1..=up_to).map(|k| (flat[k].len() / k) as u64));
        let total: u64 = counts.iter().sum();
        if total > self.face_limit {
            return Err(Error::ResourceLimit {
                what: "face count",
                projected: total.to_string(),
                bound: self.face_limit,
            });
        }
        Ok(FaceTable { flat, counts })
    }

    fn extend(&self, stack: &mut Vec<u32>, cand: &BitSet, up_to: usize, flat: &mut [Vec<u32>]) {
        flat[stack.len()].extend_from_slice(stack);
        if stack.len() == up_to {
            return;
        }
        for w in cand.iter() {
            let mut next = cand.clone();
            next.intersect_with(&self.adjacency[w]);
            next.clear_through(w);
            stack.push(w as u32);
            self.extend(stack, &next, up_to, flat);
            stack.pop();
        }
    }

    /// All faces of cardinality equal to the rank.
    pub fn facets(&self) -> Result<Vec<Face>> {
        let d = self.params.facet_size();
        let table = self.enumerate_faces(Some(d))?;
        Ok(table.faces(d).map(|f| self.face(f)).collect())
    }

    /// Enumerated `(f_{-1}, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Result<FVector> {
        Ok(FVector::from_u64(self.enumerate_faces(None)?.counts()))
    }

    /// Checks that every face extends to a facet. Returns the first maximal
    /// face of deficient cardinality as witness.
    pub fn check_pure(&self) -> Result<PurityReport> {
        let d = self.params.facet_size();
        let table = self.enumerate_faces(None)?;
        let all = {
            let mut s = BitSet::new(self.vertices.len());
            (0..self.vertices.len()).for_each(|i| s.insert(i));
            s
        };
        for k in 0..d {
            for f in table.faces(k) {
                let mut common = all.clone();
                for &v in f {
                    common.intersect_with(&self.adjacency[v as usize]);
                }
                if common.is_empty() {
                    return Ok(PurityReport { pure: false, witness: Some(self.face(f)) });
                }
            }
        }
        Ok(PurityReport { pure: true, witness: None })
    }

    /// True iff every set of pairwise compatible vertices listed in `table` is
    /// a clique and every clique of size at most the table's range is listed.
    /// Brute force over all subsets; only for tiny complexes.
    pub fn is_clique_complex_brute(&self, table: &FaceTable) -> bool {
        let nv = self.vertices.len();
        assert!(nv <= 20, "brute-force clique check is exponential");
        let top = table.max_cardinality();
        let mut expected = vec![0u64; top + 1];
        for mask in 0u32..(1 << nv) {
            let k = mask.count_ones() as usize;
            if k > top {
                continue;
            }
            let members: Vec<u32> = (0..nv as u32).filter(|&i| mask >> i & 1 == 1).collect();
            let clique = members
                .iter()
                .enumerate()
                .all(|(a, &x)| members[a + 1..].iter().all(|&y| self.compatible_indices(x, y)));
            if clique {
                expected[k] += 1;
            }
        }
        expected == table.counts
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PurityReport {
    pub pure: bool,
    pub witness: Option<Face>,
}

/// Sizes of the regions into which the drawn chords cut the polygon, found by
/// walking the planar subdivision. Does not consult diagonal validity.
pub fn region_sizes(size: u32, chords: &[Chord]) -> Vec<usize> {
    let n = size as usize;
    // Neighbours of each vertex sorted by anticlockwise offset.
    let mut nbrs: Vec<Vec<u32>> = (0..size).map(|v| vec![(v + 1) % size, (v + size - 1) % size]).collect();
    for c in chords {
        let [a, b] = c.endpoints();
        nbrs[a.position() as usize].push(b.position());
        nbrs[b.position() as usize].push(a.position());
    }
    for (v, list) in nbrs.iter_mut().enumerate() {
        list.sort_by_key(|&w| arc_distance(Label::at(v as u32), Label::at(w), size));
        list.dedup();
    }

    // Directed edges bounding interior regions: anticlockwise boundary edges
    // and both orientations of each chord.
    let mut visited = std::collections::HashSet::new();
    let mut starts: Vec<(u32, u32)> = (0..size).map(|v| (v, (v + 1) % size)).collect();
    for c in chords {
        let [a, b] = c.endpoints();
        starts.push((a.position(), b.position()));
        starts.push((b.position(), a.position()));
    }

    let mut regions = Vec::new();
    for start in starts {
        if visited.contains(&start) {
            continue;
        }
        let mut len = 0;
        let (mut from, mut at) = start;
        loop {
            visited.insert((from, at));
            len += 1;
            // Next edge around the region: the neighbour of `at` with the
            // largest offset still below the offset of `from`.
            let back = arc_distance(Label::at(at), Label::at(from), size);
            let list = &nbrs[at as usize];
            let next = list
                .iter()
                .rev()
                .find(|&&w| arc_distance(Label::at(at), Label::at(w), size) < back)
                .copied()
                .expect("every vertex has its successor as a neighbour");
            from = at;
            at = next;
            if (from, at) == start {
                break;
            }
            assert!(len <= n, "region walk did not close");
        }
        regions.push(len);
    }
    regions
}

/// True iff the face dissects the polygon entirely into (m+2)-gons.
pub fn facet_regions_ok(face: &Face) -> bool {
    let p = face.params();
    region_sizes(p.polygon_size(), &face.chords()).iter().all(|&r| r == p.m() as usize + 2)
}
