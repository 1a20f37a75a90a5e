//! Abstract simplicial complexes stored as facet antichains.

mod decomposition;
pub mod io;
mod shelling;

pub use decomposition::{
    find_vertex_decomposition, verify_vertex_decomposition, DecompositionCertificate, SearchOptions, SearchOutcome,
};
pub use shelling::{shelling_from_decomposition, verify_shelling, ShellingFailure, ShellingOrder};

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// A finite simplicial complex given by its facets. Each facet is sorted, the
/// facet list is sorted and no facet contains another.
///
/// The void complex has no facets; the complex `{∅}` has the single empty
/// facet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbstractComplex {
    facets: Vec<Vec<Vertex>>,
}

impl AbstractComplex {
    pub fn void() -> Self {
        AbstractComplex { facets: Vec::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_face() -> Self {
        AbstractComplex { facets: vec![Vec::new()] }
    }

    pub fn simplex(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        Self::from_faces([vertices.into_iter().collect::<Vec<_>>()])
    }

    /// The complex generated by the given faces (non-maximal ones dropped).
    pub fn from_faces<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut all: Vec<Vec<Vertex>> = faces
            .into_iter()
            .map(|f| {
                let mut f: Vec<Vertex> = f.into_iter().collect();
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        all.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Vec<Vertex>> = Vec::new();
        for f in all {
            if !kept.iter().any(|g| is_subset(&f, g)) {
                kept.push(f);
            }
        }
        kept.sort();
        AbstractComplex { facets: kept }
    }

    pub(crate) fn from_sorted_antichain(facets: Vec<Vec<Vertex>>) -> Self {
        debug_assert!(facets.windows(2).all(|w| w[0] < w[1]));
        AbstractComplex { facets }
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.facets.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `None` for the void complex, `Some(-1)` for `{∅}`.
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// A facet of smaller dimension than the complex, if any.
    pub fn impurity_witness(&self) -> Option<&[Vertex]> {
        let dim = self.dimension()?;
        self.facets.iter().find(|f| f.len() as isize - 1 < dim).map(|f| f.as_slice())
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.facets.iter().any(|g| is_subset(&f, g))
    }

    fn delete_vertex(&self, v: Vertex) -> AbstractComplex {
        let mut by_vertex: HashMap<Vertex, Vec<usize>> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            if f.binary_search(&v).is_err() {
                for &x in f {
                    by_vertex.entry(x).or_default().push(i);
                }
            }
        }
        let has_other = self.facets.iter().any(|f| f.binary_search(&v).is_err());
        let mut out = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            if f.binary_search(&v).is_err() {
                out.push(f.clone());
                continue;
            }
            let rest: Vec<Vertex> = f.iter().copied().filter(|&x| x != v).collect();
            let covered = match rest.iter().map(|x| by_vertex.get(x)).collect::<Option<Vec<_>>>() {
                None => false,
                Some(lists) if lists.is_empty() => has_other,
                Some(lists) => {
                    let shortest = lists.iter().min_by_key(|l| l.len()).expect("nonempty");
                    shortest.iter().any(|&g| is_subset(&rest, &self.facets[g]))
                }
            };
            if !covered {
                out.push(rest);
            }
        }
        out.sort();
        out.dedup();
        AbstractComplex { facets: out }
    }

    /// Faces disjoint from `a`.
    pub fn deletion(&self, a: &[Vertex]) -> AbstractComplex {
        a.iter().fold(self.clone(), |acc, &v| acc.delete_vertex(v))
    }

    /// `{B : A ∩ B = ∅, A ∪ B ∈ C}`.
    pub fn link(&self, a: &[Vertex]) -> Result<AbstractComplex> {
        let mut a = a.to_vec();
        a.sort_unstable();
        a.dedup();
        let mut out: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .filter(|f| is_subset(&a, f))
            .map(|f| f.iter().copied().filter(|x| a.binary_search(x).is_err()).collect())
            .collect();
        if out.is_empty() {
            return Err(Error::NotAFace(format!("{a:?}")));
        }
        out.sort();
        Ok(AbstractComplex { facets: out })
    }

    /// Simplicial join; the vertex sets must be disjoint.
    pub fn join(&self, other: &AbstractComplex) -> Result<AbstractComplex> {
        let mine = self.vertices();
        if let Some(&v) = other.vertices().iter().find(|v| mine.binary_search(v).is_ok()) {
            return Err(Error::GroundSetOverlap(v));
        }
        let mut out = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                let mut h: Vec<Vertex> = f.iter().chain(g).copied().collect();
                h.sort_unstable();
                out.push(h);
            }
        }
        out.sort();
        Ok(AbstractComplex { facets: out })
    }

    /// Cone over a fresh vertex `v`.
    pub fn cone(&self, v: Vertex) -> Result<AbstractComplex> {
        self.join(&AbstractComplex::simplex([v]))
    }

    /// All faces grouped by cardinality (index 0 holds the empty face, when
    /// the complex is not void). Each list is sorted lexicographically.
    pub fn faces_by_cardinality(&self) -> Vec<Vec<Vec<Vertex>>> {
        let Some(dim) = self.dimension() else {
            return Vec::new();
        };
        let mut sets: Vec<std::collections::BTreeSet<Vec<Vertex>>> = vec![Default::default(); (dim + 2) as usize];
        for f in &self.facets {
            let k = f.len();
            for mask in 0u64..(1u64 << k) {
                let sub: Vec<Vertex> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                sets[sub.len()].insert(sub);
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// `(f_{-1}, f_0, ...)`; empty for the void complex.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_cardinality().iter().map(|l| l.len() as u64).collect()
    }

    /// Relabels vertices densely `0..k` in increasing order. Returns the
    /// original label of each new vertex and the relabelled complex.
    pub fn canonical(&self) -> (Vec<Vertex>, AbstractComplex) {
        let verts = self.vertices();
        let facets = self
            .facets
            .iter()
            .map(|f| f.iter().map(|x| verts.binary_search(x).expect("vertex listed") as Vertex).collect())
            .collect();
        (verts, AbstractComplex { facets })
    }

    /// Applies a relabelling; `map[v]` is the new name of `v`.
    pub fn relabel(&self, map: &[Vertex]) -> AbstractComplex {
        AbstractComplex::from_faces(self.facets.iter().map(|f| f.iter().map(|&x| map[x as usize]).collect::<Vec<_>>()))
    }
}

/// Both slices sorted ascending.
pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[Vertex]]) -> AbstractComplex {
        AbstractComplex::from_faces(facets.iter().map(|f| f.to_vec()))
    }

    fn cycle(n: u32) -> AbstractComplex {
        AbstractComplex::from_faces((0..n).map(|i| vec![i, (i + 1) % n]))
    }

    #[test]
    fn from_faces_keeps_maximal() {
        let c = cx(&[&[1, 2], &[1], &[2, 3], &[3, 2]]);
        assert_eq!(c.facets(), &[vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn deletion_examples() {
        let c = cycle(5);
        assert_eq!(c.deletion(&[]), c);
        let d = c.deletion(&[0]);
        assert_eq!(d.facets().len(), 3);
        assert!(d.is_pure());
        // Deleting a vertex shared by every facet leaves the link.
        let cone = cx(&[&[0, 1], &[0, 2]]);
        assert_eq!(cone.deletion(&[0]), cx(&[&[1], &[2]]));
        // Isolated vertex becomes the empty face only when nothing else remains.
        assert_eq!(cx(&[&[7]]).deletion(&[7]), AbstractComplex::empty_face());
        assert_eq!(cx(&[&[7], &[8]]).deletion(&[7]), cx(&[&[8]]));
    }

    #[test]
    fn link_examples() {
        let c = cycle(6);
        assert_eq!(c.link(&[]).unwrap(), c);
        assert_eq!(c.link(&[0]).unwrap(), cx(&[&[1], &[5]]));
        assert_eq!(c.link(&[0, 1]).unwrap(), AbstractComplex::empty_face());
        assert!(matches!(c.link(&[0, 3]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn join_and_cone() {
        let c = cycle(4);
        assert_eq!(c.join(&AbstractComplex::empty_face()).unwrap(), c);
        let two = cx(&[&[0], &[1]]);
        let cone = two.cone(9).unwrap();
        assert_eq!(cone, cx(&[&[0, 9], &[1, 9]]));
        let p = cx(&[&[0], &[1], &[2]]);
        let q = cx(&[&[3], &[4], &[5]]);
        let k33 = p.join(&q).unwrap();
        assert_eq!(k33.facets().len(), 9);
        assert_eq!(k33.dimension(), Some(1));
        assert!(matches!(p.join(&p), Err(Error::GroundSetOverlap(_))));
    }

    #[test]
    fn dimensions_and_purity() {
        assert_eq!(AbstractComplex::void().dimension(), None);
        assert_eq!(AbstractComplex::empty_face().dimension(), Some(-1));
        let c = cx(&[&[0, 1], &[2]]);
        assert!(!c.is_pure());
        assert_eq!(c.impurity_witness(), Some(&[2][..]));
    }

    #[test]
    fn f_vector_of_cycle() {
        assert_eq!(cycle(5).f_vector(), vec![1, 5, 5]);
        assert!(AbstractComplex::void().f_vector().is_empty());
        assert_eq!(AbstractComplex::empty_face().f_vector(), vec![1]);
    }

    #[test]
    fn subset() {
        assert!(is_subset(&[], &[1]));
        assert!(is_subset(&[1, 3], &[1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[1, 2, 3]));
        assert!(!is_subset(&[0], &[1, 2, 3]));
    }
}
