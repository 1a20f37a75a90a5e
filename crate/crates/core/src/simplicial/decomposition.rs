//! Vertex-decomposition certificates: search and independent verification.
//!
//! Certificates name vertices by their rank in the sorted vertex list of the
//! complex at that node, so a sub-certificate depends only on the
//! order-preserving isomorphism class of its complex and can be shared
//! between every place that class occurs.

use std::collections::HashMap;
use std::sync::Arc;

use super::{AbstractComplex, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DecompositionCertificate {
    /// The void complex, `{∅}`, or a single simplex.
    Leaf,
    /// Shedding vertex `vertex` (dense index), then certificates for the
    /// deletion and the link. In the cone case both point at the same tree.
    Node { vertex: Vertex, deletion: Arc<DecompositionCertificate>, link: Arc<DecompositionCertificate> },
}

impl DecompositionCertificate {
    /// Number of nodes, counting shared subtrees once per occurrence.
    pub fn size(&self) -> usize {
        match self {
            DecompositionCertificate::Leaf => 1,
            DecompositionCertificate::Node { deletion, link, .. } => {
                if Arc::ptr_eq(deletion, link) {
                    1 + link.size()
                } else {
                    1 + deletion.size() + link.size()
                }
            }
        }
    }

    /// Shedding vertices along the deletion spine, in the original labels of
    /// `complex`.
    pub fn shedding_sequence(&self, complex: &AbstractComplex) -> Vec<Vertex> {
        let mut out = Vec::new();
        let (mut verts, mut current) = complex.canonical();
        let mut cert = self;
        while let DecompositionCertificate::Node { vertex, deletion, link } = cert {
            let Some(&orig) = verts.get(*vertex as usize) else {
                break;
            };
            out.push(orig);
            if Arc::ptr_eq(deletion, link) {
                break;
            }
            let next = current.deletion(&[*vertex]);
            let (sub, dense) = next.canonical();
            verts = sub.iter().map(|&x| verts[x as usize]).collect();
            current = dense;
            cert = deletion;
        }
        out
    }

    /// Replaces the vertex at the root. Used to build corrupted certificates.
    pub fn with_root_vertex(&self, v: Vertex) -> DecompositionCertificate {
        match self {
            DecompositionCertificate::Leaf => DecompositionCertificate::Leaf,
            DecompositionCertificate::Node { deletion, link, .. } => {
                DecompositionCertificate::Node { vertex: v, deletion: deletion.clone(), link: link.clone() }
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Original vertex labels to try first, in this order. Remaining vertices
    /// follow in increasing order.
    pub priority: Vec<Vertex>,
    /// Maximum number of memoized sub-complexes.
    pub memo_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { priority: Vec::new(), memo_limit: 2_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Arc<DecompositionCertificate>),
    /// The input is not pure; a facet of deficient dimension is given.
    Impure(Vec<Vertex>),
    /// Every candidate vertex was exhausted.
    NotDecomposable,
}

struct Search {
    rank: HashMap<Vertex, usize>,
    memo: HashMap<AbstractComplex, Option<Arc<DecompositionCertificate>>>,
    limit: usize,
}

impl Search {
    fn run(&mut self, c: &AbstractComplex, orig: &[Vertex]) -> Result<Option<Arc<DecompositionCertificate>>> {
        if c.facets().len() <= 1 {
            return Ok(Some(Arc::new(DecompositionCertificate::Leaf)));
        }
        if !c.is_pure() {
            return Ok(None);
        }
        if let Some(hit) = self.memo.get(c) {
            return Ok(hit.clone());
        }
        let dim = c.dimension();
        let mut order: Vec<Vertex> = (0..orig.len() as Vertex).collect();
        order.sort_by_key(|&v| (self.rank.get(&orig[v as usize]).copied().unwrap_or(usize::MAX), orig[v as usize]));

        let mut found = None;
        for v in order {
            let del = c.deletion(&[v]);
            if !del.is_pure() {
                continue;
            }
            let link = c.link(&[v]).expect("vertex of the complex");
            let (lverts, lc) = link.canonical();
            let lorig: Vec<Vertex> = lverts.iter().map(|&x| orig[x as usize]).collect();
            let Some(lcert) = self.run(&lc, &lorig)? else {
                continue;
            };
            let dcert = if del.dimension() < dim {
                debug_assert_eq!(del, link);
                lcert.clone()
            } else {
                let (dverts, dc) = del.canonical();
                let dorig: Vec<Vertex> = dverts.iter().map(|&x| orig[x as usize]).collect();
                match self.run(&dc, &dorig)? {
                    Some(cert) => cert,
                    None => continue,
                }
            };
            found = Some(Arc::new(DecompositionCertificate::Node { vertex: v, deletion: dcert, link: lcert }));
            break;
        }
        if self.memo.len() >= self.limit {
            return Err(Error::ResourceLimit {
                what: "decomposition memo table",
                projected: (self.memo.len() + 1).to_string(),
                bound: self.limit as u64,
            });
        }
        self.memo.insert(c.clone(), found.clone());
        Ok(found)
    }
}

/// Searches for a vertex decomposition by depth-first search over shedding
/// vertices, memoized on the densely relabelled sub-complexes.
pub fn find_vertex_decomposition(c: &AbstractComplex, options: &SearchOptions) -> Result<SearchOutcome> {
    if let Some(w) = c.impurity_witness() {
        return Ok(SearchOutcome::Impure(w.to_vec()));
    }
    let rank = options.priority.iter().enumerate().map(|(i, &v)| (v, i)).rev().collect();
    let mut search = Search { rank, memo: HashMap::new(), limit: options.memo_limit };
    let (verts, dense) = c.canonical();
    Ok(match search.run(&dense, &verts)? {
        Some(cert) => SearchOutcome::Found(cert),
        None => SearchOutcome::NotDecomposable,
    })
}

/// Recomputes every deletion and link and checks the purity and dimension
/// conditions at each node, independently of the search.
pub fn verify_vertex_decomposition(c: &AbstractComplex, cert: &DecompositionCertificate) -> bool {
    let (_, dense) = c.canonical();
    verify_dense(&dense, cert)
}

fn verify_dense(c: &AbstractComplex, cert: &DecompositionCertificate) -> bool {
    if !c.is_pure() {
        return false;
    }
    match cert {
        DecompositionCertificate::Leaf => c.facets().len() <= 1,
        DecompositionCertificate::Node { vertex, deletion, link } => {
            let v = *vertex;
            if v as usize >= c.vertices().len() {
                return false;
            }
            let Ok(lk) = c.link(&[v]) else {
                return false;
            };
            let del = c.deletion(&[v]);
            let dim = c.dimension().expect("nonvoid");
            if lk.dimension() != Some(dim - 1) || !lk.is_pure() || !del.is_pure() {
                return false;
            }
            let cone = del.dimension() != Some(dim);
            if cone && del != lk {
                return false;
            }
            verify_dense(&lk.canonical().1, link) && verify_dense(&del.canonical().1, deletion)
        }
    }
}
