//! Runs the generic simplicial machinery on Δ^m_W.

use std::sync::Arc;

use crate::complex::DissectionComplex;
use crate::error::Result;
use crate::homology::{reduced_betti, ReducedBetti};
use crate::params::ComplexParams;
use crate::polygon::{arc_distance, Label};
use crate::simplicial::{
    find_vertex_decomposition, shelling_from_decomposition, verify_vertex_decomposition, AbstractComplex,
    DecompositionCertificate, SearchOptions, SearchOutcome, ShellingFailure, ShellingOrder,
};

/// The facet complex of Δ^m_W, with vertex `i` standing for the `i`-th
/// diagonal of [`DissectionComplex::vertices`].
pub fn to_abstract(cx: &DissectionComplex) -> Result<AbstractComplex> {
    let d = cx.params().facet_size();
    let table = cx.enumerate_faces(Some(d))?;
    Ok(AbstractComplex::from_sorted_antichain(table.faces(d).map(|f| f.to_vec()).collect()))
}

/// Vertex order for the decomposition search: take the minimal diagonal
/// joining positions `0` and `m + 1`; for each corner `c = 1, ..., m` of the
/// (m+2)-gon it cuts off, list the diagonals incident to `c` ordered clockwise
/// by their other endpoint.
pub fn decomposition_priority(cx: &DissectionComplex) -> Vec<u32> {
    let p = cx.params();
    let size = p.polygon_size();
    let mut out = Vec::new();
    for corner in 1..=p.m().min(size - 1) {
        let c = Label::at(corner);
        let mut incident: Vec<(u32, u32)> = cx
            .vertices()
            .iter()
            .enumerate()
            .filter_map(|(i, d)| {
                d.chords(p).iter().find(|ch| ch.has_endpoint(c)).map(|ch| {
                    let other = if ch.lo() == c { ch.hi() } else { ch.lo() };
                    (arc_distance(other, c, size), i as u32)
                })
            })
            .collect();
        incident.sort();
        for (_, i) in incident {
            if !out.contains(&i) {
                out.push(i);
            }
        }
    }
    out
}

#[derive(Debug, Clone)]
pub struct Certification {
    pub complex: AbstractComplex,
    pub certificate: Arc<DecompositionCertificate>,
    pub certificate_verified: bool,
    pub shelling: Result<ShellingOrder, ShellingFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificationFailure {
    Impure(Vec<u32>),
    NotDecomposable,
}

/// Searches a vertex decomposition of Δ^m_W, verifies it independently and
/// derives the corresponding shelling.
pub fn certify(
    params: &ComplexParams,
    face_limit: u64,
    memo_limit: usize,
) -> Result<std::result::Result<Certification, CertificationFailure>> {
    let cx = DissectionComplex::new(*params).with_face_limit(face_limit);
    let complex = to_abstract(&cx)?;
    let options = SearchOptions { priority: decomposition_priority(&cx), memo_limit };
    let cert = match find_vertex_decomposition(&complex, &options)? {
        SearchOutcome::Found(cert) => cert,
        SearchOutcome::Impure(w) => return Ok(Err(CertificationFailure::Impure(w))),
        SearchOutcome::NotDecomposable => return Ok(Err(CertificationFailure::NotDecomposable)),
    };
    let certificate_verified = verify_vertex_decomposition(&complex, &cert);
    let shelling = shelling_from_decomposition(&complex, &cert);
    Ok(Ok(Certification { complex, certificate: cert, certificate_verified, shelling }))
}

/// Reduced Betti numbers of Δ^m_W.
pub fn betti(params: &ComplexParams, face_limit: u64) -> Result<ReducedBetti> {
    let cx = DissectionComplex::new(*params).with_face_limit(face_limit);
    reduced_betti(&to_abstract(&cx)?, face_limit)
}
