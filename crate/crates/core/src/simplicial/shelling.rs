//! Shelling orders of pure complexes.
//!
//! `F_1, ..., F_t` is a shelling when, for every `j >= 2`, the intersection of
//! `F_j` with the complex generated by `F_1, ..., F_{j-1}` is pure of
//! dimension `dim F_j - 1`. The restriction set of `F_j` is the set of
//! vertices `x` with `F_j \ {x}` already present; its size histogram is the
//! h-vector.

use std::collections::HashSet;
use std::fmt;

use super::decomposition::DecompositionCertificate;
use super::{AbstractComplex, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingOrder {
    facets: Vec<Vec<Vertex>>,
    restrictions: Vec<Vec<Vertex>>,
}

impl ShellingOrder {
    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    pub fn restrictions(&self) -> &[Vec<Vertex>] {
        &self.restrictions
    }

    /// `hist[k]` = number of facets whose restriction set has `k` elements.
    pub fn restriction_histogram(&self) -> Vec<u64> {
        let d = self.facets.first().map_or(0, |f| f.len());
        let mut hist = vec![0u64; d + 1];
        for r in &self.restrictions {
            hist[r.len()] += 1;
        }
        hist
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellingFailure {
    /// 1-based position of the first offending facet, 0 when the order is not
    /// a permutation of the facets.
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for ShellingFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason)
    }
}

/// Checks a facet order step by step and computes its restriction sets.
pub fn verify_shelling(c: &AbstractComplex, order: &[Vec<Vertex>]) -> Result<ShellingOrder, ShellingFailure> {
    let mut sorted: Vec<Vec<Vertex>> = order
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect();
    let normalized = sorted.clone();
    sorted.sort();
    if sorted.as_slice() != c.facets() {
        return Err(ShellingFailure { step: 0, reason: "order is not a permutation of the facets".into() });
    }
    if !c.is_pure() {
        return Err(ShellingFailure { step: 0, reason: "complex is not pure".into() });
    }

    let mut ridges: HashSet<Vec<Vertex>> = HashSet::new();
    let mut restrictions = Vec::with_capacity(normalized.len());
    for (j, f) in normalized.iter().enumerate() {
        let restriction: Vec<Vertex> =
            if j == 0 { Vec::new() } else { f.iter().copied().filter(|&x| ridges.contains(&without(f, x))).collect() };
        for earlier in &normalized[..j] {
            // F_j ∩ F_i must sit inside some F_j \ {x} with x in the restriction.
            let ok = f.iter().any(|x| restriction.contains(x) && earlier.binary_search(x).is_err());
            if !ok {
                return Err(ShellingFailure {
                    step: j + 1,
                    reason: format!("intersection with {earlier:?} is not covered by a codimension-one face of {f:?}"),
                });
            }
        }
        for &x in f {
            ridges.insert(without(f, x));
        }
        restrictions.push(restriction);
    }
    Ok(ShellingOrder { facets: normalized, restrictions })
}

fn without(f: &[Vertex], x: Vertex) -> Vec<Vertex> {
    f.iter().copied().filter(|&y| y != x).collect()
}

/// Facets of the deletion first, then the facets through the shedding
/// vertex, recursively.
pub fn shelling_from_decomposition(
    c: &AbstractComplex,
    cert: &DecompositionCertificate,
) -> Result<ShellingOrder, ShellingFailure> {
    let (verts, dense) = c.canonical();
    let order: Vec<Vec<Vertex>> =
        order_dense(&dense, cert).into_iter().map(|f| f.into_iter().map(|x| verts[x as usize]).collect()).collect();
    verify_shelling(c, &order)
}

fn order_dense(c: &AbstractComplex, cert: &DecompositionCertificate) -> Vec<Vec<Vertex>> {
    match cert {
        DecompositionCertificate::Leaf => c.facets().to_vec(),
        DecompositionCertificate::Node { vertex, deletion, link } => {
            let v = *vertex;
            let lk = c.link(&[v]).expect("certificate vertex belongs to the complex");
            let del = c.deletion(&[v]);
            let mut out = Vec::with_capacity(c.facets().len());
            if del.dimension() == c.dimension() {
                out.extend(lifted(&del, deletion, None));
            }
            out.extend(lifted(&lk, link, Some(v)));
            out
        }
    }
}

fn lifted(sub: &AbstractComplex, cert: &DecompositionCertificate, apex: Option<Vertex>) -> Vec<Vec<Vertex>> {
    let (verts, dense) = sub.canonical();
    order_dense(&dense, cert)
        .into_iter()
        .map(|f| {
            let mut g: Vec<Vertex> = f.into_iter().map(|x| verts[x as usize]).chain(apex).collect();
            g.sort_unstable();
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::super::{find_vertex_decomposition, SearchOptions, SearchOutcome};
    use super::*;

    fn cycle(n: u32) -> AbstractComplex {
        AbstractComplex::from_faces((0..n).map(|i| vec![i, (i + 1) % n]))
    }

    #[test]
    fn single_facet() {
        let c = AbstractComplex::simplex([1, 2, 3]);
        let s = shelling_from_decomposition(&c, &DecompositionCertificate::Leaf).unwrap();
        assert_eq!(s.facets(), &[vec![1, 2, 3]]);
        assert_eq!(s.restriction_histogram(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn pentagon_histogram() {
        let c = cycle(5);
        let SearchOutcome::Found(cert) = find_vertex_decomposition(&c, &SearchOptions::default()).unwrap() else {
            panic!()
        };
        let s = shelling_from_decomposition(&c, &cert).unwrap();
        assert_eq!(s.restriction_histogram(), vec![1, 3, 1]);
    }

    #[test]
    fn bad_order_names_step() {
        // Two opposite edges of a 4-cycle first: they share nothing.
        let c = cycle(4);
        let order = vec![vec![0, 1], vec![2, 3], vec![1, 2], vec![0, 3]];
        let err = verify_shelling(&c, &order).unwrap_err();
        assert_eq!(err.step, 2);
        let good = vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]];
        assert_eq!(verify_shelling(&c, &good).unwrap().restriction_histogram(), vec![1, 2, 1]);
    }

    #[test]
    fn not_a_permutation() {
        let c = cycle(4);
        let err = verify_shelling(&c, &[vec![0, 1]]).unwrap_err();
        assert_eq!(err.step, 0);
    }

    #[test]
    fn points_shell_in_any_order() {
        let c = AbstractComplex::from_faces([vec![4], vec![2], vec![7]]);
        let s = verify_shelling(&c, &[vec![7], vec![2], vec![4]]).unwrap();
        assert_eq!(s.restriction_histogram(), vec![1, 2]);
    }
}
