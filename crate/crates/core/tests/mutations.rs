//! The checkers must reject corrupted inputs derived from genuine ones.

use dissect_core::bijection::{decode, encode, BijectionImage};
use dissect_core::complex::{facet_regions_ok, DissectionComplex, DEFAULT_FACE_LIMIT};
use dissect_core::counts::{is_m_sequence, narayana_vector};
use dissect_core::dissection::certify;
use dissect_core::simplicial::{verify_shelling, verify_vertex_decomposition, DecompositionCertificate};
use dissect_core::{ComplexParams, Diagonal, Error, Face};

fn certified(p: ComplexParams) -> dissect_core::dissection::Certification {
    certify(&p, DEFAULT_FACE_LIMIT, 1_000_000).unwrap().unwrap()
}

#[test]
fn shelling_with_ridge_free_start_is_rejected() {
    let c = certified(ComplexParams::a(2, 4).unwrap());
    let order = c.shelling.as_ref().unwrap().facets().to_vec();
    let d = order[0].len();
    let far = order.iter().position(|f| f.iter().filter(|v| order[0].contains(v)).count() < d - 1).unwrap();
    let mut bad = order.clone();
    let g = bad.remove(far);
    bad.insert(1, g);
    let err = verify_shelling(&c.complex, &bad).unwrap_err();
    assert_eq!(err.step, 2);
}

#[test]
fn shelling_missing_or_repeating_facets_is_rejected() {
    let c = certified(ComplexParams::b(2, 2).unwrap());
    let order = c.shelling.as_ref().unwrap().facets().to_vec();
    let mut short = order.clone();
    short.pop();
    assert_eq!(verify_shelling(&c.complex, &short).unwrap_err().step, 0);
    let mut repeated = order.clone();
    let last = repeated.len() - 1;
    repeated[last] = repeated[0].clone();
    assert_eq!(verify_shelling(&c.complex, &repeated).unwrap_err().step, 0);
}

#[test]
fn truncated_certificates_are_rejected() {
    let c = certified(ComplexParams::a(2, 3).unwrap());
    assert!(c.certificate_verified);
    assert!(!verify_vertex_decomposition(&c.complex, &DecompositionCertificate::Leaf));
    if let DecompositionCertificate::Node { vertex, deletion, .. } = c.certificate.as_ref() {
        let lopsided = DecompositionCertificate::Node {
            vertex: *vertex,
            deletion: deletion.clone(),
            link: std::sync::Arc::new(DecompositionCertificate::Leaf),
        };
        assert!(!verify_vertex_decomposition(&c.complex, &lopsided));
    } else {
        panic!("Δ^2_A2 is not a simplex");
    }
}

#[test]
fn corrupted_images_are_rejected() {
    assert!(matches!(BijectionImage::new(vec![3, 1], vec![true, true]), Err(Error::InvalidImage(_))));
    assert!(matches!(BijectionImage::new(vec![1], vec![true, true]), Err(Error::InvalidImage(_))));
    let too_big = BijectionImage::new(vec![4], vec![true, false]).unwrap();
    assert!(decode(&too_big, 1, 2).is_err());
    let wrong_n = BijectionImage::new(vec![1], vec![true]).unwrap();
    assert!(decode(&wrong_n, 1, 2).is_err());
}

#[test]
fn crossing_and_oversized_faces_are_rejected() {
    let p = ComplexParams::b(1, 2).unwrap();
    let cx = DissectionComplex::new(p);
    let v = cx.vertices();
    let crossing: Vec<Diagonal> = (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !cx.compatible_indices(i as u32, j as u32))
        .map(|(i, j)| vec![v[i], v[j]])
        .unwrap();
    assert!(matches!(Face::new(p, crossing), Err(Error::Incompatible(..))));
    assert!(Face::new(p, v.to_vec()).is_err());
}

#[test]
fn encode_detects_foreign_faces() {
    let face = Face::new(ComplexParams::a(1, 3).unwrap(), []).unwrap();
    assert!(encode(&face).is_err());
}

#[test]
fn facet_audit_rejects_non_facets() {
    let cx = DissectionComplex::new(ComplexParams::a(1, 4).unwrap());
    for f in cx.enumerate_faces(None).unwrap().faces(1) {
        assert!(!facet_regions_ok(&cx.face(f)));
    }
    for f in cx.facets().unwrap() {
        assert!(facet_regions_ok(&f));
    }
}

#[test]
fn m_sequence_mutations() {
    for m in 1..=3 {
        for n in 2..=6 {
            let mut h = narayana_vector(&ComplexParams::b(m, n).unwrap()).unwrap().entries().to_vec();
            assert!(is_m_sequence(&h));
            h[0] += 1;
            assert!(!is_m_sequence(&h));
            h[0] -= 1;
            // h_2 may be at most C(h_1 + 1, 2).
            let h1 = h[1].clone();
            h[2] = &h1 * (&h1 + 1) / 2 + 1;
            assert!(!is_m_sequence(&h));
        }
    }
}
