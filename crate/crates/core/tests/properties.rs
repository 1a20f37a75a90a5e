use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use dissect_core::bijection::{decode, encode, BijectionImage};
use dissect_core::complex::DissectionComplex;
use dissect_core::counts::{binomial, f_from_h, h_from_f, macaulay_representation, FVector};
use dissect_core::homology::{boundary_matrix, reduced_betti};
use dissect_core::polygon::chords_cross;
use dissect_core::simplicial::io::{parse_facet_list, write_facet_list};
use dissect_core::simplicial::{
    find_vertex_decomposition, shelling_from_decomposition, verify_vertex_decomposition, AbstractComplex,
    SearchOptions, SearchOutcome,
};
use dissect_core::{Chord, ComplexParams, Label};

fn complex_strategy(max_vertex: u32, max_facets: usize) -> impl Strategy<Value = AbstractComplex> {
    prop::collection::vec(prop::collection::btree_set(0..max_vertex, 0..5), 1..max_facets)
        .prop_map(|faces| AbstractComplex::from_faces(faces.into_iter().map(|s| s.into_iter().collect::<Vec<_>>())))
}

fn shift(v: &[u64]) -> Vec<u64> {
    let mut out = vec![0];
    out.extend_from_slice(v);
    out
}

fn add(a: &[u64], b: &[u64]) -> Vec<u64> {
    (0..a.len().max(b.len())).map(|i| a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)).collect()
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

proptest! {
    #[test]
    fn f_h_round_trip(f in prop::collection::vec(-1000i64..1000, 1..9)) {
        let f = FVector::new(f.into_iter().map(BigInt::from).collect());
        prop_assert_eq!(f_from_h(&h_from_f(&f)), f);
    }

    #[test]
    fn macaulay_representation_sums(a in 1u64..5000, k in 1u64..7) {
        let rep = macaulay_representation(&BigUint::from(a), k);
        let total: BigUint = rep.iter().map(|(top, j)| binomial(top.try_into().unwrap(), *j)).sum();
        prop_assert_eq!(total, BigUint::from(a));
        for w in rep.windows(2) {
            prop_assert!(w[0].0 > w[1].0);
            prop_assert_eq!(w[0].1, w[1].1 + 1);
        }
        let (last, j) = rep.last().unwrap();
        prop_assert!(*last >= BigUint::from(*j) && *j >= 1);
        prop_assert_eq!(rep[0].1, k);
    }

    #[test]
    fn crossing_is_symmetric(size in 5u32..16, pts in prop::array::uniform4(0u32..16)) {
        let p = ComplexParams::a(1, size - 2).unwrap();
        let l = |x: u32| Label::new(x % size, &p).unwrap();
        if let (Ok(c1), Ok(c2)) = (Chord::new(l(pts[0]), l(pts[1]), size), Chord::new(l(pts[2]), l(pts[3]), size)) {
            prop_assert_eq!(chords_cross(&c1, &c2), chords_cross(&c2, &c1));
            prop_assert!(!chords_cross(&c1, &c1));
            let shared = c1.endpoints().iter().any(|&v| c2.has_endpoint(v));
            if shared {
                prop_assert!(!chords_cross(&c1, &c2));
            }
        }
    }

    #[test]
    fn mirror_is_an_involution_preserving_crossings(m in 1u32..4, n in 1u32..4, pts in prop::array::uniform4(0u32..64)) {
        let p = ComplexParams::b(m, n).unwrap();
        let size = p.polygon_size();
        let l = |x: u32| Label::new(x % size, &p).unwrap();
        for x in pts {
            prop_assert_eq!(l(x).mirror(&p).mirror(&p), l(x));
            prop_assert_eq!(l(x).mirror(&p).signed(&p), -l(x).signed(&p));
        }
        if let (Ok(c1), Ok(c2)) = (Chord::new(l(pts[0]), l(pts[1]), size), Chord::new(l(pts[2]), l(pts[3]), size)) {
            prop_assert_eq!(c1.mirror(&p).mirror(&p), c1);
            prop_assert_eq!(chords_cross(&c1, &c2), chords_cross(&c1.mirror(&p), &c2.mirror(&p)));
        }
    }

    #[test]
    fn deletions_commute(c in complex_strategy(8, 8), v in 0u32..8, w in 0u32..8) {
        prop_assert_eq!(c.deletion(&[v]).deletion(&[w]), c.deletion(&[w]).deletion(&[v]));
        prop_assert_eq!(c.deletion(&[v, w]), c.deletion(&[v]).deletion(&[w]));
    }

    #[test]
    fn deletion_and_link_commute(c in complex_strategy(8, 8), v in 0u32..8, w in 0u32..8) {
        prop_assume!(v != w && c.contains_face(&[w]));
        let del_then_link = c.deletion(&[v]).link(&[w]).unwrap();
        let link_then_del = c.link(&[w]).unwrap().deletion(&[v]);
        prop_assert_eq!(del_then_link, link_then_del);
    }

    #[test]
    fn links_compose(c in complex_strategy(8, 8), pick in any::<prop::sample::Index>()) {
        let big: Vec<&Vec<u32>> = c.facets().iter().filter(|f| f.len() >= 2).collect();
        prop_assume!(!big.is_empty());
        let f = big[pick.index(big.len())];
        let (v, w) = (f[0], f[f.len() - 1]);
        prop_assert_eq!(c.link(&[v]).unwrap().link(&[w]).unwrap(), c.link(&[v, w]).unwrap());
    }

    #[test]
    fn f_vector_splits_at_a_vertex(c in complex_strategy(8, 8), v in 0u32..8) {
        prop_assume!(c.contains_face(&[v]));
        let del = c.deletion(&[v]).f_vector();
        let lk = c.link(&[v]).unwrap().f_vector();
        prop_assert_eq!(trim(c.f_vector()), trim(add(&del, &shift(&lk))));
    }

    #[test]
    fn join_multiplies_face_polynomials(a in complex_strategy(5, 4), b in complex_strategy(5, 4)) {
        let b = b.relabel(&(10..15).collect::<Vec<_>>());
        let j = a.join(&b).unwrap();
        let (fa, fb) = (a.f_vector(), b.f_vector());
        let mut conv = vec![0u64; fa.len() + fb.len() - 1];
        for (i, x) in fa.iter().enumerate() {
            for (k, y) in fb.iter().enumerate() {
                conv[i + k] += x * y;
            }
        }
        prop_assert_eq!(j.f_vector(), conv);
    }

    #[test]
    fn euler_poincare(c in complex_strategy(9, 10)) {
        let betti = reduced_betti(&c, 1 << 20).unwrap();
        let f = c.f_vector();
        let chi: i128 = f.iter().enumerate().map(|(k, &x)| if k % 2 == 0 { -(x as i128) } else { x as i128 }).sum();
        prop_assert_eq!(betti.euler_characteristic(), chi);
    }

    #[test]
    fn boundaries_compose_to_zero(c in complex_strategy(8, 8)) {
        let dim = c.dimension().unwrap();
        for k in 1..=dim.max(0) as usize {
            let hi = boundary_matrix(&c, k).unwrap();
            let lo = boundary_matrix(&c, k - 1).unwrap();
            prop_assert!(lo.composes_to_zero(&hi));
        }
    }

    #[test]
    fn cones_are_acyclic(c in complex_strategy(7, 6)) {
        let cone = c.cone(100).unwrap();
        let betti = reduced_betti(&cone, 1 << 20).unwrap();
        prop_assert!(betti.from_minus_one().iter().all(|&b| b == 0));
    }

    #[test]
    fn decompositions_verify_and_shell(c in complex_strategy(7, 7)) {
        match find_vertex_decomposition(&c, &SearchOptions::default()).unwrap() {
            SearchOutcome::Found(cert) => {
                prop_assert!(verify_vertex_decomposition(&c, &cert));
                let order = shelling_from_decomposition(&c, &cert).unwrap();
                let h = h_from_f(&FVector::from_u64(&c.f_vector()));
                let hist: Vec<BigInt> = order.restriction_histogram().into_iter().map(BigInt::from).collect();
                prop_assert_eq!(hist.as_slice(), h.entries());
            }
            SearchOutcome::Impure(_) => prop_assert!(!c.is_pure()),
            SearchOutcome::NotDecomposable => prop_assert!(c.is_pure()),
        }
    }

    #[test]
    fn facet_list_round_trip(c in complex_strategy(9, 8)) {
        let text = write_facet_list(&c, |v| format!("v{v}"));
        let parsed = parse_facet_list(&text).unwrap();
        let back = parsed.complex.relabel(
            &parsed.names.iter().map(|s| s[1..].parse::<u32>().unwrap()).collect::<Vec<_>>(),
        );
        prop_assert_eq!(back, c);
    }

    #[test]
    fn bijection_round_trips_from_images(m in 1u32..4, n in 1u32..5, seed in any::<u64>()) {
        let images: Vec<BijectionImage> = (0..=n as usize).flat_map(|i| BijectionImage::all(m, n, i)).collect();
        let img = &images[(seed % images.len() as u64) as usize];
        let face = decode(img, m, n).unwrap();
        prop_assert_eq!(face.len(), img.labels().len());
        prop_assert_eq!(&encode(&face).unwrap(), img);
        prop_assert_eq!(face.diameter_count() == 1, img.flags()[n as usize - 1]);
    }
}

#[test]
fn bijection_round_trips_from_faces() {
    for (m, n) in [(1, 3), (2, 3), (3, 2), (2, 4)] {
        let p = ComplexParams::b(m, n).unwrap();
        let cx = DissectionComplex::new(p);
        let table = cx.enumerate_faces(None).unwrap();
        for k in 0..=table.max_cardinality() {
            for idx in table.faces(k) {
                let face = cx.face(idx);
                assert_eq!(decode(&encode(&face).unwrap(), m, n).unwrap(), face);
            }
        }
    }
}

#[test]
fn sphere_and_point_homology() {
    for d in 1..6u32 {
        let boundary =
            AbstractComplex::from_faces((0..=d).map(|skip| (0..=d).filter(|&x| x != skip).collect::<Vec<_>>()));
        let betti = reduced_betti(&boundary, 1 << 20).unwrap();
        let expected: Vec<u64> = (0..=d).map(|k| u64::from(k == d)).collect();
        assert_eq!(betti.from_minus_one(), expected.as_slice());
    }
    let points = AbstractComplex::from_faces((0..4u32).map(|v| vec![v]));
    assert_eq!(reduced_betti(&points, 100).unwrap().from_minus_one(), &[0, 3]);
    assert_eq!(reduced_betti(&AbstractComplex::empty_face(), 100).unwrap().from_minus_one(), &[1]);
    assert!(reduced_betti(&AbstractComplex::void(), 100).unwrap().from_minus_one().is_empty());
}
