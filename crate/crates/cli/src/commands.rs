use std::collections::BTreeSet;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use dissect_core::bijection::{decode, encode, BijectionImage};
use dissect_core::complex::DissectionComplex;
use dissect_core::counts::{
    closed_form_f, diameter_count, fuss_catalan, h_from_f, is_m_sequence, narayana, narayana_vector, reduced_euler,
    FVector,
};
use dissect_core::dissection::{decomposition_priority, to_abstract};
use dissect_core::homology::reduced_betti;
use dissect_core::simplicial::io::{parse_facet_list, write_facet_list};
use dissect_core::simplicial::{
    find_vertex_decomposition, shelling_from_decomposition, verify_vertex_decomposition, AbstractComplex,
    SearchOptions, SearchOutcome,
};
use dissect_core::{ComplexParams, Face, Family};

use crate::document::{pair, parse_documents, FaceDocument};
use crate::report::{big, bigs, ReportDocument};
use crate::CliError;

pub struct Limits {
    pub faces: u64,
    pub memo: usize,
}

fn face_json(face: &Face) -> Value {
    let p = face.params();
    Value::Array(face.diagonals().iter().map(|d| json!(pair(d, p))).collect())
}

fn image_json(img: &BijectionImage) -> Value {
    json!({ "a": img.labels(), "eps": img.flags_as_bits() })
}

pub fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// Faces with `i` diagonals containing a diameter; none for the empty face.
pub fn faces_with_diameter(p: &ComplexParams, i: u32) -> Result<BigUint, CliError> {
    if i == 0 {
        return Ok(BigUint::from(0u32));
    }
    Ok(diameter_count(p.m(), p.n(), i)?)
}

pub fn count(p: &ComplexParams) -> Result<ReportDocument, CliError> {
    let mut r = ReportDocument::new("count", Some(p));
    let f = closed_form_f(p)?;
    let h = h_from_f(&f);
    let nara = narayana_vector(p)?;
    let chi = reduced_euler(&f);
    let top = BigInt::from(narayana(p, p.rank())?);
    let expected_chi = if p.rank() % 2 == 1 { top } else { -top };
    let m_seq = is_m_sequence(nara.entries());
    r.set("f_vector", bigs(f.entries()));
    r.set("h_vector", bigs(h.entries()));
    r.set("narayana", bigs(nara.entries()));
    r.set("facets", big(fuss_catalan(p)?));
    r.set("reduced_euler_characteristic", big(&chi));
    if p.family() == Family::B {
        let d: Vec<_> = (0..=p.n()).map(|i| faces_with_diameter(p, i)).collect::<Result<_, _>>()?;
        r.set("faces_with_diameter", bigs(d));
    }
    r.set("m_sequence", m_seq);
    if h.entries() != nara.entries() || chi != expected_chi || !m_seq {
        r.fail(None);
    }
    Ok(r)
}

pub fn enumerate(
    p: &ComplexParams,
    up_to: Option<usize>,
    list: bool,
    limits: &Limits,
) -> Result<ReportDocument, CliError> {
    let mut r = ReportDocument::new("enumerate", Some(p));
    let cx = DissectionComplex::new(*p).with_face_limit(limits.faces);
    let table = cx.enumerate_faces(up_to)?;
    r.set("counts", bigs(table.counts()));
    r.set("total", table.total());
    if list {
        let faces: Vec<Value> = (0..=table.max_cardinality())
            .flat_map(|k| table.faces(k).map(|f| face_json(&cx.face(f))).collect::<Vec<_>>())
            .collect();
        r.set("faces", faces);
    }
    Ok(r)
}

pub fn facets(p: &ComplexParams, export: Option<&Path>, limits: &Limits) -> Result<ReportDocument, CliError> {
    let mut r = ReportDocument::new("facets", Some(p));
    let cx = DissectionComplex::new(*p).with_face_limit(limits.faces);
    let facets = cx.facets()?;
    r.set("count", facets.len());
    r.set("facets", facets.iter().map(face_json).collect::<Vec<_>>());
    if let Some(path) = export {
        let complex = to_abstract(&cx)?;
        let text = write_facet_list(&complex, |v| cx.vertices()[v as usize].describe(p));
        crate::report::emit(&text, Some(path))
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        r.set("exported", path.display().to_string());
    }
    Ok(r)
}

pub fn encode_faces(docs: &[FaceDocument]) -> Result<ReportDocument, CliError> {
    let params = docs.first().map(FaceDocument::params).transpose()?;
    let mut r = ReportDocument::new("encode", params.as_ref());
    let mut images = Vec::new();
    let mut distinct = BTreeSet::new();
    for doc in docs {
        let face = doc.to_face()?;
        let img = encode(&face)?;
        let back = decode(&img, face.params().m(), face.params().n())?;
        if back != face {
            r.fail_with_face(doc.clone());
        }
        let mut entry = image_json(&img);
        entry["face"] = face_json(&face);
        images.push(entry);
        distinct.insert(img);
    }
    r.set("images", images);
    r.set("distinct", distinct.len());
    Ok(r)
}

pub fn encode_facets(p: &ComplexParams, limits: &Limits) -> Result<ReportDocument, CliError> {
    let cx = DissectionComplex::new(*p).with_face_limit(limits.faces);
    let docs: Vec<FaceDocument> = cx.facets()?.iter().map(FaceDocument::from_face).collect();
    encode_faces(&docs)
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| CliError::Usage(format!("bad {what} entry {s:?}"))))
        .collect()
}

pub fn decode_image(a: &str, eps: &str, m: u32, n: u32) -> Result<ReportDocument, CliError> {
    let p = ComplexParams::b(m, n)?;
    let labels: Vec<u32> = parse_list(a, "label")?;
    let flags: Vec<u8> = parse_list(eps, "flag")?;
    if let Some(bad) = flags.iter().find(|&&e| e > 1) {
        return Err(CliError::Usage(format!("flags must be 0 or 1, got {bad}")));
    }
    let img = BijectionImage::new(labels, flags.iter().map(|&e| e == 1).collect())?;
    let face = decode(&img, m, n)?;
    let again = encode(&face)?;
    let mut r = ReportDocument::new("decode", Some(&p));
    r.set("face", serde_json::to_value(FaceDocument::from_face(&face)).expect("serializable"));
    r.set("chords_drawn", crate::render::chord_count(&face));
    r.set("reencoded", image_json(&again));
    r.set("round_trip", again == img);
    if again != img {
        r.fail_with_face(FaceDocument::from_face(&face));
    }
    Ok(r)
}

/// A complex to certify: either Δ^m_W or an imported facet list.
pub enum Subject {
    Dissection(ComplexParams),
    Imported { names: Vec<String>, complex: AbstractComplex },
}

impl Subject {
    pub fn load(params: Option<ComplexParams>, input: Option<&Path>) -> Result<Self, CliError> {
        match (params, input) {
            (_, Some(path)) => {
                let parsed = parse_facet_list(&read(path)?)?;
                Ok(Subject::Imported { names: parsed.names, complex: parsed.complex })
            }
            (Some(p), None) => Ok(Subject::Dissection(p)),
            (None, None) => Err(CliError::Usage("give --family/--m/--n or --input".into())),
        }
    }
}

struct Prepared {
    params: Option<ComplexParams>,
    complex: AbstractComplex,
    names: Vec<String>,
    cx: Option<DissectionComplex>,
    priority: Vec<u32>,
}

fn prepare(subject: Subject, limits: &Limits) -> Result<Prepared, CliError> {
    Ok(match subject {
        Subject::Dissection(p) => {
            let cx = DissectionComplex::new(p).with_face_limit(limits.faces);
            let complex = to_abstract(&cx)?;
            let names = cx.vertices().iter().map(|d| d.describe(&p)).collect();
            let priority = decomposition_priority(&cx);
            Prepared { params: Some(p), complex, names, cx: Some(cx), priority }
        }
        Subject::Imported { names, complex } => Prepared { params: None, complex, names, cx: None, priority: vec![] },
    })
}

impl Prepared {
    fn name_all(&self, f: &[u32]) -> Vec<String> {
        f.iter().map(|&v| self.names[v as usize].clone()).collect()
    }

    /// A facet of Δ^m_W as a FaceDocument, or the vertex names otherwise.
    fn witness(&self, f: &[u32]) -> Value {
        match &self.cx {
            Some(cx) => serde_json::to_value(FaceDocument::from_face(&cx.face(f))).expect("serializable"),
            None => json!(self.name_all(f)),
        }
    }
}

pub fn shelling(subject: Subject, show_order: bool, limits: &Limits) -> Result<ReportDocument, CliError> {
    let prep = prepare(subject, limits)?;
    let mut r = ReportDocument::new("shelling", prep.params.as_ref());
    let options = SearchOptions { priority: prep.priority.clone(), memo_limit: limits.memo };
    let cert = match find_vertex_decomposition(&prep.complex, &options)? {
        SearchOutcome::Found(cert) => cert,
        SearchOutcome::Impure(w) => {
            r.set("vertex_decomposable", false);
            r.set("reason", "not pure");
            let witness = prep.witness(&w);
            r.fail(Some(witness));
            return Ok(r);
        }
        SearchOutcome::NotDecomposable => {
            r.set("vertex_decomposable", false);
            r.set("reason", "no shedding vertex sequence exists");
            r.fail(None);
            return Ok(r);
        }
    };
    let verified = verify_vertex_decomposition(&prep.complex, &cert);
    r.set("vertex_decomposable", true);
    r.set("certificate_verified", verified);
    r.set("certificate_nodes", cert.size());
    r.set("shedding_sequence", prep.name_all(&cert.shedding_sequence(&prep.complex)));
    if !verified {
        r.fail(None);
    }
    match shelling_from_decomposition(&prep.complex, &cert) {
        Ok(order) => {
            let hist = order.restriction_histogram();
            r.set("shelling_verified", true);
            r.set("restriction_histogram", bigs(&hist));
            let h = h_from_f(&FVector::from_u64(&prep.complex.f_vector()));
            r.set("h_vector", bigs(h.entries()));
            let mut expected_ok = h.entries().iter().zip(&hist).all(|(a, &b)| *a == BigInt::from(b));
            if let Some(p) = &prep.params {
                let nara = narayana_vector(p)?;
                r.set("narayana", bigs(nara.entries()));
                expected_ok &= nara.entries().iter().zip(&hist).all(|(a, &b)| *a == BigInt::from(b))
                    && nara.entries().len() == hist.len();
            }
            if !expected_ok {
                let first = order.facets().first().map(|f| prep.witness(f));
                r.fail(first);
            }
            if show_order {
                let steps: Vec<Value> = order
                    .facets()
                    .iter()
                    .zip(order.restrictions())
                    .map(|(f, rest)| json!({ "facet": prep.name_all(f), "restriction": prep.name_all(rest) }))
                    .collect();
                r.set("order", steps);
            }
        }
        Err(failure) => {
            r.set("shelling_verified", false);
            r.set("shelling_failure", json!({ "step": failure.step, "reason": failure.reason }));
            r.fail(None);
        }
    }
    Ok(r)
}

pub fn homology(subject: Subject, limits: &Limits) -> Result<ReportDocument, CliError> {
    let prep = prepare(subject, limits)?;
    let mut r = ReportDocument::new("homology", prep.params.as_ref());
    let betti = reduced_betti(&prep.complex, limits.faces)?;
    r.set("reduced_betti", bigs(betti.nonnegative()));
    r.set("reduced_betti_from_degree_minus_one", bigs(betti.from_minus_one()));
    r.set("reduced_euler_characteristic", big(betti.euler_characteristic()));
    if let Some(p) = &prep.params {
        let rank = p.rank() as usize;
        let top = narayana(p, p.rank())?;
        let mut expected: Vec<Value> = vec![big(0); rank + 1];
        expected[rank] = big(&top);
        r.set("expected", Value::Array(expected.clone()));
        r.set("spheres", json!({ "count": big(&top), "dimension": rank as i64 - 1 }));
        if bigs(betti.from_minus_one()) != Value::Array(expected) {
            r.fail(None);
        }
    }
    Ok(r)
}

pub fn load_documents(path: &Path) -> Result<Vec<FaceDocument>, CliError> {
    Ok(parse_documents(&read(path)?)?)
}
