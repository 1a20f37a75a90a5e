//! Invariant suites run by `dissect verify`.

use std::collections::HashSet;

use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use dissect_core::bijection::{decode, encode, BijectionImage};
use dissect_core::complex::{facet_regions_ok, DissectionComplex, FaceTable};
use dissect_core::counts::{closed_form_f, h_from_f, narayana_vector, FVector};
use dissect_core::{ComplexParams, Family};

use crate::commands::{faces_with_diameter, homology, shelling, Limits, Subject};
use crate::document::FaceDocument;
use crate::report::{bigs, ReportDocument, Status};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Counts,
    Bijection,
    Purity,
    Shelling,
    Homology,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Counts => "counts",
            Suite::Bijection => "bijection",
            Suite::Purity => "purity",
            Suite::Shelling => "shelling",
            Suite::Homology => "homology",
            Suite::All => "all",
        }
    }
}

struct Outcome {
    pass: bool,
    details: Map<String, Value>,
    counterexample: Option<Value>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, details: Map::new(), counterexample: None }
    }

    fn check(&mut self, ok: bool, counterexample: impl FnOnce() -> Option<Value>) {
        if !ok {
            self.pass = false;
            if self.counterexample.is_none() {
                self.counterexample = counterexample();
            }
        }
    }
}

fn doc_value(cx: &DissectionComplex, f: &[u32]) -> Option<Value> {
    Some(serde_json::to_value(FaceDocument::from_face(&cx.face(f))).expect("serializable"))
}

fn first_face(cx: &DissectionComplex, table: &FaceTable, k: usize) -> Option<Value> {
    table.faces(k).next().and_then(|f| doc_value(cx, f))
}

fn counts(p: &ComplexParams, cx: &DissectionComplex, table: &FaceTable) -> Result<Outcome, CliError> {
    let mut out = Outcome::new();
    let expected = closed_form_f(p)?;
    let enumerated = FVector::from_u64(table.counts());
    out.details.insert("enumerated_f".into(), bigs(enumerated.entries()));
    out.details.insert("closed_form_f".into(), bigs(expected.entries()));
    let len_ok = enumerated.entries().len() == expected.entries().len();
    out.check(len_ok, || None);
    for (k, (a, b)) in enumerated.entries().iter().zip(expected.entries()).enumerate() {
        out.check(a == b, || first_face(cx, table, k));
    }
    let h = h_from_f(&enumerated);
    let nara = narayana_vector(p)?;
    out.details.insert("h_vector".into(), bigs(h.entries()));
    out.check(h.entries() == nara.entries(), || None);
    if p.family() == Family::B {
        let mut with = Vec::new();
        for i in 0..=table.max_cardinality() {
            let have = table.faces(i).filter(|f| cx.face(f).diameter_count() == 1).count();
            let want = faces_with_diameter(p, i as u32)?;
            out.check(BigUint::from(have) == want, || first_face(cx, table, i));
            with.push(have);
        }
        out.details.insert("faces_with_diameter".into(), bigs(with));
    }
    Ok(out)
}

fn bijection(p: &ComplexParams, cx: &DissectionComplex, table: &FaceTable) -> Result<Outcome, CliError> {
    let mut out = Outcome::new();
    if p.family() != Family::B {
        out.details.insert("applicable".into(), false.into());
        return Ok(out);
    }
    let mut distinct = Vec::new();
    for i in 0..=table.max_cardinality() {
        let mut images = HashSet::new();
        for f in table.faces(i) {
            let face = cx.face(f);
            let img = encode(&face)?;
            let back = decode(&img, p.m(), p.n());
            let flag_ok = *img.flags().last().expect("n >= 1") == (face.diameter_count() == 1);
            out.check(back.as_ref() == Ok(&face) && flag_ok, || doc_value(cx, f));
            images.insert(img);
        }
        out.check(images.len() as u64 == table.count(i), || first_face(cx, table, i));
        for img in BijectionImage::all(p.m(), p.n(), i) {
            let ok = decode(&img, p.m(), p.n()).and_then(|f| encode(&f)).as_ref() == Ok(&img);
            out.check(ok, || decode(&img, p.m(), p.n()).ok().map(|f| json!(FaceDocument::from_face(&f))));
        }
        distinct.push(images.len());
    }
    out.details.insert("distinct_images".into(), bigs(distinct));
    Ok(out)
}

fn purity(cx: &DissectionComplex, table: &FaceTable) -> Result<Outcome, CliError> {
    let mut out = Outcome::new();
    let report = cx.check_pure()?;
    out.details.insert("pure".into(), report.pure.into());
    out.check(report.pure, || report.witness.as_ref().map(|f| json!(FaceDocument::from_face(f))));
    let d = cx.params().facet_size();
    let mut regions_ok = true;
    for f in table.faces(d) {
        let ok = facet_regions_ok(&cx.face(f));
        regions_ok &= ok;
        out.check(ok, || doc_value(cx, f));
    }
    out.details.insert("facet_regions_ok".into(), regions_ok.into());
    Ok(out)
}

fn from_report(r: ReportDocument) -> Outcome {
    Outcome { pass: r.status == Status::Pass, details: r.results, counterexample: r.counterexample }
}

pub fn verify(p: &ComplexParams, suite: Suite, limits: &Limits) -> Result<ReportDocument, CliError> {
    let mut r = ReportDocument::new("verify", Some(p));
    r.set("suite", suite.name());
    let wanted = |s: Suite| suite == s || suite == Suite::All;
    let needs_table = wanted(Suite::Counts) || wanted(Suite::Bijection) || wanted(Suite::Purity);
    let cx = DissectionComplex::new(*p).with_face_limit(limits.faces);
    let table = if needs_table { Some(cx.enumerate_faces(None)?) } else { None };

    let mut outcomes: Vec<(Suite, Outcome)> = Vec::new();
    if let Some(table) = &table {
        if wanted(Suite::Counts) {
            outcomes.push((Suite::Counts, counts(p, &cx, table)?));
        }
        if wanted(Suite::Bijection) {
            outcomes.push((Suite::Bijection, bijection(p, &cx, table)?));
        }
        if wanted(Suite::Purity) {
            outcomes.push((Suite::Purity, purity(&cx, table)?));
        }
    }
    if wanted(Suite::Shelling) {
        outcomes.push((Suite::Shelling, from_report(shelling(Subject::Dissection(*p), false, limits)?)));
    }
    if wanted(Suite::Homology) {
        outcomes.push((Suite::Homology, from_report(homology(Subject::Dissection(*p), limits)?)));
    }

    let mut suites = Map::new();
    for (s, o) in outcomes {
        let mut entry = Map::new();
        entry.insert("status".into(), (if o.pass { "pass" } else { "fail" }).into());
        entry.extend(o.details);
        suites.insert(s.name().into(), Value::Object(entry));
        if !o.pass {
            r.fail(o.counterexample);
        }
    }
    r.set("suites", Value::Object(suites));
    Ok(r)
}
