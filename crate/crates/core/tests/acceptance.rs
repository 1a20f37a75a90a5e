//! Acceptance criteria, one PASS/FAIL line each. Pass `--report` for the
//! full per-instance reports.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use dissect_core::bijection::{decode, encode, BijectionImage};
use dissect_core::complex::{DissectionComplex, DEFAULT_FACE_LIMIT};
use dissect_core::counts::{
    closed_form_f, diameter_count, face_count, h_from_f, is_m_sequence, narayana, narayana_vector, reduced_euler,
};
use dissect_core::dissection::{betti, certify};
use dissect_core::ComplexParams;

const MEMO_LIMIT: usize = 2_000_000;

fn range_a() -> Vec<ComplexParams> {
    (1..=3).flat_map(|m| (1..=5).map(move |n| ComplexParams::a(m, n).unwrap())).collect()
}

fn range_b() -> Vec<ComplexParams> {
    (1..=3).flat_map(|m| (1..=4).map(move |n| ComplexParams::b(m, n).unwrap())).collect()
}

fn range_ab() -> Vec<ComplexParams> {
    range_a().into_iter().chain(range_b()).collect()
}

/// Criterion 1/2 body: enumerated f-vectors against the closed forms.
fn counting_report(params: &[ComplexParams]) -> (bool, String) {
    let mut ok = true;
    let mut report = String::new();
    for p in params {
        let cx = DissectionComplex::new(*p);
        let f = cx.f_vector().unwrap();
        let closed = closed_form_f(p).unwrap();
        ok &= f == closed;
        let _ = writeln!(report, "{p}: enumerated {f} closed {closed}");
    }
    (ok, report)
}

fn criterion_1() -> (bool, String) {
    counting_report(&range_a())
}

fn criterion_2() -> (bool, String) {
    counting_report(&range_b())
}

fn criterion_3() -> (bool, String) {
    let mut ok = true;
    let mut report = String::new();
    for p in range_ab() {
        let h = h_from_f(&closed_form_f(&p).unwrap());
        let nar = narayana_vector(&p).unwrap();
        ok &= h == nar;
        let _ = writeln!(report, "{p}: h {h} narayana {nar}");
    }
    (ok, report)
}

fn criterion_4() -> (bool, String) {
    let mut ok = true;
    let mut report = String::new();
    for p in range_b() {
        let cx = DissectionComplex::new(p);
        let table = cx.enumerate_faces(None).unwrap();
        for i in 0..=p.n() as usize {
            let mut images = HashSet::new();
            let mut round_trips = true;
            for f in table.faces(i) {
                let face = cx.face(f);
                let img = encode(&face).unwrap();
                round_trips &= decode(&img, p.m(), p.n()).as_ref() == Ok(&face);
                images.insert(img);
            }
            let mut inverse = true;
            let all = BijectionImage::all(p.m(), p.n(), i);
            for img in &all {
                inverse &= decode(img, p.m(), p.n()).and_then(|f| encode(&f)).as_ref() == Ok(img);
            }
            let expected = face_count(&p, i as u32).unwrap();
            let counts_ok = BigUint::from(images.len()) == expected
                && BigUint::from(all.len()) == expected
                && table.count(i) == images.len() as u64;
            ok &= round_trips && inverse && counts_ok;
            let _ = writeln!(
                report,
                "{p} i={i}: faces {} distinct images {} expected {expected} decode∘encode {round_trips} encode∘decode {inverse}",
                table.count(i),
                images.len()
            );
        }
    }
    let img = BijectionImage::new(vec![6, 11, 11, 12], vec![true, true, false, true, false, true]).unwrap();
    let face = decode(&img, 2, 6).unwrap();
    let example_ok = face.len() == 4 && encode(&face).unwrap() == img;
    ok &= example_ok;
    let _ = writeln!(report, "worked example {img} -> {face} re-encodes: {example_ok}");
    (ok, report)
}

fn criterion_5() -> (bool, String) {
    let mut ok = true;
    let mut report = String::new();
    for p in range_b() {
        let cx = DissectionComplex::new(p);
        let table = cx.enumerate_faces(None).unwrap();
        for i in 1..=p.n() {
            let mut by_audit = 0u64;
            let mut by_flag = 0u64;
            let mut agree = true;
            for f in table.faces(i as usize) {
                let face = cx.face(f);
                let has = face.diameter_count() == 1;
                let flag = *encode(&face).unwrap().flags().last().unwrap();
                by_audit += has as u64;
                by_flag += flag as u64;
                agree &= has == flag;
            }
            let expected = diameter_count(p.m(), p.n(), i).unwrap();
            let good = agree && BigUint::from(by_audit) == expected && BigUint::from(by_flag) == expected;
            ok &= good;
            let _ = writeln!(report, "{p} i={i}: audit {by_audit} flag {by_flag} expected {expected}");
        }
    }
    (ok, report)
}

fn criterion_6() -> (bool, String) {
    let mut ok = true;
    let mut report = String::new();
    for p in range_ab() {
        let line = match certify(&p, DEFAULT_FACE_LIMIT, MEMO_LIMIT).unwrap() {
            Ok(c) => {
                let nar = narayana_vector(&p).unwrap();
                match &c.shelling {
                    Ok(s) => {
                        let hist: Vec<BigInt> = s.restriction_histogram().into_iter().map(BigInt::from).collect();
                        let good = c.certificate_verified && hist == nar.entries();
                        ok &= good;
                        format!(
                            "{p}: certificate nodes {} verified {} shelling of {} facets, restriction histogram {:?} narayana {nar}",
                            c.certificate.size(),
                            c.certificate_verified,
                            s.facets().len(),
                            s.restriction_histogram()
                        )
                    }
                    Err(e) => {
                        ok = false;
                        format!("{p}: derived shelling rejected at {e}")
                    }
                }
            }
            Err(e) => {
                ok = false;
                format!("{p}: no decomposition ({e:?})")
            }
        };
        let _ = writeln!(report, "{line}");
    }
    (ok, report)
}

fn criterion_7() -> (bool, String) {
    let params: Vec<ComplexParams> = (1..=2)
        .flat_map(|m| (1..=4).map(move |n| ComplexParams::a(m, n).unwrap()))
        .chain((1..=2).flat_map(|m| (1..=3).map(move |n| ComplexParams::b(m, n).unwrap())))
        .collect();
    let mut ok = true;
    let mut report = String::new();
    for p in params {
        let b = betti(&p, DEFAULT_FACE_LIMIT).unwrap();
        let r = p.rank() as usize;
        let top = narayana(&p, p.rank()).unwrap();
        // Degrees -1..=r-1: zeros, then N(r) in degree r-1.
        let mut expected = vec![0u64; r + 1];
        expected[r] = u64::try_from(top).unwrap();
        let good = b.from_minus_one() == expected.as_slice();
        ok &= good;
        let _ = writeln!(report, "{p}: reduced betti (from degree -1) {:?} expected {expected:?}", b.from_minus_one());
    }
    (ok, report)
}

fn criterion_8() -> (bool, String) {
    let mut ok = true;
    let mut report = String::new();
    for p in range_ab() {
        let chi = reduced_euler(&closed_form_f(&p).unwrap());
        let top = BigInt::from(narayana(&p, p.rank()).unwrap());
        let expected = if (p.rank() as i64 - 1).rem_euclid(2) == 0 { top } else { -top };
        ok &= chi == expected;
        let _ = writeln!(report, "{p}: reduced euler {chi} expected {expected}");
    }
    (ok, report)
}

fn criterion_9() -> (bool, String) {
    let mut ok = true;
    let mut report = String::new();
    for m in 1..=5 {
        for n in 1..=12 {
            for p in [ComplexParams::a(m, n).unwrap(), ComplexParams::b(m, n).unwrap()] {
                let h = narayana_vector(&p).unwrap();
                let good = is_m_sequence(h.entries());
                ok &= good;
                if !good {
                    let _ = writeln!(report, "{p}: {h} rejected");
                }
            }
        }
    }
    let mutant: Vec<BigInt> = vec![BigInt::one(), BigInt::from(2), BigInt::from(4)];
    let rejected = !is_m_sequence(&mutant);
    ok &= rejected;
    let _ = writeln!(report, "120 narayana vectors accepted: {ok}; (1, 2, 4) rejected: {rejected}");
    (ok, report)
}

type Body = fn() -> (bool, String);

/// Runs a criterion body, turning a panic into a failure with its message.
fn guarded(body: impl FnOnce() -> (bool, String)) -> (bool, String) {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(body)) {
        Ok(r) => r,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            (false, format!("panicked: {msg}"))
        }
    }
}

/// Prints the verdict line; a criterion passes only within its budget.
fn verdict(id: u32, title: &str, budget_secs: u64, run: impl FnOnce() -> (bool, String)) -> bool {
    let start = Instant::now();
    let (ok, report) = guarded(run);
    let elapsed = start.elapsed();
    let within = elapsed <= Duration::from_secs(budget_secs);
    let pass = ok && within;
    let detail = if !ok {
        format!(" -- {}", report.lines().last().unwrap_or(""))
    } else if !within {
        " -- over budget".to_string()
    } else {
        String::new()
    };
    println!(
        "[{}] criterion {id}: {title} ({:.2}s, budget {budget_secs}s){detail}",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    if !ok {
        eprintln!("{report}");
    }
    pass
}

fn determinism() -> (bool, String) {
    let bodies: [(u32, Body); 7] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
    ];
    let mut differing = Vec::new();
    for (id, body) in bodies {
        if body().1 != body().1 {
            differing.push(id);
        }
    }
    let report = if differing.is_empty() { String::new() } else { format!("reports differ for {differing:?}") };
    (differing.is_empty(), report)
}

fn main() {
    let criteria: [(u32, &str, u64, Body); 10] = [
        (1, "type A enumerated face counts equal the closed form", 10, criterion_1),
        (2, "type B enumerated face counts equal the closed form", 30, criterion_2),
        (3, "h-vector of the closed-form f equals the Narayana numbers", 10, criterion_3),
        (4, "bijection round trips and image counts", 60, criterion_4),
        (5, "faces with a diameter: audit, last flag and formula agree", 60, criterion_5),
        (6, "vertex decomposition found, verified, shelling histogram = Narayana", 300, criterion_6),
        (7, "reduced Betti numbers are (0, ..., 0, N(r))", 120, criterion_7),
        (8, "reduced Euler characteristic equals (-1)^(r-1) N(r)", 10, criterion_8),
        (9, "Narayana vectors are M-sequences; (1, 2, 4) is not", 1, criterion_9),
        (10, "repeated runs of criteria 1-7 give identical reports", 1200, determinism),
    ];
    // `cargo test -- <filter>` style arguments are accepted but ignored.
    let verbose = std::env::args().any(|a| a == "--report");
    let mut failed = Vec::new();
    for (id, title, budget, body) in criteria {
        if verbose {
            println!("{}", body().1);
        }
        if !verdict(id, title, budget, body) {
            failed.push(id);
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed.len(), criteria.len());
    if !failed.is_empty() {
        println!("failed: {failed:?}");
        std::process::exit(1);
    }
}
