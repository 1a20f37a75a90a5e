//! The bijection Φ_{m,n} between faces of Δ^m_{B_n} with `i` B-diagonals and
//! pairs (weakly increasing label sequence of length `i`, 0/1 vector of length
//! `n` with `i` ones).
//!
//! Both directions run the same recursion over a shrinking centrally
//! symmetric subpolygon. At each of the `n` stages, the smallest initial
//! point `a` whose next `m` vertices (within the current subpolygon) avoid
//! every initial point and its mirror is located. The stage flag records
//! whether the B-diagonal from `a` to the vertex `m + 1` steps further is in
//! the face; then those `m` vertices and their mirrors are removed. Vertices
//! keep their original labels throughout.

use std::fmt;

use crate::error::{Error, Result};
use crate::params::{ComplexParams, Family};
use crate::polygon::{Chord, Diagonal, Face, Label};

/// Start of the orientation keeping the polygon center on the left,
/// reported by its unbarred representative.
pub fn initial_point(params: &ComplexParams, d: &Diagonal) -> Result<Label> {
    match *d {
        Diagonal::Diameter(p) if p.is_positive(params) => Ok(p),
        Diagonal::Pair { initial, .. } if initial.is_positive(params) => Ok(initial),
        _ => Err(Error::MalformedFace(format!("{} is not a B-diagonal of {params}", d.describe(params)))),
    }
}

/// Image of a face: labels `a_1 <= ... <= a_i` in `1..=mn+1` and flags
/// `eps_1, ..., eps_n` with exactly `i` ones.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BijectionImage {
    a: Vec<u32>,
    eps: Vec<bool>,
}

impl BijectionImage {
    pub fn new(a: Vec<u32>, eps: Vec<bool>) -> Result<Self> {
        if !a.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::InvalidImage(format!("labels {a:?} are not weakly increasing")));
        }
        let ones = eps.iter().filter(|&&e| e).count();
        if ones != a.len() {
            return Err(Error::InvalidImage(format!("{} labels but {ones} flags set", a.len())));
        }
        Ok(BijectionImage { a, eps })
    }

    pub fn labels(&self) -> &[u32] {
        &self.a
    }

    pub fn flags(&self) -> &[bool] {
        &self.eps
    }

    pub fn flags_as_bits(&self) -> Vec<u8> {
        self.eps.iter().map(|&e| e as u8).collect()
    }

    fn check_for(&self, params: &ComplexParams) -> Result<()> {
        if self.eps.len() != params.n() as usize {
            return Err(Error::InvalidImage(format!("expected {} flags, got {}", params.n(), self.eps.len())));
        }
        if let Some(bad) = self.a.iter().find(|&&x| x < 1 || x > params.half()) {
            return Err(Error::InvalidImage(format!("label {bad} outside 1..={}", params.half())));
        }
        Ok(())
    }

    /// Every image for `(m, n)` with `i` labels, in lexicographic order of
    /// (labels, flags).
    pub fn all(m: u32, n: u32, i: usize) -> Vec<BijectionImage> {
        let top = m * n + 1;
        let mut labels = Vec::new();
        multisets(1, top, i, &mut Vec::new(), &mut labels);
        let mut flags = Vec::new();
        subsets(n as usize, i, &mut Vec::new(), &mut flags);
        let mut out = Vec::with_capacity(labels.len() * flags.len());
        for a in &labels {
            for eps in &flags {
                out.push(BijectionImage { a: a.clone(), eps: eps.clone() });
            }
        }
        out
    }
}

fn multisets(from: u32, top: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in from..=top {
        cur.push(x);
        multisets(x, top, k, cur, out);
        cur.pop();
    }
}

fn subsets(n: usize, k: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
    let ones = cur.iter().filter(|&&b| b).count();
    if cur.len() == n {
        if ones == k {
            out.push(cur.clone());
        }
        return;
    }
    let left = n - cur.len();
    for bit in [false, true] {
        let ones = ones + bit as usize;
        if ones <= k && k - ones < left {
            cur.push(bit);
            subsets(n, k, cur, out);
            cur.pop();
        }
    }
}

impl fmt::Display for BijectionImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|x| x.to_string()).collect();
        let e: Vec<String> = self.eps.iter().map(|&x| (x as u8).to_string()).collect();
        write!(f, "(({}), ({}))", a.join(", "), e.join(", "))
    }
}

/// The centrally symmetric subpolygon still in play.
struct SubPolygon {
    active: Vec<bool>,
    params: ComplexParams,
}

impl SubPolygon {
    fn new(params: ComplexParams) -> Self {
        SubPolygon { active: vec![true; params.polygon_size() as usize], params }
    }

    fn is_active(&self, v: Label) -> bool {
        self.active[v.position() as usize]
    }

    /// The vertex `k` steps after `v` along the active vertices.
    fn step(&self, v: Label, k: u32) -> Label {
        let size = self.params.polygon_size();
        let mut cur = v;
        let mut left = k;
        while left > 0 {
            cur = cur.advance(1, size);
            if self.is_active(cur) {
                left -= 1;
            }
        }
        cur
    }

    fn following(&self, v: Label, k: u32) -> Vec<Label> {
        (1..=k).map(|j| self.step(v, j)).collect()
    }

    fn remove_after(&mut self, v: Label, k: u32) {
        for w in self.following(v, k) {
            self.active[w.position() as usize] = false;
            self.active[w.mirror(&self.params).position() as usize] = false;
        }
    }

    /// Smallest entry of `labels` (positions, sorted) whose next `m` active
    /// vertices avoid every label and mirror in `labels`.
    fn eligible(&self, labels: &[Label]) -> Option<Label> {
        let p = &self.params;
        let marked = |v: Label| labels.iter().any(|&a| a == v || a.mirror(p) == v);
        labels.iter().copied().find(|&a| self.following(a, p.m()).into_iter().all(|v| !marked(v)))
    }

    /// The B-diagonal joining `a` to the vertex `m + 1` steps further, if it is
    /// a vertex of the complex.
    fn stage_diagonal(&self, a: Label) -> Option<Diagonal> {
        let p = &self.params;
        let t = self.step(a, p.m() + 1);
        let chord = Chord::new(a, t, p.polygon_size()).ok()?;
        Diagonal::from_chord(p, chord).ok()
    }
}

fn require_b(params: &ComplexParams) -> Result<()> {
    if params.family() != Family::B {
        return Err(Error::InvalidParams(format!("the bijection is defined on family B, got {params}")));
    }
    Ok(())
}

/// Φ_{m,n}: sends a face of Δ^m_{B_n} to its image.
pub fn encode(face: &Face) -> Result<BijectionImage> {
    let params = *face.params();
    require_b(&params)?;
    let mut remaining: Vec<(Label, Diagonal)> =
        face.diagonals().iter().map(|d| initial_point(&params, d).map(|a| (a, *d))).collect::<Result<_>>()?;
    remaining.sort();
    let a: Vec<u32> = remaining.iter().map(|(l, _)| l.position() + 1).collect();

    let mut poly = SubPolygon::new(params);
    let mut eps = Vec::with_capacity(params.n() as usize);
    for _ in 0..params.n() {
        if remaining.is_empty() {
            eps.push(false);
            continue;
        }
        let labels: Vec<Label> = remaining.iter().map(|(l, _)| *l).collect();
        let aj =
            poly.eligible(&labels).ok_or_else(|| Error::MalformedFace(format!("{face}: no eligible initial point")))?;
        let tested = poly.stage_diagonal(aj);
        let hit = tested.and_then(|t| remaining.iter().position(|(_, d)| *d == t));
        match hit {
            Some(idx) => {
                remaining.remove(idx);
                eps.push(true);
            }
            None => eps.push(false),
        }
        poly.remove_after(aj, params.m());
        for (_, d) in &remaining {
            if d.chords(&params).iter().flat_map(|c| c.endpoints()).any(|v| !poly.is_active(v)) {
                return Err(Error::MalformedFace(format!("{face}: {} touches a removed vertex", d.describe(&params))));
            }
        }
    }
    if !remaining.is_empty() {
        return Err(Error::MalformedFace(format!(
            "{face}: {} diagonals left after {} stages",
            remaining.len(),
            params.n()
        )));
    }
    BijectionImage::new(a, eps)
}

/// Φ_{m,n}^{-1}.
pub fn decode(img: &BijectionImage, m: u32, n: u32) -> Result<Face> {
    let params = ComplexParams::b(m, n)?;
    img.check_for(&params)?;
    let mut labels: Vec<Label> = img.a.iter().map(|&x| Label::at(x - 1)).collect();
    let mut poly = SubPolygon::new(params);
    let mut diagonals = Vec::with_capacity(labels.len());
    for (stage, &flag) in img.eps.iter().enumerate() {
        if labels.is_empty() {
            if flag {
                return Err(Error::InvalidImage(format!("{img}: flag {} set with no labels left", stage + 1)));
            }
            continue;
        }
        let aj = poly
            .eligible(&labels)
            .ok_or_else(|| Error::InvalidImage(format!("{img}: no eligible label at stage {}", stage + 1)))?;
        if flag {
            let d = poly.stage_diagonal(aj).ok_or_else(|| {
                Error::InvalidImage(format!(
                    "{img}: stage {} chord from {} is not a B-diagonal",
                    stage + 1,
                    aj.position() + 1
                ))
            })?;
            if initial_point(&params, &d)? != aj {
                return Err(Error::InvalidImage(format!(
                    "{img}: stage {} diagonal {} does not start at {}",
                    stage + 1,
                    d.describe(&params),
                    aj.position() + 1
                )));
            }
            diagonals.push(d);
            let idx = labels.iter().position(|&l| l == aj).expect("eligible label is present");
            labels.remove(idx);
        }
        poly.remove_after(aj, m);
    }
    if !labels.is_empty() {
        return Err(Error::InvalidImage(format!("{img}: {} labels left unused", labels.len())));
    }
    Face::new(params, diagonals).map_err(|e| Error::InvalidImage(format!("{img}: {e}")))
}
