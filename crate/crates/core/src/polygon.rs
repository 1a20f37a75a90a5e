//! Labeled polygons, chords and the diagonals that index the vertices of
//! Δ^m_W.
//!
//! Everything here is combinatorial: a polygon with `N` vertices is the
//! cyclic sequence of positions `0..N` in anticlockwise order, and two chords
//! cross iff their endpoints strictly interleave around that cycle.
//!
//! Family B polygons carry the signed labelling `1, ..., mn+1, -1, ..., -(mn+1)`
//! where `-i` stands for the barred vertex. The mirror map sends position `p`
//! to `p + mn + 1 (mod N)`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::params::{ComplexParams, Family};

/// A vertex of the polygon, stored as its position in the anticlockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(u32);

impl Label {
    pub fn new(position: u32, params: &ComplexParams) -> Result<Self> {
        let size = params.polygon_size();
        if position >= size {
            return Err(Error::InvalidParams(format!("position {position} outside a {size}-gon")));
        }
        Ok(Label(position))
    }

    pub(crate) const fn at(position: u32) -> Self {
        Label(position)
    }

    pub fn position(self) -> u32 {
        self.0
    }

    /// Parses the human-facing label: `1..=mn+2` for family A, `±1..=±(mn+1)` for
    /// family B.
    pub fn from_signed(value: i64, params: &ComplexParams) -> Result<Self> {
        let bad = || Error::InvalidParams(format!("label {value} does not exist on {params}"));
        match params.family() {
            Family::A => {
                if value < 1 || value > params.polygon_size() as i64 {
                    return Err(bad());
                }
                Ok(Label(value as u32 - 1))
            }
            Family::B => {
                let half = params.half() as i64;
                if value == 0 || value.abs() > half {
                    return Err(bad());
                }
                if value > 0 {
                    Ok(Label(value as u32 - 1))
                } else {
                    Ok(Label((half + (-value) - 1) as u32))
                }
            }
        }
    }

    /// Inverse of [`Label::from_signed`].
    pub fn signed(self, params: &ComplexParams) -> i64 {
        match params.family() {
            Family::A => self.0 as i64 + 1,
            Family::B => {
                let half = params.half();
                if self.0 < half {
                    self.0 as i64 + 1
                } else {
                    -((self.0 - half) as i64 + 1)
                }
            }
        }
    }

    /// True for the unbarred vertices of a family B polygon.
    pub fn is_positive(self, params: &ComplexParams) -> bool {
        self.0 < params.half()
    }

    /// Antipodal vertex of a family B polygon.
    pub fn mirror(self, params: &ComplexParams) -> Label {
        Label((self.0 + params.half()) % params.polygon_size())
    }

    /// The vertex `k` steps further in anticlockwise order.
    pub fn advance(self, k: u32, size: u32) -> Label {
        Label(((self.0 as u64 + k as u64) % size as u64) as u32)
    }
}

/// Number of anticlockwise boundary steps from `a` to `b` on an `size`-gon.
pub fn arc_distance(a: Label, b: Label, size: u32) -> u32 {
    (b.0 + size - a.0) % size
}

/// An unordered pair of nonadjacent polygon vertices, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    lo: Label,
    hi: Label,
}

impl Chord {
    pub fn new(a: Label, b: Label, size: u32) -> Result<Self> {
        let err = |reason| Error::InvalidChord { a: a.0 as i64, b: b.0 as i64, size, reason };
        if a.0 >= size || b.0 >= size {
            return Err(err("endpoint outside the polygon"));
        }
        if a == b {
            return Err(err("endpoints coincide"));
        }
        let d = arc_distance(a, b, size);
        if d == 1 || d == size - 1 {
            return Err(err("endpoints are consecutive around the boundary"));
        }
        Ok(Self::ordered(a, b))
    }

    fn ordered(a: Label, b: Label) -> Self {
        if a < b {
            Chord { lo: a, hi: b }
        } else {
            Chord { lo: b, hi: a }
        }
    }

    pub fn lo(&self) -> Label {
        self.lo
    }

    pub fn hi(&self) -> Label {
        self.hi
    }

    pub fn endpoints(&self) -> [Label; 2] {
        [self.lo, self.hi]
    }

    pub fn has_endpoint(&self, v: Label) -> bool {
        self.lo == v || self.hi == v
    }

    /// Image under the family B mirror map.
    pub fn mirror(&self, params: &ComplexParams) -> Chord {
        Chord::ordered(self.lo.mirror(params), self.hi.mirror(params))
    }
}

/// True iff the endpoints of the two chords strictly interleave around the
/// cycle. Chords sharing an endpoint never cross.
pub fn chords_cross(c1: &Chord, c2: &Chord) -> bool {
    if c1.lo == c2.lo || c1.lo == c2.hi || c1.hi == c2.lo || c1.hi == c2.hi {
        return false;
    }
    let inside = |x: Label| c1.lo < x && x < c1.hi;
    inside(c2.lo) != inside(c2.hi)
}

/// An m-divisible diagonal of the (mn+2)-gon cuts it into an (mj+2)-gon and
/// an (m(n-j)+2)-gon, i.e. the arc between the endpoints has length ≡ 1 (mod m).
pub fn is_valid_a_diagonal(c: &Chord, m: u32, n: u32) -> bool {
    let size = m * n + 2;
    if c.hi.0 >= size {
        return false;
    }
    let d = arc_distance(c.lo, c.hi, size);
    (2..=size - 2).contains(&d) && d % m == 1 % m
}

/// A B-diagonal is valid if it is a diameter, or a mirror pair whose
/// constituent chord cuts off an (mj+2)-gon, 1 <= j <= n-1, on the side away
/// from the center.
pub fn is_valid_b_diagonal(diagonal: &Diagonal, m: u32, n: u32) -> bool {
    let Ok(params) = ComplexParams::b(m, n) else {
        return false;
    };
    let size = params.polygon_size();
    let half = params.half();
    match *diagonal {
        Diagonal::A(_) => false,
        Diagonal::Diameter(p) => p.0 < half,
        Diagonal::Pair { initial, terminal } => {
            if initial.0 >= half || terminal.0 >= size {
                return false;
            }
            let Ok(chord) = Chord::new(initial, terminal, size) else {
                return false;
            };
            let mirror = chord.mirror(&params);
            if mirror == chord || chords_cross(&chord, &mirror) {
                return false;
            }
            let d = arc_distance(initial, terminal, size);
            d < half && d % m == 1 % m
        }
    }
}

/// A vertex of Δ^m_W.
///
/// Family B pairs are stored by their canonical constituent: the chord whose
/// initial point (start of the orientation keeping the center on the left) is
/// unbarred. The mirror chord is implied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Diagonal {
    A(Chord),
    Diameter(Label),
    Pair { initial: Label, terminal: Label },
}

impl Diagonal {
    /// Canonicalizes a chord into the diagonal containing it, or reports why it
    /// is not a vertex of the complex.
    pub fn from_chord(params: &ComplexParams, chord: Chord) -> Result<Self> {
        let size = params.polygon_size();
        if chord.hi.0 >= size {
            return Err(Error::InvalidDiagonal(format!("chord {}-{} outside a {size}-gon", chord.lo.0, chord.hi.0)));
        }
        match params.family() {
            Family::A => {
                if is_valid_a_diagonal(&chord, params.m(), params.n()) {
                    Ok(Diagonal::A(chord))
                } else {
                    Err(Error::InvalidDiagonal(format!(
                        "{}: not m-divisible (m = {})",
                        chord_text(&chord, params),
                        params.m()
                    )))
                }
            }
            Family::B => {
                let half = params.half();
                let d = arc_distance(chord.lo, chord.hi, size);
                if d == half {
                    let p = if chord.lo.0 < half { chord.lo } else { chord.hi };
                    return Ok(Diagonal::Diameter(p));
                }
                let (mut s, mut t) = if d < half { (chord.lo, chord.hi) } else { (chord.hi, chord.lo) };
                if !s.is_positive(params) {
                    s = s.mirror(params);
                    t = t.mirror(params);
                }
                let diagonal = Diagonal::Pair { initial: s, terminal: t };
                if is_valid_b_diagonal(&diagonal, params.m(), params.n()) {
                    Ok(diagonal)
                } else {
                    Err(Error::InvalidDiagonal(format!(
                        "{}: cut-off arc of length {} is not 1 mod m (m = {})",
                        chord_text(&chord, params),
                        arc_distance(s, t, size),
                        params.m()
                    )))
                }
            }
        }
    }

    pub fn is_valid(&self, params: &ComplexParams) -> bool {
        match (params.family(), self) {
            (Family::A, Diagonal::A(c)) => is_valid_a_diagonal(c, params.m(), params.n()),
            (Family::B, Diagonal::Diameter(_) | Diagonal::Pair { .. }) => {
                is_valid_b_diagonal(self, params.m(), params.n())
            }
            _ => false,
        }
    }

    pub fn is_diameter(&self) -> bool {
        matches!(self, Diagonal::Diameter(_))
    }

    /// The chord used for ordering and serialization.
    pub fn canonical_chord(&self, params: &ComplexParams) -> Chord {
        match *self {
            Diagonal::A(c) => c,
            Diagonal::Diameter(p) => Chord::ordered(p, p.mirror(params)),
            Diagonal::Pair { initial, terminal } => Chord::ordered(initial, terminal),
        }
    }

    /// Chords actually drawn in the polygon: one for a type-A chord or a
    /// diameter, two for a mirror pair.
    pub fn chords(&self, params: &ComplexParams) -> Vec<Chord> {
        match *self {
            Diagonal::A(c) => vec![c],
            Diagonal::Diameter(p) => vec![Chord::ordered(p, p.mirror(params))],
            Diagonal::Pair { initial, terminal } => {
                let c = Chord::ordered(initial, terminal);
                vec![c, c.mirror(params)]
            }
        }
    }

    pub fn is_incident(&self, v: Label, params: &ComplexParams) -> bool {
        self.chords(params).iter().any(|c| c.has_endpoint(v))
    }

    fn sort_key(&self) -> (u32, u32, u8) {
        match *self {
            Diagonal::A(c) => (c.lo.0, c.hi.0, 0),
            // Sorts after every pair chord sharing the lower endpoint.
            Diagonal::Diameter(p) => (p.0, u32::MAX, 1),
            Diagonal::Pair { initial, terminal } => {
                let c = Chord::ordered(initial, terminal);
                (c.lo.0, c.hi.0, 2)
            }
        }
    }

    /// Human-readable form using signed labels, e.g. `1-3` or `2--2`.
    pub fn describe(&self, params: &ComplexParams) -> String {
        match *self {
            Diagonal::A(c) => chord_text(&c, params),
            Diagonal::Diameter(p) => format!("{}|{}", p.signed(params), p.mirror(params).signed(params)),
            Diagonal::Pair { initial, terminal } => {
                format!("{}>{}", initial.signed(params), terminal.signed(params))
            }
        }
    }
}

impl PartialOrd for Diagonal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diagonal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

fn chord_text(c: &Chord, params: &ComplexParams) -> String {
    format!("{}-{}", c.lo.signed(params), c.hi.signed(params))
}

/// True iff no constituent chord of one diagonal crosses a constituent chord
/// of the other.
pub fn compatible(params: &ComplexParams, d1: &Diagonal, d2: &Diagonal) -> bool {
    if d1 == d2 {
        return true;
    }
    let c1 = d1.chords(params);
    let c2 = d2.chords(params);
    c1.iter().all(|x| c2.iter().all(|y| !chords_cross(x, y)))
}

/// A dissection: a set of pairwise compatible valid diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    params: ComplexParams,
    diagonals: Vec<Diagonal>,
}

impl Face {
    pub fn empty(params: ComplexParams) -> Self {
        Face { params, diagonals: Vec::new() }
    }

    pub fn new(params: ComplexParams, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let mut diagonals: Vec<Diagonal> = diagonals.into_iter().collect();
        diagonals.sort();
        diagonals.dedup();
        for d in &diagonals {
            if !d.is_valid(&params) {
                return Err(Error::InvalidDiagonal(d.describe(&params)));
            }
        }
        for (i, x) in diagonals.iter().enumerate() {
            for y in &diagonals[i + 1..] {
                if !compatible(&params, x, y) {
                    return Err(Error::Incompatible(x.describe(&params), y.describe(&params)));
                }
            }
        }
        if diagonals.len() > params.facet_size() {
            return Err(Error::TooManyDiagonals { got: diagonals.len(), max: params.facet_size() });
        }
        Ok(Face { params, diagonals })
    }

    /// Builds a face from diagonals already known to be valid, sorted and
    /// pairwise compatible.
    pub(crate) fn from_sorted_unchecked(params: ComplexParams, diagonals: Vec<Diagonal>) -> Self {
        debug_assert!(diagonals.windows(2).all(|w| w[0] < w[1]));
        Face { params, diagonals }
    }

    pub fn params(&self) -> &ComplexParams {
        &self.params
    }

    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.binary_search(d).is_ok()
    }

    pub fn diameter_count(&self) -> usize {
        self.diagonals.iter().filter(|d| d.is_diameter()).count()
    }

    /// All chords drawn by the dissection.
    pub fn chords(&self) -> Vec<Chord> {
        self.diagonals.iter().flat_map(|d| d.chords(&self.params)).collect()
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, d) in self.diagonals.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&d.describe(&self.params))?;
        }
        f.write_str("}")
    }
}
