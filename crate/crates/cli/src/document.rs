//! JSON form of a face: diagonals as signed label pairs, B-pairs by their
//! canonical chord only.

use serde::{Deserialize, Serialize};

use dissect_core::{Chord, ComplexParams, Diagonal, Error, Face, Family, Label};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDocument {
    pub family: String,
    pub m: u32,
    pub n: u32,
    pub diagonals: Vec<[i64; 2]>,
}

impl FaceDocument {
    pub fn from_face(face: &Face) -> Self {
        let p = face.params();
        FaceDocument {
            family: p.family().to_string(),
            m: p.m(),
            n: p.n(),
            diagonals: face.diagonals().iter().map(|d| pair(d, p)).collect(),
        }
    }

    pub fn params(&self) -> Result<ComplexParams, Error> {
        let family: Family = self.family.parse()?;
        ComplexParams::new(family, self.m, self.n)
    }

    /// Validates every diagonal, naming the first offending one.
    pub fn to_face(&self) -> Result<Face, Error> {
        let p = self.params()?;
        let size = p.polygon_size();
        let mut diagonals = Vec::with_capacity(self.diagonals.len());
        for &[a, b] in &self.diagonals {
            let name = || format!("[{a}, {b}]");
            let la = Label::from_signed(a, &p).map_err(|e| Error::InvalidDiagonal(format!("{}: {e}", name())))?;
            let lb = Label::from_signed(b, &p).map_err(|e| Error::InvalidDiagonal(format!("{}: {e}", name())))?;
            let chord = Chord::new(la, lb, size).map_err(|e| Error::InvalidDiagonal(format!("{}: {e}", name())))?;
            let d = Diagonal::from_chord(&p, chord).map_err(|e| Error::InvalidDiagonal(format!("{}: {e}", name())))?;
            diagonals.push(d);
        }
        Face::new(p, diagonals)
    }
}

/// `[a, b]` for family A, `[i, -i]` for a diameter, `[initial, terminal]`
/// for a mirror pair.
pub fn pair(d: &Diagonal, p: &ComplexParams) -> [i64; 2] {
    match *d {
        Diagonal::A(c) => [c.lo().signed(p), c.hi().signed(p)],
        Diagonal::Diameter(v) => [v.signed(p), v.mirror(p).signed(p)],
        Diagonal::Pair { initial, terminal } => [initial.signed(p), terminal.signed(p)],
    }
}

/// Reads one document or an array of documents.
pub fn parse_documents(text: &str) -> Result<Vec<FaceDocument>, serde_json::Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.is_array() {
        serde_json::from_value(value)
    } else {
        Ok(vec![serde_json::from_value(value)?])
    }
}
