//! Facet-list text format: one facet per line, vertices as whitespace
//! separated tokens. Blank lines and lines starting with `#` are skipped; a
//! line holding only `{}` is the empty facet.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{AbstractComplex, Vertex};
use crate::error::{Error, Result};

/// A complex whose vertices carry string names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedComplex {
    pub names: Vec<String>,
    pub complex: AbstractComplex,
}

impl NamedComplex {
    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v as usize]
    }
}

/// Vertex ids are assigned in order of first appearance.
pub fn parse_facet_list(text: &str) -> Result<NamedComplex> {
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut names = Vec::new();
    let mut facets = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "{}" {
            facets.push(Vec::new());
            continue;
        }
        let mut facet = Vec::new();
        for tok in line.split_whitespace() {
            if tok.starts_with('#') {
                break;
            }
            let id = *ids.entry(tok.to_string()).or_insert_with(|| {
                names.push(tok.to_string());
                (names.len() - 1) as Vertex
            });
            if facet.contains(&id) {
                return Err(Error::Parse { line: lineno + 1, message: format!("vertex {tok} repeated") });
            }
            facet.push(id);
        }
        facets.push(facet);
    }
    Ok(NamedComplex { names, complex: AbstractComplex::from_faces(facets) })
}

/// Writes the facets of `complex`, naming vertex `v` by `name(v)`.
pub fn write_facet_list(complex: &AbstractComplex, name: impl Fn(Vertex) -> String) -> String {
    let mut out = String::new();
    for f in complex.facets() {
        if f.is_empty() {
            out.push_str("{}\n");
            continue;
        }
        let toks: Vec<String> = f.iter().map(|&v| name(v)).collect();
        let _ = writeln!(out, "{}", toks.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let text = "# triangle boundary\na b\nb c\n\nc a\n";
        let nc = parse_facet_list(text).unwrap();
        assert_eq!(nc.names, vec!["a", "b", "c"]);
        assert_eq!(nc.complex.facets().len(), 3);
        let out = write_facet_list(&nc.complex, |v| nc.name(v).to_string());
        assert_eq!(out, "a b\na c\nb c\n");
        let again = parse_facet_list(&out).unwrap();
        assert_eq!(again.complex.facets().len(), 3);
    }

    #[test]
    fn empty_facet_and_errors() {
        assert_eq!(parse_facet_list("{}\n").unwrap().complex, AbstractComplex::empty_face());
        assert!(parse_facet_list("").unwrap().complex.is_void());
        assert!(matches!(parse_facet_list("a a\n"), Err(Error::Parse { line: 1, .. })));
    }
}
