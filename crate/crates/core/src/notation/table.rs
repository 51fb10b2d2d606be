//! The bundled knot table: one JSON object per line.
//!
//! Each entry carries a PD code as an array of crossing quadruples (fixing a
//! chirality), the component count, the unknotting number as a two-element
//! interval `[lo, hi]` (equal when known exactly), and the band-unknotting
//! numbers where published.  A `note` records where a value comes from or
//! why one is absent.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::NotationError;
use crate::diagram::PlanarDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotEntry {
    pub name: String,
    pub pd: Vec<[u32; 4]>,
    pub components: u32,
    /// Unknotting number interval `[lo, hi]`.
    pub u: [u32; 2],
    /// H(2)-unknotting number, when published.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u2: Option<u32>,
    /// Band-unknotting number, when published.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bu: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl KnotEntry {
    /// An empty `pd` is the unknot (one free loop); anything else is taken
    /// verbatim as crossing quadruples.
    pub fn diagram(&self) -> Result<PlanarDiagram, NotationError> {
        let loops = u32::from(self.pd.is_empty());
        Ok(PlanarDiagram::new(self.pd.clone(), loops)?)
    }
}

#[derive(Debug, Clone, Default)]
pub struct KnotTable {
    entries: Vec<KnotEntry>,
    index: HashMap<String, usize>,
}

impl KnotTable {
    /// Parse a JSON-lines table.  Blank lines are skipped; names must be
    /// unique, the PD code of every entry must build, and its component
    /// count must match the `components` field.
    pub fn parse(text: &str) -> Result<Self, NotationError> {
        let mut table = KnotTable::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| NotationError::Table { line: i + 1, msg };
            let entry: KnotEntry =
                serde_json::from_str(line).map_err(|e| bad(e.to_string()))?;
            if entry.u[0] > entry.u[1] {
                return Err(bad(format!(
                    "empty unknotting interval [{}, {}]",
                    entry.u[0], entry.u[1]
                )));
            }
            let d = entry
                .diagram()
                .map_err(|e| bad(format!("{}: {e}", entry.name)))?;
            if d.component_count() != entry.components as usize {
                return Err(bad(format!(
                    "{}: pd has {} components, entry says {}",
                    entry.name,
                    d.component_count(),
                    entry.components
                )));
            }
            table.push(entry)?;
        }
        Ok(table)
    }

    pub fn push(&mut self, entry: KnotEntry) -> Result<(), NotationError> {
        if self.index.contains_key(&entry.name) {
            return Err(NotationError::DuplicateName(entry.name));
        }
        self.index.insert(entry.name.clone(), self.entries.len());
        self.entries.push(entry);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&KnotEntry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    pub fn entries(&self) -> &[KnotEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&serde_json::to_string(e).expect("table entries serialize"));
            out.push('\n');
        }
        out
    }
}

/// Load and validate a JSON-lines knot table from disk.
pub fn load_knot_table(path: impl AsRef<std::path::Path>) -> Result<KnotTable, NotationError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| NotationError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    KnotTable::parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = r#"
{"name":"3_1","pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"components":1,"u":[1,1],"u2":1,"bu":1,"note":"Table 2"}
{"name":"9_23","pd":[],"components":1,"u":[1,2],"note":"paper table ambiguity"}
"#;

    #[test]
    fn parses_and_indexes() {
        let t = KnotTable::parse(SAMPLE).unwrap();
        assert_eq!(t.len(), 2);
        let e = t.get("3_1").unwrap();
        assert_eq!(e.u, [1, 1]);
        assert_eq!(e.bu, Some(1));
        assert_eq!(e.diagram().unwrap().crossing_count(), 3);
        let amb = t.get("9_23").unwrap();
        assert_eq!(amb.u, [1, 2]);
        assert_eq!(amb.u2, None);
        assert_eq!(amb.diagram().unwrap().component_count(), 1);
        assert!(t.get("5_1").is_none());
    }

    #[test]
    fn round_trips_through_jsonl() {
        let t = KnotTable::parse(SAMPLE).unwrap();
        let again = KnotTable::parse(&t.to_jsonl()).unwrap();
        assert_eq!(t.entries(), again.entries());
    }

    #[test]
    fn rejects_duplicates_and_bad_lines() {
        let dup = format!("{0}\n{0}\n", SAMPLE.trim().lines().next().unwrap());
        assert!(matches!(KnotTable::parse(&dup), Err(NotationError::DuplicateName(_))));
        match KnotTable::parse("{\"name\":\"x\"}") {
            Err(NotationError::Table { line: 1, .. }) => {}
            other => panic!("expected a table error, got {other:?}"),
        }
        assert!(matches!(
            KnotTable::parse(r#"{"name":"x","pd":[],"components":1,"u":[2,1]}"#),
            Err(NotationError::Table { .. })
        ));
        let wrong = r#"{"name":"x","pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"components":2,"u":[1,1]}"#;
        assert!(matches!(
            KnotTable::parse(wrong),
            Err(NotationError::Table { .. })
        ));
    }
}
