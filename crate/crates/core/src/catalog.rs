//! Built-in knot catalog, loaded from `data/catalog.json`.
//!
//! Each entry has a minimal diagram, variant diagrams built from it by recorded
//! Reidemeister moves, and locked regression values. Variants are addressed as
//! `label/name`, e.g. `3_1/kink+`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::pd::{ArcId, Diagram, DiagramJson, PdError, Sign};
use crate::state::StateSummary;

pub const CATALOG_JSON: &str = include_str!("../data/catalog.json");
pub const CATALOG_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog label '{0}' (try `catalog` to list labels)")]
    NotFound(String),
    #[error("catalog entry '{label}' has no variant '{variant}'")]
    NoVariant { label: String, variant: String },
    #[error("catalog version {found} is not supported (expected {CATALOG_VERSION})")]
    Version { found: u32 },
    #[error("catalog JSON: {0}")]
    Json(String),
    #[error("catalog entry '{label}': {source}")]
    Diagram { label: String, source: PdError },
}

/// A Reidemeister move applied to a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "lowercase")]
pub enum Move {
    /// R1 curl on `arc`; `sign` is `1` or `-1`.
    Kink { arc: ArcId, sign: i8 },
    /// R2 bigon at `crossing`, pushing position `position` over or under position `position + 1`.
    R2 { crossing: usize, position: usize, over: bool },
}

impl Move {
    pub fn apply(&self, d: &Diagram) -> Result<Diagram, PdError> {
        match *self {
            Move::Kink { arc, sign } => {
                let sign = match sign {
                    1 => Sign::Positive,
                    -1 => Sign::Negative,
                    s => return Err(PdError::InvalidMove(format!("kink sign {s}"))),
                };
                d.with_kink(arc, sign)
            }
            Move::R2 { crossing, position, over } => d.with_r2(crossing, position, over),
        }
    }
}

pub fn apply_moves(d: &Diagram, moves: &[Move]) -> Result<Diagram, PdError> {
    moves.iter().try_fold(d.clone(), |acc, m| m.apply(&acc))
}

/// Locked regression values of a minimal diagram.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub writhe: i64,
    pub crossing_counts: [usize; 2],
    pub summary: StateSummary,
    /// Unreduced Jones polynomial `J(2)` in `A`.
    pub jones_2: LaurentPoly,
    /// `[n, 4d₋, 4d₊]` for `n = 1..=n_max`.
    pub degrees: Vec<[i64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantRecord {
    pub name: String,
    pub moves: Vec<Move>,
    pub diagram: DiagramJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub label: String,
    pub description: String,
    pub alternating: bool,
    /// Default largest color for pipelines under the default caps.
    pub n_max: usize,
    pub minimal: DiagramJson,
    pub variants: Vec<VariantRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogFile {
    pub version: u32,
    pub entries: Vec<EntryRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variant {
    pub name: String,
    pub moves: Vec<Move>,
    pub diagram: Diagram,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub description: String,
    pub alternating: bool,
    pub n_max: usize,
    pub minimal_diagram: Diagram,
    pub variant_diagrams: Vec<Variant>,
    pub expected: Option<Expected>,
}

impl CatalogEntry {
    pub fn variant(&self, name: &str) -> Option<&Variant> {
        self.variant_diagrams.iter().find(|v| v.name == name)
    }

    /// Minimal diagram followed by every variant.
    pub fn all_diagrams(&self) -> impl Iterator<Item = &Diagram> {
        std::iter::once(&self.minimal_diagram).chain(self.variant_diagrams.iter().map(|v| &v.diagram))
    }

    fn from_record(r: &EntryRecord) -> Result<Self, CatalogError> {
        let wrap = |source| CatalogError::Diagram { label: r.label.clone(), source };
        let minimal_diagram = Diagram::from_json(&r.minimal).map_err(wrap)?.with_label(&r.label);
        let variant_diagrams = r
            .variants
            .iter()
            .map(|v| {
                let diagram = Diagram::from_json(&v.diagram)
                    .map_err(wrap)?
                    .with_label(format!("{}/{}", r.label, v.name));
                Ok(Variant { name: v.name.clone(), moves: v.moves.clone(), diagram })
            })
            .collect::<Result<_, CatalogError>>()?;
        Ok(CatalogEntry {
            label: r.label.clone(),
            description: r.description.clone(),
            alternating: r.alternating,
            n_max: r.n_max,
            minimal_diagram,
            variant_diagrams,
            expected: r.expected.clone(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Self, CatalogError> {
        let file: CatalogFile = serde_json::from_str(text).map_err(|e| CatalogError::Json(e.to_string()))?;
        if file.version != CATALOG_VERSION {
            return Err(CatalogError::Version { found: file.version });
        }
        let entries = file.entries.iter().map(CatalogEntry::from_record).collect::<Result<_, _>>()?;
        Ok(Catalog { entries })
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn list(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.label.as_str()).collect()
    }

    pub fn get(&self, label: &str) -> Result<&CatalogEntry, CatalogError> {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .ok_or_else(|| CatalogError::NotFound(label.to_string()))
    }

    /// Resolves `label` or `label/variant` to a diagram.
    pub fn diagram(&self, name: &str) -> Result<&Diagram, CatalogError> {
        match name.split_once('/') {
            None => Ok(&self.get(name)?.minimal_diagram),
            Some((label, variant)) => {
                let entry = self.get(label)?;
                entry.variant(variant).map(|v| &v.diagram).ok_or_else(|| CatalogError::NoVariant {
                    label: label.to_string(),
                    variant: variant.to_string(),
                })
            }
        }
    }
}

/// The catalog shipped with the crate.
pub fn builtin() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::from_json(CATALOG_JSON).expect("shipped catalog is valid"))
}

pub fn catalog_list() -> Vec<&'static str> {
    builtin().list()
}

pub fn catalog_get(label: &str) -> Result<&'static CatalogEntry, CatalogError> {
    builtin().get(label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn required_labels() {
        let labels = catalog_list();
        for l in ["0_1", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"] {
            assert!(labels.contains(&l), "{l}");
        }
        assert!(builtin().diagram("0_1/kink+").is_ok());
        assert!(builtin().entries().iter().any(|e| !e.alternating));
    }

    #[test]
    fn lookups() {
        assert_eq!(catalog_get("4_1").unwrap().minimal_diagram.crossing_count(), 4);
        assert_eq!(catalog_get("0_1").unwrap().minimal_diagram.crossing_count(), 0);
        assert_eq!(catalog_get("nope"), Err(CatalogError::NotFound("nope".into())));
        assert!(matches!(builtin().diagram("3_1/none"), Err(CatalogError::NoVariant { .. })));
        assert_eq!(builtin().diagram("3_1/kink+").unwrap().label(), "3_1/kink+");
    }

    #[test]
    fn crossing_number_matches_label() {
        for e in builtin().entries() {
            let Some(c) = e.label.split_once('_').and_then(|(c, i)| i.parse::<u32>().ok().and(c.parse::<usize>().ok())) else {
                continue;
            };
            assert_eq!(e.minimal_diagram.crossing_count(), c, "{}", e.label);
        }
    }

    #[test]
    fn variants_follow_their_moves() {
        for e in builtin().entries() {
            for v in &e.variant_diagrams {
                let rebuilt = apply_moves(&e.minimal_diagram, &v.moves).unwrap();
                assert_eq!(rebuilt.crossings(), v.diagram.crossings(), "{}/{}", e.label, v.name);
            }
        }
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(Catalog::from_json("{"), Err(CatalogError::Json(_))));
        assert_eq!(
            Catalog::from_json(r#"{"version":9,"entries":[]}"#),
            Err(CatalogError::Version { found: 9 })
        );
        let bad = r#"{"version":1,"entries":[{"label":"x","description":"","alternating":true,"n_max":1,
            "minimal":{"pd":[[1,2,3,4]]},"variants":[]}]}"#;
        assert!(matches!(Catalog::from_json(bad), Err(CatalogError::Diagram { .. })));
    }
}
