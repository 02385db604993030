//! Exact colored Jones polynomials of knot diagrams, their degree
//! quasi-polynomials and Jones slopes, together with the diagrammatic data
//! (adequacy, Turaev genus, state surfaces) that the slopes are compared with.

pub mod bracket;
pub mod catalog;
pub mod cli;
pub mod jones;
pub mod laurent;
pub mod pd;
pub mod slopes;
pub mod state;

pub use bracket::{bracket, BracketError, BracketResult, Caps, Engine};
pub use jones::{colored_jones, degree_sequence, DegreeSequence, JonesConfig, JonesError};
pub use laurent::LaurentPoly;
pub use pd::{parse_pd, Crossing, Diagram, PdError, Sign};
pub use slopes::{characterize, CharacterizationReport, PipelineConfig, QuasiQuadratic, SlopeData, Verdict};
pub use state::{adequacy, surface_summary, Side, StateSummary, SurfaceSummary};
