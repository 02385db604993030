//! Kauffman bracket evaluation.
//!
//! Two independent engines compute `⟨D⟩` with `⟨O⟩ = δ = -A² - A⁻²` and
//! `⟨∅⟩ = 1`: an exhaustive state sum, used as the oracle, and a sweep that
//! absorbs crossings one at a time into a map from planar pairings of the open
//! strands to polynomial weights.

mod statesum;
mod sweep;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::pd::Diagram;

pub use statesum::bracket_statesum;
pub use sweep::{bracket_sweep, sweep_order, SweepOrder};

pub const DEFAULT_STATESUM_CAP: usize = 24;
pub const DEFAULT_WIDTH_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BracketError {
    #[error("state sum refused: {crossings} crossings exceeds the state-sum cap {cap} (use the sweep engine)")]
    StateSumCap { crossings: usize, cap: usize },
    #[error("sweep refused: best sweep order needs {width} open strands, width cap is {cap}")]
    WidthCap { width: usize, cap: usize },
}

impl BracketError {
    /// Name of the cap that was violated, as used on the command line.
    pub fn cap_name(&self) -> &'static str {
        match self {
            BracketError::StateSumCap { .. } => "statesum-cap",
            BracketError::WidthCap { .. } => "width-cap",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    #[default]
    Auto,
    Statesum,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub statesum: usize,
    pub width: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { statesum: DEFAULT_STATESUM_CAP, width: DEFAULT_WIDTH_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketResult {
    pub value: LaurentPoly,
    /// `statesum` or `sweep`; never `auto`.
    pub engine: Engine,
    /// `2^c` for the state sum, the maximal open-strand count for the sweep.
    pub states_or_width: u64,
}

/// Evaluates `⟨D⟩`; `Auto` uses the state sum up to the state-sum cap and the sweep beyond.
pub fn bracket(d: &Diagram, engine: Engine, caps: Caps) -> Result<BracketResult, BracketError> {
    match engine {
        Engine::Statesum => bracket_statesum(d, caps.statesum),
        Engine::Sweep => bracket_sweep(d, caps.width),
        Engine::Auto if d.crossing_count() <= caps.statesum => bracket_statesum(d, caps.statesum),
        Engine::Auto => bracket_sweep(d, caps.width),
    }
}

/// `δ^k`.
pub(crate) fn delta_pow(k: usize) -> LaurentPoly {
    LaurentPoly::delta().pow(k as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::{parse_pd, Sign};

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    fn both(d: &Diagram) -> LaurentPoly {
        let a = bracket_statesum(d, 24).unwrap().value;
        let b = bracket_sweep(d, 24).unwrap().value;
        assert_eq!(a, b, "engines disagree on {}", d);
        a
    }

    #[test]
    fn normalization() {
        assert_eq!(both(&Diagram::empty()), LaurentPoly::one());
        assert_eq!(both(&Diagram::unknot()), LaurentPoly::delta());
    }

    #[test]
    fn positive_kink_oracle() {
        // All-A: two circles with weight A; all-B: one circle with weight A^-1.
        let d = parse_pd("X(1,2,2,1)").unwrap();
        let delta = LaurentPoly::delta();
        let by_hand = &(&delta * &delta).shift(1) + &delta.shift(-1);
        assert_eq!(both(&d), by_hand);
        assert_eq!(by_hand, -delta.shift(3));
    }

    #[test]
    fn trefoil_by_hand() {
        // State sum over the 8 states with circle counts from the trefoil's states by
        // hand: all-A 2 circles, one B 1 circle, two B 2 circles, all-B 3 circles.
        let d = parse_pd(TREFOIL).unwrap();
        let delta = LaurentPoly::delta();
        let expect = delta.pow(2).shift(3)
            + delta.shift(1).scale_i64(3)
            + delta.pow(2).shift(-1).scale_i64(3)
            + delta.pow(3).shift(-3);
        assert_eq!(both(&d), expect);
    }

    #[test]
    fn r1_factor() {
        let d = parse_pd(TREFOIL).unwrap();
        let base = both(&d);
        for arc in 1..=6 {
            assert_eq!(both(&d.with_kink(arc, Sign::Positive).unwrap()), -base.shift(3));
            assert_eq!(both(&d.with_kink(arc, Sign::Negative).unwrap()), -base.shift(-3));
        }
    }

    #[test]
    fn caps_refuse() {
        let d = parse_pd(TREFOIL).unwrap().cable(3).unwrap();
        assert_eq!(d.crossing_count(), 27);
        assert_eq!(bracket_statesum(&d, 24), Err(BracketError::StateSumCap { crossings: 27, cap: 24 }));
        let r = bracket(&d, Engine::Auto, Caps::default()).unwrap();
        assert_eq!(r.engine, Engine::Sweep);
        assert!(matches!(bracket_sweep(&d, 2), Err(BracketError::WidthCap { cap: 2, .. })));
    }

    #[test]
    fn cabled_kink_matches_statesum() {
        let d = parse_pd("X(1,2,2,1)").unwrap().cable(2).unwrap();
        assert_eq!(d.crossing_count(), 4);
        both(&d);
    }
}
