//! Colored Jones polynomials from cabled brackets.
//!
//! `J_K(n) = ((-1)^(n-1) A^(-(n²-1)))^w · (-1)^(n-1) · Σ_m s_m ⟨D^m⟩`, where
//! `S_(n-1)(x) = Σ_m s_m x^m` is the Chebyshev polynomial of the second kind,
//! `D^m` is the blackboard `m`-cable, `⟨D^0⟩ = 1` and `w` is the writhe of `D`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::{bracket, BracketError, Caps, Engine};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::pd::{Diagram, PdError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JonesError {
    #[error("color n must be at least 1, got {0}")]
    Color(i64),
    #[error(transparent)]
    Pd(#[from] PdError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Degree(#[from] LaurentError),
}

/// Coefficients of `S_(n-1)(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChebyshevExpansion {
    pub n: usize,
    /// `m ↦ coefficient of x^m`, nonzero entries only.
    pub coeffs: BTreeMap<usize, i64>,
}

/// `S_(n-1)` via `S_0 = 1`, `S_1 = x`, `S_(k+2) = x·S_(k+1) - S_k`.
pub fn chebyshev(n: i64) -> Result<ChebyshevExpansion, JonesError> {
    if n < 1 {
        return Err(JonesError::Color(n));
    }
    let n = n as usize;
    let mut prev: Vec<i64> = vec![1];
    let mut cur: Vec<i64> = vec![0, 1];
    if n == 1 {
        cur = prev.clone();
    } else {
        for _ in 2..n {
            let mut next = vec![0; cur.len() + 1];
            for (m, &c) in cur.iter().enumerate() {
                next[m + 1] += c;
            }
            for (m, &c) in prev.iter().enumerate() {
                next[m] -= c;
            }
            prev = std::mem::replace(&mut cur, next);
        }
    }
    let coeffs = cur
        .into_iter()
        .enumerate()
        .filter(|(_, c)| *c != 0)
        .collect();
    Ok(ChebyshevExpansion { n, coeffs })
}

/// Engine and caps used for every cabled bracket.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct JonesConfig {
    pub engine: Engine,
    pub caps: Caps,
}

/// Cost of one cabled bracket inside a colored Jones evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CableCost {
    pub m: usize,
    pub crossings: usize,
    pub engine: Engine,
    pub states_or_width: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JonesValue {
    pub n: usize,
    pub value: LaurentPoly,
    /// Cables with a nonzero Chebyshev coefficient, excluding `m = 0`.
    pub cables: Vec<CableCost>,
}

pub fn colored_jones(d: &Diagram, n: i64, config: JonesConfig) -> Result<LaurentPoly, JonesError> {
    colored_jones_detailed(d, n, config).map(|j| j.value)
}

pub fn colored_jones_detailed(d: &Diagram, n: i64, config: JonesConfig) -> Result<JonesValue, JonesError> {
    let w = d.writhe()?;
    let cheb = chebyshev(n)?;
    let cabled: Vec<(usize, i64)> = cheb.coeffs.iter().map(|(&m, &c)| (m, c)).collect();
    let terms: Vec<(LaurentPoly, Option<CableCost>)> = cabled
        .par_iter()
        .map(|&(m, c)| -> Result<_, JonesError> {
            if m == 0 {
                return Ok((LaurentPoly::one().scale_i64(c), None));
            }
            let cable = d.cable(m)?;
            let r = bracket(&cable, config.engine, config.caps)?;
            let cost = CableCost { m, crossings: cable.crossing_count(), engine: r.engine, states_or_width: r.states_or_width };
            Ok((r.value.scale_i64(c), Some(cost)))
        })
        .collect::<Result<_, _>>()?;
    let mut cables: Vec<CableCost> = terms.iter().filter_map(|(_, c)| *c).collect();
    cables.sort_by_key(|c| c.m);
    let sum: LaurentPoly = terms.into_iter().map(|(p, _)| p).sum();
    // (-1)^((n-1)(w+1))
    let sign = if (n - 1) * (w + 1) % 2 == 0 { 1 } else { -1 };
    let value = sum.shift(-(n * n - 1) * w).scale_i64(sign);
    Ok(JonesValue { n: n as usize, value, cables })
}

/// `(t^(n/2) - t^(-n/2)) / (t^(1/2) - t^(-1/2)) = Σ_k t^((n-1-2k)/2)`, as an `A`-polynomial.
pub fn unknot_closed_form(n: i64) -> Result<LaurentPoly, JonesError> {
    if n < 1 {
        return Err(JonesError::Color(n));
    }
    // t^(j/2) = A^(-2j)
    Ok(LaurentPoly::from_terms((0..n).map(|k| (-2 * (n - 1 - 2 * k), 1))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeEntry {
    pub n: usize,
    pub four_d_minus: i64,
    pub four_d_plus: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub label: String,
    pub entries: Vec<DegreeEntry>,
}

impl DegreeSequence {
    pub fn from_values(label: impl Into<String>, values: &[JonesValue]) -> Result<Self, JonesError> {
        let entries = values
            .iter()
            .map(|j| {
                let (lo, hi) = j.value.t_degrees()?;
                Ok(DegreeEntry { n: j.n, four_d_minus: lo, four_d_plus: hi })
            })
            .collect::<Result<_, JonesError>>()?;
        Ok(Self { label: label.into(), entries })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn get(&self, n: usize) -> Option<&DegreeEntry> {
        self.entries.iter().find(|e| e.n == n)
    }
}

/// `J_K(n)` for `n = 1..=n_max`.
pub fn colored_jones_range(d: &Diagram, n_max: usize, config: JonesConfig) -> Result<Vec<JonesValue>, JonesError> {
    if n_max < 1 {
        return Err(JonesError::Color(n_max as i64));
    }
    (1..=n_max).map(|n| colored_jones_detailed(d, n as i64, config)).collect()
}

pub fn degree_sequence(d: &Diagram, n_max: usize, config: JonesConfig) -> Result<DegreeSequence, JonesError> {
    let values = colored_jones_range(d, n_max, config)?;
    DegreeSequence::from_values(d.label(), &values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::{parse_pd, Sign};

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    fn sweep() -> JonesConfig {
        JonesConfig { engine: Engine::Sweep, caps: Caps::default() }
    }

    #[test]
    fn chebyshev_rows() {
        assert_eq!(chebyshev(1).unwrap().coeffs, BTreeMap::from([(0, 1)]));
        assert_eq!(chebyshev(2).unwrap().coeffs, BTreeMap::from([(1, 1)]));
        assert_eq!(chebyshev(4).unwrap().coeffs, BTreeMap::from([(3, 1), (1, -2)]));
        assert_eq!(chebyshev(5).unwrap().coeffs, BTreeMap::from([(4, 1), (2, -3), (0, 1)]));
        assert_eq!(chebyshev(0), Err(JonesError::Color(0)));
    }

    #[test]
    fn chebyshev_recursion_and_parity() {
        let rows: Vec<_> = (1..=12).map(|n| chebyshev(n).unwrap().coeffs).collect();
        for n in 2..rows.len() {
            let mut expect: BTreeMap<usize, i64> = BTreeMap::new();
            for (&m, &c) in &rows[n - 1] {
                *expect.entry(m + 1).or_default() += c;
            }
            for (&m, &c) in &rows[n - 2] {
                *expect.entry(m).or_default() -= c;
            }
            expect.retain(|_, c| *c != 0);
            assert_eq!(rows[n], expect);
        }
        for (i, row) in rows.iter().enumerate() {
            for (&m, &c) in row {
                assert_eq!(m % 2, i % 2);
                // signs alternate from the leading term down
                let from_top = (i - m) / 2;
                assert_eq!(c.signum(), if from_top % 2 == 0 { 1 } else { -1 });
            }
        }
    }

    #[test]
    fn unknot_forms() {
        assert_eq!(unknot_closed_form(1).unwrap(), LaurentPoly::one());
        assert_eq!(unknot_closed_form(2).unwrap(), LaurentPoly::from_terms([(-2, 1), (2, 1)]));
        assert_eq!(unknot_closed_form(3).unwrap(), LaurentPoly::from_terms([(-4, 1), (0, 1), (4, 1)]));
        for n in 1..=8 {
            assert_eq!(colored_jones(&Diagram::unknot(), n, sweep()).unwrap(), unknot_closed_form(n).unwrap());
        }
    }

    #[test]
    fn trefoil_jones() {
        let d = parse_pd(TREFOIL).unwrap();
        assert_eq!(colored_jones(&d, 1, sweep()).unwrap(), LaurentPoly::one());
        // Unreduced Jones of the all-positive trefoil: (t + t^3 - t^4)(t^(1/2) + t^(-1/2)).
        let reduced = LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]);
        let unreduced = &reduced * &unknot_closed_form(2).unwrap();
        let j2 = colored_jones(&d, 2, sweep()).unwrap();
        assert_eq!(j2, unreduced);
        // n = 2 is the writhe-corrected bracket with no cabling.
        let direct = bracket(&d, Engine::Statesum, Caps::default()).unwrap().value.shift(-9);
        assert_eq!(j2, direct);
        let auto = colored_jones_detailed(&d, 2, JonesConfig::default()).unwrap();
        assert_eq!(auto.value, j2);
        assert_eq!(auto.cables, vec![CableCost { m: 1, crossings: 3, engine: Engine::Statesum, states_or_width: 8 }]);
    }

    #[test]
    fn kink_invariance() {
        let d = parse_pd(TREFOIL).unwrap();
        let k = d.with_kink(3, Sign::Negative).unwrap().with_kink(1, Sign::Positive).unwrap();
        for n in 1..=3 {
            assert_eq!(colored_jones(&d, n, sweep()).unwrap(), colored_jones(&k, n, sweep()).unwrap());
        }
    }

    #[test]
    fn unknot_degrees() {
        let s = degree_sequence(&Diagram::unknot(), 3, sweep()).unwrap();
        let got: Vec<_> = s.entries.iter().map(|e| (e.n, e.four_d_minus, e.four_d_plus)).collect();
        assert_eq!(got, vec![(1, 0, 0), (2, -2, 2), (3, -4, 4)]);
    }

    #[test]
    fn rejects_links() {
        let hopf = Diagram::braid_closure("", 2, &[1, 1]).unwrap();
        assert!(matches!(colored_jones(&hopf, 2, sweep()), Err(JonesError::Pd(PdError::NotAKnot { .. }))));
    }
}
