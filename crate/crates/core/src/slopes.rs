//! Degree quasi-polynomials, Jones slopes and the characterization predicates.
//!
//! All degrees are the integers `4d±[J_K(n)]`. A fit stores, per residue class
//! `r = n mod p`, the quadratics `4d₊ = a n² + b n + c` and
//! `4d₋ = a* n² + b* n + c*`. Slopes are `js = {a_r}`, `js* = {a*_r}`, and the
//! linear sets are `jx = {b_r}`, `jx* = {b*_r}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::jones::{degree_sequence, DegreeSequence, JonesConfig, JonesError};
use crate::pd::Diagram;
use crate::state::{adequacy, surface_summary, Side, StateError, StateSummary, SurfaceSummary};

/// Exact rational, serialized as `"p/q"` or `"p"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn int(k: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(k)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl From<BigRational> for Rat {
    fn from(r: BigRational) -> Self {
        Rat(r)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<BigRational>().map(Rat).map_err(serde::de::Error::custom)
    }
}

fn q(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SlopeError {
    #[error("period must be at least 1")]
    Period,
    #[error("fit start must be at least 1")]
    FitStart,
    #[error("residue class {residue} has {have} points at or beyond n = {fit_start}; a quadratic needs 3")]
    InsufficientPoints { residue: usize, have: usize, fit_start: usize },
    #[error(transparent)]
    Jones(#[from] JonesError),
    #[error(transparent)]
    State(#[from] StateError),
}

/// `a n² + b n + c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quadratic {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl fmt::Display for Quadratic {
    /// `6n^2 - 6`, `2n - 2`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (coef, unit) in [(&self.a.0, "n^2"), (&self.b.0, "n"), (&self.c.0, "")] {
            if coef.is_zero() {
                continue;
            }
            let abs = coef.abs();
            let body = match (abs == q(1), unit.is_empty()) {
                (true, false) => unit.to_string(),
                _ => format!("{abs}{unit}"),
            };
            out += &match (out.is_empty(), coef.is_negative()) {
                (true, false) => body,
                (true, true) => format!("-{body}"),
                (false, false) => format!(" + {body}"),
                (false, true) => format!(" - {body}"),
            };
        }
        f.write_str(if out.is_empty() { "0" } else { &out })
    }
}

impl Quadratic {
    pub fn eval(&self, n: usize) -> BigRational {
        let n = q(n as i64);
        &self.a.0 * &n * &n + &self.b.0 * &n + &self.c.0
    }

    /// Newton interpolation through three points with distinct `n`.
    fn through(points: [(usize, i64); 3]) -> Self {
        let [(n1, f1), (n2, f2), (n3, f3)] = points.map(|(n, f)| (q(n as i64), q(f)));
        let d12 = (&f2 - &f1) / (&n2 - &n1);
        let d23 = (&f3 - &f2) / (&n3 - &n2);
        let a = (&d23 - &d12) / (&n3 - &n1);
        let b = &d12 - &a * (&n1 + &n2);
        let c = &f1 - &a * &n1 * &n1 - &b * &n1;
        Quadratic { a: Rat(a), b: Rat(b), c: Rat(c) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueFit {
    pub residue: usize,
    /// Fit of `4d₊`.
    pub plus: Quadratic,
    /// Fit of `4d₋`.
    pub minus: Quadratic,
    /// The three `n` used for interpolation.
    pub support: [usize; 3],
}

/// Observed minus predicted at a point not used for interpolation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub n: usize,
    pub plus: Rat,
    pub minus: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasiQuadratic {
    pub period: usize,
    pub fit_start: usize,
    pub residues: Vec<ResidueFit>,
    pub residuals: Vec<Residual>,
    /// All held-out residuals are zero.
    pub fit_ok: bool,
}

impl QuasiQuadratic {
    pub fn residue(&self, n: usize) -> &ResidueFit {
        &self.residues[n % self.period]
    }
}

pub fn fit_quasi_quadratic(seq: &DegreeSequence, period: usize, fit_start: usize) -> Result<QuasiQuadratic, SlopeError> {
    if period == 0 {
        return Err(SlopeError::Period);
    }
    if fit_start == 0 {
        return Err(SlopeError::FitStart);
    }
    let mut points: Vec<_> = seq.entries.iter().filter(|e| e.n >= fit_start).copied().collect();
    points.sort_by_key(|e| e.n);
    let mut residues = Vec::with_capacity(period);
    let mut residuals = Vec::new();
    for r in 0..period {
        let class: Vec<_> = points.iter().filter(|e| e.n % period == r).collect();
        if class.len() < 3 {
            return Err(SlopeError::InsufficientPoints { residue: r, have: class.len(), fit_start });
        }
        let pick = |f: fn(&crate::jones::DegreeEntry) -> i64| {
            [0, 1, 2].map(|i| (class[i].n, f(class[i])))
        };
        let plus = Quadratic::through(pick(|e| e.four_d_plus));
        let minus = Quadratic::through(pick(|e| e.four_d_minus));
        for e in &class[3..] {
            residuals.push(Residual {
                n: e.n,
                plus: Rat(q(e.four_d_plus) - plus.eval(e.n)),
                minus: Rat(q(e.four_d_minus) - minus.eval(e.n)),
            });
        }
        let support = [class[0].n, class[1].n, class[2].n];
        residues.push(ResidueFit { residue: r, plus, minus, support });
    }
    residuals.sort_by_key(|r| r.n);
    let fit_ok = residuals.iter().all(|r| r.plus.is_zero() && r.minus.is_zero());
    Ok(QuasiQuadratic { period, fit_start, residues, residuals, fit_ok })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeData {
    pub js: BTreeSet<Rat>,
    pub js_star: BTreeSet<Rat>,
    pub jx: BTreeSet<Rat>,
    pub jx_star: BTreeSet<Rat>,
}

pub fn slopes(fit: &QuasiQuadratic) -> SlopeData {
    let collect = |f: fn(&ResidueFit) -> &Rat| fit.residues.iter().map(f).cloned().collect();
    SlopeData {
        js: collect(|r| &r.plus.a),
        js_star: collect(|r| &r.minus.a),
        jx: collect(|r| &r.plus.b),
        jx_star: collect(|r| &r.minus.b),
    }
}

/// Diagram bounds at one color.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    pub four_d_minus: i64,
    pub four_d_plus: i64,
    pub lower: i64,
    pub upper: i64,
    pub lower_holds: bool,
    pub upper_holds: bool,
    pub lower_equal: bool,
    pub upper_equal: bool,
    /// `4d₋ - (-2c₋n² + 2(c - v_A + 1)n)`, only for an A-inadequate diagram.
    pub lee_lower_residual: Option<i64>,
    /// `4d₊ - (2c₊n² + 2(v_B - c - 1)n)`, only for a B-inadequate diagram.
    pub lee_upper_residual: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub c_plus: usize,
    pub c_minus: usize,
    #[serde(rename = "v_A")]
    pub v_a: usize,
    #[serde(rename = "v_B")]
    pub v_b: usize,
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub rows: Vec<BoundRow>,
    /// Period used to read the Lee residuals as a periodic function.
    pub lee_period: usize,
    /// Lower Lee bound holds with `e(n) = e(n₀)`, `n₀` the first computed `n` of each residue class.
    pub lee_lower_holds: Option<bool>,
    pub lee_upper_holds: Option<bool>,
}

impl BoundReport {
    /// Bounds hold everywhere, with equality on each adequate side.
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(|r| {
            r.lower_holds && r.upper_holds && (!self.a_adequate || r.lower_equal) && (!self.b_adequate || r.upper_equal)
        })
    }
}

/// Lower and upper diagram bounds for `4d₋` and `4d₊`.
pub fn diagram_bounds(c_plus: i64, c_minus: i64, v_a: i64, v_b: i64, n: i64) -> (i64, i64) {
    let c = c_plus + c_minus;
    let lower = -2 * c_minus * n * n + 2 * (c - v_a) * n + 2 * v_a - 2 * c_plus;
    let upper = 2 * c_plus * n * n + 2 * (v_b - c) * n + 2 * c_minus - 2 * v_b;
    (lower, upper)
}

fn periodic_bound(rows: &[BoundRow], period: usize, residual: fn(&BoundRow) -> Option<i64>, upper: bool) -> Option<bool> {
    let mut first: BTreeMap<usize, i64> = BTreeMap::new();
    let mut holds = true;
    for row in rows {
        let e = residual(row)?;
        let e0 = *first.entry(row.n % period).or_insert(e);
        holds &= if upper { e <= e0 } else { e >= e0 };
    }
    Some(holds)
}

pub fn verify_degree_bounds(d: &Diagram, seq: &DegreeSequence, lee_period: usize) -> Result<BoundReport, SlopeError> {
    if lee_period == 0 {
        return Err(SlopeError::Period);
    }
    let summary = adequacy(d)?;
    let (cp, cm) = d.crossing_counts();
    let (cp, cm, va, vb) = (cp as i64, cm as i64, summary.v_A as i64, summary.v_B as i64);
    let c = cp + cm;
    let mut entries = seq.entries.clone();
    entries.sort_by_key(|e| e.n);
    let rows: Vec<BoundRow> = entries
        .iter()
        .map(|e| {
            let n = e.n as i64;
            let (lower, upper) = diagram_bounds(cp, cm, va, vb, n);
            BoundRow {
                n: e.n,
                four_d_minus: e.four_d_minus,
                four_d_plus: e.four_d_plus,
                lower,
                upper,
                lower_holds: e.four_d_minus >= lower,
                upper_holds: e.four_d_plus <= upper,
                lower_equal: e.four_d_minus == lower,
                upper_equal: e.four_d_plus == upper,
                lee_lower_residual: (!summary.a_adequate)
                    .then(|| e.four_d_minus - (-2 * cm * n * n + 2 * (c - va + 1) * n)),
                lee_upper_residual: (!summary.b_adequate)
                    .then(|| e.four_d_plus - (2 * cp * n * n + 2 * (vb - c - 1) * n)),
            }
        })
        .collect();
    Ok(BoundReport {
        c_plus: cp as usize,
        c_minus: cm as usize,
        v_a: summary.v_A,
        v_b: summary.v_B,
        a_adequate: summary.a_adequate,
        b_adequate: summary.b_adequate,
        lee_period,
        lee_lower_holds: periodic_bound(&rows, lee_period, |r| r.lee_lower_residual, false),
        lee_upper_holds: periodic_bound(&rows, lee_period, |r| r.lee_upper_residual, true),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    True,
    False,
    NotApplicable,
}

impl Outcome {
    fn from_bool(b: bool) -> Self {
        if b {
            Outcome::True
        } else {
            Outcome::False
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::True => "true",
            Outcome::False => "false",
            Outcome::NotApplicable => "not applicable",
        })
    }
}

/// A predicate's outcome with every number substituted into its equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub equations: Vec<String>,
    /// In the order the numbers enter the equations.
    pub witnesses: IndexMap<String, Rat>,
}

impl Verdict {
    pub fn is_true(&self) -> bool {
        self.outcome == Outcome::True
    }

    fn not_applicable(equations: &[&str]) -> Self {
        Verdict {
            outcome: Outcome::NotApplicable,
            equations: equations.iter().map(|s| s.to_string()).collect(),
            witnesses: IndexMap::new(),
        }
    }
}

/// First pair `(u, v) ∈ left × right` with `u - v = target`, else the pair closest to it.
fn pair_with_difference(left: &BTreeSet<Rat>, right: &BTreeSet<Rat>, target: &BigRational) -> (bool, Rat, Rat) {
    let mut best: Option<(BigRational, &Rat, &Rat)> = None;
    for u in left {
        for v in right {
            let miss = (&u.0 - &v.0 - target).abs();
            if best.as_ref().map_or(true, |(m, _, _)| miss < *m) {
                best = Some((miss, u, v));
            }
        }
    }
    let (miss, u, v) = best.expect("fits have at least one residue class");
    (miss.is_zero(), u.clone(), v.clone())
}

fn witnesses(pairs: &[(&str, Rat)]) -> IndexMap<String, Rat> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// `K` adequate iff some `s - s* = 2c` and some `x - x* = 2(2 - 2g_T - c)`.
pub fn check_adequate_characterization(data: &SlopeData, c: usize, g_t: usize) -> Verdict {
    const EQ: [&str; 2] = ["s - s* = 2c", "x - x* = 2(2 - 2g_T - c)"];
    if c == 0 {
        return Verdict::not_applicable(&EQ);
    }
    let (c, g) = (c as i64, g_t as i64);
    let (ok_s, s, s_star) = pair_with_difference(&data.js, &data.js_star, &q(2 * c));
    let (ok_x, x, x_star) = pair_with_difference(&data.jx, &data.jx_star, &q(2 * (2 - 2 * g - c)));
    Verdict {
        outcome: Outcome::from_bool(ok_s && ok_x),
        equations: EQ.iter().map(|s| s.to_string()).collect(),
        witnesses: witnesses(&[
            ("s", s.clone()),
            ("s*", s_star.clone()),
            ("s - s*", Rat(&s.0 - &s_star.0)),
            ("2c", Rat::int(2 * c)),
            ("x", x.clone()),
            ("x*", x_star.clone()),
            ("x - x*", Rat(&x.0 - &x_star.0)),
            ("2(2 - 2g_T - c)", Rat::int(2 * (2 - 2 * g - c))),
            ("c", Rat::int(c)),
            ("g_T", Rat::int(g)),
        ]),
    }
}

/// `K` alternating iff some `s - s* = 2c` and some `x - x* = 4 - 2c`.
pub fn check_alternating_characterization(data: &SlopeData, c: usize) -> Verdict {
    const EQ: [&str; 2] = ["s - s* = 2c", "x - x* = 4 - 2c"];
    if c == 0 {
        return Verdict::not_applicable(&EQ);
    }
    let c = c as i64;
    let (ok_s, s, s_star) = pair_with_difference(&data.js, &data.js_star, &q(2 * c));
    let (ok_x, x, x_star) = pair_with_difference(&data.jx, &data.jx_star, &q(4 - 2 * c));
    Verdict {
        outcome: Outcome::from_bool(ok_s && ok_x),
        equations: EQ.iter().map(|s| s.to_string()).collect(),
        witnesses: witnesses(&[
            ("s", s.clone()),
            ("s*", s_star.clone()),
            ("s - s*", Rat(&s.0 - &s_star.0)),
            ("2c", Rat::int(2 * c)),
            ("x", x.clone()),
            ("x*", x_star.clone()),
            ("x - x*", Rat(&x.0 - &x_star.0)),
            ("4 - 2c", Rat::int(4 - 2 * c)),
            ("c", Rat::int(c)),
        ]),
    }
}

/// `(s₁, s₂)` per residue class, where `d₊ - d₋ = s₁n² + s₂n + s₃`.
pub fn s_coefficients(fit: &QuasiQuadratic) -> Vec<(Rat, Rat)> {
    let four = q(4);
    fit.residues
        .iter()
        .map(|r| {
            (
                Rat((&r.plus.a.0 - &r.minus.a.0) / &four),
                Rat((&r.plus.b.0 - &r.minus.b.0) / &four),
            )
        })
        .collect()
}

fn s_form(fit: &QuasiQuadratic, c: usize, equations: [&str; 2], test: impl Fn(&BigRational, &BigRational) -> bool) -> Verdict {
    if c == 0 {
        return Verdict::not_applicable(&equations);
    }
    let coeffs = s_coefficients(fit);
    let hit = coeffs.iter().position(|(s1, s2)| test(&s1.0, &s2.0));
    let (s1, s2) = coeffs[hit.unwrap_or(0)].clone();
    Verdict {
        outcome: Outcome::from_bool(hit.is_some()),
        equations: equations.iter().map(|s| s.to_string()).collect(),
        witnesses: witnesses(&[
            ("s1", s1),
            ("s2", s2),
            ("c", Rat::int(c as i64)),
            ("residue", Rat::int(fit.residues[hit.unwrap_or(0)].residue as i64)),
        ]),
    }
}

/// `s₁ = c/2` and `s₂ = 1 - g_T - c/2` in some residue class.
pub fn check_adequate_s_form(fit: &QuasiQuadratic, c: usize, g_t: usize) -> Verdict {
    let half_c = q(c as i64) / q(2);
    let mut v = s_form(fit, c, ["s1 = c/2", "s2 = 1 - g_T - c/2"], |s1, s2| {
        *s1 == half_c && *s2 == q(1 - g_t as i64) - &half_c
    });
    if v.outcome != Outcome::NotApplicable {
        v.witnesses.insert("g_T".into(), Rat::int(g_t as i64));
        v.witnesses.move_index(v.witnesses.len() - 1, 3);
    }
    v
}

/// `2s₁ + 2s₂ = 2` and `2s₁ = c` in some residue class.
pub fn check_alternating_s_form(fit: &QuasiQuadratic, c: usize) -> Verdict {
    s_form(fit, c, ["2s1 + 2s2 = 2", "2s1 = c"], |s1, s2| {
        q(2) * s1 + q(2) * s2 == q(2) && q(2) * s1 == q(c as i64)
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceVerdicts {
    /// `χ(S_A) + χ(S_B) + c = 2 - 2g_T`.
    pub adequate_form: Verdict,
    /// `χ(S_A) + χ(S_B) + (s - s*)/2 = 2` and `s - s* = 2c`.
    pub alternating_form: Verdict,
}

/// State-surface equations; `s = slope(S_B)`, `s* = slope(S_A)`, and `c`, `g_T` are the knot's.
pub fn check_surface_equations(s_a: &SurfaceSummary, s_b: &SurfaceSummary, c: usize, g_t: usize) -> SurfaceVerdicts {
    let (c, g) = (c as i64, g_t as i64);
    let chi = s_a.euler + s_b.euler;
    let diff = s_b.slope - s_a.slope;
    let lhs = q(chi) + q(diff) / q(2);
    let adequate = witnesses(&[
        ("chi(S_A)", Rat::int(s_a.euler)),
        ("chi(S_B)", Rat::int(s_b.euler)),
        ("c", Rat::int(c)),
        ("lhs", Rat::int(chi + c)),
        ("g_T", Rat::int(g)),
        ("rhs", Rat::int(2 - 2 * g)),
    ]);
    let alternating = witnesses(&[
        ("chi(S_A)", Rat::int(s_a.euler)),
        ("chi(S_B)", Rat::int(s_b.euler)),
        ("s", Rat::int(s_b.slope)),
        ("s*", Rat::int(s_a.slope)),
        ("s - s*", Rat::int(diff)),
        ("lhs", Rat(lhs.clone())),
        ("rhs", Rat::int(2)),
        ("2c", Rat::int(2 * c)),
    ]);
    SurfaceVerdicts {
        adequate_form: Verdict {
            outcome: Outcome::from_bool(chi + c == 2 - 2 * g),
            equations: vec!["chi(S_A) + chi(S_B) + c = 2 - 2g_T".into()],
            witnesses: adequate,
        },
        alternating_form: Verdict {
            outcome: Outcome::from_bool(lhs == q(2) && diff == 2 * c),
            equations: vec!["chi(S_A) + chi(S_B) + (s - s*)/2 = 2".into(), "s - s* = 2c".into()],
            witnesses: alternating,
        },
    }
}

/// Parameters of the full per-knot pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineConfig {
    pub n_max: usize,
    pub period: usize,
    pub fit_start: usize,
    pub jones: JonesConfig,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self { n_max: 4, period: 1, fit_start: 1, jones: JonesConfig::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterizationReport {
    pub label: String,
    /// Crossing count of the supplied diagram, taken as `c(K)`.
    pub c: usize,
    /// Turaev genus of the supplied diagram, taken as `g_T(K)`.
    #[serde(rename = "g_T")]
    pub g_t: usize,
    pub note: String,
    pub summary: StateSummary,
    pub surfaces: [SurfaceSummary; 2],
    pub degrees: DegreeSequence,
    pub fit: QuasiQuadratic,
    pub slopes: SlopeData,
    pub bounds: BoundReport,
    pub verdicts: BTreeMap<String, Verdict>,
}

impl CharacterizationReport {
    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.get(name)
    }
}

pub const VERDICT_NAMES: [&str; 6] = [
    "adequate",
    "adequate_s",
    "alternating",
    "alternating_s",
    "surface_adequate",
    "surface_alternating",
];

/// Runs degrees, fit, slopes, bounds and every predicate on one diagram.
pub fn characterize(d: &Diagram, config: PipelineConfig) -> Result<CharacterizationReport, SlopeError> {
    let summary = adequacy(d)?;
    let s_a = surface_summary(d, Side::A)?;
    let s_b = surface_summary(d, Side::B)?;
    let degrees = degree_sequence(d, config.n_max, config.jones)?;
    let fit = fit_quasi_quadratic(&degrees, config.period, config.fit_start)?;
    let data = slopes(&fit);
    let bounds = verify_degree_bounds(d, &degrees, config.period)?;
    let c = d.crossing_count();
    let g_t = summary.g_T_diagram;
    let surfaces = check_surface_equations(&s_a, &s_b, c, g_t);
    let verdicts = BTreeMap::from([
        ("adequate".to_string(), check_adequate_characterization(&data, c, g_t)),
        ("adequate_s".to_string(), check_adequate_s_form(&fit, c, g_t)),
        ("alternating".to_string(), check_alternating_characterization(&data, c)),
        ("alternating_s".to_string(), check_alternating_s_form(&fit, c)),
        ("surface_adequate".to_string(), surfaces.adequate_form),
        ("surface_alternating".to_string(), surfaces.alternating_form),
    ]);
    Ok(CharacterizationReport {
        label: d.label().to_string(),
        c,
        g_t,
        note: "c(K) and g_T(K) are taken from the supplied diagram, assumed minimal; no minimality search is done".into(),
        summary,
        surfaces: [s_a, s_b],
        degrees,
        fit,
        slopes: data,
        bounds,
        verdicts,
    })
}
