//! Locked catalog values, compared exactly, and Jones polynomials against a knot table.

use jones_slopes::catalog::builtin;
use jones_slopes::jones::unknot_closed_form;
use jones_slopes::{adequacy, bracket, colored_jones, degree_sequence, Caps, Engine, JonesConfig, LaurentPoly};

/// Reduced Jones polynomials as tabulated, `(power of q, coefficient)`.
const TABLE: [(&str, &[(i64, i64)]); 7] = [
    ("3_1", &[(-4, -1), (-3, 1), (-1, 1)]),
    ("4_1", &[(-2, 1), (-1, -1), (0, 1), (1, -1), (2, 1)]),
    ("5_1", &[(-7, -1), (-6, 1), (-5, -1), (-4, 1), (-2, 1)]),
    ("5_2", &[(-6, -1), (-5, 1), (-4, -1), (-3, 2), (-2, -1), (-1, 1)]),
    ("6_1", &[(-4, 1), (-3, -1), (-2, 1), (-1, -2), (0, 2), (1, -1), (2, 1)]),
    ("6_2", &[(-1, 1), (0, -1), (1, 2), (2, -2), (3, 2), (4, -2), (5, 1)]),
    ("6_3", &[(-3, -1), (-2, 2), (-1, -2), (0, 3), (1, -2), (2, 2), (3, -1)]),
];

/// `V(t)·(t^½ + t^-½)` with `t^k = A^(-4k)`.
fn table_j2(v: &[(i64, i64)]) -> LaurentPoly {
    let reduced = LaurentPoly::from_terms(v.iter().map(|&(k, c)| (-4 * k, c)));
    &reduced * &unknot_closed_form(2).unwrap()
}

/// Tables do not fix chirality consistently; each stored diagram realizes either `V(t)` or `V(t⁻¹)`,
/// pinned here.
const MIRRORED: [&str; 6] = ["3_1", "4_1", "5_1", "5_2", "6_1", "6_3"];

#[test]
fn jones_matches_table() {
    for (label, v) in TABLE {
        let d = &builtin().get(label).unwrap().minimal_diagram;
        let j2 = colored_jones(d, 2, JonesConfig::default()).unwrap();
        let table = table_j2(v);
        let want = if MIRRORED.contains(&label) { table.invert_variable() } else { table };
        assert_eq!(j2, want, "{label}");
    }
}

#[test]
fn locked_values() {
    for e in builtin().entries() {
        let Some(x) = &e.expected else { continue };
        let d = &e.minimal_diagram;
        assert_eq!(d.writhe().unwrap(), x.writhe, "{}", e.label);
        let (cp, cm) = d.crossing_counts();
        assert_eq!([cp, cm], x.crossing_counts, "{}", e.label);
        assert_eq!(adequacy(d).unwrap(), x.summary, "{}", e.label);
        assert_eq!(colored_jones(d, 2, JonesConfig::default()).unwrap(), x.jones_2, "{}", e.label);
        let seq = degree_sequence(d, e.n_max, JonesConfig::default()).unwrap();
        let got: Vec<[i64; 3]> = seq.entries.iter().map(|r| [r.n as i64, r.four_d_minus, r.four_d_plus]).collect();
        assert_eq!(got, x.degrees, "{}", e.label);
    }
}

#[test]
fn every_entry_is_locked() {
    for e in builtin().entries() {
        assert!(e.expected.is_some(), "{}", e.label);
        assert_eq!(e.expected.as_ref().unwrap().degrees.len(), e.n_max, "{}", e.label);
    }
}

#[test]
fn nonalternating_entry() {
    let e = builtin().get("nonalt_adequate_10").unwrap();
    let d = &e.minimal_diagram;
    assert!(!e.alternating && !d.is_alternating());
    let s = adequacy(d).unwrap();
    assert!(s.adequate());
    assert_eq!(s.g_T_diagram, 1);
    // The unreduced Jones polynomial by brute force, independent of cabling.
    let w = d.writhe().unwrap();
    let direct = bracket(d, Engine::Statesum, Caps::default()).unwrap().value.shift(-3 * w);
    let sign = if (w + 1) % 2 == 0 { 1 } else { -1 };
    assert_eq!(colored_jones(d, 2, JonesConfig::default()).unwrap(), direct.scale_i64(sign));
}

#[test]
fn kinked_unknots() {
    let e = builtin().get("0_1").unwrap();
    for v in &e.variant_diagrams {
        assert_eq!(v.diagram.crossing_count(), 1, "{}", v.name);
        for n in 1..=4 {
            assert_eq!(colored_jones(&v.diagram, n, JonesConfig::default()).unwrap(), unknot_closed_form(n).unwrap());
        }
    }
}
