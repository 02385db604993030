//! Fit degree quasi-polynomials and compare them with the diagram bounds.

use jones_slopes::catalog::builtin;
use jones_slopes::jones::{degree_sequence, JonesConfig};
use jones_slopes::slopes::{fit_quasi_quadratic, slopes, verify_degree_bounds};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = JonesConfig::default();
    for name in ["3_1", "5_2", "6_2"] {
        let d = builtin().diagram(name)?;
        let seq = degree_sequence(d, 4, config)?;
        let fit = fit_quasi_quadratic(&seq, 1, 1)?;
        let r = &fit.residues[0];
        let s = slopes(&fit);
        println!(
            "{name}: 4d+ = {}, 4d- = {}, held-out ok {}, js {:?} js* {:?}",
            r.plus, r.minus, fit.fit_ok,
            s.js.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            s.js_star.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        );
    }

    // A kinked diagram is B-inadequate: its upper bound is strict beyond n = 1.
    let kinked = builtin().diagram("3_1/kink+")?;
    let seq = degree_sequence(kinked, 4, config)?;
    let report = verify_degree_bounds(kinked, &seq, 1)?;
    for row in &report.rows {
        println!(
            "3_1/kink+ n={}: 4d+ = {:>3} <= {:>3}, residual e*(n) = {:?}",
            row.n, row.four_d_plus, row.upper, row.lee_upper_residual
        );
    }
    println!("refined upper bound holds: {:?}", report.lee_upper_holds);
    Ok(())
}
