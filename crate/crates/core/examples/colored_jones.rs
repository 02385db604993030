//! Colored Jones polynomials by Chebyshev cabling, with per-cable costs.

use jones_slopes::jones::{chebyshev, colored_jones, colored_jones_detailed, unknot_closed_form, JonesConfig};
use jones_slopes::{Diagram, Sign};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=5 {
        println!("S_{}(x) coefficients: {:?}", n - 1, chebyshev(n)?.coeffs);
    }

    let config = JonesConfig::default();
    for n in 1..=4 {
        let j = colored_jones(&Diagram::unknot(), n, config)?;
        assert_eq!(j, unknot_closed_form(n)?);
        println!("unknot J({n}) = {}", j.to_t_string());
    }

    let trefoil = jones_slopes::catalog::builtin().diagram("3_1")?;
    for n in 1..=4 {
        let j = colored_jones_detailed(trefoil, n, config)?;
        let (lo, hi) = j.value.t_degrees()?;
        let costs: Vec<String> = j.cables.iter().map(|c| format!("m={} {:?} {}", c.m, c.engine, c.states_or_width)).collect();
        println!("3_1 J({n}): 4d- = {lo}, 4d+ = {hi}, cables [{}]", costs.join(", "));
    }
    println!("3_1 J(2) = {}", colored_jones(trefoil, 2, config)?.to_t_string());

    // A kink changes the diagram but not the invariant.
    let kinked = trefoil.with_kink(2, Sign::Negative)?;
    assert_eq!(colored_jones(&kinked, 3, config)?, colored_jones(trefoil, 3, config)?);

    // The mirror image swaps t and 1/t.
    let mirror = colored_jones(&trefoil.mirror(), 2, config)?;
    println!("mirror J(2) = {}", mirror.to_t_string());
    Ok(())
}
