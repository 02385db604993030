//! Compare the exhaustive state sum with the sweep engine and show the caps.

use std::time::Instant;

use jones_slopes::bracket::{bracket_statesum, bracket_sweep, sweep_order};
use jones_slopes::catalog::builtin;
use jones_slopes::{bracket, Caps, Engine};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for entry in builtin().entries() {
        let d = &entry.minimal_diagram;
        let a = bracket_statesum(d, 24)?;
        let b = bracket_sweep(d, 16)?;
        assert_eq!(a.value, b.value);
        println!("{:<20} <D> = {}", entry.label, a.value);
    }

    let knot = builtin().diagram("6_2")?;
    for m in 1..=3 {
        let cable = knot.cable(m)?;
        let order = sweep_order(&cable);
        let start = Instant::now();
        let r = bracket(&cable, Engine::Auto, Caps::default())?;
        println!(
            "6_2 cable({m}): {} crossings, sweep width {}, auto chose {:?}, {} terms in {:.2?}",
            cable.crossing_count(),
            order.width,
            r.engine,
            r.value.len(),
            start.elapsed()
        );
    }

    let big = knot.cable(3)?;
    println!("state sum on 54 crossings: {}", bracket_statesum(&big, 24).unwrap_err());
    println!("sweep with width cap 8: {}", bracket_sweep(&big, 8).unwrap_err());
    Ok(())
}
