//! Run every characterization predicate on the catalog.

use jones_slopes::catalog::builtin;
use jones_slopes::slopes::{characterize, PipelineConfig, VERDICT_NAMES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    print!("{:<20}", "knot");
    for name in VERDICT_NAMES {
        print!(" {name:>19}");
    }
    println!();
    for entry in builtin().entries() {
        let config = PipelineConfig { n_max: entry.n_max, ..Default::default() };
        let report = characterize(&entry.minimal_diagram, config)?;
        print!("{:<20}", entry.label);
        for name in VERDICT_NAMES {
            print!(" {:>19}", report.verdicts[name].outcome.to_string());
        }
        println!();
    }

    let report = characterize(builtin().diagram("nonalt_adequate_10")?, PipelineConfig { n_max: 3, ..Default::default() })?;
    let w = &report.verdicts["alternating"].witnesses;
    println!("nonalt_adequate_10: x - x* = {} but 4 - 2c = {}", w["x - x*"], w["4 - 2c"]);
    Ok(())
}
