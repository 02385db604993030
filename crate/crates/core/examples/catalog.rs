//! Browse the built-in catalog and check that variants share the invariant.

use jones_slopes::catalog::{apply_moves, builtin};
use jones_slopes::jones::{colored_jones, JonesConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = JonesConfig::default();
    for entry in builtin().entries() {
        let base = colored_jones(&entry.minimal_diagram, 3, config)?;
        let mut names = Vec::new();
        for v in &entry.variant_diagrams {
            let rebuilt = apply_moves(&entry.minimal_diagram, &v.moves)?;
            assert_eq!(rebuilt.crossings(), v.diagram.crossings());
            assert_eq!(colored_jones(&v.diagram, 3, config)?, base);
            names.push(format!("{}({})", v.name, v.diagram.crossing_count()));
        }
        println!("{:<20} {:>2} crossings  {:<40} {}", entry.label, entry.minimal_diagram.crossing_count(), entry.description, names.join(" "));
    }
    println!("lookup error: {}", builtin().get("9_42").unwrap_err());
    Ok(())
}
