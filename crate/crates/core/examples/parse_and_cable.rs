//! Parse a PD code, inspect orientation data, mirror it and build blackboard cables.

use jones_slopes::pd::parse_pd;
use jones_slopes::Diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trefoil = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")?.with_label("3_1");
    let (cp, cm) = trefoil.crossing_counts();
    println!("{}: {} crossings, c+ = {cp}, c- = {cm}, writhe {}", trefoil.label(), trefoil.crossing_count(), trefoil.writhe()?);
    println!("normalized PD: {trefoil}");

    let mirror = trefoil.mirror();
    println!("mirror: {mirror}  writhe {}", mirror.writhe()?);

    for m in 0..=3 {
        let cable = trefoil.cable(m)?;
        let w = if cable.is_knot() { cable.writhe()?.to_string() } else { "-".into() };
        println!("cable({m}): {:>2} crossings, {} components, knot writhe {w}", cable.crossing_count(), cable.components());
    }

    // The JSON wire form round-trips through serde.
    let json = serde_json::to_string(&trefoil)?;
    let back: Diagram = serde_json::from_str(&json)?;
    assert_eq!(back.crossings(), trefoil.crossings());
    println!("json: {json}");

    match parse_pd("X(1,2,3,7) X(2,1,3,4)") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
