//! All-A and all-B states: state graphs, adequacy, Turaev genus and state surfaces.

use jones_slopes::catalog::builtin;
use jones_slopes::state::{state_graph, turaev_genus};
use jones_slopes::{adequacy, surface_summary, Side};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<22} {:>3} {:>4} {:>4} {:>5} {:>5} {:>4} {:>8} {:>8}", "diagram", "c", "v_A", "v_B", "A-adq", "B-adq", "g_T", "slope_A", "slope_B");
    for name in ["0_1", "3_1", "3_1/kink+", "3_1/kink-", "4_1", "6_3", "6_3/r2", "nonalt_adequate_10"] {
        let d = builtin().diagram(name)?;
        let s = adequacy(d)?;
        let (a, b) = (surface_summary(d, Side::A)?, surface_summary(d, Side::B)?);
        assert_eq!(s.g_T_diagram, turaev_genus(s.v_A, s.v_B, d.crossing_count()));
        println!(
            "{:<22} {:>3} {:>4} {:>4} {:>5} {:>5} {:>4} {:>8} {:>8}",
            name,
            d.crossing_count(),
            s.v_A,
            s.v_B,
            s.a_adequate,
            s.b_adequate,
            s.g_T_diagram,
            a.slope,
            b.slope
        );
    }

    let kinked = builtin().diagram("3_1/kink+")?;
    let g = state_graph(kinked, Side::B);
    println!("3_1/kink+ G_B: {} vertices, edges {:?}, self-loops at crossings {:?}", g.vertices, g.edges, g.self_loops());
    println!("{}", serde_json::to_string(&adequacy(kinked)?)?);
    Ok(())
}
