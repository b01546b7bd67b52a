//! Build the bipartite coset graph of an amalgam (L, R) inside S_7 and
//! print its invariants plus a DOT snippet.

use arclab::graph::build_coset_graph;
use arclab::io::load_generators;
use arclab::Result;
use std::path::Path;

fn main() -> Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let g = load_generators(data.join("s7_g.gens"))?;
    let l = load_generators(data.join("s7_l.gens"))?;
    let r = load_generators(data.join("s7_r.gens"))?;
    println!("|G| = {}, |L| = {}, |R| = {}", g.order(), l.order(), r.order());

    let cg = build_coset_graph(&g, &l, &r)?;
    println!(
        "coset graph: {} + {} vertices, {} edges",
        cg.left_count(),
        cg.right_count(),
        cg.graph.edge_count()
    );
    println!(
        "valencies: left {}, right {}",
        cg.left_valency(),
        cg.right_valency()
    );
    println!("connected: {}", cg.is_connected()?);

    let dot = cg.to_dot();
    println!("--- first lines of the DOT export ---");
    for line in dot.lines().take(4) {
        println!("{line}");
    }
    Ok(())
}
