//! Verify local s-arc-transitivity by both routes: the amalgam
//! criterion (2-transitive coset actions) and the direct orbit count on
//! the arcs of the materialized graph.

use arclab::arcs::{is_locally_2at_amalgam, is_locally_s_arc_transitive_direct, max_local_s};
use arclab::graph::build_coset_graph;
use arclab::io::load_generators;
use arclab::Result;
use std::path::Path;

fn main() -> Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let g = load_generators(data.join("s7_g.gens"))?;
    let l = load_generators(data.join("s7_l.gens"))?;
    let r = load_generators(data.join("s7_r.gens"))?;

    // Route 1: amalgam-level, no graph needed.
    let meet = l.intersect_small(&r, 1_000_000)?;
    let amalgam = is_locally_2at_amalgam(&l, &r, &meet)?;
    println!("amalgam criterion says locally 2-arc-transitive: {amalgam}");

    // Route 2: direct, on the 336-vertex graph.
    let cg = build_coset_graph(&g, &l, &r)?;
    for s in 1..=3 {
        let direct = is_locally_s_arc_transitive_direct(&cg, s)?;
        println!(
            "direct check at s = {s}: {} (arc orbit counts {:?})",
            direct.verdict,
            direct
                .per_orbit
                .iter()
                .map(|o| o.orbit_count)
                .collect::<Vec<_>>()
        );
    }
    println!("largest s with local s-arc-transitivity: {}", max_local_s(&cg, 6)?);
    Ok(())
}
