//! Exact group computation with the deterministic stabilizer chain:
//! orders, membership tests, orbits and canonical coset representatives.

use arclab::groups::make_psl2;
use arclab::{Perm, Result};
use num_bigint::BigUint;

fn main() -> Result<()> {
    // PSL(2,7) acting on the 8 points of the projective line.
    let g = make_psl2(7)?;
    println!("|PSL(2,7)| = {}", g.order());
    println!("base of the stabilizer chain: {:?}", g.chain().base());

    // Membership is decided exactly by sifting through the chain.
    let elt = g.generators()[0].compose(&g.generators()[1])?;
    println!("product of the generators is a member: {}", g.contains(&elt)?);
    let odd = Perm::parse_cycles("(1,2)", 8)?;
    println!("a transposition is a member: {}", g.contains(&odd)?);

    // Orbit–stabilizer: |G| = |orbit| * |stabilizer|.
    let (orbit, _) = g.orbit(0)?;
    let stab = g.stabilizer(&[0])?;
    println!(
        "orbit of point 1 has size {}, stabilizer order {} ({} = {} * {})",
        orbit.len(),
        stab.order(),
        g.order(),
        orbit.len(),
        stab.order()
    );
    assert_eq!(g.order(), stab.order() * BigUint::from(orbit.len()));

    // Canonical coset representatives: two elements of the same coset of
    // the point stabilizer map to the same representative.
    let x = g.generators()[0].clone();
    let s = stab.generators()[0].clone();
    let rep_x = stab.chain().minimal_coset_rep(&x);
    let rep_sx = stab.chain().minimal_coset_rep(&s.compose(&x)?);
    println!(
        "canonical representative is coset-invariant: {}",
        rep_x == rep_sx
    );
    Ok(())
}
