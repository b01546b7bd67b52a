//! Run the straight-nondiagonal amalgam builder for the smallest family
//! member and inspect the output: amalgam orders, valencies, the local
//! 2-arc-transitivity verdict, and the diagonal type of both socle
//! stabilizer parts.

use arclab::construct::construct_straight_nondiagonal;
use arclab::pa::classify_diagonal;
use arclab::Result;

fn main() -> Result<()> {
    let out = construct_straight_nondiagonal(3)?;
    println!("wreath degree: {}", out.product.frame.degree());
    println!("|G|       = {}", out.product.group.order());
    println!("|G_alpha| = {}", out.g_alpha.order());
    println!("|G_beta|  = {}", out.g_beta.order());
    println!("|G_ab|    = {}", out.g_alpha_beta.order());
    println!(
        "valencies: {} and {}",
        out.g_alpha.order() / out.g_alpha_beta.order(),
        out.g_beta.order() / out.g_alpha_beta.order()
    );
    println!("locally 2-arc-transitive: {}", out.local_2at()?);
    println!("|N| = {}", out.n.order());
    println!(
        "N_alpha is {:?}, N_beta is {:?}",
        classify_diagonal(&out.product, &out.n_alpha)?.verdict,
        classify_diagonal(&out.product, &out.n_beta)?.verdict
    );
    Ok(())
}
