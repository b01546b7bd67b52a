//! Classify subgroups of a base power T^k as straight diagonal, twisted
//! diagonal, or nondiagonal, and produce the product-action report with
//! its block-witness chain.

use arclab::coset::coset_action;
use arclab::pa::{classify_diagonal, pa_report, ProductGroup};
use arclab::wreath::WreathFrame;
use arclab::{Perm, PermGroup, Result};

fn main() -> Result<()> {
    // Work inside S_3 Wr C_2 on 6 points: two blocks of size 3.
    let frame = WreathFrame::new(3, 2)?;
    let p = |s: &str| Perm::parse_cycles(s, 3);

    let straight = PermGroup::new(6, vec![frame.diagonal(&p("(1,2,3)")?)?])?;
    let twisted = PermGroup::new(
        6,
        vec![frame.base_element(&[p("(1,2,3)")?, p("(1,3,2)")?])?],
    )?;
    let nondiag = PermGroup::new(
        6,
        vec![
            frame.base_element(&[p("(1,2,3)")?, Perm::identity(3)])?,
            frame.base_element(&[Perm::identity(3), p("(1,2,3)")?])?,
        ],
    )?;

    let swap = frame.top_element(&Perm::parse_cycles("(1,2)", 2)?)?;
    let ambient = PermGroup::new(
        6,
        vec![
            frame.base_element(&[p("(1,2)")?, Perm::identity(3)])?,
            frame.base_element(&[p("(1,2,3)")?, Perm::identity(3)])?,
            swap.clone(),
        ],
    )?;
    let pg = ProductGroup::new(frame.clone(), ambient)?;

    for (name, sub) in [("straight", &straight), ("twisted", &twisted), ("nondiagonal", &nondiag)] {
        let c = classify_diagonal(&pg, sub)?;
        println!("{name:12} -> {:?}", c.verdict);
    }

    // Full report for the straight diagonal stabilizer inside S_3 Wr C_2
    // with socle N = S_3 x S_3.
    let stab = PermGroup::new(
        6,
        vec![
            frame.diagonal(&p("(1,2)")?)?,
            frame.diagonal(&p("(1,2,3)")?)?,
            swap,
        ],
    )?;
    let n_alpha = PermGroup::new(
        6,
        vec![frame.diagonal(&p("(1,2)")?)?, frame.diagonal(&p("(1,2,3)")?)?],
    )?;
    let n = pg.group.normal_closure(&PermGroup::new(
        6,
        vec![
            frame.base_element(&[p("(1,2)")?, Perm::identity(3)])?,
            frame.base_element(&[p("(1,2,3)")?, Perm::identity(3)])?,
        ],
    )?)?;
    let orbit = coset_action(&pg.group, &stab)?;
    let report = pa_report(&pg, &stab, &n_alpha, &n, Some(&orbit))?;
    println!(
        "socle |N| = |T|^{} with |T| = {}; factor transitive: {}; N transitive on the {}: {}",
        report.socle_exponent,
        report.factor_order,
        report.factor_transitive,
        report.transitivity_scope,
        report.n_transitive
    );
    println!(
        "block witness chain {} < {} < {} (strict: {})",
        report.witness_chain.stabilizer_order,
        report.witness_chain.block_stabilizer_order,
        report.witness_chain.group_order,
        report.witness_chain.strict
    );
    Ok(())
}
