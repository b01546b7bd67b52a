//! The equidistant ternary (4,2)-code and the order-8 monomial map tau
//! used to glue the twisted amalgam sides.

use arclab::code::{build_code, tau, verify_tau, weight};

fn main() {
    let code = build_code();
    println!("codewords ({} total):", code.codewords.len());
    for w in &code.codewords {
        println!("  {:?}  weight {}", w, weight(*w));
    }

    let t = tau();
    println!("tau has order {}", t.order());

    let cert = verify_tau();
    println!("tau^4 is negation: {}", cert.fourth_power_is_negation);
    println!("tau preserves the code: {}", cert.preserves_code);
    println!(
        "tau cycles all nonzero codewords: {}",
        cert.visits_all_nonzero_words
    );
    println!("the 8-cycle of tau from (1,1,1,0):");
    for w in &cert.visiting_order {
        println!("  {w:?}");
    }
}
