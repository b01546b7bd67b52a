//! Run a self-checking preset from library code and print its report,
//! first as text and then as deterministic JSON.

use arclab::presets::{default_data_dir, verify_preset, Thresholds, PRESETS};
use arclab::Result;

fn main() -> Result<()> {
    let name = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "psl2-59-straight-twisted".to_string());
    println!("available presets:");
    for p in PRESETS {
        println!("  {}", p.name);
    }
    println!();
    let outcome = verify_preset(&name, &default_data_dir(), &Thresholds::default(), false)?;
    print!("{}", outcome.report.render_text());
    println!();
    print!("{}", outcome.report.to_json());
    Ok(())
}
