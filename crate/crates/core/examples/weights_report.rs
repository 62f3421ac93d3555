//! S- and K-weights, ramification and the gamma-dependent quantities of the
//! K-weight maximizer of genus 20 with gamma = 3.
//!
//! `cargo run --example weights_report`

use semigroup_weights::harness::analyze;
use semigroup_weights::Semigroup;

pub fn run_example() -> semigroup_weights::Result<String> {
    let s = Semigroup::from_generators(&[4, 14, 29])?;
    let report = analyze::analyze(&s, None)?;
    let mut out = analyze::to_text(&report);
    out += &serde_json::to_string(&report).expect("report serializes");
    out.push('\n');
    Ok(out)
}

fn main() -> semigroup_weights::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
