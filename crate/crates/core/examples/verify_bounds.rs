//! Exhaustive check of the K- and S-weight bounds, the extremal
//! constructions and the weight identities over small gamma and genus.
//!
//! `cargo run --release --example verify_bounds`

use semigroup_weights::harness::sweep::{self, VerifyConfig};

pub fn run_example() -> semigroup_weights::Result<String> {
    let result = sweep::verify(&VerifyConfig {
        gamma_max: 2,
        genus_max: 12,
        ..Default::default()
    })?;
    let mut out = sweep::to_text(&result);
    for v in result.violations() {
        out += &format!("violation: {v:?}\n");
    }
    Ok(out)
}

fn main() -> semigroup_weights::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
