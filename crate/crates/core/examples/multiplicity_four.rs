//! Multiplicity-4 gamma-hyperelliptic semigroups: the discrete K-weight
//! spectrum and the four-generator family realizing it.
//!
//! `cargo run --example multiplicity_four -- 2 11` (gamma, genus)

use semigroup_weights::gamma;
use semigroup_weights::tree::{self, EnumerationOptions, GapSetCollector, minimal_generators};
use semigroup_weights::{weights, Semigroup};

pub fn spectrum(gm: u32, genus: u32) -> semigroup_weights::Result<String> {
    let mut out = format!("gamma {gm}, genus {genus}\n");
    for (k, w) in gamma::prop2_spectrum(gm, genus)? {
        let member = match gamma::make_prop2_member(gm, genus, k) {
            Ok(s) => format!("{:?}", minimal_generators(&s)),
            Err(_) => "out of range".into(),
        };
        out += &format!("  k={k}  W_K={w:>3}  {member}\n");
    }
    let (found, _) =
        tree::enumerate_gamma_hyperelliptic(gm, genus, &EnumerationOptions::default(), GapSetCollector::default)?;
    out += "observed:\n";
    for gaps in &found.0 {
        let s = Semigroup::from_gap_list(gaps);
        if s.multiplicity() == 4 {
            out += &format!("  W_K={:>3}  {:?}\n", weights::k_weight(&s), minimal_generators(&s));
        }
    }
    Ok(out)
}

pub fn run_example() -> semigroup_weights::Result<String> {
    spectrum(2, 11)
}

fn main() -> semigroup_weights::Result<()> {
    let mut args = std::env::args().skip(1);
    let gm = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let genus = args.next().and_then(|a| a.parse().ok()).unwrap_or(11);
    print!("{}", spectrum(gm, genus)?);
    Ok(())
}
