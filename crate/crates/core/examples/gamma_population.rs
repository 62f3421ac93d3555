//! Lists every gamma-hyperelliptic semigroup of one genus with its weights
//! and where it sits between the bounds.
//!
//! `cargo run --example gamma_population -- 2 9` (gamma, genus)

use semigroup_weights::gamma;
use semigroup_weights::tree::{self, EnumerationOptions, GapSetCollector, minimal_generators};
use semigroup_weights::{weights, Semigroup};

pub fn list(gm: u32, genus: u32) -> semigroup_weights::Result<String> {
    let (found, stats) =
        tree::enumerate_gamma_hyperelliptic(gm, genus, &EnumerationOptions::default(), GapSetCollector::default)?;
    let (lower_k, upper_k, _, _) = gamma::bounds(gm, genus);
    let mut out = format!(
        "gamma {gm}, genus {genus}: {} semigroups ({} tree nodes visited), {lower_k} <= W_K <= {upper_k}\n",
        found.0.len(),
        stats.nodes
    );
    let mut rows: Vec<(u64, u64, Vec<u32>)> = found
        .0
        .iter()
        .map(|gaps| {
            let s = Semigroup::from_gap_list(gaps);
            (weights::k_weight(&s), weights::s_weight(&s), minimal_generators(&s))
        })
        .collect();
    rows.sort();
    for (w_k, w_s, gens) in rows {
        let tag = match w_k as i64 {
            w if w == lower_k => " min",
            w if w == upper_k => " max",
            _ => "",
        };
        out += &format!("  W_K {w_k:>3}  W_S {w_s:>3}  {gens:?}{tag}\n");
    }
    Ok(out)
}

pub fn run_example() -> semigroup_weights::Result<String> {
    list(2, 9)
}

fn main() -> semigroup_weights::Result<()> {
    let mut args = std::env::args().skip(1);
    let gm = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let genus = args.next().and_then(|a| a.parse().ok()).unwrap_or(9);
    print!("{}", list(gm, genus)?);
    Ok(())
}
