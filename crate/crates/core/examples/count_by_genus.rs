//! Counts numerical semigroups of each genus by walking the semigroup tree,
//! and cross-checks the small genera against brute force.
//!
//! `cargo run --release --example count_by_genus -- 25 4`
//! (genus limit, worker threads)

use semigroup_weights::tree::{self, EnumerationOptions, NullVisitor};

pub fn count(genus_max: u32, threads: usize) -> semigroup_weights::Result<String> {
    let opts = EnumerationOptions {
        gammas: vec![1, 2],
        ..EnumerationOptions::with_threads(threads)
    };
    let (_, stats) = tree::enumerate(genus_max, &opts, || NullVisitor)?;
    let mut out = String::from("genus        count   gamma=1   gamma=2\n");
    for (g, n) in stats.counts.iter().enumerate() {
        out += &format!(
            "{g:>5} {n:>12} {:>9} {:>9}\n",
            stats.gamma_counts[&1][g], stats.gamma_counts[&2][g]
        );
    }
    for g in 0..=genus_max.min(8) {
        let brute = tree::brute_force_enumerate(g)?.len() as u64;
        assert_eq!(brute, stats.counts[g as usize], "genus {g}");
    }
    out += &format!(
        "{} semigroups, {} tasks on {} threads, {:.0} nodes/s\n",
        stats.total(),
        stats.tasks,
        stats.threads,
        stats.nodes_per_sec
    );
    Ok(out)
}

pub fn run_example() -> semigroup_weights::Result<String> {
    count(12, 2)
}

fn main() -> semigroup_weights::Result<()> {
    let mut args = std::env::args().skip(1);
    let genus_max = args.next().and_then(|a| a.parse().ok()).unwrap_or(18);
    let threads = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    print!("{}", count(genus_max, threads)?);
    Ok(())
}
