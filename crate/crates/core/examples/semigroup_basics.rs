//! Invariants of a single semigroup: gaps, Frobenius number, Apéry set,
//! symmetry.
//!
//! `cargo run --example semigroup_basics`

use semigroup_weights::tree::minimal_generators;
use semigroup_weights::Semigroup;

pub fn run_example() -> semigroup_weights::Result<String> {
    let mut out = String::new();
    for gens in [&[5, 7, 9][..], &[3, 5], &[4, 6, 11, 13]] {
        let s = Semigroup::from_generators(gens)?;
        out += &format!(
            "<{}>: gaps {:?}, genus {}, F {}, m {}, symmetric {}\n",
            minimal_generators(&s).iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            s.gaps().as_slice(),
            s.genus(),
            s.frobenius(),
            s.multiplicity(),
            s.is_symmetric()
        );
        out += &format!("  Apery set of m: {:?}\n", s.apery_set(s.multiplicity())?);
    }
    if let Err(e) = Semigroup::from_generators(&[4, 6]) {
        out += &format!("<4,6> rejected: {e}\n");
    }
    Ok(out)
}

fn main() -> semigroup_weights::Result<()> {
    print!("{}", run_example()?);
    Ok(())
}
