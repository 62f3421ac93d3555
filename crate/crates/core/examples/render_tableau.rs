//! Draws the K-tableau of <4, 14, 29> with the cells missing from the
//! staircase minimizer in red.
//!
//! `cargo run --example render_tableau -- tableau.svg`

use semigroup_weights::harness::{self, RenderFormat};
use semigroup_weights::tableau::Mode;
use semigroup_weights::Semigroup;

pub fn run_example() -> semigroup_weights::Result<(String, String)> {
    let s = Semigroup::from_generators(&[4, 14, 29])?;
    let ascii = harness::render(&s, Mode::K, RenderFormat::Ascii, true, Some(3))?;
    let svg = harness::render(&s, Mode::K, RenderFormat::Svg, true, Some(3))?;
    Ok((ascii, svg))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (ascii, svg) = run_example()?;
    print!("{ascii}");
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, svg)?;
        println!("wrote {path}");
    }
    Ok(())
}
