//! Library side of the `sgw` command-line tool: report building, the
//! verification campaign and output encodings.

pub mod analyze;
pub mod sweep;

use crate::error::{Error, Result};
use crate::gamma;
use crate::semigroup::Semigroup;
use crate::tableau::{self, Mode};

/// Parses `"4,14,29"` (spaces allowed).
pub fn parse_list(text: &str) -> std::result::Result<Vec<u32>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u32>().map_err(|e| format!("bad integer {t:?}: {e}")))
        .collect()
}

/// How a semigroup was given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Generators(Vec<u32>),
    Gaps(Vec<u32>),
}

impl Input {
    pub fn build(&self) -> Result<Semigroup> {
        match self {
            Input::Generators(g) => Semigroup::from_generators(g),
            Input::Gaps(g) => Semigroup::from_gaps(g),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

/// Renders the tableau of `s`. With `diff_min`, cells are compared against
/// the staircase minimizer of the same genus and gamma (`gamma` or the
/// detected one).
pub fn render(s: &Semigroup, mode: Mode, format: RenderFormat, diff_min: bool, gamma: Option<u32>) -> Result<String> {
    let t = tableau::path_of(s);
    let reference = if diff_min {
        let gamma = match gamma {
            Some(g) => g,
            None => *gamma::detect_gammas(s, gamma::gamma_ceiling(s))
                .first()
                .ok_or(Error::InvalidParameters {
                    reason: "--diff-min needs a gamma-hyperelliptic semigroup".into(),
                })?,
        };
        Some(tableau::path_of(&gamma::make_minimizer(gamma, s.genus())?))
    } else {
        None
    };
    Ok(match format {
        RenderFormat::Svg => tableau::render_svg(&t, mode, reference.as_ref())?,
        RenderFormat::Ascii => {
            let mut out = format!(
                "{} genus {}: {} boxes, path {}\n",
                match mode {
                    Mode::S => "T_S",
                    Mode::K => "T_K",
                },
                t.genus(),
                t.box_count(mode),
                t.step_word()
            );
            if let Some(r) = &reference {
                let d = tableau::diff(&t, r, mode)?;
                out.push_str(&format!(
                    "against minimizer: {} shared, {} extra, {} missing\n",
                    d.shared, d.only_left, d.only_right
                ));
            }
            out.push_str(&tableau::render_ascii(&t, mode));
            out
        }
    })
}
