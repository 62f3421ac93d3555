//! Dyck-path and Young-tableau picture of the weights.
//!
//! Step `i` (for `i = 1..=2g`) goes up when `i` is a gap and right when it is
//! a member. On the `g x g` grid, the row of gap `l_i` holds the `l_i - i`
//! boxes to the left of its up-step, so the box count of `T_S` is `W_S`.
//! `T_K` drops the uppermost row (the row of `l_g`); its box count is
//! `W_K - (g - 1)`.
//!
//! Rows are numbered from the bottom: row 0 belongs to `l_1`.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Step {
    Up,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Mode {
    /// Full tableau `T_S`.
    #[default]
    S,
    /// `T_K`: the top row is left empty.
    K,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathTableau {
    pub steps: Vec<Step>,
    /// Row lengths top to bottom; the first entry belongs to `l_g`.
    pub rows_s: Vec<u32>,
    /// `rows_s` without its first entry.
    pub rows_k: Vec<u32>,
}

/// Cell-wise comparison of two tableaux on the same grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TableauDiff {
    pub shared: usize,
    /// Cells present in the rendered tableau but not in the reference (red).
    pub only_left: usize,
    /// Cells of the reference not covered by the rendered tableau.
    pub only_right: usize,
}

pub fn path_of(s: &Semigroup) -> PathTableau {
    let g = s.genus();
    let steps = (1..=2 * g)
        .map(|i| if s.contains(i) { Step::Right } else { Step::Up })
        .collect();
    let mut rows_s: Vec<u32> = s.gap_iter().zip(1..).map(|(l, i)| l - i).collect();
    rows_s.reverse();
    let rows_k = rows_s.iter().skip(1).copied().collect();
    PathTableau {
        steps,
        rows_s,
        rows_k,
    }
}

impl PathTableau {
    pub fn genus(&self) -> u32 {
        self.rows_s.len() as u32
    }

    /// Length of row `y` (counted from the bottom) under `mode`.
    pub fn row_len(&self, y: u32, mode: Mode) -> u32 {
        let g = self.genus();
        if y >= g || (mode == Mode::K && y == g - 1) {
            return 0;
        }
        self.rows_s[(g - 1 - y) as usize]
    }

    pub fn box_count(&self, mode: Mode) -> u64 {
        let rows = match mode {
            Mode::S => &self.rows_s,
            Mode::K => &self.rows_k,
        };
        rows.iter().map(|&r| u64::from(r)).sum()
    }

    pub fn contains_cell(&self, x: u32, y: u32, mode: Mode) -> bool {
        x < self.row_len(y, mode)
    }

    /// Cells `(x, y)` in row-major order from the bottom-left.
    pub fn cells(&self, mode: Mode) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.genus()).flat_map(move |y| (0..self.row_len(y, mode)).map(move |x| (x, y)))
    }

    pub fn step_word(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Up => 'U',
                Step::Right => 'R',
            })
            .collect()
    }
}

pub fn diff(left: &PathTableau, right: &PathTableau, mode: Mode) -> Result<TableauDiff> {
    if left.genus() != right.genus() {
        return Err(Error::GenusMismatch {
            left: left.genus(),
            right: right.genus(),
        });
    }
    let mut d = TableauDiff::default();
    for y in 0..left.genus() {
        let (a, b) = (left.row_len(y, mode), right.row_len(y, mode));
        d.shared += a.min(b) as usize;
        d.only_left += a.saturating_sub(b) as usize;
        d.only_right += b.saturating_sub(a) as usize;
    }
    Ok(d)
}

/// Monospace grid: `#` is a box, `.` an empty cell and `|` the up-step of
/// the path in that row.
pub fn render_ascii(t: &PathTableau, mode: Mode) -> String {
    let g = t.genus();
    let mut out = String::new();
    for y in (0..g).rev() {
        let filled = t.row_len(y, mode);
        let edge = t.row_len(y, Mode::S);
        for x in 0..=g {
            if x == edge {
                out.push('|');
            }
            if x < g {
                out.push(if x < filled { '#' } else { '.' });
            }
        }
        out.push('\n');
    }
    out
}

pub const CELL_PX: u32 = 12;
const MARGIN_PX: u32 = 1;
const GRAY: &str = "#d3d3d3";
const RED: &str = "#ff0000";
const GRID: &str = "#0000ff";

/// SVG 1.1 drawing of `t`. With a reference tableau, cells of `t` missing
/// from the reference are red and shared cells gray.
pub fn render_svg(t: &PathTableau, mode: Mode, diff_against: Option<&PathTableau>) -> Result<String> {
    let counts = match diff_against {
        Some(other) => Some(diff(t, other, mode)?),
        None => None,
    };
    let g = t.genus();
    let side = g * CELL_PX + 2 * MARGIN_PX;
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{side}\" height=\"{side}\" viewBox=\"0 0 {side} {side}\">"
    );
    let label = match mode {
        Mode::S => "T_S",
        Mode::K => "T_K",
    };
    let boxes = t.box_count(mode);
    match counts {
        Some(d) => {
            let _ = writeln!(
                out,
                "<desc>{label} genus {g}: {boxes} boxes, {} red, {} shared, {} only in reference</desc>",
                d.only_left, d.shared, d.only_right
            );
        }
        None => {
            let _ = writeln!(out, "<desc>{label} genus {g}: {boxes} boxes</desc>");
        }
    }
    let _ = writeln!(
        out,
        "<rect x=\"{MARGIN_PX}\" y=\"{MARGIN_PX}\" width=\"{0}\" height=\"{0}\" fill=\"none\" stroke=\"{GRID}\" stroke-width=\"1\"/>",
        g * CELL_PX
    );
    for (x, y) in t.cells(mode) {
        let shared = diff_against.is_none_or(|other| other.contains_cell(x, y, mode));
        let fill = if shared { GRAY } else { RED };
        let px = MARGIN_PX + x * CELL_PX;
        let py = MARGIN_PX + (g - 1 - y) * CELL_PX;
        let _ = writeln!(
            out,
            "<rect x=\"{px}\" y=\"{py}\" width=\"{CELL_PX}\" height=\"{CELL_PX}\" fill=\"{fill}\" stroke=\"{GRID}\" stroke-width=\"1\"/>"
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

impl fmt::Display for PathTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.step_word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{make_maximizer, make_minimizer};

    fn sg(gens: &[u32]) -> Semigroup {
        Semigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn two_three() {
        let t = path_of(&sg(&[2, 3]));
        assert_eq!(t.steps, vec![Step::Up, Step::Right]);
        assert_eq!(t.rows_s, vec![0]);
        assert!(t.rows_k.is_empty());
        let art = render_ascii(&t, Mode::S);
        assert_eq!(art.lines().count(), 1);
        assert_eq!(art.matches('#').count(), 0);
        assert_eq!(render_ascii(&t, Mode::K).matches('#').count(), 0);
    }

    #[test]
    fn hyperelliptic_staircase() {
        let t = path_of(&sg(&[2, 11]));
        assert_eq!(t.step_word(), "URURURURUR");
        assert_eq!(t.rows_s, vec![4, 3, 2, 1, 0]);
        assert_eq!(render_ascii(&t, Mode::S).matches('#').count(), 10);
        let svg = render_svg(&t, Mode::S, None).unwrap();
        assert_eq!(svg.matches(GRAY).count(), 10);
        assert_eq!(svg.matches(RED).count(), 0);
    }

    #[test]
    fn maximizer_tableau() {
        let t = path_of(&sg(&[4, 14, 29]));
        assert_eq!(t.box_count(Mode::S), 109);
        assert_eq!(t.box_count(Mode::K), 90);
        let art = render_ascii(&t, Mode::K);
        assert_eq!(art.matches('#').count(), 90);
        assert_eq!(art.lines().next().unwrap().matches('#').count(), 0);
    }

    #[test]
    fn maximizer_red_cells() {
        let max = path_of(&make_maximizer(3, 20).unwrap());
        let min = path_of(&make_minimizer(3, 20).unwrap());
        let d = diff(&max, &min, Mode::K).unwrap();
        assert_eq!(d, TableauDiff { shared: 78, only_left: 12, only_right: 0 });

        // Expected red cells (x, y from bottom-left).
        let mut red: Vec<(u32, u32)> = max
            .cells(Mode::K)
            .filter(|&(x, y)| !min.contains_cell(x, y, Mode::K))
            .collect();
        red.sort_unstable();
        let mut expected = vec![
            (0, 3), (0, 4), (0, 5), (0, 6), (1, 6), (1, 7),
            (11, 17), (12, 17), (12, 18), (13, 18), (14, 18), (15, 18),
        ];
        expected.sort_unstable();
        assert_eq!(red, expected);

        let svg = render_svg(&max, Mode::K, Some(&min)).unwrap();
        assert_eq!(svg.matches(RED).count(), 12);
        assert_eq!(svg.matches(GRAY).count(), 78);
    }

    #[test]
    fn self_diff_has_no_red() {
        let t = path_of(&sg(&[4, 6, 11, 13]));
        let svg = render_svg(&t, Mode::S, Some(&t)).unwrap();
        assert_eq!(svg.matches(RED).count(), 0);
    }

    #[test]
    fn genus_mismatch() {
        let a = path_of(&sg(&[2, 3]));
        let b = path_of(&sg(&[2, 5]));
        assert_eq!(
            render_svg(&a, Mode::S, Some(&b)),
            Err(Error::GenusMismatch { left: 1, right: 2 })
        );
    }
}
