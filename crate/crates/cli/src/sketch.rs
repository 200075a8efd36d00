//! ASCII picture of the support lattice: `p` exponent across, `q` exponent
//! up.
//!
//! Marks: `V` joining vertex, `#` support point on an edge, `o` other support
//! point, `-` lattice point on an edge that is not in the support, `.` empty.

use std::fmt::Write as _;

use weyl_core::{support, Monomial, WeylElement};

use crate::report::PolygonReport;

pub const LEGEND: &str = "V vertex, # edge point, o support point, - edge lattice point";

fn on_segment(a: Monomial, b: Monomial, (i, j): Monomial) -> bool {
    let (ai, aj, bi, bj) = (a.0 as i64, a.1 as i64, b.0 as i64, b.1 as i64);
    let (i, j) = (i as i64, j as i64);
    let cross = (bi - ai) * (j - aj) - (bj - aj) * (i - ai);
    cross == 0 && i >= ai.min(bi) && i <= ai.max(bi) && j >= aj.min(bj) && j <= aj.max(bj)
}

pub fn render(x: &WeylElement, poly: &PolygonReport) -> String {
    let pts = support(x);
    let max_i = pts.iter().map(|m| m.0).max().unwrap_or(0);
    let max_j = pts.iter().map(|m| m.1).max().unwrap_or(0);
    let segments: Vec<(Monomial, Monomial)> = poly
        .edges
        .iter()
        .filter_map(|e| Some((*e.support.first()?, *e.support.last()?)))
        .collect();
    let label_width = max_j.to_string().len();

    let mut out = String::new();
    for j in (0..=max_j).rev() {
        write!(out, "{j:>label_width$} |").unwrap();
        for i in 0..=max_i {
            let m = (i, j);
            let mark = if poly.vertices.iter().any(|v| v.point == m) {
                'V'
            } else if pts.contains(&m) {
                if segments.iter().any(|&(a, b)| on_segment(a, b, m)) {
                    '#'
                } else {
                    'o'
                }
            } else if segments.iter().any(|&(a, b)| on_segment(a, b, m)) {
                '-'
            } else {
                '.'
            };
            write!(out, " {mark}").unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "{:label_width$} +{}", "", "--".repeat(max_i as usize + 1)).unwrap();
    write!(out, "{:label_width$}  ", "").unwrap();
    for i in 0..=max_i {
        write!(out, " {}", i % 10).unwrap();
    }
    out.push('\n');
    writeln!(out, "{LEGEND}").unwrap();
    out
}

/// Points carrying a support mark (`V`, `#` or `o`) in a rendered sketch.
pub fn marked_points(sketch: &str) -> Vec<Monomial> {
    let mut pts = Vec::new();
    for line in sketch.lines() {
        let Some((label, cells)) = line.split_once(" |") else {
            continue;
        };
        let Ok(j) = label.trim().parse::<u32>() else {
            continue;
        };
        for (i, cell) in cells.split_whitespace().enumerate() {
            if matches!(cell, "V" | "#" | "o") {
                pts.push((i as u32, j));
            }
        }
    }
    pts.sort();
    pts
}
