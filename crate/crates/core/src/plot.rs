//! SVG pictures of `sA` inside `Δ_{s,e}` for planar sets.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lattice::SumsetTower;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlotCounts {
    pub filled: usize,
    pub hollow: usize,
}

const MARGIN: i64 = 40;
const CANVAS: i64 = 480;

/// Filled circles for points of `sA`, hollow squares for `Δ_{s,e} ∖ sA`.
/// The tower's generators must be planar.
pub fn sumset_svg(tower: &mut SumsetTower, s: u32) -> Result<(String, PlotCounts)> {
    let a = tower.generators();
    if a.dim() != 2 {
        return Err(Error::Unsupported(format!(
            "plots need d = 2, this instance has d = {}",
            a.dim()
        )));
    }
    let e = a.norm_divisor();
    let level = tower.sumset(s)?;
    let n = level.slice().bound().max(1);
    let unit = (CANVAS / n).clamp(4, 40);
    let r = (unit / 4).max(2);
    let side = 2 * MARGIN + n * unit;
    let px = |x: i64| MARGIN + x * unit;
    let py = |y: i64| side - MARGIN - y * unit;

    let mut out = String::new();
    let mut counts = PlotCounts { filled: 0, hollow: 0 };
    let w = &mut out;
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
    )
    .unwrap();
    writeln!(w, r#"  <title>{s}A inside Δ_{{{s},{e}}}</title>"#).unwrap();
    writeln!(
        w,
        r#"  <g stroke="black" stroke-width="1"><line x1="{}" y1="{}" x2="{}" y2="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}"/></g>"#,
        px(0), py(0), px(n) + unit / 2, py(0),
        px(0), py(0), px(0), py(n) - unit / 2
    )
    .unwrap();
    writeln!(
        w,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12">y1</text>"#,
        px(n) + unit / 2 + 4,
        py(0) + 4
    )
    .unwrap();
    writeln!(
        w,
        r#"  <text x="{}" y="{}" font-family="sans-serif" font-size="12">y2</text>"#,
        px(0) - 6,
        py(n) - unit / 2 - 6
    )
    .unwrap();
    for p in level.slice().iter() {
        let (x, y) = (px(p.coords()[0]), py(p.coords()[1]));
        if level.contains(&p) {
            counts.filled += 1;
            writeln!(w, r#"  <circle class="member" cx="{x}" cy="{y}" r="{r}" fill="black"/>"#).unwrap();
        } else {
            counts.hollow += 1;
            writeln!(
                w,
                r#"  <rect class="gap" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>"#,
                x - r,
                y - r,
                2 * r,
                2 * r
            )
            .unwrap();
        }
    }
    writeln!(w, "</svg>").unwrap();
    Ok((out, counts))
}
