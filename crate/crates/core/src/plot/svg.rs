//! SVG 1.1 emitter. Coordinates carry exactly four fractional digits so the
//! byte stream is reproducible everywhere.

use std::fmt::Write;

use super::{drawable_runs, unclipped, PixelMap, PlotMode, RenderStyle, Viewport};
use crate::error::Result;
use crate::path::PointPath;

pub fn render_svg(g: &PointPath, style: &RenderStyle, vp: &Viewport) -> Result<String> {
    style.validate()?;
    vp.validate()?;
    let w = style.canvas_width;
    let h = style.canvas_height;
    let map = PixelMap::new(vp, style);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    let _ = writeln!(out, "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>");

    match style.mode {
        PlotMode::Scatter => {
            for z in unclipped(g, style.clip_threshold) {
                let (x, y) = map.to_px(z);
                let _ = writeln!(
                    out,
                    "<circle cx=\"{x:.4}\" cy=\"{y:.4}\" r=\"{}\" fill=\"black\"/>",
                    style.point_radius
                );
            }
        }
        PlotMode::Polyline => {
            for run in drawable_runs(g, style.clip_threshold) {
                out.push_str("<polyline points=\"");
                for (i, &z) in run.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    let (x, y) = map.to_px(z);
                    let _ = write!(out, "{x:.4},{y:.4}");
                }
                let _ = writeln!(
                    out,
                    "\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>",
                    style.stroke_width
                );
            }
        }
    }

    out.push_str("</svg>\n");
    Ok(out)
}
