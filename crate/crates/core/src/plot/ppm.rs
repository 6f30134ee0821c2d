//! Binary P6 pixmap rasterizer: white canvas, black marks.

use super::{drawable_runs, unclipped, PixelMap, PlotMode, RenderStyle, Viewport};
use crate::error::Result;
use crate::path::PointPath;

pub fn render_ppm(g: &PointPath, style: &RenderStyle, vp: &Viewport) -> Result<Vec<u8>> {
    style.validate()?;
    vp.validate()?;
    let w = style.canvas_width as usize;
    let h = style.canvas_height as usize;
    let map = PixelMap::new(vp, style);

    let mut pixels = vec![255u8; w * h * 3];
    match style.mode {
        PlotMode::Scatter => {
            let r = i64::from(style.point_radius);
            for z in unclipped(g, style.clip_threshold) {
                let (cx, cy) = pixel_of(map.to_px(z));
                for dy in -r..=r {
                    for dx in -r..=r {
                        if dx * dx + dy * dy <= r * r {
                            paint(&mut pixels, w, h, cx + dx, cy + dy);
                        }
                    }
                }
            }
        }
        PlotMode::Polyline => {
            for run in drawable_runs(g, style.clip_threshold) {
                for pair in run.windows(2) {
                    let a = pixel_of(map.to_px(pair[0]));
                    let b = pixel_of(map.to_px(pair[1]));
                    segment(&mut pixels, w, h, a, b);
                }
            }
        }
    }

    let mut out = format!("P6\n{w} {h}\n255\n").into_bytes();
    out.extend_from_slice(&pixels);
    Ok(out)
}

fn pixel_of((x, y): (f64, f64)) -> (i64, i64) {
    (x.floor() as i64, y.floor() as i64)
}

fn paint(pixels: &mut [u8], w: usize, h: usize, x: i64, y: i64) {
    if x < 0 || y < 0 || x >= w as i64 || y >= h as i64 {
        return;
    }
    let idx = (y as usize * w + x as usize) * 3;
    pixels[idx] = 0;
    pixels[idx + 1] = 0;
    pixels[idx + 2] = 0;
}

/// Integer Bresenham between two pixels. Segments that run far outside the
/// canvas (possible only with a viewport not fitted to the path) are
/// rejected rather than walked pixel by pixel.
fn segment(pixels: &mut [u8], w: usize, h: usize, a: (i64, i64), b: (i64, i64)) {
    let (mut x0, mut y0) = a;
    let (x1, y1) = b;
    let span = (x1 - x0).abs().max((y1 - y0).abs());
    if span > 4 * (w as i64 + h as i64) {
        return;
    }
    let dx = (x1 - x0).abs();
    let dy = -(y1 - y0).abs();
    let sx = if x0 < x1 { 1 } else { -1 };
    let sy = if y0 < y1 { 1 } else { -1 };
    let mut err = dx + dy;
    loop {
        paint(pixels, w, h, x0, y0);
        if x0 == x1 && y0 == y1 {
            break;
        }
        let e2 = 2 * err;
        if e2 >= dy {
            err += dy;
            x0 += sx;
        }
        if e2 <= dx {
            err += dx;
            y0 += sy;
        }
    }
}
