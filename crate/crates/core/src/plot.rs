//! Deterministic rendering of point paths to SVG, PPM and CSV.
//!
//! Rendering is pure: identical inputs produce byte-identical output, which
//! the golden tests rely on. Points whose real part exceeds the clip
//! threshold are never drawn and never influence the viewport — this is the
//! explicit form of the sentinel trick, where a far-off point exists only
//! to break line continuity.

mod csv;
mod ppm;
mod svg;

pub use csv::{read_csv, write_csv};
pub use ppm::render_ppm;
pub use svg::render_svg;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::ifs::SENTINEL_THRESHOLD;
use crate::path::PointPath;

/// Mark style: isolated dots or connected runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotMode {
    Scatter,
    Polyline,
}

/// Canvas and mark parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderStyle {
    pub mode: PlotMode,
    pub canvas_width: u32,
    pub canvas_height: u32,
    /// Padding around the bounding box, as a fraction of its extent.
    pub margin: f64,
    pub point_radius: u32,
    pub stroke_width: u32,
    /// Points with real part above this are clipped.
    pub clip_threshold: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            mode: PlotMode::Scatter,
            canvas_width: 640,
            canvas_height: 640,
            margin: 0.05,
            point_radius: 1,
            stroke_width: 1,
            clip_threshold: SENTINEL_THRESHOLD,
        }
    }
}

impl RenderStyle {
    pub fn scatter() -> Self {
        RenderStyle::default()
    }

    pub fn polyline() -> Self {
        RenderStyle {
            mode: PlotMode::Polyline,
            ..RenderStyle::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.canvas_width < 16 || self.canvas_height < 16 {
            return Err(Error::InvalidStyle(format!(
                "canvas {}x{} below the 16-pixel minimum",
                self.canvas_width, self.canvas_height
            )));
        }
        if !(0.0..=0.5).contains(&self.margin) {
            return Err(Error::InvalidStyle(format!(
                "margin {} outside 0..=0.5",
                self.margin
            )));
        }
        if self.clip_threshold.is_nan() {
            return Err(Error::InvalidStyle("clip threshold is NaN".into()));
        }
        Ok(())
    }
}

/// A world-coordinate window whose aspect matches the canvas after fitting.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Viewport {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Viewport {
    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn aspect(&self) -> f64 {
        self.width() / self.height()
    }

    fn validate(&self) -> Result<()> {
        let finite = self.x_min.is_finite()
            && self.x_max.is_finite()
            && self.y_min.is_finite()
            && self.y_max.is_finite();
        if !finite || self.x_max <= self.x_min || self.y_max <= self.y_min {
            return Err(Error::InvalidViewport(format!("{self:?}")));
        }
        Ok(())
    }
}

/// Bounding box of the unclipped points, padded by the margin, then widened
/// along the shorter axis until it matches the canvas aspect. A zero-extent
/// axis is first padded to extent 1 centered on the points.
pub fn fit_viewport(g: &PointPath, style: &RenderStyle) -> Result<Viewport> {
    style.validate()?;
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    for z in unclipped(g, style.clip_threshold) {
        x_min = x_min.min(z.re);
        x_max = x_max.max(z.re);
        y_min = y_min.min(z.im);
        y_max = y_max.max(z.im);
    }
    if x_min > x_max {
        return Err(Error::AllPointsClipped);
    }

    if x_min == x_max {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if y_min == y_max {
        y_min -= 0.5;
        y_max += 0.5;
    }

    let dx = style.margin * (x_max - x_min);
    let dy = style.margin * (y_max - y_min);
    x_min -= dx;
    x_max += dx;
    y_min -= dy;
    y_max += dy;

    let target = f64::from(style.canvas_width) / f64::from(style.canvas_height);
    let width = x_max - x_min;
    let height = y_max - y_min;
    if width / height < target {
        let pad = (target * height - width) / 2.0;
        x_min -= pad;
        x_max += pad;
    } else {
        let pad = (width / target - height) / 2.0;
        y_min -= pad;
        y_max += pad;
    }

    let vp = Viewport {
        x_min,
        x_max,
        y_min,
        y_max,
    };
    vp.validate()?;
    Ok(vp)
}

fn unclipped(g: &PointPath, clip_threshold: f64) -> impl Iterator<Item = Complex> + '_ {
    g.points().filter(move |z| z.re <= clip_threshold)
}

/// Pen-down runs split further at clipped points: a segment with a clipped
/// endpoint is not drawn. Only runs long enough to draw (two points) remain.
fn drawable_runs(g: &PointPath, clip_threshold: f64) -> Vec<Vec<Complex>> {
    let mut out = Vec::new();
    for run in g.runs() {
        let mut current: Vec<Complex> = Vec::new();
        for &z in run {
            if z.re > clip_threshold {
                if current.len() >= 2 {
                    out.push(std::mem::take(&mut current));
                } else {
                    current.clear();
                }
            } else {
                current.push(z);
            }
        }
        if current.len() >= 2 {
            out.push(current);
        }
    }
    out
}

/// World-to-pixel mapping with the y axis flipped (imaginary part up).
struct PixelMap {
    vp: Viewport,
    width: f64,
    height: f64,
}

impl PixelMap {
    fn new(vp: &Viewport, style: &RenderStyle) -> Self {
        PixelMap {
            vp: *vp,
            width: f64::from(style.canvas_width),
            height: f64::from(style.canvas_height),
        }
    }

    fn to_px(&self, z: Complex) -> (f64, f64) {
        let x = (z.re - self.vp.x_min) / self.vp.width() * self.width;
        let y = (self.vp.y_max - z.im) / self.vp.height() * self.height;
        (x, y)
    }
}
