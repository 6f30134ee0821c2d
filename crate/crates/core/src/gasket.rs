//! Recursive midpoint subdivision of a triangle.
//!
//! Starting from one triangle, each stage replaces every triangle with its
//! three corner triangles (the middle one is discarded), so stage `k` holds
//! `3^(k-1)` triangles. The outlines are drawable as closed polygons
//! separated by pen-ups.

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::path::PointPath;

/// Largest accepted stage: 3^11 = 177147 triangles.
pub const MAX_STAGE: u32 = 12;

/// A non-degenerate triangle, vertices in counterclockwise order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Triangle {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
}

fn midpoint(u: Complex, v: Complex) -> Complex {
    (u + v) * 0.5
}

impl Triangle {
    /// Rejects repeated vertices and non-finite coordinates.
    pub fn new(a: Complex, b: Complex, c: Complex) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) || a == b || b == c || a == c {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Triangle { a, b, c })
    }

    pub fn vertices(self) -> [Complex; 3] {
        [self.a, self.b, self.c]
    }

    /// Unsigned area, from the cross product of two edges.
    pub fn area(self) -> f64 {
        let u = self.b - self.a;
        let v = self.c - self.a;
        (u.re * v.im - u.im * v.re).abs() * 0.5
    }

    /// The three corner triangles cut off by the side midpoints, ordered
    /// corner-at-a, corner-at-b, corner-at-c.
    pub fn subdivide(self) -> Result<[Triangle; 3]> {
        let mab = midpoint(self.a, self.b);
        let mbc = midpoint(self.b, self.c);
        let mac = midpoint(self.a, self.c);
        Ok([
            Triangle::new(self.a, mab, mac)?,
            Triangle::new(mab, self.b, mbc)?,
            Triangle::new(mac, mbc, self.c)?,
        ])
    }
}

/// The whole triangle family at one stage of the subdivision.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangleLevel {
    stage: u32,
    triangles: Vec<Triangle>,
}

impl TriangleLevel {
    /// Validates the stage bound and the `3^(stage-1)` cardinality.
    pub fn new(stage: u32, triangles: Vec<Triangle>) -> Result<Self> {
        if stage < 1 || stage > MAX_STAGE {
            return Err(Error::StageOutOfRange {
                stage,
                max: MAX_STAGE,
            });
        }
        let expected = 3usize.pow(stage - 1);
        if triangles.len() != expected {
            return Err(Error::WrongTriangleCount {
                stage,
                count: triangles.len(),
            });
        }
        Ok(TriangleLevel { stage, triangles })
    }

    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn to_path(&self) -> PointPath {
        triangles_to_path(&self.triangles)
    }
}

/// The base triangle with vertices `0`, `L`, `L/2 + i (sqrt(3)/2) L`.
pub fn initial_triangle(side: f64) -> Result<Triangle> {
    if !(side > 0.0) || !side.is_finite() {
        return Err(Error::NonPositiveSide(side));
    }
    Triangle::new(
        Complex::ZERO,
        Complex::new(side, 0.0),
        Complex::new(0.5 * side, 3f64.sqrt() / 2.0 * side),
    )
}

/// Runs the subdivision up to `stage` (stage 1 is the uncut triangle).
/// Children are emitted in triangle order: corner-a, corner-b, corner-c.
pub fn iterate_gasket(side: f64, stage: u32) -> Result<TriangleLevel> {
    if stage < 1 || stage > MAX_STAGE {
        return Err(Error::StageOutOfRange {
            stage,
            max: MAX_STAGE,
        });
    }
    let mut triangles = vec![initial_triangle(side)?];
    for _ in 1..stage {
        let mut next = Vec::with_capacity(triangles.len() * 3);
        for t in &triangles {
            next.extend(t.subdivide()?);
        }
        triangles = next;
    }
    TriangleLevel::new(stage, triangles)
}

/// Closed outlines `a, b, c, a`, one run per triangle.
pub fn triangles_to_path(triangles: &[Triangle]) -> PointPath {
    let mut path = PointPath::new();
    for (i, t) in triangles.iter().enumerate() {
        if i > 0 {
            path.pen_up();
        }
        path.push_point(t.a);
        path.push_point(t.b);
        path.push_point(t.c);
        path.push_point(t.a);
    }
    path
}
