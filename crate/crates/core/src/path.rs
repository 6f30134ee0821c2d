//! Point sequences with explicit pen-up separators.
//!
//! A `PointPath` is the universal carrier between the generators, the
//! transforms and the plotters. Separators obey one rule: they never lead,
//! trail, or repeat. The path is stored as nonempty runs of points, which
//! makes that rule structural rather than something to re-check.

use crate::complex::Complex;
use crate::error::{Error, Result};

/// One element of a path: a point, or a pure separator with no coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathElement {
    Point(Complex),
    PenUp,
}

/// An ordered sequence of points interleaved with pen-up separators.
#[derive(Clone, Debug, Default)]
pub struct PointPath {
    runs: Vec<Vec<Complex>>,
    // A pen-up seen after the last point; it only materializes if another
    // point follows, so a trailing separator can never be observed.
    pending_break: bool,
}

impl PartialEq for PointPath {
    fn eq(&self, other: &Self) -> bool {
        self.runs == other.runs
    }
}

impl PointPath {
    pub fn new() -> Self {
        PointPath::default()
    }

    /// A single unbroken run (empty input gives the empty path).
    pub fn from_points<I: IntoIterator<Item = Complex>>(points: I) -> Self {
        let run: Vec<Complex> = points.into_iter().collect();
        let mut path = PointPath::new();
        if !run.is_empty() {
            path.runs.push(run);
        }
        path
    }

    /// Builds a path from an element sequence, rejecting leading, trailing,
    /// consecutive separators and non-finite coordinates.
    pub fn from_elements<I: IntoIterator<Item = PathElement>>(elements: I) -> Result<Self> {
        let mut path = PointPath::new();
        let mut prev_pen_up = false;
        for element in elements {
            match element {
                PathElement::PenUp => {
                    if path.is_empty() {
                        return Err(Error::InvalidPath("leading pen-up".into()));
                    }
                    if prev_pen_up {
                        return Err(Error::InvalidPath("consecutive pen-up".into()));
                    }
                    path.pen_up();
                    prev_pen_up = true;
                }
                PathElement::Point(z) => {
                    if !z.is_finite() {
                        return Err(Error::InvalidPath(format!("non-finite point {z:?}")));
                    }
                    path.push_point(z);
                    prev_pen_up = false;
                }
            }
        }
        if prev_pen_up {
            return Err(Error::InvalidPath("trailing pen-up".into()));
        }
        Ok(path)
    }

    pub fn push_point(&mut self, z: Complex) {
        if self.pending_break || self.runs.is_empty() {
            self.runs.push(vec![z]);
            self.pending_break = false;
        } else {
            self.runs.last_mut().expect("nonempty").push(z);
        }
    }

    /// Marks a separator. Ignored on an empty path; repeated calls collapse.
    pub fn pen_up(&mut self) {
        if !self.runs.is_empty() {
            self.pending_break = true;
        }
    }

    /// Appends `other`, optionally separated from the current content.
    /// Without separation the adjacent runs merge (plain concatenation).
    pub fn append(&mut self, other: &PointPath, separate: bool) {
        if separate {
            self.pen_up();
        }
        for element in other.iter_elements() {
            match element {
                PathElement::Point(z) => self.push_point(z),
                PathElement::PenUp => self.pen_up(),
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn point_count(&self) -> usize {
        self.runs.iter().map(Vec::len).sum()
    }

    pub fn pen_up_count(&self) -> usize {
        self.runs.len().saturating_sub(1)
    }

    pub fn element_count(&self) -> usize {
        self.point_count() + self.pen_up_count()
    }

    pub fn points(&self) -> impl Iterator<Item = Complex> + '_ {
        self.runs.iter().flatten().copied()
    }

    /// Pen-down runs, in order. Every run is nonempty.
    pub fn runs(&self) -> impl Iterator<Item = &[Complex]> + '_ {
        self.runs.iter().map(Vec::as_slice)
    }

    pub fn iter_elements(&self) -> impl Iterator<Item = PathElement> + '_ {
        self.runs.iter().enumerate().flat_map(|(i, run)| {
            let sep = if i > 0 { Some(PathElement::PenUp) } else { None };
            sep.into_iter()
                .chain(run.iter().copied().map(PathElement::Point))
        })
    }

    /// Applies `f` to every point, preserving separator positions.
    pub fn map_points<F: FnMut(Complex) -> Complex>(&self, mut f: F) -> PointPath {
        PointPath {
            runs: self
                .runs
                .iter()
                .map(|run| run.iter().map(|&z| f(z)).collect())
                .collect(),
            pending_break: false,
        }
    }

    /// Fallible version of [`map_points`](Self::map_points).
    pub fn try_map_points<F>(&self, mut f: F) -> Result<PointPath>
    where
        F: FnMut(Complex) -> Result<Complex>,
    {
        let runs = self
            .runs
            .iter()
            .map(|run| run.iter().map(|&z| f(z)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(PointPath {
            runs,
            pending_break: false,
        })
    }
}
