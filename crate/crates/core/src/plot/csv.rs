//! CSV exchange: one `re,im` line per point, an empty line per separator.
//!
//! Numbers are written as the shortest decimal that parses back to the same
//! double, so a round trip through text is lossless.

use std::fmt::Write;

use crate::complex::Complex;
use crate::error::{Error, Result};
use crate::path::PointPath;

pub fn write_csv(g: &PointPath) -> String {
    let mut out = String::new();
    for (i, run) in g.runs().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        for z in run {
            let _ = writeln!(out, "{},{}", z.re, z.im);
        }
    }
    out
}

pub fn read_csv(text: &str) -> Result<PointPath> {
    let mut path = PointPath::new();
    let mut prev_blank = false;
    let mut last_line = 0usize;
    for (idx, line) in text.lines().enumerate() {
        let number = idx + 1;
        last_line = number;
        if line.is_empty() {
            if path.is_empty() {
                return Err(Error::CsvParse {
                    line: number,
                    message: "separator before any point".into(),
                });
            }
            if prev_blank {
                return Err(Error::CsvParse {
                    line: number,
                    message: "consecutive separators".into(),
                });
            }
            path.pen_up();
            prev_blank = true;
            continue;
        }
        prev_blank = false;
        let (re_text, im_text) = line.split_once(',').ok_or_else(|| Error::CsvParse {
            line: number,
            message: format!("expected 're,im', got '{line}'"),
        })?;
        let re = parse_component(re_text, number)?;
        let im = parse_component(im_text, number)?;
        path.push_point(Complex::new(re, im));
    }
    if prev_blank {
        return Err(Error::CsvParse {
            line: last_line,
            message: "trailing separator".into(),
        });
    }
    Ok(path)
}

fn parse_component(text: &str, line: usize) -> Result<f64> {
    let value: f64 = text.parse().map_err(|_| Error::CsvParse {
        line,
        message: format!("invalid number '{text}'"),
    })?;
    if !value.is_finite() {
        return Err(Error::CsvParse {
            line,
            message: format!("non-finite number '{text}'"),
        });
    }
    Ok(value)
}
