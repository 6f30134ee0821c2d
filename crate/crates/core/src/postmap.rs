//! Elementwise complex transforms applied over point paths.

use std::fmt;

use crate::complex::{cexp, principal_arg, principal_power, Complex};
use crate::error::{Error, Result};
use crate::ifs::SENTINEL_THRESHOLD;
use crate::path::PointPath;

/// Largest monomial exponent. Bounds the dynamic range: attractor moduli
/// stay below sqrt(2), sentinels below 100, so 100^12 is still finite.
pub const MAX_POWER: u32 = 12;

/// A tagged elementwise transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PostMap {
    Identity,
    /// `z^n`, evaluated by repeated multiplication (no branch cut).
    MonomialPower(u32),
    /// `exp(z^(num/den))` through the principal branch.
    ExpRationalPower { num: u32, den: u32 },
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl PostMap {
    /// Monomial power with the exponent bound checked.
    pub fn power(n: u32) -> Result<Self> {
        if n < 1 || n > MAX_POWER {
            return Err(Error::PowerOutOfRange(n, MAX_POWER));
        }
        Ok(PostMap::MonomialPower(n))
    }

    /// Exponential of a rational power, reduced to lowest terms.
    pub fn exp_rational(num: u32, den: u32) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::NonPositiveExponent { num, den });
        }
        let d = gcd(num, den);
        Ok(PostMap::ExpRationalPower {
            num: num / d,
            den: den / d,
        })
    }

    /// Applies the map to one point, rejecting non-finite results.
    pub fn apply_point(self, z: Complex) -> Result<Complex> {
        let out = match self {
            PostMap::Identity => z,
            PostMap::MonomialPower(n) => z.powu(n),
            PostMap::ExpRationalPower { num, den } => {
                cexp(principal_power(z, f64::from(num) / f64::from(den))?)
            }
        };
        if !out.is_finite() {
            return Err(Error::NonFinite {
                op: self.to_string(),
                input: z,
            });
        }
        Ok(out)
    }
}

impl fmt::Display for PostMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PostMap::Identity => write!(f, "identity"),
            PostMap::MonomialPower(n) => write!(f, "pow:{n}"),
            PostMap::ExpRationalPower { num, den } => write!(f, "exppow:{num}/{den}"),
        }
    }
}

/// Applies `map` to every point of `g`; separators pass through, so the
/// output has the same element count and separator positions as the input.
pub fn apply_post_map(map: PostMap, g: &PointPath) -> Result<PointPath> {
    g.try_map_points(|z| map.apply_point(z))
}

/// Min and max principal argument over the nonzero points of `g`.
///
/// Points beyond the sentinel threshold are excluded, so the span measures
/// the attractor content of faithful paths as well.
pub fn sector_span(g: &PointPath) -> Result<(f64, f64)> {
    let mut min_arg = f64::INFINITY;
    let mut max_arg = f64::NEG_INFINITY;
    for z in g.points() {
        if (z.re == 0.0 && z.im == 0.0) || z.re > SENTINEL_THRESHOLD {
            continue;
        }
        let theta = principal_arg(z)?;
        min_arg = min_arg.min(theta);
        max_arg = max_arg.max(theta);
    }
    if min_arg > max_arg {
        return Err(Error::NoNonzeroPoints);
    }
    Ok((min_arg, max_arg))
}
