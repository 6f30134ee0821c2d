//! Complex arithmetic and the principal-branch power function.
//!
//! Everything downstream works on finite values only. The two fallible
//! operations here are `principal_arg` (undefined at zero) and
//! `principal_power` (zero base needs a positive exponent, and the result is
//! checked for overflow). Plain arithmetic and `cexp` are left unchecked;
//! the path-level transforms validate their outputs instead.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A point of the z-plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    /// `r * (cos theta + i sin theta)`.
    pub fn from_polar(r: f64, theta: f64) -> Self {
        Complex::new(r * theta.cos(), r * theta.sin())
    }

    pub fn modulus(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// Integer power by binary exponentiation. `z^0 = 1`.
    ///
    /// This is exact polynomial evaluation: no logarithm, no branch cut.
    pub fn powu(self, n: u32) -> Complex {
        let mut acc = Complex::ONE;
        let mut base = self;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * base;
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base * base;
        }
        acc
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        Complex::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        Complex::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        Complex::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Mul<f64> for Complex {
    type Output = Complex;
    fn mul(self, rhs: f64) -> Complex {
        Complex::new(self.re * rhs, self.im * rhs)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

/// Principal argument, in `(-pi, pi]`.
///
/// The branch cut lands on the negative real axis, where the argument is
/// `+pi` regardless of the sign of a zero imaginary part.
pub fn principal_arg(z: Complex) -> Result<f64> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::ZeroArgument);
    }
    if z.im == 0.0 {
        // Normalizes -0.0 imaginary parts, which atan2 would send to -pi.
        return Ok(if z.re > 0.0 { 0.0 } else { std::f64::consts::PI });
    }
    Ok(z.im.atan2(z.re))
}

/// Reduces an angle into the principal interval `(-pi, pi]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let tau = 2.0 * std::f64::consts::PI;
    let t = theta.rem_euclid(tau);
    if t > std::f64::consts::PI {
        t - tau
    } else {
        t
    }
}

/// Principal-branch power `z^p = exp(p (ln|z| + i Arg z))`, with `0^p = 0`
/// for positive `p`.
pub fn principal_power(z: Complex, p: f64) -> Result<Complex> {
    if z.re == 0.0 && z.im == 0.0 {
        return if p > 0.0 {
            Ok(Complex::ZERO)
        } else {
            Err(Error::ZeroToNonPositivePower)
        };
    }
    let theta = principal_arg(z)?;
    let out = Complex::from_polar(z.modulus().powf(p), p * theta);
    if !out.is_finite() {
        return Err(Error::NonFinite {
            op: format!("principal_power(.., {p})"),
            input: z,
        });
    }
    Ok(out)
}

/// Complex exponential `e^re (cos im + i sin im)`.
pub fn cexp(z: Complex) -> Complex {
    let r = z.re.exp();
    Complex::new(r * z.im.cos(), r * z.im.sin())
}
