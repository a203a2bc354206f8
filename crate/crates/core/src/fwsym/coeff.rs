//! Exact Gaussian-rational scalars a + b·i with a, b ∈ ℚ.

use num_rational::Rational64;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Qc {
    pub re: Rational64,
    pub im: Rational64,
}

impl Qc {
    pub fn zero() -> Self {
        Self { re: Rational64::zero(), im: Rational64::zero() }
    }

    pub fn one() -> Self {
        Self { re: Rational64::one(), im: Rational64::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational64::zero(), im: Rational64::one() }
    }

    pub fn real(n: i64, d: i64) -> Self {
        Self { re: Rational64::new(n, d), im: Rational64::zero() }
    }

    pub fn imag(n: i64, d: i64) -> Self {
        Self { re: Rational64::zero(), im: Rational64::new(n, d) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(n, 1)
    }

    /// i^n for the series coefficients.
    pub fn i_pow(n: u32) -> Self {
        match n % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn conj(self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn to_f64(self) -> (f64, f64) {
        let f = |r: Rational64| *r.numer() as f64 / *r.denom() as f64;
        (f(self.re), f(self.im))
    }
}

impl Add for Qc {
    type Output = Qc;
    fn add(self, o: Qc) -> Qc {
        Qc { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Qc {
    type Output = Qc;
    fn sub(self, o: Qc) -> Qc {
        Qc { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Qc {
    type Output = Qc;
    fn mul(self, o: Qc) -> Qc {
        Qc {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

impl Neg for Qc {
    type Output = Qc;
    fn neg(self) -> Qc {
        Qc { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for Qc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => write!(f, "({}+{}i)", self.re, self.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Qc::i() * Qc::i(), -Qc::one());
        assert_eq!(Qc::i_pow(2), -Qc::one());
        assert_eq!(Qc::i_pow(7), -Qc::i());
    }

    #[test]
    fn conjugation() {
        let z = Qc::real(1, 2) + Qc::imag(3, 4);
        assert_eq!(z * z.conj(), Qc::real(1, 4) + Qc::real(9, 16));
    }
}
