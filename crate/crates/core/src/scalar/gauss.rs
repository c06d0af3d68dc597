//! Gaussian rationals ℚ(i).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `re + im·i` of ℚ(i). Both parts are kept in lowest terms with
/// positive denominators by `BigRational`, so derived equality is equality of
/// canonical forms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

/// The four field operations, as named by `gauss_arith`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a real Gaussian rational. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² = re² + im².
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.checked_inv()?)
    }
}

/// Exact arithmetic in ℚ(i); `Div` by zero is reported, not panicked.
pub fn gauss_arith(a: &GaussRat, b: &GaussRat, op: ArithOp) -> Result<GaussRat> {
    Ok(match op {
        ArithOp::Add => a.clone() + b.clone(),
        ArithOp::Sub => a.clone() - b.clone(),
        ArithOp::Mul => a.clone() * b.clone(),
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl From<BigRational> for GaussRat {
    fn from(q: BigRational) -> Self {
        Self::real(q)
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for GaussRat {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussRat {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussRat {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Self { re, im }
    }
}

impl Div for GaussRat {
    type Output = Self;
    /// Panics on a zero divisor; use [`GaussRat::checked_div`] to get an error.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("GaussRat division by zero")
    }
}

impl Neg for GaussRat {
    type Output = Self;
    fn neg(self) -> Self {
        Self { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussRat {
    fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRat {
    fn one() -> Self {
        Self::from_int(1)
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

/// Writes the imaginary part `q·i` without a sign (`i`, `2i`, `1/2i`).
fn fmt_imag_abs(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let a = q.abs();
    if !a.is_one() {
        fmt_rational(&a, f)?;
    }
    write!(f, "i")
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => fmt_rational(&self.re, f),
            (true, false) => {
                if self.im.is_negative() {
                    write!(f, "-")?;
                }
                fmt_imag_abs(&self.im, f)
            }
            (false, false) => {
                fmt_rational(&self.re, f)?;
                write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
                fmt_imag_abs(&self.im, f)
            }
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussRat {
        GaussRat::new(
            BigRational::from_integer(re.into()),
            BigRational::from_integer(im.into()),
        )
    }

    #[test]
    fn multiplication_by_hand() {
        assert_eq!(gauss_arith(&g(1, 2), &g(3, -1), ArithOp::Mul).unwrap(), g(5, 5));
    }

    #[test]
    fn fractions_add_in_lowest_terms() {
        let s = gauss_arith(&GaussRat::ratio(1, 2), &GaussRat::ratio(1, 3), ArithOp::Add).unwrap();
        assert_eq!(s, GaussRat::ratio(5, 6));
        assert_eq!(s.to_string(), "5/6");
    }

    #[test]
    fn one_over_i() {
        let q = gauss_arith(&GaussRat::one(), &GaussRat::i(), ArithOp::Div).unwrap();
        assert_eq!(q, -GaussRat::i());
    }

    #[test]
    fn divide_by_zero_is_an_error() {
        assert_eq!(
            gauss_arith(&g(1, 1), &GaussRat::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(-3, 2).to_string(), "-3+2i");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(0, 0).to_string(), "0");
        let half_i = GaussRat::new(BigRational::zero(), BigRational::new(1.into(), 2.into()));
        assert_eq!(half_i.to_string(), "1/2i");
    }

    #[test]
    fn denominators_stay_canonical() {
        let a = GaussRat::ratio(2, -4);
        assert_eq!(a.re.denom(), &BigInt::from(2));
        assert_eq!(a.re.numer(), &BigInt::from(-1));
    }
}
