//! Exact scalars: ℚ, ℚ(i), and polynomials over ℚ(i) in named parameters.
//!
//! Everything above this module is generic over [`Scalar`]. A "for all
//! parameter values" claim is checked by running the same code on [`Poly`]
//! and testing the result for the zero polynomial.

mod gauss;
mod parse;
mod poly;

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use gauss::{gauss_arith, ArithOp, GaussRat};
pub use parse::{parse_gauss, parse_poly};
pub use poly::{poly_arith, poly_eval, poly_is_zero, ParamSet, Poly, PolyOp};

/// An exact commutative ring with a partial, exact division.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Send + Sync + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
    /// Embeds ℚ.
    fn from_rational(q: BigRational) -> Self;

    /// `a / d` when the quotient exists in the ring; `None` otherwise
    /// (zero divisor, or a polynomial quotient that is not exact).
    fn try_div(&self, d: &Self) -> Option<Self>;

    /// Parameters the value depends on. Empty for field elements.
    fn params(&self) -> BTreeSet<String> {
        BTreeSet::new()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(num.into(), den.into()))
    }

    fn try_inv(&self) -> Option<Self> {
        Self::one().try_div(self)
    }
}

impl Scalar for BigRational {
    fn from_rational(q: BigRational) -> Self {
        q
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

impl Scalar for GaussRat {
    fn from_rational(q: BigRational) -> Self {
        GaussRat::real(q)
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        self.checked_div(d).ok()
    }
}

impl Scalar for Poly {
    fn from_rational(q: BigRational) -> Self {
        Poly::constant(GaussRat::real(q))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d).ok()
    }

    fn params(&self) -> BTreeSet<String> {
        Poly::params(self)
    }
}

/// Union of the parameters of a collection of scalars, sorted.
pub fn params_of<'a, S: Scalar + 'a>(values: impl IntoIterator<Item = &'a S>) -> Vec<String> {
    let mut out = BTreeSet::new();
    for v in values {
        out.extend(v.params());
    }
    out.into_iter().collect()
}
