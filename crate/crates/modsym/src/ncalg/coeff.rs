//! The coefficient ring abstraction: enough arithmetic for truncated
//! series manipulation, over floats or exact rationals.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Field operations used by the series algebra. `div` may panic on zero
/// divisors; callers divide only by ring elements known to be invertible
/// (constant terms checked beforehand, integer factorials).
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div(&self, other: &Self) -> Self;
    fn div_int(&self, n: i64) -> Self {
        self.div(&Self::from_i64(n))
    }
    /// Magnitude as a float, for residual reporting.
    fn abs_f64(&self) -> f64;
    /// Square root, defined where the coefficient admits one. Rationals
    /// panic on non-squares; series square roots over exact coefficients
    /// only ever take roots of perfect squares in the use sites here.
    fn sqrt(&self) -> Self;
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, other: &Self) -> Self {
        self / other
    }

    fn abs_f64(&self) -> f64 {
        self.norm()
    }

    fn sqrt(&self) -> Self {
        Complex64::sqrt(*self)
    }
}

impl Coeff for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as One>::one()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn div(&self, other: &Self) -> Self {
        assert!(!Zero::is_zero(other), "rational division by zero");
        self / other
    }

    fn abs_f64(&self) -> f64 {
        Signed::abs(self).to_f64().unwrap_or(f64::INFINITY)
    }

    fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "rational square root of a negative");
        let num = Signed::abs(self.numer()).sqrt();
        let den = self.denom().sqrt();
        let cand = BigRational::new(num, den);
        assert_eq!(&cand * &cand, *self, "rational square root of a non-square");
        cand
    }
}
