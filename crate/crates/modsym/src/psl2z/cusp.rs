//! Points of the extended upper half plane: rationals, infinity, and
//! interior points.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Psl2zError;

/// A cusp `num/den` in lowest terms with `den >= 0`; infinity is `1/0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cusp {
    num: BigInt,
    den: BigInt,
}

impl Cusp {
    /// Reduce `num/den` to canonical form. `(0, 0)` is rejected.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Psl2zError> {
        if num.is_zero() && den.is_zero() {
            return Err(Psl2zError::MalformedCusp("0/0".into()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (&num / &g, &den / &g);
        if den.is_negative() || (den.is_zero() && num.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(Cusp { num, den })
    }

    pub fn new_i64(num: i64, den: i64) -> Result<Self, Psl2zError> {
        Cusp::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn infinity() -> Self {
        Cusp { num: BigInt::from(1), den: BigInt::zero() }
    }

    pub fn zero() -> Self {
        Cusp { num: BigInt::zero(), den: BigInt::from(1) }
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Homogeneous coordinates `(num, den)` in canonical form.
    pub fn projective(&self) -> (&BigInt, &BigInt) {
        (&self.num, &self.den)
    }

    /// The cusp as an exact rational; None at infinity.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_infinity() {
            None
        } else {
            Some(BigRational::new(self.num.clone(), self.den.clone()))
        }
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.to_rational().and_then(|r| r.to_f64())
    }

    /// Parse `inf` or `p/q` or a bare integer.
    pub fn parse(text: &str) -> Result<Self, Psl2zError> {
        let text = text.trim();
        if text == "inf" || text == "oo" {
            return Ok(Cusp::infinity());
        }
        let bad = || Psl2zError::MalformedCusp(text.to_string());
        match text.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                Cusp::new(p, q)
            }
            None => {
                let p: BigInt = text.parse().map_err(|_| bad())?;
                Ok(Cusp { num: p, den: BigInt::from(1) })
            }
        }
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            write!(f, "inf")
        } else if self.den == BigInt::from(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl Serialize for Cusp {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Cusp {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Cusp::parse(&s).map_err(D::Error::custom)
    }
}

/// Either a boundary cusp or an interior point of the upper half plane.
#[derive(Clone, Debug, PartialEq)]
pub enum ExtendedPoint {
    Cusp(Cusp),
    Interior(Complex64),
}

impl ExtendedPoint {
    pub fn infinity() -> Self {
        ExtendedPoint::Cusp(Cusp::infinity())
    }

    /// The interior point `i`.
    pub fn i() -> Self {
        ExtendedPoint::Interior(Complex64::new(0.0, 1.0))
    }

    /// The interior point `exp(i pi / 3)`, the fixed point of the order-3
    /// generator.
    pub fn rho() -> Self {
        ExtendedPoint::Interior(Complex64::new(0.5, 0.5 * 3.0_f64.sqrt()))
    }

    pub fn interior(z: Complex64) -> Result<Self, Psl2zError> {
        if z.im <= 0.0 || !z.im.is_finite() || !z.re.is_finite() {
            return Err(Psl2zError::NotInUpperHalfPlane(format!("{}+{}i", z.re, z.im)));
        }
        Ok(ExtendedPoint::Interior(z))
    }

    pub fn as_cusp(&self) -> Option<&Cusp> {
        match self {
            ExtendedPoint::Cusp(c) => Some(c),
            ExtendedPoint::Interior(_) => None,
        }
    }

    pub fn as_interior(&self) -> Option<Complex64> {
        match self {
            ExtendedPoint::Cusp(_) => None,
            ExtendedPoint::Interior(z) => Some(*z),
        }
    }
}

impl fmt::Display for ExtendedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedPoint::Cusp(c) => write!(f, "{c}"),
            ExtendedPoint::Interior(z) => write!(f, "{}+{}i", z.re, z.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let c = Cusp::new_i64(6, -4).unwrap();
        assert_eq!(c.to_string(), "-3/2");
        assert_eq!(Cusp::new_i64(-5, 0).unwrap(), Cusp::infinity());
        assert_eq!(Cusp::new_i64(0, 7).unwrap(), Cusp::zero());
        assert!(Cusp::new_i64(0, 0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for text in ["inf", "0", "3/5", "-3/2", "7"] {
            let c = Cusp::parse(text).unwrap();
            assert_eq!(c.to_string(), text);
        }
        assert_eq!(Cusp::parse("6/10").unwrap().to_string(), "3/5");
        assert!(Cusp::parse("a/b").is_err());
    }

    #[test]
    fn interior_validation() {
        assert!(ExtendedPoint::interior(Complex64::new(0.0, -1.0)).is_err());
        assert!(ExtendedPoint::interior(Complex64::new(0.0, 0.0)).is_err());
        let z = ExtendedPoint::rho().as_interior().unwrap();
        assert!((z.norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn json_round_trip() {
        let c = Cusp::new_i64(3, 5).unwrap();
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, "\"3/5\"");
        let back: Cusp = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
    }
}
