//! Projective unimodular 2x2 integer matrices.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cusp::{Cusp, ExtendedPoint};
use super::Psl2zError;

/// An element of PSL(2,Z): an integer matrix of determinant 1 with the sign
/// normalized so that the first nonzero entry in row-major order is
/// positive. Equality and hashing are therefore projective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self, Psl2zError> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(Psl2zError::NotUnimodular(
                a.to_string(),
                b.to_string(),
                c.to_string(),
                d.to_string(),
                det.to_string(),
            ));
        }
        let mut m = Mat2 { a, b, c, d };
        m.normalize_sign();
        Ok(m)
    }

    pub fn new_i64(a: i64, b: i64, c: i64, d: i64) -> Result<Self, Psl2zError> {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    fn normalize_sign(&mut self) {
        let first = [&self.a, &self.b, &self.c, &self.d]
            .into_iter()
            .find(|x| !x.is_zero());
        if let Some(x) = first {
            if x.is_negative() {
                self.a = -&self.a;
                self.b = -&self.b;
                self.c = -&self.c;
                self.d = -&self.d;
            }
        }
    }

    pub fn identity() -> Self {
        Mat2::new_i64(1, 0, 0, 1).unwrap()
    }

    /// The order-2 generator (0, -1; 1, 0).
    pub fn sigma() -> Self {
        Mat2::new_i64(0, -1, 1, 0).unwrap()
    }

    /// The order-3 generator (0, -1; 1, -1).
    pub fn tau() -> Self {
        Mat2::new_i64(0, -1, 1, -1).unwrap()
    }

    pub fn entries(&self) -> (&BigInt, &BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    /// Entries as i64, if they fit. JSON serialization and quadrature both
    /// go through this; group elements at desk scale stay far below i64.
    pub fn entries_i64(&self) -> Option<[i64; 4]> {
        Some([self.a.to_i64()?, self.b.to_i64()?, self.c.to_i64()?, self.d.to_i64()?])
    }

    pub fn entries_f64(&self) -> [f64; 4] {
        [
            self.a.to_f64().expect("entry convertible"),
            self.b.to_f64().expect("entry convertible"),
            self.c.to_f64().expect("entry convertible"),
            self.d.to_f64().expect("entry convertible"),
        ]
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let mut m = Mat2 {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        };
        m.normalize_sign();
        m
    }

    pub fn inverse(&self) -> Mat2 {
        let mut m = Mat2 {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        };
        m.normalize_sign();
        m
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// Sum of absolute values of the entries.
    pub fn entry_norm(&self) -> BigInt {
        self.a.abs() + self.b.abs() + self.c.abs() + self.d.abs()
    }

    /// Fractional linear action on an interior point.
    pub fn mobius_complex(&self, z: Complex64) -> Complex64 {
        let [a, b, c, d] = self.entries_f64();
        (a * z + b) / (c * z + d)
    }

    /// Exact fractional linear action on a cusp.
    pub fn mobius_cusp(&self, p: &Cusp) -> Cusp {
        let (num, den) = p.projective();
        Cusp::new(&self.a * num + &self.b * den, &self.c * num + &self.d * den)
            .expect("unimodular image of a cusp is a cusp")
    }

    pub fn mobius(&self, p: &ExtendedPoint) -> ExtendedPoint {
        match p {
            ExtendedPoint::Cusp(c) => ExtendedPoint::Cusp(self.mobius_cusp(c)),
            ExtendedPoint::Interior(z) => ExtendedPoint::Interior(self.mobius_complex(*z)),
        }
    }
}

impl Hash for Mat2 {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
        self.d.hash(state);
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} {}; {} {}]", self.a, self.b, self.c, self.d)
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let e = self
            .entries_i64()
            .ok_or_else(|| serde::ser::Error::custom("matrix entry exceeds i64"))?;
        e.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [a, b, c, d] = <[i64; 4]>::deserialize(deserializer)?;
        Mat2::new_i64(a, b, c, d).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_wrong_determinant() {
        assert!(Mat2::new_i64(1, 0, 0, -1).is_err());
        assert!(Mat2::new_i64(2, 0, 0, 2).is_err());
        assert!(Mat2::new_i64(0, 0, 0, 0).is_err());
    }

    #[test]
    fn sign_normalization_makes_equality_projective() {
        let m = Mat2::new_i64(-1, 3, 0, -1).unwrap();
        let p = Mat2::new_i64(1, -3, 0, 1).unwrap();
        assert_eq!(m, p);
        // First nonzero entry positive even when a = 0.
        let s = Mat2::new_i64(0, 1, -1, 0).unwrap();
        assert_eq!(s, Mat2::sigma());
    }

    #[test]
    fn generator_orders() {
        let s = Mat2::sigma();
        let t = Mat2::tau();
        assert!(s.mul(&s).is_identity());
        assert!(t.mul(&t).mul(&t).is_identity());
        assert!(!t.mul(&t).is_identity());
    }

    #[test]
    fn sigma_tau_is_translation() {
        let st = Mat2::sigma().mul(&Mat2::tau());
        assert_eq!(st, Mat2::new_i64(1, -1, 0, 1).unwrap());
        let z = Complex64::new(0.3, 1.2);
        let w = st.mobius_complex(z);
        assert!((w - (z - 1.0)).norm() < 1e-15);
    }

    #[test]
    fn inverse_and_mul() {
        let m = Mat2::new_i64(2, 5, 1, 3).unwrap();
        assert!(m.mul(&m.inverse()).is_identity());
        let n = Mat2::new_i64(1, 4, 0, 1).unwrap();
        let prod = m.mul(&n);
        assert_eq!(prod, Mat2::new_i64(2, 13, 1, 7).unwrap());
    }

    #[test]
    fn cusp_action_is_exact() {
        let m = Mat2::new_i64(2, 5, 1, 3).unwrap();
        // infinity -> a/c = 2, 0 -> b/d = 5/3.
        assert_eq!(m.mobius_cusp(&Cusp::infinity()), Cusp::new(2.into(), 1.into()).unwrap());
        assert_eq!(m.mobius_cusp(&Cusp::zero()), Cusp::new(5.into(), 3.into()).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let m = Mat2::new_i64(3, 1, 5, 2).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, "[3,1,5,2]");
        let back: Mat2 = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
