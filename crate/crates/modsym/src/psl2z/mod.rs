//! The modular group PSL(2,Z) as matrices and as words.
//!
//! Provided here:
//!
//! - [`Mat2`]: projective unimodular integer matrices with a canonical sign.
//! - [`GroupWord`]: reduced words over the generators `s` (order 2) and
//!   `t` (order 3), the free-product normal form.
//! - [`GroupElement`]: a matrix and its word kept in sync.
//! - [`Cusp`] and [`ExtendedPoint`]: boundary and interior points of the
//!   completed upper half plane.
//! - [`convergents`]: continued-fraction convergents of a rational together
//!   with the unimodular matrices mapping (0, infinity) onto consecutive
//!   convergent pairs.
//! - [`cusp_stabilizer_generator`]: a generator of the stabilizer of a cusp.

mod convergents;
mod cusp;
mod mat;
mod word;

pub use convergents::{convergents, Convergents};
pub use cusp::{Cusp, ExtendedPoint};
pub use mat::Mat2;
pub use word::{normal_form, random_word, words_up_to, Gen, GroupWord};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Psl2zError {
    #[error("matrix ({0}, {1}; {2}, {3}) has determinant {4}, expected 1")]
    NotUnimodular(String, String, String, String, String),
    #[error("malformed word {0:?}: {1}")]
    MalformedWord(String, String),
    #[error("malformed cusp {0:?}")]
    MalformedCusp(String),
    #[error("point {0} is not in the upper half plane")]
    NotInUpperHalfPlane(String),
}

/// A group element carried simultaneously as a matrix and as its reduced
/// word. The two representations are kept consistent by construction.
#[derive(Clone, Debug)]
pub struct GroupElement {
    word: GroupWord,
    mat: Mat2,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { word: GroupWord::identity(), mat: Mat2::identity() }
    }

    pub fn sigma() -> Self {
        GroupElement::from_word(GroupWord::parse("s").unwrap())
    }

    pub fn tau() -> Self {
        GroupElement::from_word(GroupWord::parse("t").unwrap())
    }

    pub fn from_word(word: GroupWord) -> Self {
        let mat = word.eval();
        GroupElement { word, mat }
    }

    pub fn from_mat(mat: Mat2) -> Self {
        let word = normal_form(&mat);
        GroupElement { word, mat }
    }

    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    pub fn mat(&self) -> &Mat2 {
        &self.mat
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            word: self.word.concat(&other.word),
            mat: self.mat.mul(&other.mat),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement { word: self.word.inverse(), mat: self.mat.inverse() }
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Word length: each `s` and `t` counts 1, each `tt` counts 2.
    pub fn len(&self) -> usize {
        self.word.len()
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for GroupElement {}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.word)
        }
    }
}

/// A generator of the stabilizer of `a` in PSL(2,Z).
///
/// The stabilizer of infinity is generated by the translation `st`; for a
/// finite cusp the translation is conjugated by a matrix carrying infinity
/// to the cusp.
pub fn cusp_stabilizer_generator(a: &Cusp) -> GroupElement {
    let st = GroupElement::from_word(GroupWord::parse("st").unwrap());
    if a.is_infinity() {
        return st;
    }
    let conv = convergents(a).expect("finite cusp");
    let g = GroupElement::from_mat(conv.last_mat().clone());
    g.mul(&st).mul(&g.inverse())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stabilizer_of_infinity_is_translation() {
        let g = cusp_stabilizer_generator(&Cusp::infinity());
        assert_eq!(g.word().to_string(), "st");
        // st = (1, -1; 0, 1) projectively: the shift z -> z - 1.
        assert_eq!(g.mat(), &Mat2::new_i64(1, -1, 0, 1).unwrap());
        assert_eq!(g.mat().mobius_cusp(&Cusp::infinity()), Cusp::infinity());
    }

    #[test]
    fn stabilizer_of_zero() {
        let g = cusp_stabilizer_generator(&Cusp::zero());
        assert_eq!(g.word().to_string(), "ts");
        assert_eq!(g.mat().mobius_cusp(&Cusp::zero()), Cusp::zero());
    }

    #[test]
    fn stabilizer_fixes_its_cusp() {
        for (p, q) in [(1i64, 1), (2, 3), (3, 5), (-4, 7), (5, 1)] {
            let c = Cusp::new(p.into(), q.into()).unwrap();
            let g = cusp_stabilizer_generator(&c);
            assert!(!g.is_identity());
            assert_eq!(g.mat().mobius_cusp(&c), c);
        }
    }

    #[test]
    fn element_mul_keeps_word_and_matrix_in_sync() {
        let s = GroupElement::sigma();
        let t = GroupElement::tau();
        let st = s.mul(&t);
        assert_eq!(st.word().to_string(), "st");
        assert_eq!(st.mat(), &s.mat().mul(t.mat()));
        // s * s = 1, t * t * t = 1.
        assert!(s.mul(&s).is_identity());
        assert!(t.mul(&t).mul(&t).is_identity());
        // Inverse round trip for a longer element.
        let w = GroupElement::from_word(GroupWord::parse("sttstts").unwrap());
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(w.inverse().mat(), &w.mat().inverse());
    }
}
