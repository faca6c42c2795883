//! Reduced words over the order-2 and order-3 generators.
//!
//! A reduced word alternates between the tokens `s` and `t`/`tt`; it is the
//! normal form of the free product Z/2 * Z/3, so distinct reduced words are
//! distinct group elements.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::mat::Mat2;
use super::Psl2zError;

/// One token of a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    /// The order-2 generator, printed `s`.
    Sigma,
    /// The order-3 generator, printed `t`.
    Tau,
    /// Its square, printed `tt`.
    TauSq,
}

impl Gen {
    fn is_tau_type(self) -> bool {
        matches!(self, Gen::Tau | Gen::TauSq)
    }

    /// Contribution to the word length.
    fn weight(self) -> usize {
        match self {
            Gen::Sigma | Gen::Tau => 1,
            Gen::TauSq => 2,
        }
    }

    fn mat(self) -> Mat2 {
        match self {
            Gen::Sigma => Mat2::sigma(),
            Gen::Tau => Mat2::tau(),
            Gen::TauSq => Mat2::tau().mul(&Mat2::tau()),
        }
    }

    fn inverse(self) -> Gen {
        match self {
            Gen::Sigma => Gen::Sigma,
            Gen::Tau => Gen::TauSq,
            Gen::TauSq => Gen::Tau,
        }
    }
}

/// A reduced word. The token list never contains two adjacent `s` tokens or
/// two adjacent `t`-type tokens.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    toks: Vec<Gen>,
}

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord { toks: Vec::new() }
    }

    pub fn new(toks: Vec<Gen>) -> Result<Self, Psl2zError> {
        for pair in toks.windows(2) {
            let clash = (pair[0] == Gen::Sigma && pair[1] == Gen::Sigma)
                || (pair[0].is_tau_type() && pair[1].is_tau_type());
            if clash {
                let s = GroupWord { toks: toks.clone() }.to_string();
                return Err(Psl2zError::MalformedWord(s, "adjacent tokens of one factor".into()));
            }
        }
        Ok(GroupWord { toks })
    }

    /// Greedy tokenizer over the alphabet {s, t, tt}: `tt` binds tighter
    /// than `t`, which is unambiguous on reduced words.
    pub fn parse(text: &str) -> Result<Self, Psl2zError> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            match chars[i] {
                's' => {
                    toks.push(Gen::Sigma);
                    i += 1;
                }
                't' => {
                    if i + 1 < chars.len() && chars[i + 1] == 't' {
                        toks.push(Gen::TauSq);
                        i += 2;
                    } else {
                        toks.push(Gen::Tau);
                        i += 1;
                    }
                }
                other => {
                    return Err(Psl2zError::MalformedWord(
                        text.to_string(),
                        format!("unexpected character {other:?}"),
                    ));
                }
            }
        }
        GroupWord::new(toks)
    }

    pub fn tokens(&self) -> &[Gen] {
        &self.toks
    }

    pub fn is_empty(&self) -> bool {
        self.toks.is_empty()
    }

    /// Word length: `s` and `t` count 1, `tt` counts 2.
    pub fn len(&self) -> usize {
        self.toks.iter().map(|g| g.weight()).sum()
    }

    /// Matrix of the word, multiplying tokens left to right.
    pub fn eval(&self) -> Mat2 {
        let mut m = Mat2::identity();
        for g in &self.toks {
            m = m.mul(&g.mat());
        }
        m
    }

    /// Push one generator on the right, cancelling in the free product.
    fn push(&mut self, g: Gen) {
        match (self.toks.last().copied(), g) {
            (Some(Gen::Sigma), Gen::Sigma) => {
                self.toks.pop();
            }
            (Some(Gen::Tau), Gen::Tau) => {
                *self.toks.last_mut().unwrap() = Gen::TauSq;
            }
            (Some(Gen::Tau), Gen::TauSq) | (Some(Gen::TauSq), Gen::Tau) => {
                self.toks.pop();
            }
            (Some(Gen::TauSq), Gen::TauSq) => {
                *self.toks.last_mut().unwrap() = Gen::Tau;
            }
            _ => self.toks.push(g),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        let mut out = self.clone();
        for g in &other.toks {
            out.push(*g);
        }
        out
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord { toks: self.toks.iter().rev().map(|g| g.inverse()).collect() }
    }

    /// Split off the last generator: `w = h s` or `w = h t`, with `h`
    /// shorter by one. A trailing `tt` peels a single `t`, leaving `h`
    /// ending in `t`. Returns None on the empty word.
    pub fn split_last(&self) -> Option<(GroupWord, Gen)> {
        let mut toks = self.toks.clone();
        let last = toks.pop()?;
        match last {
            Gen::Sigma => Some((GroupWord { toks }, Gen::Sigma)),
            Gen::Tau => Some((GroupWord { toks }, Gen::Tau)),
            Gen::TauSq => {
                toks.push(Gen::Tau);
                Some((GroupWord { toks }, Gen::Tau))
            }
        }
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.toks {
            match g {
                Gen::Sigma => write!(f, "s")?,
                Gen::Tau => write!(f, "t")?,
                Gen::TauSq => write!(f, "tt")?,
            }
        }
        Ok(())
    }
}

impl Serialize for GroupWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GroupWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        GroupWord::parse(&s).map_err(D::Error::custom)
    }
}

/// The reduced word of a matrix.
///
/// The matrix is first written over the translation `T = (1,1;0,1)` and the
/// inversion by the Euclidean algorithm on the first column, then `T` is
/// rewritten as `tt s` (and `T^-1` as `s t`) and the concatenation reduced
/// in the free product. Uniqueness of the reduced word makes the result
/// canonical; `eval` inverts it by construction.
pub fn normal_form(m: &Mat2) -> GroupWord {
    // Left-peel: M = T^q S M' with M' = S^-1 T^-q M, until the lower-left
    // entry vanishes; the terminal matrix is projectively T^m.
    let (a, b, c, d) = m.entries();
    let (mut a, mut b, mut c, mut d) = (a.clone(), b.clone(), c.clone(), d.clone());
    let mut st: Vec<(BigInt, bool)> = Vec::new(); // (T-power, followed by S?)
    while !c.is_zero() {
        let q = a.div_floor(&c);
        // T^-q row operation, then the inversion swap.
        let a1 = &a - &q * &c;
        let b1 = &b - &q * &d;
        let (na, nb, nc, nd) = (c.clone(), d.clone(), -a1, -b1);
        a = na;
        b = nb;
        c = nc;
        d = nd;
        st.push((q, true));
    }
    // Now (a, b; 0, d) with a = d = +-1: projectively T^(a*b).
    let tail = if a.is_positive() { b.clone() } else { -&b };
    st.push((tail, false));
    debug_assert!((&a * &d).abs() == BigInt::from(1));

    let mut w = GroupWord::identity();
    for (q, then_s) in &st {
        let n = q.abs().to_i64().expect("T-power fits i64");
        for _ in 0..n {
            if q.is_positive() {
                w.push(Gen::TauSq);
                w.push(Gen::Sigma);
            } else {
                w.push(Gen::Sigma);
                w.push(Gen::Tau);
            }
        }
        if *then_s {
            w.push(Gen::Sigma);
        }
    }
    debug_assert_eq!(&w.eval(), m);
    w
}

/// All reduced words of length at most `max_len`, in depth-first order.
pub fn words_up_to(max_len: usize) -> Vec<GroupWord> {
    let mut out = vec![GroupWord::identity()];
    let mut stack: Vec<Vec<Gen>> = vec![Vec::new()];
    while let Some(cur) = stack.pop() {
        let len: usize = cur.iter().map(|g| g.weight()).sum();
        let last_tau = cur.last().map(|g| g.is_tau_type());
        for g in [Gen::Sigma, Gen::Tau, Gen::TauSq] {
            let ok = match last_tau {
                None => true,
                Some(true) => g == Gen::Sigma,
                Some(false) => g.is_tau_type(),
            };
            if ok && len + g.weight() <= max_len {
                let mut next = cur.clone();
                next.push(g);
                out.push(GroupWord { toks: next.clone() });
                stack.push(next);
            }
        }
    }
    out
}

/// A reduced word of length at most `max_len`, sampled by pushing admissible
/// tokens toward a uniformly chosen target length.
pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> GroupWord {
    let target = rng.gen_range(0..=max_len);
    let mut toks: Vec<Gen> = Vec::new();
    let mut len = 0;
    while len < target {
        let tau_next = match toks.last() {
            None => rng.gen_bool(0.5),
            Some(g) => !g.is_tau_type(),
        };
        let g = if tau_next {
            if len + 2 <= target && rng.gen_bool(0.5) {
                Gen::TauSq
            } else {
                Gen::Tau
            }
        } else {
            Gen::Sigma
        };
        len += g.weight();
        toks.push(g);
    }
    GroupWord { toks }
}
