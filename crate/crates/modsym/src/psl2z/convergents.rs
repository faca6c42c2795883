//! Continued-fraction convergents of a cusp, packaged as group elements.
//!
//! For a rational cusp `r` the convergents `c_0 = floor part, ..., c_n = r`
//! are extended by `c_{-1} = infinity`. Each step has a matrix `g_k` of
//! determinant one with `g_k(infinity) = c_k` and `g_k(0) = c_{k-1}`, so
//! the chain of geodesics `{c_{k-1}, c_k}` is the `g_k`-image of the base
//! geodesic `{0, infinity}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::cusp::Cusp;
use super::mat::Mat2;
use super::Psl2zError;

/// The convergent chain of a cusp.
#[derive(Clone, Debug)]
pub struct Convergents {
    cusps: Vec<Cusp>,
    mats: Vec<Mat2>,
}

impl Convergents {
    /// The convergents including the target itself; `cusps[k]` is `c_k`.
    pub fn cusps(&self) -> &[Cusp] {
        &self.cusps
    }

    /// `mats[k]` sends `infinity` to `c_k` and `0` to `c_{k-1}`, with
    /// `c_{-1} = infinity`.
    pub fn mats(&self) -> &[Mat2] {
        &self.mats
    }

    pub fn last_mat(&self) -> &Mat2 {
        self.mats.last().expect("chain is never empty")
    }
}

/// Continued-fraction chain of `target`, which must be a finite rational.
pub fn convergents(target: &Cusp) -> Result<Convergents, Psl2zError> {
    if target.is_infinity() {
        return Err(Psl2zError::MalformedCusp(
            "convergents of infinity are not defined".into(),
        ));
    }
    // Floor continued fraction: r = a_0 + 1/(a_1 + 1/(...)), a_k >= 1 for
    // k >= 1, computed by the Euclidean algorithm on (num, den).
    let mut p = target.numerator().clone();
    let mut q = target.denominator().clone();
    let mut partials: Vec<BigInt> = Vec::new();
    while !q.is_zero() {
        let a = p.div_floor(&q);
        let r = &p - &a * &q;
        partials.push(a);
        p = q;
        q = r;
    }

    // p_{-1}/q_{-1} = 1/0, then the standard recurrence.
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p_prev2, mut q_prev2) = (BigInt::zero(), BigInt::one());
    let mut cusps = Vec::with_capacity(partials.len());
    let mut mats = Vec::with_capacity(partials.len());
    for (k, a) in partials.iter().enumerate() {
        let pk = a * &p_prev + &p_prev2;
        let qk = a * &q_prev + &q_prev2;
        // det (p_k, s p_{k-1}; q_k, s q_{k-1}) = -s (p_k q_{k-1} - p_{k-1} q_k)
        // = -s (-1)^{k-1}, so s = (-1)^{k-1} gives determinant one.
        let s = if k % 2 == 0 { BigInt::from(-1) } else { BigInt::one() };
        let m = Mat2::new(pk.clone(), &s * &p_prev, qk.clone(), &s * &q_prev)?;
        cusps.push(Cusp::new(pk.clone(), qk.clone())?);
        mats.push(m);
        p_prev2 = std::mem::replace(&mut p_prev, pk);
        q_prev2 = std::mem::replace(&mut q_prev, qk);
    }
    debug_assert_eq!(cusps.last(), Some(target));
    Ok(Convergents { cusps, mats })
}
