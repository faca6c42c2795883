//! The truncated series type and its multiplicative structure.

use super::coeff::Coeff;
use super::{rank_word, word_rank};

/// A noncommutative power series truncated at a fixed word length, stored
/// densely: `blocks[d]` holds all `n^d` length-`d` coefficients in rank
/// order.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C: Coeff> {
    n_letters: usize,
    depth: usize,
    blocks: Vec<Vec<C>>,
}

impl<C: Coeff> TruncSeries<C> {
    pub fn zero(n_letters: usize, depth: usize) -> Self {
        let blocks = (0..=depth).map(|d| vec![C::zero(); n_letters.pow(d as u32)]).collect();
        TruncSeries { n_letters, depth, blocks }
    }

    pub fn one(n_letters: usize, depth: usize) -> Self {
        let mut s = TruncSeries::zero(n_letters, depth);
        s.blocks[0][0] = C::one();
        s
    }

    pub fn n_letters(&self) -> usize {
        self.n_letters
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn constant_term(&self) -> &C {
        &self.blocks[0][0]
    }

    pub fn get(&self, word: &[usize]) -> &C {
        assert!(word.len() <= self.depth, "word longer than truncation depth");
        &self.blocks[word.len()][word_rank(word, self.n_letters)]
    }

    pub fn set(&mut self, word: &[usize], v: C) {
        assert!(word.len() <= self.depth, "word longer than truncation depth");
        let r = word_rank(word, self.n_letters);
        self.blocks[word.len()][r] = v;
    }

    pub fn block(&self, d: usize) -> &[C] {
        &self.blocks[d]
    }

    pub fn block_mut(&mut self, d: usize) -> &mut [C] {
        &mut self.blocks[d]
    }

    /// Iterate (word, coefficient) pairs of all depths, rank order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &C)> {
        let n = self.n_letters;
        self.blocks.iter().enumerate().flat_map(move |(d, blk)| {
            blk.iter().enumerate().map(move |(r, c)| (rank_word(r, d, n), c))
        })
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.n_letters, other.n_letters, "alphabet size mismatch");
        assert_eq!(self.depth, other.depth, "truncation depth mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            .collect();
        TruncSeries { n_letters: self.n_letters, depth: self.depth, blocks }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.sub(y)).collect())
            .collect();
        TruncSeries { n_letters: self.n_letters, depth: self.depth, blocks }
    }

    pub fn scale(&self, c: &C) -> Self {
        let blocks = self
            .blocks
            .iter()
            .map(|blk| blk.iter().map(|x| x.mul(c)).collect())
            .collect();
        TruncSeries { n_letters: self.n_letters, depth: self.depth, blocks }
    }

    /// Truncated concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let n = self.n_letters;
        let mut out = TruncSeries::<C>::zero(n, self.depth);
        for d in 0..=self.depth {
            for d1 in 0..=d {
                let d2 = d - d1;
                let a = &self.blocks[d1];
                let b = &other.blocks[d2];
                let stride = n.pow(d2 as u32);
                let blk = &mut out.blocks[d];
                for (i1, x) in a.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let base = i1 * stride;
                    for (i2, y) in b.iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        blk[base + i2] = blk[base + i2].add(&x.mul(y));
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Self {
        let c = self.constant_term().clone();
        assert!(!c.is_zero(), "inverse needs a nonzero constant term");
        // F = c (1 + N): invert the unipotent part by the geometric series,
        // computed as G <- 1 - N G.
        let cinv = C::one().div(&c);
        let mut unipotent = self.scale(&cinv);
        unipotent.blocks[0][0] = C::zero(); // now N, strictly positive depth
        let n_part = unipotent;
        let one = TruncSeries::one(self.n_letters, self.depth);
        let mut g = one.clone();
        for _ in 0..self.depth {
            g = one.sub(&n_part.mul(&g));
        }
        g.scale(&cinv)
    }

    /// Square root with constant term the root of the constant term,
    /// solved degree by degree from `G * G = F`.
    pub fn sqrt(&self) -> Self {
        let c0 = self.constant_term().clone();
        assert!(!c0.is_zero(), "square root needs a nonzero constant term");
        let r0 = Coeff::sqrt(&c0);
        let n = self.n_letters;
        let mut g = TruncSeries::zero(n, self.depth);
        g.blocks[0][0] = r0.clone();
        let two_r0 = r0.add(&r0);
        for d in 1..=self.depth {
            // G_w = (F_w - sum over proper splits) / (2 r0), where splits
            // use already-known lower-degree blocks of G.
            let mut blk = self.blocks[d].clone();
            for d1 in 1..d {
                let d2 = d - d1;
                let stride = n.pow(d2 as u32);
                for (i1, x) in g.blocks[d1].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (i2, y) in g.blocks[d2].iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let idx = i1 * stride + i2;
                        blk[idx] = blk[idx].sub(&x.mul(y));
                    }
                }
            }
            for v in blk.iter_mut() {
                *v = v.div(&two_r0);
            }
            g.blocks[d] = blk;
        }
        g
    }

    /// Logarithm of a series with constant term one.
    pub fn log(&self) -> Self {
        assert_eq!(self.constant_term(), &C::one(), "log needs constant term one");
        let mut n_part = self.clone();
        n_part.blocks[0][0] = C::zero();
        // log(1 + N) = sum (-1)^{k+1} N^k / k, truncated.
        let mut out = TruncSeries::zero(self.n_letters, self.depth);
        let mut pow = TruncSeries::one(self.n_letters, self.depth);
        for k in 1..=self.depth as i64 {
            pow = pow.mul(&n_part);
            let term = pow.scale(&C::one().div_int(if k % 2 == 1 { k } else { -k }));
            out = out.add(&term);
        }
        out
    }

    /// Exponential of a series with constant term zero.
    pub fn exp(&self) -> Self {
        assert!(self.constant_term().is_zero(), "exp needs constant term zero");
        let mut out = TruncSeries::one(self.n_letters, self.depth);
        let mut pow = TruncSeries::one(self.n_letters, self.depth);
        let mut factorial = 1i64;
        for k in 1..=self.depth as i64 {
            pow = pow.mul(self);
            factorial *= k;
            out = out.add(&pow.scale(&C::one().div_int(factorial)));
        }
        out
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.blocks
            .iter()
            .flatten()
            .map(|c| c.abs_f64())
            .fold(0.0, f64::max)
    }

    /// Largest absolute coefficient difference.
    pub fn dist(&self, other: &Self) -> f64 {
        self.assert_compatible(other);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .flat_map(|(a, b)| a.iter().zip(b))
            .map(|(x, y)| x.sub(y).abs_f64())
            .fold(0.0, f64::max)
    }

    /// Largest relative coefficient difference `|a-b| / (1 + |a|)`, which
    /// stays meaningful when coefficients span many orders of magnitude.
    pub fn dist_normalized(&self, other: &Self) -> f64 {
        self.assert_compatible(other);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .flat_map(|(a, b)| a.iter().zip(b))
            .map(|(x, y)| x.sub(y).abs_f64() / (1.0 + x.abs_f64()))
            .fold(0.0, f64::max)
    }

    /// Copy with every coefficient mapped.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        let blocks = self
            .blocks
            .iter()
            .map(|blk| blk.iter().map(&f).collect())
            .collect();
        TruncSeries { n_letters: self.n_letters, depth: self.depth, blocks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_complex::Complex64;
    use num_rational::BigRational;
    use rand::Rng;
    use rand::SeedableRng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn random_series(seed: u64, n: usize, depth: usize, unit: bool) -> TruncSeries<Complex64> {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut s = TruncSeries::zero(n, depth);
        for d in 0..=depth {
            for v in s.block_mut(d) {
                *v = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        if unit {
            s.blocks[0][0] = c(1.0);
        }
        s
    }

    #[test]
    fn product_on_a_hand_example() {
        // (1 + a)(1 + b) = 1 + a + b + ab over letters {a=0, b=1}.
        let mut f = TruncSeries::one(2, 2);
        f.set(&[0], c(1.0));
        let mut g = TruncSeries::one(2, 2);
        g.set(&[1], c(1.0));
        let p = f.mul(&g);
        assert_eq!(p.get(&[]), &c(1.0));
        assert_eq!(p.get(&[0]), &c(1.0));
        assert_eq!(p.get(&[1]), &c(1.0));
        assert_eq!(p.get(&[0, 1]), &c(1.0));
        assert_eq!(p.get(&[1, 0]), &c(0.0));
        assert_eq!(p.get(&[0, 0]), &c(0.0));
        // (1 + a)^2 = 1 + 2a + aa.
        let sq = f.mul(&f);
        assert_eq!(sq.get(&[0]), &c(2.0));
        assert_eq!(sq.get(&[0, 0]), &c(1.0));
    }

    #[test]
    fn product_is_associative_and_distributive() {
        let f = random_series(1, 2, 3, false);
        let g = random_series(2, 2, 3, false);
        let h = random_series(3, 2, 3, false);
        assert!(f.mul(&g).mul(&h).dist(&f.mul(&g.mul(&h))) < 1e-12);
        assert!(f.mul(&g.add(&h)).dist(&f.mul(&g).add(&f.mul(&h))) < 1e-12);
        let one = TruncSeries::one(2, 3);
        assert!(one.mul(&f).dist(&f) < 1e-15);
        assert!(f.mul(&one).dist(&f) < 1e-15);
    }

    #[test]
    fn inverse_really_inverts() {
        let mut f = random_series(4, 2, 4, false);
        f.set(&[], c(2.0));
        let inv = f.inverse();
        let one = TruncSeries::one(2, 4);
        assert!(f.mul(&inv).dist(&one) < 1e-12);
        assert!(inv.mul(&f).dist(&one) < 1e-12);
    }

    #[test]
    fn sqrt_squares_back() {
        let f = random_series(5, 2, 4, true);
        let g = f.sqrt();
        assert!(g.mul(&g).dist(&f) < 1e-12);
        let one = TruncSeries::<Complex64>::one(2, 4);
        assert!(one.sqrt().dist(&one) < 1e-15);
    }

    #[test]
    fn sqrt_over_exact_rationals() {
        // F = (1 + a)^2 computed exactly, then rooted.
        let one = TruncSeries::<BigRational>::one(1, 3);
        let mut f = one.clone();
        f.set(&[0], BigRational::from_integer(BigInt::from(1)));
        let sq = f.mul(&f);
        assert_eq!(sq.sqrt(), f);
    }

    #[test]
    fn log_exp_round_trip() {
        let f = random_series(6, 2, 4, true);
        assert!(f.log().exp().dist(&f) < 1e-12);
        let mut n = random_series(7, 2, 4, false);
        n.set(&[], c(0.0));
        assert!(n.exp().log().dist(&n) < 1e-12);
    }

    #[test]
    fn map_changes_coefficient_type() {
        let mut f = TruncSeries::<BigRational>::one(2, 2);
        f.set(&[1], BigRational::new(BigInt::from(1), BigInt::from(2)));
        let g: TruncSeries<Complex64> = f.map(|r| {
            Complex64::new(num_traits::ToPrimitive::to_f64(r).unwrap(), 0.0)
        });
        assert_eq!(g.get(&[1]), &c(0.5));
    }
}
