//! Linear substitutions on letters, extended multiplicatively to series.

use super::coeff::Coeff;
use super::series::TruncSeries;

/// A linear map on the letter span: letter `i` goes to
/// `sum_j entry(j, i) * letter_j`. Extended to words multiplicatively and
/// to series linearly, it is an algebra endomorphism, so applying it
/// commutes with series products; composition matches matrix product.
#[derive(Clone, Debug, PartialEq)]
pub struct LetterMap<C: Coeff> {
    n: usize,
    /// Row-major; `m[j * n + i]` is the coefficient of letter `j` in the
    /// image of letter `i`.
    m: Vec<C>,
}

impl<C: Coeff> LetterMap<C> {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![C::zero(); n * n];
        for i in 0..n {
            m[i * n + i] = C::one();
        }
        LetterMap { n, m }
    }

    /// Build from columns: `cols[i][j]` is the coefficient of letter `j`
    /// in the image of letter `i`.
    pub fn from_cols(cols: Vec<Vec<C>>) -> Self {
        let n = cols.len();
        assert!(cols.iter().all(|c| c.len() == n), "nonsquare substitution");
        let mut m = vec![C::zero(); n * n];
        for (i, col) in cols.iter().enumerate() {
            for (j, v) in col.iter().enumerate() {
                m[j * n + i] = v.clone();
            }
        }
        LetterMap { n, m }
    }

    pub fn diagonal(diag: Vec<C>) -> Self {
        let n = diag.len();
        let mut m = vec![C::zero(); n * n];
        for (i, v) in diag.into_iter().enumerate() {
            m[i * n + i] = v;
        }
        LetterMap { n, m }
    }

    pub fn n_letters(&self) -> usize {
        self.n
    }

    pub fn entry(&self, j: usize, i: usize) -> &C {
        &self.m[j * self.n + i]
    }

    pub fn set_entry(&mut self, j: usize, i: usize, v: C) {
        self.m[j * self.n + i] = v;
    }

    pub fn zero_map(n: usize) -> Self {
        LetterMap { n, m: vec![C::zero(); n * n] }
    }

    /// Composition `self` after `other` (matrix product).
    pub fn compose(&self, other: &LetterMap<C>) -> LetterMap<C> {
        assert_eq!(self.n, other.n, "alphabet size mismatch");
        let n = self.n;
        let mut m = vec![C::zero(); n * n];
        for j in 0..n {
            for k in 0..n {
                let a = self.entry(j, k);
                if a.is_zero() {
                    continue;
                }
                for i in 0..n {
                    let b = other.entry(k, i);
                    if b.is_zero() {
                        continue;
                    }
                    m[j * n + i] = m[j * n + i].add(&a.mul(b));
                }
            }
        }
        LetterMap { n, m }
    }

    /// Apply to a series: each depth-`d` block transforms by the `d`-fold
    /// tensor power, computed one axis at a time.
    pub fn apply(&self, f: &TruncSeries<C>) -> TruncSeries<C> {
        assert_eq!(self.n, f.n_letters(), "alphabet size mismatch");
        let mut out = f.clone();
        for d in 1..=f.depth() {
            let mut data = out.block(d).to_vec();
            for axis in 0..d {
                data = self.apply_axis(&data, d, axis);
            }
            out.block_mut(d).clone_from_slice(&data);
        }
        out
    }

    fn apply_axis(&self, data: &[C], d: usize, axis: usize) -> Vec<C> {
        let n = self.n;
        let stride = n.pow((d - 1 - axis) as u32);
        let outer = n.pow(axis as u32);
        let mut out = vec![C::zero(); data.len()];
        for o in 0..outer {
            let obase = o * n * stride;
            for j in 0..n {
                for i in 0..n {
                    let mji = self.entry(j, i);
                    if mji.is_zero() {
                        continue;
                    }
                    for s in 0..stride {
                        let t = obase + j * stride + s;
                        out[t] = out[t].add(&mji.mul(&data[obase + i * stride + s]));
                    }
                }
            }
        }
        out
    }

    /// Coefficient-wise conversion.
    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> LetterMap<D> {
        LetterMap { n: self.n, m: self.m.iter().map(f).collect() }
    }
}
