//! Truncated noncommutative power series in several letters.
//!
//! A series holds one coefficient per word of length at most the truncation
//! depth over a fixed alphabet. Products are word-concatenation products
//! truncated at that depth; the multiplicative structure (inverse, square
//! root, log, exp) is solved degree by degree.
//!
//! [`LetterMap`] is a linear substitution on letters extended to words
//! multiplicatively; it is the algebra endomorphism induced by a change of
//! basis of the letter span, and composition matches matrix product.

mod coeff;
mod lettermap;
mod series;
mod shuffle;

pub use coeff::Coeff;
pub use lettermap::LetterMap;
pub use series::TruncSeries;
pub use shuffle::{
    coproduct_pairing, grouplike_defect_coproduct, grouplike_defect_shuffle, shuffle_pairing,
    GrouplikeReport,
};

/// Big-endian rank of a word: the first letter is the most significant
/// digit. Concatenation satisfies
/// `rank(uv) = rank(u) * n^{|v|} + rank(v)`.
pub fn word_rank(word: &[usize], n_letters: usize) -> usize {
    word.iter().fold(0, |acc, &l| {
        debug_assert!(l < n_letters);
        acc * n_letters + l
    })
}

/// Inverse of [`word_rank`] at a known length.
pub fn rank_word(mut rank: usize, len: usize, n_letters: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = rank % n_letters;
        rank /= n_letters;
    }
    debug_assert_eq!(rank, 0);
    w
}

/// All words of the given length, in rank order.
pub fn words_of_len(len: usize, n_letters: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = n_letters.pow(len as u32);
    (0..count).map(move |r| rank_word(r, len, n_letters))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_round_trip() {
        let n = 3;
        for len in 0..4 {
            for (r, w) in words_of_len(len, n).enumerate() {
                assert_eq!(word_rank(&w, n), r);
                assert_eq!(rank_word(r, len, n), w);
            }
        }
    }

    #[test]
    fn rank_respects_concatenation() {
        let n = 5;
        let u = vec![1, 4];
        let v = vec![0, 3, 2];
        let uv = [u.clone(), v.clone()].concat();
        assert_eq!(word_rank(&uv, n), word_rank(&u, n) * n.pow(3) + word_rank(&v, n));
    }
}
