//! Shuffle products and the group-likeness test.
//!
//! A series with constant term one is group-like when its coefficients
//! multiply along shuffles: `F_u F_v = sum of F_w over interleavings w of
//! u and v`, counted with multiplicity. Two computations of the right-hand
//! side are provided: direct interleaving recursion, and the deshuffle
//! (coproduct) route that enumerates position subsets of the longer word.
//! They share no code, so their agreement is a usable cross-check.

use super::coeff::Coeff;
use super::rank_word;
use super::series::TruncSeries;

/// Sum of `F_w` over all interleavings `w` of `u` and `v`, with
/// multiplicity, by recursion on which side contributes the next letter.
pub fn shuffle_pairing<C: Coeff>(f: &TruncSeries<C>, u: &[usize], v: &[usize]) -> C {
    assert!(u.len() + v.len() <= f.depth(), "pair exceeds truncation depth");
    let mut prefix = Vec::with_capacity(u.len() + v.len());
    let mut acc = C::zero();
    fn rec<C: Coeff>(
        f: &TruncSeries<C>,
        u: &[usize],
        v: &[usize],
        prefix: &mut Vec<usize>,
        acc: &mut C,
    ) {
        if u.is_empty() && v.is_empty() {
            *acc = acc.add(f.get(prefix));
            return;
        }
        if let Some((&h, rest)) = u.split_first() {
            prefix.push(h);
            rec(f, rest, v, prefix, acc);
            prefix.pop();
        }
        if let Some((&h, rest)) = v.split_first() {
            prefix.push(h);
            rec(f, u, rest, prefix, acc);
            prefix.pop();
        }
    }
    rec(f, u, v, &mut prefix, &mut acc);
    acc
}

/// The same sum via subsets: each choice of `|u|` positions among
/// `|u| + |v|` determines the unique word carrying `u` there and `v` on the
/// complement.
pub fn coproduct_pairing<C: Coeff>(f: &TruncSeries<C>, u: &[usize], v: &[usize]) -> C {
    let d = u.len() + v.len();
    assert!(d <= f.depth(), "pair exceeds truncation depth");
    let mut acc = C::zero();
    // Iterate subsets of size |u| as sorted index lists.
    let mut positions: Vec<usize> = (0..u.len()).collect();
    let mut w = vec![0usize; d];
    loop {
        let mut iu = 0;
        let mut iv = 0;
        for (slot, x) in w.iter_mut().enumerate() {
            if iu < positions.len() && positions[iu] == slot {
                *x = u[iu];
                iu += 1;
            } else {
                *x = v[iv];
                iv += 1;
            }
        }
        acc = acc.add(f.get(&w));
        // Next combination in lexicographic order.
        if positions.is_empty() {
            break;
        }
        let mut i = positions.len();
        loop {
            if i == 0 {
                return acc;
            }
            i -= 1;
            if positions[i] + (positions.len() - i) < d {
                positions[i] += 1;
                for j in i + 1..positions.len() {
                    positions[j] = positions[j - 1] + 1;
                }
                break;
            }
        }
    }
    acc
}

/// Worst violation of the shuffle relations over all word pairs within the
/// truncation depth, including the empty pair (so a constant term away
/// from one is a violation).
pub fn grouplike_defect_shuffle<C: Coeff>(f: &TruncSeries<C>) -> f64 {
    grouplike_defect_by(f, shuffle_pairing)
}

/// Same notion computed through [`coproduct_pairing`].
pub fn grouplike_defect_coproduct<C: Coeff>(f: &TruncSeries<C>) -> f64 {
    grouplike_defect_by(f, coproduct_pairing)
}

fn grouplike_defect_by<C: Coeff>(
    f: &TruncSeries<C>,
    pairing: impl Fn(&TruncSeries<C>, &[usize], &[usize]) -> C,
) -> f64 {
    let n = f.n_letters();
    let mut worst = 0.0_f64;
    for du in 0..=f.depth() {
        for dv in 0..=(f.depth() - du) {
            for ru in 0..n.pow(du as u32) {
                let u = rank_word(ru, du, n);
                let fu = f.get(&u).clone();
                for rv in 0..n.pow(dv as u32) {
                    let v = rank_word(rv, dv, n);
                    let lhs = fu.mul(f.get(&v));
                    let rhs = pairing(f, &u, &v);
                    worst = worst.max(lhs.sub(&rhs).abs_f64());
                }
            }
        }
    }
    worst
}

/// Convenience wrapper: both defects and their mutual agreement.
#[derive(Clone, Copy, Debug)]
pub struct GrouplikeReport {
    pub shuffle_defect: f64,
    pub coproduct_defect: f64,
}

impl GrouplikeReport {
    pub fn of<C: Coeff>(f: &TruncSeries<C>) -> Self {
        GrouplikeReport {
            shuffle_defect: grouplike_defect_shuffle(f),
            coproduct_defect: grouplike_defect_coproduct(f),
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.shuffle_defect < tol && self.coproduct_defect < tol
    }
}
