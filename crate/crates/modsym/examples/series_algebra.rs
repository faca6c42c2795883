//! Arithmetic in the algebra of truncated noncommutative power series.
//!
//! Series live in the free algebra on a finite alphabet, truncated beyond a
//! fixed word length. Group-like elements — those whose coefficients
//! multiply like iterated integrals — form a group under the concatenation
//! product, with exp and log passing between the group and its Lie algebra.
//!
//! Run with: cargo run --example series_algebra

use num_rational::BigRational;
use modsym::ncalg::{
    grouplike_defect_coproduct, grouplike_defect_shuffle, shuffle_pairing, TruncSeries,
};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() {
    let letters = 3;
    let depth = 4;

    // A primitive element: supported on single letters only.
    let mut prim = TruncSeries::<BigRational>::zero(letters, depth);
    prim.block_mut(1)[0] = rat(1, 2);
    prim.block_mut(1)[2] = rat(-2, 3);

    // Exponentials of primitives are group-like: the shuffle product of
    // coefficients matches coefficient-wise multiplication, and the
    // deconcatenation coproduct splits every word multiplicatively. Both
    // defects vanish identically for an exact exponential.
    let g = prim.exp();
    assert_eq!(grouplike_defect_shuffle(&g), 0.0);
    assert_eq!(grouplike_defect_coproduct(&g), 0.0);
    println!("exp of a primitive is exactly group-like at depth {depth}");

    // log inverts exp, term by term.
    let back = g.log();
    assert_eq!(back.dist(&prim), 0.0);
    println!("log recovers the primitive exactly");

    // The group inverse: g * g^-1 truncates to 1.
    let gi = g.inverse();
    let prod = g.mul(&gi);
    assert_eq!(prod.dist(&TruncSeries::one(letters, depth)), 0.0);
    println!("g * g^-1 = 1 in the truncated algebra");

    // Square roots halve the primitive.
    let h = g.sqrt();
    assert_eq!(h.mul(&h).dist(&g), 0.0);
    println!("sqrt(g) squares back to g");

    // The shuffle pairing underlying the group-likeness test: on a
    // group-like series the product of the coefficients of two words
    // equals the coefficient sum over their shuffles. Spot-check a pair
    // of two-letter words, whose shuffles have length four.
    let lhs = g.get(&[0, 2]).clone() * g.get(&[2, 0]).clone();
    let rhs = shuffle_pairing(&g, &[0, 2], &[2, 0]);
    assert_eq!(lhs, rhs);
    println!("coefficient product equals the shuffle sum on a sample word pair");
}
