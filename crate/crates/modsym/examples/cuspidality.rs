//! Deciding whether a cocycle is cuspidal, layer by layer.
//!
//! A cocycle is cuspidal when its value on the translation generating the
//! cusp stabiliser can be written as n - (translation . n) for some series
//! n — a discrete derivative. Solving for n proceeds depth by depth; the
//! depth-one layer can already be obstructed, which is how non-cuspidal
//! cocycles are rejected.
//!
//! Run with: cargo run --example cuspidality

use modsym::forms::{CuspForm, DensityBasis};
use modsym::integrate::{TransportConfig, Transporter};
use modsym::ncalg::{LetterMap, TruncSeries};
use modsym::nccoh::{cuspidal_witness, cuspidal_witness_exact, transport_cocycle, SeriesGroup};
use modsym::psl2z::{ExtendedPoint, GroupElement, GroupWord};
use num_complex::Complex64;
use num_rational::BigRational;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn main() {
    let basis = DensityBasis::full(vec![CuspForm::weight12(600)]);
    let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });
    let group: SeriesGroup<Complex64> = SeriesGroup::new(&basis, 2);
    let base = ExtendedPoint::i();
    let u = transport_cocycle(&tr, &group, &base);

    // The unit translation, written in the generators, and the letter
    // substitution it induces on the alphabet.
    let w = GroupWord::parse("tts").unwrap();
    let value = u.value(&w);
    let subst = group.letter_map(&GroupElement::from_word(w));

    let report = cuspidal_witness(&value, &subst);
    println!("solving the discrete-derivative equation for the translation value");
    for (d, r) in report.layer_residuals.iter().enumerate() {
        println!("  depth-{} layer: least-squares residual {r:.3e}", d + 1);
        assert!(*r < 1e-6);
    }
    println!("  fixed-point deviation of the witness: {:.3e}", report.fixed_point_residual);
    assert!(report.fixed_point_residual < 1e-6);

    // The geometric witness: the transport from the cusp to the base point
    // satisfies the same equation, because the translation fixes the cusp.
    let geometric = tr.transport(&ExtendedPoint::infinity(), &base);
    let gap = modsym::nccoh::fixed_point_residual(&value, &subst, &geometric);
    println!("  transport from the cusp as a witness: deviation {gap:.3e}");
    assert!(gap < 1e-6);

    // An exactly obstructed system over the rationals: with this
    // substitution, the depth-one equation asks for a vector in the range
    // of a singular map, and one right-hand side misses the range.
    println!();
    println!("synthetic two-letter system over exact rationals:");
    let toy = LetterMap::from_cols(vec![vec![rat(1, 1), rat(0, 1)], vec![rat(-1, 1), rat(-1, 1)]]);
    let mut blocked = TruncSeries::<BigRational>::one(2, 1);
    blocked.block_mut(1)[0] = rat(1, 1);
    blocked.block_mut(1)[1] = rat(-1, 1);
    assert!(cuspidal_witness_exact(&blocked, &toy).is_none());
    println!("  right-hand side outside the range: rejected");

    let mut fine = TruncSeries::<BigRational>::one(2, 1);
    fine.block_mut(1)[0] = rat(-1, 1);
    fine.block_mut(1)[1] = rat(-2, 1);
    let witness = cuspidal_witness_exact(&fine, &toy).expect("solvable system");
    assert_eq!(witness.dist(&fine.mul(&toy.apply(&witness))), 0.0);
    println!("  right-hand side inside the range: witness found exactly");
}
