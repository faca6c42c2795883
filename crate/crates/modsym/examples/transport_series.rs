//! Transport a generating series of iterated integrals along paths.
//!
//! The letters of the alphabet are polynomial-twisted densities built from
//! a cusp form; transporting from a to b integrates every word of densities
//! along a path, producing a group-like series. Transports compose like
//! parallel transport: the segment closer to the endpoint multiplies from
//! the left.
//!
//! Run with: cargo run --example transport_series

use modsym::forms::{CuspForm, DensityBasis};
use modsym::integrate::{TransportConfig, Transporter};
use modsym::ncalg::GrouplikeReport;
use modsym::psl2z::ExtendedPoint;
use num_complex::Complex64;

fn main() {
    // Full polynomial strip over the weight-12 form: 11 letters.
    let basis = DensityBasis::full(vec![CuspForm::weight12(600)]);
    let cfg = TransportConfig { depth: 2, ..Default::default() };
    let tr = Transporter::new(&basis, cfg);

    let i = ExtendedPoint::i();
    let rho = ExtendedPoint::rho();
    let inf = ExtendedPoint::infinity();

    // A transport between the two elliptic points.
    let j = tr.transport(&i, &rho);
    println!("transport from i to the sixth root of unity, depth 2");
    println!("letters: {}", (0..basis.len()).map(|k| basis.name(k)).collect::<Vec<_>>().join(" "));
    println!();
    println!("selected coefficients:");
    for word in [vec![0usize], vec![5], vec![10], vec![0, 10], vec![5, 5]] {
        let c: Complex64 = *j.get(&word);
        println!("  {:12} -> {:+.6e} {:+.6e}i", basis.format_word(&word), c.re, c.im);
    }

    // Transports of group-like densities are group-like.
    let rep = GrouplikeReport::of(&j);
    println!();
    println!(
        "character defects: shuffle {:.3e}, coproduct {:.3e}",
        rep.shuffle_defect, rep.coproduct_defect
    );
    assert!(rep.shuffle_defect < 1e-8 && rep.coproduct_defect < 1e-8);

    // Composition: going i -> rho -> oo equals going i -> oo directly,
    // with the later segment on the left.
    let a = tr.transport(&i, &rho);
    let b = tr.transport(&rho, &inf);
    let direct = tr.transport(&i, &inf);
    let composed = b.mul(&a);
    let gap = direct.dist_normalized(&composed);
    println!();
    println!("composition through an intermediate point differs by {gap:.3e}");
    assert!(gap < 1e-8);

    // Reversal: the transport backwards is the group inverse.
    let back = tr.transport(&rho, &i);
    let round = back.mul(&j);
    let gap = round.dist(&modsym::ncalg::TruncSeries::one(basis.len(), 2));
    println!("round trip back to the start differs from 1 by {gap:.3e}");
    assert!(gap < 1e-8);
}
