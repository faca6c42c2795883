//! The transport cocycle and its generator relations.
//!
//! Fixing a base point p turns path transports into a map from the group to
//! series: gamma goes to the transport from gamma(p) to p. This map obeys
//! the crossed multiplication rule u(gh) = u(g) * (g . u(h)), where the
//! action substitutes letters through the weight-graded pullback. On the
//! order-two and order-three generators the rule forces two polynomial
//! relations, which hold here to quadrature accuracy at every base point.
//!
//! Run with: cargo run --example eichler_relations

use modsym::forms::{CuspForm, DensityBasis};
use modsym::integrate::{TransportConfig, Transporter};
use modsym::nccoh::{transport_cocycle, SeriesGroup};
use modsym::psl2z::{ExtendedPoint, GroupWord};
use num_complex::Complex64;

fn main() {
    let basis = DensityBasis::full(vec![CuspForm::weight12(600)]);
    let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });
    let group: SeriesGroup<Complex64> = SeriesGroup::new(&basis, 2);

    println!("generator relations of the transport cocycle, depth 2");
    println!("-----------------------------------------------------");
    for (label, base) in [
        ("order-two fixed point", ExtendedPoint::i()),
        ("order-three fixed point", ExtendedPoint::rho()),
        ("the cusp at infinity", ExtendedPoint::infinity()),
    ] {
        let u = transport_cocycle(&tr, &group, &base);
        let r = u.relations_residual();
        println!("base {label:24}: residual {r:.3e}");
        assert!(r < 1e-6);
    }

    // The full crossed rule on a sample of word pairs, at one base.
    let u = transport_cocycle(&tr, &group, &ExtendedPoint::i());
    let pairs: Vec<(GroupWord, GroupWord)> = [("s", "t"), ("ts", "st"), ("stt", "tst"), ("tt", "tts")]
        .iter()
        .map(|(a, b)| (GroupWord::parse(a).unwrap(), GroupWord::parse(b).unwrap()))
        .collect();
    let law = u.cocycle_residual(&pairs);
    println!();
    println!("crossed multiplication rule on {} word pairs: residual {law:.3e}", pairs.len());
    assert!(law < 1e-6);

    // Values on longer words come from the generator values alone; no new
    // integration happens below.
    let w = GroupWord::parse("ststt").unwrap();
    let v = u.value(&w);
    let c = v.get(&[0usize]);
    println!();
    println!("value on {w} assembled from generator data; coefficient of {}:", basis.name(0));
    println!("  {:+.6e} {:+.6e}i", c.re, c.im);
}
