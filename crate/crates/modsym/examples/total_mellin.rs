//! The series-valued transform and its two identities.
//!
//! Packaging iterated transforms of a form at several arguments into one
//! noncommutative series gives the series-valued transform. It satisfies a
//! reflection identity generalising the scalar one, and at the full strip
//! of integer arguments it coincides with the inverse of the period series
//! — the transport around the order-two generator in disguise.
//!
//! Run with: cargo run --example total_mellin

use modsym::forms::{CuspForm, DensityBasis};
use modsym::integrate::{TransportConfig, Transporter};
use modsym::mellin::{total_mellin, total_mellin_fe_residual};
use modsym::periods::period_series;
use num_complex::Complex64;

fn main() {
    let f = CuspForm::weight12(600);

    // Two letters at generic complex arguments.
    let generic = [(&f, Complex64::new(3.5, 0.8)), (&f, Complex64::new(6.0, 0.0))];
    let r = total_mellin_fe_residual(&generic, 2);
    println!("reflection identity at (3.5+0.8i, 6), depth 2: residual {r:.3e}");
    assert!(r < 1e-6);

    // The full integer strip: arguments 1 through 11 for weight 12.
    let letters: Vec<(&CuspForm, Complex64)> =
        (1..12).map(|m| (&f, Complex64::new(m as f64, 0.0))).collect();
    let r = total_mellin_fe_residual(&letters, 2);
    println!("reflection identity on the integer strip, depth 2: residual {r:.3e}");
    assert!(r < 1e-6);

    // Coincidence with transport data: the transform equals the inverse of
    // the period series computed by integration between the cusps.
    let tm = total_mellin(&letters, 2);
    let basis = DensityBasis::full(vec![f.clone()]);
    let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });
    let e = period_series(&tr);
    let gap = tm.dist(&e.inverse());
    println!("transform vs inverse period series: distance {gap:.3e}");
    assert!(gap < 1e-8);

    // A few coefficients for inspection: depth-one entries are the scalar
    // completed transforms at each integer argument.
    println!();
    println!("depth-one coefficients (scalar transforms):");
    for m in [1usize, 5, 6, 11] {
        let c = tm.get(&[m - 1]);
        println!("  argument {m:>2}: {:+.9e} {:+.9e}i", c.re, c.im);
    }
}
