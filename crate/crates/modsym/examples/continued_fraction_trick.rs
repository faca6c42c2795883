//! Decompose a transport to a rational point through its convergents.
//!
//! Transporting from a rational cusp is numerically delicate. The
//! continued-fraction expansion of the cusp produces a chain of group
//! elements whose images step from infinity through every convergent to
//! the target; the corresponding cocycle values multiply into exactly the
//! transport, replacing one hard integral with a few easy ones.
//!
//! Run with: cargo run --example continued_fraction_trick

use modsym::forms::{CuspForm, DensityBasis};
use modsym::integrate::{TransportConfig, Transporter};
use modsym::periods::{cf_factors, cf_residual, cf_transport};
use modsym::psl2z::{convergents, Cusp};

fn main() {
    let basis = DensityBasis::full(vec![CuspForm::weight12(600)]);
    let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });

    let cusp = Cusp::parse("3/5").unwrap();
    let chain = convergents(&cusp).unwrap();
    let steps: Vec<String> = chain.cusps().iter().map(|c| c.to_string()).collect();
    println!("convergents of 3/5: oo -> {}", steps.join(" -> "));

    // Each factor is a cocycle value attached to one convergent step.
    let factors = cf_factors(&tr, &cusp);
    println!("the decomposition has {} factors", factors.len());
    for (k, f) in factors.iter().enumerate() {
        println!("  factor {k}: leading letter coefficient {:+.6e}", f.get(&[0usize]).re);
    }

    // Their ordered product reconstructs the direct transport.
    let assembled = cf_transport(&tr, &cusp);
    let gap = cf_residual(&tr, &cusp);
    println!();
    println!("assembled vs direct transport: scaled residual {gap:.3e}");
    assert!(gap < 1e-6);
    let c = assembled.get(&[5usize]);
    println!("sample coefficient of {}: {:+.6e} {:+.6e}i", basis.name(5), c.re, c.im);

    // The same machinery at other rational points.
    println!();
    for text in ["1", "2/3", "-2/7"] {
        let r = cf_residual(&tr, &Cusp::parse(text).unwrap());
        println!("residual at {text:>5}: {r:.3e}");
        assert!(r < 1e-6);
    }
}
