//! Period series and their generator relations.
//!
//! The transports of the two group generators based at a point are the
//! fundamental data here: based at the order-four fixed point the first
//! one is trivial, based at the order-six fixed point the second one is,
//! and based at the cusp at infinity both coincide with the transport
//! from zero to infinity, the period series whose depth one layer holds
//! the critical completed L-values of the coefficient forms.
//!
//! The continued fraction trick rewrites the transport from infinity to
//! any rational cusp as a product of letter-substituted copies of the
//! period series, one per convergent.

use num_complex::Complex64;

use crate::integrate::Transporter;
use crate::ncalg::TruncSeries;
use crate::psl2z::{convergents, Cusp, ExtendedPoint, GroupElement};

/// Generator transports at a base point: the values of the transport
/// cocycle on the order-two and order-three generators.
pub struct GeneratorPair {
    pub x: TruncSeries<Complex64>,
    pub y: TruncSeries<Complex64>,
}

/// The transport cocycle values on the generators, based anywhere.
pub fn generators_at(tr: &Transporter, base: &ExtendedPoint) -> GeneratorPair {
    let s = GroupElement::sigma();
    let t = GroupElement::tau();
    GeneratorPair {
        x: tr.transport(&s.mat().mobius(base), base),
        y: tr.transport(&t.mat().mobius(base), base),
    }
}

/// The period series: the transport from the zero cusp to infinity.
pub fn period_series(tr: &Transporter) -> TruncSeries<Complex64> {
    tr.transport(&ExtendedPoint::Cusp(Cusp::zero()), &ExtendedPoint::infinity())
}

/// The convergent factors of the transport from infinity to a finite
/// cusp: factor `k` is the letter substitution of the `k`-th convergent
/// matrix applied to the period series, and their product, rightmost
/// factor first, reassembles the whole transport edge by edge along the
/// convergent chain.
pub fn cf_factors(tr: &Transporter, cusp: &Cusp) -> Vec<TruncSeries<Complex64>> {
    let chain = convergents(cusp).expect("finite cusp");
    let e = period_series(tr);
    chain.mats().iter().map(|g| tr.basis().transport_map_f64(g).apply(&e)).collect()
}

/// The transport from infinity to a finite cusp assembled from the
/// convergent factors alone.
pub fn cf_transport(tr: &Transporter, cusp: &Cusp) -> TruncSeries<Complex64> {
    let factors = cf_factors(tr, cusp);
    let mut out = TruncSeries::one(tr.basis().len(), tr.config().depth);
    // transport(a, c) = transport(b, c) * transport(a, b): later edges
    // multiply from the left.
    for f in factors {
        out = f.mul(&out);
    }
    out
}

/// Backward deviation between the convergent product and the directly
/// integrated transport from infinity to the cusp: the absolute gap
/// divided by the amplification both routes apply to the period series.
/// A convergent substitution scales depth `d` coefficients by up to its
/// row sum to the `d`-th power, and cancellation can leave the output
/// coefficients far below that ceiling, so the gap is measured against
/// the amplified input magnitude rather than the output alone.
pub fn cf_residual(tr: &Transporter, cusp: &Cusp) -> f64 {
    let direct = tr.transport(&ExtendedPoint::infinity(), &ExtendedPoint::Cusp(cusp.clone()));
    let product = cf_transport(tr, cusp);
    let chain = convergents(cusp).expect("finite cusp");
    let n = tr.basis().len();
    let mut amp: f64 = 1.0;
    for g in chain.mats() {
        let m = tr.basis().transport_map_f64(g);
        let mut row_sum: f64 = 0.0;
        for j in 0..n {
            let s: f64 = (0..n).map(|i| m.entry(j, i).norm()).sum();
            row_sum = row_sum.max(s);
        }
        amp = amp.max(row_sum.max(1.0).powi(tr.config().depth as i32));
    }
    let scale = (1.0 + amp) * (1.0 + period_series(tr).max_abs());
    product.dist(&direct) / scale
}
