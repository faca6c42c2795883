//! Series-valued path transports: truncated generating series of iterated
//! integrals of the density alphabet between points of the completed upper
//! half plane.
//!
//! The transport solves `dT/dz = (sum_v X_v w_v(z)) T` along a path, so
//! `transport(a, c) = transport(b, c) * transport(a, b)` and reversal
//! inverts. Densities are holomorphic on the simply connected upper half
//! plane, so transports depend on endpoints only and any convenient path
//! may be integrated.
//!
//! Paths to the cusp at infinity run vertically and are truncated at a
//! tail height: the densities decay like `exp(-2 pi y)` times a fixed
//! power of `y`, so the discarded tail above height `H` is bounded by a
//! constant times `exp(-2 pi H) H^(k-1)`, far below every tolerance used
//! here once `H` is around 12. A finite cusp is first moved to infinity by
//! the unimodular matrix of its last continued-fraction convergent; the
//! transported series comes back through the letter substitution of that
//! matrix. Transports between two finite cusps go through an interior
//! anchor.

use num_complex::Complex64;

use crate::forms::DensityBasis;
use crate::ncalg::TruncSeries;
use crate::psl2z::{convergents, Cusp, ExtendedPoint, GroupElement};
use crate::quad::PanelRule;
use crate::tol;

/// Knobs of the transport quadrature.
#[derive(Clone, Debug)]
pub struct TransportConfig {
    /// Truncation depth of the computed series.
    pub depth: usize,
    /// Gauss-Legendre nodes per panel.
    pub nodes_per_panel: usize,
    /// Panels are sized so each spans about this much arc length.
    pub target_panel_len: f64,
    /// Lower bound on the panel count of any segment.
    pub min_panels: usize,
    /// Vertical paths to infinity stop at this height.
    pub tail_height: f64,
    /// Per-point evaluation tolerance requested from the forms.
    pub eval_tol: f64,
}

impl Default for TransportConfig {
    fn default() -> Self {
        TransportConfig {
            depth: 3,
            nodes_per_panel: 16,
            target_panel_len: 0.35,
            min_panels: 4,
            tail_height: 12.0,
            eval_tol: 1e-13,
        }
    }
}

/// Transport engine over a fixed density basis and configuration.
pub struct Transporter<'a> {
    basis: &'a DensityBasis,
    cfg: TransportConfig,
    rule: PanelRule,
}

impl<'a> Transporter<'a> {
    pub fn new(basis: &'a DensityBasis, cfg: TransportConfig) -> Self {
        let rule = PanelRule::new(cfg.nodes_per_panel);
        Transporter { basis, cfg, rule }
    }

    pub fn basis(&self) -> &DensityBasis {
        self.basis
    }

    pub fn config(&self) -> &TransportConfig {
        &self.cfg
    }

    fn one(&self) -> TruncSeries<Complex64> {
        TruncSeries::one(self.basis.len(), self.cfg.depth)
    }

    /// The transported series from `a` to `b`.
    pub fn transport(&self, a: &ExtendedPoint, b: &ExtendedPoint) -> TruncSeries<Complex64> {
        use ExtendedPoint::{Cusp as Bd, Interior};
        match (a, b) {
            (Interior(za), Interior(zb)) => {
                if (za - zb).norm() < tol::POINT_EQ {
                    self.one()
                } else {
                    self.straight(*za, *zb)
                }
            }
            (Bd(ca), Bd(cb)) => {
                if ca == cb {
                    self.one()
                } else {
                    // Through an interior anchor.
                    let anchor = ExtendedPoint::i();
                    self.transport(&anchor, b).mul(&self.transport(a, &anchor))
                }
            }
            (Bd(c), Interior(zb)) => {
                if c.is_infinity() {
                    self.from_infinity(*zb)
                } else {
                    let g = cusp_mover(c);
                    let gi = g.mat().inverse();
                    let pulled = gi.mobius_complex(*zb);
                    let inner = self.from_infinity(pulled);
                    self.basis.transport_map_f64(g.mat()).apply(&inner)
                }
            }
            (Interior(za), Bd(c)) => {
                if c.is_infinity() {
                    self.to_infinity(*za)
                } else {
                    let g = cusp_mover(c);
                    let gi = g.mat().inverse();
                    let pulled = gi.mobius_complex(*za);
                    let inner = self.to_infinity(pulled);
                    self.basis.transport_map_f64(g.mat()).apply(&inner)
                }
            }
        }
    }

    /// Worst coefficient disagreement between `transport(ga, gb)` and the
    /// letter substitution of `g` applied to `transport(a, b)`.
    pub fn equivariance_residual(
        &self,
        g: &GroupElement,
        a: &ExtendedPoint,
        b: &ExtendedPoint,
    ) -> f64 {
        let ga = g.mat().mobius(a);
        let gb = g.mat().mobius(b);
        let direct = self.transport(&ga, &gb);
        let mapped = self.basis.transport_map_f64(g.mat()).apply(&self.transport(a, b));
        direct.dist(&mapped)
    }

    fn from_infinity(&self, v: Complex64) -> TruncSeries<Complex64> {
        if v.im >= self.cfg.tail_height {
            return self.one();
        }
        let top = Complex64::new(v.re, self.cfg.tail_height);
        self.straight(top, v)
    }

    fn to_infinity(&self, v: Complex64) -> TruncSeries<Complex64> {
        if v.im >= self.cfg.tail_height {
            return self.one();
        }
        let top = Complex64::new(v.re, self.cfg.tail_height);
        self.straight(v, top)
    }

    /// Straight-line transport, chained over panels.
    fn straight(&self, za: Complex64, zb: Complex64) -> TruncSeries<Complex64> {
        let len = (zb - za).norm();
        let panels = ((len / self.cfg.target_panel_len).ceil() as usize)
            .max(self.cfg.min_panels)
            .min(4000);
        let mut total = self.one();
        for p in 0..panels {
            let t0 = p as f64 / panels as f64;
            let t1 = (p + 1) as f64 / panels as f64;
            let pa = za + (zb - za) * t0;
            let pb = za + (zb - za) * t1;
            let u = self.panel(pa, pb);
            total = u.mul(&total);
        }
        total
    }

    /// Transport across one panel by depth layering: the running integral
    /// of each word's integrand is accumulated at every node with the
    /// cumulative weights, and the panel total with the plain weights.
    fn panel(&self, za: Complex64, zb: Complex64) -> TruncSeries<Complex64> {
        let n = self.basis.len();
        let depth = self.cfg.depth;
        let nodes = self.rule.len();
        let mid = 0.5 * (za + zb);
        let half = 0.5 * (zb - za);

        // Form values once per node, then density samples per letter,
        // already multiplied by dz/du = half.
        let zs: Vec<Complex64> = self.rule.nodes.iter().map(|&u| mid + half * u).collect();
        let nforms = self.basis.forms().len();
        let mut form_vals = vec![vec![Complex64::new(0.0, 0.0); nodes]; nforms];
        for (fi, fv) in form_vals.iter_mut().enumerate() {
            let f = self.basis.form(fi);
            for (j, &z) in zs.iter().enumerate() {
                fv[j] = f.eval_with_tol(z, self.cfg.eval_tol);
            }
        }
        let mut density = vec![vec![Complex64::new(0.0, 0.0); nodes]; n];
        for (v, dv) in density.iter_mut().enumerate() {
            let (fi, m) = self.basis.letter(v);
            for (j, &z) in zs.iter().enumerate() {
                dv[j] = form_vals[fi][j] * z.powu(m - 1) * half;
            }
        }

        panel_core(&density, &self.rule, depth)
    }
}

/// Transport across one panel from per-letter density samples at the rule
/// nodes, jacobian already absorbed. The running integral of each word's
/// integrand is accumulated at every node with the cumulative weights, and
/// the panel total with the plain weights.
pub(crate) fn panel_core(
    density: &[Vec<Complex64>],
    rule: &PanelRule,
    depth: usize,
) -> TruncSeries<Complex64> {
    let n = density.len();
    let nodes = rule.len();
    let mut out = TruncSeries::one(n, depth);
    // prev[rank][node]: running integrals of the previous depth layer.
    let mut prev = vec![vec![Complex64::new(1.0, 0.0); nodes]];
    for d in 1..=depth {
        let n_words = n.pow(d as u32);
        let n_tails = n.pow((d - 1) as u32);
        let mut cur = vec![vec![Complex64::new(0.0, 0.0); nodes]; n_words];
        let block = out.block_mut(d);
        for v in 0..n {
            for tail in 0..n_tails {
                let w = v * n_tails + tail;
                // Integrand samples for this word.
                let g: Vec<Complex64> =
                    (0..nodes).map(|j| density[v][j] * prev[tail][j]).collect();
                let cw = &mut cur[w];
                for j in 0..nodes {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (i, gv) in g.iter().enumerate() {
                        acc += rule.cumulative[j][i] * gv;
                    }
                    cw[j] = acc;
                }
                let mut end = Complex64::new(0.0, 0.0);
                for (i, gv) in g.iter().enumerate() {
                    end += rule.weights[i] * gv;
                }
                block[w] = end;
            }
        }
        prev = cur;
    }
    out
}

/// The group element carrying infinity to the given finite cusp.
fn cusp_mover(c: &Cusp) -> GroupElement {
    let ch = convergents(c).expect("finite cusp");
    GroupElement::from_mat(ch.last_mat().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::CuspForm;
    use crate::ncalg::GrouplikeReport;
    use crate::psl2z::GroupWord;

    fn small_basis() -> DensityBasis {
        DensityBasis::full(vec![CuspForm::weight12(600)])
    }

    fn cfg(depth: usize) -> TransportConfig {
        TransportConfig { depth, ..TransportConfig::default() }
    }

    fn zp(re: f64, im: f64) -> ExtendedPoint {
        ExtendedPoint::interior(Complex64::new(re, im)).unwrap()
    }

    #[test]
    fn depth_one_matches_independent_simpson_quadrature() {
        let basis = small_basis();
        let tr = Transporter::new(&basis, cfg(1));
        let (za, zb) = (Complex64::new(0.1, 0.9), Complex64::new(-0.2, 1.7));
        let t = tr.transport(&zp(za.re, za.im), &zp(zb.re, zb.im));
        // Composite Simpson with many panels as the oracle.
        let f = basis.form(0);
        let steps = 20000;
        for letter in [0usize, 4, 10] {
            let (_, m) = basis.letter(letter);
            let mut acc = Complex64::new(0.0, 0.0);
            let h = (zb - za) / steps as f64;
            for s in 0..steps {
                let z0 = za + h * s as f64;
                let z1 = za + h * (s as f64 + 0.5);
                let z2 = za + h * (s as f64 + 1.0);
                let g0 = f.eval(z0) * z0.powu(m - 1);
                let g1 = f.eval(z1) * z1.powu(m - 1);
                let g2 = f.eval(z2) * z2.powu(m - 1);
                acc += h / 6.0 * (g0 + 4.0 * g1 + g2);
            }
            let got = *t.get(&[letter]);
            assert!(
                (got - acc).norm() < 1e-10,
                "letter {letter}: {got} vs {acc}"
            );
        }
    }

    #[test]
    fn composition_and_inverse_laws() {
        let basis = small_basis();
        let tr = Transporter::new(&basis, cfg(3));
        let a = zp(0.0, 1.0);
        let b = zp(0.3, 0.7);
        let c = zp(-0.4, 1.9);
        let ab = tr.transport(&a, &b);
        let bc = tr.transport(&b, &c);
        let ac = tr.transport(&a, &c);
        assert!(bc.mul(&ab).dist(&ac) < 1e-10, "composition failed: {}", bc.mul(&ab).dist(&ac));
        let ba = tr.transport(&b, &a);
        let one = TruncSeries::one(basis.len(), 3);
        assert!(ba.mul(&ab).dist(&one) < 1e-10);
    }

    #[test]
    fn transports_are_grouplike() {
        let basis = small_basis();
        let tr = Transporter::new(&basis, cfg(3));
        let t = tr.transport(&zp(0.2, 0.8), &zp(-0.3, 1.3));
        let rep = GrouplikeReport::of(&t);
        assert!(rep.passes(1e-9), "{rep:?}");
    }

    #[test]
    fn equivariance_under_generators() {
        let basis = small_basis();
        let tr = Transporter::new(&basis, cfg(2));
        let a = zp(0.1, 1.2);
        let b = zp(-0.2, 0.9);
        for w in ["s", "t", "st", "tt"] {
            let g = GroupElement::from_word(GroupWord::parse(w).unwrap());
            let r = tr.equivariance_residual(&g, &a, &b);
            assert!(r < 1e-9, "residual {r} for {w}");
        }
    }

    #[test]
    fn infinite_endpoints_compose_with_interior_legs() {
        let basis = small_basis();
        let tr = Transporter::new(&basis, cfg(2));
        let inf = ExtendedPoint::infinity();
        let v = zp(0.0, 1.0);
        let w = zp(0.25, 1.6);
        // transport(inf, w) must equal transport(v, w) * transport(inf, v).
        let lhs = tr.transport(&inf, &w);
        let rhs = tr.transport(&v, &w).mul(&tr.transport(&inf, &v));
        assert!(lhs.dist(&rhs) < 1e-10, "dist {}", lhs.dist(&rhs));
        // Reversal inverts.
        let one = TruncSeries::one(basis.len(), 2);
        assert!(tr.transport(&inf, &v).mul(&tr.transport(&v, &inf)).dist(&one) < 1e-10);
    }

    #[test]
    fn finite_cusp_routes_respect_composition() {
        let basis = small_basis();
        let mut c = cfg(2);
        c.tail_height = 10.0;
        let tr = Transporter::new(&basis, c);
        let zero = ExtendedPoint::Cusp(Cusp::zero());
        let a = zp(0.1, 1.1);
        let b = zp(-0.3, 0.8);
        let lhs = tr.transport(&zero, &b);
        let rhs = tr.transport(&a, &b).mul(&tr.transport(&zero, &a));
        assert!(lhs.dist(&rhs) < 1e-9, "dist {}", lhs.dist(&rhs));
    }

    #[test]
    fn doubling_the_panels_changes_little() {
        let basis = small_basis();
        let coarse = Transporter::new(&basis, cfg(3));
        let fine = Transporter::new(
            &basis,
            TransportConfig { target_panel_len: 0.175, min_panels: 8, ..cfg(3) },
        );
        let a = zp(0.15, 0.75);
        let b = zp(-0.1, 1.5);
        let d = coarse.transport(&a, &b).dist(&fine.transport(&a, &b));
        assert!(d < 1e-11, "refinement shift {d}");
    }
}
