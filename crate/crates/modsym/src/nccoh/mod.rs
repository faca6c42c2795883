//! Noncommutative 1-cocycles on the modular group with values in the
//! group of invertible truncated series.
//!
//! A cocycle assigns to every group element `g` a value `u(g)` subject to
//! `u(gh) = u(g) * (g . u(h))`. Values on the two generators determine the
//! whole cocycle by peeling letters off reduced words, which is how
//! [`Cocycle::value`] extends them. Two cocycles are equivalent when a
//! single witness `b` turns one into the other through
//! `g -> b^-1 * u(g) * (g . b)`.
//!
//! The coefficient side is abstracted by [`ValueGroup`] so the same
//! machinery runs over floating point series, exact rational series, and
//! the induced modules used by subgroup induction.

mod cuspidal;
mod shapiro;

pub use cuspidal::{cuspidal_witness, cuspidal_witness_exact, fixed_point_residual, CuspidalReport};
pub use shapiro::{shapiro_induce, CosetSystem, InducedGroup};

use std::cell::RefCell;
use std::collections::BTreeMap;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::forms::DensityBasis;
use crate::integrate::Transporter;
use crate::ncalg::{Coeff, LetterMap, TruncSeries};
use crate::psl2z::{Gen, GroupElement, GroupWord};

/// Coefficients that can be built from exact rationals, so exact letter
/// substitutions convert into the working coefficient type.
pub trait RatCoeff: Coeff {
    fn from_rat(r: &BigRational) -> Self;
}

impl RatCoeff for BigRational {
    fn from_rat(r: &BigRational) -> Self {
        r.clone()
    }
}

impl RatCoeff for Complex64 {
    fn from_rat(r: &BigRational) -> Self {
        Complex64::new(r.to_f64().expect("rational in f64 range"), 0.0)
    }
}

/// A group of coefficient values acted on by the modular group.
pub trait ValueGroup {
    type Val: Clone;

    fn one(&self) -> Self::Val;
    fn mul(&self, a: &Self::Val, b: &Self::Val) -> Self::Val;
    fn inv(&self, a: &Self::Val) -> Self::Val;
    fn act(&self, g: &GroupElement, a: &Self::Val) -> Self::Val;
    fn sqrt(&self, a: &Self::Val) -> Self::Val;
    /// Deviation between two values, graded per coefficient.
    fn dist(&self, a: &Self::Val, b: &Self::Val) -> f64;
    /// Largest absolute coefficient deviation.
    fn dist_abs(&self, a: &Self::Val, b: &Self::Val) -> f64;
    /// Largest absolute coefficient of a value.
    fn norm(&self, a: &Self::Val) -> f64;
    /// Upper bound on how much acting by `g` can amplify a unit value.
    /// Substitution matrices of long words have large exact integer
    /// entries, and residuals of identities involving them are only
    /// meaningful relative to this amplification.
    fn op_norm(&self, g: &GroupElement) -> f64;
}

/// Invertible truncated series over a density alphabet, acted on through
/// the exact letter substitution of each group element.
pub struct SeriesGroup<C: RatCoeff> {
    n_letters: usize,
    depth: usize,
    map_sigma: LetterMap<C>,
    map_tau: LetterMap<C>,
}

impl<C: RatCoeff> SeriesGroup<C> {
    pub fn new(basis: &DensityBasis, depth: usize) -> Self {
        let s = GroupElement::sigma();
        let t = GroupElement::tau();
        SeriesGroup {
            n_letters: basis.len(),
            depth,
            map_sigma: basis.transport_map(s.mat()).map(C::from_rat),
            map_tau: basis.transport_map(t.mat()).map(C::from_rat),
        }
    }

    pub fn n_letters(&self) -> usize {
        self.n_letters
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Letter substitution of a whole word, generator by generator.
    pub fn letter_map(&self, g: &GroupElement) -> LetterMap<C> {
        let mut m = LetterMap::identity(self.n_letters);
        for gen in g.word().tokens() {
            let step = match gen {
                Gen::Sigma => self.map_sigma.clone(),
                Gen::Tau => self.map_tau.clone(),
                Gen::TauSq => self.map_tau.compose(&self.map_tau),
            };
            m = m.compose(&step);
        }
        m
    }
}

impl<C: RatCoeff> ValueGroup for SeriesGroup<C> {
    type Val = TruncSeries<C>;

    fn one(&self) -> TruncSeries<C> {
        TruncSeries::one(self.n_letters, self.depth)
    }

    fn mul(&self, a: &TruncSeries<C>, b: &TruncSeries<C>) -> TruncSeries<C> {
        a.mul(b)
    }

    fn inv(&self, a: &TruncSeries<C>) -> TruncSeries<C> {
        a.inverse()
    }

    fn act(&self, g: &GroupElement, a: &TruncSeries<C>) -> TruncSeries<C> {
        self.letter_map(g).apply(a)
    }

    fn sqrt(&self, a: &TruncSeries<C>) -> TruncSeries<C> {
        a.sqrt()
    }

    /// Relative per-coefficient deviation: values on long words carry
    /// coefficients spanning many orders of magnitude, where an absolute
    /// gap means nothing.
    fn dist(&self, a: &TruncSeries<C>, b: &TruncSeries<C>) -> f64 {
        a.dist_normalized(b)
    }

    fn dist_abs(&self, a: &TruncSeries<C>, b: &TruncSeries<C>) -> f64 {
        a.dist(b)
    }

    fn norm(&self, a: &TruncSeries<C>) -> f64 {
        a.max_abs()
    }

    fn op_norm(&self, g: &GroupElement) -> f64 {
        let m = self.letter_map(g);
        let mut row_sum: f64 = 0.0;
        for j in 0..self.n_letters {
            let mut s = 0.0;
            for i in 0..self.n_letters {
                s += m.entry(j, i).abs_f64();
            }
            row_sum = row_sum.max(s);
        }
        row_sum.max(1.0).powi(self.depth as i32)
    }
}

/// A 1-cocycle, stored as its values on the two generators plus the value
/// group, with derived values cached by reduced word.
pub struct Cocycle<'g, G: ValueGroup> {
    group: &'g G,
    on_sigma: G::Val,
    on_tau: G::Val,
    cache: RefCell<BTreeMap<String, G::Val>>,
}

impl<'g, G: ValueGroup> Cocycle<'g, G> {
    pub fn new(group: &'g G, on_sigma: G::Val, on_tau: G::Val) -> Self {
        Cocycle { group, on_sigma, on_tau, cache: RefCell::new(BTreeMap::new()) }
    }

    pub fn group(&self) -> &'g G {
        self.group
    }

    pub fn on_sigma(&self) -> &G::Val {
        &self.on_sigma
    }

    pub fn on_tau(&self) -> &G::Val {
        &self.on_tau
    }

    /// The cocycle extended to an arbitrary reduced word.
    pub fn value(&self, w: &GroupWord) -> G::Val {
        if let Some(v) = self.cache.borrow().get(&w.to_string()) {
            return v.clone();
        }
        let v = match w.split_last() {
            None => self.group.one(),
            Some((head, last)) => {
                let base = match last {
                    Gen::Sigma => &self.on_sigma,
                    Gen::Tau => &self.on_tau,
                    Gen::TauSq => unreachable!("split_last never returns a squared token"),
                };
                let head_el = GroupElement::from_word(head.clone());
                let acted = self.group.act(&head_el, base);
                self.group.mul(&self.value(&head), &acted)
            }
        };
        self.cache.borrow_mut().insert(w.to_string(), v.clone());
        v
    }

    pub fn value_of(&self, g: &GroupElement) -> G::Val {
        self.value(g.word())
    }

    /// Worst backward defect of the generator relations: the squared
    /// generator and the cubed one must both produce the identity value,
    /// measured relative to the magnitudes entering the products.
    pub fn relations_residual(&self) -> f64 {
        let g = self.group;
        let s = GroupElement::sigma();
        let t = GroupElement::tau();
        let tt = t.mul(&t);
        let one = g.one();
        let ns = g.norm(&self.on_sigma);
        let nt = g.norm(&self.on_tau);
        let rs = g.mul(&self.on_sigma, &g.act(&s, &self.on_sigma));
        let scale_s = (1.0 + ns) * (1.0 + g.op_norm(&s) * ns);
        let rt = g.mul(&g.mul(&self.on_tau, &g.act(&t, &self.on_tau)), &g.act(&tt, &self.on_tau));
        let scale_t =
            (1.0 + nt) * (1.0 + g.op_norm(&t) * nt) * (1.0 + g.op_norm(&tt) * nt);
        (g.dist_abs(&rs, &one) / scale_s).max(g.dist_abs(&rt, &one) / scale_t)
    }

    /// Worst defect of `u(gh) = u(g) * (g . u(h))` over the given pairs.
    /// Each defect is a backward residual: the absolute deviation divided
    /// by the operand magnitudes and the amplification of acting by `g`,
    /// the scale at which floating point can certify the identity.
    pub fn cocycle_residual(&self, pairs: &[(GroupWord, GroupWord)]) -> f64 {
        let mut worst: f64 = 0.0;
        for (wg, wh) in pairs {
            let g_el = GroupElement::from_word(wg.clone());
            let product = wg.concat(wh);
            let lhs = self.value(&product);
            let vg = self.value(wg);
            let vh = self.value(wh);
            let rhs = self.group.mul(&vg, &self.group.act(&g_el, &vh));
            let scale = (1.0 + self.group.norm(&vg))
                * (1.0 + self.group.op_norm(&g_el) * self.group.norm(&vh));
            worst = worst.max(self.group.dist_abs(&lhs, &rhs) / scale);
        }
        worst
    }

    /// The equivalent cocycle `g -> b^-1 * u(g) * (g . b)`.
    pub fn twist(&self, b: &G::Val) -> Cocycle<'g, G> {
        let g = self.group;
        let bi = g.inv(b);
        let s = GroupElement::sigma();
        let t = GroupElement::tau();
        let on_sigma = g.mul(&g.mul(&bi, &self.on_sigma), &g.act(&s, b));
        let on_tau = g.mul(&g.mul(&bi, &self.on_tau), &g.act(&t, b));
        Cocycle::new(self.group, on_sigma, on_tau)
    }

    /// Witness and twisted cocycle whose value on the order-two generator
    /// is the identity: the witness is the square root of `u` there, which
    /// works because the relation forces that generator to invert `u`.
    pub fn normalize_sigma(&self) -> (G::Val, Cocycle<'g, G>) {
        let n = self.group.sqrt(&self.on_sigma);
        let twisted = self.twist(&n);
        (n, twisted)
    }
}

/// The cocycle of transported series based at a point: `u(g)` transports
/// from the moved base point back to the base point.
pub fn transport_cocycle<'g>(
    tr: &Transporter,
    group: &'g SeriesGroup<Complex64>,
    base: &crate::psl2z::ExtendedPoint,
) -> Cocycle<'g, SeriesGroup<Complex64>> {
    assert_eq!(tr.basis().len(), group.n_letters(), "alphabet mismatch");
    assert_eq!(tr.config().depth, group.depth(), "depth mismatch");
    let s = GroupElement::sigma();
    let t = GroupElement::tau();
    let on_sigma = tr.transport(&s.mat().mobius(base), base);
    let on_tau = tr.transport(&t.mat().mobius(base), base);
    Cocycle::new(group, on_sigma, on_tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::CuspForm;
    use crate::integrate::TransportConfig;
    use crate::psl2z::ExtendedPoint;
    use crate::tol;

    fn basis() -> DensityBasis {
        DensityBasis::full(vec![CuspForm::weight12(600)])
    }

    fn pairs() -> Vec<(GroupWord, GroupWord)> {
        let ws = ["s", "t", "tt", "st", "ts", "tts", "stts", "tst"];
        let mut out = Vec::new();
        for a in ws {
            for b in ["s", "t", "st", "tts"] {
                out.push((GroupWord::parse(a).unwrap(), GroupWord::parse(b).unwrap()));
            }
        }
        out
    }

    /// A coboundary of an exact grouplike series is an exact cocycle; every
    /// law must hold to literal rational equality.
    #[test]
    fn exact_coboundary_is_an_exact_cocycle() {
        let basis = basis();
        let group: SeriesGroup<BigRational> = SeriesGroup::new(&basis, 2);
        // b = exp of a sparse rational letter combination.
        let mut prim = TruncSeries::<BigRational>::zero(basis.len(), 2);
        prim.block_mut(1)[0] = BigRational::new(1.into(), 2.into());
        prim.block_mut(1)[4] = BigRational::new((-2).into(), 3.into());
        prim.block_mut(1)[9] = BigRational::new(1.into(), 5.into());
        let b = prim.exp();
        let s = GroupElement::sigma();
        let t = GroupElement::tau();
        let bi = group.inv(&b);
        let u = Cocycle::new(
            &group,
            group.mul(&bi, &group.act(&s, &b)),
            group.mul(&bi, &group.act(&t, &b)),
        );
        assert_eq!(u.relations_residual(), 0.0);
        assert_eq!(u.cocycle_residual(&pairs()), 0.0);
        // Twisting by the inverse witness trivializes it.
        let trivial = u.twist(&bi);
        assert_eq!(trivial.on_sigma(), &group.one());
        assert_eq!(trivial.on_tau(), &group.one());
    }

    #[test]
    fn transport_cocycle_satisfies_the_law() {
        let basis = basis();
        let group: SeriesGroup<Complex64> = SeriesGroup::new(&basis, 2);
        let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });
        let u = transport_cocycle(&tr, &group, &ExtendedPoint::i());
        assert!(u.relations_residual() < tol::COCYCLE);
        assert!(u.cocycle_residual(&pairs()) < tol::COCYCLE);
        // Based at the square root fixed point the sigma value is trivial.
        assert!(group.dist(u.on_sigma(), &group.one()) < tol::COCYCLE);
    }

    #[test]
    fn base_change_is_a_twist_by_the_connecting_transport() {
        let basis = basis();
        let group: SeriesGroup<Complex64> = SeriesGroup::new(&basis, 2);
        let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });
        let a = ExtendedPoint::i();
        let b = ExtendedPoint::rho();
        let ua = transport_cocycle(&tr, &group, &a);
        let ub = transport_cocycle(&tr, &group, &b);
        let witness = tr.transport(&b, &a);
        let twisted = ua.twist(&witness);
        assert!(group.dist(ub.on_sigma(), twisted.on_sigma()) < tol::COCYCLE);
        assert!(group.dist(ub.on_tau(), twisted.on_tau()) < tol::COCYCLE);
        let w = GroupWord::parse("stts").unwrap();
        assert!(group.dist(&ub.value(&w), &twisted.value(&w)) < tol::COCYCLE);
    }

    #[test]
    fn sigma_normalization_keeps_the_law_and_kills_sigma() {
        let basis = basis();
        let group: SeriesGroup<Complex64> = SeriesGroup::new(&basis, 2);
        let tr = Transporter::new(&basis, TransportConfig { depth: 2, ..Default::default() });
        let u = transport_cocycle(&tr, &group, &ExtendedPoint::rho());
        assert!(group.dist(u.on_sigma(), &group.one()) > 1e-3, "rho base must move sigma");
        let (_, v) = u.normalize_sigma();
        assert!(group.dist(v.on_sigma(), &group.one()) < tol::COCYCLE);
        assert!(v.cocycle_residual(&pairs()) < tol::COCYCLE);
        // Rho is fixed by the order-three generator, so u(tau) is trivial there.
        assert!(group.dist(u.on_tau(), &group.one()) < tol::COCYCLE);
    }
}
