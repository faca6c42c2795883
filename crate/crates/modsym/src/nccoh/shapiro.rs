//! Induction of cocycles from the level two congruence subgroup.
//!
//! The subgroup is the image of the matrices congruent to the identity
//! mod 2; it has index six, with coset representatives listed in
//! [`CosetSystem::gamma2`]. A cocycle on the subgroup induces one on the
//! whole group with values in six-tuples, where a group element permutes
//! the slots by its action on cosets and twists each slot by the subgroup
//! part of that move. Evaluating the induced cocycle at the identity slot
//! on subgroup elements recovers the original cocycle.

use num_integer::Integer;

use crate::psl2z::{GroupElement, GroupWord};

use super::{Cocycle, ValueGroup};

/// Right coset representatives `G = union H g_j` of a finite index
/// subgroup `H`, with the membership test for `H`.
pub struct CosetSystem {
    reps: Vec<GroupElement>,
}

impl CosetSystem {
    /// The index six system for the level two subgroup.
    pub fn gamma2() -> Self {
        let reps = ["", "s", "t", "tt", "st", "ts"]
            .iter()
            .map(|w| GroupElement::from_word(GroupWord::parse(w).expect("fixed rep")))
            .collect();
        CosetSystem { reps }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, j: usize) -> &GroupElement {
        &self.reps[j]
    }

    /// Index of the representative of the trivial coset.
    pub fn identity_slot(&self) -> usize {
        0
    }

    /// Membership in the subgroup: congruent to the identity mod 2, which
    /// the projective sign cannot disturb.
    pub fn member(&self, g: &GroupElement) -> bool {
        let (a, b, c, d) = g.mat().entries();
        a.is_odd() && d.is_odd() && b.is_even() && c.is_even()
    }

    /// Write `x = h g_k` with `h` in the subgroup.
    pub fn locate(&self, x: &GroupElement) -> (usize, GroupElement) {
        for (k, rep) in self.reps.iter().enumerate() {
            let h = x.mul(&rep.inverse());
            if self.member(&h) {
                return (k, h);
            }
        }
        unreachable!("coset representatives cover the group");
    }

    /// Write `g_j g = h g_k`: the slot `j` moves to `k`, twisted by `h`.
    pub fn translate(&self, j: usize, g: &GroupElement) -> (usize, GroupElement) {
        self.locate(&self.reps[j].mul(g))
    }
}

/// Tuples of subgroup values indexed by cosets, with the twisted
/// permutation action that makes induction a cocycle again.
pub struct InducedGroup<'a, G: ValueGroup> {
    inner: &'a G,
    cosets: &'a CosetSystem,
}

impl<'a, G: ValueGroup> InducedGroup<'a, G> {
    pub fn new(inner: &'a G, cosets: &'a CosetSystem) -> Self {
        InducedGroup { inner, cosets }
    }

    pub fn inner(&self) -> &'a G {
        self.inner
    }

    pub fn cosets(&self) -> &'a CosetSystem {
        self.cosets
    }
}

impl<G: ValueGroup> ValueGroup for InducedGroup<'_, G> {
    type Val = Vec<G::Val>;

    fn one(&self) -> Vec<G::Val> {
        vec![self.inner.one(); self.cosets.len()]
    }

    fn mul(&self, a: &Vec<G::Val>, b: &Vec<G::Val>) -> Vec<G::Val> {
        a.iter().zip(b).map(|(x, y)| self.inner.mul(x, y)).collect()
    }

    fn inv(&self, a: &Vec<G::Val>) -> Vec<G::Val> {
        a.iter().map(|x| self.inner.inv(x)).collect()
    }

    fn act(&self, g: &GroupElement, a: &Vec<G::Val>) -> Vec<G::Val> {
        (0..self.cosets.len())
            .map(|j| {
                let (k, h) = self.cosets.translate(j, g);
                self.inner.act(&h, &a[k])
            })
            .collect()
    }

    fn sqrt(&self, a: &Vec<G::Val>) -> Vec<G::Val> {
        a.iter().map(|x| self.inner.sqrt(x)).collect()
    }

    fn dist(&self, a: &Vec<G::Val>, b: &Vec<G::Val>) -> f64 {
        a.iter().zip(b).map(|(x, y)| self.inner.dist(x, y)).fold(0.0, f64::max)
    }

    fn dist_abs(&self, a: &Vec<G::Val>, b: &Vec<G::Val>) -> f64 {
        a.iter().zip(b).map(|(x, y)| self.inner.dist_abs(x, y)).fold(0.0, f64::max)
    }

    fn norm(&self, a: &Vec<G::Val>) -> f64 {
        a.iter().map(|x| self.inner.norm(x)).fold(0.0, f64::max)
    }

    /// Acting on slot `j` applies the subgroup part of its translation, so
    /// the worst inner amplification over slots bounds the whole action.
    fn op_norm(&self, g: &GroupElement) -> f64 {
        (0..self.cosets.len())
            .map(|j| {
                let (_, h) = self.cosets.translate(j, g);
                self.inner.op_norm(&h)
            })
            .fold(1.0, f64::max)
    }
}

/// Induce a cocycle along the coset system: slot `j` of the value on `g`
/// is the inner cocycle at the subgroup part of moving slot `j` by `g`.
pub fn shapiro_induce<'a, G: ValueGroup>(
    inner: &Cocycle<'_, G>,
    group: &'a InducedGroup<'a, G>,
) -> Cocycle<'a, InducedGroup<'a, G>> {
    let sigma = GroupElement::sigma();
    let tau = GroupElement::tau();
    let cosets = group.cosets();
    let on_gen = |g: &GroupElement| -> Vec<G::Val> {
        (0..cosets.len())
            .map(|j| {
                let (_, h) = cosets.translate(j, g);
                inner.value(h.word())
            })
            .collect()
    };
    Cocycle::new(group, on_gen(&sigma), on_gen(&tau))
}
