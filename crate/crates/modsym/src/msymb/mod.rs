//! Modular symbols of level one: homogeneous polynomials decorating
//! ordered pairs of boundary points, modulo the group relations.
//!
//! Every pair of rational boundary points splits along continued-fraction
//! chains into unimodular images of the base pair `{0, oo}`, so the space
//! for weight k is finitely presented: generators are polynomials of
//! degree k - 2 decorating the base pair, relations come from the
//! order-two and order-three group generators acting on the polynomial
//! part. Everything is exact rational linear algebra over that
//! presentation.
//!
//! Endpoints map to a one-dimensional boundary quotient (polynomials
//! modulo the translation action of the stabilizer of infinity). The
//! kernel of the boundary map is the cuspidal subspace; its dimension is
//! twice the number of independent cusp forms of the weight, which the
//! tests pin against the classical dimension count. Pairing a class
//! against a cusp form integrates the polynomial-weighted form along the
//! imaginary axis through the depth-one transport machinery.

use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::forms::{CuspForm, DensityBasis};
use crate::integrate::{TransportConfig, Transporter};
use crate::psl2z::{convergents, Cusp, ExtendedPoint, Mat2};
use crate::ratmat::{Rat, RowSpace};

/// Homogeneous polynomial in two variables with exact rational
/// coefficients; index i holds the coefficient of `X^i Y^(deg - i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySym {
    deg: u32,
    coeffs: Vec<Rat>,
}

impl PolySym {
    pub fn zero(deg: u32) -> Self {
        PolySym { deg, coeffs: vec![Rat::zero(); deg as usize + 1] }
    }

    /// The monomial `X^i Y^(deg - i)`.
    pub fn monomial(deg: u32, i: usize) -> Self {
        let mut p = PolySym::zero(deg);
        p.coeffs[i] = Rat::one();
        p
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty());
        PolySym { deg: (coeffs.len() - 1) as u32, coeffs }
    }

    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.deg, other.deg);
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        PolySym { deg: self.deg, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.deg, other.deg);
        let coeffs =
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        PolySym { deg: self.deg, coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        PolySym { deg: self.deg, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Multiply a homogeneous polynomial by the linear form `p X + q Y`.
fn mul_linear(coeffs: &[Rat], p: &Rat, q: &Rat) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); coeffs.len() + 1];
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        out[i + 1] += c * p;
        out[i] += c * q;
    }
    out
}

/// Left action of a unimodular matrix on polynomials by substituting the
/// inverse matrix: `(gP)(X, Y) = P(dX - bY, -cX + aY)`. For even degree
/// the projective sign ambiguity drops out, and the substitution is the
/// one that moves the axis integral of `f(z) P(z, 1)` covariantly with
/// the endpoints of the path.
pub fn poly_action(g: &Mat2, poly: &PolySym) -> PolySym {
    let (a, b, c, d) = g.entries();
    let (a, b, c, d) = (
        Rat::from_integer(a.clone()),
        Rat::from_integer(b.clone()),
        Rat::from_integer(c.clone()),
        Rat::from_integer(d.clone()),
    );
    let deg = poly.deg as usize;
    let mut out = vec![Rat::zero(); deg + 1];
    for (i, coeff) in poly.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        // (dX - bY)^i (-cX + aY)^(deg - i), built one linear factor at a
        // time.
        let mut term = vec![coeff.clone()];
        for _ in 0..i {
            term = mul_linear(&term, &d, &(-b.clone()));
        }
        for _ in 0..(deg - i) {
            term = mul_linear(&term, &(-c.clone()), &a);
        }
        for (j, v) in term.into_iter().enumerate() {
            out[j] += v;
        }
    }
    PolySym { deg: poly.deg, coeffs: out }
}

/// A formal combination of polynomial-decorated ordered pairs of
/// boundary points. `(P, a, b)` stands for `P` on the pair `{a, b}`.
#[derive(Clone, Debug, Default)]
pub struct ModularSymbol {
    pub terms: Vec<(PolySym, Cusp, Cusp)>,
}

impl ModularSymbol {
    pub fn single(poly: PolySym, from: Cusp, to: Cusp) -> Self {
        ModularSymbol { terms: vec![(poly, from, to)] }
    }

    /// Simultaneous translation of every term: the polynomial by the
    /// matrix action, the endpoints pointwise. Classes are invariant
    /// under this.
    pub fn translate(&self, g: &Mat2) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(p, a, b)| {
                (poly_action(g, p), g.mobius_cusp(a), g.mobius_cusp(b))
            })
            .collect();
        ModularSymbol { terms }
    }
}

/// The weight-k symbol space in its finite presentation, together with
/// the boundary quotient at infinity.
pub struct SymbolSpace {
    weight: u32,
    relations: RowSpace,
    relation_vectors: Vec<Vec<Rat>>,
    boundary_relations: RowSpace,
}

impl SymbolSpace {
    pub fn new(weight: u32) -> Self {
        assert!(weight >= 4 && weight % 2 == 0, "weight must be even and at least 4");
        let deg = weight - 2;
        let n = deg as usize + 1;
        let sigma = Mat2::sigma();
        let tau = Mat2::tau();
        let mut relations = RowSpace::new(n);
        let mut relation_vectors = Vec::new();
        for i in 0..n {
            let p = PolySym::monomial(deg, i);
            let two = p.add(&poly_action(&sigma, &p));
            let three =
                p.add(&poly_action(&tau, &p)).add(&poly_action(&tau.mul(&tau), &p));
            for r in [two, three] {
                relations.insert(r.coeffs());
                relation_vectors.push(r.coeffs().to_vec());
            }
        }
        // Boundary side: polynomials modulo the translation action of
        // the stabilizer of infinity, which is generated by the unit
        // upper shear. The quotient is one-dimensional for every even
        // weight.
        let shear = Mat2::new_i64(1, 1, 0, 1).unwrap();
        let mut boundary_relations = RowSpace::new(n);
        for i in 0..n {
            let p = PolySym::monomial(deg, i);
            boundary_relations.insert(p.sub(&poly_action(&shear, &p)).coeffs());
        }
        debug_assert_eq!(boundary_relations.free_columns().len(), 1);
        SymbolSpace { weight, relations, relation_vectors, boundary_relations }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn deg(&self) -> u32 {
        self.weight - 2
    }

    /// Dimension of the symbol space.
    pub fn dim(&self) -> usize {
        self.relations.ncols() - self.relations.rank()
    }

    /// The generating relation rows, as polynomial coefficient vectors.
    pub fn relation_vectors(&self) -> &[Vec<Rat>] {
        &self.relation_vectors
    }

    /// Polynomial representatives of a basis of the symbol space: unit
    /// monomials on the free columns of the relation space.
    pub fn basis(&self) -> Vec<PolySym> {
        self.relations
            .free_columns()
            .into_iter()
            .map(|j| PolySym::monomial(self.deg(), j))
            .collect()
    }

    /// Coordinates of the class of `P` on the base pair `{0, oo}` in the
    /// free-column basis of the quotient.
    pub fn class_coords(&self, poly: &PolySym) -> Vec<Rat> {
        assert_eq!(poly.deg, self.deg());
        self.relations.quotient_coords(poly.coeffs())
    }

    /// Class of a decorated single endpoint in the boundary quotient.
    /// The endpoint is carried to infinity by its chain matrix; the
    /// quotient absorbs the shear ambiguity of that choice.
    pub fn boundary_point_class(&self, poly: &PolySym, at: &Cusp) -> Vec<Rat> {
        assert_eq!(poly.deg, self.deg());
        let moved = if at.is_infinity() {
            poly.clone()
        } else {
            let mover = convergents(at).expect("finite cusp").last_mat().clone();
            poly_action(&mover.inverse(), poly)
        };
        self.boundary_relations.quotient_coords(moved.coeffs())
    }

    /// Boundary of the class of `P` on `{0, oo}`: the decorated endpoint
    /// at zero minus the one at infinity.
    pub fn boundary_of_class(&self, poly: &PolySym) -> Vec<Rat> {
        let zero = self.boundary_point_class(poly, &Cusp::zero());
        let inf = self.boundary_point_class(poly, &Cusp::infinity());
        zero.iter().zip(&inf).map(|(a, b)| a - b).collect()
    }

    /// Boundary of a formal symbol, endpoint by endpoint, without
    /// passing through the generator reduction.
    pub fn boundary_direct(&self, symbol: &ModularSymbol) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.boundary_relations.free_columns().len()];
        for (p, from, to) in &symbol.terms {
            let a = self.boundary_point_class(p, from);
            let b = self.boundary_point_class(p, to);
            for (o, (x, y)) in out.iter_mut().zip(a.iter().zip(&b)) {
                *o += x - y;
            }
        }
        out
    }

    /// Polynomial representatives whose classes span the kernel of the
    /// boundary map. Since the boundary quotient is one-dimensional, the
    /// kernel is cut out of the quotient basis by a single rational
    /// condition.
    pub fn cuspidal_basis(&self) -> Vec<PolySym> {
        let reps = self.basis();
        let images: Vec<Rat> = reps
            .iter()
            .map(|p| self.boundary_of_class(p).pop().unwrap_or_else(Rat::zero))
            .collect();
        match images.iter().position(|x| !x.is_zero()) {
            None => reps,
            Some(j0) => {
                let pivot = reps[j0].clone();
                reps.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != j0)
                    .map(|(j, rep)| rep.sub(&pivot.scale(&(&images[j] / &images[j0]))))
                    .collect()
            }
        }
    }

    /// Dimension of the cuspidal subspace.
    pub fn cuspidal_dim(&self) -> usize {
        self.cuspidal_basis().len()
    }
}

/// Generator coordinates of `P` on `{oo, c}` along the convergent chain
/// of `c`: each chain edge is a unimodular image of the base pair, and
/// pulling the polynomial back along the edge matrix turns the decorated
/// edge into a generator.
fn chain_to(space: &SymbolSpace, poly: &PolySym, c: &Cusp) -> PolySym {
    let mut out = PolySym::zero(space.deg());
    if c.is_infinity() {
        return out;
    }
    for g in convergents(c).expect("finite cusp").mats() {
        out = out.add(&poly_action(&g.inverse(), poly));
    }
    out
}

/// Reduce `P` on `{from, to}` to generator coordinates: a polynomial
/// whose class on the base pair `{0, oo}` equals the class of the input.
/// The pair is split through infinity and each side telescopes along its
/// continued-fraction chain.
pub fn reduce_symbol(space: &SymbolSpace, poly: &PolySym, from: &Cusp, to: &Cusp) -> PolySym {
    chain_to(space, poly, to).sub(&chain_to(space, poly, from))
}

/// Reduce after rebasing the whole symbol by a group element: carry the
/// polynomial and both endpoints through the inverse of `frame`, then
/// reduce there. The class of the result agrees with [`reduce_symbol`],
/// while the chains walked and the polynomials pulled back differ, so the
/// two routes check the relation subspace against each other.
pub fn reduce_symbol_in_frame(
    space: &SymbolSpace,
    poly: &PolySym,
    from: &Cusp,
    to: &Cusp,
    frame: &Mat2,
) -> PolySym {
    let inv = frame.inverse();
    reduce_symbol(
        space,
        &poly_action(&inv, poly),
        &inv.mobius_cusp(from),
        &inv.mobius_cusp(to),
    )
}

/// Number of independent cusp forms of even weight k at level one, by
/// the classical dimension count for the graded algebra of level-one
/// forms.
pub fn dim_cusp_forms(weight: u32) -> usize {
    assert!(weight >= 4 && weight % 2 == 0);
    let total = if weight % 12 == 2 {
        (weight / 12) as usize
    } else {
        (weight / 12) as usize + 1
    };
    total - 1
}

/// Pairing of generator classes against a fixed cusp form: the axis
/// integral of `f(z) Q(z, 1)` from infinity to zero. The depth-one
/// transport along the axis is computed once; pairing any polynomial is
/// then a finite sum.
pub struct PeriodPairing {
    weight: u32,
    axis: Vec<Complex64>,
}

impl PeriodPairing {
    pub fn new(f: &CuspForm) -> Self {
        let basis = DensityBasis::full(vec![f.clone()]);
        let tr = Transporter::new(&basis, TransportConfig { depth: 1, ..Default::default() });
        let to_zero = tr.transport(
            &ExtendedPoint::infinity(),
            &ExtendedPoint::Cusp(Cusp::zero()),
        );
        let axis = (0..(f.weight() - 1) as usize).map(|i| *to_zero.get(&[i])).collect();
        PeriodPairing { weight: f.weight(), axis }
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Integral of `f(z) Q(z, 1)` from infinity to zero.
    pub fn pair(&self, poly: &PolySym) -> Complex64 {
        assert_eq!(poly.deg(), self.weight - 2, "weight mismatch");
        let mut total = Complex64::new(0.0, 0.0);
        for (c, v) in poly.coeffs().iter().zip(&self.axis) {
            if !c.is_zero() {
                total += c.to_f64().expect("coefficient fits in f64") * v;
            }
        }
        total
    }
}
