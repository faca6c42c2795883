//! Cusp forms as evaluatable objects with controlled truncation error.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::qexp;

/// A level-one cusp form with its exact q-expansion and a float copy for
/// evaluation. The coefficient vector is chosen at construction; the
/// evaluation routine reports if a requested accuracy needs more terms
/// than are on hand.
#[derive(Clone, Debug)]
pub struct CuspForm {
    name: String,
    weight: u32,
    coeffs: Vec<BigInt>,
    coeffs_f64: Vec<f64>,
}

impl CuspForm {
    /// The weight-12 form with `n_terms` coefficients.
    pub fn weight12(n_terms: usize) -> Self {
        CuspForm::from_coeffs("delta", 12, qexp::delta_coeffs(n_terms))
    }

    /// The weight-16 form (weight-12 times the weight-4 Eisenstein series).
    pub fn weight16(n_terms: usize) -> Self {
        CuspForm::from_coeffs("delta_e4", 16, qexp::delta_e4_coeffs(n_terms))
    }

    pub fn from_coeffs(name: &str, weight: u32, coeffs: Vec<BigInt>) -> Self {
        let coeffs_f64 = coeffs.iter().map(|c| c.to_f64().expect("finite")).collect();
        CuspForm { name: name.to_string(), weight, coeffs, coeffs_f64 }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// Number of stored coefficients beyond the constant term.
    pub fn n_terms(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs_f64(&self) -> &[f64] {
        &self.coeffs_f64
    }

    /// Terms needed so the q-series tail at height `y` is below `tol`,
    /// using the coefficient bound `|a_n| <= n^(k/2 + 1/2)` and geometric
    /// tail summation.
    pub fn terms_for_height(weight: u32, y: f64, tol: f64) -> usize {
        assert!(y > 0.0, "height must be positive");
        let r = (-2.0 * std::f64::consts::PI * y).exp();
        let p = weight as f64 / 2.0 + 0.5;
        let mut n = 8usize;
        loop {
            // Tail bound: sum_{m > n} m^p r^m <= (n+1)^p r^(n+1) / (1 - r)^2
            // once r (1 + 1/n)^p < 1; the factor (1-r)^-2 absorbs the
            // polynomial growth ratio for the n at which we stop.
            let bound = ((n + 1) as f64).powf(p) * r.powi(n as i32 + 1) / (1.0 - r).powi(2);
            if bound < tol {
                return n;
            }
            n = n.saturating_add(n / 2 + 8);
            assert!(n < 4_000_000, "height {y} needs unreasonably many terms");
        }
    }

    /// Evaluate at an interior point by Horner on the stored expansion.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        assert!(z.im > 0.0, "evaluation requires a point above the real axis");
        let q = (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * z).exp();
        let mut acc = Complex64::new(0.0, 0.0);
        for &a in self.coeffs_f64.iter().skip(1).rev() {
            acc = acc * q + a;
        }
        acc * q + self.coeffs_f64[0]
    }

    /// Evaluate, first checking the stored expansion reaches `tol` at this
    /// height.
    pub fn eval_with_tol(&self, z: Complex64, tol: f64) -> Complex64 {
        let needed = CuspForm::terms_for_height(self.weight, z.im, tol);
        assert!(
            needed <= self.n_terms(),
            "form {} holds {} terms, height {} at tolerance {tol:.1e} needs {needed}",
            self.name,
            self.n_terms(),
            z.im
        );
        self.eval(z)
    }
}
