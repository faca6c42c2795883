//! Level-one cusp forms: exact q-expansions, evaluation, weight actions,
//! and the density alphabet feeding the iterated integrals.

mod density;
mod form;
pub mod qexp;

pub use density::{density_pullback, DensityBasis};
pub use form::CuspForm;

use num_complex::Complex64;

/// Determinant normalization of the weight-k substitution action; the two
/// conventions agree on determinant-one matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetNormalization {
    /// Multiply by det^(k-1).
    DetPowKm1,
    /// Multiply by det^(k/2).
    DetPowHalfK,
}

/// Evaluate `(f |_k g)(z)` for an integer matrix `g` with positive
/// determinant: `det^e (cz+d)^(-k) f(gz)` with `e` set by the chosen
/// normalization.
pub fn slash_eval(
    f: &dyn Fn(Complex64) -> Complex64,
    weight: u32,
    g: [i64; 4],
    norm: DetNormalization,
    z: Complex64,
) -> Complex64 {
    let [a, b, c, d] = g;
    let det = a * d - b * c;
    assert!(det > 0, "slash action needs positive determinant");
    let az = Complex64::new(a as f64, 0.0) * z + Complex64::new(b as f64, 0.0);
    let cz = Complex64::new(c as f64, 0.0) * z + Complex64::new(d as f64, 0.0);
    let scale = match norm {
        DetNormalization::DetPowKm1 => (det as f64).powi(weight as i32 - 1),
        DetNormalization::DetPowHalfK => (det as f64).powf(weight as f64 / 2.0),
    };
    scale * cz.powu(weight).finv() * f(az / cz)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slash_by_unimodular_matrix_fixes_modular_forms() {
        let f = CuspForm::weight12(300);
        let z = Complex64::new(0.3, 1.1);
        for g in [[0i64, -1, 1, 0], [1, 1, 0, 1], [2, 1, 1, 1]] {
            for norm in [DetNormalization::DetPowKm1, DetNormalization::DetPowHalfK] {
                let v = slash_eval(&|w| f.eval(w), 12, g, norm, z);
                assert!((v - f.eval(z)).norm() < 1e-9, "matrix {g:?}");
            }
        }
    }

    #[test]
    fn scaling_matrix_acts_by_determinant_normalization() {
        // g = diag(2, 1) sends z to 2z; the two normalizations differ by
        // det^(k/2 - (k-1)) = det^(1 - k/2).
        let f = CuspForm::weight12(300);
        let z = Complex64::new(0.1, 0.9);
        let g = [2i64, 0, 0, 1];
        let v1 = slash_eval(&|w| f.eval(w), 12, g, DetNormalization::DetPowKm1, z);
        let v2 = slash_eval(&|w| f.eval(w), 12, g, DetNormalization::DetPowHalfK, z);
        let ratio = v1 / v2;
        let want = 2.0_f64.powi(11 - 6);
        assert!((ratio.re - want).abs() < 1e-9 && ratio.im.abs() < 1e-12);
    }
}
