//! Polynomial-twisted densities of cusp forms and their exact transformation
//! matrices.
//!
//! For a weight-k form the densities are `f(z) z^(m-1) dz` with
//! `1 <= m <= k-1`; substituting `z -> gz` and using modularity turns the
//! density with index m into an integer combination of the others. Columns
//! of the pullback matrix expand `(aw+b)^(m-1) (cw+d)^(k-1-m)`, and the
//! matrix is contravariant: `P(gh) = P(h) P(g)`. Its transpose is the
//! covariant substitution used on transported series.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::ncalg::LetterMap;
use crate::psl2z::Mat2;
use crate::ratmat::RatMat;

use super::form::CuspForm;

/// Coefficients of `(c0 + c1 w)^e` in ascending powers of `w`.
fn linear_power(c0: &BigInt, c1: &BigInt, e: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for _ in 0..e {
        let mut next = vec![BigInt::zero(); out.len() + 1];
        for (j, v) in out.iter().enumerate() {
            next[j] += v * c0;
            next[j + 1] += v * c1;
        }
        out = next;
    }
    out
}

/// The (k-1) x (k-1) pullback matrix of a unimodular substitution on the
/// density indices of one weight-k form. Entry (m'-1, m-1) is the
/// coefficient of `w^(m'-1)` in `(aw+b)^(m-1) (cw+d)^(k-1-m)`.
pub fn density_pullback(g: &Mat2, weight: u32) -> RatMat {
    let n = (weight - 1) as usize;
    let (a, b, c, d) = g.entries();
    let mut p = RatMat::zeros(n, n);
    for m in 1..=n as u32 {
        let left = linear_power(b, a, m - 1);
        let right = linear_power(d, c, weight - 1 - m);
        for (i, x) in left.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in right.iter().enumerate() {
                let row = i + j;
                let v = p.get(row, (m - 1) as usize) + BigRational::from_integer(x * y);
                p.set(row, (m - 1) as usize, v);
            }
        }
    }
    p
}

/// An ordered alphabet of densities drawn from one or more forms. Letter i
/// is the pair (form index, twist index m).
#[derive(Clone, Debug)]
pub struct DensityBasis {
    forms: Vec<CuspForm>,
    letters: Vec<(usize, u32)>,
    names: Vec<String>,
}

impl DensityBasis {
    /// All densities of every form: the full critical strip per form.
    pub fn full(forms: Vec<CuspForm>) -> Self {
        let mut letters = Vec::new();
        for (fi, f) in forms.iter().enumerate() {
            for m in 1..f.weight() {
                letters.push((fi, m));
            }
        }
        DensityBasis::with_letters(forms, letters)
    }

    fn with_letters(forms: Vec<CuspForm>, letters: Vec<(usize, u32)>) -> Self {
        let names = letters
            .iter()
            .map(|&(fi, m)| format!("{}[{m}]", forms[fi].name()))
            .collect();
        DensityBasis { forms, letters, names }
    }

    /// Close a seed set of densities under the substitutions of the two
    /// group generators, then build the basis on the closure. The closure
    /// is always the full strip of every seeded form, which the caller can
    /// observe through the resulting length.
    pub fn closure(forms: Vec<CuspForm>, seed: &[(usize, u32)]) -> Self {
        assert!(!seed.is_empty(), "closure needs a nonempty seed");
        for &(fi, m) in seed {
            assert!(fi < forms.len(), "seed form index out of range");
            assert!(m >= 1 && m < forms[fi].weight(), "seed twist out of range");
        }
        let gens = [Mat2::sigma(), Mat2::tau()];
        let mut active: Vec<std::collections::BTreeSet<u32>> =
            vec![std::collections::BTreeSet::new(); forms.len()];
        for &(fi, m) in seed {
            active[fi].insert(m);
        }
        loop {
            let mut grew = false;
            for (fi, f) in forms.iter().enumerate() {
                let k = f.weight();
                for g in &gens {
                    let p = density_pullback(g, k);
                    let current: Vec<u32> = active[fi].iter().copied().collect();
                    for m in current {
                        for mp in 1..k {
                            if !p.get((mp - 1) as usize, (m - 1) as usize).is_zero()
                                && active[fi].insert(mp)
                            {
                                grew = true;
                            }
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let letters: Vec<(usize, u32)> = active
            .iter()
            .enumerate()
            .flat_map(|(fi, ms)| ms.iter().map(move |&m| (fi, m)))
            .collect();
        DensityBasis::with_letters(forms, letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn forms(&self) -> &[CuspForm] {
        &self.forms
    }

    pub fn form(&self, fi: usize) -> &CuspForm {
        &self.forms[fi]
    }

    pub fn letter(&self, i: usize) -> (usize, u32) {
        self.letters[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Letters joined by dots; the empty word prints as "1".
    pub fn format_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            "1".to_string()
        } else {
            word.iter().map(|&i| self.names[i].as_str()).collect::<Vec<_>>().join(".")
        }
    }

    pub fn parse_word(&self, text: &str) -> Option<Vec<usize>> {
        if text == "1" {
            return Some(Vec::new());
        }
        text.split('.').map(|part| self.index_by_name(part)).collect()
    }

    /// Block-diagonal pullback matrix in letter order; contravariant.
    pub fn pullback_matrix(&self, g: &Mat2) -> RatMat {
        let n = self.len();
        let mut out = RatMat::zeros(n, n);
        for (fi, f) in self.forms.iter().enumerate() {
            let p = density_pullback(g, f.weight());
            for (col, &(cfi, cm)) in self.letters.iter().enumerate() {
                if cfi != fi {
                    continue;
                }
                for (row, &(rfi, rm)) in self.letters.iter().enumerate() {
                    if rfi != fi {
                        continue;
                    }
                    let v = p.get((rm - 1) as usize, (cm - 1) as usize).clone();
                    if !v.is_zero() {
                        out.set(row, col, v);
                    }
                }
            }
        }
        out
    }

    /// The covariant substitution on series: transpose of the pullback.
    /// Satisfies `map(gh) = map(g) . map(h)` under [`LetterMap::compose`].
    pub fn transport_map(&self, g: &Mat2) -> LetterMap<BigRational> {
        let p = self.pullback_matrix(g);
        let n = self.len();
        let mut l = LetterMap::zero_map(n);
        for j in 0..n {
            for i in 0..n {
                let v = p.get(i, j);
                if !v.is_zero() {
                    l.set_entry(j, i, v.clone());
                }
            }
        }
        l
    }

    pub fn transport_map_f64(&self, g: &Mat2) -> LetterMap<Complex64> {
        self.transport_map(g)
            .map(|r| Complex64::new(r.to_f64().expect("pullback entry fits f64"), 0.0))
    }

    /// Value of density i at an interior point: `f(z) z^(m-1)`.
    pub fn density_value(&self, i: usize, z: Complex64) -> Complex64 {
        let (fi, m) = self.letters[i];
        self.forms[fi].eval(z) * z.powu(m - 1)
    }
}
