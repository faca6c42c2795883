//! Small dense complex linear algebra: pivoted QR least squares.
//!
//! Sized for systems up to a few thousand unknowns, which covers the
//! degree-by-degree solves elsewhere in the crate. Column pivoting makes
//! the factorization rank-revealing, so consistent singular systems are
//! solved and inconsistent ones report an honest residual.

use num_complex::Complex64;

/// Row-major dense complex matrix.
#[derive(Clone, Debug)]
pub struct CMat {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + aik * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &CMat) -> CMat {
        let mut out = CMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.set(i * other.rows + p, j * other.cols + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }
}

pub fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Result of a least-squares solve.
#[derive(Clone, Debug)]
pub struct Lstsq {
    pub x: Vec<Complex64>,
    /// Euclidean norm of `A x - b`, recomputed from the returned `x`.
    pub residual: f64,
    /// Numerical rank at relative threshold 1e-12.
    pub rank: usize,
}

/// Minimize `|A x - b|` by Householder QR with column pivoting. Free
/// variables beyond the numerical rank are set to zero.
pub fn lstsq(a: &CMat, b: &[Complex64]) -> Lstsq {
    assert_eq!(a.rows(), b.len(), "dimension mismatch");
    let m = a.rows();
    let n = a.cols();
    let mut r = a.clone();
    let mut qtb = b.to_vec();
    let mut perm: Vec<usize> = (0..n).collect();
    let kmax = m.min(n);

    // Squared norms of the trailing part of each column, for pivoting.
    let mut colnorm: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| r.get(i, j).norm_sqr()).sum())
        .collect();

    let mut diag = Vec::with_capacity(kmax);
    for k in 0..kmax {
        let (jbest, _) = colnorm
            .iter()
            .enumerate()
            .skip(k)
            .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
            .unwrap();
        if jbest != k {
            for i in 0..m {
                let tmp = r.get(i, k);
                r.set(i, k, r.get(i, jbest));
                r.set(i, jbest, tmp);
            }
            colnorm.swap(k, jbest);
            perm.swap(k, jbest);
        }

        // Householder vector for the k-th column tail.
        let tail_norm = {
            let s: f64 = (k..m).map(|i| r.get(i, k).norm_sqr()).sum();
            s.sqrt()
        };
        if tail_norm == 0.0 {
            diag.push(0.0);
            continue;
        }
        let x0 = r.get(k, k);
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * tail_norm;
        let mut v: Vec<Complex64> = (k..m).map(|i| r.get(i, k)).collect();
        v[0] -= alpha;
        let vnorm2: f64 = v.iter().map(|c| c.norm_sqr()).sum();
        if vnorm2 > 0.0 {
            // Reflect the remaining columns and the right-hand side.
            for j in k..n {
                let dot: Complex64 =
                    (0..v.len()).map(|i| v[i].conj() * r.get(k + i, j)).sum();
                let f = dot * (2.0 / vnorm2);
                for i in 0..v.len() {
                    let val = r.get(k + i, j) - f * v[i];
                    r.set(k + i, j, val);
                }
            }
            let dot: Complex64 = (0..v.len()).map(|i| v[i].conj() * qtb[k + i]).sum();
            let f = dot * (2.0 / vnorm2);
            for i in 0..v.len() {
                qtb[k + i] -= f * v[i];
            }
        }
        diag.push(r.get(k, k).norm());
        for (j, cn) in colnorm.iter_mut().enumerate().skip(k + 1) {
            *cn -= r.get(k, j).norm_sqr();
            if *cn < 0.0 {
                *cn = 0.0;
            }
        }
    }

    let dmax = diag.iter().cloned().fold(0.0_f64, f64::max);
    let rank = diag.iter().take_while(|&&d| d > 1e-12 * dmax.max(1e-300)).count();

    // Back substitution on the leading rank-by-rank block.
    let mut y = vec![Complex64::new(0.0, 0.0); n];
    for i in (0..rank).rev() {
        let mut s = qtb[i];
        for j in i + 1..rank {
            s -= r.get(i, j) * y[j];
        }
        y[i] = s / r.get(i, i);
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for (k, &j) in perm.iter().enumerate() {
        x[j] = y[k];
    }

    let ax = a.mul_vec(&x);
    let residual = vec_norm(
        &ax.iter().zip(b).map(|(p, q)| p - q).collect::<Vec<_>>(),
    );
    Lstsq { x, residual, rank }
}
