//! Dense exact rational matrices: elimination, solving, kernels.
//!
//! Everything here is over `BigRational`, so rank and membership questions
//! are decided exactly. Matrices are small (dimensions in the hundreds at
//! most), so classical Gaussian elimination with exact arithmetic is fine.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat_i64(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Row-major dense matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        RatMat::from_rows(
            rows.iter().map(|row| row.iter().map(|&n| rat_i64(n)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMat {
        let mut out = RatMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = RatMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let aik = self.get(i, k);
                if aik.is_zero() {
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

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() {
                        s += self.get(i, j) * &v[j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        RatMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        RatMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rat) -> RatMat {
        let data = self.data.iter().map(|a| a * c).collect();
        RatMat { rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    /// Reduced row echelon form with the list of pivot columns.
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for j in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Largest-magnitude pivot keeps the rationals from ballooning
            // a little; correctness needs only a nonzero one.
            let piv = (r..m.rows)
                .filter(|&i| !m.get(i, j).is_zero())
                .max_by(|&x, &y| {
                    m.get(x, j).abs().partial_cmp(&m.get(y, j).abs()).unwrap()
                });
            let Some(piv) = piv else { continue };
            m.swap_rows(r, piv);
            let inv = {
                let p = m.get(r, j).clone();
                Rat::one() / p
            };
            for jj in j..m.cols {
                let v = m.get(r, jj) * &inv;
                m.set(r, jj, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, j).is_zero() {
                    continue;
                }
                let f = m.get(i, j).clone();
                for jj in j..m.cols {
                    let v = m.get(i, jj) - &f * m.get(r, jj);
                    m.set(i, jj, v);
                }
            }
            pivots.push(j);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by elimination; square matrices only.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a nonsquare matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rat::one();
        for j in 0..n {
            let Some(piv) = (j..n).find(|&i| !m.get(i, j).is_zero()) else {
                return Rat::zero();
            };
            if piv != j {
                m.swap_rows(j, piv);
                det = -det;
            }
            let p = m.get(j, j).clone();
            det *= &p;
            let inv = Rat::one() / p;
            for i in j + 1..n {
                if m.get(i, j).is_zero() {
                    continue;
                }
                let f = m.get(i, j) * &inv;
                for jj in j..n {
                    let v = m.get(i, jj) - &f * m.get(j, jj);
                    m.set(i, jj, v);
                }
            }
        }
        det
    }

    /// A particular solution of `self * x = rhs`, or None if inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, rhs.len(), "dimension mismatch");
        // Eliminate on the augmented matrix.
        let mut aug = RatMat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, rhs[i].clone());
        }
        let (r, pivots) = aug.rref();
        // Inconsistent iff a pivot lands in the last column.
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &j) in pivots.iter().enumerate() {
            x[j] = r.get(i, self.cols).clone();
        }
        Some(x)
    }

    /// A basis of the right kernel, as rows of the returned matrix.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivots.contains(j)).collect();
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (i, &j) in pivots.iter().enumerate() {
                v[j] = -r.get(i, f).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// An incrementally built row space, used to reduce vectors modulo a
/// subspace and to read off quotient coordinates.
///
/// Internally kept in reduced echelon form; `reduce` returns the canonical
/// coset representative, which vanishes exactly on the span.
#[derive(Clone, Debug)]
pub struct RowSpace {
    ncols: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Insert a generator; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let v = self.reduce(v);
        let Some(j) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = Rat::one() / v[j].clone();
        let v: Vec<Rat> = v.iter().map(|c| c * &inv).collect();
        // Back-substitute into existing rows to keep full reduction.
        for row in &mut self.rows {
            if !row[j].is_zero() {
                let f = row[j].clone();
                for (c, vc) in row.iter_mut().zip(&v) {
                    *c -= &f * vc;
                }
            }
        }
        let pos = self.pivots.iter().position(|&p| p > j).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, j);
        self.rows.insert(pos, v);
        true
    }

    /// Canonical representative of `v` modulo the span.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ncols, "dimension mismatch");
        let mut v = v.to_vec();
        for (row, &j) in self.rows.iter().zip(&self.pivots) {
            if !v[j].is_zero() {
                let f = v[j].clone();
                for (c, rc) in v.iter_mut().zip(row) {
                    *c -= &f * rc;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Columns with no pivot; their coordinates parametrize the quotient.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|j| !self.pivots.contains(j)).collect()
    }

    /// Coordinates of `v + span` in the free-column basis of the quotient.
    pub fn quotient_coords(&self, v: &[Rat]) -> Vec<Rat> {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|j| r[j].clone()).collect()
    }
}
