//! Signature and nullity of Hermitian matrices.
//!
//! Two routes are provided. The floating route diagonalizes a complex
//! Hermitian matrix and classifies eigenvalues against a relative zero
//! threshold. The exact route ([`exact`]) performs congruent
//! diagonalization over the rationals (or the Gaussian rationals) and
//! counts signs of the pivots, which by Sylvester's law of inertia gives
//! the same counts without ever computing an eigenvalue.

pub mod exact;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

pub use exact::{bordered_delta_exact, gaussian_hermitian_signature, integer_symmetric_signature};

/// Default relative tolerance for classifying an eigenvalue as zero.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Inertia of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct SignatureResult {
    pub signature: i64,
    pub nullity: usize,
    pub positives: usize,
    pub negatives: usize,
}

impl SignatureResult {
    pub fn from_counts(positives: usize, negatives: usize, nullity: usize) -> Self {
        SignatureResult {
            signature: positives as i64 - negatives as i64,
            nullity,
            positives,
            negatives,
        }
    }

    /// Dimension of the matrix the counts were taken from.
    pub fn dim(&self) -> usize {
        self.positives + self.negatives + self.nullity
    }
}

/// A square complex matrix, row-major.
///
/// Squareness is enforced on construction. Hermitian symmetry is checked
/// by [`hermitian_signature`] against the caller's tolerance, since the
/// acceptable defect depends on it.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn empty() -> Self {
        HermitianMatrix {
            n: 0,
            entries: Vec::new(),
        }
    }

    pub fn zeros(n: usize) -> Self {
        HermitianMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, values) in rows.into_iter().enumerate() {
            if values.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: values.len(),
                    expected: n,
                });
            }
            entries.extend(values);
        }
        Ok(HermitianMatrix { n, entries })
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x as f64, 0.0)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.n + col] = value;
    }

    pub(crate) fn add_at(&mut self, row: usize, col: usize, value: Complex64) {
        self.entries[row * self.n + col] += value;
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.entries
            .chunks(self.n.max(1))
            .take(self.n)
            .map(<[_]>::to_vec)
            .collect()
    }

    /// Largest absolute value of an entry (0 for the empty matrix).
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        HermitianMatrix {
            n: self.n,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// The matrix `[[self, z], [z^*, lam]]`.
    pub fn bordered(&self, z: &[Complex64], lam: f64) -> Result<Self> {
        if z.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: z.len(),
            });
        }
        let m = self.n + 1;
        let mut out = HermitianMatrix::zeros(m);
        for j in 0..self.n {
            for k in 0..self.n {
                out.set(j, k, self.get(j, k));
            }
            out.set(j, self.n, z[j]);
            out.set(self.n, j, z[j].conj());
        }
        out.set(self.n, self.n, Complex64::new(lam, 0.0));
        Ok(out)
    }

    /// Largest deviation `|m[j][k] - conj(m[k][j])|` and where it occurs.
    pub fn hermitian_defect(&self) -> (usize, usize, f64) {
        let mut worst = (0, 0, 0.0);
        for j in 0..self.n {
            for k in j..self.n {
                let dev = (self.get(j, k) - self.get(k, j).conj()).norm();
                if dev > worst.2 {
                    worst = (j, k, dev);
                }
            }
        }
        worst
    }

    pub(crate) fn to_nalgebra(&self) -> DMatrix<Complex64> {
        DMatrix::from_row_slice(self.n, self.n, &self.entries)
    }
}

impl std::ops::Neg for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn neg(self) -> HermitianMatrix {
        self.scaled(-1.0)
    }
}

/// Absolute zero threshold `tol * max(1, max |m_jk|)`.
pub fn zero_threshold(m: &HermitianMatrix, tol: f64) -> f64 {
    tol * m.max_abs().max(1.0)
}

/// Real spectrum of a Hermitian matrix together with the zero threshold it
/// is classified against.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub threshold: f64,
}

impl Spectrum {
    pub fn inertia(&self) -> SignatureResult {
        let (mut pos, mut neg, mut zero) = (0, 0, 0);
        for &lambda in &self.eigenvalues {
            if lambda.abs() <= self.threshold {
                zero += 1;
            } else if lambda > 0.0 {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        SignatureResult::from_counts(pos, neg, zero)
    }

    /// Determinant with eigenvalues below the threshold counted as zero.
    pub fn determinant(&self) -> f64 {
        self.eigenvalues
            .iter()
            .map(|&l| if l.abs() <= self.threshold { 0.0 } else { l })
            .product()
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// Eigenvalues of `m` after checking Hermitian symmetry within the relative
/// tolerance.
pub fn spectrum(m: &HermitianMatrix, tol: f64) -> Result<Spectrum> {
    check_tol(tol)?;
    let threshold = zero_threshold(m, tol);
    let (row, col, deviation) = m.hermitian_defect();
    if deviation > threshold {
        return Err(Error::NotHermitian { row, col, deviation });
    }
    if m.dim() == 0 {
        return Ok(Spectrum {
            eigenvalues: Vec::new(),
            threshold,
        });
    }
    let mut a = m.to_nalgebra();
    // Symmetrize away the admissible defect so the solver sees an exactly
    // Hermitian input.
    for j in 0..m.dim() {
        a[(j, j)].im = 0.0;
        for k in j + 1..m.dim() {
            let avg = (a[(j, k)] + a[(k, j)].conj()) * 0.5;
            a[(j, k)] = avg;
            a[(k, j)] = avg.conj();
        }
    }
    let mut eigenvalues: Vec<f64> = a.symmetric_eigenvalues().iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues, threshold })
}

/// Signature, nullity and sign counts of a Hermitian matrix.
///
/// An eigenvalue is treated as zero when `|lambda| <= tol * max(1, max |m_jk|)`.
pub fn hermitian_signature(m: &HermitianMatrix, tol: f64) -> Result<SignatureResult> {
    Ok(spectrum(m, tol)?.inertia())
}

/// `(sigma(M') - sigma(M), eta(M') - eta(M))` for the bordered matrix
/// `M' = [[M, z], [z^*, lam]]`.
///
/// Cauchy interlacing forces `|delta_sigma| + |delta_eta| = 1`.
pub fn bordered_delta(m: &HermitianMatrix, z: &[Complex64], lam: f64, tol: f64) -> Result<(i64, i64)> {
    let bordered = m.bordered(z, lam)?;
    let before = hermitian_signature(m, tol)?;
    let after = hermitian_signature(&bordered, tol)?;
    Ok((
        after.signature - before.signature,
        after.nullity as i64 - before.nullity as i64,
    ))
}
