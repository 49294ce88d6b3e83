//! Exact inertia by congruent diagonalization.
//!
//! The active block is reduced one pivot at a time. A nonzero diagonal
//! entry `d` is eliminated by a Schur complement and contributes the sign of
//! `d`. When every remaining diagonal entry vanishes but some off-diagonal
//! entry `c` does not, the 2x2 block `[[0, c], [conj(c), 0]]` is eliminated
//! instead and contributes one positive and one negative square. Whatever is
//! left once all entries vanish is the nullity.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::ops::{Add, Div, Mul, Sub};

use super::SignatureResult;
use crate::error::{Error, Result};

/// Field elements the elimination can run over.
trait ExactScalar:
    Clone
    + Zero
    + Add<Output = Self>
    + Sub<Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn conj(&self) -> Self;
    /// Sign of a real (diagonal) element.
    fn real_sign(&self) -> i8;
}

impl ExactScalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn real_sign(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// `re + i im` with rational parts.
#[derive(Debug, Clone, PartialEq)]
struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    fn from_int(z: Complex<i64>) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(z.re)),
            im: BigRational::from_integer(BigInt::from(z.im)),
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul<&GaussianRational> for GaussianRational {
    type Output = Self;

    fn mul(self, rhs: &Self) -> Self {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&GaussianRational> for GaussianRational {
    type Output = Self;

    fn div(self, rhs: &Self) -> Self {
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let num = self * &rhs.conj();
        GaussianRational {
            re: num.re / &norm,
            im: num.im / norm,
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl ExactScalar for GaussianRational {
    fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn real_sign(&self) -> i8 {
        self.re.real_sign()
    }
}

fn inertia<F: ExactScalar>(mut a: Vec<Vec<F>>) -> SignatureResult {
    let mut active: Vec<usize> = (0..a.len()).collect();
    let (mut pos, mut neg) = (0usize, 0usize);

    loop {
        if let Some(slot) = active.iter().position(|&p| !a[p][p].is_zero()) {
            let p = active.swap_remove(slot);
            let pivot = a[p][p].clone();
            match pivot.real_sign() {
                1 => pos += 1,
                _ => neg += 1,
            }
            for &i in &active {
                if a[i][p].is_zero() {
                    continue;
                }
                let factor = a[i][p].clone() / &pivot;
                for &l in &active {
                    if a[p][l].is_zero() {
                        continue;
                    }
                    let update = factor.clone() * &a[p][l];
                    a[i][l] = a[i][l].clone() - update;
                }
            }
            continue;
        }

        let hyperbolic = active
            .iter()
            .enumerate()
            .find_map(|(s, &j)| active[s + 1..].iter().find(|&&k| !a[j][k].is_zero()).map(|&k| (j, k)));
        let Some((j, k)) = hyperbolic else {
            break;
        };
        pos += 1;
        neg += 1;
        active.retain(|&i| i != j && i != k);
        let c = a[j][k].clone();
        let c_conj = c.conj();
        // S_il = a_il - a_ij a_kl / conj(c) - a_ik a_jl / c
        for &i in &active {
            let (aij, aik) = (a[i][j].clone(), a[i][k].clone());
            if aij.is_zero() && aik.is_zero() {
                continue;
            }
            let left = aij / &c_conj;
            let right = aik / &c;
            for &l in &active {
                let update = left.clone() * &a[k][l] + right.clone() * &a[j][l];
                a[i][l] = a[i][l].clone() - update;
            }
        }
    }

    SignatureResult::from_counts(pos, neg, active.len())
}

fn check_square<T>(m: &[Vec<T>]) -> Result<()> {
    let n = m.len();
    match m.iter().position(|r| r.len() != n) {
        Some(row) => Err(Error::NotSquare {
            row,
            len: m[row].len(),
            expected: n,
        }),
        None => Ok(()),
    }
}

/// Exact inertia of a symmetric integer matrix.
pub fn integer_symmetric_signature(m: &[Vec<i64>]) -> Result<SignatureResult> {
    check_square(m)?;
    let n = m.len();
    for j in 0..n {
        for k in j + 1..n {
            if m[j][k] != m[k][j] {
                return Err(Error::NotSymmetric { row: j, col: k });
            }
        }
    }
    let a = m
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    Ok(inertia(a))
}

fn check_gaussian_hermitian(m: &[Vec<Complex<i64>>]) -> Result<()> {
    check_square(m)?;
    let n = m.len();
    for j in 0..n {
        for k in j..n {
            if m[j][k] != m[k][j].conj() {
                return Err(Error::NotSymmetric { row: j, col: k });
            }
        }
    }
    Ok(())
}

/// Exact inertia of a Hermitian matrix with Gaussian-integer entries.
pub fn gaussian_hermitian_signature(m: &[Vec<Complex<i64>>]) -> Result<SignatureResult> {
    check_gaussian_hermitian(m)?;
    let a = m
        .iter()
        .map(|r| r.iter().map(|&z| GaussianRational::from_int(z)).collect())
        .collect();
    Ok(inertia(a))
}

/// Exact version of [`super::bordered_delta`] for Gaussian-integer input.
pub fn bordered_delta_exact(m: &[Vec<Complex<i64>>], z: &[Complex<i64>], lam: i64) -> Result<(i64, i64)> {
    check_gaussian_hermitian(m)?;
    let n = m.len();
    if z.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: z.len(),
        });
    }
    let mut bordered: Vec<Vec<Complex<i64>>> = m
        .iter()
        .zip(z)
        .map(|(row, &zj)| {
            let mut row = row.clone();
            row.push(zj);
            row
        })
        .collect();
    let mut last: Vec<Complex<i64>> = z.iter().map(|w| w.conj()).collect();
    last.push(Complex::new(lam, 0));
    bordered.push(last);

    let before = gaussian_hermitian_signature(m)?;
    let after = gaussian_hermitian_signature(&bordered)?;
    Ok((
        after.signature - before.signature,
        after.nullity as i64 - before.nullity as i64,
    ))
}
