//! Two-component 2-bridge links `C(2a_1, b_1, 2a_2, ..., b_{n-1}, 2a_n)`.
//!
//! The standard diagram carries a C-complex made of two discs meeting in
//! `s = a_1 + ... + a_n` clasps, `a_i` of them in the i-th even twist
//! region. Consecutive clasps `k, k+1` bound a loop `g_k` running across
//! both discs, and these `s - 1` loops form a basis of `H_1`. With respect
//! to it:
//!
//! * `A^{+-}` has `-1` on the diagonal and `+1` on the superdiagonal: each
//!   loop meets its successor in one shared clasp.
//! * `A^{++}` is diagonal. A loop whose two clasps lie in the same even
//!   region contributes 0; a loop that runs through the odd twist region
//!   `b_i` between regions `i` and `i+1` picks up `1 - b_i`.
//!
//! Hence `H(-1,-1) = 4 T` with `T` tridiagonal, off-diagonal 1 and
//! diagonal `-2 d_k` where `d_k = 1` inside an even region and `d_k = b_i`
//! across an odd one. For `C(4,3,2)` this is `A^{++} = [[0,0],[0,-2]]`,
//! `A^{+-} = [[-1,1],[0,-1]]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::ccomplex::{GeneralizedSeifertSystem, SignPattern};
use crate::error::{Error, Result};

/// Conway coefficients `c_1, ..., c_m` with `m` odd, every odd-position
/// coefficient even and every coefficient positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConwayForm {
    coefficients: Vec<u32>,
}

impl ConwayForm {
    pub fn new(coefficients: Vec<u32>) -> Result<Self> {
        let invalid = |reason: &str| Error::InvalidConwayForm {
            form: format_coefficients(&coefficients),
            reason: reason.to_string(),
        };
        if coefficients.is_empty() {
            return Err(invalid("no coefficients"));
        }
        if coefficients.len().is_multiple_of(2) {
            return Err(invalid(
                "unsupported family: only C(2a_1, b_1, ..., b_{n-1}, 2a_n) with an odd number of coefficients is covered",
            ));
        }
        if coefficients.contains(&0) {
            return Err(invalid("coefficients must be positive"));
        }
        if coefficients.iter().step_by(2).any(|&c| c % 2 != 0) {
            return Err(invalid(
                "unsupported family: coefficients at odd positions must be even, C(2a_1, b_1, ..., 2a_n)",
            ));
        }
        Ok(ConwayForm { coefficients })
    }

    /// Builds `C(2a_1, b_1, ..., 2a_n)`; `b` must have one entry fewer than `a`.
    pub fn from_ab(a: &[u32], b: &[u32]) -> Result<Self> {
        if a.len() != b.len() + 1 {
            return Err(Error::InvalidConwayForm {
                form: format!("a={a:?} b={b:?}"),
                reason: "need exactly one more a_i than b_i".to_string(),
            });
        }
        let mut coefficients = Vec::with_capacity(a.len() + b.len());
        for (i, &ai) in a.iter().enumerate() {
            coefficients.push(2 * ai);
            if let Some(&bi) = b.get(i) {
                coefficients.push(bi);
            }
        }
        ConwayForm::new(coefficients)
    }

    pub fn coefficients(&self) -> &[u32] {
        &self.coefficients
    }

    /// Half the even coefficients: clasps per even region.
    pub fn a(&self) -> Vec<u32> {
        self.coefficients.iter().step_by(2).map(|c| c / 2).collect()
    }

    pub fn b(&self) -> Vec<u32> {
        self.coefficients.iter().skip(1).step_by(2).copied().collect()
    }

    /// Total number of clasps, `a_1 + ... + a_n`.
    pub fn clasps(&self) -> usize {
        self.a().iter().map(|&a| a as usize).sum()
    }

    /// Diagonal entries of `A^{++}`, one per basis loop.
    fn loop_self_linking(&self) -> Vec<i64> {
        let a = self.a();
        let b = self.b();
        let mut out = Vec::with_capacity(self.clasps().saturating_sub(1));
        for (i, &ai) in a.iter().enumerate() {
            out.extend(std::iter::repeat_n(0, ai as usize - 1));
            if let Some(&bi) = b.get(i) {
                out.push(1 - bi as i64);
            }
        }
        out
    }
}

fn format_coefficients(c: &[u32]) -> String {
    let parts: Vec<String> = c.iter().map(u32::to_string).collect();
    format!("C({})", parts.join(","))
}

impl fmt::Display for ConwayForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coefficients(&self.coefficients))
    }
}

/// Accepts `4,3,2` or `C(4,3,2)`.
impl FromStr for ConwayForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let body = trimmed
            .strip_prefix("C(")
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(trimmed);
        let coefficients = body
            .split(',')
            .map(|t| {
                t.trim().parse::<u32>().map_err(|_| Error::InvalidConwayForm {
                    form: s.to_string(),
                    reason: format!("{t:?} is not a positive integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ConwayForm::new(coefficients)
    }
}

/// The two-disc C-complex system of rank `s - 1`.
pub fn build_gss(form: &ConwayForm) -> Result<GeneralizedSeifertSystem> {
    let diag = form.loop_self_linking();
    let n = diag.len();
    let mut plus_plus = vec![vec![0i64; n]; n];
    let mut plus_minus = vec![vec![0i64; n]; n];
    for k in 0..n {
        plus_plus[k][k] = diag[k];
        plus_minus[k][k] = -1;
        if k + 1 < n {
            plus_minus[k][k + 1] = 1;
        }
    }
    let patterns = SignPattern::canonical(2);
    let matrices = BTreeMap::from([(patterns[0].clone(), plus_plus), (patterns[1].clone(), plus_minus)]);
    Ok(GeneralizedSeifertSystem::new(2, n, matrices)?.with_name(form.to_string()))
}

/// `H(-1,-1) = 4 T`, `T` tridiagonal with off-diagonal 1 and diagonal `-2 d_k`.
pub fn h_minus_one_closed_form(form: &ConwayForm) -> Vec<Vec<i64>> {
    let d = tridiagonal_weights(form);
    let n = d.len();
    let mut h = vec![vec![0i64; n]; n];
    for k in 0..n {
        h[k][k] = -8 * d[k];
        if k + 1 < n {
            h[k][k + 1] = 4;
            h[k + 1][k] = 4;
        }
    }
    h
}

/// The positive integers `d_k`: 1 inside an even region, `b_i` across the
/// i-th odd region.
pub fn tridiagonal_weights(form: &ConwayForm) -> Vec<i64> {
    form.loop_self_linking().into_iter().map(|x| 1 - x).collect()
}

/// `a_1 + ... + a_n`.
pub fn predicted_splitting(form: &ConwayForm) -> u64 {
    form.clasps() as u64
}
