//! Signature and nullity on the torus: point evaluation, recovery of the
//! Levine-Tristram invariants, grid scans and the Alexander-module rank
//! estimate.

use std::io::{self, Write};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::ccomplex::{assemble_h, h_at_minus_ones, GeneralizedSeifertSystem, TorusPoint};
use crate::error::{Error, Result};
use crate::hermitian::{integer_symmetric_signature, spectrum, SignatureResult};

/// `(sigma_L(omega), eta_L(omega))`.
///
/// At `(-1, ..., -1)` the exact integer path is used, since there
/// `H = 2^mu sum_e A^e` has integer entries.
pub fn signature_nullity(gss: &GeneralizedSeifertSystem, omega: &TorusPoint, tol: f64) -> Result<SignatureResult> {
    if omega.mu() != gss.mu {
        return Err(Error::ColorMismatch {
            expected: gss.mu,
            found: omega.mu(),
        });
    }
    if omega.is_all_minus_one() {
        integer_symmetric_signature(&h_at_minus_ones(gss)?)
    } else {
        spectrum(&assemble_h(gss, omega)?, tol).map(|s| s.inertia())
    }
}

/// Levine-Tristram signature and nullity of the underlying oriented link at
/// `exp(2 pi i q)`, read off the diagonal point `(omega, ..., omega)` and
/// corrected by the total linking number between colors.
pub fn lt_signature_from_multivariable(gss: &GeneralizedSeifertSystem, q: Ratio<i64>, tol: f64) -> Result<(i64, u32)> {
    let total_lk = match gss.total_linking() {
        Some(lk) => lk,
        None if gss.mu == 1 => 0,
        None => return Err(Error::MissingLinking),
    };
    let omega = TorusPoint::diagonal(q, gss.mu)?;
    let r = signature_nullity(gss, &omega, tol)?;
    Ok((r.signature - total_lk, r.nullity as u32))
}

/// Invariants at one torus point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantSample {
    pub omega: TorusPoint,
    pub sigma: i64,
    pub eta: u32,
    /// Determinant of `H(omega)` from its classified spectrum: zero whenever
    /// `eta > 0`.
    pub det: f64,
    /// `|det| <= (tol * max(1, max |H_jk|))^n` with `n > 0`.
    pub det_zero: bool,
}

impl InvariantSample {
    pub fn abs_det(&self) -> f64 {
        self.det.abs()
    }
}

/// Threshold below which `|det H|` flags a potential zero of the Alexander
/// polynomial.
pub fn det_zero_threshold(max_abs_entry: f64, n: usize, tol: f64) -> f64 {
    (tol * max_abs_entry.max(1.0)).powi(n as i32)
}

pub fn evaluate(gss: &GeneralizedSeifertSystem, omega: &TorusPoint, tol: f64) -> Result<InvariantSample> {
    let h = assemble_h(gss, omega)?;
    let eig = spectrum(&h, tol)?;
    let inertia = if omega.is_all_minus_one() {
        signature_nullity(gss, omega, tol)?
    } else {
        eig.inertia()
    };
    let det = if inertia.nullity > 0 { 0.0 } else { eig.determinant() };
    let n = h.dim();
    Ok(InvariantSample {
        omega: omega.clone(),
        sigma: inertia.signature,
        eta: inertia.nullity as u32,
        det,
        det_zero: n > 0 && det.abs() <= det_zero_threshold(h.max_abs(), n, tol),
    })
}

/// Samples on the grid of fractions `k / (R + 1)`, `k = 1..=R`, per axis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanGrid {
    pub resolution: usize,
    pub mu: usize,
    /// Row-major: the first coordinate varies slowest.
    pub samples: Vec<InvariantSample>,
}

pub fn torus_scan(gss: &GeneralizedSeifertSystem, resolution: usize, tol: f64) -> Result<ScanGrid> {
    if resolution == 0 {
        return Err(Error::InvalidResolution(resolution));
    }
    gss.ensure_valid()?;
    let mu = gss.mu;
    let count = resolution
        .checked_pow(mu as u32)
        .ok_or(Error::GridTooLarge { resolution, mu })?;
    let denom = resolution as i64 + 1;
    let samples = (0..count)
        .into_par_iter()
        .map(|index| {
            let mut fractions = vec![Ratio::from_integer(0); mu];
            let mut rest = index;
            for axis in (0..mu).rev() {
                fractions[axis] = Ratio::new((rest % resolution) as i64 + 1, denom);
                rest /= resolution;
            }
            evaluate(gss, &TorusPoint::new(fractions)?, tol)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanGrid {
        resolution,
        mu,
        samples,
    })
}

impl ScanGrid {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sample at grid coordinates `k_i` in `0..resolution`.
    pub fn at(&self, coords: &[usize]) -> &InvariantSample {
        let index = coords.iter().fold(0, |acc, &k| acc * self.resolution + k);
        &self.samples[index]
    }

    pub fn min_eta(&self) -> Option<u32> {
        self.samples.iter().map(|s| s.eta).min()
    }

    pub fn det_zero_count(&self) -> usize {
        self.samples.iter().filter(|s| s.det_zero).count()
    }

    /// Index pairs of samples adjacent along one axis.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let r = self.resolution;
        let mut out = Vec::new();
        for index in 0..self.samples.len() {
            let mut stride = 1;
            for _ in 0..self.mu {
                if (index / stride) % r + 1 < r {
                    out.push((index, index + stride));
                }
                stride *= r;
            }
        }
        out
    }

    /// Adjacent pairs where the signature changes although neither sample
    /// is flagged and the determinant keeps its sign, so no zero of
    /// `det H` is detected between them.
    pub fn unexplained_jumps(&self) -> Vec<(usize, usize)> {
        self.adjacent_pairs()
            .into_iter()
            .filter(|&(a, b)| {
                let (s, t) = (&self.samples[a], &self.samples[b]);
                s.sigma != t.sigma && !s.det_zero && !t.det_zero && s.det * t.det > 0.0
            })
            .collect()
    }

    /// CSV with header `theta_1,...,theta_mu,sigma,eta,absdet`.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        let mut header: Vec<String> = (1..=self.mu).map(|i| format!("theta_{i}")).collect();
        header.extend(["sigma", "eta", "absdet"].map(String::from));
        writeln!(out, "{}", header.join(","))?;
        for s in &self.samples {
            let mut fields: Vec<String> = s
                .omega
                .fractions()
                .iter()
                .map(|q| format_g12(*q.numer() as f64 / *q.denom() as f64))
                .collect();
            fields.push(s.sigma.to_string());
            fields.push(s.eta.to_string());
            fields.push(format_g12(s.abs_det()));
            writeln!(out, "{}", fields.join(","))?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV is ASCII")
    }
}

/// Twelve significant digits, trailing zeros trimmed, in the style of C's
/// `%.12g`.
pub fn format_g12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..12).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        return format!("{mantissa}e{sign}{:02}", exp.abs());
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Minimum nullity over the given points.
///
/// The rank of the Alexander module is the minimum over the whole torus, so
/// a sampled minimum can only overestimate it.
pub fn estimate_beta(gss: &GeneralizedSeifertSystem, samples: &[TorusPoint], tol: f64) -> Result<u32> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    samples
        .par_iter()
        .map(|omega| signature_nullity(gss, omega, tol).map(|r| r.nullity as u32))
        .try_reduce(|| u32::MAX, |a, b| Ok(a.min(b)))
}
