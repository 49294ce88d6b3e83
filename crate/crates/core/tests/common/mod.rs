//! Reference computations written independently of the library, used to
//! check it.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use rand::Rng;
use std::collections::BTreeMap;

use splitsig::{GeneralizedSeifertSystem, SignPattern};

/// `(positives, negatives, zeros)` of an integer symmetric matrix, from the
/// characteristic polynomial. All roots are real, so Descartes' rule of
/// signs counts the positive ones exactly.
pub fn charpoly_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = m.len();
    if n == 0 {
        return (0, 0, 0);
    }
    let a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    // Faddeev-LeVerrier: p(x) = x^n + c_1 x^{n-1} + ... + c_n.
    let mut coeffs = vec![BigInt::from(1)];
    let mut mk = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{k-1} I, with M_0 = 0 and c_0 = 1.
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &a[i][l] * &mk[l][j];
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &coeffs[k - 1];
        }
        mk = next;
        let mut trace = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if !a[i][l].is_zero() && !mk[l][i].is_zero() {
                    trace += &a[i][l] * &mk[l][i];
                }
            }
        }
        coeffs.push(-trace / BigInt::from(k as i64));
    }
    // coeffs[k] multiplies x^{n-k}.
    let zeros = coeffs.iter().rev().take_while(|c| c.is_zero()).count();
    let signs: Vec<bool> = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    let positives = signs.windows(2).filter(|w| w[0] != w[1]).count();
    (positives, n - positives - zeros, zeros)
}

/// Real symmetric embedding `[[X, -Y], [Y, X]]` of `X + iY`; each eigenvalue
/// of the Hermitian matrix appears twice.
pub fn real_embedding(re: &[Vec<i64>], im: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = re.len();
    let mut out = vec![vec![0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = re[i][j];
            out[i + n][j + n] = re[i][j];
            out[i][j + n] = -im[i][j];
            out[i + n][j] = im[i][j];
        }
    }
    out
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(m: &[Vec<f64>]) -> Vec<f64> {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let scale: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum::<f64>() + off;
        if off <= 1e-30 * scale.max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| x.partial_cmp(y).unwrap());
    ev
}

/// Eigenvalues of a complex Hermitian matrix through its real embedding,
/// with the duplicates removed.
pub fn hermitian_eigenvalues(h: &[Vec<Complex64>]) -> Vec<f64> {
    let n = h.len();
    let mut e = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let z = h[i][j];
            e[i][j] = z.re;
            e[i + n][j + n] = z.re;
            e[i][j + n] = -z.im;
            e[i + n][j] = z.im;
        }
    }
    jacobi_eigenvalues(&e).into_iter().step_by(2).collect()
}

/// `(signature, nullity)` from eigenvalues and an absolute zero threshold.
pub fn classify(eigenvalues: &[f64], threshold: f64) -> (i64, usize) {
    let pos = eigenvalues.iter().filter(|&&x| x > threshold).count() as i64;
    let neg = eigenvalues.iter().filter(|&&x| x < -threshold).count() as i64;
    (pos - neg, eigenvalues.len() - (pos + neg) as usize)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn lu_determinant(m: &[Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().partial_cmp(&a[j][col].norm()).unwrap())
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= f * v;
            }
        }
    }
    det
}

/// `H(omega)` summed naively over all `2^mu` sign vectors, with
/// `omega_i = exp(2 pi i theta_i)`.
pub fn naive_h(gss: &GeneralizedSeifertSystem, theta: &[f64]) -> Vec<Vec<Complex64>> {
    let mu = gss.mu;
    let n = gss.rank;
    let mut h = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for bits in 0..(1usize << mu) {
        let plus: Vec<bool> = (0..mu).map(|i| bits & (1 << i) == 0).collect();
        let mut coeff = Complex64::new(1.0, 0.0);
        for i in 0..mu {
            let angle = 2.0 * std::f64::consts::PI * theta[i];
            // conj(omega)^{+1} = exp(-i angle), conj(omega)^{-1} = exp(i angle)
            let w = if plus[i] {
                Complex64::new(angle.cos(), -angle.sin())
            } else {
                Complex64::new(angle.cos(), angle.sin())
            };
            coeff *= Complex64::new(1.0, 0.0) - w;
        }
        let a = pattern_matrix(gss, &plus);
        for j in 0..n {
            for k in 0..n {
                h[j][k] += coeff * a[j][k] as f64;
            }
        }
    }
    h
}

/// `A^e` read from the stored matrices: the pattern itself if stored,
/// otherwise the transpose of its negation.
fn pattern_matrix(gss: &GeneralizedSeifertSystem, plus: &[bool]) -> Vec<Vec<i64>> {
    let text: String = plus.iter().map(|&p| if p { '+' } else { '-' }).collect();
    let key: SignPattern = text.parse().unwrap();
    if let Some(a) = gss.matrices.get(&key) {
        return a.clone();
    }
    let neg: String = plus.iter().map(|&p| if p { '-' } else { '+' }).collect();
    let a = &gss.matrices[&neg.parse::<SignPattern>().unwrap()];
    let n = a.len();
    (0..n).map(|j| (0..n).map(|k| a[k][j]).collect()).collect()
}

pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-bound..=bound);
            m[i][j] = v;
            m[j][i] = v;
        }
    }
    m
}

/// Random system with a random matrix for every canonical pattern.
pub fn random_system<R: Rng>(rng: &mut R, mu: usize, rank: usize, bound: i64) -> GeneralizedSeifertSystem {
    let matrices: BTreeMap<SignPattern, Vec<Vec<i64>>> = SignPattern::canonical(mu)
        .into_iter()
        .map(|p| {
            let a = (0..rank)
                .map(|_| (0..rank).map(|_| rng.random_range(-bound..=bound)).collect())
                .collect();
            (p, a)
        })
        .collect();
    GeneralizedSeifertSystem::new(mu, rank, matrices).unwrap()
}

/// Leading principal minors of the tridiagonal matrix with diagonal `diag`
/// and off-diagonal `off`, by the three-term recurrence.
pub fn tridiagonal_minors(diag: &[i128], off: i128) -> Vec<i128> {
    let mut out = Vec::with_capacity(diag.len());
    let (mut prev2, mut prev1) = (0i128, 1i128);
    for (k, &d) in diag.iter().enumerate() {
        let next = if k == 0 { d } else { d * prev1 - off * off * prev2 };
        out.push(next);
        prev2 = prev1;
        prev1 = next;
    }
    out
}

/// Every valid two-bridge coefficient list with `n` even regions and all
/// `a_i`, `b_i` in `1..=max`.
pub fn all_forms(max_regions: usize, max: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut out = Vec::new();
    for n in 1..=max_regions {
        let slots = 2 * n - 1;
        let total = (max as usize).pow(slots as u32);
        for mut index in 0..total {
            let mut vals = Vec::with_capacity(slots);
            for _ in 0..slots {
                vals.push((index % max as usize) as u32 + 1);
                index /= max as usize;
            }
            let a: Vec<u32> = vals.iter().step_by(2).copied().collect();
            let b: Vec<u32> = vals.iter().skip(1).step_by(2).copied().collect();
            out.push((a, b));
        }
    }
    out
}
