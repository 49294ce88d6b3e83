//! Generalized Seifert matrices of a colored link and the Hermitian matrix
//! `H(omega)` built from them.
//!
//! A system stores one integer matrix `A^e` per sign pattern `e` whose first
//! sign is `+`. The remaining patterns are recovered through
//! `A^{-e} = (A^e)^T`, so that identity holds by construction.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bounds::ComponentValue;
use crate::error::{Error, Result};
use crate::hermitian::HermitianMatrix;

/// Largest color count accepted; a system stores `2^(mu-1)` matrices.
pub const MAX_COLORS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// A tuple of signs indexing a generalized Seifert matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignPattern(Vec<Sign>);

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Self {
        SignPattern(signs)
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.0.first() == Some(&Sign::Plus)
    }

    pub fn negated(&self) -> SignPattern {
        SignPattern(self.0.iter().map(|s| s.flip()).collect())
    }

    pub fn with_flipped(&self, color: usize) -> SignPattern {
        let mut signs = self.0.clone();
        signs[color] = signs[color].flip();
        SignPattern(signs)
    }

    /// All `2^(mu-1)` patterns starting with `+`, in lexicographic order.
    pub fn canonical(mu: usize) -> Vec<SignPattern> {
        if mu == 0 {
            return Vec::new();
        }
        (0..1usize << (mu - 1))
            .map(|bits| {
                let mut signs = vec![Sign::Plus];
                for i in (0..mu - 1).rev() {
                    signs.push(if bits >> i & 1 == 0 { Sign::Plus } else { Sign::Minus });
                }
                SignPattern(signs)
            })
            .collect()
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::InvalidPattern(s.to_string()));
        }
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                _ => Err(Error::InvalidPattern(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignPattern)
    }
}

/// A structural problem with a [`GeneralizedSeifertSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoColors,
    TooManyColors(usize),
    PatternLength {
        pattern: SignPattern,
        expected: usize,
    },
    NonCanonicalPattern(SignPattern),
    MissingPattern(SignPattern),
    Dimension {
        pattern: SignPattern,
        expected: usize,
        found: String,
    },
    LinkingShape {
        expected: usize,
    },
    LinkingAsymmetric {
        i: usize,
        j: usize,
    },
    ComponentCount {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoColors => write!(f, "mu must be at least 1"),
            Violation::TooManyColors(mu) => write!(f, "mu = {mu} exceeds the supported maximum {MAX_COLORS}"),
            Violation::PatternLength { pattern, expected } => {
                write!(f, "pattern {pattern} has length {}, expected {expected}", pattern.len())
            }
            Violation::NonCanonicalPattern(p) => write!(f, "pattern {p} does not start with +"),
            Violation::MissingPattern(p) => write!(f, "matrix for pattern {p} is missing"),
            Violation::Dimension {
                pattern,
                expected,
                found,
            } => {
                write!(f, "matrix {pattern} is {found}, expected {expected}x{expected}")
            }
            Violation::LinkingShape { expected } => {
                write!(f, "linking matrix must be {expected}x{expected}")
            }
            Violation::LinkingAsymmetric { i, j } => {
                write!(f, "linking matrix is not symmetric at ({i}, {j})")
            }
            Violation::ComponentCount { expected, found } => {
                write!(f, "{found} component entries, expected {expected}")
            }
        }
    }
}

fn shape(m: &[Vec<i64>]) -> String {
    match m.first() {
        Some(first) if m.iter().all(|r| r.len() == first.len()) => format!("{}x{}", m.len(), first.len()),
        Some(_) => format!("ragged with {} rows", m.len()),
        None => "0x0".to_string(),
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|j| (0..n).map(|k| m[k][j]).collect()).collect()
}

/// The generalized Seifert matrices of a C-complex, plus optional data
/// about the colored link they came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedSeifertSystem {
    pub name: Option<String>,
    pub mu: usize,
    pub rank: usize,
    pub matrices: BTreeMap<SignPattern, Vec<Vec<i64>>>,
    /// Symmetric `mu x mu` matrix of linking numbers between colors; the
    /// diagonal is ignored.
    pub linking: Option<Vec<Vec<i64>>>,
    /// Levine-Tristram data of each color, when known.
    pub components: Option<Vec<ComponentValue>>,
}

impl GeneralizedSeifertSystem {
    /// Builds a system and rejects it if any invariant fails.
    pub fn new(mu: usize, rank: usize, matrices: BTreeMap<SignPattern, Vec<Vec<i64>>>) -> Result<Self> {
        let gss = GeneralizedSeifertSystem {
            name: None,
            mu,
            rank,
            matrices,
            linking: None,
            components: None,
        };
        gss.ensure_valid()?;
        Ok(gss)
    }

    /// All matrices zero.
    pub fn zero(mu: usize, rank: usize) -> Self {
        GeneralizedSeifertSystem {
            name: None,
            mu,
            rank,
            matrices: SignPattern::canonical(mu)
                .into_iter()
                .map(|p| (p, vec![vec![0; rank]; rank]))
                .collect(),
            linking: None,
            components: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_linking(mut self, linking: Vec<Vec<i64>>) -> Self {
        self.linking = Some(linking);
        self
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.mu == 0 {
            out.push(Violation::NoColors);
            return out;
        }
        if self.mu > MAX_COLORS {
            out.push(Violation::TooManyColors(self.mu));
            return out;
        }
        for (pattern, m) in &self.matrices {
            if pattern.len() != self.mu {
                out.push(Violation::PatternLength {
                    pattern: pattern.clone(),
                    expected: self.mu,
                });
            } else if !pattern.is_canonical() {
                out.push(Violation::NonCanonicalPattern(pattern.clone()));
            }
            let n = self.rank;
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                out.push(Violation::Dimension {
                    pattern: pattern.clone(),
                    expected: n,
                    found: shape(m),
                });
            }
        }
        for pattern in SignPattern::canonical(self.mu) {
            if !self.matrices.contains_key(&pattern) {
                out.push(Violation::MissingPattern(pattern));
            }
        }
        if let Some(lk) = &self.linking {
            if lk.len() != self.mu || lk.iter().any(|r| r.len() != self.mu) {
                out.push(Violation::LinkingShape { expected: self.mu });
            } else {
                for i in 0..self.mu {
                    for j in i + 1..self.mu {
                        if lk[i][j] != lk[j][i] {
                            out.push(Violation::LinkingAsymmetric { i, j });
                        }
                    }
                }
            }
        }
        if let Some(comps) = &self.components {
            if comps.len() != self.mu {
                out.push(Violation::ComponentCount {
                    expected: self.mu,
                    found: comps.len(),
                });
            }
        }
        out
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let violations = self.validate();
        if violations.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidSystem(violations))
        }
    }

    /// `A^e` for any pattern, transposing a stored matrix when `e` starts
    /// with `-`.
    pub fn matrix(&self, pattern: &SignPattern) -> Option<Vec<Vec<i64>>> {
        if pattern.is_canonical() {
            self.matrices.get(pattern).cloned()
        } else {
            self.matrices.get(&pattern.negated()).map(|m| transpose(m))
        }
    }

    /// Sum of `lk(L_i, L_j)` over `i < j`.
    pub fn total_linking(&self) -> Option<i64> {
        self.linking.as_ref().map(|lk| {
            (0..self.mu)
                .flat_map(|i| (i + 1..self.mu).map(move |j| (i, j)))
                .map(|(i, j)| lk[i][j])
                .sum()
        })
    }

    /// The system of the same C-complex after reversing the orientation of
    /// every component of one color, which flips that color's normal.
    pub fn reverse_color(&self, color: usize) -> Result<Self> {
        self.ensure_valid()?;
        if color >= self.mu {
            return Err(Error::ColorMismatch {
                expected: self.mu,
                found: color + 1,
            });
        }
        let matrices = SignPattern::canonical(self.mu)
            .into_iter()
            .map(|p| {
                let m = self.matrix(&p.with_flipped(color)).expect("validated system");
                (p, m)
            })
            .collect();
        let linking = self.linking.as_ref().map(|lk| {
            let mut lk = lk.clone();
            for j in 0..self.mu {
                if j != color {
                    lk[color][j] = -lk[color][j];
                    lk[j][color] = -lk[j][color];
                }
            }
            lk
        });
        Ok(GeneralizedSeifertSystem {
            name: self.name.clone(),
            mu: self.mu,
            rank: self.rank,
            matrices,
            linking,
            components: None,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: SystemFile = serde_json::from_str(text)?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SystemFile::from(self)).expect("system serializes")
    }
}

/// On-disk JSON layout of a system.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    mu: usize,
    rank: usize,
    matrices: BTreeMap<String, Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    linking: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    components: Option<Vec<ComponentValue>>,
}

impl TryFrom<SystemFile> for GeneralizedSeifertSystem {
    type Error = Error;

    fn try_from(file: SystemFile) -> Result<Self> {
        let mut matrices = BTreeMap::new();
        for (key, m) in file.matrices {
            let pattern: SignPattern = key.parse()?;
            if matrices.insert(pattern, m).is_some() {
                return Err(Error::InvalidPattern(format!("{key} (duplicate)")));
            }
        }
        Ok(GeneralizedSeifertSystem {
            name: file.name,
            mu: file.mu,
            rank: file.rank,
            matrices,
            linking: file.linking,
            components: file.components,
        })
    }
}

impl From<&GeneralizedSeifertSystem> for SystemFile {
    fn from(gss: &GeneralizedSeifertSystem) -> Self {
        SystemFile {
            name: gss.name.clone(),
            mu: gss.mu,
            rank: gss.rank,
            matrices: gss.matrices.iter().map(|(p, m)| (p.to_string(), m.clone())).collect(),
            linking: gss.linking.clone(),
            components: gss.components.clone(),
        }
    }
}

/// Parses `p/q` (or a bare integer). Decimal notation is rejected.
pub fn parse_fraction(s: &str) -> Result<Ratio<i64>> {
    let bad = || Error::InvalidFraction(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let is_int = |t: &str| {
        let digits = t.strip_prefix('-').unwrap_or(t);
        !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
    };
    if !is_int(num) || !is_int(den) {
        return Err(bad());
    }
    let p: i64 = num.parse().map_err(|_| bad())?;
    let q: i64 = den.parse().map_err(|_| bad())?;
    if q == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(p, q))
}

/// `exp(2 pi i q)`, exact at the quarter turns.
pub fn unit_circle(q: Ratio<i64>) -> Complex64 {
    let q = q - Ratio::from_integer(q.floor().to_integer());
    let quarter = q * 4;
    if quarter.is_integer() {
        return match quarter.to_integer() {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let angle = 2.0 * std::f64::consts::PI * (*q.numer() as f64) / (*q.denom() as f64);
    Complex64::new(angle.cos(), angle.sin())
}

/// A point of the torus with no coordinate equal to 1, stored as the
/// rational angle fractions `q_i` of `omega_i = exp(2 pi i q_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusPoint {
    fractions: Vec<Ratio<i64>>,
}

impl TorusPoint {
    pub fn new(fractions: Vec<Ratio<i64>>) -> Result<Self> {
        let zero = Ratio::from_integer(0);
        let one = Ratio::from_integer(1);
        for (index, q) in fractions.iter().enumerate() {
            if *q <= zero || *q >= one {
                return Err(Error::CoordinateOutOfRange {
                    index,
                    value: q.to_string(),
                });
            }
        }
        Ok(TorusPoint { fractions })
    }

    /// `(-1, ..., -1)`.
    pub fn all_minus_one(mu: usize) -> Self {
        TorusPoint {
            fractions: vec![Ratio::new(1, 2); mu],
        }
    }

    /// `(omega, ..., omega)` with `omega = exp(2 pi i q)`.
    pub fn diagonal(q: Ratio<i64>, mu: usize) -> Result<Self> {
        TorusPoint::new(vec![q; mu])
    }

    pub fn mu(&self) -> usize {
        self.fractions.len()
    }

    pub fn fractions(&self) -> &[Ratio<i64>] {
        &self.fractions
    }

    pub fn values(&self) -> Vec<Complex64> {
        self.fractions.iter().map(|&q| unit_circle(q)).collect()
    }

    pub fn is_all_minus_one(&self) -> bool {
        self.fractions.iter().all(|q| *q == Ratio::new(1, 2))
    }

    /// The point with coordinate `color` replaced by its inverse.
    pub fn with_inverted(&self, color: usize) -> Self {
        let mut fractions = self.fractions.clone();
        fractions[color] = Ratio::from_integer(1) - fractions[color];
        TorusPoint { fractions }
    }

    /// The point with every coordinate inverted.
    pub fn inverted(&self) -> Self {
        TorusPoint {
            fractions: self.fractions.iter().map(|q| Ratio::from_integer(1) - q).collect(),
        }
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.fractions.iter().map(|q| q.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for TorusPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fractions = s.split(',').map(parse_fraction).collect::<Result<Vec<_>>>()?;
        TorusPoint::new(fractions)
    }
}

impl Serialize for TorusPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.fractions.iter().map(|q| q.to_string()))
    }
}

impl<'de> Deserialize<'de> for TorusPoint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<String>::deserialize(deserializer)?;
        let fractions = parts
            .iter()
            .map(|p| parse_fraction(p))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        TorusPoint::new(fractions).map_err(serde::de::Error::custom)
    }
}

/// `prod_i (1 - conj(omega_i)^{e_i})`.
fn pattern_coefficient(pattern: &SignPattern, omega: &[Complex64]) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    pattern
        .signs()
        .iter()
        .zip(omega)
        .map(|(s, w)| match s {
            Sign::Plus => one - w.conj(),
            Sign::Minus => one - w,
        })
        .product()
}

/// `H(omega) = sum_e prod_i (1 - conj(omega_i)^{e_i}) A^e` over all `2^mu`
/// patterns.
///
/// Patterns are summed in pairs `(e, -e)`, whose coefficients are complex
/// conjugates, so the result is exactly Hermitian in floating point.
pub fn assemble_h(gss: &GeneralizedSeifertSystem, omega: &TorusPoint) -> Result<HermitianMatrix> {
    gss.ensure_valid()?;
    if omega.mu() != gss.mu {
        return Err(Error::ColorMismatch {
            expected: gss.mu,
            found: omega.mu(),
        });
    }
    let values = omega.values();
    let n = gss.rank;
    let mut h = HermitianMatrix::zeros(n);
    for (pattern, a) in &gss.matrices {
        let c = pattern_coefficient(pattern, &values);
        let c_bar = c.conj();
        for j in 0..n {
            for k in 0..n {
                h.add_at(j, k, c * a[j][k] as f64 + c_bar * a[k][j] as f64);
            }
        }
    }
    Ok(h)
}

/// `H(-1, ..., -1) = 2^mu sum_e A^e` as an exact integer matrix.
pub fn h_at_minus_ones(gss: &GeneralizedSeifertSystem) -> Result<Vec<Vec<i64>>> {
    gss.ensure_valid()?;
    let n = gss.rank;
    let scale = 1i64 << gss.mu;
    let mut h = vec![vec![0i64; n]; n];
    for a in gss.matrices.values() {
        for j in 0..n {
            for k in 0..n {
                h[j][k] += scale * (a[j][k] + a[k][j]);
            }
        }
    }
    Ok(h)
}
