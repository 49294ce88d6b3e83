//! Lower bounds on the splitting and unlinking numbers, evaluated from
//! signature, nullity and linking data.
//!
//! Every bound here works on invariant values rather than matrices, so
//! published values can be fed in directly when the Seifert data behind
//! them is unavailable. See [`FixtureRecord`] for the file format.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ccomplex::TorusPoint;
use crate::error::{Error, Result};

/// Levine-Tristram signature and nullity of one color at its coordinate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentValue {
    pub sigma: i64,
    pub eta: u32,
}

impl ComponentValue {
    pub fn new(sigma: i64, eta: u32) -> Self {
        ComponentValue { sigma, eta }
    }
}

/// Per-color invariant values entering the splitting bounds.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ComponentInvariants(pub Vec<ComponentValue>);

impl ComponentInvariants {
    /// `mu` unknotted colors: signature and nullity vanish away from 1.
    pub fn unknots(mu: usize) -> Self {
        ComponentInvariants(vec![ComponentValue::default(); mu])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sigma_sum(&self) -> i64 {
        self.0.iter().map(|c| c.sigma).sum()
    }

    pub fn eta_sum(&self) -> i64 {
        self.0.iter().map(|c| c.eta as i64).sum()
    }

    fn check_len(&self, mu: usize) -> Result<()> {
        if self.len() == mu {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: mu,
                found: self.len(),
            })
        }
    }
}

impl From<Vec<ComponentValue>> for ComponentInvariants {
    fn from(v: Vec<ComponentValue>) -> Self {
        ComponentInvariants(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    SplitMulti,
    SplitLt,
    Linking,
    Rank,
    Unlink,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::SplitMulti => "split-multi",
            BoundKind::SplitLt => "split-lt",
            BoundKind::Linking => "linking",
            BoundKind::Rank => "rank",
            BoundKind::Unlink => "unlink",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            BoundKind::SplitMulti => {
                "|sigma_L(w) - sum_i sigma_i(w_i)| + |mu - 1 - eta_L(w) + sum_i eta_i(w_i)| <= sp(L)"
            }
            BoundKind::SplitLt => {
                "|sigma_L(w) + sum_{i<j} lk_ij - sum_i sigma_i(w)| + |mu - 1 - eta_L(w) + sum_i eta_i(w)| <= sp(L)"
            }
            BoundKind::Linking => "sum_{i<j} b_lk(L_i, L_j) <= sp(L)",
            BoundKind::Rank => "mu - 1 - beta(L) <= sp(L), strict when signature additivity fails",
            BoundKind::Unlink => "|sigma_L(w)| + |mu - 1 - eta_L(w)| + sum_{i<j} |lk_ij| <= 2 u(L)",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            BoundKind::SplitMulti,
            BoundKind::SplitLt,
            BoundKind::Linking,
            BoundKind::Rank,
            BoundKind::Unlink,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| Error::InvalidFixture(format!("unknown bound kind {s:?}")))
    }
}

/// A bound value together with the data it was computed from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub bound: BoundKind,
    pub value: u64,
    pub formula: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<TorusPoint>,
    pub inputs: BTreeMap<String, String>,
    /// Left-hand side before halving, for the unlinking bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_linking_parity: Option<u8>,
    /// Whether `value` has the parity of the total linking number.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity_consistent: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(bound: BoundKind, value: i64) -> Self {
        BoundReport {
            bound,
            value: value.max(0) as u64,
            formula: bound.formula(),
            omega: None,
            inputs: BTreeMap::new(),
            raw: None,
            total_linking_parity: None,
            parity_consistent: None,
            notes: Vec::new(),
        }
    }

    fn input(mut self, name: &str, value: impl ToString) -> Self {
        self.inputs.insert(name.to_string(), value.to_string());
        self
    }

    fn components(self, comps: &ComponentInvariants) -> Self {
        let text: Vec<String> = comps.0.iter().map(|c| format!("{}:{}", c.sigma, c.eta)).collect();
        self.input("components", text.join(","))
    }

    pub fn with_omega(mut self, omega: TorusPoint) -> Self {
        self.omega = Some(omega);
        self
    }

    /// Records the parity of the total linking number and whether the bound
    /// value shares it. The splitting number always does.
    pub fn with_linking_parity(mut self, total_linking: i64) -> Self {
        let parity = total_linking.rem_euclid(2) as u8;
        self.total_linking_parity = Some(parity);
        self.parity_consistent = Some(self.value % 2 == parity as u64);
        self
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound={}", self.bound)?;
        writeln!(f, "value={}", self.value)?;
        writeln!(f, "formula={}", self.formula)?;
        if let Some(omega) = &self.omega {
            writeln!(f, "omega={omega}")?;
        }
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "inputs={}", inputs.join(" "))?;
        if let Some(raw) = self.raw {
            writeln!(f, "raw={raw}")?;
        }
        match (self.total_linking_parity, self.parity_consistent) {
            (Some(p), Some(ok)) => writeln!(
                f,
                "parity=total linking {} bound {} ({})",
                if p == 1 { "odd" } else { "even" },
                if self.value % 2 == 1 { "odd" } else { "even" },
                if ok { "consistent" } else { "INCONSISTENT" }
            )?,
            _ => writeln!(f, "parity=unknown (no total linking supplied)")?,
        }
        for note in &self.notes {
            writeln!(f, "note={note}")?;
        }
        Ok(())
    }
}

/// Splitting bound from the multivariable signature and nullity at
/// `(w_1, ..., w_mu)` and the Levine-Tristram data of each color at its own
/// coordinate.
pub fn splitting_bound_multivariable(
    mu: usize,
    sigma_l: i64,
    eta_l: u32,
    comps: &ComponentInvariants,
) -> Result<BoundReport> {
    comps.check_len(mu)?;
    let value = (sigma_l - comps.sigma_sum()).abs() + (mu as i64 - 1 - eta_l as i64 + comps.eta_sum()).abs();
    Ok(BoundReport::new(BoundKind::SplitMulti, value)
        .input("mu", mu)
        .input("sigma_L", sigma_l)
        .input("eta_L", eta_l)
        .components(comps))
}

/// Splitting bound from the Levine-Tristram signature and nullity of the
/// whole link at a single `w`.
pub fn splitting_bound_lt(
    mu: usize,
    sigma_lt: i64,
    eta_lt: u32,
    total_linking: i64,
    comps: &ComponentInvariants,
) -> Result<BoundReport> {
    comps.check_len(mu)?;
    let value =
        (sigma_lt + total_linking - comps.sigma_sum()).abs() + (mu as i64 - 1 - eta_lt as i64 + comps.eta_sum()).abs();
    Ok(BoundReport::new(BoundKind::SplitLt, value)
        .input("mu", mu)
        .input("sigma_L", sigma_lt)
        .input("eta_L", eta_lt)
        .input("total_lk", total_linking)
        .components(comps)
        .with_linking_parity(total_linking))
}

fn check_linking_matrix(lk: &[Vec<i64>]) -> Result<()> {
    let mu = lk.len();
    if let Some(row) = lk.iter().position(|r| r.len() != mu) {
        return Err(Error::NotSquare {
            row,
            len: lk[row].len(),
            expected: mu,
        });
    }
    for i in 0..mu {
        for j in i + 1..mu {
            if lk[i][j] != lk[j][i] {
                return Err(Error::NotSymmetric { row: i, col: j });
            }
        }
    }
    Ok(())
}

fn pairs(mu: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..mu).flat_map(move |i| (i + 1..mu).map(move |j| (i, j)))
}

/// Sum over pairs of `b_lk`: `|lk|` when nonzero, otherwise 2 for a
/// non-split pair and 0 for a split one.
///
/// `nonsplit` maps a 0-based pair `(i, j)` to whether `L_i u L_j` is
/// non-split; it is consulted only for pairs with vanishing linking number.
pub fn linking_number_bound(lk: &[Vec<i64>], nonsplit: &BTreeMap<(usize, usize), bool>) -> Result<BoundReport> {
    check_linking_matrix(lk)?;
    let mu = lk.len();
    let mut value = 0;
    let mut total = 0;
    for (i, j) in pairs(mu) {
        total += lk[i][j];
        value += if lk[i][j] != 0 {
            lk[i][j].abs()
        } else {
            match nonsplit.get(&(i, j)).or_else(|| nonsplit.get(&(j, i))) {
                Some(true) => 2,
                Some(false) => 0,
                None => return Err(Error::MissingNonsplitFlag(i, j)),
            }
        };
    }
    let pair_text: Vec<String> = pairs(mu)
        .map(|(i, j)| format!("lk{}{}={}", i + 1, j + 1, lk[i][j]))
        .collect();
    Ok(BoundReport::new(BoundKind::Linking, value)
        .input("mu", mu)
        .input("pairs", pair_text.join(","))
        .with_linking_parity(total))
}

/// One evaluation point offered to [`rank_obstruction`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionSample {
    pub omega: TorusPoint,
    pub sigma_l: i64,
    pub eta_l: u32,
    pub components: ComponentInvariants,
}

impl ObstructionSample {
    fn breaks_additivity(&self) -> bool {
        self.sigma_l != self.components.sigma_sum() || self.components.0.iter().any(|c| c.eta != 0)
    }
}

/// `mu - 1 - beta <= sp(L)`, upgraded by one when some sample with nullity
/// `beta` has signature different from the sum over colors or a nonzero
/// color nullity, and rounded up to the parity of the total linking number
/// when that parity is supplied.
///
/// `beta_est` is normally a sampled minimum of the nullity, which can only
/// overestimate the true rank, so the resulting bound stays valid.
pub fn rank_obstruction(
    mu: usize,
    beta_est: u32,
    samples: &[ObstructionSample],
    total_linking_parity: Option<i64>,
) -> Result<BoundReport> {
    for (index, s) in samples.iter().enumerate() {
        if s.eta_l != beta_est {
            return Err(Error::NonQualifyingSample {
                index,
                eta: s.eta_l,
                beta: beta_est,
            });
        }
        s.components.check_len(mu)?;
        if s.omega.mu() != mu {
            return Err(Error::ColorMismatch {
                expected: mu,
                found: s.omega.mu(),
            });
        }
    }
    let base = mu as i64 - 1 - beta_est as i64;
    let violators: Vec<usize> = (0..samples.len()).filter(|&i| samples[i].breaks_additivity()).collect();

    let mut notes = Vec::new();
    let mut value = base.max(0);
    if !violators.is_empty() {
        value = (base + 1).max(0);
        for &i in &violators {
            let s = &samples[i];
            notes.push(format!(
                "sample {i} at {}: sigma_L={} vs sum sigma_i={}, component nullities {:?}; equality case excluded",
                s.omega,
                s.sigma_l,
                s.components.sigma_sum(),
                s.components.0.iter().map(|c| c.eta).collect::<Vec<_>>()
            ));
        }
    }
    if let Some(lk) = total_linking_parity {
        if (value - lk).rem_euclid(2) == 1 {
            value += 1;
            notes.push("raised by one to match the parity of the total linking number".to_string());
        }
    }

    let mut report = BoundReport::new(BoundKind::Rank, value)
        .input("mu", mu)
        .input("beta_est", beta_est)
        .input("samples", samples.len())
        .input("base", base);
    report.notes = notes;
    if let Some(lk) = total_linking_parity {
        report = report.with_linking_parity(lk);
    }
    Ok(report)
}

/// `|sigma| + |mu - 1 - eta| + sum |lk_ij| <= 2 u(L)`. The report value is the
/// resulting lower bound on `u(L)`, the halved left-hand side rounded up.
pub fn unlinking_bound(mu: usize, sigma_l: i64, eta_l: u32, lk: &[Vec<i64>]) -> Result<BoundReport> {
    check_linking_matrix(lk)?;
    if lk.len() != mu {
        return Err(Error::DimensionMismatch {
            expected: mu,
            found: lk.len(),
        });
    }
    let lk_abs: i64 = pairs(mu).map(|(i, j)| lk[i][j].abs()).sum();
    let total: i64 = pairs(mu).map(|(i, j)| lk[i][j]).sum();
    let raw = sigma_l.abs() + (mu as i64 - 1 - eta_l as i64).abs() + lk_abs;
    let mut report = BoundReport::new(BoundKind::Unlink, (raw + 1) / 2)
        .input("mu", mu)
        .input("sigma_L", sigma_l)
        .input("eta_L", eta_l)
        .input("sum_abs_lk", lk_abs)
        .input("total_lk", total);
    report.raw = Some(raw);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FixtureKind {
    /// Levine-Tristram form at a diagonal point.
    Lt,
    /// Multivariable form.
    Multi,
    /// Rank obstruction with a single qualifying sample.
    Rank,
}

/// A recorded set of invariant values and the bound they should produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureRecord {
    pub name: String,
    pub mu: usize,
    pub omega: TorusPoint,
    #[serde(rename = "sigma_L")]
    pub sigma_l: i64,
    #[serde(rename = "eta_L")]
    pub eta_l: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_lk: Option<i64>,
    pub components: Vec<ComponentValue>,
    pub kind: FixtureKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta_est: Option<u32>,
    /// Parity of the total linking number when only the parity is known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub total_lk_parity: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl FixtureRecord {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fixture serializes")
    }

    fn linking_parity(&self) -> Option<i64> {
        self.total_lk.or(self.total_lk_parity.map(i64::from))
    }

    pub fn evaluate(&self) -> Result<BoundReport> {
        if self.omega.mu() != self.mu {
            return Err(Error::InvalidFixture(format!(
                "{}: omega has {} coordinates, mu is {}",
                self.name,
                self.omega.mu(),
                self.mu
            )));
        }
        let comps = ComponentInvariants(self.components.clone());
        let report = match self.kind {
            FixtureKind::Lt => {
                let first = self.omega.fractions()[0];
                if self.omega.fractions().iter().any(|&q| q != first) {
                    return Err(Error::InvalidFixture(format!(
                        "{}: the Levine-Tristram form needs a diagonal point, got {}",
                        self.name, self.omega
                    )));
                }
                let lk = self
                    .total_lk
                    .ok_or_else(|| Error::InvalidFixture(format!("{}: total_lk is required", self.name)))?;
                splitting_bound_lt(self.mu, self.sigma_l, self.eta_l, lk, &comps)?
            }
            FixtureKind::Multi => {
                let report = splitting_bound_multivariable(self.mu, self.sigma_l, self.eta_l, &comps)?;
                match self.total_lk {
                    Some(lk) => report.with_linking_parity(lk),
                    None => report,
                }
            }
            FixtureKind::Rank => {
                let beta = self
                    .beta_est
                    .ok_or_else(|| Error::InvalidFixture(format!("{}: beta_est is required", self.name)))?;
                let sample = ObstructionSample {
                    omega: self.omega.clone(),
                    sigma_l: self.sigma_l,
                    eta_l: self.eta_l,
                    components: comps,
                };
                rank_obstruction(self.mu, beta, &[sample], self.linking_parity())?
            }
        };
        Ok(report.with_omega(self.omega.clone()))
    }

    /// Re-evaluates the record and compares with `expected`.
    pub fn self_check(&self) -> Result<BoundReport> {
        let report = self.evaluate()?;
        match self.expected {
            Some(v) if v != report.value => Err(Error::InvalidFixture(format!(
                "{}: evaluates to {}, recorded {}",
                self.name, report.value, v
            ))),
            _ => Ok(report),
        }
    }
}
