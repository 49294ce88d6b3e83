//! Shipped systems and fixture records.

use std::collections::BTreeMap;

use crate::bounds::{BoundReport, FixtureRecord};
use crate::ccomplex::{GeneralizedSeifertSystem, TorusPoint};
use crate::error::{Error, Result};
use crate::hermitian::DEFAULT_TOL;
use crate::invariants::signature_nullity;
use crate::twobridge::{build_gss, ConwayForm};

const FIXTURES: &[(&str, &str)] = &[
    ("C432", include_str!("../../../fixtures/C432.json")),
    ("L9a29", include_str!("../../../fixtures/L9a29.json")),
    ("L9a24", include_str!("../../../fixtures/L9a24.json")),
    ("L12n1367", include_str!("../../../fixtures/L12n1367.json")),
    ("L11a372", include_str!("../../../fixtures/L11a372.json")),
    ("L12a1622", include_str!("../../../fixtures/L12a1622.json")),
    ("L12n1326", include_str!("../../../fixtures/L12n1326.json")),
];

const SYSTEMS: &[&str] = &[
    include_str!("../../../fixtures/systems/C432.json"),
    include_str!("../../../fixtures/systems/hopf.json"),
];

#[derive(Debug, Clone)]
pub struct Catalog {
    systems: BTreeMap<String, GeneralizedSeifertSystem>,
    fixtures: BTreeMap<String, FixtureRecord>,
}

impl Catalog {
    pub fn builtin() -> Result<Self> {
        let mut systems = BTreeMap::new();
        for text in SYSTEMS {
            let gss = GeneralizedSeifertSystem::from_json(text)?;
            let name = gss
                .name
                .clone()
                .ok_or_else(|| Error::InvalidFixture("shipped system without a name".to_string()))?;
            systems.insert(name, gss);
        }
        let mut fixtures = BTreeMap::new();
        for (key, text) in FIXTURES {
            let record = FixtureRecord::from_json(text)?;
            fixtures.insert(key.to_string(), record);
        }
        Ok(Catalog { systems, fixtures })
    }

    /// A shipped system by name, or a two-bridge system for a name of the
    /// form `C(...)`.
    pub fn system(&self, name: &str) -> Option<GeneralizedSeifertSystem> {
        if let Some(gss) = self.systems.get(name) {
            return Some(gss.clone());
        }
        if name.starts_with("C(") {
            return name.parse::<ConwayForm>().ok().and_then(|f| build_gss(&f).ok());
        }
        None
    }

    /// A fixture by file stem (`L9a29`) or record name (`C(4,3,2)`).
    pub fn fixture(&self, name: &str) -> Option<&FixtureRecord> {
        self.fixtures
            .get(name)
            .or_else(|| self.fixtures.values().find(|r| r.name == name))
    }

    pub fn system_names(&self) -> impl Iterator<Item = &str> {
        self.systems.keys().map(String::as_str)
    }

    pub fn fixtures(&self) -> impl Iterator<Item = &FixtureRecord> {
        self.fixtures.values()
    }

    /// Re-evaluates every fixture and checks the shipped systems; returns
    /// one message per failure.
    pub fn self_check(&self) -> Vec<String> {
        let mut failures = Vec::new();
        for record in self.fixtures.values() {
            if let Err(e) = record.self_check() {
                failures.push(e.to_string());
            }
        }
        for (name, gss) in &self.systems {
            for v in gss.validate() {
                failures.push(format!("{name}: {v}"));
            }
        }
        let c432 = ConwayForm::new(vec![4, 3, 2]).and_then(|f| build_gss(&f));
        match (c432, self.systems.get("C(4,3,2)")) {
            (Ok(built), Some(shipped)) if built.matrices != shipped.matrices => {
                failures.push("C(4,3,2): shipped matrices differ from the two-bridge construction".to_string())
            }
            (Err(e), _) => failures.push(e.to_string()),
            _ => {}
        }
        if let Some(record) = self.fixture("C(4,3,2)") {
            if let Some(gss) = self.systems.get("C(4,3,2)") {
                match signature_nullity(gss, &TorusPoint::all_minus_one(2), DEFAULT_TOL) {
                    Ok(r) if r.signature == record.sigma_l && r.nullity as u32 == record.eta_l => {}
                    Ok(r) => failures.push(format!(
                        "C(4,3,2): system gives sigma={} eta={}, fixture records sigma={} eta={}",
                        r.signature, r.nullity, record.sigma_l, record.eta_l
                    )),
                    Err(e) => failures.push(e.to_string()),
                }
            }
        }
        failures
    }

    /// Evaluates every fixture.
    pub fn reports(&self) -> Result<Vec<(String, BoundReport)>> {
        self.fixtures
            .values()
            .map(|r| r.evaluate().map(|rep| (r.name.clone(), rep)))
            .collect()
    }
}
