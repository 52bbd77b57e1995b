//! The three interchangeable report engines and a name-keyed registry.

use std::collections::BTreeMap;

use crate::dp;
use crate::error::{Error, Result};
use crate::family::FamilyId;
use crate::formulas;
use crate::oracle::{self, DEFAULT_SIZE_CAP};
use crate::report::{Count, DominationReport};

/// Computes a [`DominationReport`] for a family instance.
pub trait Engine: Send + Sync {
    /// Registry key, e.g. `"formula"`.
    fn name(&self) -> &'static str;

    fn supports(&self, id: FamilyId) -> bool;

    fn report(&self, id: FamilyId) -> Result<DominationReport>;

    fn gamma(&self, id: FamilyId) -> Result<Count> {
        self.report(id).map(|r| r.gamma)
    }

    fn tau(&self, id: FamilyId) -> Result<Count> {
        self.report(id).map(|r| r.tau)
    }

    /// Domination value of vertex id `v`.
    fn dv_of(&self, id: FamilyId, v: usize) -> Result<Count> {
        let r = self.report(id)?;
        r.dv_of(v)
            .ok_or_else(|| Error::out_of_range(v, r.num_vertices()))
    }

    fn require(&self, id: FamilyId) -> Result<()> {
        if self.supports(id) {
            Ok(())
        } else {
            Err(Error::Unsupported {
                engine: self.name(),
                family: id.family,
                n: id.n,
            })
        }
    }
}

/// Closed-form evaluation.
#[derive(Debug, Clone, Copy, Default)]
pub struct FormulaEngine;

impl Engine for FormulaEngine {
    fn name(&self) -> &'static str {
        "formula"
    }

    fn supports(&self, id: FamilyId) -> bool {
        id.in_formula_domain()
    }

    fn report(&self, id: FamilyId) -> Result<DominationReport> {
        formulas::report_family(id)
    }

    fn gamma(&self, id: FamilyId) -> Result<Count> {
        id.require_formula_domain()?;
        formulas::gamma(id)
    }

    fn tau(&self, id: FamilyId) -> Result<Count> {
        id.require_formula_domain()?;
        formulas::tau(id)
    }

    fn dv_of(&self, id: FamilyId, v: usize) -> Result<Count> {
        formulas::dv(id, v)
    }
}

/// Exhaustive enumeration, bounded by a size cap.
#[derive(Debug, Clone, Copy)]
pub struct OracleEngine {
    pub size_cap: usize,
}

impl Default for OracleEngine {
    fn default() -> Self {
        OracleEngine {
            size_cap: DEFAULT_SIZE_CAP,
        }
    }
}

impl Engine for OracleEngine {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn supports(&self, id: FamilyId) -> bool {
        id.n >= id.family.min_order()
    }

    fn report(&self, id: FamilyId) -> Result<DominationReport> {
        self.require(id)?;
        oracle::domination_report(&id.graph()?, false, Some(self.size_cap))
    }
}

/// Frontier dynamic program; ladders and prisms only.
#[derive(Debug, Clone, Copy, Default)]
pub struct DpEngine;

impl Engine for DpEngine {
    fn name(&self) -> &'static str {
        "dp"
    }

    fn supports(&self, id: FamilyId) -> bool {
        id.family.is_strip() && id.n >= id.family.min_order()
    }

    fn report(&self, id: FamilyId) -> Result<DominationReport> {
        self.require(id)?;
        dp::solve(id.family, id.n).map(|s| s.report())
    }
}

pub struct EngineRegistry {
    engines: BTreeMap<&'static str, Box<dyn Engine>>,
}

impl Default for EngineRegistry {
    fn default() -> Self {
        Self::with_oracle_cap(DEFAULT_SIZE_CAP)
    }
}

impl EngineRegistry {
    pub fn empty() -> Self {
        EngineRegistry {
            engines: BTreeMap::new(),
        }
    }

    /// `formula`, `oracle` (with the given size cap) and `dp`.
    pub fn with_oracle_cap(size_cap: usize) -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(FormulaEngine));
        registry.register(Box::new(OracleEngine { size_cap }));
        registry.register(Box::new(DpEngine));
        registry
    }

    /// Adds an engine, replacing any engine registered under the same name.
    pub fn register(&mut self, engine: Box<dyn Engine>) {
        self.engines.insert(engine.name(), engine);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Engine> {
        self.engines
            .get(name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownEngine(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.engines.keys().copied()
    }

    /// Formula when in its domain, otherwise the oracle.
    pub fn default_for(&self, id: FamilyId) -> Result<&dyn Engine> {
        let formula = self.get("formula")?;
        if formula.supports(id) {
            Ok(formula)
        } else {
            self.get("oracle")
        }
    }
}
