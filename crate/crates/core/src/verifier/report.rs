use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::gin::GinOptions;
use crate::groebner::GradedIdeal;

/// Inputs that determine a report completely.
#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    pub ideals: Vec<Vec<String>>,
    pub n: usize,
    pub field: String,
    pub seed: u64,
    pub trials: usize,
    pub bound: i64,
}

/// A condition the theorem asserts, with the operations that decided it.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub via: String,
}

/// A computed truth value reported but not asserted.
#[derive(Clone, Debug, Serialize)]
pub struct Fact {
    pub name: String,
    pub value: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub instance: Instance,
    pub status: Status,
    pub applicable: bool,
    pub verdicts: Vec<Verdict>,
    pub facts: Vec<Fact>,
    pub notes: Vec<String>,
    pub witness: BTreeMap<String, Value>,
}

impl TheoremReport {
    pub(crate) fn new(theorem: &str, ideals: &[&GradedIdeal], cfg: &CheckConfig) -> Self {
        let ctx = ideals.first().map(|i| i.ctx().clone());
        TheoremReport {
            theorem: theorem.to_string(),
            instance: Instance {
                ideals: ideals.iter().map(|i| i.fmt_gens()).collect(),
                n: ctx.as_ref().map_or(0, |c| c.n()),
                field: ctx.map_or_else(String::new, |c| c.field().to_string()),
                seed: cfg.seed,
                trials: cfg.gin.trials,
                bound: cfg.gin.bound,
            },
            status: Status::Pass,
            applicable: true,
            verdicts: Vec::new(),
            facts: Vec::new(),
            notes: Vec::new(),
            witness: BTreeMap::new(),
        }
    }

    pub(crate) fn verdict(&mut self, name: &str, holds: bool, via: &str) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            holds,
            via: via.to_string(),
        });
        if !holds && self.status == Status::Pass {
            self.status = Status::Fail;
        }
    }

    pub(crate) fn fact(&mut self, name: &str, value: bool) {
        self.facts.push(Fact {
            name: name.to_string(),
            value,
        });
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub(crate) fn witness(&mut self, key: &str, value: impl Serialize) {
        self.witness.insert(
            key.to_string(),
            serde_json::to_value(value).unwrap_or(Value::Null),
        );
    }

    pub(crate) fn not_applicable(&mut self, why: impl Into<String>) {
        self.applicable = false;
        self.status = Status::NotApplicable;
        self.notes.push(why.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn verdict_named(&self, name: &str) -> Option<bool> {
        self.verdicts
            .iter()
            .find(|v| v.name == name)
            .map(|v| v.holds)
    }

    pub fn fact_named(&self, name: &str) -> Option<bool> {
        self.facts.iter().find(|f| f.name == name).map(|f| f.value)
    }
}

/// Seed and gin options shared by every check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckConfig {
    pub seed: u64,
    pub gin: GinOptions,
}

impl CheckConfig {
    pub fn new(seed: u64) -> Self {
        CheckConfig {
            seed,
            gin: GinOptions::default(),
        }
    }

    pub fn with_gin(mut self, gin: GinOptions) -> Self {
        self.gin = gin;
        self
    }
}
