use serde_json::{json, Value};

use crate::DeformError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Clause {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Clause {
    pub fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Clause { name: name.to_string(), pass, detail: detail.into() }
    }
}

/// Clauses in a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub clauses: Vec<Clause>,
}

impl Report {
    pub fn push(&mut self, c: Clause) {
        self.clauses.push(c);
    }

    pub fn pass(&self) -> bool {
        self.clauses.iter().all(|c| c.pass)
    }

    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        let clauses: Vec<Value> =
            self.clauses.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect();
        json!({ "clauses": clauses })
    }

    /// Fails with the name of the first failing clause.
    pub fn into_result(self) -> Result<Report, DeformError> {
        match self.clauses.iter().find(|c| !c.pass) {
            Some(c) => Err(DeformError::VerificationFailure(c.name.clone())),
            None => Ok(self),
        }
    }
}
