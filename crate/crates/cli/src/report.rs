use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// The JSON document every subcommand prints.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub subcommand: String,
    pub inputs: Value,
    /// `forced`, `not_forced`, `unknown`, `pass`, `fail`, or `done`.
    pub verdict: String,
    pub payload: Value,
    pub counters: BTreeMap<String, u64>,
    pub wall_time_ms: f64,
    pub version: String,
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn new(subcommand: &str, inputs: Value) -> Self {
        RunReport {
            subcommand: subcommand.to_string(),
            inputs,
            verdict: "done".to_string(),
            payload: Value::Null,
            counters: BTreeMap::new(),
            wall_time_ms: 0.0,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
        }
    }

    pub fn count(&mut self, name: &str, value: u64) {
        self.counters.insert(name.to_string(), value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}
