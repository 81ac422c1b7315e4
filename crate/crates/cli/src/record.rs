//! Machine records: one structured document per invocation with fixed field
//! names. Keys are sorted on serialization, and timings stay `null` unless
//! explicitly requested, so identical invocations print identical bytes.

use serde_json::{json, Map, Value};

pub struct CommandResult {
    pub text: String,
    pub record: Value,
    pub exit_code: u8,
}

pub struct RecordBuilder {
    command: &'static str,
    n: Option<u64>,
    mode: Map<String, Value>,
    values: Map<String, Value>,
    witnesses: Map<String, Value>,
    timings: Option<Value>,
}

impl RecordBuilder {
    pub fn new(command: &'static str) -> Self {
        RecordBuilder {
            command,
            n: None,
            mode: Map::new(),
            values: Map::new(),
            witnesses: Map::new(),
            timings: None,
        }
    }

    pub fn n(mut self, n: usize) -> Self {
        self.n = Some(n as u64);
        self
    }

    pub fn mode(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.mode.insert(key.to_string(), value.into());
        self
    }

    pub fn value(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.values.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.witnesses.insert(key.to_string(), value.into());
        self
    }

    pub fn finish(self, text: String) -> CommandResult {
        let record = json!({
            "command": self.command,
            "n": self.n,
            "mode": Value::Object(self.mode),
            "values": Value::Object(self.values),
            "witnesses": Value::Object(self.witnesses),
            "timings": self.timings.unwrap_or(Value::Null),
        });
        CommandResult { text, record, exit_code: 0 }
    }
}
