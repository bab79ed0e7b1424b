use std::io::Write;

use serde_json::{json, Map, Value};

use crate::Global;

pub const EXIT_FAILED_CHECK: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_TIMEOUT: u8 = 3;

/// Process exit status with a message for standard error.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn parse(msg: impl ToString) -> Self {
        Failure { code: EXIT_PARSE, message: msg.to_string() }
    }

    pub fn check(msg: impl ToString) -> Self {
        Failure { code: EXIT_FAILED_CHECK, message: msg.to_string() }
    }

    pub fn timeout(msg: impl ToString) -> Self {
        Failure { code: EXIT_TIMEOUT, message: msg.to_string() }
    }
}

/// Rounds to three decimals for display.
pub fn bits(x: f64) -> Value {
    let r = (x * 1000.0).round() / 1000.0;
    serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number)
}

pub struct Record {
    command: &'static str,
    inputs: Map<String, Value>,
    results: Map<String, Value>,
    stats: Map<String, Value>,
}

impl Record {
    pub fn new(command: &'static str) -> Self {
        Record { command, inputs: Map::new(), results: Map::new(), stats: Map::new() }
    }

    pub fn input(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.inputs.insert(key.into(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) {
        self.results.insert(key.into(), v.into());
    }

    pub fn stat(&mut self, key: &str, v: impl Into<Value>) {
        self.stats.insert(key.into(), v.into());
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "stats": self.stats,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }

    pub fn print(&self, g: &Global) {
        let v = self.to_value();
        let text = if g.pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) };
        line(&text.expect("JSON values always serialize"));
    }
}

/// Writes one line to standard output; a closed pipe is not an error.
pub fn line(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}
