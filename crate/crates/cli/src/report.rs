//! The report every command produces, rendered as text or JSON.

use serde::Serialize;
use serde_json::Value;

/// One verdict line. `pass` is `None` for purely informational flags
/// (e.g. "Fano: no") and `Some(false)` for a failed check, which turns the
/// exit code into 3.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
}

impl Verdict {
    pub fn info(name: impl Into<String>, value: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            value: value.into(),
            pass: None,
        }
    }

    pub fn check(name: impl Into<String>, value: impl Into<String>, pass: bool) -> Self {
        Verdict {
            name: name.into(),
            value: value.into(),
            pass: Some(pass),
        }
    }
}

/// Top-level JSON schema: `{command, input, result, verdicts, duration_ms}`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub result: Value,
    pub verdicts: Vec<Verdict>,
    pub duration_ms: u64,
    /// Human-readable body, printed above the verdicts.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl Report {
    pub fn new(command: &str, input: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            result: Value::Null,
            verdicts: Vec::new(),
            duration_ms: 0,
            lines: Vec::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn failed(&self) -> bool {
        self.verdicts.iter().any(|v| v.pass == Some(false))
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        for v in &self.verdicts {
            let tag = match v.pass {
                Some(true) => "[PASS] ",
                Some(false) => "[FAIL] ",
                None => "",
            };
            out.push_str(&format!("{tag}{}: {}\n", v.name, v.value));
        }
        out
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}
