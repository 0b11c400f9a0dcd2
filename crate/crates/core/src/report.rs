//! Ordered key/value report rendering shared by the library and the CLI.
//!
//! Machine output is one `key: value` line per entry, in insertion order,
//! with no trailing decoration — byte-identical across runs for identical
//! inputs.  Text output groups entries by the key prefix before the first
//! `.` and indents the remainder, which reads better for long scans.

use std::fmt::Display;

#[derive(Debug, Clone, Default)]
pub struct Report {
    pairs: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report { pairs: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Display) {
        self.pairs.push((key.into(), value.to_string()));
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(String, String)] {
        &self.pairs
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// `key: value` lines in insertion order.
    pub fn render_machine(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.pairs {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    /// Grouped by the key segment before the first `.`; entries without a
    /// dot print as-is.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut current_group: Option<&str> = None;
        for (k, v) in &self.pairs {
            match k.split_once('.') {
                Some((group, rest)) => {
                    if current_group != Some(group) {
                        out.push_str(group);
                        out.push('\n');
                        current_group = Some(group);
                    }
                    out.push_str("  ");
                    out.push_str(rest);
                    out.push_str(": ");
                    out.push_str(v);
                    out.push('\n');
                }
                None => {
                    current_group = None;
                    out.push_str(k);
                    out.push_str(": ");
                    out.push_str(v);
                    out.push('\n');
                }
            }
        }
        out
    }
}
