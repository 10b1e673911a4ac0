//! Source positions and user-facing diagnostics.

use serde::Serialize;
use std::fmt;

/// A 1-based line/column position.
///
/// Spans never take part in structural equality: two ASTs that differ only in
/// where their nodes came from compare equal.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl Span {
    pub fn new(line: u32, col: u32) -> Self {
        Span { line, col }
    }
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl Eq for Span {}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub span: Span,
    pub severity: Severity,
    pub message: String,
    /// Negative-list item number (1..=14) when the diagnostic reports an
    /// unsupported construct.
    pub item: Option<u8>,
}

impl Diagnostic {
    pub fn error(span: Span, message: impl Into<String>) -> Self {
        Diagnostic { span, severity: Severity::Error, message: message.into(), item: None }
    }

    pub fn unsupported(span: Span, item: u8, message: impl Into<String>) -> Self {
        Diagnostic { span, severity: Severity::Error, message: message.into(), item: Some(item) }
    }

    /// `file:line:col: severity: message [item-N]`
    pub fn render(&self, file: &str) -> String {
        let mut s = format!(
            "{}:{}:{}: {}: {}",
            file, self.span.line, self.span.col, self.severity, self.message
        );
        if let Some(n) = self.item {
            s.push_str(&format!(" [item-{n}]"));
        }
        s
    }

    pub fn to_json(&self, file: &str) -> serde_json::Value {
        serde_json::json!({
            "file": file,
            "line": self.span.line,
            "col": self.span.col,
            "severity": self.severity,
            "message": self.message,
            "item": self.item,
        })
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("<input>"))
    }
}

impl std::error::Error for Diagnostic {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_with_item() {
        let d = Diagnostic::unsupported(Span::new(3, 7), 2, "union is not supported");
        assert_eq!(d.render("a.c"), "a.c:3:7: error: union is not supported [item-2]");
    }

    #[test]
    fn render_plain() {
        let d = Diagnostic::error(Span::new(1, 1), "no main");
        assert_eq!(d.render("x.c"), "x.c:1:1: error: no main");
        assert_eq!(d.to_json("x.c")["item"], serde_json::Value::Null);
    }
}
