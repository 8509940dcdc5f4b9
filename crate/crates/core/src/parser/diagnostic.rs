use std::fmt;

use serde::Serialize;

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

/// Class of a diagnostic; each maps to a stable message prefix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagnosticKind {
    Lexical,
    Syntax,
    UnresolvedPrefix,
    Arity,
    /// Constructs that parse but are not modelled (imports, unknown axioms).
    Unsupported,
}

impl DiagnosticKind {
    pub fn label(self) -> &'static str {
        match self {
            DiagnosticKind::Lexical => "lexical error",
            DiagnosticKind::Syntax => "syntax error",
            DiagnosticKind::UnresolvedPrefix => "unresolved prefix",
            DiagnosticKind::Arity => "arity violation",
            DiagnosticKind::Unsupported => "unsupported construct",
        }
    }
}

/// A positioned parser message. Lines and columns are 1-based; columns
/// count characters, not bytes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub severity: Severity,
    pub kind: DiagnosticKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl Diagnostic {
    pub fn error(kind: DiagnosticKind, pos: Position, message: impl Into<String>) -> Self {
        Diagnostic { severity: Severity::Error, kind, line: pos.line, column: pos.column, message: message.into() }
    }

    pub fn warning(kind: DiagnosticKind, pos: Position, message: impl Into<String>) -> Self {
        Diagnostic { severity: Severity::Warning, kind, line: pos.line, column: pos.column, message: message.into() }
    }

    /// `origin:line:col: severity: kind: message`
    pub fn render(&self, origin: &str) -> String {
        format!("{origin}:{}:{}: {}: {}: {}", self.line, self.column, self.severity, self.kind.label(), self.message)
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}: {}", self.line, self.column, self.severity, self.kind.label(), self.message)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl Position {
    pub const START: Position = Position { line: 1, column: 1 };
}

/// Failure of a whole parse. Always holds at least one error.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", .diagnostics.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"))]
pub struct ParseError {
    pub diagnostics: Vec<Diagnostic>,
}

impl ParseError {
    pub fn first(&self) -> &Diagnostic {
        &self.diagnostics[0]
    }
}

impl From<Diagnostic> for ParseError {
    fn from(d: Diagnostic) -> Self {
        ParseError { diagnostics: vec![d] }
    }
}
