//! OWL 2 functional-style syntax: parsing and canonical serialization.

mod diagnostic;
mod grammar;
mod lexer;
mod serialize;

use std::io::Read;
use std::path::Path;

pub use diagnostic::{Diagnostic, DiagnosticKind, ParseError, Position, Severity};
pub use grammar::ParsedDocument;
pub use serialize::serialize;

use crate::model::Ontology;

/// Source text plus where it came from, for diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceDocument {
    pub text: String,
    pub origin: String,
}

impl SourceDocument {
    pub fn new(text: impl Into<String>, origin: impl Into<String>) -> Self {
        SourceDocument { text: text.into(), origin: origin.into() }
    }

    pub fn from_path(path: &Path) -> std::io::Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(SourceDocument::new(text, path.display().to_string()))
    }

    pub fn from_stdin() -> std::io::Result<Self> {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(SourceDocument::new(text, "<stdin>"))
    }
}

/// Parses a whole document. On failure no partial model is returned.
pub fn parse_ontology(doc: &SourceDocument) -> Result<ParsedDocument, ParseError> {
    grammar::parse_text(&doc.text)
}

/// Shorthand for parsing text and dropping warnings.
pub fn parse_str(text: &str) -> Result<Ontology, ParseError> {
    grammar::parse_text(text).map(|p| p.ontology)
}
