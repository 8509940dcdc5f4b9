//! Tokenizer for OWL 2 functional-style syntax.

use super::diagnostic::{Diagnostic, DiagnosticKind, Position};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Open,
    Close,
    Equals,
    /// `^^` between a literal and its datatype.
    DoubleCaret,
    /// `<...>`, brackets stripped.
    FullIri(String),
    /// `prefix:local`, `:local` or `prefix:`; holds the raw text.
    PrefixedName(String),
    /// `_:id`, raw text.
    NodeId(String),
    /// A bare word such as `SubClassOf`.
    Keyword(String),
    Integer(String),
    /// Quoted string, unescaped.
    String(String),
    /// `@lang` following a string, without the `@`.
    LangTag(String),
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Open => "'('".into(),
            TokenKind::Close => "')'".into(),
            TokenKind::Equals => "'='".into(),
            TokenKind::DoubleCaret => "'^^'".into(),
            TokenKind::FullIri(i) => format!("<{i}>"),
            TokenKind::PrefixedName(n) | TokenKind::NodeId(n) | TokenKind::Keyword(n) => format!("'{n}'"),
            TokenKind::Integer(n) => format!("integer {n}"),
            TokenKind::String(_) => "string literal".into(),
            TokenKind::LangTag(t) => format!("language tag @{t}"),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub pos: Position,
    /// Byte offsets of the token in the source.
    pub start: usize,
    pub end: usize,
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || matches!(c, '(' | ')' | '<' | '>' | '"' | '=' | '^' | '@' | '#')
}

struct Cursor<'a> {
    src: &'a str,
    offset: usize,
    pos: Position,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.offset..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.offset += c.len_utf8();
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn bump_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.offset;
        while self.peek().is_some_and(&pred) {
            self.bump();
        }
        &self.src[start..self.offset]
    }
}

fn lexical(pos: Position, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(DiagnosticKind::Lexical, pos, msg)
}

/// Splits `src` into tokens, ending with [`TokenKind::Eof`].
pub fn tokenize(src: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut cur = Cursor { src, offset: 0, pos: Position::START };
    let mut tokens = Vec::new();
    loop {
        // whitespace and comments
        loop {
            match cur.peek() {
                Some(c) if c.is_whitespace() => {
                    cur.bump();
                }
                Some('#') => {
                    cur.bump_while(|c| c != '\n');
                }
                _ => break,
            }
        }
        let pos = cur.pos;
        let start = cur.offset;
        let Some(c) = cur.peek() else {
            tokens.push(Token { kind: TokenKind::Eof, pos, start, end: start });
            return Ok(tokens);
        };
        let kind = match c {
            '(' => {
                cur.bump();
                TokenKind::Open
            }
            ')' => {
                cur.bump();
                TokenKind::Close
            }
            '=' => {
                cur.bump();
                TokenKind::Equals
            }
            '^' => {
                cur.bump();
                if cur.bump() != Some('^') {
                    return Err(lexical(pos, "expected '^^'"));
                }
                TokenKind::DoubleCaret
            }
            '<' => {
                cur.bump();
                let body = cur.bump_while(|c| c != '>' && c != '\n' && !c.is_whitespace());
                if cur.peek() != Some('>') {
                    return Err(lexical(pos, "unterminated IRI"));
                }
                cur.bump();
                TokenKind::FullIri(body.to_string())
            }
            '"' => {
                cur.bump();
                let mut s = String::new();
                loop {
                    match cur.bump() {
                        None => return Err(lexical(pos, "unterminated string literal")),
                        Some('"') => break,
                        Some('\\') => match cur.bump() {
                            Some('"') => s.push('"'),
                            Some('\\') => s.push('\\'),
                            Some(other) => {
                                return Err(lexical(cur.pos, format!("invalid escape sequence '\\{other}'")))
                            }
                            None => return Err(lexical(pos, "unterminated string literal")),
                        },
                        Some(ch) => s.push(ch),
                    }
                }
                TokenKind::String(s)
            }
            '@' => {
                cur.bump();
                let tag = cur.bump_while(|c| c.is_ascii_alphanumeric() || c == '-');
                if tag.is_empty() {
                    return Err(lexical(pos, "empty language tag"));
                }
                TokenKind::LangTag(tag.to_string())
            }
            '>' => return Err(lexical(pos, "unexpected character '>'")),
            _ => {
                let word = cur.bump_while(|c| !is_delimiter(c));
                if word.is_empty() {
                    return Err(lexical(pos, format!("unexpected character {c:?}")));
                }
                classify_word(word, pos)?
            }
        };
        tokens.push(Token { kind, pos, start, end: cur.offset });
    }
}

fn classify_word(word: &str, pos: Position) -> Result<TokenKind, Diagnostic> {
    if let Some(id) = word.strip_prefix("_:") {
        if id.is_empty() {
            return Err(lexical(pos, "empty blank node label"));
        }
        return Ok(TokenKind::NodeId(word.to_string()));
    }
    if word.contains(':') {
        let (prefix, _) = word.split_once(':').expect("contains ':'");
        let prefix_ok = prefix.chars().all(|c| c.is_alphanumeric() || matches!(c, '_' | '-' | '.'))
            && !prefix.starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '.');
        if !prefix_ok {
            return Err(lexical(pos, format!("malformed prefixed name '{word}'")));
        }
        return Ok(TokenKind::PrefixedName(word.to_string()));
    }
    if word.chars().all(|c| c.is_ascii_digit()) {
        return Ok(TokenKind::Integer(word.to_string()));
    }
    if word.chars().all(|c| c.is_alphanumeric() || c == '_') && word.starts_with(|c: char| c.is_alphabetic()) {
        return Ok(TokenKind::Keyword(word.to_string()));
    }
    Err(lexical(pos, format!("unrecognised token '{word}'")))
}
