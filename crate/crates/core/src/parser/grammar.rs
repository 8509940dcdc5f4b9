//! Recursive-descent parser from tokens to the structural model.

use std::collections::HashMap;
use std::sync::Arc;

use super::diagnostic::{Diagnostic, DiagnosticKind, ParseError, Position};
use super::lexer::{tokenize, Token, TokenKind};
use crate::model::*;

/// Successful parse: the model plus any warnings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedDocument {
    pub ontology: Ontology,
    pub warnings: Vec<Diagnostic>,
}

type PResult<T> = Result<T, Diagnostic>;

pub(super) fn parse_text(src: &str) -> Result<ParsedDocument, ParseError> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        src,
        tokens,
        idx: 0,
        prefixes: vocab::PREDECLARED.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        warnings: Vec::new(),
    };
    let ontology = parser.document()?;
    Ok(ParsedDocument { ontology, warnings: parser.warnings })
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    idx: usize,
    prefixes: HashMap<String, String>,
    warnings: Vec<Diagnostic>,
}

fn syntax(pos: Position, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(DiagnosticKind::Syntax, pos, msg)
}

fn arity(pos: Position, msg: impl Into<String>) -> Diagnostic {
    Diagnostic::error(DiagnosticKind::Arity, pos, msg)
}

enum DataItem {
    Iri(Iri),
    Range(DataRange),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.idx]
    }

    fn peek_kind(&self) -> &TokenKind {
        &self.tokens[self.idx].kind
    }

    fn next(&mut self) -> Token {
        let tok = self.tokens[self.idx].clone();
        if tok.kind != TokenKind::Eof {
            self.idx += 1;
        }
        tok
    }

    fn at_close(&self) -> bool {
        matches!(self.peek_kind(), TokenKind::Close)
    }

    /// Keyword followed by an opening parenthesis, without consuming.
    fn peek_call(&self) -> Option<&str> {
        match (&self.tokens[self.idx].kind, self.tokens.get(self.idx + 1).map(|t| &t.kind)) {
            (TokenKind::Keyword(k), Some(TokenKind::Open)) => Some(k),
            _ => None,
        }
    }

    fn unexpected(&self, expected: &str) -> Diagnostic {
        let tok = self.peek();
        syntax(tok.pos, format!("expected {expected}, found {}", tok.kind.describe()))
    }

    fn expect_open(&mut self) -> PResult<Token> {
        match self.peek_kind() {
            TokenKind::Open => Ok(self.next()),
            _ => Err(self.unexpected("'('")),
        }
    }

    /// Consumes the `(` after a keyword and returns the keyword token.
    fn call(&mut self, keyword: &str) -> PResult<Token> {
        match self.peek_kind() {
            TokenKind::Keyword(k) if k == keyword => {}
            _ => return Err(self.unexpected(&format!("'{keyword}'"))),
        }
        let kw = self.next();
        self.expect_open()?;
        Ok(kw)
    }

    /// Closes a fixed-arity construct: anything but `)` is a surplus operand.
    fn close_fixed(&mut self, kw: &Token, expected: usize) -> PResult<()> {
        match self.peek_kind() {
            TokenKind::Close => {
                self.next();
                Ok(())
            }
            TokenKind::Eof => Err(self.unexpected("')'")),
            _ => Err(arity(
                kw.pos,
                format!("{} takes {expected} operand(s), found extra {}", keyword_of(kw), self.peek().kind.describe()),
            )),
        }
    }

    /// Guards a required operand position: `)` here means too few operands.
    fn require(&self, kw: &Token, expected: usize, found: usize) -> PResult<()> {
        if self.at_close() {
            Err(arity(kw.pos, format!("{} takes {expected} operand(s), found {found}", keyword_of(kw))))
        } else {
            Ok(())
        }
    }

    /// Parses items until `)`, then checks the minimum count.
    fn list<T>(&mut self, kw: &Token, min: usize, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut items = Vec::new();
        while !self.at_close() {
            if matches!(self.peek_kind(), TokenKind::Eof) {
                return Err(self.unexpected("')'"));
            }
            items.push(item(self)?);
        }
        if items.len() < min {
            return Err(arity(
                kw.pos,
                format!("{} takes at least {min} operand(s), found {}", keyword_of(kw), items.len()),
            ));
        }
        self.next();
        Ok(items)
    }

    // ---------------------------------------------------------------------
    // names

    fn resolve(&self, tok: &Token, name: &str) -> PResult<Iri> {
        let (prefix, local) = name.split_once(':').expect("prefixed names contain ':'");
        match self.prefixes.get(prefix) {
            Some(ns) => Ok(Iri::new(format!("{ns}{local}"))),
            None => Err(Diagnostic::error(
                DiagnosticKind::UnresolvedPrefix,
                tok.pos,
                format!("prefix '{prefix}:' is not declared"),
            )),
        }
    }

    fn iri(&mut self) -> PResult<Iri> {
        match self.peek_kind().clone() {
            TokenKind::FullIri(i) => {
                let tok = self.next();
                if i.is_empty() {
                    return Err(syntax(tok.pos, "empty IRI"));
                }
                Ok(Iri::new(i))
            }
            TokenKind::PrefixedName(n) => {
                let tok = self.next();
                self.resolve(&tok, &n)
            }
            _ => Err(self.unexpected("IRI")),
        }
    }

    fn is_iri(&self) -> bool {
        matches!(self.peek_kind(), TokenKind::FullIri(_) | TokenKind::PrefixedName(_))
    }

    fn individual(&mut self) -> PResult<Individual> {
        if let TokenKind::NodeId(id) = self.peek_kind() {
            let id: Arc<str> = Arc::from(id.as_str());
            self.next();
            return Ok(Individual::Anonymous(id));
        }
        if self.is_iri() {
            return self.iri().map(Individual::Named);
        }
        Err(self.unexpected("individual"))
    }

    fn object_property(&mut self) -> PResult<ObjectPropertyExpression> {
        if self.is_iri() {
            return self.iri().map(ObjectPropertyExpression::Named);
        }
        if self.peek_call() == Some("ObjectInverseOf") {
            let kw = self.call("ObjectInverseOf")?;
            self.require(&kw, 1, 0)?;
            // Nested inverses are flattened.
            let inner = self.object_property()?;
            self.close_fixed(&kw, 1)?;
            return Ok(inner.inverse());
        }
        Err(self.unexpected("object property expression"))
    }

    fn literal(&mut self) -> PResult<Literal> {
        let TokenKind::String(lexical) = self.peek_kind().clone() else {
            return Err(self.unexpected("literal"));
        };
        self.next();
        let tag = match self.peek_kind().clone() {
            TokenKind::DoubleCaret => {
                self.next();
                LiteralTag::Typed(self.iri()?)
            }
            TokenKind::LangTag(t) => {
                self.next();
                LiteralTag::Lang(t)
            }
            _ => LiteralTag::Plain,
        };
        Ok(Literal { lexical, tag })
    }

    fn cardinality(&mut self) -> PResult<u32> {
        match self.peek_kind().clone() {
            TokenKind::Integer(n) => {
                let tok = self.next();
                n.parse().map_err(|_| syntax(tok.pos, format!("cardinality {n} out of range")))
            }
            _ => Err(self.unexpected("non-negative integer")),
        }
    }

    // ---------------------------------------------------------------------
    // expressions

    fn class_expression(&mut self) -> PResult<ClassExpression> {
        use ClassExpression as CE;
        if self.is_iri() {
            return self.iri().map(CE::Class);
        }
        let Some(keyword) = self.peek_call().map(str::to_string) else {
            return Err(self.unexpected("class expression"));
        };
        let kw = self.call(&keyword)?;
        let expr = match keyword.as_str() {
            "ObjectIntersectionOf" => CE::ObjectIntersectionOf(self.list(&kw, 2, Self::class_expression)?),
            "ObjectUnionOf" => CE::ObjectUnionOf(self.list(&kw, 2, Self::class_expression)?),
            "ObjectOneOf" => CE::ObjectOneOf(self.list(&kw, 1, Self::individual)?),
            "ObjectComplementOf" => {
                self.require(&kw, 1, 0)?;
                let c = self.class_expression()?;
                self.close_fixed(&kw, 1)?;
                CE::ObjectComplementOf(Box::new(c))
            }
            "ObjectSomeValuesFrom" | "ObjectAllValuesFrom" => {
                self.require(&kw, 2, 0)?;
                let property = self.object_property()?;
                self.require(&kw, 2, 1)?;
                let filler = Box::new(self.class_expression()?);
                self.close_fixed(&kw, 2)?;
                if keyword == "ObjectSomeValuesFrom" {
                    CE::ObjectSomeValuesFrom { property, filler }
                } else {
                    CE::ObjectAllValuesFrom { property, filler }
                }
            }
            "ObjectHasValue" => {
                self.require(&kw, 2, 0)?;
                let property = self.object_property()?;
                self.require(&kw, 2, 1)?;
                let individual = self.individual()?;
                self.close_fixed(&kw, 2)?;
                CE::ObjectHasValue { property, individual }
            }
            "ObjectHasSelf" => {
                self.require(&kw, 1, 0)?;
                let property = self.object_property()?;
                self.close_fixed(&kw, 1)?;
                CE::ObjectHasSelf(property)
            }
            "ObjectMinCardinality" | "ObjectMaxCardinality" | "ObjectExactCardinality" => {
                self.require(&kw, 2, 0)?;
                let n = self.cardinality()?;
                self.require(&kw, 2, 1)?;
                let property = self.object_property()?;
                let filler = if self.at_close() { None } else { Some(Box::new(self.class_expression()?)) };
                self.close_fixed(&kw, 3)?;
                match keyword.as_str() {
                    "ObjectMinCardinality" => CE::ObjectMinCardinality { n, property, filler },
                    "ObjectMaxCardinality" => CE::ObjectMaxCardinality { n, property, filler },
                    _ => CE::ObjectExactCardinality { n, property, filler },
                }
            }
            "DataSomeValuesFrom" | "DataAllValuesFrom" => {
                let items = self.list(&kw, 2, Self::data_item)?;
                let (last, props) = items.split_last().expect("list has at least two items");
                let range = match last {
                    DataItem::Iri(i) => DataRange::Datatype(i.clone()),
                    DataItem::Range(r) => r.clone(),
                };
                let properties = props
                    .iter()
                    .map(|item| match item {
                        DataItem::Iri(i) => Ok(i.clone()),
                        DataItem::Range(_) => Err(syntax(kw.pos, format!("{keyword}: expected data property"))),
                    })
                    .collect::<PResult<Vec<_>>>()?;
                CE::Data(if keyword == "DataSomeValuesFrom" {
                    DataRestriction::SomeValuesFrom { properties, range }
                } else {
                    DataRestriction::AllValuesFrom { properties, range }
                })
            }
            "DataHasValue" => {
                self.require(&kw, 2, 0)?;
                let property = self.iri()?;
                self.require(&kw, 2, 1)?;
                let value = self.literal()?;
                self.close_fixed(&kw, 2)?;
                CE::Data(DataRestriction::HasValue { property, value })
            }
            "DataMinCardinality" | "DataMaxCardinality" | "DataExactCardinality" => {
                self.require(&kw, 2, 0)?;
                let n = self.cardinality()?;
                self.require(&kw, 2, 1)?;
                let property = self.iri()?;
                let range = if self.at_close() { None } else { Some(self.data_range()?) };
                self.close_fixed(&kw, 3)?;
                CE::Data(match keyword.as_str() {
                    "DataMinCardinality" => DataRestriction::MinCardinality { n, property, range },
                    "DataMaxCardinality" => DataRestriction::MaxCardinality { n, property, range },
                    _ => DataRestriction::ExactCardinality { n, property, range },
                })
            }
            other => return Err(syntax(kw.pos, format!("unknown class expression constructor '{other}'"))),
        };
        Ok(expr)
    }

    fn data_item(&mut self) -> PResult<DataItem> {
        if self.is_iri() {
            self.iri().map(DataItem::Iri)
        } else {
            self.data_range().map(DataItem::Range)
        }
    }

    fn data_range(&mut self) -> PResult<DataRange> {
        if self.is_iri() {
            return self.iri().map(DataRange::Datatype);
        }
        let Some(keyword) = self.peek_call().map(str::to_string) else {
            return Err(self.unexpected("data range"));
        };
        let kw = self.call(&keyword)?;
        Ok(match keyword.as_str() {
            "DataIntersectionOf" => DataRange::IntersectionOf(self.list(&kw, 2, Self::data_range)?),
            "DataUnionOf" => DataRange::UnionOf(self.list(&kw, 2, Self::data_range)?),
            "DataComplementOf" => {
                self.require(&kw, 1, 0)?;
                let r = self.data_range()?;
                self.close_fixed(&kw, 1)?;
                DataRange::ComplementOf(Box::new(r))
            }
            "DataOneOf" => DataRange::OneOf(self.list(&kw, 1, Self::literal)?),
            "DatatypeRestriction" => {
                self.require(&kw, 2, 0)?;
                let datatype = self.iri()?;
                let facets = self.list(&kw, 1, |p| {
                    let facet = p.iri()?;
                    let value = p.literal()?;
                    Ok((facet, value))
                })?;
                DataRange::Restriction { datatype, facets }
            }
            other => return Err(syntax(kw.pos, format!("unknown data range constructor '{other}'"))),
        })
    }

    fn annotation_value(&mut self) -> PResult<AnnotationValue> {
        match self.peek_kind() {
            TokenKind::String(_) => self.literal().map(AnnotationValue::Literal),
            TokenKind::NodeId(id) => {
                let id = Arc::from(id.as_str());
                self.next();
                Ok(AnnotationValue::Anonymous(id))
            }
            _ if self.is_iri() => self.iri().map(AnnotationValue::Iri),
            _ => Err(self.unexpected("annotation value")),
        }
    }

    fn annotation_subject(&mut self) -> PResult<AnnotationValue> {
        match self.peek_kind() {
            TokenKind::NodeId(id) => {
                let id = Arc::from(id.as_str());
                self.next();
                Ok(AnnotationValue::Anonymous(id))
            }
            _ if self.is_iri() => self.iri().map(AnnotationValue::Iri),
            _ => Err(self.unexpected("annotation subject")),
        }
    }

    /// `Annotation(Annotation(...)* property value)`; nested annotations are
    /// parsed and dropped.
    fn annotation(&mut self) -> PResult<Annotation> {
        let kw = self.call("Annotation")?;
        self.annotations()?;
        self.require(&kw, 2, 0)?;
        let property = self.iri()?;
        self.require(&kw, 2, 1)?;
        let value = self.annotation_value()?;
        self.close_fixed(&kw, 2)?;
        Ok(Annotation { property, value })
    }

    fn annotations(&mut self) -> PResult<Vec<Annotation>> {
        let mut out = Vec::new();
        while self.peek_call() == Some("Annotation") {
            out.push(self.annotation()?);
        }
        Ok(out)
    }

    // ---------------------------------------------------------------------
    // document structure

    fn document(&mut self) -> PResult<Ontology> {
        let mut header = OntologyHeader::default();
        while self.peek_call() == Some("Prefix") {
            header.prefixes.push(self.prefix_declaration()?);
        }
        self.call("Ontology")?;
        if self.is_iri() {
            header.iri = Some(self.iri()?);
            if self.is_iri() {
                header.version_iri = Some(self.iri()?);
            }
        }
        while self.peek_call() == Some("Import") {
            let kw = self.call("Import")?;
            self.require(&kw, 1, 0)?;
            header.imports.push(self.iri()?);
            self.close_fixed(&kw, 1)?;
        }
        header.annotations = self.annotations()?;
        let mut axioms = Vec::new();
        loop {
            match self.peek_kind() {
                TokenKind::Close => {
                    self.next();
                    break;
                }
                TokenKind::Eof => return Err(self.unexpected("')' closing Ontology")),
                _ => axioms.push(self.axiom()?),
            }
        }
        if !matches!(self.peek_kind(), TokenKind::Eof) {
            return Err(self.unexpected("end of input"));
        }
        Ok(Ontology::new(header, axioms))
    }

    fn prefix_declaration(&mut self) -> PResult<PrefixDeclaration> {
        let kw = self.call("Prefix")?;
        let tok = self.next();
        let name = match &tok.kind {
            TokenKind::PrefixedName(n) if n.ends_with(':') && n.matches(':').count() == 1 => {
                n.trim_end_matches(':').to_string()
            }
            TokenKind::Close => return Err(arity(kw.pos, "Prefix takes a name and an IRI, found nothing")),
            other => return Err(syntax(tok.pos, format!("expected prefix name, found {}", other.describe()))),
        };
        if !matches!(self.peek_kind(), TokenKind::Equals) {
            return Err(self.unexpected("'='"));
        }
        self.next();
        let iri = match self.peek_kind().clone() {
            TokenKind::FullIri(i) => {
                self.next();
                i
            }
            _ => return Err(self.unexpected("full IRI")),
        };
        self.close_fixed(&kw, 2)?;
        self.prefixes.insert(name.clone(), iri.clone());
        Ok(PrefixDeclaration { name, iri })
    }

    fn axiom(&mut self) -> PResult<Axiom> {
        let Some(keyword) = self.peek_call().map(str::to_string) else {
            return Err(self.unexpected("axiom"));
        };
        if NESTED_KEYWORDS.contains(&keyword.as_str()) {
            return Err(syntax(self.peek().pos, format!("'{keyword}' cannot appear at axiom level")));
        }
        if !AXIOM_KEYWORDS.contains(&keyword.as_str()) {
            return self.unknown_axiom(keyword);
        }
        let kw = self.call(&keyword)?;
        self.annotations()?;
        let ax = self.axiom_body(&kw, &keyword)?;
        Ok(ax)
    }

    fn unknown_axiom(&mut self, keyword: String) -> PResult<Axiom> {
        let kw = self.next();
        let open = self.expect_open()?;
        let mut depth = 1usize;
        let close = loop {
            let tok = self.next();
            match tok.kind {
                TokenKind::Open => depth += 1,
                TokenKind::Close => {
                    depth -= 1;
                    if depth == 0 {
                        break tok;
                    }
                }
                TokenKind::Eof => return Err(syntax(tok.pos, format!("unbalanced parentheses in '{keyword}'"))),
                _ => {}
            }
        };
        self.warnings.push(Diagnostic::warning(
            DiagnosticKind::Unsupported,
            kw.pos,
            format!("'{keyword}' is not an OWL 2 axiom; kept as a non-logical axiom"),
        ));
        let body = self.src[open.end..close.start].trim().to_string();
        Ok(Axiom::Unknown { keyword, body })
    }

    fn axiom_body(&mut self, kw: &Token, keyword: &str) -> PResult<Axiom> {
        use Axiom as A;
        Ok(match keyword {
            "Declaration" => {
                self.require(kw, 1, 0)?;
                let Some(kind_kw) = self.peek_call().map(str::to_string) else {
                    return Err(self.unexpected("entity"));
                };
                let Some(kind) = EntityKind::from_keyword(&kind_kw) else {
                    return Err(syntax(self.peek().pos, format!("unknown entity type '{kind_kw}'")));
                };
                let ekw = self.call(&kind_kw)?;
                self.require(&ekw, 1, 0)?;
                let iri = self.iri()?;
                self.close_fixed(&ekw, 1)?;
                self.close_fixed(kw, 1)?;
                A::Declaration(Entity { kind, iri })
            }
            "SubClassOf" => {
                self.require(kw, 2, 0)?;
                let sub = self.class_expression()?;
                self.require(kw, 2, 1)?;
                let sup = self.class_expression()?;
                self.close_fixed(kw, 2)?;
                A::SubClassOf { sub, sup }
            }
            "EquivalentClasses" => A::EquivalentClasses(self.list(kw, 2, Self::class_expression)?),
            "DisjointClasses" => A::DisjointClasses(self.list(kw, 2, Self::class_expression)?),
            "DisjointUnion" => {
                self.require(kw, 3, 0)?;
                let class = self.iri()?;
                let operands = self.list(kw, 2, Self::class_expression)?;
                A::DisjointUnion { class, operands }
            }
            "SubObjectPropertyOf" => {
                self.require(kw, 2, 0)?;
                let sub = if self.peek_call() == Some("ObjectPropertyChain") {
                    let ckw = self.call("ObjectPropertyChain")?;
                    SubObjectProperty::Chain(self.list(&ckw, 2, Self::object_property)?)
                } else {
                    SubObjectProperty::Property(self.object_property()?)
                };
                self.require(kw, 2, 1)?;
                let sup = self.object_property()?;
                self.close_fixed(kw, 2)?;
                A::SubObjectPropertyOf { sub, sup }
            }
            "EquivalentObjectProperties" => A::EquivalentObjectProperties(self.list(kw, 2, Self::object_property)?),
            "DisjointObjectProperties" => A::DisjointObjectProperties(self.list(kw, 2, Self::object_property)?),
            "InverseObjectProperties" => {
                self.require(kw, 2, 0)?;
                let a = self.object_property()?;
                self.require(kw, 2, 1)?;
                let b = self.object_property()?;
                self.close_fixed(kw, 2)?;
                A::InverseObjectProperties(a, b)
            }
            "ObjectPropertyDomain" | "ObjectPropertyRange" => {
                self.require(kw, 2, 0)?;
                let property = self.object_property()?;
                self.require(kw, 2, 1)?;
                let ce = self.class_expression()?;
                self.close_fixed(kw, 2)?;
                if keyword == "ObjectPropertyDomain" {
                    A::ObjectPropertyDomain { property, domain: ce }
                } else {
                    A::ObjectPropertyRange { property, range: ce }
                }
            }
            "FunctionalObjectProperty"
            | "InverseFunctionalObjectProperty"
            | "ReflexiveObjectProperty"
            | "IrreflexiveObjectProperty"
            | "SymmetricObjectProperty"
            | "AsymmetricObjectProperty"
            | "TransitiveObjectProperty" => {
                let characteristic = PropertyCharacteristic::ALL
                    .into_iter()
                    .find(|c| c.keyword() == keyword)
                    .expect("keyword matched above");
                self.require(kw, 1, 0)?;
                let p = self.object_property()?;
                self.close_fixed(kw, 1)?;
                A::Characteristic(characteristic, p)
            }
            "SubDataPropertyOf" => {
                self.require(kw, 2, 0)?;
                let sub = self.iri()?;
                self.require(kw, 2, 1)?;
                let sup = self.iri()?;
                self.close_fixed(kw, 2)?;
                A::SubDataPropertyOf { sub, sup }
            }
            "EquivalentDataProperties" => A::EquivalentDataProperties(self.list(kw, 2, Self::iri)?),
            "DisjointDataProperties" => A::DisjointDataProperties(self.list(kw, 2, Self::iri)?),
            "DataPropertyDomain" => {
                self.require(kw, 2, 0)?;
                let property = self.iri()?;
                self.require(kw, 2, 1)?;
                let domain = self.class_expression()?;
                self.close_fixed(kw, 2)?;
                A::DataPropertyDomain { property, domain }
            }
            "DataPropertyRange" => {
                self.require(kw, 2, 0)?;
                let property = self.iri()?;
                self.require(kw, 2, 1)?;
                let range = self.data_range()?;
                self.close_fixed(kw, 2)?;
                A::DataPropertyRange { property, range }
            }
            "FunctionalDataProperty" => {
                self.require(kw, 1, 0)?;
                let p = self.iri()?;
                self.close_fixed(kw, 1)?;
                A::FunctionalDataProperty(p)
            }
            "DatatypeDefinition" => {
                self.require(kw, 2, 0)?;
                let datatype = self.iri()?;
                self.require(kw, 2, 1)?;
                let range = self.data_range()?;
                self.close_fixed(kw, 2)?;
                A::DatatypeDefinition { datatype, range }
            }
            "HasKey" => {
                self.require(kw, 3, 0)?;
                let class = self.class_expression()?;
                self.require(kw, 3, 1)?;
                let open = self.expect_open()?;
                let object_properties = self.list(&open, 0, Self::object_property)?;
                self.require(kw, 3, 2)?;
                let open = self.expect_open()?;
                let data_properties = self.list(&open, 0, Self::iri)?;
                self.close_fixed(kw, 3)?;
                A::HasKey { class, object_properties, data_properties }
            }
            "SameIndividual" => A::SameIndividual(self.list(kw, 2, Self::individual)?),
            "DifferentIndividuals" => A::DifferentIndividuals(self.list(kw, 2, Self::individual)?),
            "ClassAssertion" => {
                self.require(kw, 2, 0)?;
                let class = self.class_expression()?;
                self.require(kw, 2, 1)?;
                let individual = self.individual()?;
                self.close_fixed(kw, 2)?;
                A::ClassAssertion { class, individual }
            }
            "ObjectPropertyAssertion" | "NegativeObjectPropertyAssertion" => {
                self.require(kw, 3, 0)?;
                let property = self.object_property()?;
                self.require(kw, 3, 1)?;
                let subject = self.individual()?;
                self.require(kw, 3, 2)?;
                let object = self.individual()?;
                self.close_fixed(kw, 3)?;
                if keyword == "ObjectPropertyAssertion" {
                    A::ObjectPropertyAssertion { property, subject, object }
                } else {
                    A::NegativeObjectPropertyAssertion { property, subject, object }
                }
            }
            "DataPropertyAssertion" | "NegativeDataPropertyAssertion" => {
                self.require(kw, 3, 0)?;
                let property = self.iri()?;
                self.require(kw, 3, 1)?;
                let subject = self.individual()?;
                self.require(kw, 3, 2)?;
                let value = self.literal()?;
                self.close_fixed(kw, 3)?;
                if keyword == "DataPropertyAssertion" {
                    A::DataPropertyAssertion { property, subject, value }
                } else {
                    A::NegativeDataPropertyAssertion { property, subject, value }
                }
            }
            "AnnotationAssertion" => {
                self.require(kw, 3, 0)?;
                let property = self.iri()?;
                self.require(kw, 3, 1)?;
                let subject = self.annotation_subject()?;
                self.require(kw, 3, 2)?;
                let value = self.annotation_value()?;
                self.close_fixed(kw, 3)?;
                A::AnnotationAssertion { property, subject, value }
            }
            "SubAnnotationPropertyOf" | "AnnotationPropertyDomain" | "AnnotationPropertyRange" => {
                self.require(kw, 2, 0)?;
                let a = self.iri()?;
                self.require(kw, 2, 1)?;
                let b = self.iri()?;
                self.close_fixed(kw, 2)?;
                match keyword {
                    "SubAnnotationPropertyOf" => A::SubAnnotationPropertyOf { sub: a, sup: b },
                    "AnnotationPropertyDomain" => A::AnnotationPropertyDomain { property: a, domain: b },
                    _ => A::AnnotationPropertyRange { property: a, range: b },
                }
            }
            other => unreachable!("'{other}' is not in AXIOM_KEYWORDS"),
        })
    }
}

fn keyword_of(tok: &Token) -> String {
    match &tok.kind {
        TokenKind::Keyword(k) => k.clone(),
        other => other.describe(),
    }
}

const AXIOM_KEYWORDS: &[&str] = &[
    "Declaration",
    "SubClassOf",
    "EquivalentClasses",
    "DisjointClasses",
    "DisjointUnion",
    "SubObjectPropertyOf",
    "EquivalentObjectProperties",
    "DisjointObjectProperties",
    "InverseObjectProperties",
    "ObjectPropertyDomain",
    "ObjectPropertyRange",
    "FunctionalObjectProperty",
    "InverseFunctionalObjectProperty",
    "ReflexiveObjectProperty",
    "IrreflexiveObjectProperty",
    "SymmetricObjectProperty",
    "AsymmetricObjectProperty",
    "TransitiveObjectProperty",
    "SubDataPropertyOf",
    "EquivalentDataProperties",
    "DisjointDataProperties",
    "DataPropertyDomain",
    "DataPropertyRange",
    "FunctionalDataProperty",
    "DatatypeDefinition",
    "HasKey",
    "SameIndividual",
    "DifferentIndividuals",
    "ClassAssertion",
    "ObjectPropertyAssertion",
    "NegativeObjectPropertyAssertion",
    "DataPropertyAssertion",
    "NegativeDataPropertyAssertion",
    "AnnotationAssertion",
    "SubAnnotationPropertyOf",
    "AnnotationPropertyDomain",
    "AnnotationPropertyRange",
];

/// Keywords that only appear nested; at axiom level they are a syntax
/// error rather than an unknown axiom.
const NESTED_KEYWORDS: &[&str] = &[
    "Prefix",
    "Ontology",
    "Import",
    "Annotation",
    "ObjectIntersectionOf",
    "ObjectUnionOf",
    "ObjectComplementOf",
    "ObjectOneOf",
    "ObjectSomeValuesFrom",
    "ObjectAllValuesFrom",
    "ObjectHasValue",
    "ObjectHasSelf",
    "ObjectMinCardinality",
    "ObjectMaxCardinality",
    "ObjectExactCardinality",
    "ObjectInverseOf",
    "ObjectPropertyChain",
    "DataSomeValuesFrom",
    "DataAllValuesFrom",
    "DataHasValue",
    "DataMinCardinality",
    "DataMaxCardinality",
    "DataExactCardinality",
    "DataIntersectionOf",
    "DataUnionOf",
    "DataComplementOf",
    "DataOneOf",
    "DatatypeRestriction",
    "Class",
    "ObjectProperty",
    "DataProperty",
    "NamedIndividual",
    "Datatype",
    "AnnotationProperty",
];
