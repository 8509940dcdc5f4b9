//! Canonical functional-style output: declared prefixes first, then the
//! ontology with every IRI written in full, one axiom per line.

use std::fmt::Write;

use crate::model::*;

pub fn serialize(o: &Ontology) -> String {
    let mut w = Writer { out: String::new() };
    let h = o.header();
    for p in &h.prefixes {
        let _ = writeln!(w.out, "Prefix({}:=<{}>)", p.name, p.iri);
    }
    if !h.prefixes.is_empty() {
        w.out.push('\n');
    }
    w.out.push_str("Ontology(");
    if let Some(iri) = &h.iri {
        w.iri(iri);
        if let Some(v) = &h.version_iri {
            w.out.push(' ');
            w.iri(v);
        }
    }
    let body_empty = h.imports.is_empty() && h.annotations.is_empty() && o.axioms().is_empty();
    for import in &h.imports {
        w.out.push_str("\nImport(");
        w.iri(import);
        w.out.push(')');
    }
    for a in &h.annotations {
        w.out.push('\n');
        w.annotation(a);
    }
    for ax in o.axioms() {
        w.out.push('\n');
        w.axiom(ax);
    }
    if !body_empty {
        w.out.push('\n');
    }
    w.out.push_str(")\n");
    w.out
}

struct Writer {
    out: String,
}

impl Writer {
    fn iri(&mut self, iri: &Iri) {
        self.out.push('<');
        self.out.push_str(iri.as_str());
        self.out.push('>');
    }

    fn open(&mut self, keyword: &str) {
        self.out.push_str(keyword);
        self.out.push('(');
    }

    fn sep(&mut self) {
        self.out.push(' ');
    }

    fn close(&mut self) {
        self.out.push(')');
    }

    fn list<T>(&mut self, items: &[T], mut f: impl FnMut(&mut Self, &T)) {
        for (i, item) in items.iter().enumerate() {
            if i > 0 {
                self.sep();
            }
            f(self, item);
        }
    }

    fn individual(&mut self, ind: &Individual) {
        match ind {
            Individual::Named(iri) => self.iri(iri),
            Individual::Anonymous(id) => self.out.push_str(id),
        }
    }

    fn property(&mut self, p: &ObjectPropertyExpression) {
        match p {
            ObjectPropertyExpression::Named(iri) => self.iri(iri),
            ObjectPropertyExpression::InverseOf(iri) => {
                self.open("ObjectInverseOf");
                self.iri(iri);
                self.close();
            }
        }
    }

    fn literal(&mut self, lit: &Literal) {
        self.out.push('"');
        for c in lit.lexical.chars() {
            if c == '"' || c == '\\' {
                self.out.push('\\');
            }
            self.out.push(c);
        }
        self.out.push('"');
        match &lit.tag {
            LiteralTag::Plain => {}
            LiteralTag::Lang(tag) => {
                self.out.push('@');
                self.out.push_str(tag);
            }
            LiteralTag::Typed(dt) => {
                self.out.push_str("^^");
                self.iri(dt);
            }
        }
    }

    fn data_range(&mut self, r: &DataRange) {
        match r {
            DataRange::Datatype(dt) => self.iri(dt),
            DataRange::IntersectionOf(v) => {
                self.open("DataIntersectionOf");
                self.list(v, Self::data_range);
                self.close();
            }
            DataRange::UnionOf(v) => {
                self.open("DataUnionOf");
                self.list(v, Self::data_range);
                self.close();
            }
            DataRange::ComplementOf(inner) => {
                self.open("DataComplementOf");
                self.data_range(inner);
                self.close();
            }
            DataRange::OneOf(lits) => {
                self.open("DataOneOf");
                self.list(lits, Self::literal);
                self.close();
            }
            DataRange::Restriction { datatype, facets } => {
                self.open("DatatypeRestriction");
                self.iri(datatype);
                for (facet, value) in facets {
                    self.sep();
                    self.iri(facet);
                    self.sep();
                    self.literal(value);
                }
                self.close();
            }
        }
    }

    fn class_expression(&mut self, e: &ClassExpression) {
        use ClassExpression as CE;
        match e {
            CE::Class(iri) => return self.iri(iri),
            CE::Data(d) => return self.data_restriction(d),
            _ => {}
        }
        self.open(e.keyword());
        match e {
            CE::ObjectIntersectionOf(ops) | CE::ObjectUnionOf(ops) => self.list(ops, Self::class_expression),
            CE::ObjectComplementOf(c) => self.class_expression(c),
            CE::ObjectOneOf(inds) => self.list(inds, Self::individual),
            CE::ObjectSomeValuesFrom { property, filler } | CE::ObjectAllValuesFrom { property, filler } => {
                self.property(property);
                self.sep();
                self.class_expression(filler);
            }
            CE::ObjectHasValue { property, individual } => {
                self.property(property);
                self.sep();
                self.individual(individual);
            }
            CE::ObjectHasSelf(p) => self.property(p),
            CE::ObjectMinCardinality { n, property, filler }
            | CE::ObjectMaxCardinality { n, property, filler }
            | CE::ObjectExactCardinality { n, property, filler } => {
                let _ = write!(self.out, "{n} ");
                self.property(property);
                if let Some(f) = filler {
                    self.sep();
                    self.class_expression(f);
                }
            }
            CE::Class(_) | CE::Data(_) => unreachable!(),
        }
        self.close();
    }

    fn data_restriction(&mut self, d: &DataRestriction) {
        self.open(d.keyword());
        match d {
            DataRestriction::SomeValuesFrom { properties, range }
            | DataRestriction::AllValuesFrom { properties, range } => {
                for p in properties {
                    self.iri(p);
                    self.sep();
                }
                self.data_range(range);
            }
            DataRestriction::HasValue { property, value } => {
                self.iri(property);
                self.sep();
                self.literal(value);
            }
            DataRestriction::MinCardinality { n, property, range }
            | DataRestriction::MaxCardinality { n, property, range }
            | DataRestriction::ExactCardinality { n, property, range } => {
                let _ = write!(self.out, "{n} ");
                self.iri(property);
                if let Some(r) = range {
                    self.sep();
                    self.data_range(r);
                }
            }
        }
        self.close();
    }

    fn annotation_value(&mut self, v: &AnnotationValue) {
        match v {
            AnnotationValue::Iri(iri) => self.iri(iri),
            AnnotationValue::Anonymous(id) => self.out.push_str(id),
            AnnotationValue::Literal(l) => self.literal(l),
        }
    }

    fn annotation(&mut self, a: &Annotation) {
        self.open("Annotation");
        self.iri(&a.property);
        self.sep();
        self.annotation_value(&a.value);
        self.close();
    }

    fn axiom(&mut self, ax: &Axiom) {
        use Axiom as A;
        if let A::Unknown { keyword, body } = ax {
            self.open(keyword);
            self.out.push_str(body);
            self.close();
            return;
        }
        let keyword = match ax {
            A::Declaration(_) => "Declaration",
            A::AnnotationAssertion { .. } => "AnnotationAssertion",
            A::SubAnnotationPropertyOf { .. } => "SubAnnotationPropertyOf",
            A::AnnotationPropertyDomain { .. } => "AnnotationPropertyDomain",
            A::AnnotationPropertyRange { .. } => "AnnotationPropertyRange",
            other => other.axiom_type().expect("logical axiom").name(),
        };
        self.open(keyword);
        match ax {
            A::SubClassOf { sub, sup } => {
                self.class_expression(sub);
                self.sep();
                self.class_expression(sup);
            }
            A::EquivalentClasses(ops) | A::DisjointClasses(ops) => self.list(ops, Self::class_expression),
            A::DisjointUnion { class, operands } => {
                self.iri(class);
                self.sep();
                self.list(operands, Self::class_expression);
            }
            A::SubObjectPropertyOf { sub, sup } => {
                match sub {
                    SubObjectProperty::Property(p) => self.property(p),
                    SubObjectProperty::Chain(ps) => {
                        self.open("ObjectPropertyChain");
                        self.list(ps, Self::property);
                        self.close();
                    }
                }
                self.sep();
                self.property(sup);
            }
            A::EquivalentObjectProperties(ps) | A::DisjointObjectProperties(ps) => self.list(ps, Self::property),
            A::InverseObjectProperties(a, b) => {
                self.property(a);
                self.sep();
                self.property(b);
            }
            A::ObjectPropertyDomain { property, domain: ce } | A::ObjectPropertyRange { property, range: ce } => {
                self.property(property);
                self.sep();
                self.class_expression(ce);
            }
            A::Characteristic(_, p) => self.property(p),
            A::SubDataPropertyOf { sub, sup } => {
                self.iri(sub);
                self.sep();
                self.iri(sup);
            }
            A::EquivalentDataProperties(ps) | A::DisjointDataProperties(ps) => self.list(ps, Self::iri),
            A::DataPropertyDomain { property, domain } => {
                self.iri(property);
                self.sep();
                self.class_expression(domain);
            }
            A::DataPropertyRange { property: iri, range } | A::DatatypeDefinition { datatype: iri, range } => {
                self.iri(iri);
                self.sep();
                self.data_range(range);
            }
            A::FunctionalDataProperty(p) => self.iri(p),
            A::HasKey { class, object_properties, data_properties } => {
                self.class_expression(class);
                self.out.push_str(" (");
                self.list(object_properties, Self::property);
                self.out.push_str(") (");
                self.list(data_properties, Self::iri);
                self.out.push(')');
            }
            A::SameIndividual(inds) | A::DifferentIndividuals(inds) => self.list(inds, Self::individual),
            A::ClassAssertion { class, individual } => {
                self.class_expression(class);
                self.sep();
                self.individual(individual);
            }
            A::ObjectPropertyAssertion { property, subject, object }
            | A::NegativeObjectPropertyAssertion { property, subject, object } => {
                self.property(property);
                self.sep();
                self.individual(subject);
                self.sep();
                self.individual(object);
            }
            A::DataPropertyAssertion { property, subject, value }
            | A::NegativeDataPropertyAssertion { property, subject, value } => {
                self.iri(property);
                self.sep();
                self.individual(subject);
                self.sep();
                self.literal(value);
            }
            A::Declaration(e) => {
                self.open(e.kind.keyword());
                self.iri(&e.iri);
                self.close();
            }
            A::AnnotationAssertion { property, subject, value } => {
                self.iri(property);
                self.sep();
                self.annotation_value(subject);
                self.sep();
                self.annotation_value(value);
            }
            A::SubAnnotationPropertyOf { sub: a, sup: b }
            | A::AnnotationPropertyDomain { property: a, domain: b }
            | A::AnnotationPropertyRange { property: a, range: b } => {
                self.iri(a);
                self.sep();
                self.iri(b);
            }
            A::Unknown { .. } => unreachable!(),
        }
        self.close();
    }
}
