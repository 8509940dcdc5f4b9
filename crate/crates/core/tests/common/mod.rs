//! Random ontology generator and a naive feature oracle that works on the
//! generator's own tree, independently of the parser and the model.

#![allow(dead_code)]

pub mod golden;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use ontoprof::features::{schema, FeatureVector, ValueDomain};
use proptest::prelude::*;
use proptest::sample::SizeRange;

pub const NC: u8 = 6;
pub const NP: u8 = 4;
pub const ND: u8 = 2;
pub const NI: u8 = 4;
/// Class index used for owl:Thing in the oracle's sets.
pub const THING: u8 = NC;

const DATATYPES: [&str; 3] = ["integer", "string", "boolean"];
/// In OPCF order.
const CHARACTERISTICS: [&str; 7] = [
    "TransitiveObjectProperty",
    "SymmetricObjectProperty",
    "AsymmetricObjectProperty",
    "ReflexiveObjectProperty",
    "IrreflexiveObjectProperty",
    "FunctionalObjectProperty",
    "InverseFunctionalObjectProperty",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Ope {
    pub prop: u8,
    pub inverse: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Card {
    Min,
    Max,
    Exact,
}

impl Card {
    fn keyword(self, data: bool) -> &'static str {
        match (self, data) {
            (Card::Min, false) => "ObjectMinCardinality",
            (Card::Max, false) => "ObjectMaxCardinality",
            (Card::Exact, false) => "ObjectExactCardinality",
            (Card::Min, true) => "DataMinCardinality",
            (Card::Max, true) => "DataMaxCardinality",
            (Card::Exact, true) => "DataExactCardinality",
        }
    }

    fn constructor(self) -> &'static str {
        match self {
            Card::Min => "MinCardinality",
            Card::Max => "MaxCardinality",
            Card::Exact => "ExactCardinality",
        }
    }
}

/// Literal with an optional datatype index; `None` is a plain literal.
#[derive(Clone, Copy, Debug)]
pub struct Lit(pub Option<u8>, pub u8);

#[derive(Clone, Debug)]
pub enum Ce {
    Class(u8),
    Thing,
    And(Vec<Ce>),
    Or(Vec<Ce>),
    Not(Box<Ce>),
    Some(Ope, Box<Ce>),
    All(Ope, Box<Ce>),
    HasValue(Ope, u8),
    OneOf(Vec<u8>),
    HasSelf(Ope),
    Card(Card, u32, Ope, Option<Box<Ce>>),
    DataSome(u8, u8),
    DataHasValue(u8, Lit),
    DataCard(Card, u32, u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Class,
    ObjectProperty,
    DataProperty,
    NamedIndividual,
}

#[derive(Clone, Debug)]
pub enum Ax {
    Decl(Kind, u8),
    Label(u8),
    Sub(Ce, Ce),
    Equiv(Vec<Ce>),
    Disjoint(Vec<Ce>),
    DisjointUnion(u8, Vec<Ce>),
    SubProp(Ope, u8),
    Chain(Vec<u8>, u8),
    EquivProps(Vec<u8>),
    DisjointProps(Vec<u8>),
    InverseProps(u8, u8),
    Domain(Ope, Ce),
    Range(Ope, Ce),
    Characteristic(usize, u8),
    SubData(u8, u8),
    DataDomain(u8, Ce),
    DataRange(u8, u8),
    FunctionalData(u8),
    HasKey(Ce, Vec<u8>, Vec<u8>),
    Same(Vec<u8>),
    Different(Vec<u8>),
    ClassAssert(Ce, u8),
    PropAssert(u8, u8, u8),
    NegPropAssert(u8, u8, u8),
    DataAssert(u8, u8, Lit),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cat {
    TBox,
    RBox,
    ABox,
    NonLogical,
}

impl Ax {
    /// Axiom type name as used in the ATF feature ids.
    pub fn type_name(&self) -> Option<&'static str> {
        Some(match self {
            Ax::Decl(..) | Ax::Label(_) => return None,
            Ax::Sub(..) => "SubClassOf",
            Ax::Equiv(_) => "EquivalentClasses",
            Ax::Disjoint(_) => "DisjointClasses",
            Ax::DisjointUnion(..) => "DisjointUnion",
            Ax::SubProp(..) | Ax::Chain(..) => "SubObjectPropertyOf",
            Ax::EquivProps(_) => "EquivalentObjectProperties",
            Ax::DisjointProps(_) => "DisjointObjectProperties",
            Ax::InverseProps(..) => "InverseObjectProperties",
            Ax::Domain(..) => "ObjectPropertyDomain",
            Ax::Range(..) => "ObjectPropertyRange",
            Ax::Characteristic(i, _) => CHARACTERISTICS[*i],
            Ax::SubData(..) => "SubDataPropertyOf",
            Ax::DataDomain(..) => "DataPropertyDomain",
            Ax::DataRange(..) => "DataPropertyRange",
            Ax::FunctionalData(_) => "FunctionalDataProperty",
            Ax::HasKey(..) => "HasKey",
            Ax::Same(_) => "SameIndividual",
            Ax::Different(_) => "DifferentIndividuals",
            Ax::ClassAssert(..) => "ClassAssertion",
            Ax::PropAssert(..) => "ObjectPropertyAssertion",
            Ax::NegPropAssert(..) => "NegativeObjectPropertyAssertion",
            Ax::DataAssert(..) => "DataPropertyAssertion",
        })
    }

    pub fn cat(&self) -> Cat {
        match self {
            Ax::Decl(..) | Ax::Label(_) => Cat::NonLogical,
            Ax::Sub(..) | Ax::Equiv(_) | Ax::Disjoint(_) | Ax::DisjointUnion(..) | Ax::HasKey(..) => Cat::TBox,
            Ax::Same(_)
            | Ax::Different(_)
            | Ax::ClassAssert(..)
            | Ax::PropAssert(..)
            | Ax::NegPropAssert(..)
            | Ax::DataAssert(..) => Cat::ABox,
            _ => Cat::RBox,
        }
    }

    /// Top-level class expressions.
    pub fn exprs(&self) -> Vec<&Ce> {
        match self {
            Ax::Sub(a, b) => vec![a, b],
            Ax::Equiv(v) | Ax::Disjoint(v) | Ax::DisjointUnion(_, v) => v.iter().collect(),
            Ax::Domain(_, c) | Ax::Range(_, c) | Ax::DataDomain(_, c) | Ax::HasKey(c, ..) | Ax::ClassAssert(c, _) => {
                vec![c]
            }
            _ => Vec::new(),
        }
    }
}

impl Ce {
    pub fn depth(&self) -> usize {
        match self {
            Ce::Class(_) | Ce::Thing => 0,
            Ce::And(v) | Ce::Or(v) => 1 + v.iter().map(Ce::depth).max().unwrap(),
            Ce::Not(c) | Ce::Some(_, c) | Ce::All(_, c) | Ce::Card(_, _, _, Some(c)) => 1 + c.depth(),
            _ => 1,
        }
    }

    pub fn children(&self) -> Vec<&Ce> {
        match self {
            Ce::And(v) | Ce::Or(v) => v.iter().collect(),
            Ce::Not(c) | Ce::Some(_, c) | Ce::All(_, c) | Ce::Card(_, _, _, Some(c)) => vec![c],
            _ => Vec::new(),
        }
    }

    pub fn visit<'a>(&'a self, f: &mut dyn FnMut(&'a Ce)) {
        f(self);
        for c in self.children() {
            c.visit(f);
        }
    }

    pub fn constructor(&self) -> Option<&'static str> {
        Some(match self {
            Ce::And(_) => "IntersectionOf",
            Ce::Or(_) => "UnionOf",
            Ce::Not(_) => "ComplementOf",
            Ce::OneOf(_) => "OneOf",
            Ce::Some(..) => "SomeValuesFrom",
            Ce::All(..) => "AllValuesFrom",
            Ce::HasValue(..) => "HasValue",
            Ce::HasSelf(_) => "HasSelf",
            Ce::Card(k, ..) => k.constructor(),
            _ => return None,
        })
    }

    pub fn role(&self) -> Option<Ope> {
        match self {
            Ce::Some(r, _) | Ce::All(r, _) | Ce::HasValue(r, _) | Ce::HasSelf(r) | Ce::Card(_, _, r, _) => Some(*r),
            _ => None,
        }
    }

    fn named(&self) -> Option<u8> {
        match self {
            Ce::Class(c) => Some(*c),
            Ce::Thing => Some(THING),
            _ => None,
        }
    }
}

// ---------------------------------------------------------------- strategies

fn ope() -> impl Strategy<Value = Ope> {
    (0..NP, prop::bool::weighted(0.2)).prop_map(|(prop, inverse)| Ope { prop, inverse })
}

fn lit() -> impl Strategy<Value = Lit> {
    (prop::option::weighted(0.7, 0..DATATYPES.len() as u8), 0u8..5).prop_map(|(d, v)| Lit(d, v))
}

fn card() -> impl Strategy<Value = Card> {
    prop_oneof![Just(Card::Min), Just(Card::Max), Just(Card::Exact)]
}

fn individuals(n: impl Into<SizeRange>) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..NI, n)
}

pub fn class_expr() -> impl Strategy<Value = Ce> {
    let leaf = prop_oneof![
        6 => (0..NC).prop_map(Ce::Class),
        1 => Just(Ce::Thing),
        1 => (ope(), 0..NI).prop_map(|(r, i)| Ce::HasValue(r, i)),
        1 => individuals(1..3).prop_map(Ce::OneOf),
        1 => ope().prop_map(Ce::HasSelf),
        1 => (card(), 0u32..4, ope()).prop_map(|(k, n, r)| Ce::Card(k, n, r, None)),
        1 => (0..ND, 0..DATATYPES.len() as u8).prop_map(|(d, t)| Ce::DataSome(d, t)),
        1 => (0..ND, lit()).prop_map(|(d, l)| Ce::DataHasValue(d, l)),
        1 => (card(), 0u32..3, 0..ND).prop_map(|(k, n, d)| Ce::DataCard(k, n, d)),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(Ce::And),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Ce::Or),
            inner.clone().prop_map(|c| Ce::Not(Box::new(c))),
            (ope(), inner.clone()).prop_map(|(r, c)| Ce::Some(r, Box::new(c))),
            (ope(), inner.clone()).prop_map(|(r, c)| Ce::All(r, Box::new(c))),
            (card(), 0u32..5, ope(), inner).prop_map(|(k, n, r, c)| Ce::Card(k, n, r, Some(Box::new(c)))),
        ]
    })
}

fn named_class() -> impl Strategy<Value = Ce> {
    prop_oneof![8 => (0..NC).prop_map(Ce::Class), 1 => Just(Ce::Thing)]
}

/// Class expressions biased towards named classes, for hierarchy shapes.
fn mostly_named() -> impl Strategy<Value = Ce> {
    prop_oneof![3 => named_class(), 1 => class_expr()]
}

fn props(n: impl Into<SizeRange>) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0..NP, n)
}

pub fn axiom() -> impl Strategy<Value = Ax> {
    let kind = prop_oneof![
        Just(Kind::Class),
        Just(Kind::ObjectProperty),
        Just(Kind::DataProperty),
        Just(Kind::NamedIndividual)
    ];
    let limit = |k: Kind| match k {
        Kind::Class => NC,
        Kind::ObjectProperty => NP,
        Kind::DataProperty => ND,
        Kind::NamedIndividual => NI,
    };
    prop_oneof![
        2 => (kind, 0u8..6).prop_map(move |(k, i)| Ax::Decl(k, i % limit(k))),
        1 => (0..NC).prop_map(Ax::Label),
        10 => (mostly_named(), mostly_named()).prop_map(|(a, b)| Ax::Sub(a, b)),
        3 => prop::collection::vec(mostly_named(), 2..4).prop_map(Ax::Equiv),
        2 => prop::collection::vec(mostly_named(), 2..4).prop_map(Ax::Disjoint),
        1 => (0..NC, prop::collection::vec(mostly_named(), 2..4)).prop_map(|(c, v)| Ax::DisjointUnion(c, v)),
        3 => (ope(), 0..NP).prop_map(|(a, b)| Ax::SubProp(a, b)),
        1 => (props(2..4), 0..NP).prop_map(|(v, b)| Ax::Chain(v, b)),
        1 => props(2..4).prop_map(Ax::EquivProps),
        1 => props(2..4).prop_map(Ax::DisjointProps),
        1 => (0..NP, 0..NP).prop_map(|(a, b)| Ax::InverseProps(a, b)),
        2 => (ope(), mostly_named()).prop_map(|(r, c)| Ax::Domain(r, c)),
        2 => (ope(), mostly_named()).prop_map(|(r, c)| Ax::Range(r, c)),
        3 => (0..CHARACTERISTICS.len(), 0..NP).prop_map(|(k, p)| Ax::Characteristic(k, p)),
        1 => (0..ND, 0..ND).prop_map(|(a, b)| Ax::SubData(a, b)),
        1 => (0..ND, mostly_named()).prop_map(|(d, c)| Ax::DataDomain(d, c)),
        1 => (0..ND, 0..DATATYPES.len() as u8).prop_map(|(d, t)| Ax::DataRange(d, t)),
        1 => (0..ND).prop_map(Ax::FunctionalData),
        1 => (mostly_named(), props(0..2), prop::collection::vec(0..ND, 1..2))
            .prop_map(|(c, o, d)| Ax::HasKey(c, o, d)),
        1 => individuals(2..4).prop_map(Ax::Same),
        1 => individuals(2..4).prop_map(Ax::Different),
        2 => (mostly_named(), 0..NI).prop_map(|(c, i)| Ax::ClassAssert(c, i)),
        1 => (0..NP, 0..NI, 0..NI).prop_map(|(p, a, b)| Ax::PropAssert(p, a, b)),
        1 => (0..NP, 0..NI, 0..NI).prop_map(|(p, a, b)| Ax::NegPropAssert(p, a, b)),
        1 => (0..ND, 0..NI, lit()).prop_map(|(d, i, l)| Ax::DataAssert(d, i, l)),
    ]
}

pub fn ontology() -> impl Strategy<Value = Vec<Ax>> {
    prop::collection::vec(axiom(), 0..=30)
}

/// A consistent renaming: one permutation per entity kind.
#[derive(Clone, Debug)]
pub struct Renaming {
    pub classes: Vec<u8>,
    pub props: Vec<u8>,
    pub data: Vec<u8>,
    pub inds: Vec<u8>,
}

fn perm(n: u8) -> impl Strategy<Value = Vec<u8>> {
    Just((0..n).collect::<Vec<u8>>()).prop_shuffle()
}

pub fn renaming() -> impl Strategy<Value = Renaming> {
    (perm(NC), perm(NP), perm(ND), perm(NI)).prop_map(|(classes, props, data, inds)| Renaming {
        classes,
        props,
        data,
        inds,
    })
}

// ------------------------------------------------------------------ render

/// How entity names are written.
pub enum Names<'a> {
    /// `:C0`, `:r0`, `:d0`, `:i0` under `http://ex.org/`.
    Plain,
    /// Full IRIs in another namespace, permuted per kind.
    Renamed(&'a Renaming),
}

impl Names<'_> {
    pub fn class_iri(&self, c: u8) -> String {
        match self {
            _ if c == THING => "http://www.w3.org/2002/07/owl#Thing".into(),
            Names::Plain => format!("http://ex.org/C{c}"),
            Names::Renamed(r) => format!("urn:x:K{}", r.classes[c as usize]),
        }
    }

    fn entity(&self, kind: Kind, i: u8) -> String {
        match (self, kind) {
            (Names::Plain, Kind::Class) => format!(":C{i}"),
            (Names::Plain, Kind::ObjectProperty) => format!(":r{i}"),
            (Names::Plain, Kind::DataProperty) => format!(":d{i}"),
            (Names::Plain, Kind::NamedIndividual) => format!(":i{i}"),
            (Names::Renamed(r), Kind::Class) => format!("<urn:x:K{}>", r.classes[i as usize]),
            (Names::Renamed(r), Kind::ObjectProperty) => format!("<urn:x:rel{}>", r.props[i as usize]),
            (Names::Renamed(r), Kind::DataProperty) => format!("<urn:x:att{}>", r.data[i as usize]),
            (Names::Renamed(r), Kind::NamedIndividual) => format!("<urn:x:obj{}>", r.inds[i as usize]),
        }
    }

    fn class(&self, c: u8) -> String {
        self.entity(Kind::Class, c)
    }
    fn prop(&self, p: u8) -> String {
        self.entity(Kind::ObjectProperty, p)
    }
    fn data(&self, d: u8) -> String {
        self.entity(Kind::DataProperty, d)
    }
    fn ind(&self, i: u8) -> String {
        self.entity(Kind::NamedIndividual, i)
    }

    fn ope(&self, r: Ope) -> String {
        if r.inverse {
            format!("ObjectInverseOf({})", self.prop(r.prop))
        } else {
            self.prop(r.prop)
        }
    }

    fn lit(&self, l: Lit) -> String {
        match l.0 {
            None => format!("\"v{}\"", l.1),
            Some(0) => format!("\"{}\"^^xsd:integer", l.1),
            Some(1) => format!("\"s{}\"^^xsd:string", l.1),
            Some(_) => format!("\"{}\"^^xsd:boolean", l.1.is_multiple_of(2)),
        }
    }

    fn list<T: Copy>(&self, items: &[T], f: impl Fn(&Self, T) -> String) -> String {
        items.iter().map(|&x| f(self, x)).collect::<Vec<_>>().join(" ")
    }

    fn ce(&self, e: &Ce) -> String {
        let many = |v: &[Ce]| v.iter().map(|c| self.ce(c)).collect::<Vec<_>>().join(" ");
        match e {
            Ce::Class(c) => self.class(*c),
            Ce::Thing => "owl:Thing".into(),
            Ce::And(v) => format!("ObjectIntersectionOf({})", many(v)),
            Ce::Or(v) => format!("ObjectUnionOf({})", many(v)),
            Ce::Not(c) => format!("ObjectComplementOf({})", self.ce(c)),
            Ce::Some(r, c) => format!("ObjectSomeValuesFrom({} {})", self.ope(*r), self.ce(c)),
            Ce::All(r, c) => format!("ObjectAllValuesFrom({} {})", self.ope(*r), self.ce(c)),
            Ce::HasValue(r, i) => format!("ObjectHasValue({} {})", self.ope(*r), self.ind(*i)),
            Ce::OneOf(v) => format!("ObjectOneOf({})", self.list(v, Self::ind)),
            Ce::HasSelf(r) => format!("ObjectHasSelf({})", self.ope(*r)),
            Ce::Card(k, n, r, None) => format!("{}({n} {})", k.keyword(false), self.ope(*r)),
            Ce::Card(k, n, r, Some(c)) => format!("{}({n} {} {})", k.keyword(false), self.ope(*r), self.ce(c)),
            Ce::DataSome(d, t) => format!("DataSomeValuesFrom({} xsd:{})", self.data(*d), DATATYPES[*t as usize]),
            Ce::DataHasValue(d, l) => format!("DataHasValue({} {})", self.data(*d), self.lit(*l)),
            Ce::DataCard(k, n, d) => format!("{}({n} {})", k.keyword(true), self.data(*d)),
        }
    }

    fn axiom(&self, ax: &Ax) -> String {
        let many = |v: &[Ce]| v.iter().map(|c| self.ce(c)).collect::<Vec<_>>().join(" ");
        match ax {
            Ax::Decl(k, i) => {
                let kw = match k {
                    Kind::Class => "Class",
                    Kind::ObjectProperty => "ObjectProperty",
                    Kind::DataProperty => "DataProperty",
                    Kind::NamedIndividual => "NamedIndividual",
                };
                format!("Declaration({kw}({}))", self.entity(*k, *i))
            }
            Ax::Label(c) => format!("AnnotationAssertion(rdfs:label {} \"label\")", self.class(*c)),
            Ax::Sub(a, b) => format!("SubClassOf({} {})", self.ce(a), self.ce(b)),
            Ax::Equiv(v) => format!("EquivalentClasses({})", many(v)),
            Ax::Disjoint(v) => format!("DisjointClasses({})", many(v)),
            Ax::DisjointUnion(c, v) => format!("DisjointUnion({} {})", self.class(*c), many(v)),
            Ax::SubProp(a, b) => format!("SubObjectPropertyOf({} {})", self.ope(*a), self.prop(*b)),
            Ax::Chain(v, b) => {
                format!("SubObjectPropertyOf(ObjectPropertyChain({}) {})", self.list(v, Self::prop), self.prop(*b))
            }
            Ax::EquivProps(v) => format!("EquivalentObjectProperties({})", self.list(v, Self::prop)),
            Ax::DisjointProps(v) => format!("DisjointObjectProperties({})", self.list(v, Self::prop)),
            Ax::InverseProps(a, b) => format!("InverseObjectProperties({} {})", self.prop(*a), self.prop(*b)),
            Ax::Domain(r, c) => format!("ObjectPropertyDomain({} {})", self.ope(*r), self.ce(c)),
            Ax::Range(r, c) => format!("ObjectPropertyRange({} {})", self.ope(*r), self.ce(c)),
            Ax::Characteristic(k, p) => format!("{}({})", CHARACTERISTICS[*k], self.prop(*p)),
            Ax::SubData(a, b) => format!("SubDataPropertyOf({} {})", self.data(*a), self.data(*b)),
            Ax::DataDomain(d, c) => format!("DataPropertyDomain({} {})", self.data(*d), self.ce(c)),
            Ax::DataRange(d, t) => format!("DataPropertyRange({} xsd:{})", self.data(*d), DATATYPES[*t as usize]),
            Ax::FunctionalData(d) => format!("FunctionalDataProperty({})", self.data(*d)),
            Ax::HasKey(c, o, d) => {
                format!("HasKey({} ({}) ({}))", self.ce(c), self.list(o, Self::prop), self.list(d, Self::data))
            }
            Ax::Same(v) => format!("SameIndividual({})", self.list(v, Self::ind)),
            Ax::Different(v) => format!("DifferentIndividuals({})", self.list(v, Self::ind)),
            Ax::ClassAssert(c, i) => format!("ClassAssertion({} {})", self.ce(c), self.ind(*i)),
            Ax::PropAssert(p, a, b) => {
                format!("ObjectPropertyAssertion({} {} {})", self.prop(*p), self.ind(*a), self.ind(*b))
            }
            Ax::NegPropAssert(p, a, b) => {
                format!("NegativeObjectPropertyAssertion({} {} {})", self.prop(*p), self.ind(*a), self.ind(*b))
            }
            Ax::DataAssert(d, i, l) => {
                format!("DataPropertyAssertion({} {} {})", self.data(*d), self.ind(*i), self.lit(*l))
            }
        }
    }

    pub fn render(&self, axioms: &[Ax]) -> String {
        let mut out = String::from(
            "Prefix(:=<http://ex.org/>)\n\
             Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n\
             Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n\
             Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n\
             Ontology(\n",
        );
        for ax in axioms {
            writeln!(out, "{}", self.axiom(ax)).unwrap();
        }
        out.push_str(")\n");
        out
    }
}

pub fn render(axioms: &[Ax]) -> String {
    Names::Plain.render(axioms)
}

// ------------------------------------------------------------------ oracle

fn ratio(n: f64, d: f64) -> f64 {
    if d > 0.0 {
        n / d
    } else {
        0.0
    }
}

/// Names mentioned anywhere, per kind (owl:Thing is class `THING`).
#[derive(Default, Debug)]
pub struct Sig {
    pub classes: BTreeSet<u8>,
    pub props: BTreeSet<u8>,
    pub data: BTreeSet<u8>,
    pub inds: BTreeSet<u8>,
    pub datatypes: BTreeSet<u8>,
}

fn sig_ce(s: &mut Sig, e: &Ce) {
    e.visit(&mut |e| match e {
        Ce::Class(c) => {
            s.classes.insert(*c);
        }
        Ce::Thing => {
            s.classes.insert(THING);
        }
        Ce::HasValue(r, i) => {
            s.props.insert(r.prop);
            s.inds.insert(*i);
        }
        Ce::OneOf(v) => s.inds.extend(v),
        Ce::DataSome(d, t) => {
            s.data.insert(*d);
            s.datatypes.insert(*t);
        }
        Ce::DataHasValue(d, l) => {
            s.data.insert(*d);
            s.datatypes.extend(l.0);
        }
        Ce::DataCard(_, _, d) => {
            s.data.insert(*d);
        }
        other => {
            if let Some(r) = other.role() {
                s.props.insert(r.prop);
            }
        }
    });
}

pub fn signature(axioms: &[Ax]) -> Sig {
    let mut s = Sig::default();
    for ax in axioms {
        for e in ax.exprs() {
            sig_ce(&mut s, e);
        }
        match ax {
            Ax::Decl(Kind::Class, i) | Ax::DisjointUnion(i, _) => {
                s.classes.insert(*i);
            }
            Ax::Decl(Kind::ObjectProperty, i) | Ax::Characteristic(_, i) => {
                s.props.insert(*i);
            }
            Ax::Decl(Kind::DataProperty, i) | Ax::FunctionalData(i) | Ax::DataDomain(i, _) => {
                s.data.insert(*i);
            }
            Ax::Decl(Kind::NamedIndividual, i) | Ax::ClassAssert(_, i) => {
                s.inds.insert(*i);
            }
            Ax::SubProp(a, b) => {
                s.props.extend([a.prop, *b]);
            }
            Ax::Chain(v, b) => {
                s.props.extend(v);
                s.props.insert(*b);
            }
            Ax::EquivProps(v) | Ax::DisjointProps(v) => s.props.extend(v),
            Ax::InverseProps(a, b) => s.props.extend([*a, *b]),
            Ax::Domain(r, _) | Ax::Range(r, _) => {
                s.props.insert(r.prop);
            }
            Ax::SubData(a, b) => s.data.extend([*a, *b]),
            Ax::DataRange(d, t) => {
                s.data.insert(*d);
                s.datatypes.insert(*t);
            }
            Ax::HasKey(_, o, d) => {
                s.props.extend(o);
                s.data.extend(d);
            }
            Ax::Same(v) | Ax::Different(v) => s.inds.extend(v),
            Ax::PropAssert(p, a, b) | Ax::NegPropAssert(p, a, b) => {
                s.props.insert(*p);
                s.inds.extend([*a, *b]);
            }
            Ax::DataAssert(d, i, l) => {
                s.data.insert(*d);
                s.inds.insert(*i);
                s.datatypes.extend(l.0);
            }
            _ => {}
        }
    }
    s
}

/// Reachability by Warshall's algorithm over a dense matrix.
pub fn warshall(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for &(a, b) in edges {
        r[a][b] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if r[i][k] {
                let via = r[k].clone();
                for (cell, reach) in r[i].iter_mut().zip(via) {
                    *cell |= reach;
                }
            }
        }
    }
    r
}

/// Graph quantities of a child→parent edge set over `n` nodes, all by
/// brute force on the closure matrix.
#[derive(Debug, PartialEq)]
pub struct GraphFacts {
    pub direct: usize,
    pub indirect: usize,
    pub max_depth: usize,
    pub max_children: usize,
    pub tangled: usize,
    pub max_parents: usize,
}

pub fn graph_facts(n: usize, edges: &BTreeSet<(usize, usize)>) -> GraphFacts {
    let edges: BTreeSet<(usize, usize)> = edges.iter().copied().filter(|(a, b)| a != b).collect();
    let r = warshall(n, &edges);
    let reach = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| i != j && r[i][j]).count();
    let same = |a: usize, b: usize| a == b || (r[a][b] && r[b][a]);
    // Depth of a node's component: longest chain of strictly-ascending
    // components, relaxed n times.
    let mut depth = vec![0usize; n];
    for _ in 0..=n {
        for &(c, p) in &edges {
            if !same(c, p) {
                for x in (0..n).filter(|&x| same(x, c)) {
                    depth[x] = depth[x].max(depth[p] + 1);
                }
            }
        }
    }
    let parents = |x: usize| edges.iter().filter(|e| e.0 == x).count();
    let children = |x: usize| edges.iter().filter(|e| e.1 == x).count();
    GraphFacts {
        direct: edges.len(),
        indirect: reach - edges.len(),
        max_depth: depth.into_iter().max().unwrap_or(0),
        max_children: (0..n).map(children).max().unwrap_or(0),
        tangled: (0..n).filter(|&x| parents(x) >= 2).count(),
        max_parents: (0..n).map(parents).max().unwrap_or(0),
    }
}

/// Class index → dense position among signature classes.
fn positions(set: &BTreeSet<u8>) -> BTreeMap<u8, usize> {
    set.iter().enumerate().map(|(i, &c)| (c, i)).collect()
}

pub fn class_edges(axioms: &[Ax], pos: &BTreeMap<u8, usize>) -> BTreeSet<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for ax in axioms {
        match ax {
            Ax::Sub(a, b) => {
                if let (Some(a), Some(b)) = (a.named(), b.named()) {
                    edges.insert((pos[&a], pos[&b]));
                }
            }
            Ax::Equiv(v) => {
                let named: Vec<u8> = v.iter().filter_map(Ce::named).collect();
                for &a in &named {
                    for &b in &named {
                        edges.insert((pos[&a], pos[&b]));
                    }
                }
            }
            _ => {}
        }
    }
    edges
}

pub fn property_edges(axioms: &[Ax], pos: &BTreeMap<u8, usize>) -> BTreeSet<(usize, usize)> {
    axioms
        .iter()
        .filter_map(|ax| match ax {
            Ax::SubProp(a, b) if !a.inverse => Some((pos[&a.prop], pos[b])),
            _ => None,
        })
        .collect()
}

/// Definition pairs (A, D), as class index and expression.
fn definitions(axioms: &[Ax]) -> Vec<(u8, &Ce)> {
    let mut out = Vec::new();
    for ax in axioms {
        match ax {
            Ax::Sub(a, d) => {
                if let Some(a) = a.named() {
                    out.push((a, d));
                }
            }
            Ax::Equiv(v) => {
                for (i, a) in v.iter().enumerate() {
                    if let Some(a) = a.named() {
                        for (j, d) in v.iter().enumerate() {
                            if i != j {
                                out.push((a, d));
                            }
                        }
                    }
                }
            }
            _ => {}
        }
    }
    out
}

/// Classes lying on a definitional cycle, found by searching from every
/// class for a path back to itself.
pub fn cyclic_classes(axioms: &[Ax]) -> BTreeSet<u8> {
    let mut deps: BTreeMap<u8, BTreeSet<u8>> = BTreeMap::new();
    for (a, d) in definitions(axioms) {
        d.visit(&mut |e| {
            if let Some(b) = e.named() {
                deps.entry(a).or_default().insert(b);
            }
        });
    }
    let mut out = BTreeSet::new();
    for &start in deps.keys() {
        let mut stack: Vec<u8> = deps[&start].iter().copied().collect();
        let mut seen = BTreeSet::new();
        while let Some(x) = stack.pop() {
            if x == start {
                out.insert(start);
                break;
            }
            if seen.insert(x) {
                stack.extend(deps.get(&x).into_iter().flatten());
            }
        }
    }
    out
}

fn tbox_role_occurrences(ax: &Ax) -> Vec<u8> {
    let mut out = Vec::new();
    for e in ax.exprs() {
        e.visit(&mut |e| out.extend(e.role().map(|r| r.prop)));
    }
    if let Ax::HasKey(_, o, _) = ax {
        out.extend(o);
    }
    out
}

/// Feature values recomputed from the generator tree. Covers every
/// numeric feature; OPR and DFN are left to the classifier tests.
pub fn oracle(axioms: &[Ax]) -> BTreeMap<String, f64> {
    let mut f: BTreeMap<String, f64> = BTreeMap::new();
    let mut set = |k: &str, v: f64| {
        f.insert(k.to_string(), v);
    };
    let s = signature(axioms);
    let logical: Vec<&Ax> = axioms.iter().filter(|a| a.cat() != Cat::NonLogical).collect();
    let tbox: Vec<&Ax> = axioms.iter().filter(|a| a.cat() == Cat::TBox).collect();
    let sla = logical.len() as f64;
    let t = tbox.len() as f64;
    let sc = s.classes.len() as f64;
    let si = s.inds.len() as f64;

    set("SC", sc);
    set("SOP", s.props.len() as f64);
    set("SDP", s.data.len() as f64);
    set("SI", si);
    set("SDT", s.datatypes.len() as f64);
    set("SLA", sla);
    set("SA", axioms.len() as f64);

    // hierarchies
    let cpos = positions(&s.classes);
    let ppos = positions(&s.props);
    let cg = graph_facts(cpos.len(), &class_edges(axioms, &cpos));
    let pg = graph_facts(ppos.len(), &property_edges(axioms, &ppos));
    for (prefix, g, n) in [("C", &cg, cpos.len()), ("P", &pg, ppos.len())] {
        set(&format!("{prefix}_MD"), g.max_depth as f64);
        set(&format!("{prefix}_MSB"), g.max_children as f64);
        set(&format!("{prefix}_ASB"), ratio(g.direct as f64, n as f64));
        set(&format!("{prefix}_Tangledness"), g.tangled as f64);
        set(&format!("{prefix}_MTangledness"), g.max_parents as f64);
    }
    let density = |g: &GraphFacts, n: usize| {
        let n = n as f64;
        ratio(2.0 * (g.direct + g.indirect) as f64, n * n - n)
    };
    let ccoh = density(&cg, cpos.len());
    let pcoh = density(&pg, ppos.len());
    let mut dr: BTreeMap<u8, (BTreeSet<u8>, BTreeSet<u8>)> = BTreeMap::new();
    for ax in axioms {
        let (r, c, is_domain) = match ax {
            Ax::Domain(r, c) => (r, c, true),
            Ax::Range(r, c) => (r, c, false),
            _ => continue,
        };
        let parts: Vec<u8> = match c {
            Ce::And(v) => v.iter().filter_map(Ce::named).collect(),
            other => other.named().into_iter().collect(),
        };
        let e = dr.entry(r.prop).or_default();
        if is_domain != r.inverse { &mut e.0 } else { &mut e.1 }.extend(parts);
    }
    let pairs: usize = dr.values().map(|(d, r)| d.len() * r.len()).sum();
    let opcoh = ratio(2.0 * pairs as f64, s.props.len() as f64 * (sc * sc - sc));
    set("CCOH", ccoh);
    set("PCOH", pcoh);
    set("OPCOH", opcoh);
    set("OCOH", (ccoh + pcoh + opcoh) / 3.0);
    set("RRichness", ratio(s.props.len() as f64, s.props.len() as f64 + cg.direct as f64));
    set("AttrRichness", ratio(s.data.len() as f64, sc));

    // axiom level
    let count_cat = |c: Cat| logical.iter().filter(|a| a.cat() == c).count() as f64;
    set("RTBx", ratio(count_cat(Cat::TBox), sla));
    set("RRBx", ratio(count_cat(Cat::RBox), sla));
    set("RABx", ratio(count_cat(Cat::ABox), sla));
    let mut per_type: BTreeMap<&str, usize> = BTreeMap::new();
    for a in &logical {
        *per_type.entry(a.type_name().unwrap()).or_default() += 1;
    }
    for (name, n) in &per_type {
        set(&format!("ATF_{name}"), ratio(*n as f64, sla));
    }
    let depth = |a: &Ax| a.exprs().iter().map(|e| e.depth()).max().unwrap_or(0);
    set("AMP", axioms.iter().map(depth).max().unwrap_or(0) as f64);
    set("AAP", ratio(logical.iter().map(|a| depth(a)).sum::<usize>() as f64, sla));

    // constructors and patterns
    let mut ctor: BTreeMap<&str, usize> = BTreeMap::new();
    let (mut total, mut max_here) = (0usize, 0usize);
    let (mut iu, mut euvi, mut cuvi) = (0usize, 0usize, 0usize);
    let mut by_role: BTreeMap<(u8, Ope), [usize; 3]> = BTreeMap::new();
    for a in &tbox {
        let mut here = 0;
        for e in a.exprs() {
            e.visit(&mut |e| {
                if let Some(c) = e.constructor() {
                    *ctor.entry(c).or_default() += 1;
                    here += 1;
                }
                match e {
                    Ce::And(ops) => {
                        iu += ops.iter().any(|o| matches!(o, Ce::Or(_))) as usize;
                        let all_roles: Vec<Ope> =
                            ops.iter().filter(|o| matches!(o, Ce::All(..))).filter_map(Ce::role).collect();
                        let has = |pred: fn(&Ce) -> bool| {
                            ops.iter().any(|o| pred(o) && all_roles.contains(&o.role().unwrap()))
                        };
                        euvi += has(|o| matches!(o, Ce::Some(..))) as usize;
                        cuvi += has(|o| matches!(o, Ce::Card(..))) as usize;
                    }
                    Ce::Or(ops) => iu += ops.iter().any(|o| matches!(o, Ce::And(_))) as usize,
                    _ => {}
                }
            });
        }
        total += here;
        max_here = max_here.max(here);
        if let Ax::Sub(sub, sup) = a {
            let slot = match sup {
                Ce::Some(..) => Some(0),
                Ce::Card(..) => Some(1),
                Ce::All(..) => Some(2),
                _ => None,
            };
            if let (Some(c), Some(slot)) = (sub.named(), slot) {
                by_role.entry((c, sup.role().unwrap())).or_default()[slot] += 1;
            }
        }
    }
    for (name, n) in &ctor {
        set(&format!("CCF_{name}"), ratio(*n as f64, total as f64));
    }
    set("OCCD", ratio(total as f64, t * max_here as f64));
    for [ex, card, all] in by_role.into_values() {
        euvi += ex * all;
        cuvi += card * all;
    }
    set("IU", iu as f64);
    set("EUvI", euvi as f64);
    set("CUvI", cuvi as f64);

    // class level
    let (mut pcd, mut npcd, mut gci) = (0usize, 0usize, 0usize);
    let mut disjoint = BTreeSet::new();
    for a in &tbox {
        match a {
            Ax::Sub(l, _) if l.named().is_some() => pcd += 1,
            Ax::Sub(..) => gci += 1,
            Ax::Equiv(v) if v.iter().any(|e| e.named().is_some()) => npcd += 1,
            Ax::Equiv(_) => gci += 1,
            Ax::Disjoint(v) => disjoint.extend(v.iter().filter_map(Ce::named)),
            Ax::DisjointUnion(c, v) => {
                disjoint.insert(*c);
                disjoint.extend(v.iter().filter_map(Ce::named));
            }
            _ => {}
        }
    }
    let mut nominal = BTreeSet::new();
    for (a, d) in definitions(axioms) {
        let mut hit = false;
        d.visit(&mut |e| hit |= matches!(e, Ce::OneOf(_) | Ce::HasValue(..)));
        if hit {
            nominal.insert(a);
        }
    }
    set("PCD", ratio(pcd as f64, t));
    set("NPCD", ratio(npcd as f64, t));
    set("GCI", ratio(gci as f64, t));
    set("CCyc", ratio(cyclic_classes(axioms).len() as f64, sc));
    set("CDIJ", ratio(disjoint.len() as f64, sc));
    set("CNOM", ratio(nominal.len() as f64, sc));

    // property level
    let mut occ: BTreeMap<u8, usize> = BTreeMap::new();
    for a in &tbox {
        for p in tbox_role_occurrences(a) {
            *occ.entry(p).or_default() += 1;
        }
    }
    let mut sets: Vec<BTreeSet<u8>> = vec![BTreeSet::new(); 9];
    for ax in axioms {
        match ax {
            Ax::Characteristic(k, p) => {
                sets[*k].insert(*p);
            }
            Ax::InverseProps(a, b) => sets[7].extend([*a, *b]),
            Ax::Chain(_, b) => {
                sets[8].insert(*b);
            }
            _ => {}
        }
    }
    let opco: Vec<usize> = sets.iter().map(|s| s.iter().map(|p| occ.get(p).copied().unwrap_or(0)).sum()).collect();
    let opco_total: usize = opco.iter().sum();
    let names = [
        "Transitive",
        "Symmetric",
        "Asymmetric",
        "Reflexive",
        "Irreflexive",
        "Functional",
        "InverseFunctional",
        "Inverse",
        "Chain",
    ];
    for (name, n) in names.iter().zip(&opco) {
        set(&format!("OPCF_{name}"), ratio(*n as f64, opco_total as f64));
    }
    let mut cards: Vec<(Card, u32)> = Vec::new();
    for ax in axioms {
        for e in ax.exprs() {
            e.visit(&mut |e| {
                if let Ce::Card(k, n, ..) = e {
                    cards.push((*k, *n));
                }
            });
        }
    }
    let hv = |k: Card| cards.iter().filter(|c| c.0 == k).map(|c| c.1).max().unwrap_or(0) as f64;
    set("HVC_Min", hv(Card::Min));
    set("HVC_Max", hv(Card::Max));
    set("HVC_Exact", hv(Card::Exact));
    set("AVC", ratio(cards.iter().map(|c| c.1 as f64).sum(), cards.len() as f64));

    // individual level
    let (mut occurrences, mut with) = (0usize, 0usize);
    for a in &tbox {
        let mut here = 0;
        for e in a.exprs() {
            e.visit(&mut |e| match e {
                Ce::HasValue(..) => here += 1,
                Ce::OneOf(v) => here += v.len(),
                _ => {}
            });
        }
        occurrences += here;
        with += (here > 0) as usize;
    }
    let distinct = |pick: fn(&Ax) -> Option<&Vec<u8>>| {
        axioms.iter().filter_map(pick).flatten().collect::<BTreeSet<_>>().len() as f64
    };
    set("NomTB", ratio(occurrences as f64, si));
    set("TBNom", ratio(with as f64, t));
    set("IDISJ", ratio(distinct(|a| if let Ax::Different(v) = a { Some(v) } else { None }), si));
    set("ISAM", ratio(distinct(|a| if let Ax::Same(v) = a { Some(v) } else { None }), si));
    f
}

/// Features of `v` that disagree with the oracle: counts exactly, the
/// rest to 1e-9.
pub fn oracle_diffs(axioms: &[Ax], v: &FeatureVector) -> Vec<String> {
    let expected = oracle(axioms);
    let mut out: Vec<String> =
        expected.keys().filter(|id| v.get(id).is_none()).map(|id| format!("oracle id {id} not in schema")).collect();
    for (spec, (id, value)) in schema().iter().zip(v.entries()) {
        let Some(got) = value.as_f64() else { continue };
        let want = expected.get(id).copied().unwrap_or(0.0);
        let ok = if spec.domain == ValueDomain::Count { got == want } else { (got - want).abs() < 1e-9 };
        if !ok {
            out.push(format!("{id}: got {got}, oracle {want}"));
        }
    }
    out
}

/// Entries on which two vectors differ.
pub fn vector_diffs(a: &FeatureVector, b: &FeatureVector) -> Vec<String> {
    a.entries()
        .iter()
        .zip(b.entries())
        .filter(|((_, x), (_, y))| match (x.as_f64(), y.as_f64()) {
            (Some(x), Some(y)) => (x - y).abs() > 1e-12,
            _ => x != y,
        })
        .map(|((id, x), (_, y))| format!("{id}: {x} vs {y}"))
        .collect()
}
