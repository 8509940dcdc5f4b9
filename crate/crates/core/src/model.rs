//! Structural model of an OWL 2 ontology.
//!
//! The types here mirror the OWL 2 structural specification closely enough
//! to be serialized back to functional-style syntax without loss, while
//! staying small: literals and data ranges are kept, but nothing is
//! interpreted beyond what the feature extractors need.
//!
//! All values are immutable once an [`Ontology`] has been built and can be
//! shared freely between threads.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

/// Well-known IRIs.
pub mod vocab {
    pub const OWL: &str = "http://www.w3.org/2002/07/owl#";
    pub const RDF: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
    pub const RDFS: &str = "http://www.w3.org/2000/01/rdf-schema#";
    pub const XSD: &str = "http://www.w3.org/2001/XMLSchema#";
    pub const XML: &str = "http://www.w3.org/XML/1998/namespace";

    pub const OWL_THING: &str = "http://www.w3.org/2002/07/owl#Thing";
    pub const OWL_NOTHING: &str = "http://www.w3.org/2002/07/owl#Nothing";
    pub const RDFS_LITERAL: &str = "http://www.w3.org/2000/01/rdf-schema#Literal";

    /// Prefixes every functional-syntax document may use without declaring.
    pub const PREDECLARED: [(&str, &str); 5] = [("owl", OWL), ("rdf", RDF), ("rdfs", RDFS), ("xsd", XSD), ("xml", XML)];
}

/// An absolute IRI. Cheap to clone.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iri(Arc<str>);

impl Iri {
    pub fn new(iri: impl Into<Arc<str>>) -> Self {
        Iri(iri.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_thing(&self) -> bool {
        &*self.0 == vocab::OWL_THING
    }
}

impl fmt::Debug for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.0)
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Iri {
    fn from(s: &str) -> Self {
        Iri::new(s)
    }
}

impl Serialize for Iri {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum EntityKind {
    Class,
    ObjectProperty,
    DataProperty,
    NamedIndividual,
    Datatype,
    AnnotationProperty,
}

impl EntityKind {
    pub const ALL: [EntityKind; 6] = [
        EntityKind::Class,
        EntityKind::ObjectProperty,
        EntityKind::DataProperty,
        EntityKind::NamedIndividual,
        EntityKind::Datatype,
        EntityKind::AnnotationProperty,
    ];

    /// The functional-syntax keyword used inside `Declaration(...)`.
    pub fn keyword(self) -> &'static str {
        match self {
            EntityKind::Class => "Class",
            EntityKind::ObjectProperty => "ObjectProperty",
            EntityKind::DataProperty => "DataProperty",
            EntityKind::NamedIndividual => "NamedIndividual",
            EntityKind::Datatype => "Datatype",
            EntityKind::AnnotationProperty => "AnnotationProperty",
        }
    }

    pub fn from_keyword(kw: &str) -> Option<Self> {
        EntityKind::ALL.into_iter().find(|k| k.keyword() == kw)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Entity {
    pub kind: EntityKind,
    pub iri: Iri,
}

impl Entity {
    pub fn new(kind: EntityKind, iri: impl Into<Iri>) -> Self {
        Entity { kind, iri: iri.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Individual {
    Named(Iri),
    /// Blank-node individual, keeping its node id (`_:x`).
    Anonymous(Arc<str>),
}

impl Individual {
    pub fn named(iri: impl Into<Iri>) -> Self {
        Individual::Named(iri.into())
    }

    pub fn as_named(&self) -> Option<&Iri> {
        match self {
            Individual::Named(iri) => Some(iri),
            Individual::Anonymous(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObjectPropertyExpression {
    Named(Iri),
    InverseOf(Iri),
}

impl ObjectPropertyExpression {
    pub fn named(iri: impl Into<Iri>) -> Self {
        ObjectPropertyExpression::Named(iri.into())
    }

    /// The underlying named property.
    pub fn property(&self) -> &Iri {
        match self {
            ObjectPropertyExpression::Named(iri) | ObjectPropertyExpression::InverseOf(iri) => iri,
        }
    }

    pub fn is_inverse(&self) -> bool {
        matches!(self, ObjectPropertyExpression::InverseOf(_))
    }

    /// Inverts the expression; inverting an inverse yields the named property.
    pub fn inverse(self) -> Self {
        match self {
            ObjectPropertyExpression::Named(iri) => ObjectPropertyExpression::InverseOf(iri),
            ObjectPropertyExpression::InverseOf(iri) => ObjectPropertyExpression::Named(iri),
        }
    }
}

impl From<Iri> for ObjectPropertyExpression {
    fn from(iri: Iri) -> Self {
        ObjectPropertyExpression::Named(iri)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LiteralTag {
    Plain,
    Lang(String),
    Typed(Iri),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub lexical: String,
    pub tag: LiteralTag,
}

impl Literal {
    pub fn typed(lexical: impl Into<String>, datatype: impl Into<Iri>) -> Self {
        Literal { lexical: lexical.into(), tag: LiteralTag::Typed(datatype.into()) }
    }

    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal { lexical: lexical.into(), tag: LiteralTag::Plain }
    }

    pub fn datatype(&self) -> Option<&Iri> {
        match &self.tag {
            LiteralTag::Typed(dt) => Some(dt),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DataRange {
    Datatype(Iri),
    IntersectionOf(Vec<DataRange>),
    UnionOf(Vec<DataRange>),
    ComplementOf(Box<DataRange>),
    OneOf(Vec<Literal>),
    Restriction { datatype: Iri, facets: Vec<(Iri, Literal)> },
}

impl DataRange {
    /// Visits every datatype IRI in the range, including literal datatypes.
    pub fn for_each_datatype<'a>(&'a self, f: &mut dyn FnMut(&'a Iri)) {
        match self {
            DataRange::Datatype(dt) => f(dt),
            DataRange::IntersectionOf(v) | DataRange::UnionOf(v) => v.iter().for_each(|r| r.for_each_datatype(f)),
            DataRange::ComplementOf(r) => r.for_each_datatype(f),
            DataRange::OneOf(lits) => lits.iter().filter_map(Literal::datatype).for_each(f),
            DataRange::Restriction { datatype, facets } => {
                f(datatype);
                facets.iter().filter_map(|(_, l)| l.datatype()).for_each(f);
            }
        }
    }
}

/// Data property restrictions. Parsed fully so they survive serialization,
/// but treated as opaque leaves by the class-constructor statistics.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DataRestriction {
    SomeValuesFrom { properties: Vec<Iri>, range: DataRange },
    AllValuesFrom { properties: Vec<Iri>, range: DataRange },
    HasValue { property: Iri, value: Literal },
    MinCardinality { n: u32, property: Iri, range: Option<DataRange> },
    MaxCardinality { n: u32, property: Iri, range: Option<DataRange> },
    ExactCardinality { n: u32, property: Iri, range: Option<DataRange> },
}

impl DataRestriction {
    pub fn keyword(&self) -> &'static str {
        match self {
            DataRestriction::SomeValuesFrom { .. } => "DataSomeValuesFrom",
            DataRestriction::AllValuesFrom { .. } => "DataAllValuesFrom",
            DataRestriction::HasValue { .. } => "DataHasValue",
            DataRestriction::MinCardinality { .. } => "DataMinCardinality",
            DataRestriction::MaxCardinality { .. } => "DataMaxCardinality",
            DataRestriction::ExactCardinality { .. } => "DataExactCardinality",
        }
    }

    pub fn properties(&self) -> &[Iri] {
        match self {
            DataRestriction::SomeValuesFrom { properties, .. } | DataRestriction::AllValuesFrom { properties, .. } => {
                properties
            }
            DataRestriction::HasValue { property, .. }
            | DataRestriction::MinCardinality { property, .. }
            | DataRestriction::MaxCardinality { property, .. }
            | DataRestriction::ExactCardinality { property, .. } => std::slice::from_ref(property),
        }
    }

    pub fn cardinality(&self) -> Option<u32> {
        match self {
            DataRestriction::MinCardinality { n, .. }
            | DataRestriction::MaxCardinality { n, .. }
            | DataRestriction::ExactCardinality { n, .. } => Some(*n),
            _ => None,
        }
    }

    fn for_each_datatype<'a>(&'a self, f: &mut dyn FnMut(&'a Iri)) {
        match self {
            DataRestriction::SomeValuesFrom { range, .. } | DataRestriction::AllValuesFrom { range, .. } => {
                range.for_each_datatype(f)
            }
            DataRestriction::HasValue { value, .. } => value.datatype().into_iter().for_each(f),
            DataRestriction::MinCardinality { range, .. }
            | DataRestriction::MaxCardinality { range, .. }
            | DataRestriction::ExactCardinality { range, .. } => {
                if let Some(r) = range {
                    r.for_each_datatype(f)
                }
            }
        }
    }
}

/// The eleven object class constructors counted by the constructor
/// statistics. Named classes and data restrictions are not constructors
/// in this sense.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Constructor {
    IntersectionOf,
    UnionOf,
    ComplementOf,
    OneOf,
    SomeValuesFrom,
    AllValuesFrom,
    HasValue,
    HasSelf,
    MinCardinality,
    MaxCardinality,
    ExactCardinality,
}

impl Constructor {
    pub const ALL: [Constructor; 11] = [
        Constructor::IntersectionOf,
        Constructor::UnionOf,
        Constructor::ComplementOf,
        Constructor::OneOf,
        Constructor::SomeValuesFrom,
        Constructor::AllValuesFrom,
        Constructor::HasValue,
        Constructor::HasSelf,
        Constructor::MinCardinality,
        Constructor::MaxCardinality,
        Constructor::ExactCardinality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Constructor::IntersectionOf => "IntersectionOf",
            Constructor::UnionOf => "UnionOf",
            Constructor::ComplementOf => "ComplementOf",
            Constructor::OneOf => "OneOf",
            Constructor::SomeValuesFrom => "SomeValuesFrom",
            Constructor::AllValuesFrom => "AllValuesFrom",
            Constructor::HasValue => "HasValue",
            Constructor::HasSelf => "HasSelf",
            Constructor::MinCardinality => "MinCardinality",
            Constructor::MaxCardinality => "MaxCardinality",
            Constructor::ExactCardinality => "ExactCardinality",
        }
    }

    /// Functional-syntax keyword, e.g. `ObjectIntersectionOf`.
    pub fn keyword(self) -> &'static str {
        match self {
            Constructor::IntersectionOf => "ObjectIntersectionOf",
            Constructor::UnionOf => "ObjectUnionOf",
            Constructor::ComplementOf => "ObjectComplementOf",
            Constructor::OneOf => "ObjectOneOf",
            Constructor::SomeValuesFrom => "ObjectSomeValuesFrom",
            Constructor::AllValuesFrom => "ObjectAllValuesFrom",
            Constructor::HasValue => "ObjectHasValue",
            Constructor::HasSelf => "ObjectHasSelf",
            Constructor::MinCardinality => "ObjectMinCardinality",
            Constructor::MaxCardinality => "ObjectMaxCardinality",
            Constructor::ExactCardinality => "ObjectExactCardinality",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_cardinality(self) -> bool {
        matches!(self, Constructor::MinCardinality | Constructor::MaxCardinality | Constructor::ExactCardinality)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassExpression {
    Class(Iri),
    ObjectIntersectionOf(Vec<ClassExpression>),
    ObjectUnionOf(Vec<ClassExpression>),
    ObjectComplementOf(Box<ClassExpression>),
    ObjectOneOf(Vec<Individual>),
    ObjectSomeValuesFrom { property: ObjectPropertyExpression, filler: Box<ClassExpression> },
    ObjectAllValuesFrom { property: ObjectPropertyExpression, filler: Box<ClassExpression> },
    ObjectHasValue { property: ObjectPropertyExpression, individual: Individual },
    ObjectHasSelf(ObjectPropertyExpression),
    ObjectMinCardinality { n: u32, property: ObjectPropertyExpression, filler: Option<Box<ClassExpression>> },
    ObjectMaxCardinality { n: u32, property: ObjectPropertyExpression, filler: Option<Box<ClassExpression>> },
    ObjectExactCardinality { n: u32, property: ObjectPropertyExpression, filler: Option<Box<ClassExpression>> },
    Data(DataRestriction),
}

impl ClassExpression {
    pub fn class(iri: impl Into<Iri>) -> Self {
        ClassExpression::Class(iri.into())
    }

    pub fn as_class(&self) -> Option<&Iri> {
        match self {
            ClassExpression::Class(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn is_named(&self) -> bool {
        matches!(self, ClassExpression::Class(_))
    }

    /// `owl:Thing` as a named class.
    pub fn is_top(&self) -> bool {
        matches!(self, ClassExpression::Class(iri) if iri.is_thing())
    }

    pub fn constructor(&self) -> Option<Constructor> {
        use ClassExpression::*;
        Some(match self {
            Class(_) | Data(_) => return None,
            ObjectIntersectionOf(_) => Constructor::IntersectionOf,
            ObjectUnionOf(_) => Constructor::UnionOf,
            ObjectComplementOf(_) => Constructor::ComplementOf,
            ObjectOneOf(_) => Constructor::OneOf,
            ObjectSomeValuesFrom { .. } => Constructor::SomeValuesFrom,
            ObjectAllValuesFrom { .. } => Constructor::AllValuesFrom,
            ObjectHasValue { .. } => Constructor::HasValue,
            ObjectHasSelf(_) => Constructor::HasSelf,
            ObjectMinCardinality { .. } => Constructor::MinCardinality,
            ObjectMaxCardinality { .. } => Constructor::MaxCardinality,
            ObjectExactCardinality { .. } => Constructor::ExactCardinality,
        })
    }

    /// Functional-syntax keyword; `Class` for a named class.
    pub fn keyword(&self) -> &'static str {
        match self {
            ClassExpression::Class(_) => "Class",
            ClassExpression::Data(d) => d.keyword(),
            other => other.constructor().expect("object constructor").keyword(),
        }
    }

    /// Direct class-expression children.
    pub fn children(&self) -> &[ClassExpression] {
        use ClassExpression::*;
        match self {
            ObjectIntersectionOf(ops) | ObjectUnionOf(ops) => ops,
            ObjectComplementOf(c) => std::slice::from_ref(&**c),
            ObjectSomeValuesFrom { filler, .. } | ObjectAllValuesFrom { filler, .. } => std::slice::from_ref(&**filler),
            ObjectMinCardinality { filler: Some(f), .. }
            | ObjectMaxCardinality { filler: Some(f), .. }
            | ObjectExactCardinality { filler: Some(f), .. } => std::slice::from_ref(&**f),
            _ => &[],
        }
    }

    /// The object property expression a restriction is over.
    pub fn property(&self) -> Option<&ObjectPropertyExpression> {
        use ClassExpression::*;
        match self {
            ObjectSomeValuesFrom { property, .. }
            | ObjectAllValuesFrom { property, .. }
            | ObjectHasValue { property, .. }
            | ObjectHasSelf(property)
            | ObjectMinCardinality { property, .. }
            | ObjectMaxCardinality { property, .. }
            | ObjectExactCardinality { property, .. } => Some(property),
            _ => None,
        }
    }

    pub fn cardinality(&self) -> Option<u32> {
        use ClassExpression::*;
        match self {
            ObjectMinCardinality { n, .. } | ObjectMaxCardinality { n, .. } | ObjectExactCardinality { n, .. } => {
                Some(*n)
            }
            _ => None,
        }
    }

    /// Nesting depth: 0 for a named class, otherwise one more than the
    /// deepest child (1 for constructors without class children).
    pub fn depth(&self) -> usize {
        match self {
            ClassExpression::Class(_) => 0,
            other => 1 + other.children().iter().map(ClassExpression::depth).max().unwrap_or(0),
        }
    }

    /// Pre-order walk over this expression and all nested expressions.
    pub fn walk<'a>(&'a self, f: &mut dyn FnMut(&'a ClassExpression)) {
        f(self);
        for child in self.children() {
            child.walk(f);
        }
    }

    /// Number of nodes built with `cc`.
    pub fn count_constructor(&self, cc: Constructor) -> usize {
        let mut n = 0;
        self.walk(&mut |e| {
            if e.constructor() == Some(cc) {
                n += 1;
            }
        });
        n
    }

    /// Whether any nested node satisfies `pred`.
    pub fn any(&self, pred: &dyn Fn(&ClassExpression) -> bool) -> bool {
        pred(self) || self.children().iter().any(|c| c.any(pred))
    }

    fn mentions<'a>(&'a self, f: &mut dyn FnMut(Mention<'a>)) {
        use ClassExpression::*;
        match self {
            Class(iri) => f(Mention::Entity(EntityKind::Class, iri)),
            ObjectOneOf(inds) => inds.iter().for_each(|i| i.mention(f)),
            ObjectHasValue { property, individual } => {
                f(Mention::object_property(property));
                individual.mention(f);
            }
            Data(restriction) => {
                for p in restriction.properties() {
                    f(Mention::Entity(EntityKind::DataProperty, p));
                }
                restriction.for_each_datatype(&mut |dt| f(Mention::Entity(EntityKind::Datatype, dt)));
            }
            other => {
                if let Some(p) = other.property() {
                    f(Mention::object_property(p));
                }
            }
        }
        for child in self.children() {
            child.mentions(f);
        }
    }
}

impl Individual {
    fn mention<'a>(&'a self, f: &mut dyn FnMut(Mention<'a>)) {
        match self {
            Individual::Named(iri) => f(Mention::Entity(EntityKind::NamedIndividual, iri)),
            Individual::Anonymous(id) => f(Mention::Anonymous(id)),
        }
    }
}

/// One occurrence of a name inside an axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mention<'a> {
    Entity(EntityKind, &'a Iri),
    Anonymous(&'a str),
}

impl<'a> Mention<'a> {
    fn object_property(p: &'a ObjectPropertyExpression) -> Self {
        Mention::Entity(EntityKind::ObjectProperty, p.property())
    }
}

/// Left-hand side of `SubObjectPropertyOf`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubObjectProperty {
    Property(ObjectPropertyExpression),
    Chain(Vec<ObjectPropertyExpression>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnnotationValue {
    Iri(Iri),
    Anonymous(Arc<str>),
    Literal(Literal),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Annotation {
    pub property: Iri,
    pub value: AnnotationValue,
}

/// The four partitions every axiom falls into.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum AxiomCategory {
    TBox,
    RBox,
    ABox,
    NonLogical,
}

macro_rules! axiom_types {
    ($($name:ident => $cat:ident),* $(,)?) => {
        /// The logical axiom types of OWL 2.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
        pub enum AxiomType {
            $($name),*
        }

        impl AxiomType {
            pub const ALL: [AxiomType; [$(stringify!($name)),*].len()] = [$(AxiomType::$name),*];

            pub fn name(self) -> &'static str {
                match self {
                    $(AxiomType::$name => stringify!($name)),*
                }
            }

            pub fn category(self) -> AxiomCategory {
                match self {
                    $(AxiomType::$name => AxiomCategory::$cat),*
                }
            }
        }
    };
}

axiom_types! {
    SubClassOf => TBox,
    EquivalentClasses => TBox,
    DisjointClasses => TBox,
    DisjointUnion => TBox,
    SubObjectPropertyOf => RBox,
    EquivalentObjectProperties => RBox,
    DisjointObjectProperties => RBox,
    InverseObjectProperties => RBox,
    ObjectPropertyDomain => RBox,
    ObjectPropertyRange => RBox,
    FunctionalObjectProperty => RBox,
    InverseFunctionalObjectProperty => RBox,
    ReflexiveObjectProperty => RBox,
    IrreflexiveObjectProperty => RBox,
    SymmetricObjectProperty => RBox,
    AsymmetricObjectProperty => RBox,
    TransitiveObjectProperty => RBox,
    SubDataPropertyOf => RBox,
    EquivalentDataProperties => RBox,
    DisjointDataProperties => RBox,
    DataPropertyDomain => RBox,
    DataPropertyRange => RBox,
    FunctionalDataProperty => RBox,
    DatatypeDefinition => TBox,
    HasKey => TBox,
    SameIndividual => ABox,
    DifferentIndividuals => ABox,
    ClassAssertion => ABox,
    ObjectPropertyAssertion => ABox,
    NegativeObjectPropertyAssertion => ABox,
    DataPropertyAssertion => ABox,
    NegativeDataPropertyAssertion => ABox,
}

impl AxiomType {
    pub fn index(self) -> usize {
        self as usize
    }
}

/// Object property characteristic axioms, which share one operand shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PropertyCharacteristic {
    Functional,
    InverseFunctional,
    Reflexive,
    Irreflexive,
    Symmetric,
    Asymmetric,
    Transitive,
}

impl PropertyCharacteristic {
    pub const ALL: [PropertyCharacteristic; 7] = [
        PropertyCharacteristic::Functional,
        PropertyCharacteristic::InverseFunctional,
        PropertyCharacteristic::Reflexive,
        PropertyCharacteristic::Irreflexive,
        PropertyCharacteristic::Symmetric,
        PropertyCharacteristic::Asymmetric,
        PropertyCharacteristic::Transitive,
    ];

    pub fn axiom_type(self) -> AxiomType {
        match self {
            PropertyCharacteristic::Functional => AxiomType::FunctionalObjectProperty,
            PropertyCharacteristic::InverseFunctional => AxiomType::InverseFunctionalObjectProperty,
            PropertyCharacteristic::Reflexive => AxiomType::ReflexiveObjectProperty,
            PropertyCharacteristic::Irreflexive => AxiomType::IrreflexiveObjectProperty,
            PropertyCharacteristic::Symmetric => AxiomType::SymmetricObjectProperty,
            PropertyCharacteristic::Asymmetric => AxiomType::AsymmetricObjectProperty,
            PropertyCharacteristic::Transitive => AxiomType::TransitiveObjectProperty,
        }
    }

    pub fn keyword(self) -> &'static str {
        self.axiom_type().name()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    SubClassOf {
        sub: ClassExpression,
        sup: ClassExpression,
    },
    EquivalentClasses(Vec<ClassExpression>),
    DisjointClasses(Vec<ClassExpression>),
    DisjointUnion {
        class: Iri,
        operands: Vec<ClassExpression>,
    },
    SubObjectPropertyOf {
        sub: SubObjectProperty,
        sup: ObjectPropertyExpression,
    },
    EquivalentObjectProperties(Vec<ObjectPropertyExpression>),
    DisjointObjectProperties(Vec<ObjectPropertyExpression>),
    InverseObjectProperties(ObjectPropertyExpression, ObjectPropertyExpression),
    ObjectPropertyDomain {
        property: ObjectPropertyExpression,
        domain: ClassExpression,
    },
    ObjectPropertyRange {
        property: ObjectPropertyExpression,
        range: ClassExpression,
    },
    Characteristic(PropertyCharacteristic, ObjectPropertyExpression),
    SubDataPropertyOf {
        sub: Iri,
        sup: Iri,
    },
    EquivalentDataProperties(Vec<Iri>),
    DisjointDataProperties(Vec<Iri>),
    DataPropertyDomain {
        property: Iri,
        domain: ClassExpression,
    },
    DataPropertyRange {
        property: Iri,
        range: DataRange,
    },
    FunctionalDataProperty(Iri),
    DatatypeDefinition {
        datatype: Iri,
        range: DataRange,
    },
    HasKey {
        class: ClassExpression,
        object_properties: Vec<ObjectPropertyExpression>,
        data_properties: Vec<Iri>,
    },
    SameIndividual(Vec<Individual>),
    DifferentIndividuals(Vec<Individual>),
    ClassAssertion {
        class: ClassExpression,
        individual: Individual,
    },
    ObjectPropertyAssertion {
        property: ObjectPropertyExpression,
        subject: Individual,
        object: Individual,
    },
    NegativeObjectPropertyAssertion {
        property: ObjectPropertyExpression,
        subject: Individual,
        object: Individual,
    },
    DataPropertyAssertion {
        property: Iri,
        subject: Individual,
        value: Literal,
    },
    NegativeDataPropertyAssertion {
        property: Iri,
        subject: Individual,
        value: Literal,
    },

    Declaration(Entity),
    AnnotationAssertion {
        property: Iri,
        subject: AnnotationValue,
        value: AnnotationValue,
    },
    SubAnnotationPropertyOf {
        sub: Iri,
        sup: Iri,
    },
    AnnotationPropertyDomain {
        property: Iri,
        domain: Iri,
    },
    AnnotationPropertyRange {
        property: Iri,
        range: Iri,
    },
    /// A top-level construct this model does not know (e.g. `DLSafeRule`),
    /// kept verbatim.
    Unknown {
        keyword: String,
        body: String,
    },
}

impl Axiom {
    /// The logical type, or `None` for declarations, annotation axioms and
    /// unknown constructs.
    pub fn axiom_type(&self) -> Option<AxiomType> {
        use Axiom::*;
        Some(match self {
            SubClassOf { .. } => AxiomType::SubClassOf,
            EquivalentClasses(_) => AxiomType::EquivalentClasses,
            DisjointClasses(_) => AxiomType::DisjointClasses,
            DisjointUnion { .. } => AxiomType::DisjointUnion,
            SubObjectPropertyOf { .. } => AxiomType::SubObjectPropertyOf,
            EquivalentObjectProperties(_) => AxiomType::EquivalentObjectProperties,
            DisjointObjectProperties(_) => AxiomType::DisjointObjectProperties,
            InverseObjectProperties(..) => AxiomType::InverseObjectProperties,
            ObjectPropertyDomain { .. } => AxiomType::ObjectPropertyDomain,
            ObjectPropertyRange { .. } => AxiomType::ObjectPropertyRange,
            Characteristic(c, _) => c.axiom_type(),
            SubDataPropertyOf { .. } => AxiomType::SubDataPropertyOf,
            EquivalentDataProperties(_) => AxiomType::EquivalentDataProperties,
            DisjointDataProperties(_) => AxiomType::DisjointDataProperties,
            DataPropertyDomain { .. } => AxiomType::DataPropertyDomain,
            DataPropertyRange { .. } => AxiomType::DataPropertyRange,
            FunctionalDataProperty(_) => AxiomType::FunctionalDataProperty,
            DatatypeDefinition { .. } => AxiomType::DatatypeDefinition,
            HasKey { .. } => AxiomType::HasKey,
            SameIndividual(_) => AxiomType::SameIndividual,
            DifferentIndividuals(_) => AxiomType::DifferentIndividuals,
            ClassAssertion { .. } => AxiomType::ClassAssertion,
            ObjectPropertyAssertion { .. } => AxiomType::ObjectPropertyAssertion,
            NegativeObjectPropertyAssertion { .. } => AxiomType::NegativeObjectPropertyAssertion,
            DataPropertyAssertion { .. } => AxiomType::DataPropertyAssertion,
            NegativeDataPropertyAssertion { .. } => AxiomType::NegativeDataPropertyAssertion,
            Declaration(_)
            | AnnotationAssertion { .. }
            | SubAnnotationPropertyOf { .. }
            | AnnotationPropertyDomain { .. }
            | AnnotationPropertyRange { .. }
            | Unknown { .. } => return None,
        })
    }

    pub fn category(&self) -> AxiomCategory {
        self.axiom_type().map_or(AxiomCategory::NonLogical, AxiomType::category)
    }

    pub fn is_logical(&self) -> bool {
        self.axiom_type().is_some()
    }

    /// Top-level class-expression operands, in syntactic order.
    pub fn class_expressions(&self) -> Vec<&ClassExpression> {
        use Axiom::*;
        match self {
            SubClassOf { sub, sup } => vec![sub, sup],
            EquivalentClasses(ops) | DisjointClasses(ops) | DisjointUnion { operands: ops, .. } => ops.iter().collect(),
            ObjectPropertyDomain { domain: ce, .. }
            | ObjectPropertyRange { range: ce, .. }
            | DataPropertyDomain { domain: ce, .. }
            | HasKey { class: ce, .. }
            | ClassAssertion { class: ce, .. } => vec![ce],
            _ => Vec::new(),
        }
    }

    /// Deepest class-expression operand; 0 when the axiom has none.
    pub fn depth(&self) -> usize {
        self.class_expressions().into_iter().map(ClassExpression::depth).max().unwrap_or(0)
    }

    /// Occurrences of `cc` across all class-expression trees of the axiom.
    pub fn count_constructor(&self, cc: Constructor) -> usize {
        self.class_expressions().into_iter().map(|e| e.count_constructor(cc)).sum()
    }

    /// Total constructor occurrences over all eleven constructors.
    pub fn constructor_total(&self) -> usize {
        let mut n = 0;
        for ce in self.class_expressions() {
            ce.walk(&mut |e| {
                if e.constructor().is_some() {
                    n += 1;
                }
            });
        }
        n
    }

    /// Object property expressions appearing at axiom level (not inside
    /// class expressions).
    pub fn object_properties(&self) -> Vec<&ObjectPropertyExpression> {
        use Axiom::*;
        match self {
            SubObjectPropertyOf { sub, sup } => {
                let mut v: Vec<_> = match sub {
                    SubObjectProperty::Property(p) => vec![p],
                    SubObjectProperty::Chain(ps) => ps.iter().collect(),
                };
                v.push(sup);
                v
            }
            EquivalentObjectProperties(ps) | DisjointObjectProperties(ps) => ps.iter().collect(),
            InverseObjectProperties(a, b) => vec![a, b],
            ObjectPropertyDomain { property, .. }
            | ObjectPropertyRange { property, .. }
            | Characteristic(_, property)
            | ObjectPropertyAssertion { property, .. }
            | NegativeObjectPropertyAssertion { property, .. } => vec![property],
            HasKey { object_properties, .. } => object_properties.iter().collect(),
            _ => Vec::new(),
        }
    }

    /// Visits every name occurrence in the axiom, one call per occurrence.
    pub fn mentions<'a>(&'a self, f: &mut dyn FnMut(Mention<'a>)) {
        use Axiom::*;
        use EntityKind as K;
        for ce in self.class_expressions() {
            ce.mentions(f);
        }
        for p in self.object_properties() {
            f(Mention::object_property(p));
        }
        let dt = |f: &mut dyn FnMut(Mention<'a>), r: &'a DataRange| {
            r.for_each_datatype(&mut |d| f(Mention::Entity(K::Datatype, d)))
        };
        let lit = |f: &mut dyn FnMut(Mention<'a>), l: &'a Literal| {
            if let Some(d) = l.datatype() {
                f(Mention::Entity(K::Datatype, d))
            }
        };
        match self {
            DisjointUnion { class, .. } => f(Mention::Entity(K::Class, class)),
            SubDataPropertyOf { sub, sup } => {
                f(Mention::Entity(K::DataProperty, sub));
                f(Mention::Entity(K::DataProperty, sup));
            }
            EquivalentDataProperties(ps) | DisjointDataProperties(ps) => {
                ps.iter().for_each(|p| f(Mention::Entity(K::DataProperty, p)))
            }
            DataPropertyDomain { property, .. } | FunctionalDataProperty(property) => {
                f(Mention::Entity(K::DataProperty, property))
            }
            DataPropertyRange { property, range } => {
                f(Mention::Entity(K::DataProperty, property));
                dt(f, range);
            }
            DatatypeDefinition { datatype, range } => {
                f(Mention::Entity(K::Datatype, datatype));
                dt(f, range);
            }
            HasKey { data_properties, .. } => {
                data_properties.iter().for_each(|p| f(Mention::Entity(K::DataProperty, p)))
            }
            SameIndividual(inds) | DifferentIndividuals(inds) => inds.iter().for_each(|i| i.mention(f)),
            ClassAssertion { individual, .. } => individual.mention(f),
            ObjectPropertyAssertion { subject, object, .. }
            | NegativeObjectPropertyAssertion { subject, object, .. } => {
                subject.mention(f);
                object.mention(f);
            }
            DataPropertyAssertion { property, subject, value }
            | NegativeDataPropertyAssertion { property, subject, value } => {
                f(Mention::Entity(K::DataProperty, property));
                subject.mention(f);
                lit(f, value);
            }
            Declaration(e) => f(Mention::Entity(e.kind, &e.iri)),
            AnnotationAssertion { property, subject, value } => {
                f(Mention::Entity(K::AnnotationProperty, property));
                if let AnnotationValue::Anonymous(id) = subject {
                    f(Mention::Anonymous(id));
                }
                match value {
                    AnnotationValue::Anonymous(id) => f(Mention::Anonymous(id)),
                    AnnotationValue::Literal(l) => lit(f, l),
                    AnnotationValue::Iri(_) => {}
                }
            }
            SubAnnotationPropertyOf { sub, sup } => {
                f(Mention::Entity(K::AnnotationProperty, sub));
                f(Mention::Entity(K::AnnotationProperty, sup));
            }
            AnnotationPropertyDomain { property, .. } | AnnotationPropertyRange { property, .. } => {
                f(Mention::Entity(K::AnnotationProperty, property))
            }
            _ => {}
        }
    }
}

/// Entity names per kind.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub classes: BTreeSet<Iri>,
    pub object_properties: BTreeSet<Iri>,
    pub data_properties: BTreeSet<Iri>,
    pub individuals: BTreeSet<Iri>,
    pub datatypes: BTreeSet<Iri>,
    pub annotation_properties: BTreeSet<Iri>,
    pub anonymous_individuals: BTreeSet<Arc<str>>,
}

impl Signature {
    pub fn of_kind(&self, kind: EntityKind) -> &BTreeSet<Iri> {
        match kind {
            EntityKind::Class => &self.classes,
            EntityKind::ObjectProperty => &self.object_properties,
            EntityKind::DataProperty => &self.data_properties,
            EntityKind::NamedIndividual => &self.individuals,
            EntityKind::Datatype => &self.datatypes,
            EntityKind::AnnotationProperty => &self.annotation_properties,
        }
    }

    fn insert(&mut self, mention: Mention<'_>) {
        let set = match mention {
            Mention::Anonymous(id) => {
                self.anonymous_individuals.insert(Arc::from(id));
                return;
            }
            Mention::Entity(EntityKind::Class, _) => &mut self.classes,
            Mention::Entity(EntityKind::ObjectProperty, _) => &mut self.object_properties,
            Mention::Entity(EntityKind::DataProperty, _) => &mut self.data_properties,
            Mention::Entity(EntityKind::NamedIndividual, _) => &mut self.individuals,
            Mention::Entity(EntityKind::Datatype, _) => &mut self.datatypes,
            Mention::Entity(EntityKind::AnnotationProperty, _) => &mut self.annotation_properties,
        };
        if let Mention::Entity(_, iri) = mention {
            if !set.contains(iri) {
                set.insert(iri.clone());
            }
        }
    }

    pub fn contains(&self, entity: &Entity) -> bool {
        self.of_kind(entity.kind).contains(&entity.iri)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixDeclaration {
    /// Prefix name without the trailing colon; empty for the default prefix.
    pub name: String,
    pub iri: String,
}

/// Everything that precedes the axioms of a document.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OntologyHeader {
    pub prefixes: Vec<PrefixDeclaration>,
    pub iri: Option<Iri>,
    pub version_iri: Option<Iri>,
    pub imports: Vec<Iri>,
    pub annotations: Vec<Annotation>,
}

/// A parsed knowledge base: header, axioms in document order, and the
/// signature closed over every axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ontology {
    header: OntologyHeader,
    axioms: Vec<Axiom>,
    signature: Signature,
}

impl Default for Ontology {
    fn default() -> Self {
        Ontology::new(OntologyHeader::default(), Vec::new())
    }
}

impl Ontology {
    pub fn new(header: OntologyHeader, axioms: Vec<Axiom>) -> Self {
        let mut signature = Signature::default();
        for ax in &axioms {
            ax.mentions(&mut |m| signature.insert(m));
        }
        Ontology { header, axioms, signature }
    }

    pub fn from_axioms(axioms: Vec<Axiom>) -> Self {
        Ontology::new(OntologyHeader::default(), axioms)
    }

    pub fn header(&self) -> &OntologyHeader {
        &self.header
    }

    pub fn axioms(&self) -> &[Axiom] {
        &self.axioms
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn logical_axioms(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms.iter().filter(|a| a.is_logical())
    }

    pub fn axioms_in(&self, category: AxiomCategory) -> impl Iterator<Item = &Axiom> {
        self.axioms.iter().filter(move |a| a.category() == category)
    }

    pub fn tbox(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms_in(AxiomCategory::TBox)
    }

    pub fn rbox(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms_in(AxiomCategory::RBox)
    }

    pub fn abox(&self) -> impl Iterator<Item = &Axiom> {
        self.axioms_in(AxiomCategory::ABox)
    }

    /// Same header, different axioms.
    pub fn with_axioms(&self, axioms: Vec<Axiom>) -> Self {
        Ontology::new(self.header.clone(), axioms)
    }

    pub fn into_parts(self) -> (OntologyHeader, Vec<Axiom>) {
        (self.header, self.axioms)
    }
}
