//! The feature-vector schema: ids, categories, groups and value domains in
//! their fixed output order.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::model::{AxiomType, Constructor};

pub const SCHEMA_VERSION: &str = "ontoprof-features/1";

/// The 9 object property characteristics behind OPCF.
pub const OPC: [&str; 9] = [
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

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FeatureGroup {
    Size,
    Expressivity,
    Structural,
    Syntactic,
}

impl FeatureGroup {
    pub const ALL: [FeatureGroup; 4] =
        [FeatureGroup::Size, FeatureGroup::Expressivity, FeatureGroup::Structural, FeatureGroup::Syntactic];

    pub fn as_str(self) -> &'static str {
        match self {
            FeatureGroup::Size => "size",
            FeatureGroup::Expressivity => "expressivity",
            FeatureGroup::Structural => "structural",
            FeatureGroup::Syntactic => "syntactic",
        }
    }
}

impl fmt::Display for FeatureGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown feature group '{0}' (expected size, expressivity, structural or syntactic)")]
pub struct UnknownGroup(pub String);

impl FromStr for FeatureGroup {
    type Err = UnknownGroup;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FeatureGroup::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownGroup(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueDomain {
    /// Non-negative integer.
    Count,
    /// Real in [0, 1].
    Ratio,
    /// Non-negative real with no fixed upper bound.
    NonNegative,
    Categorical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureSpec {
    pub id: String,
    pub category: String,
    pub group: FeatureGroup,
    pub domain: ValueDomain,
    pub definition: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemaDocument {
    pub schema_version: String,
    pub features: Vec<FeatureSpec>,
}

struct Builder(Vec<FeatureSpec>);

impl Builder {
    fn add(
        &mut self,
        id: impl Into<String>,
        category: &str,
        group: FeatureGroup,
        domain: ValueDomain,
        def: impl Into<String>,
    ) {
        self.0.push(FeatureSpec {
            id: id.into(),
            category: category.to_string(),
            group,
            domain,
            definition: def.into(),
        });
    }
}

/// All features in output order.
pub fn schema() -> &'static [FeatureSpec] {
    static SCHEMA: OnceLock<Vec<FeatureSpec>> = OnceLock::new();
    SCHEMA.get_or_init(build)
}

pub fn schema_document() -> SchemaDocument {
    SchemaDocument { schema_version: SCHEMA_VERSION.to_string(), features: schema().to_vec() }
}

/// Pretty JSON form of the schema, as shipped in `data/feature_schema.json`.
pub fn schema_json() -> String {
    let mut s = serde_json::to_string_pretty(&schema_document()).expect("schema serializes");
    s.push('\n');
    s
}

pub fn position(id: &str) -> Option<usize> {
    schema().iter().position(|f| f.id == id)
}

fn build() -> Vec<FeatureSpec> {
    use FeatureGroup::*;
    use ValueDomain::*;
    let mut b = Builder(Vec::new());

    b.add("SC", "size", Size, Count, "number of named classes in the signature");
    b.add("SOP", "size", Size, Count, "number of named object properties");
    b.add("SDP", "size", Size, Count, "number of named data properties");
    b.add("SI", "size", Size, Count, "number of named individuals");
    b.add("SDT", "size", Size, Count, "number of datatypes");
    b.add("SLA", "size", Size, Count, "number of logical axioms");
    b.add("SA", "size", Size, Count, "number of axioms, including declarations and annotations");

    b.add(
        "OPR",
        "expressivity",
        Expressivity,
        Categorical,
        "OWL 2 profile: EL, QL, RL, DL, PFULL (all pass) or PNAN (none pass)",
    );
    b.add("DFN", "expressivity", Expressivity, Categorical, "description logic family name");

    for (prefix, what) in [("C", "class"), ("P", "object property")] {
        b.add(
            format!("{prefix}_MD"),
            "hierarchy",
            Structural,
            Count,
            format!("longest path in the asserted {what} hierarchy"),
        );
        b.add(format!("{prefix}_MSB"), "hierarchy", Structural, Count, format!("largest number of direct sub-{what}s"));
        b.add(format!("{prefix}_ASB"), "hierarchy", Structural, NonNegative, format!("direct {what} links per {what}"));
        b.add(
            format!("{prefix}_Tangledness"),
            "hierarchy",
            Structural,
            Count,
            format!("{what}s with two or more direct parents"),
        );
        b.add(
            format!("{prefix}_MTangledness"),
            "hierarchy",
            Structural,
            Count,
            format!("largest number of direct parents of a {what}"),
        );
    }

    b.add("CCOH", "cohesion", Structural, NonNegative, "2(NdHC+NidHC)/(NC^2-NC); at most 1 on acyclic hierarchies");
    b.add("PCOH", "cohesion", Structural, NonNegative, "CCOH over the object property hierarchy");
    b.add(
        "OPCOH",
        "cohesion",
        Structural,
        NonNegative,
        "2*sum(NdC*NrC)/(NOProp*(NC^2-NC)) over named domains and ranges",
    );
    b.add("OCOH", "cohesion", Structural, NonNegative, "weighted mean of CCOH, PCOH and OPCOH");

    b.add("RRichness", "richness", Structural, Ratio, "SOP/(SOP+NdHC)");
    b.add("AttrRichness", "richness", Structural, NonNegative, "SDP/SC");

    b.add("RTBx", "axiom", Syntactic, Ratio, "TBox axioms / SLA");
    b.add("RRBx", "axiom", Syntactic, Ratio, "RBox axioms / SLA");
    b.add("RABx", "axiom", Syntactic, Ratio, "ABox axioms / SLA");
    for t in AxiomType::ALL {
        b.add(format!("ATF_{}", t.name()), "axiom", Syntactic, Ratio, format!("{} axioms / SLA", t.name()));
    }
    b.add("AMP", "axiom", Syntactic, Count, "largest class-expression nesting depth of an axiom");
    b.add("AAP", "axiom", Syntactic, NonNegative, "mean nesting depth over logical axioms");

    for c in Constructor::ALL {
        b.add(
            format!("CCF_{}", c.name()),
            "constructor",
            Syntactic,
            Ratio,
            format!("{} occurrences in TBox / all constructor occurrences in TBox", c.keyword()),
        );
    }
    b.add(
        "OCCD",
        "constructor",
        Syntactic,
        Ratio,
        "TBox constructor occurrences / (TBox size * largest per-axiom count)",
    );
    b.add(
        "IU",
        "constructor",
        Syntactic,
        Count,
        "intersection nodes with a direct union operand, and union nodes with a direct intersection operand",
    );
    b.add(
        "EUvI",
        "constructor",
        Syntactic,
        Count,
        "existential and universal restrictions on one role, in one intersection or in SubClassOf axioms of one class",
    );
    b.add(
        "CUvI",
        "constructor",
        Syntactic,
        Count,
        "as EUvI with a cardinality restriction in place of the existential",
    );

    b.add("PCD", "class", Syntactic, Ratio, "SubClassOf axioms with a named subclass / TBox size");
    b.add("NPCD", "class", Syntactic, Ratio, "EquivalentClasses axioms with a named operand / TBox size");
    b.add("GCI", "class", Syntactic, Ratio, "class axioms with only complex left-hand sides / TBox size");
    b.add("CCyc", "class", Syntactic, Ratio, "classes on a definitional cycle / SC");
    b.add("CDIJ", "class", Syntactic, Ratio, "classes named in DisjointClasses or DisjointUnion / SC");
    b.add("CNOM", "class", Syntactic, Ratio, "classes defined with ObjectOneOf or ObjectHasValue / SC");

    for c in OPC {
        b.add(
            format!("OPCF_{c}"),
            "property",
            Syntactic,
            Ratio,
            format!("TBox occurrences of {c} properties / TBox occurrences of all characterised properties"),
        );
    }
    b.add("HVC_Min", "property", Syntactic, Count, "largest n in ObjectMinCardinality");
    b.add("HVC_Max", "property", Syntactic, Count, "largest n in ObjectMaxCardinality");
    b.add("HVC_Exact", "property", Syntactic, Count, "largest n in ObjectExactCardinality");
    b.add("AVC", "property", Syntactic, NonNegative, "mean n over object cardinality restrictions");

    b.add("NomTB", "individual", Syntactic, NonNegative, "individual occurrences in TBox axioms / SI");
    b.add("TBNom", "individual", Syntactic, Ratio, "TBox axioms mentioning an individual / TBox size");
    b.add("IDISJ", "individual", Syntactic, Ratio, "individuals in DifferentIndividuals / SI");
    b.add("ISAM", "individual", Syntactic, Ratio, "individuals in SameIndividual / SI");

    b.0
}
