//! Syntactic OWL 2 profile checks.
//!
//! EL, QL and RL are checked against the rule table in `data/profiles.toml`;
//! DL is checked in code (simple-role restrictions and object/data property
//! punning).

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::model::*;

const BUILTIN_TABLE: &str = include_str!("../../data/profiles.toml");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Profile {
    EL,
    QL,
    RL,
    DL,
}

impl Profile {
    pub const ALL: [Profile; 4] = [Profile::EL, Profile::QL, Profile::RL, Profile::DL];

    pub fn name(self) -> &'static str {
        match self {
            Profile::EL => "EL",
            Profile::QL => "QL",
            Profile::RL => "RL",
            Profile::DL => "DL",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ProfileLabel {
    DL,
    EL,
    QL,
    RL,
    PFULL,
    PNAN,
}

impl ProfileLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            ProfileLabel::DL => "DL",
            ProfileLabel::EL => "EL",
            ProfileLabel::QL => "QL",
            ProfileLabel::RL => "RL",
            ProfileLabel::PFULL => "PFULL",
            ProfileLabel::PNAN => "PNAN",
        }
    }
}

impl fmt::Display for ProfileLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one profile check; `violation` names the first offending
/// construct when the check fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileCheck {
    pub profile: Profile,
    pub violation: Option<String>,
}

impl ProfileCheck {
    pub fn passes(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileReport {
    pub label: ProfileLabel,
    pub checks: Vec<ProfileCheck>,
    /// Set when several of EL/QL/RL pass without all four passing, so the
    /// label came from the EL > QL > RL priority.
    pub tie_broken: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum RuleTableError {
    #[error("malformed profile table: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("profile {profile}: {message}")]
    Invalid { profile: &'static str, message: String },
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct Rule {
    operands: Option<String>,
    #[serde(default)]
    top_filler: bool,
    max_n: Option<u32>,
    max_individuals: Option<usize>,
    max_properties: Option<usize>,
}

#[derive(Clone, Debug, Deserialize)]
struct Grammar {
    #[serde(default)]
    class: bool,
    #[serde(default)]
    top: bool,
    #[serde(flatten)]
    rules: BTreeMap<String, Rule>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileRules {
    axioms: BTreeSet<String>,
    inverse_properties: bool,
    property_chains: bool,
    data_ranges: BTreeSet<String>,
    data_one_of_max: Option<usize>,
    operands: BTreeMap<String, String>,
    grammar: BTreeMap<String, Grammar>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleTable {
    version: u32,
    #[serde(rename = "EL")]
    el: ProfileRules,
    #[serde(rename = "QL")]
    ql: ProfileRules,
    #[serde(rename = "RL")]
    rl: ProfileRules,
}

const SLOTS: [&str; 8] = ["subclass", "superclass", "equivalent", "disjoint", "domain", "range", "key", "assertion"];
const DATA_RANGES: [&str; 6] =
    ["Datatype", "DataIntersectionOf", "DataUnionOf", "DataComplementOf", "DataOneOf", "DatatypeRestriction"];
const DATA_KEYWORDS: [&str; 6] = [
    "DataSomeValuesFrom",
    "DataAllValuesFrom",
    "DataHasValue",
    "DataMinCardinality",
    "DataMaxCardinality",
    "DataExactCardinality",
];

impl RuleTable {
    pub fn builtin() -> &'static RuleTable {
        static TABLE: OnceLock<RuleTable> = OnceLock::new();
        TABLE.get_or_init(|| RuleTable::from_toml(BUILTIN_TABLE).expect("bundled profile table is valid"))
    }

    pub fn from_toml(text: &str) -> Result<Self, RuleTableError> {
        let table: RuleTable = toml::from_str(text)?;
        for (name, rules) in [("EL", &table.el), ("QL", &table.ql), ("RL", &table.rl)] {
            rules.validate().map_err(|message| RuleTableError::Invalid { profile: name, message })?;
        }
        Ok(table)
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    fn rules(&self, p: Profile) -> Option<&ProfileRules> {
        match p {
            Profile::EL => Some(&self.el),
            Profile::QL => Some(&self.ql),
            Profile::RL => Some(&self.rl),
            Profile::DL => None,
        }
    }

    pub fn check(&self, o: &Ontology, p: Profile) -> ProfileCheck {
        let violation = match self.rules(p) {
            Some(rules) => o.logical_axioms().find_map(|ax| rules.axiom(ax).err()),
            None => dl_violation(o),
        };
        ProfileCheck { profile: p, violation }
    }

    pub fn report(&self, o: &Ontology) -> ProfileReport {
        let checks: Vec<ProfileCheck> = Profile::ALL.iter().map(|&p| self.check(o, p)).collect();
        let pass = |p: Profile| checks[p as usize].passes();
        let light = [Profile::EL, Profile::QL, Profile::RL];
        let light_passing = light.iter().filter(|&&p| pass(p)).count();
        let all = checks.iter().all(ProfileCheck::passes);
        let (label, tie_broken) = if all {
            (ProfileLabel::PFULL, false)
        } else if let Some(&first) = light.iter().find(|&&p| pass(p)) {
            let label = match first {
                Profile::EL => ProfileLabel::EL,
                Profile::QL => ProfileLabel::QL,
                _ => ProfileLabel::RL,
            };
            (label, light_passing > 1)
        } else if pass(Profile::DL) {
            (ProfileLabel::DL, false)
        } else {
            (ProfileLabel::PNAN, false)
        };
        ProfileReport { label, checks, tie_broken }
    }
}

impl ProfileRules {
    fn validate(&self) -> Result<(), String> {
        for name in &self.axioms {
            if !AxiomType::ALL.iter().any(|t| t.name() == name) {
                return Err(format!("unknown axiom type {name}"));
            }
        }
        for r in &self.data_ranges {
            if !DATA_RANGES.contains(&r.as_str()) {
                return Err(format!("unknown data range form {r}"));
            }
        }
        for (slot, g) in &self.operands {
            if !SLOTS.contains(&slot.as_str()) {
                return Err(format!("unknown operand slot {slot}"));
            }
            if !self.grammar.contains_key(g) {
                return Err(format!("slot {slot} names missing grammar {g}"));
            }
        }
        for (gname, g) in &self.grammar {
            for (kw, rule) in &g.rules {
                let known = Constructor::ALL.iter().any(|c| c.keyword() == kw) || DATA_KEYWORDS.contains(&kw.as_str());
                if !known {
                    return Err(format!("grammar {gname}: unknown constructor {kw}"));
                }
                if let Some(child) = &rule.operands {
                    if !self.grammar.contains_key(child) {
                        return Err(format!("grammar {gname}: {kw} names missing grammar {child}"));
                    }
                }
            }
        }
        Ok(())
    }

    fn slot(&self, slot: &str, e: &ClassExpression) -> Result<(), String> {
        let g = self
            .operands
            .get(slot)
            .and_then(|g| self.grammar.get(g))
            .ok_or_else(|| format!("no admitted {slot} expressions"))?;
        self.expr(e, g)
    }

    fn expr(&self, e: &ClassExpression, g: &Grammar) -> Result<(), String> {
        if let ClassExpression::Class(iri) = e {
            let ok = if iri.is_thing() { g.top } else { g.class };
            return if ok { Ok(()) } else { Err(format!("class <{iri}> in this position")) };
        }
        let kw = e.keyword();
        let rule = g.rules.get(kw).ok_or_else(|| format!("{kw} in this position"))?;
        if let Some(p) = e.property() {
            self.property(p)?;
        }
        if let (Some(max), Some(n)) = (rule.max_n, e.cardinality()) {
            if n > max {
                return Err(format!("{kw} with cardinality {n}"));
            }
        }
        match e {
            ClassExpression::ObjectOneOf(inds) => {
                if rule.max_individuals.is_some_and(|m| inds.len() > m) {
                    return Err(format!("{kw} with {} individuals", inds.len()));
                }
            }
            ClassExpression::Data(d) => return self.data_restriction(d, rule),
            _ => {}
        }
        for child in e.children() {
            if rule.top_filler && child.is_top() {
                continue;
            }
            let sub = rule
                .operands
                .as_ref()
                .and_then(|name| self.grammar.get(name))
                .ok_or_else(|| format!("{kw} with a nested {}", child.keyword()))?;
            self.expr(child, sub)?;
        }
        Ok(())
    }

    fn data_restriction(&self, d: &DataRestriction, rule: &Rule) -> Result<(), String> {
        let kw = d.keyword();
        if rule.max_properties.is_some_and(|m| d.properties().len() > m) {
            return Err(format!("{kw} over {} properties", d.properties().len()));
        }
        if let (Some(max), Some(n)) = (rule.max_n, d.cardinality()) {
            if n > max {
                return Err(format!("{kw} with cardinality {n}"));
            }
        }
        match d {
            DataRestriction::SomeValuesFrom { range, .. } | DataRestriction::AllValuesFrom { range, .. } => {
                self.data_range(range)
            }
            DataRestriction::MinCardinality { range: Some(r), .. }
            | DataRestriction::MaxCardinality { range: Some(r), .. }
            | DataRestriction::ExactCardinality { range: Some(r), .. } => self.data_range(r),
            _ => Ok(()),
        }
    }

    fn data_range(&self, r: &DataRange) -> Result<(), String> {
        let (form, children): (&str, &[DataRange]) = match r {
            DataRange::Datatype(_) => ("Datatype", &[]),
            DataRange::IntersectionOf(v) => ("DataIntersectionOf", v),
            DataRange::UnionOf(v) => ("DataUnionOf", v),
            DataRange::ComplementOf(c) => ("DataComplementOf", std::slice::from_ref(&**c)),
            DataRange::OneOf(lits) => {
                if self.data_one_of_max.is_some_and(|m| lits.len() > m) {
                    return Err(format!("DataOneOf with {} literals", lits.len()));
                }
                ("DataOneOf", &[])
            }
            DataRange::Restriction { .. } => ("DatatypeRestriction", &[]),
        };
        if !self.data_ranges.contains(form) {
            return Err(format!("{form} data range"));
        }
        children.iter().try_for_each(|c| self.data_range(c))
    }

    fn property(&self, p: &ObjectPropertyExpression) -> Result<(), String> {
        if p.is_inverse() && !self.inverse_properties {
            return Err("ObjectInverseOf".to_string());
        }
        Ok(())
    }

    fn axiom(&self, ax: &Axiom) -> Result<(), String> {
        use Axiom::*;
        let ty = ax.axiom_type().expect("logical axiom");
        if !self.axioms.contains(ty.name()) {
            return Err(format!("{} axiom", ty.name()));
        }
        for p in ax.object_properties() {
            self.property(p)?;
        }
        match ax {
            SubClassOf { sub, sup } => {
                self.slot("subclass", sub)?;
                self.slot("superclass", sup)
            }
            EquivalentClasses(ops) => ops.iter().try_for_each(|e| self.slot("equivalent", e)),
            DisjointClasses(ops) => ops.iter().try_for_each(|e| self.slot("disjoint", e)),
            DisjointUnion { operands, .. } => operands.iter().try_for_each(|e| self.slot("disjoint", e)),
            ObjectPropertyDomain { domain, .. } | DataPropertyDomain { domain, .. } => self.slot("domain", domain),
            ObjectPropertyRange { range, .. } => self.slot("range", range),
            HasKey { class, .. } => self.slot("key", class),
            ClassAssertion { class, .. } => self.slot("assertion", class),
            SubObjectPropertyOf { sub: SubObjectProperty::Chain(_), .. } if !self.property_chains => {
                Err("ObjectPropertyChain".to_string())
            }
            DataPropertyRange { range, .. } | DatatypeDefinition { range, .. } => self.data_range(range),
            _ => Ok(()),
        }
    }
}

/// Named object properties that are not simple: transitive ones,
/// super-properties of chains, and everything above those through
/// sub-property, equivalence and inverse links.
pub fn non_simple_properties(o: &Ontology) -> BTreeSet<Iri> {
    let mut up: BTreeMap<&Iri, Vec<&Iri>> = BTreeMap::new();
    let mut seeds: Vec<&Iri> = Vec::new();
    for ax in o.axioms() {
        match ax {
            Axiom::Characteristic(PropertyCharacteristic::Transitive, p) => seeds.push(p.property()),
            Axiom::SubObjectPropertyOf { sub, sup } => match sub {
                SubObjectProperty::Chain(_) => seeds.push(sup.property()),
                SubObjectProperty::Property(p) => up.entry(p.property()).or_default().push(sup.property()),
            },
            Axiom::EquivalentObjectProperties(ps) => {
                for a in ps {
                    for b in ps {
                        if a != b {
                            up.entry(a.property()).or_default().push(b.property());
                        }
                    }
                }
            }
            Axiom::InverseObjectProperties(a, b) => {
                up.entry(a.property()).or_default().push(b.property());
                up.entry(b.property()).or_default().push(a.property());
            }
            _ => {}
        }
    }
    let mut out: BTreeSet<Iri> = BTreeSet::new();
    let mut queue: VecDeque<&Iri> = seeds.into_iter().collect();
    while let Some(p) = queue.pop_front() {
        if out.insert(p.clone()) {
            if let Some(next) = up.get(p) {
                queue.extend(next.iter().copied());
            }
        }
    }
    out
}

fn dl_violation(o: &Ontology) -> Option<String> {
    let sig = o.signature();
    if let Some(p) = sig.object_properties.intersection(&sig.data_properties).next() {
        return Some(format!("<{p}> used as both object and data property"));
    }
    let non_simple = non_simple_properties(o);
    if non_simple.is_empty() {
        return None;
    }
    let bad = |p: &ObjectPropertyExpression| non_simple.contains(p.property());
    for ax in o.logical_axioms() {
        match ax {
            Axiom::Characteristic(c, p)
                if bad(p)
                    && matches!(
                        c,
                        PropertyCharacteristic::Functional
                            | PropertyCharacteristic::InverseFunctional
                            | PropertyCharacteristic::Irreflexive
                            | PropertyCharacteristic::Asymmetric
                    ) =>
            {
                return Some(format!("{} on non-simple <{}>", c.keyword(), p.property()));
            }
            Axiom::DisjointObjectProperties(ps) => {
                if let Some(p) = ps.iter().find(|p| bad(p)) {
                    return Some(format!("DisjointObjectProperties on non-simple <{}>", p.property()));
                }
            }
            _ => {}
        }
        for ce in ax.class_expressions() {
            let mut found = None;
            ce.walk(&mut |e| {
                let restricted = e.cardinality().is_some() || matches!(e, ClassExpression::ObjectHasSelf(_));
                if found.is_none() && restricted {
                    if let Some(p) = e.property().filter(|p| bad(p)) {
                        found = Some(format!("{} on non-simple <{}>", e.keyword(), p.property()));
                    }
                }
            });
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

/// OPR for `o` using the bundled rule table.
pub fn owl_profile(o: &Ontology) -> ProfileReport {
    RuleTable::builtin().report(o)
}
