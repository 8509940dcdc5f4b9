use std::collections::{BTreeMap, BTreeSet};

use crate::hierarchy::Hierarchy;
use crate::model::*;

use super::ratio;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct HierarchyFeatures {
    pub max_depth: usize,
    pub max_children: usize,
    pub mean_children: f64,
    pub tangled: usize,
    pub max_parents: usize,
}

pub fn hierarchy_features(h: &Hierarchy) -> HierarchyFeatures {
    let fan = h.fanout();
    let t = h.tangledness();
    HierarchyFeatures {
        max_depth: h.max_depth(),
        max_children: fan.max_children,
        mean_children: fan.mean_children,
        tangled: t.count,
        max_parents: t.max_parents,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Cohesion {
    pub ccoh: f64,
    pub pcoh: f64,
    pub opcoh: f64,
    pub ocoh: f64,
}

fn link_density(h: &Hierarchy) -> f64 {
    let n = h.node_count() as f64;
    ratio(2.0 * (h.direct_links() + h.indirect_links()) as f64, n * n - n)
}

/// Named classes of a domain or range: the class itself, or the named
/// operands of a top-level intersection.
fn named_parts(ce: &ClassExpression) -> Vec<&Iri> {
    match ce {
        ClassExpression::Class(iri) => vec![iri],
        ClassExpression::ObjectIntersectionOf(ops) => ops.iter().filter_map(ClassExpression::as_class).collect(),
        _ => Vec::new(),
    }
}

/// Per named object property: distinct named domain classes and range
/// classes. A domain of `ObjectInverseOf(p)` is a range of `p` and vice versa.
pub fn domains_and_ranges(o: &Ontology) -> BTreeMap<&Iri, (BTreeSet<&Iri>, BTreeSet<&Iri>)> {
    let mut out: BTreeMap<&Iri, (BTreeSet<&Iri>, BTreeSet<&Iri>)> = BTreeMap::new();
    for ax in o.axioms() {
        let (p, ce, is_domain) = match ax {
            Axiom::ObjectPropertyDomain { property, domain } => (property, domain, true),
            Axiom::ObjectPropertyRange { property, range } => (property, range, false),
            _ => continue,
        };
        let entry = out.entry(p.property()).or_default();
        let set = if is_domain != p.is_inverse() { &mut entry.0 } else { &mut entry.1 };
        set.extend(named_parts(ce));
    }
    out
}

pub fn cohesion_features(o: &Ontology, ch: &Hierarchy, ph: &Hierarchy, weights: [f64; 3]) -> Cohesion {
    let ccoh = link_density(ch);
    let pcoh = link_density(ph);
    let nc = ch.node_count() as f64;
    let nop = o.signature().object_properties.len() as f64;
    let sum: usize = domains_and_ranges(o).values().map(|(d, r)| d.len() * r.len()).sum();
    let opcoh = ratio(2.0 * sum as f64, nop * (nc * nc - nc));
    let wsum: f64 = weights.iter().sum();
    let ocoh = ratio(weights[0] * ccoh + weights[1] * pcoh + weights[2] * opcoh, wsum);
    Cohesion { ccoh, pcoh, opcoh, ocoh }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Richness {
    pub relationship: f64,
    pub attribute: f64,
}

pub fn richness_features(o: &Ontology, ch: &Hierarchy) -> Richness {
    let sig = o.signature();
    let sop = sig.object_properties.len() as f64;
    Richness {
        relationship: ratio(sop, sop + ch.direct_links() as f64),
        attribute: ratio(sig.data_properties.len() as f64, sig.classes.len() as f64),
    }
}
