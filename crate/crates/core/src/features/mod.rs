//! Feature extraction: size, expressivity, structural and syntactic
//! features assembled into one [`FeatureVector`] per ontology.

mod schema;
mod size;
mod structural;
mod syntactic;
mod vector;

use std::collections::BTreeSet;

pub use schema::{
    position, schema, schema_document, schema_json, FeatureGroup, FeatureSpec, SchemaDocument, UnknownGroup,
    ValueDomain, OPC, SCHEMA_VERSION,
};
pub use size::{size_features, SizeFeatures};
pub use structural::{
    cohesion_features, domains_and_ranges, hierarchy_features, richness_features, Cohesion, HierarchyFeatures, Richness,
};
pub use syntactic::{
    axiom_level_features, characterised_properties, class_level_features, constructor_features,
    individual_level_features, pattern_counts, property_level_features, tbox_property_occurrences, AxiomLevel,
    ClassLevel, ConstructorLevel, IndividualLevel, PatternCount, PropertyLevel,
};
pub use vector::{format_decimal, FeatureValue, FeatureVector, VectorMetadata};

use crate::expressivity::{dl_family_name, owl_profile};
use crate::hierarchy::{build_class_hierarchy, build_property_hierarchy, cyclic_classes};
use crate::model::{AxiomType, Constructor, Ontology};

/// `n / d`, or 0 when `d` is not positive.
pub(crate) fn ratio(n: f64, d: f64) -> f64 {
    if d > 0.0 {
        n / d
    } else {
        0.0
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeatureOptions {
    pub groups: BTreeSet<FeatureGroup>,
    /// Weights of CCOH, PCOH and OPCOH in OCOH, normalised by their sum.
    pub ocoh_weights: [f64; 3],
}

impl Default for FeatureOptions {
    fn default() -> Self {
        FeatureOptions { groups: FeatureGroup::ALL.into_iter().collect(), ocoh_weights: [1.0 / 3.0; 3] }
    }
}

impl FeatureOptions {
    pub fn with_groups(groups: impl IntoIterator<Item = FeatureGroup>) -> Self {
        FeatureOptions { groups: groups.into_iter().collect(), ..Default::default() }
    }
}

/// Every feature, default options.
pub fn extract_all(o: &Ontology) -> FeatureVector {
    extract(o, &FeatureOptions::default())
}

pub fn extract(o: &Ontology, opts: &FeatureOptions) -> FeatureVector {
    let mut out: Vec<(String, FeatureValue)> = Vec::with_capacity(schema().len());
    let mut push = |id: &str, v: FeatureValue| out.push((id.to_string(), v));
    let mut metadata = VectorMetadata {
        anonymous_individuals: o.signature().anonymous_individuals.len(),
        profile_tie_broken: false,
        imports: o.header().imports.iter().map(|i| i.as_str().to_string()).collect(),
    };

    if opts.groups.contains(&FeatureGroup::Size) {
        for (id, v) in size_features(o).entries() {
            push(id, v.into());
        }
    }

    if opts.groups.contains(&FeatureGroup::Expressivity) {
        let report = owl_profile(o);
        metadata.profile_tie_broken = report.tie_broken;
        push("OPR", report.label.as_str().to_string().into());
        push("DFN", dl_family_name(o).as_str().to_string().into());
    }

    if opts.groups.contains(&FeatureGroup::Structural) {
        let ch = build_class_hierarchy(o);
        let ph = build_property_hierarchy(o);
        for (prefix, h) in [("C", &ch), ("P", &ph)] {
            let f = hierarchy_features(h);
            push(&format!("{prefix}_MD"), f.max_depth.into());
            push(&format!("{prefix}_MSB"), f.max_children.into());
            push(&format!("{prefix}_ASB"), f.mean_children.into());
            push(&format!("{prefix}_Tangledness"), f.tangled.into());
            push(&format!("{prefix}_MTangledness"), f.max_parents.into());
        }
        let c = cohesion_features(o, &ch, &ph, opts.ocoh_weights);
        push("CCOH", c.ccoh.into());
        push("PCOH", c.pcoh.into());
        push("OPCOH", c.opcoh.into());
        push("OCOH", c.ocoh.into());
        let r = richness_features(o, &ch);
        push("RRichness", r.relationship.into());
        push("AttrRichness", r.attribute.into());
    }

    if opts.groups.contains(&FeatureGroup::Syntactic) {
        let a = axiom_level_features(o);
        push("RTBx", a.rtbx.into());
        push("RRBx", a.rrbx.into());
        push("RABx", a.rabx.into());
        for (t, v) in AxiomType::ALL.iter().zip(&a.atf) {
            push(&format!("ATF_{}", t.name()), (*v).into());
        }
        push("AMP", a.amp.into());
        push("AAP", a.aap.into());

        let c = constructor_features(o);
        for (cc, v) in Constructor::ALL.iter().zip(&c.ccf) {
            push(&format!("CCF_{}", cc.name()), (*v).into());
        }
        push("OCCD", c.occd.into());
        let p = pattern_counts(o);
        push("IU", p.iu.into());
        push("EUvI", p.euvi.into());
        push("CUvI", p.cuvi.into());

        let cl = class_level_features(o, &cyclic_classes(o));
        push("PCD", cl.pcd.into());
        push("NPCD", cl.npcd.into());
        push("GCI", cl.gci.into());
        push("CCyc", cl.ccyc.into());
        push("CDIJ", cl.cdij.into());
        push("CNOM", cl.cnom.into());

        let pl = property_level_features(o);
        for (name, v) in OPC.iter().zip(&pl.opcf) {
            push(&format!("OPCF_{name}"), (*v).into());
        }
        push("HVC_Min", (pl.hvc_min as usize).into());
        push("HVC_Max", (pl.hvc_max as usize).into());
        push("HVC_Exact", (pl.hvc_exact as usize).into());
        push("AVC", pl.avc.into());

        let il = individual_level_features(o);
        push("NomTB", il.nom_tb.into());
        push("TBNom", il.tb_nom.into());
        push("IDISJ", il.idisj.into());
        push("ISAM", il.isam.into());
    }

    FeatureVector::new(out, metadata)
}
