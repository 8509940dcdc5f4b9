use std::collections::{BTreeMap, BTreeSet};

use crate::hierarchy::definitions;
use crate::model::*;

use super::ratio;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct AxiomLevel {
    pub rtbx: f64,
    pub rrbx: f64,
    pub rabx: f64,
    /// One entry per [`AxiomType::ALL`].
    pub atf: Vec<f64>,
    pub amp: usize,
    pub aap: f64,
}

pub fn axiom_level_features(o: &Ontology) -> AxiomLevel {
    let mut per_type = vec![0usize; AxiomType::ALL.len()];
    let mut per_cat = [0usize; 3];
    let mut depth_sum = 0;
    let mut sla = 0;
    for ax in o.logical_axioms() {
        let t = ax.axiom_type().expect("logical");
        per_type[t.index()] += 1;
        match t.category() {
            AxiomCategory::TBox => per_cat[0] += 1,
            AxiomCategory::RBox => per_cat[1] += 1,
            AxiomCategory::ABox => per_cat[2] += 1,
            AxiomCategory::NonLogical => {}
        }
        depth_sum += ax.depth();
        sla += 1;
    }
    let sla_f = sla as f64;
    AxiomLevel {
        rtbx: ratio(per_cat[0] as f64, sla_f),
        rrbx: ratio(per_cat[1] as f64, sla_f),
        rabx: ratio(per_cat[2] as f64, sla_f),
        atf: per_type.iter().map(|&n| ratio(n as f64, sla_f)).collect(),
        amp: o.axioms().iter().map(Axiom::depth).max().unwrap_or(0),
        aap: ratio(depth_sum as f64, sla_f),
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ConstructorLevel {
    /// One entry per [`Constructor::ALL`].
    pub ccf: Vec<f64>,
    pub occd: f64,
}

pub fn constructor_features(o: &Ontology) -> ConstructorLevel {
    let mut counts = vec![0usize; Constructor::ALL.len()];
    let mut total = 0;
    let mut max_per_axiom = 0;
    let mut tbox = 0;
    for ax in o.tbox() {
        tbox += 1;
        let mut here = 0;
        for ce in ax.class_expressions() {
            ce.walk(&mut |e| {
                if let Some(c) = e.constructor() {
                    counts[c.index()] += 1;
                    here += 1;
                }
            });
        }
        total += here;
        max_per_axiom = max_per_axiom.max(here);
    }
    ConstructorLevel {
        ccf: counts.iter().map(|&n| ratio(n as f64, total as f64)).collect(),
        occd: ratio(total as f64, (tbox * max_per_axiom) as f64),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PatternCount {
    pub iu: usize,
    pub euvi: usize,
    pub cuvi: usize,
}

fn is_existential(e: &ClassExpression) -> bool {
    matches!(e, ClassExpression::ObjectSomeValuesFrom { .. })
}

fn is_universal(e: &ClassExpression) -> bool {
    matches!(e, ClassExpression::ObjectAllValuesFrom { .. })
}

fn is_cardinality(e: &ClassExpression) -> bool {
    e.cardinality().is_some()
}

/// Whether `ops` holds an operand matching `first` and a universal
/// restriction over the same property expression.
fn couples(ops: &[ClassExpression], first: fn(&ClassExpression) -> bool) -> bool {
    ops.iter().filter(|e| first(e)).any(|a| ops.iter().any(|b| is_universal(b) && b.property() == a.property()))
}

pub fn pattern_counts(o: &Ontology) -> PatternCount {
    let mut pc = PatternCount::default();
    // (subclass, role) -> (existentials, cardinalities, universals)
    let mut by_role: BTreeMap<(&Iri, &ObjectPropertyExpression), (usize, usize, usize)> = BTreeMap::new();
    for ax in o.tbox() {
        for ce in ax.class_expressions() {
            ce.walk(&mut |e| match e {
                ClassExpression::ObjectIntersectionOf(ops) => {
                    pc.iu += ops.iter().any(|c| matches!(c, ClassExpression::ObjectUnionOf(_))) as usize;
                    pc.euvi += couples(ops, is_existential) as usize;
                    pc.cuvi += couples(ops, is_cardinality) as usize;
                }
                ClassExpression::ObjectUnionOf(ops) => {
                    pc.iu += ops.iter().any(|c| matches!(c, ClassExpression::ObjectIntersectionOf(_))) as usize;
                }
                _ => {}
            });
        }
        if let Axiom::SubClassOf { sub: ClassExpression::Class(a), sup } = ax {
            if let Some(p) = sup.property() {
                let slot = by_role.entry((a, p)).or_default();
                if is_existential(sup) {
                    slot.0 += 1;
                } else if is_cardinality(sup) {
                    slot.1 += 1;
                } else if is_universal(sup) {
                    slot.2 += 1;
                }
            }
        }
    }
    for (ex, card, all) in by_role.into_values() {
        pc.euvi += ex * all;
        pc.cuvi += card * all;
    }
    pc
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ClassLevel {
    pub pcd: f64,
    pub npcd: f64,
    pub gci: f64,
    pub ccyc: f64,
    pub cdij: f64,
    pub cnom: f64,
}

pub fn class_level_features(o: &Ontology, cyclic: &BTreeSet<Iri>) -> ClassLevel {
    let (mut pcd, mut npcd, mut gci, mut tbox) = (0usize, 0usize, 0usize, 0usize);
    let mut disjoint: BTreeSet<&Iri> = BTreeSet::new();
    for ax in o.tbox() {
        tbox += 1;
        match ax {
            Axiom::SubClassOf { sub, .. } if sub.is_named() => pcd += 1,
            Axiom::SubClassOf { .. } => gci += 1,
            Axiom::EquivalentClasses(ops) if ops.iter().any(ClassExpression::is_named) => npcd += 1,
            Axiom::EquivalentClasses(_) => gci += 1,
            Axiom::DisjointClasses(ops) => disjoint.extend(ops.iter().filter_map(ClassExpression::as_class)),
            Axiom::DisjointUnion { class, operands } => {
                disjoint.insert(class);
                disjoint.extend(operands.iter().filter_map(ClassExpression::as_class));
            }
            _ => {}
        }
    }
    let nominal: BTreeSet<&Iri> = definitions(o)
        .into_iter()
        .filter(|(_, def)| {
            def.any(&|e| matches!(e, ClassExpression::ObjectOneOf(_) | ClassExpression::ObjectHasValue { .. }))
        })
        .map(|(a, _)| a)
        .collect();
    let t = tbox as f64;
    let sc = o.signature().classes.len() as f64;
    ClassLevel {
        pcd: ratio(pcd as f64, t),
        npcd: ratio(npcd as f64, t),
        gci: ratio(gci as f64, t),
        ccyc: ratio(cyclic.len() as f64, sc),
        cdij: ratio(disjoint.len() as f64, sc),
        cnom: ratio(nominal.len() as f64, sc),
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PropertyLevel {
    /// One entry per characteristic in [`super::schema::OPC`] order.
    pub opcf: Vec<f64>,
    pub hvc_min: u32,
    pub hvc_max: u32,
    pub hvc_exact: u32,
    pub avc: f64,
}

fn opc_index(c: PropertyCharacteristic) -> usize {
    match c {
        PropertyCharacteristic::Transitive => 0,
        PropertyCharacteristic::Symmetric => 1,
        PropertyCharacteristic::Asymmetric => 2,
        PropertyCharacteristic::Reflexive => 3,
        PropertyCharacteristic::Irreflexive => 4,
        PropertyCharacteristic::Functional => 5,
        PropertyCharacteristic::InverseFunctional => 6,
    }
}

/// Named object properties carrying each characteristic, in OPC order.
/// `Inverse` holds the operands of `InverseObjectProperties`; `Chain` the
/// super-properties of property chains.
pub fn characterised_properties(o: &Ontology) -> Vec<BTreeSet<&Iri>> {
    let mut sets = vec![BTreeSet::new(); 9];
    for ax in o.axioms() {
        match ax {
            Axiom::Characteristic(c, p) => {
                sets[opc_index(*c)].insert(p.property());
            }
            Axiom::InverseObjectProperties(a, b) => {
                sets[7].insert(a.property());
                sets[7].insert(b.property());
            }
            Axiom::SubObjectPropertyOf { sub: SubObjectProperty::Chain(_), sup } => {
                sets[8].insert(sup.property());
            }
            _ => {}
        }
    }
    sets
}

/// Occurrences of each object property name inside TBox axioms.
pub fn tbox_property_occurrences(o: &Ontology) -> BTreeMap<&Iri, usize> {
    let mut occ = BTreeMap::new();
    for ax in o.tbox() {
        ax.mentions(&mut |m| {
            if let Mention::Entity(EntityKind::ObjectProperty, iri) = m {
                *occ.entry(iri).or_insert(0) += 1;
            }
        });
    }
    occ
}

pub fn property_level_features(o: &Ontology) -> PropertyLevel {
    let occ = tbox_property_occurrences(o);
    let opco: Vec<usize> = characterised_properties(o)
        .iter()
        .map(|set| set.iter().map(|p| occ.get(p).copied().unwrap_or(0)).sum())
        .collect();
    let total: usize = opco.iter().sum();

    let (mut min, mut max, mut exact) = (0u32, 0u32, 0u32);
    let (mut sum, mut count) = (0u64, 0u64);
    for ax in o.axioms() {
        for ce in ax.class_expressions() {
            ce.walk(&mut |e| {
                let slot = match e {
                    ClassExpression::ObjectMinCardinality { n, .. } => (&mut min, *n),
                    ClassExpression::ObjectMaxCardinality { n, .. } => (&mut max, *n),
                    ClassExpression::ObjectExactCardinality { n, .. } => (&mut exact, *n),
                    _ => return,
                };
                *slot.0 = (*slot.0).max(slot.1);
                sum += u64::from(slot.1);
                count += 1;
            });
        }
    }
    PropertyLevel {
        opcf: opco.iter().map(|&n| ratio(n as f64, total as f64)).collect(),
        hvc_min: min,
        hvc_max: max,
        hvc_exact: exact,
        avc: ratio(sum as f64, count as f64),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct IndividualLevel {
    pub nom_tb: f64,
    pub tb_nom: f64,
    pub idisj: f64,
    pub isam: f64,
}

pub fn individual_level_features(o: &Ontology) -> IndividualLevel {
    let (mut occurrences, mut axioms_with, mut tbox) = (0usize, 0usize, 0usize);
    for ax in o.tbox() {
        tbox += 1;
        let mut here = 0;
        ax.mentions(&mut |m| {
            if let Mention::Entity(EntityKind::NamedIndividual, _) = m {
                here += 1;
            }
        });
        occurrences += here;
        axioms_with += (here > 0) as usize;
    }
    let mut different: BTreeSet<&Iri> = BTreeSet::new();
    let mut same: BTreeSet<&Iri> = BTreeSet::new();
    for ax in o.axioms() {
        match ax {
            Axiom::DifferentIndividuals(inds) => different.extend(inds.iter().filter_map(Individual::as_named)),
            Axiom::SameIndividual(inds) => same.extend(inds.iter().filter_map(Individual::as_named)),
            _ => {}
        }
    }
    let si = o.signature().individuals.len() as f64;
    IndividualLevel {
        nom_tb: ratio(occurrences as f64, si),
        tb_nom: ratio(axioms_with as f64, tbox as f64),
        idisj: ratio(different.len() as f64, si),
        isam: ratio(same.len() as f64, si),
    }
}
