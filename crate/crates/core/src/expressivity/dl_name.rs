//! Description-logic family names such as `ALC`, `SHIF` or `SROIQ(D)`.

use std::fmt;

use serde::Serialize;

use crate::model::*;

/// Constructor letters detected in an ontology. Every flag only ever turns
/// on as axioms are added.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DlFlags {
    pub complex: bool,
    pub transitive: bool,
    pub hierarchy: bool,
    pub role_axioms: bool,
    pub nominals: bool,
    pub inverse: bool,
    pub functional: bool,
    pub number: bool,
    pub qualified: bool,
    pub data: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DlName(String);

impl DlName {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for DlName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl DlFlags {
    pub fn detect(o: &Ontology) -> Self {
        let mut f = DlFlags {
            data: !o.signature().data_properties.is_empty() || !o.signature().datatypes.is_empty(),
            ..Default::default()
        };
        for ax in o.logical_axioms() {
            f.axiom(ax);
            for p in ax.object_properties() {
                f.inverse |= p.is_inverse();
            }
            for ce in ax.class_expressions() {
                ce.walk(&mut |e| f.expression(e));
            }
        }
        f
    }

    fn axiom(&mut self, ax: &Axiom) {
        use PropertyCharacteristic as PC;
        match ax {
            Axiom::DisjointUnion { .. } => self.complex = true,
            Axiom::SubObjectPropertyOf { sub: SubObjectProperty::Chain(_), .. } => self.role_axioms = true,
            Axiom::SubObjectPropertyOf { .. }
            | Axiom::EquivalentObjectProperties(_)
            | Axiom::SubDataPropertyOf { .. }
            | Axiom::EquivalentDataProperties(_) => self.hierarchy = true,
            Axiom::DisjointObjectProperties(_) => self.role_axioms = true,
            Axiom::InverseObjectProperties(..) => self.inverse = true,
            Axiom::Characteristic(c, _) => match c {
                PC::Transitive => self.transitive = true,
                PC::Functional => self.functional = true,
                PC::InverseFunctional => {
                    self.functional = true;
                    self.inverse = true;
                }
                PC::Symmetric => self.inverse = true,
                PC::Reflexive | PC::Irreflexive | PC::Asymmetric => self.role_axioms = true,
            },
            Axiom::FunctionalDataProperty(_) => self.functional = true,
            _ => {}
        }
    }

    fn expression(&mut self, e: &ClassExpression) {
        use ClassExpression as CE;
        if let Some(p) = e.property() {
            self.inverse |= p.is_inverse();
        }
        match e {
            CE::ObjectComplementOf(_) | CE::ObjectUnionOf(_) => self.complex = true,
            CE::ObjectSomeValuesFrom { filler, .. } => self.complex |= !filler.is_top(),
            CE::ObjectOneOf(_) | CE::ObjectHasValue { .. } => self.nominals = true,
            CE::ObjectHasSelf(_) => self.role_axioms = true,
            CE::ObjectMinCardinality { filler, .. }
            | CE::ObjectMaxCardinality { filler, .. }
            | CE::ObjectExactCardinality { filler, .. } => match filler {
                Some(f) if !f.is_top() => self.qualified = true,
                _ => self.number = true,
            },
            CE::Data(d) => {
                self.data = true;
                match d {
                    DataRestriction::MinCardinality { range, .. }
                    | DataRestriction::MaxCardinality { range, .. }
                    | DataRestriction::ExactCardinality { range, .. } => match range {
                        Some(DataRange::Datatype(dt)) if dt.as_str() == vocab::RDFS_LITERAL => self.number = true,
                        Some(_) => self.qualified = true,
                        None => self.number = true,
                    },
                    _ => {}
                }
            }
            _ => {}
        }
    }

    pub fn name(&self) -> DlName {
        let mut s = String::from(if self.transitive {
            "S"
        } else if self.complex {
            "ALC"
        } else {
            "AL"
        });
        if self.role_axioms {
            s.push('R');
        } else if self.hierarchy {
            s.push('H');
        }
        if self.nominals {
            s.push('O');
        }
        if self.inverse {
            s.push('I');
        }
        if self.qualified {
            s.push('Q');
        } else if self.number {
            s.push('N');
        } else if self.functional {
            s.push('F');
        }
        if self.data {
            s.push_str("(D)");
        }
        DlName(s)
    }
}

/// DFN for `o`.
pub fn dl_family_name(o: &Ontology) -> DlName {
    DlFlags::detect(o).name()
}
