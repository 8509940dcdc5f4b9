use crate::model::Ontology;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SizeFeatures {
    pub sc: usize,
    pub sop: usize,
    pub sdp: usize,
    pub si: usize,
    pub sdt: usize,
    pub sla: usize,
    pub sa: usize,
}

pub fn size_features(o: &Ontology) -> SizeFeatures {
    let sig = o.signature();
    SizeFeatures {
        sc: sig.classes.len(),
        sop: sig.object_properties.len(),
        sdp: sig.data_properties.len(),
        si: sig.individuals.len(),
        sdt: sig.datatypes.len(),
        sla: o.logical_axioms().count(),
        sa: o.axioms().len(),
    }
}

impl SizeFeatures {
    pub fn entries(&self) -> [(&'static str, usize); 7] {
        [
            ("SC", self.sc),
            ("SOP", self.sop),
            ("SDP", self.sdp),
            ("SI", self.si),
            ("SDT", self.sdt),
            ("SLA", self.sla),
            ("SA", self.sa),
        ]
    }
}
