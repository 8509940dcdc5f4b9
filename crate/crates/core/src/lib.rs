//! Ontology profiling: parse OWL 2 functional-style documents and compute
//! size, expressivity, structural and syntactic feature vectors.

pub mod corpus;
pub mod expressivity;
pub mod features;
pub mod hierarchy;
pub mod model;
pub mod parser;
