//! Expressivity features: OWL 2 profile label and DL family name.

mod dl_name;
mod profile;

pub use dl_name::{dl_family_name, DlFlags, DlName};
pub use profile::{
    non_simple_properties, owl_profile, Profile, ProfileCheck, ProfileLabel, ProfileReport, RuleTable, RuleTableError,
};
