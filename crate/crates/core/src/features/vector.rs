use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use super::schema::SCHEMA_VERSION;

#[derive(Clone, Debug, PartialEq)]
pub enum FeatureValue {
    Numeric(f64),
    Categorical(String),
}

impl FeatureValue {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            FeatureValue::Numeric(v) => Some(*v),
            FeatureValue::Categorical(_) => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            FeatureValue::Categorical(s) => Some(s),
            FeatureValue::Numeric(_) => None,
        }
    }
}

impl From<f64> for FeatureValue {
    fn from(v: f64) -> Self {
        FeatureValue::Numeric(v)
    }
}

impl From<usize> for FeatureValue {
    fn from(v: usize) -> Self {
        FeatureValue::Numeric(v as f64)
    }
}

impl From<String> for FeatureValue {
    fn from(v: String) -> Self {
        FeatureValue::Categorical(v)
    }
}

/// Decimal with at most 6 fractional digits, trailing zeros trimmed.
pub fn format_decimal(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" | "" => "0".to_string(),
        other => other.to_string(),
    }
}

impl fmt::Display for FeatureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FeatureValue::Numeric(v) => f.write_str(&format_decimal(*v)),
            FeatureValue::Categorical(s) => f.write_str(s),
        }
    }
}

impl Serialize for FeatureValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            FeatureValue::Numeric(v) => s.serialize_f64(*v),
            FeatureValue::Categorical(c) => s.serialize_str(c),
        }
    }
}

/// Run details that are not features.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VectorMetadata {
    pub anonymous_individuals: usize,
    /// OPR came from the EL > QL > RL priority.
    pub profile_tie_broken: bool,
    pub imports: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeatureVector {
    pub schema_version: String,
    entries: Vec<(String, FeatureValue)>,
    pub metadata: VectorMetadata,
}

impl FeatureVector {
    pub fn new(entries: Vec<(String, FeatureValue)>, metadata: VectorMetadata) -> Self {
        FeatureVector { schema_version: SCHEMA_VERSION.to_string(), entries, metadata }
    }

    pub fn entries(&self) -> &[(String, FeatureValue)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|(id, _)| id.as_str())
    }

    pub fn get(&self, id: &str) -> Option<&FeatureValue> {
        self.entries.iter().find(|(k, _)| k == id).map(|(_, v)| v)
    }

    /// Numeric value of `id`; panics if the feature is absent or categorical.
    pub fn num(&self, id: &str) -> f64 {
        self.get(id).and_then(FeatureValue::as_f64).unwrap_or_else(|| panic!("no numeric feature {id}"))
    }

    /// Feature values only, keyed in schema order.
    pub fn to_json_object(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("vector serializes")
    }
}

impl Serialize for FeatureVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (k, v) in &self.entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}
