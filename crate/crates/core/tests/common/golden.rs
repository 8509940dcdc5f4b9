//! Hand-derived fixtures in `tests/fixtures`: `NAME.ofn` with its expected
//! nonzero features in `NAME.expected`.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use ontoprof::features::{extract_all, schema, ValueDomain};
use ontoprof::model::Ontology;
use ontoprof::parser::parse_str;

pub fn dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixtures() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "ofn"))
        .collect();
    out.sort();
    out
}

pub fn load(name: &str) -> Ontology {
    parse_str(&std::fs::read_to_string(dir().join(format!("{name}.ofn"))).unwrap()).unwrap()
}

fn parse_value(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((n, d)) => Some(n.trim().parse::<f64>().ok()? / d.trim().parse::<f64>().ok()?),
        None => s.parse().ok(),
    }
}

/// `ID = value` lines; values are numbers, `n/d` fractions or labels.
fn expected(path: &Path) -> BTreeMap<String, String> {
    std::fs::read_to_string(path.with_extension("expected"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (k, v) = l.split_once('=').unwrap_or_else(|| panic!("bad line {l:?}"));
            (k.trim().to_string(), v.trim().to_string())
        })
        .collect()
}

/// Mismatches between every fixture and its expected vector. Unlisted
/// numeric features must be 0; counts compare exactly, ratios to 1e-9.
pub fn check_all() -> Vec<String> {
    let mut failures = Vec::new();
    for path in &fixtures() {
        let name = path.file_stem().unwrap().to_string_lossy().to_string();
        let o = match parse_str(&std::fs::read_to_string(path).unwrap()) {
            Ok(o) => o,
            Err(e) => {
                failures.push(format!("{name}: {e:?}"));
                continue;
            }
        };
        let n = o.axioms().len();
        if !(5..=30).contains(&n) {
            failures.push(format!("{name} has {n} axioms"));
        }
        let mut exp = expected(path);
        let v = extract_all(&o);
        if let Some(t) = exp.remove("tie_broken") {
            if v.metadata.profile_tie_broken.to_string() != t {
                failures.push(format!("{name}: tie_broken {} != {t}", v.metadata.profile_tie_broken));
            }
        }
        for key in exp.keys().filter(|k| v.get(k).is_none()) {
            failures.push(format!("{name}: unknown feature {key}"));
        }
        for (spec, (id, value)) in schema().iter().zip(v.entries()) {
            let want = exp.get(id.as_str());
            match (spec.domain, value.as_f64()) {
                (ValueDomain::Categorical, _) => {
                    let got = value.as_str().unwrap_or_default();
                    if want.map(String::as_str) != Some(got) {
                        failures.push(format!("{name}: {id} = {got}, expected {want:?}"));
                    }
                }
                (domain, Some(got)) => {
                    let w = want.map_or(0.0, |s| parse_value(s).unwrap());
                    let ok = if domain == ValueDomain::Count { got == w } else { (got - w).abs() <= 1e-9 };
                    if !ok {
                        failures.push(format!("{name}: {id} = {got}, expected {w}"));
                    }
                }
                (_, None) => failures.push(format!("{name}: {id} is not numeric")),
            }
        }
    }
    failures
}
