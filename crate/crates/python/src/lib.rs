use std::path::PathBuf;

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ontoprof::corpus::{self, OnError, OutputFormat, RunConfig};
use ontoprof::expressivity::{dl_family_name, owl_profile};
use ontoprof::features::{self, FeatureGroup, FeatureOptions, FeatureValue, FeatureVector};
use ontoprof::hierarchy;
use ontoprof::parser::{self, SourceDocument};

/// A parsed OWL 2 ontology.
#[pyclass(module = "ontoprof", frozen)]
struct Ontology {
    inner: ontoprof::model::Ontology,
    warnings: Vec<String>,
}

fn parse_doc(doc: &SourceDocument) -> PyResult<Ontology> {
    match parser::parse_ontology(doc) {
        Ok(parsed) => Ok(Ontology {
            inner: parsed.ontology,
            warnings: parsed.warnings.iter().map(|w| w.render(&doc.origin)).collect(),
        }),
        Err(e) => Err(PyValueError::new_err(e.first().render(&doc.origin))),
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &FeatureValue) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        FeatureValue::Numeric(x) => x.into_pyobject(py)?.into_any(),
        FeatureValue::Categorical(s) => s.into_pyobject(py)?.into_any(),
    })
}

fn vector_to_dict<'py>(py: Python<'py>, v: &FeatureVector) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (id, value) in v.entries() {
        d.set_item(id, value_to_py(py, value)?)?;
    }
    Ok(d)
}

fn parse_groups(groups: Option<Vec<String>>) -> PyResult<Option<Vec<FeatureGroup>>> {
    groups
        .map(|gs| {
            gs.iter()
                .map(|g| {
                    g.parse::<FeatureGroup>().map_err(|e| PyValueError::new_err(format!("unknown group '{}'", e.0)))
                })
                .collect()
        })
        .transpose()
}

#[pymethods]
impl Ontology {
    #[getter]
    fn iri(&self) -> Option<String> {
        self.inner.header().iri.as_ref().map(|i| i.as_str().to_string())
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.warnings.clone()
    }

    #[getter]
    fn imports(&self) -> Vec<String> {
        self.inner.header().imports.iter().map(|i| i.as_str().to_string()).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.axioms().len()
    }

    fn __repr__(&self) -> String {
        format!("<Ontology {} axioms>", self.inner.axioms().len())
    }

    /// Counts of named entities per kind.
    fn signature<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = self.inner.signature();
        let d = PyDict::new(py);
        d.set_item("classes", s.classes.len())?;
        d.set_item("object_properties", s.object_properties.len())?;
        d.set_item("data_properties", s.data_properties.len())?;
        d.set_item("individuals", s.individuals.len())?;
        d.set_item("datatypes", s.datatypes.len())?;
        d.set_item("annotation_properties", s.annotation_properties.len())?;
        Ok(d)
    }

    fn serialize(&self) -> String {
        parser::serialize(&self.inner)
    }

    #[pyo3(signature = (groups=None, ocoh_weights=None))]
    fn features<'py>(
        &self,
        py: Python<'py>,
        groups: Option<Vec<String>>,
        ocoh_weights: Option<[f64; 3]>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let mut opts = match parse_groups(groups)? {
            Some(gs) => FeatureOptions::with_groups(gs),
            None => FeatureOptions::default(),
        };
        if let Some(w) = ocoh_weights {
            if w.iter().any(|x| *x < 0.0) || w.iter().sum::<f64>() <= 0.0 {
                return Err(PyValueError::new_err("ocoh_weights must be non-negative with a positive sum"));
            }
            opts.ocoh_weights = w;
        }
        vector_to_dict(py, &features::extract(&self.inner, &opts))
    }

    /// Profile label: EL, QL, RL, PFULL or PNAN.
    fn profile(&self) -> &'static str {
        owl_profile(&self.inner).label.as_str()
    }

    /// Label, per-profile violations and the tie-break flag.
    fn profile_report<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = owl_profile(&self.inner);
        let d = PyDict::new(py);
        d.set_item("label", r.label.as_str())?;
        d.set_item("tie_broken", r.tie_broken)?;
        let checks = PyDict::new(py);
        for c in &r.checks {
            checks.set_item(c.profile.name(), c.violation.clone())?;
        }
        d.set_item("violations", checks)?;
        Ok(d)
    }

    fn dl_name(&self) -> String {
        dl_family_name(&self.inner).as_str().to_string()
    }

    fn cyclic_classes(&self) -> Vec<String> {
        hierarchy::cyclic_classes(&self.inner).iter().map(|i| i.as_str().to_string()).collect()
    }
}

#[pyfunction]
#[pyo3(signature = (text, origin="<string>"))]
fn parse(text: &str, origin: &str) -> PyResult<Ontology> {
    parse_doc(&SourceDocument::new(text, origin))
}

#[pyfunction]
fn load(path: PathBuf) -> PyResult<Ontology> {
    let doc = SourceDocument::from_path(&path).map_err(|e| PyIOError::new_err(format!("{}: {e}", path.display())))?;
    parse_doc(&doc)
}

#[pyfunction]
fn schema_json() -> String {
    features::schema_json()
}

#[pyfunction]
fn feature_ids() -> Vec<&'static str> {
    features::schema().iter().map(|s| s.id.as_str()).collect()
}

/// Outcome of a corpus run.
#[pyclass(module = "ontoprof", frozen, get_all)]
struct CorpusResult {
    matrix: String,
    report: String,
    ok: usize,
    parse_error: usize,
    timeout: usize,
    io_error: usize,
    aborted: bool,
}

#[pymethods]
impl CorpusResult {
    fn __repr__(&self) -> String {
        format!(
            "<CorpusResult ok={} parse_error={} timeout={} io_error={} aborted={}>",
            self.ok, self.parse_error, self.timeout, self.io_error, self.aborted
        )
    }
}

#[pyfunction]
#[pyo3(signature = (inputs, *, format="csv", groups=None, jobs=None, timeout=None, on_error="skip", follow_imports=false))]
#[allow(clippy::too_many_arguments)]
fn run_corpus(
    py: Python<'_>,
    inputs: Vec<PathBuf>,
    format: &str,
    groups: Option<Vec<String>>,
    jobs: Option<usize>,
    timeout: Option<f64>,
    on_error: &str,
    follow_imports: bool,
) -> PyResult<CorpusResult> {
    let mut config = RunConfig { inputs, follow_imports, ..RunConfig::default() };
    config.format = format.parse::<OutputFormat>().map_err(PyValueError::new_err)?;
    config.on_error = on_error.parse::<OnError>().map_err(PyValueError::new_err)?;
    if let Some(gs) = parse_groups(groups)? {
        config.feature_groups = gs;
    }
    if let Some(j) = jobs {
        config.parallelism = j;
    }
    if let Some(t) = timeout {
        config.per_file_timeout = t;
    }
    let report = py.detach(|| corpus::run(&config)).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let matrix =
        corpus::emit_matrix(&report.vectors(), config.format).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(CorpusResult {
        matrix: String::from_utf8(matrix).expect("matrix is UTF-8"),
        report: report.to_json(),
        ok: report.totals.ok,
        parse_error: report.totals.parse_error,
        timeout: report.totals.timeout,
        io_error: report.totals.io_error,
        aborted: report.aborted,
    })
}

#[pymodule]
#[pyo3(name = "ontoprof")]
fn ontoprof_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("SCHEMA_VERSION", features::SCHEMA_VERSION)?;
    m.add_class::<Ontology>()?;
    m.add_class::<CorpusResult>()?;
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(load, m)?)?;
    m.add_function(wrap_pyfunction!(schema_json, m)?)?;
    m.add_function(wrap_pyfunction!(feature_ids, m)?)?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    Ok(())
}
