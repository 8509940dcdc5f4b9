//! Corpus runs: discover `.ofn` files, extract one vector per file under a
//! worker pool with per-file timeouts, and emit feature matrices.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{mpsc, Arc, Mutex};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::features::{extract, FeatureGroup, FeatureOptions, FeatureVector, SCHEMA_VERSION};
use crate::model::Ontology;
use crate::parser::{parse_ontology, Diagnostic, SourceDocument};

pub const DEFAULT_TIMEOUT_SECS: f64 = 300.0;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}' (expected csv or json)")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OnError {
    #[default]
    Skip,
    Abort,
}

impl FromStr for OnError {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "skip" => Ok(OnError::Skip),
            "abort" => Ok(OnError::Abort),
            other => Err(format!("unknown on-error policy '{other}' (expected skip or abort)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {message}")]
    Read { path: String, message: String },
    #[error("invalid config {path}: {message}")]
    Parse { path: String, message: String },
    #[error("jobs must be at least 1")]
    Parallelism,
    #[error("timeout must be a positive number of seconds")]
    Timeout,
    #[error("ocoh_weights must be non-negative with a positive sum")]
    Weights,
    #[error("no feature groups selected")]
    NoGroups,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub output_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub feature_groups: Vec<FeatureGroup>,
    /// Seconds.
    pub per_file_timeout: f64,
    pub parallelism: usize,
    pub on_error: OnError,
    pub follow_imports: bool,
    pub ocoh_weights: [f64; 3],
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            inputs: Vec::new(),
            output_path: None,
            format: OutputFormat::Csv,
            feature_groups: FeatureGroup::ALL.to_vec(),
            per_file_timeout: DEFAULT_TIMEOUT_SECS,
            parallelism: std::thread::available_parallelism().map_or(1, |n| n.get()),
            on_error: OnError::Skip,
            follow_imports: false,
            ocoh_weights: [1.0 / 3.0; 3],
        }
    }
}

/// On-disk config. Every key is optional; see the README for the format.
#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub inputs: Option<Vec<PathBuf>>,
    pub output: Option<PathBuf>,
    pub format: Option<OutputFormat>,
    pub groups: Option<Vec<FeatureGroup>>,
    pub timeout: Option<f64>,
    pub jobs: Option<usize>,
    pub on_error: Option<OnError>,
    pub follow_imports: Option<bool>,
    pub ocoh_weights: Option<[f64; 3]>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Read { path: path.display().to_string(), message: e.to_string() })?;
        Self::parse(&text).map_err(|message| ConfigError::Parse { path: path.display().to_string(), message })
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        toml::from_str(text).map_err(|e| e.to_string())
    }

    /// Overlays the file's settings on `base`.
    pub fn apply(&self, mut base: RunConfig) -> RunConfig {
        if let Some(v) = &self.inputs {
            base.inputs = v.clone();
        }
        if let Some(v) = &self.output {
            base.output_path = Some(v.clone());
        }
        if let Some(v) = self.format {
            base.format = v;
        }
        if let Some(v) = &self.groups {
            base.feature_groups = v.clone();
        }
        if let Some(v) = self.timeout {
            base.per_file_timeout = v;
        }
        if let Some(v) = self.jobs {
            base.parallelism = v;
        }
        if let Some(v) = self.on_error {
            base.on_error = v;
        }
        if let Some(v) = self.follow_imports {
            base.follow_imports = v;
        }
        if let Some(v) = self.ocoh_weights {
            base.ocoh_weights = v;
        }
        base
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.parallelism == 0 {
            return Err(ConfigError::Parallelism);
        }
        if !(self.per_file_timeout > 0.0 && self.per_file_timeout.is_finite()) {
            return Err(ConfigError::Timeout);
        }
        if self.ocoh_weights.iter().any(|w| *w < 0.0 || !w.is_finite()) || self.ocoh_weights.iter().sum::<f64>() <= 0.0
        {
            return Err(ConfigError::Weights);
        }
        if self.feature_groups.is_empty() {
            return Err(ConfigError::NoGroups);
        }
        Ok(())
    }

    pub fn feature_options(&self) -> FeatureOptions {
        FeatureOptions { groups: self.feature_groups.iter().copied().collect(), ocoh_weights: self.ocoh_weights }
    }
}

/// A discovered input, or a path that could not be read.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Input {
    File(PathBuf),
    Unreadable { path: PathBuf, message: String },
}

impl Input {
    pub fn path(&self) -> &Path {
        match self {
            Input::File(p) | Input::Unreadable { path: p, .. } => p,
        }
    }
}

/// Files named directly are kept whatever their extension; directories are
/// walked recursively for `.ofn` files. The result is sorted by path with
/// duplicates removed.
pub fn discover_inputs(paths: &[PathBuf]) -> Vec<Input> {
    let mut found: BTreeSet<Input> = BTreeSet::new();
    for p in paths {
        match std::fs::metadata(p) {
            Ok(m) if m.is_dir() => {
                for entry in walkdir::WalkDir::new(p).sort_by_file_name() {
                    match entry {
                        Ok(e) if e.file_type().is_file() && e.path().extension().is_some_and(|x| x == "ofn") => {
                            found.insert(Input::File(e.into_path()));
                        }
                        Ok(_) => {}
                        Err(e) => {
                            let path = e.path().map_or_else(|| p.clone(), Path::to_path_buf);
                            found.insert(Input::Unreadable { path, message: e.to_string() });
                        }
                    }
                }
            }
            Ok(_) => {
                found.insert(Input::File(p.clone()));
            }
            Err(e) => {
                found.insert(Input::Unreadable { path: p.clone(), message: e.to_string() });
            }
        }
    }
    let mut out: Vec<Input> = found.into_iter().collect();
    out.sort_by(|a, b| a.path().cmp(b.path()));
    out.dedup_by(|a, b| a.path() == b.path());
    out
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Ok(Box<FeatureVector>),
    ParseError(Vec<Diagnostic>),
    Timeout,
    IoError(String),
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Ok(_) => "ok",
            Outcome::ParseError(_) => "parse_error",
            Outcome::Timeout => "timeout",
            Outcome::IoError(_) => "io_error",
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Outcome::Ok(_))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FileOutcome {
    pub path: PathBuf,
    pub outcome: Outcome,
    /// Parser warnings for files that parsed.
    pub warnings: Vec<Diagnostic>,
    pub unresolved_imports: Vec<String>,
}

impl FileOutcome {
    pub fn ontology_id(&self) -> String {
        self.path.display().to_string()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub discovered: usize,
    pub ok: usize,
    pub parse_error: usize,
    pub timeout: usize,
    pub io_error: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusReport {
    pub schema_version: String,
    pub config: RunConfig,
    /// In discovery order. An aborted run lists only the files it reached.
    pub files: Vec<FileOutcome>,
    pub totals: Totals,
    pub aborted: bool,
    pub wall_time: Duration,
}

#[derive(Serialize)]
struct FileJson<'a> {
    path: String,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<&'a str>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    diagnostics: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    anonymous_individuals: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    profile_tie_broken: Option<bool>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    imports: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    unresolved_imports: Vec<String>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema_version: &'a str,
    config: &'a RunConfig,
    totals: &'a Totals,
    aborted: bool,
    wall_time_secs: f64,
    files: Vec<FileJson<'a>>,
}

impl CorpusReport {
    /// Rows for the feature matrix, in discovery order.
    pub fn vectors(&self) -> Vec<(String, &FeatureVector)> {
        self.files
            .iter()
            .filter_map(|f| match &f.outcome {
                Outcome::Ok(v) => Some((f.ontology_id(), &**v)),
                _ => None,
            })
            .collect()
    }

    /// Whether the run should exit non-zero.
    pub fn failed(&self) -> bool {
        self.aborted
    }

    pub fn to_json(&self) -> String {
        let files = self
            .files
            .iter()
            .map(|f| {
                let origin = f.ontology_id();
                let render = |ds: &[Diagnostic]| ds.iter().map(|d| d.render(&origin)).collect::<Vec<_>>();
                let (message, diagnostics, meta) = match &f.outcome {
                    Outcome::Ok(v) => (None, Vec::new(), Some(&v.metadata)),
                    Outcome::ParseError(ds) => (None, render(ds), None),
                    Outcome::Timeout => (None, Vec::new(), None),
                    Outcome::IoError(m) => (Some(m.as_str()), Vec::new(), None),
                };
                FileJson {
                    path: origin.clone(),
                    status: f.outcome.status(),
                    message,
                    diagnostics,
                    warnings: render(&f.warnings),
                    anonymous_individuals: meta.map(|m| m.anonymous_individuals),
                    profile_tie_broken: meta.map(|m| m.profile_tie_broken),
                    imports: meta.map(|m| m.imports.clone()).unwrap_or_default(),
                    unresolved_imports: f.unresolved_imports.clone(),
                }
            })
            .collect();
        let doc = ReportJson {
            schema_version: &self.schema_version,
            config: &self.config,
            totals: &self.totals,
            aborted: self.aborted,
            wall_time_secs: self.wall_time.as_secs_f64(),
            files,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Turns one input file into an outcome. Swappable for tests.
pub type Processor = Arc<dyn Fn(&Path, &RunConfig) -> FileOutcome + Send + Sync>;

pub fn default_processor() -> Processor {
    Arc::new(process_file)
}

/// Reads, parses (following local imports when configured) and extracts.
pub fn process_file(path: &Path, config: &RunConfig) -> FileOutcome {
    let mut out = FileOutcome {
        path: path.to_path_buf(),
        outcome: Outcome::Timeout,
        warnings: Vec::new(),
        unresolved_imports: Vec::new(),
    };
    let doc = match SourceDocument::from_path(path) {
        Ok(d) => d,
        Err(e) => {
            out.outcome = Outcome::IoError(e.to_string());
            return out;
        }
    };
    let parsed = match parse_ontology(&doc) {
        Ok(p) => p,
        Err(e) => {
            out.outcome = Outcome::ParseError(e.diagnostics);
            return out;
        }
    };
    out.warnings = parsed.warnings;
    let mut ontology = parsed.ontology;
    if config.follow_imports {
        match merge_local_imports(path, ontology) {
            Ok((merged, unresolved)) => {
                ontology = merged;
                out.unresolved_imports = unresolved;
            }
            Err(outcome) => {
                out.outcome = outcome;
                return out;
            }
        }
    }
    out.outcome = Outcome::Ok(Box::new(extract(&ontology, &config.feature_options())));
    out
}

/// Local file path for an import IRI: `file:` IRIs, or relative references
/// resolved against the importing file's directory.
fn local_import(base: &Path, iri: &str) -> Option<PathBuf> {
    let candidate = if let Some(rest) = iri.strip_prefix("file://") {
        PathBuf::from(rest)
    } else if let Some(rest) = iri.strip_prefix("file:") {
        PathBuf::from(rest)
    } else if iri.contains(':') {
        return None;
    } else {
        base.parent().unwrap_or(Path::new(".")).join(iri)
    };
    candidate.is_file().then_some(candidate)
}

/// Adds the axioms of every reachable local import to `root`. Remote
/// imports are returned as unresolved.
pub fn merge_local_imports(path: &Path, root: Ontology) -> Result<(Ontology, Vec<String>), Outcome> {
    let (header, mut axioms) = root.into_parts();
    let mut unresolved = Vec::new();
    let mut seen: BTreeSet<PathBuf> = BTreeSet::new();
    seen.insert(path.canonicalize().unwrap_or_else(|_| path.to_path_buf()));
    let mut queue: Vec<(PathBuf, String)> =
        header.imports.iter().map(|i| (path.to_path_buf(), i.as_str().to_string())).collect();
    while let Some((base, iri)) = queue.pop() {
        let Some(file) = local_import(&base, &iri) else {
            unresolved.push(iri);
            continue;
        };
        if !seen.insert(file.canonicalize().unwrap_or_else(|_| file.clone())) {
            continue;
        }
        let doc = SourceDocument::from_path(&file).map_err(|e| Outcome::IoError(format!("{}: {e}", file.display())))?;
        let parsed = parse_ontology(&doc).map_err(|e| Outcome::ParseError(e.diagnostics))?;
        let (h, ax) = parsed.ontology.into_parts();
        queue.extend(h.imports.iter().map(|i| (file.clone(), i.as_str().to_string())));
        axioms.extend(ax);
    }
    unresolved.sort();
    unresolved.dedup();
    Ok((Ontology::new(header, axioms), unresolved))
}

/// Runs the corpus with the standard processor.
pub fn run(config: &RunConfig) -> Result<CorpusReport, ConfigError> {
    run_with(config, default_processor())
}

pub fn run_with(config: &RunConfig, processor: Processor) -> Result<CorpusReport, ConfigError> {
    config.validate()?;
    let started = Instant::now();
    let inputs = discover_inputs(&config.inputs);
    let n = inputs.len();
    let slots: Mutex<Vec<Option<FileOutcome>>> = Mutex::new(vec![None; n]);
    let next = AtomicUsize::new(0);
    let abort = AtomicBool::new(false);
    let timeout = Duration::from_secs_f64(config.per_file_timeout);
    let shared = Arc::new(config.clone());

    std::thread::scope(|scope| {
        for _ in 0..config.parallelism.min(n.max(1)) {
            scope.spawn(|| loop {
                if abort.load(Ordering::SeqCst) {
                    break;
                }
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= n {
                    break;
                }
                let outcome = match &inputs[i] {
                    Input::Unreadable { path, message } => FileOutcome {
                        path: path.clone(),
                        outcome: Outcome::IoError(message.clone()),
                        warnings: Vec::new(),
                        unresolved_imports: Vec::new(),
                    },
                    Input::File(path) => run_one(path, &shared, &processor, timeout),
                };
                log::debug!("{}: {}", outcome.path.display(), outcome.outcome.status());
                if !outcome.outcome.is_ok() && config.on_error == OnError::Abort {
                    abort.store(true, Ordering::SeqCst);
                }
                slots.lock().expect("result slots")[i] = Some(outcome);
            });
        }
    });

    let aborted = abort.load(Ordering::SeqCst);
    let mut files: Vec<FileOutcome> = slots.into_inner().expect("result slots").into_iter().flatten().collect();
    if aborted {
        // Keep the prefix up to the first failure so the report does not
        // depend on how far other workers got.
        if let Some(first_bad) = files.iter().position(|f| !f.outcome.is_ok()) {
            files.truncate(first_bad + 1);
        }
    }
    let mut totals = Totals { discovered: n, ..Default::default() };
    for f in &files {
        match f.outcome {
            Outcome::Ok(_) => totals.ok += 1,
            Outcome::ParseError(_) => totals.parse_error += 1,
            Outcome::Timeout => totals.timeout += 1,
            Outcome::IoError(_) => totals.io_error += 1,
        }
    }
    Ok(CorpusReport {
        schema_version: SCHEMA_VERSION.to_string(),
        config: config.clone(),
        files,
        totals,
        aborted,
        wall_time: started.elapsed(),
    })
}

/// Runs `processor` on its own thread and gives up after `timeout`. A task
/// that overruns is left detached; its result is discarded.
fn run_one(path: &Path, config: &Arc<RunConfig>, processor: &Processor, timeout: Duration) -> FileOutcome {
    let (tx, rx) = mpsc::channel();
    let (p, c, f) = (path.to_path_buf(), Arc::clone(config), Arc::clone(processor));
    let spawned = std::thread::Builder::new().name("ontoprof-file".into()).spawn(move || {
        let _ = tx.send(f(&p, &c));
    });
    let timed_out = FileOutcome {
        path: path.to_path_buf(),
        outcome: Outcome::Timeout,
        warnings: Vec::new(),
        unresolved_imports: Vec::new(),
    };
    if let Err(e) = spawned {
        return FileOutcome { outcome: Outcome::IoError(format!("cannot start worker: {e}")), ..timed_out };
    }
    match rx.recv_timeout(timeout) {
        Ok(outcome) => outcome,
        Err(mpsc::RecvTimeoutError::Timeout) => timed_out,
        Err(mpsc::RecvTimeoutError::Disconnected) => {
            FileOutcome { outcome: Outcome::IoError("extraction panicked".into()), ..timed_out }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("vector for {id} has schema {found}, expected {expected}")]
    SchemaMismatch { id: String, found: String, expected: String },
    #[error("vector for {id} has a different feature set")]
    ColumnMismatch { id: String },
}

/// Serialises vectors as a matrix. CSV: header `ontology_id` plus feature
/// ids, numbers with at most 6 decimals. JSON: an array of objects.
pub fn emit_matrix(rows: &[(String, &FeatureVector)], format: OutputFormat) -> Result<Vec<u8>, MatrixError> {
    let columns: Vec<&str> = rows.first().map(|(_, v)| v.ids().collect()).unwrap_or_default();
    for (id, v) in rows {
        if v.schema_version != SCHEMA_VERSION {
            return Err(MatrixError::SchemaMismatch {
                id: id.clone(),
                found: v.schema_version.clone(),
                expected: SCHEMA_VERSION.to_string(),
            });
        }
        if !v.ids().eq(columns.iter().copied()) {
            return Err(MatrixError::ColumnMismatch { id: id.clone() });
        }
    }
    match format {
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header = std::iter::once("ontology_id").chain(columns.iter().copied());
            w.write_record(header).expect("in-memory write");
            for (id, v) in rows {
                let values = v.entries().iter().map(|(_, val)| val.to_string());
                w.write_record(std::iter::once(id.clone()).chain(values)).expect("in-memory write");
            }
            Ok(w.into_inner().expect("in-memory flush"))
        }
        OutputFormat::Json => {
            let objects: Vec<serde_json::Value> = rows
                .iter()
                .map(|(id, v)| {
                    let mut map = serde_json::Map::new();
                    map.insert("ontology_id".into(), id.clone().into());
                    map.insert("schema_version".into(), v.schema_version.clone().into());
                    if let serde_json::Value::Object(features) = v.to_json_object() {
                        map.extend(features);
                    }
                    serde_json::Value::Object(map)
                })
                .collect();
            let mut out = serde_json::to_vec_pretty(&objects).expect("matrix serializes");
            out.push(b'\n');
            Ok(out)
        }
    }
}
