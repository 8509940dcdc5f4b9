use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use ontoprof::corpus::{self, ConfigFile, OnError, Outcome, OutputFormat, RunConfig};
use ontoprof::features::{schema_json, FeatureGroup};
use ontoprof::parser::{parse_ontology, SourceDocument};

const EXIT_USAGE: u8 = 1;
const EXIT_FAILED: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "ontoprof", version, about = "Feature extraction for OWL 2 functional-syntax ontologies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Extract feature vectors from files or directories of .ofn files
    Extract(ExtractArgs),
    /// Print the feature schema as JSON
    Schema,
    /// Parse one file and print its diagnostics
    Check { file: PathBuf },
}

#[derive(clap::Args, Debug)]
struct ExtractArgs {
    /// Matrix output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    format: Option<OutputFormat>,
    /// Comma-separated subset of size,expressivity,structural,syntactic
    #[arg(long, value_delimiter = ',')]
    groups: Option<Vec<FeatureGroup>>,
    /// Per-file timeout in seconds
    #[arg(long)]
    timeout: Option<f64>,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_parser = parse_on_error)]
    on_error: Option<OnError>,
    /// Merge imports that resolve to local files
    #[arg(long)]
    follow_imports: bool,
    /// TOML config file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Run report path (defaults to <out>.report.json when --out is given)
    #[arg(long)]
    report: Option<PathBuf>,
    inputs: Vec<PathBuf>,
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

fn parse_on_error(s: &str) -> Result<OnError, String> {
    s.parse()
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Extract(args) => extract(args),
        Command::Schema => {
            print!("{}", schema_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file } => check(&file),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(EXIT_USAGE)
    })
}

fn build_config(args: &ExtractArgs) -> anyhow::Result<RunConfig> {
    let mut config = RunConfig::default();
    if let Some(path) = &args.config {
        config = ConfigFile::load(path)?.apply(config);
    }
    if !args.inputs.is_empty() {
        config.inputs = args.inputs.clone();
    }
    if let Some(v) = &args.out {
        config.output_path = Some(v.clone());
    }
    if let Some(v) = args.format {
        config.format = v;
    }
    if let Some(v) = &args.groups {
        config.feature_groups = v.clone();
    }
    if let Some(v) = args.timeout {
        config.per_file_timeout = v;
    }
    if let Some(v) = args.jobs {
        config.parallelism = v;
    }
    if let Some(v) = args.on_error {
        config.on_error = v;
    }
    config.follow_imports |= args.follow_imports;
    if config.inputs.is_empty() {
        anyhow::bail!("no inputs given");
    }
    config.validate()?;
    Ok(config)
}

fn report_path(args: &ExtractArgs, config: &RunConfig) -> Option<PathBuf> {
    args.report.clone().or_else(|| {
        config.output_path.as_ref().map(|out| {
            let mut name = out.as_os_str().to_owned();
            name.push(".report.json");
            PathBuf::from(name)
        })
    })
}

fn extract(args: ExtractArgs) -> anyhow::Result<ExitCode> {
    let config = build_config(&args)?;
    let report = corpus::run(&config)?;

    for f in &report.files {
        let origin = f.ontology_id();
        match &f.outcome {
            Outcome::ParseError(ds) => ds.iter().for_each(|d| eprintln!("{}", d.render(&origin))),
            Outcome::IoError(m) => eprintln!("{origin}: io error: {m}"),
            Outcome::Timeout => eprintln!("{origin}: timed out after {}s", config.per_file_timeout),
            Outcome::Ok(_) => {}
        }
        f.warnings.iter().for_each(|d| eprintln!("{}", d.render(&origin)));
    }
    let t = &report.totals;
    eprintln!(
        "{} files: {} ok, {} parse errors, {} timeouts, {} io errors{}",
        t.discovered,
        t.ok,
        t.parse_error,
        t.timeout,
        t.io_error,
        if report.aborted { " (aborted)" } else { "" }
    );

    if let Some(path) = report_path(&args, &config) {
        write_file(&path, report.to_json().as_bytes())?;
    }
    if report.failed() {
        return Ok(ExitCode::from(EXIT_FAILED));
    }
    let matrix = corpus::emit_matrix(&report.vectors(), config.format)?;
    match &config.output_path {
        Some(path) => write_file(path, &matrix)?,
        None => std::io::stdout().write_all(&matrix).context("writing matrix")?,
    }
    Ok(ExitCode::SUCCESS)
}

fn write_file(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

fn check(file: &Path) -> anyhow::Result<ExitCode> {
    let doc = SourceDocument::from_path(file).with_context(|| format!("reading {}", file.display()))?;
    match parse_ontology(&doc) {
        Ok(parsed) => {
            for w in &parsed.warnings {
                eprintln!("{}", w.render(&doc.origin));
            }
            println!("{}: ok, {} axioms", doc.origin, parsed.ontology.axioms().len());
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            for d in &e.diagnostics {
                eprintln!("{}", d.render(&doc.origin));
            }
            Ok(ExitCode::from(EXIT_FAILED))
        }
    }
}
