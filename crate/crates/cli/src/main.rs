use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dissect_core::complex::DEFAULT_FACE_LIMIT;
use dissect_core::{ComplexParams, Family};

mod commands;
mod document;
mod render;
mod report;
mod verify;

use commands::{Limits, Subject};
use report::{ReportDocument, Status};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] dissect_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(dissect_core::Error::ResourceLimit { .. }) => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dissect", version, about = "Generalized cluster complexes as polygon dissections")]
struct Cli {
    /// Output format of the report.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Refuse to enumerate more faces than this.
    #[arg(long, env = "DISSECT_MAX_FACES", default_value_t = DEFAULT_FACE_LIMIT, global = true)]
    max_faces: u64,
    /// Memo entries allowed in the vertex-decomposition search.
    #[arg(long, env = "DISSECT_MEMO_LIMIT", default_value_t = 2_000_000, global = true)]
    memo_limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: u32,
}

impl ParamArgs {
    fn params(&self) -> Result<ComplexParams, CliError> {
        let family = match self.family {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
        };
        Ok(ComplexParams::new(family, self.m, self.n)?)
    }
}

#[derive(Debug, Args)]
struct SubjectArgs {
    #[arg(long, value_enum, requires_all = ["m", "n"], conflicts_with = "input")]
    family: Option<FamilyArg>,
    #[arg(long, requires = "family")]
    m: Option<u32>,
    #[arg(long, requires = "family")]
    n: Option<u32>,
    /// Facet list to analyse instead of a dissection complex.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl SubjectArgs {
    fn subject(&self) -> Result<Subject, CliError> {
        let params = match (self.family, self.m, self.n) {
            (Some(family), Some(m), Some(n)) => Some(ParamArgs { family, m, n }.params()?),
            _ => None,
        };
        Subject::load(params, self.input.as_deref())
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form face numbers, h-vector and derived quantities.
    Count(ParamArgs),
    /// Enumerate faces by brute force.
    Enumerate {
        #[command(flatten)]
        params: ParamArgs,
        /// Only faces with at most this many diagonals.
        #[arg(long)]
        max_size: Option<usize>,
        /// Report only the counts.
        #[arg(long)]
        counts_only: bool,
    },
    /// List the facets, optionally exporting them as a facet list.
    Facets {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Apply the bijection to faces read from a file, or to every facet.
    Encode {
        /// A face document or an array of them.
        #[arg(long, conflicts_with_all = ["family", "m", "n"])]
        input: Option<PathBuf>,
        #[arg(long, value_enum, requires_all = ["m", "n"])]
        family: Option<FamilyArg>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
    },
    /// Invert the bijection.
    Decode {
        /// Comma-separated weakly increasing labels.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Comma-separated 0/1 flags.
        #[arg(long)]
        eps: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Search and verify a vertex decomposition and the derived shelling.
    Shelling {
        #[command(flatten)]
        subject: SubjectArgs,
        /// Include the full shelling order.
        #[arg(long)]
        show_order: bool,
    },
    /// Reduced Betti numbers.
    Homology(SubjectArgs),
    /// Run invariant suites against brute-force enumeration.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
    },
    /// Draw a face document as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
    },
}

enum Output {
    Report(Box<ReportDocument>),
    Text(String),
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let limits = Limits { faces: cli.max_faces, memo: cli.memo_limit };
    let report = match &cli.command {
        Command::Count(p) => commands::count(&p.params()?)?,
        Command::Enumerate { params, max_size, counts_only } => {
            commands::enumerate(&params.params()?, *max_size, !counts_only, &limits)?
        }
        Command::Facets { params, export } => commands::facets(&params.params()?, export.as_deref(), &limits)?,
        Command::Encode { input: Some(path), .. } => commands::encode_faces(&commands::load_documents(path)?)?,
        Command::Encode { family: Some(family), m: Some(m), n: Some(n), .. } => {
            commands::encode_facets(&ParamArgs { family: *family, m: *m, n: *n }.params()?, &limits)?
        }
        Command::Encode { .. } => return Err(CliError::Usage("give --input or --family/--m/--n".into())),
        Command::Decode { a, eps, m, n } => commands::decode_image(a, eps, *m, *n)?,
        Command::Shelling { subject, show_order } => commands::shelling(subject.subject()?, *show_order, &limits)?,
        Command::Homology(subject) => commands::homology(subject.subject()?, &limits)?,
        Command::Verify { params, suite } => verify::verify(&params.params()?, *suite, &limits)?,
        Command::Render { input } => {
            let docs = commands::load_documents(input)?;
            let [doc] = docs.as_slice() else {
                return Err(CliError::Usage(format!("{} must hold exactly one face", input.display())));
            };
            return Ok(Output::Text(render::render_svg(&doc.to_face()?)));
        }
    };
    Ok(Output::Report(Box::new(report)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (text, code) = match run(&cli) {
        Ok(Output::Text(svg)) => (svg, 0),
        Ok(Output::Report(mut report)) => {
            if cli.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            let code = if report.status == Status::Pass { 0 } else { EXIT_VIOLATION };
            let text = match cli.format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            (text, code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if let Err(e) = report::emit(&text, cli.output.as_deref()) {
        eprintln!("error: writing output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    ExitCode::from(code)
}
