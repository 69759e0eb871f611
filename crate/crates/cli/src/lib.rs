//! Command-line front end for the ite workbench.

pub mod commands;
pub mod modelfile;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ite_core::Limits;

use commands::{CliError, GenSpec, IdentityTarget, Report};
use modelfile::ModelFile;

#[derive(Debug, Parser)]
#[command(name = "ite", version, about = "Finite C-algebras, C-monoids and their embeddings")]
pub struct Cli {
    /// Largest carrier any construction may build
    #[arg(long, global = true, default_value_t = Limits::default().max_carrier)]
    pub max_carrier: usize,
    /// Largest point set for functional and pointwise models
    #[arg(long, global = true, default_value_t = Limits::default().max_x)]
    pub max_x: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom checkers matching the model's kind
    Check { path: PathBuf },
    /// List the congruence lattice of the model's ada
    Congruences {
        path: PathBuf,
        /// Only the maximal proper congruences
        #[arg(long)]
        maximal: bool,
    },
    /// Embed a C-monoid into a functional one
    Embed {
        path: PathBuf,
        #[arg(long)]
        verify: bool,
        /// Write the image model here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an identity such as "%a[s, t] . u = %a[s . u, t . u]"
    Identity {
        /// [MODEL] IDENTITY
        #[arg(num_args = 1..=2, required = true, value_names = ["MODEL", "IDENTITY"])]
        args: Vec<String>,
        /// Use the functional C-monoid on this many points
        #[arg(long, conflicts_with = "universal")]
        functional: Option<usize>,
        /// Search functional models up to this many points plus the bundled examples
        #[arg(long)]
        universal: Option<usize>,
    },
    /// Generate a model file
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Reproduce every bundled verification
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// The ada 3^X
    Power {
        #[arg(long)]
        x: usize,
    },
    /// The functional C-monoid over X
    Functional {
        #[arg(long)]
        x: usize,
    },
    /// The basic C-monoid over a monoid with zero (identity first, zero last)
    Basic {
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<String>,
        /// Rows separated by '/'; the default is x . y = the later of x and y
        #[arg(long)]
        mul: Option<String>,
    },
    /// The pointwise C-monoid S^X over a monoid with zero
    Pointwise {
        #[arg(long, value_delimiter = ',', required = true)]
        elements: Vec<String>,
        #[arg(long)]
        mul: Option<String>,
        #[arg(long)]
        x: usize,
    },
}

impl Cli {
    pub fn limits(&self) -> Limits {
        Limits {
            max_carrier: self.max_carrier,
            max_x: self.max_x,
            ..Limits::default()
        }
    }
}

/// What a command produced: a report, or model text for `gen` without `--out`.
pub enum Output {
    Report(Report),
    Text(String),
}

impl Output {
    pub fn exit_code(&self) -> i32 {
        match self {
            Output::Report(r) => r.exit_code(),
            Output::Text(_) => 0,
        }
    }
}

pub fn load(path: &Path) -> Result<ModelFile, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    modelfile::parse(&text).map_err(|source| CliError::File { path: shown, source })
}

fn save(path: &Path, model: &ModelFile) -> Result<(), CliError> {
    fs::write(path, modelfile::write(model)).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let limits = cli.limits();
    let report = match &cli.command {
        Command::Check { path } => commands::cmd_check(&path.display().to_string(), &load(path)?),
        Command::Congruences { path, maximal } => {
            commands::cmd_congruences(&path.display().to_string(), &load(path)?, *maximal, &limits)?
        }
        Command::Embed { path, verify, out } => {
            let shown = path.display().to_string();
            let ModelFile::CMonoid(cm) = load(path)? else {
                return Err(CliError::Usage(format!("{shown}: embed needs a [cmonoid]")));
            };
            let (mut r, image) = commands::cmd_embed(&shown, &cm, *verify)?;
            if let Some(out) = out {
                save(out, &ModelFile::CMonoid(image))?;
                r.line(format!("image written to {}", out.display()));
            }
            r
        }
        Command::Identity {
            args,
            functional,
            universal,
        } => {
            let text = args.last().expect("clap requires one argument");
            let path = (args.len() == 2).then(|| &args[0]);
            match (path, functional, universal) {
                (Some(p), None, None) => {
                    let m = load(Path::new(p))?;
                    commands::cmd_identity(IdentityTarget::File(p, &m), text, &limits)?
                }
                (None, Some(k), None) => commands::cmd_identity(IdentityTarget::Functional(*k), text, &limits)?,
                (None, None, Some(x)) => commands::cmd_identity(IdentityTarget::Universal(*x), text, &limits)?,
                _ => {
                    return Err(CliError::Usage(
                        "give exactly one of a model file, --functional K or --universal X".into(),
                    ))
                }
            }
        }
        Command::Gen { kind, out } => {
            let spec = match kind {
                GenKind::Power { x } => GenSpec::Power { x: *x },
                GenKind::Functional { x } => GenSpec::Functional { x: *x },
                GenKind::Basic { elements, mul } => GenSpec::Basic {
                    elements: elements.clone(),
                    mul: mul.clone(),
                },
                GenKind::Pointwise { elements, mul, x } => GenSpec::Pointwise {
                    elements: elements.clone(),
                    mul: mul.clone(),
                    x: *x,
                },
            };
            let model = commands::cmd_gen(&spec, &limits)?;
            match out {
                Some(out) => {
                    save(out, &model)?;
                    let mut r = Report::new(format!("gen [{}]", model.kind()));
                    r.line(format!("written to {}", out.display()));
                    r
                }
                None => return Ok(Output::Text(modelfile::write(&model))),
            }
        }
        Command::Selftest => commands::cmd_selftest(&limits)?,
    };
    Ok(Output::Report(report))
}
