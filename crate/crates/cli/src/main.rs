//! `tricyclic`: build family graphs, compute characteristic polynomials,
//! b-sequences and energies, compare graphs, enumerate classes and run the
//! claim harness.

mod config;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;
use tricyclic_core::charpoly::{bseq, charpoly_recursive};
use tricyclic_core::energy::{coulson_energy, energy_certified, energy_compare, EnergyReport};
use tricyclic_core::enumerate::{count_summary, CycleFilter, EnumerationScope, Mode};
use tricyclic_core::families::{build_spec, FamilySpec};
use tricyclic_core::quasiorder::compare;
use tricyclic_core::verify::{self, ClaimFamily};

use config::RunConfig;
use render::Out;

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] tricyclic_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0} proved claim instance(s) failed")]
    ClaimFailure(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_input_error() => 2,
            CliError::Core(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 1,
            CliError::ClaimFailure(_) => 3,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Graph6,
    Human,
}

#[derive(Debug, Parser)]
#[command(name = "tricyclic", version, about = "Exact spectra, quasi-order and energies of bipartite tricyclic graphs")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Output format; each subcommand has its own default.
    #[arg(long, short = 'f', global = true, value_enum)]
    format: Option<Format>,
    /// Energy tolerance (enclosure width, or Coulson error target).
    #[arg(long, global = true, env = "TRICYCLIC_TOL")]
    tol: Option<f64>,
    /// Worker threads.
    #[arg(long, short = 'j', global = true)]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    output: Option<PathBuf>,
    /// JSON run configuration; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build graphs from spec strings.
    Build { specs: Vec<String> },
    /// Characteristic polynomials.
    Charpoly { specs: Vec<String> },
    /// b-coefficient sequences.
    Bseq { specs: Vec<String> },
    /// Certified energies (or Coulson estimates with --coulson).
    Energy {
        specs: Vec<String>,
        #[arg(long)]
        coulson: bool,
    },
    /// Quasi-order comparison, with an energy comparison when incomparable.
    Compare {
        spec1: Option<String>,
        spec2: Option<String>,
        /// CSV file of `spec1,spec2` lines to compare in batch.
        #[arg(long, conflicts_with_all = ["spec1", "spec2"])]
        pairs: Option<PathBuf>,
        /// Gap below which energies count as undecided.
        #[arg(long)]
        gap_tol: Option<f64>,
    },
    /// Enumerate central structures, or the full class with --full.
    Enumerate {
        n: usize,
        #[arg(long)]
        full: bool,
        /// Keep only cycle lengths `a,b,k` (as a multiset).
        #[arg(long, value_delimiter = ',', num_args = 3)]
        cycles: Option<Vec<usize>>,
        /// Print per-class counts instead of members.
        #[arg(long)]
        summary: bool,
    },
    /// Run the claim harness; exits with code 3 if a proved claim fails.
    Verify {
        /// Claim ids (L3.3, T3.4, L3.5, L3.6, T3.8, L3.9, L3.10, BG); all if empty.
        claims: Vec<String>,
    },
    /// Compare every central structure of order n with P_n^(6,6,6).
    Scan {
        n: usize,
        #[arg(long)]
        full: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let cfg = RunConfig::resolve(&cli.global)?;
    if let Some(j) = cfg.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let command = match cli.command {
        Some(c) => c,
        None => cfg.command()?,
    };
    let mut out = Out::default();
    let result = dispatch(command, &cfg, &mut out);
    emit(&out, cfg.output.as_ref())?;
    result
}

fn emit(out: &Out, path: Option<&PathBuf>) -> Result<()> {
    let text = out.text();
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            context: format!("writing {}", p.display()),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io {
                    context: "writing stdout".into(),
                    source,
                })
        }
    }
}

fn need_specs(specs: &[String]) -> Result<()> {
    if specs.is_empty() {
        return Err(CliError::Usage("at least one spec string is required".into()));
    }
    Ok(())
}

fn dispatch(command: Command, cfg: &RunConfig, out: &mut Out) -> Result<()> {
    match command {
        Command::Build { specs } => {
            need_specs(&specs)?;
            let fmt = cfg.format.unwrap_or(Format::Graph6);
            for s in &specs {
                let (spec, g) = build_spec(s)?;
                out.graph(fmt, &spec.to_string(), &g)?;
            }
        }
        Command::Charpoly { specs } => {
            need_specs(&specs)?;
            let fmt = cfg.format.unwrap_or(Format::Human);
            for s in &specs {
                let (spec, g) = build_spec(s)?;
                out.charpoly(fmt, &spec.to_string(), &charpoly_recursive(&g))?;
            }
        }
        Command::Bseq { specs } => {
            need_specs(&specs)?;
            let fmt = cfg.format.unwrap_or(Format::Human);
            for s in &specs {
                let (spec, g) = build_spec(s)?;
                out.bseq(fmt, &spec.to_string(), &bseq(&g)?)?;
            }
        }
        Command::Energy { specs, coulson } => {
            need_specs(&specs)?;
            let fmt = cfg.format.unwrap_or(Format::Json);
            let tol = cfg.tolerance();
            for s in &specs {
                let (spec, g) = build_spec(s)?;
                let r = if coulson {
                    EnergyReport::coulson(spec.to_string(), &coulson_energy(&g, tol)?)
                } else {
                    EnergyReport::certified(spec.to_string(), &energy_certified(&g, tol)?)
                };
                out.energy(fmt, &r)?;
            }
        }
        Command::Compare {
            spec1,
            spec2,
            pairs,
            gap_tol,
        } => {
            let fmt = cfg.format.unwrap_or(Format::Json);
            let gap = gap_tol.unwrap_or_else(|| cfg.tolerance());
            let list = match (pairs, spec1, spec2) {
                (Some(p), _, _) => read_pairs(&p)?,
                (None, Some(a), Some(b)) => vec![(a, b)],
                _ => return Err(CliError::Usage("compare needs two specs or --pairs FILE".into())),
            };
            out.compare_header(fmt)?;
            for (a, b) in list {
                let (sa, ga) = build_spec(&a)?;
                let (sb, gb) = build_spec(&b)?;
                let q = compare(&ga, &gb)?;
                let energy = if q.relation == tricyclic_core::quasiorder::Relation::Incomparable {
                    Some(energy_compare(&ga, &gb, gap)?)
                } else {
                    None
                };
                out.compare(fmt, &sa.to_string(), &sb.to_string(), &q, energy.as_ref())?;
            }
        }
        Command::Enumerate {
            n,
            full,
            cycles,
            summary,
        } => {
            let mut scope = if full {
                EnumerationScope::full(n)
            } else {
                EnumerationScope::central(n)
            };
            if let Some(c) = cycles {
                scope.filter = Some(CycleFilter::new(c[0], c[1], c[2]));
            }
            let members = scope.run()?;
            if summary {
                out.class_counts(cfg.format.unwrap_or(Format::Human), &count_summary(n, &members))?;
            } else {
                let default = if full { Format::Graph6 } else { Format::Human };
                out.members(cfg.format.unwrap_or(default), &members)?;
            }
        }
        Command::Verify { claims } => {
            let fams: Vec<ClaimFamily> = if claims.is_empty() {
                ClaimFamily::ALL.to_vec()
            } else {
                claims.iter().map(|c| c.parse()).collect::<std::result::Result<_, _>>()?
            };
            let report = verify::run(&fams, &cfg.verify)?;
            out.report(cfg.format.unwrap_or(Format::Json), &report)?;
            let failed = report.proved_failures().len();
            if failed > 0 {
                return Err(CliError::ClaimFailure(failed));
            }
        }
        Command::Scan { n, full } => {
            let mode = if full { Mode::Full } else { Mode::CentralOnly };
            let scan = verify::conjecture_scan(n, mode)?;
            out.scan(cfg.format.unwrap_or(Format::Json), &scan)?;
            let failed = scan
                .claims()
                .iter()
                .filter(|c| c.severity == verify::Severity::Proved && !c.pass)
                .count();
            if failed > 0 {
                return Err(CliError::ClaimFailure(failed));
            }
        }
    }
    Ok(())
}

fn read_pairs(path: &PathBuf) -> Result<Vec<(String, String)>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        if rec.len() != 2 {
            return Err(CliError::Usage(format!(
                "{} line {}: expected `spec1,spec2`, got {} fields",
                path.display(),
                i + 1,
                rec.len()
            )));
        }
        // Header lines are allowed and skipped.
        if i == 0 && rec[0].parse::<FamilySpec>().is_err() && &rec[0] == "spec1" {
            continue;
        }
        out.push((rec[0].to_string(), rec[1].to_string()));
    }
    Ok(out)
}
