//! The JSON run configuration, merged with command-line flags.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use tricyclic_core::verify::VerifyConfig;

use crate::{CliError, Command, Format, GlobalArgs, Result};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Used when no subcommand is given on the command line.
    pub subcommand: Option<String>,
    pub specs: Vec<String>,
    pub tolerance: Option<f64>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
    pub verify: VerifyConfig,
}

impl RunConfig {
    pub fn resolve(args: &GlobalArgs) -> Result<RunConfig> {
        let mut cfg = match &args.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|source| CliError::Io {
                    context: format!("reading {}", p.display()),
                    source,
                })?;
                serde_json::from_str(&text)
                    .map_err(|e| CliError::Usage(format!("config {}: {e}", p.display())))?
            }
            None => RunConfig::default(),
        };
        cfg.tolerance = args.tol.or(cfg.tolerance);
        cfg.format = args.format.or(cfg.format);
        cfg.jobs = args.jobs.or(cfg.jobs);
        cfg.output = args.output.clone().or(cfg.output);
        if let Some(t) = cfg.tolerance {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Usage(format!("tolerance must be positive, got {t}")));
            }
        }
        if cfg.jobs == Some(0) {
            return Err(CliError::Usage("jobs must be at least 1".into()));
        }
        cfg.verify.grid.validate()?;
        Ok(cfg)
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance.unwrap_or(DEFAULT_TOL)
    }

    /// The subcommand named in the config file, for spec-only commands.
    pub fn command(&self) -> Result<Command> {
        let specs = self.specs.clone();
        match self.subcommand.as_deref() {
            Some("build") => Ok(Command::Build { specs }),
            Some("charpoly") => Ok(Command::Charpoly { specs }),
            Some("bseq") => Ok(Command::Bseq { specs }),
            Some("energy") => Ok(Command::Energy { specs, coulson: false }),
            Some("compare") if specs.len() == 2 => Ok(Command::Compare {
                spec1: Some(specs[0].clone()),
                spec2: Some(specs[1].clone()),
                pairs: None,
                gap_tol: None,
            }),
            Some("verify") => Ok(Command::Verify { claims: specs }),
            Some(other) => Err(CliError::Usage(format!(
                "config subcommand {other:?} needs its arguments on the command line"
            ))),
            None => Err(CliError::Usage("no subcommand given (see --help)".into())),
        }
    }
}
