use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::args::{Format, GlobalArgs};
use crate::error::CliError;

/// Defaults for one subcommand's flags, from a `[command]` table.
#[derive(Deserialize, Debug, Default, Clone)]
#[serde(deny_unknown_fields)]
pub struct CommandDefaults {
    pub n: Option<usize>,
    pub twist: Option<i32>,
    pub degree: Option<i32>,
    pub min_degree: Option<i32>,
    pub max_degree: Option<i32>,
    pub length: Option<String>,
    pub words: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Deserialize, Debug, Default)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    pub out: Option<PathBuf>,
    pub degree_cap: Option<i32>,
    #[serde(flatten)]
    pub commands: BTreeMap<String, CommandDefaults>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))
    }
}

pub const DEFAULT_DEGREE_CAP: i32 = 64;

/// Settings shared by all commands after merging flags, environment, the
/// config file and built-in defaults, in that order.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub format: Format,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub degree_cap: i32,
    pub defaults: CommandDefaults,
}

impl RunConfig {
    pub fn resolve(global: &GlobalArgs, command: &str) -> Result<Self, CliError> {
        let file = match &global.config {
            Some(p) => FileConfig::load(p)?,
            None => FileConfig::default(),
        };
        let jobs = global.jobs.or(file.jobs);
        if jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        Ok(RunConfig {
            format: global.format.or(file.format).unwrap_or_default(),
            jobs,
            out: global.out.clone().or(file.out),
            cache_dir: global.cache_dir.clone().or(file.cache_dir),
            degree_cap: global.degree_cap.or(file.degree_cap).unwrap_or(DEFAULT_DEGREE_CAP),
            defaults: file.commands.get(command).cloned().unwrap_or_default(),
        })
    }

    /// Fail with the resource-cap exit code if `degree` is over the cap.
    pub fn check_degree(&self, degree: i32) -> Result<i32, CliError> {
        if degree > self.degree_cap {
            Err(CliError::Cap(format!("degree {degree} exceeds the cap {}", self.degree_cap)))
        } else {
            Ok(degree)
        }
    }
}
