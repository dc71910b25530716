use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::residue::DEFAULT_ORACLE_CAP;

pub const ORACLE_CAP_ENV: &str = "LEHMERK_ORACLE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Jsonl,
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" => Ok(OutputFormat::Jsonl),
            "table" => Ok(OutputFormat::Table),
            _ => Err(Error::InvalidArgument(format!(
                "unknown output format `{s}`"
            ))),
        }
    }
}

/// Settings for one run, merged from defaults, a config file, the
/// environment and flags, later sources winning.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub field_m: Option<i64>,
    pub d_max: Option<u64>,
    pub oracle_cap: u64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub squarefree_only: bool,
    pub threads: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            field_m: None,
            d_max: None,
            oracle_cap: DEFAULT_ORACLE_CAP,
            output_format: OutputFormat::Csv,
            output_path: None,
            squarefree_only: false,
            threads: 1,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("bad value `{value}` for `{key}`")))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "1" | "true" | "yes" => Ok(true),
        "0" | "false" | "no" => Ok(false),
        _ => Err(Error::InvalidArgument(format!(
            "bad boolean `{value}` for `{key}`"
        ))),
    }
}

impl RunConfig {
    /// Apply `key=value` lines. Blank lines and `#` comments are ignored.
    pub fn apply_file_contents(&mut self, text: &str) -> Result<()> {
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidArgument(format!("config line {}: expected key=value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "field" | "field_m" => self.field_m = Some(parse(key, value)?),
                "d_max" | "max" => self.d_max = Some(parse(key, value)?),
                "oracle_cap" => self.oracle_cap = parse(key, value)?,
                "format" | "output_format" => self.output_format = value.parse()?,
                "out" | "output_path" => self.output_path = Some(PathBuf::from(value)),
                "squarefree_only" => self.squarefree_only = parse_bool(key, value)?,
                "threads" => self.threads = parse(key, value)?,
                _ => {
                    return Err(Error::InvalidArgument(format!(
                        "config line {}: unknown key `{key}`",
                        lineno + 1
                    )))
                }
            }
        }
        Ok(())
    }

    pub fn apply_env_value(&mut self, oracle_cap: Option<&str>) -> Result<()> {
        if let Some(v) = oracle_cap {
            self.oracle_cap = parse(ORACLE_CAP_ENV, v)?;
        }
        Ok(())
    }

    /// Defaults, then `path` if given, then the environment.
    pub fn load(path: Option<&Path>) -> std::result::Result<Self, ConfigError> {
        let mut cfg = Self::default();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| ConfigError::Io(format!("{}: {e}", path.display())))?;
            cfg.apply_file_contents(&text)
                .map_err(ConfigError::Invalid)?;
        }
        let env = std::env::var(ORACLE_CAP_ENV).ok();
        cfg.apply_env_value(env.as_deref())
            .map_err(ConfigError::Invalid)?;
        Ok(cfg)
    }
}

#[derive(Debug)]
pub enum ConfigError {
    Io(String),
    Invalid(Error),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_env() {
        let mut cfg = RunConfig::default();
        cfg.apply_file_contents(
            "# run\nfield = -7\nmax=500\nformat=jsonl\nsquarefree_only=1\noracle_cap=50\n",
        )
        .unwrap();
        assert_eq!(cfg.field_m, Some(-7));
        assert_eq!(cfg.d_max, Some(500));
        assert_eq!(cfg.output_format, OutputFormat::Jsonl);
        assert!(cfg.squarefree_only);
        cfg.apply_env_value(Some("80")).unwrap();
        assert_eq!(cfg.oracle_cap, 80);
    }

    #[test]
    fn rejects_garbage() {
        let mut cfg = RunConfig::default();
        assert!(cfg.apply_file_contents("colour=blue").is_err());
        assert!(cfg.apply_file_contents("no equals sign").is_err());
        assert!(cfg.apply_file_contents("threads=many").is_err());
        assert!(cfg.apply_env_value(Some("-3")).is_err());
    }
}
