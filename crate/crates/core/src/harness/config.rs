use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::StepOrder;

use super::checks::Check;

/// Report rendering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Config(format!("unknown format {other:?}; expected table, json or csv"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// Bounds and selectors for a verification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest `n` for path and two-row tableau grids.
    pub max_n: u32,
    /// Largest number of cells of any enumerated tableau family.
    pub max_cells: u32,
    /// Largest `|λ|` in the straight and skew shape sweeps.
    pub max_shape: u32,
    /// Largest `n + m + k` in the hook shape `(n, m, 1^k)` sweeps.
    pub max_hook: u32,
    /// Checks to run; empty means all.
    pub checks: Vec<Check>,
    /// Restricts the path checks to one step order.
    pub order: Option<StepOrder>,
    pub format: Format,
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
    /// When false every record reports 0 ms.
    pub timing: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 6,
            max_cells: 12,
            max_shape: 8,
            max_hook: 10,
            checks: Vec::new(),
            order: None,
            format: Format::Table,
            jobs: None,
            timing: true,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value.trim().parse().map_err(|_| Error::Config(format!("{key}: expected a nonnegative integer, got {value:?}")))
}

impl SweepConfig {
    /// Sets one `key = value` entry. Keys may use `-` or `_`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let key = key.trim().replace('-', "_");
        let value = value.trim();
        match key.as_str() {
            "max_n" => self.max_n = parse_num(&key, value)?,
            "max_cells" => self.max_cells = parse_num(&key, value)?,
            "max_shape" => self.max_shape = parse_num(&key, value)?,
            "max_hook" => self.max_hook = parse_num(&key, value)?,
            "jobs" => {
                let jobs: usize = parse_num(&key, value)?;
                if jobs == 0 {
                    return Err(Error::Config("jobs must be at least 1".into()));
                }
                self.jobs = Some(jobs);
            }
            "format" => self.format = value.parse()?,
            "order" => self.order = Some(value.parse().map_err(|e: Error| Error::Config(e.to_string()))?),
            "timing" => {
                self.timing = match value {
                    "true" | "yes" | "on" | "1" => true,
                    "false" | "no" | "off" | "0" => false,
                    _ => return Err(Error::Config(format!("timing: expected true or false, got {value:?}"))),
                }
            }
            "checks" | "check" => {
                self.checks = value
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty() && *s != "all")
                    .map(str::parse)
                    .collect::<Result<_>>()?;
            }
            _ => return Err(Error::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    /// Reads a flat `key = value` file; `#` starts a comment.
    pub fn from_kv(text: &str) -> Result<SweepConfig> {
        let mut cfg = SweepConfig::default();
        cfg.apply_kv(text)?;
        Ok(cfg)
    }

    pub fn apply_kv(&mut self, text: &str) -> Result<()> {
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            self.set(key, value).map_err(|e| match e {
                Error::Config(msg) => Error::Config(format!("line {}: {msg}", lineno + 1)),
                other => other,
            })?;
        }
        Ok(())
    }

    /// The selected checks in canonical order.
    pub fn selected_checks(&self) -> Vec<Check> {
        if self.checks.is_empty() {
            return Check::ALL.to_vec();
        }
        Check::ALL.iter().copied().filter(|c| self.checks.contains(c)).collect()
    }
}
