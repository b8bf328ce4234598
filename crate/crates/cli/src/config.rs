//! Run configuration: defaults, an optional `key=value` file, and flags,
//! with later sources overriding earlier ones.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use spinor_lfactor::satake::validate_kappa;

pub const DEFAULT_MAX_PRIME: u64 = 541;
pub const DEFAULT_KAPPA: i64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!("unknown format '{other}' (expected json or csv)")),
        }
    }
}

/// Values given on the command line; `None` means "not given".
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub max_prime: Option<u64>,
    pub kappa: Option<Vec<i64>>,
    pub series_length: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub max_prime: u64,
    pub kappa_list: Vec<i64>,
    pub series_length: usize,
    pub out: Option<PathBuf>,
    /// Output format; each command has its own default.
    pub format: Option<Format>,
    /// Worker count; 0 lets the pool pick.
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: std::fmt::Display,
{
    value
        .trim()
        .parse()
        .map_err(|e| ConfigError(format!("invalid value '{value}' for {key}: {e}")))
}

pub fn parse_kappa_list(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|k| k.trim().parse::<i64>().map_err(|e| format!("invalid kappa '{k}': {e}")))
        .collect()
}

/// Reads `key = value` lines; blank lines and `#` comments are ignored.
pub fn read_config_file(path: &Path) -> Result<Overrides, ConfigError> {
    let text = fs::read_to_string(path).map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
    let mut entries = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("{}:{}: expected key=value", path.display(), i + 1)))?;
        entries.insert(key.trim().replace('-', "_"), value.trim().to_string());
    }
    let mut o = Overrides::default();
    for (key, value) in entries {
        match key.as_str() {
            "max_prime" => o.max_prime = Some(parse(&key, &value)?),
            "kappa" | "kappa_list" => o.kappa = Some(parse_kappa_list(&value).map_err(ConfigError)?),
            "series_length" => o.series_length = Some(parse(&key, &value)?),
            "out" => o.out = Some(PathBuf::from(value)),
            "format" => o.format = Some(parse(&key, &value)?),
            "jobs" => o.jobs = Some(parse(&key, &value)?),
            _ => return Err(ConfigError(format!("unknown configuration key '{key}'"))),
        }
    }
    Ok(o)
}

impl RunConfig {
    /// Defaults, then the file, then the flags.
    pub fn resolve(file: Option<Overrides>, flags: Overrides) -> Result<Self, ConfigError> {
        let file = file.unwrap_or_default();
        let max_prime = flags.max_prime.or(file.max_prime).unwrap_or(DEFAULT_MAX_PRIME);
        let kappa_list = flags.kappa.or(file.kappa).unwrap_or_else(|| vec![DEFAULT_KAPPA]);
        let series_length = flags
            .series_length
            .or(file.series_length)
            .unwrap_or(max_prime as usize + 1);
        let config = Self {
            max_prime,
            kappa_list,
            series_length,
            out: flags.out.or(file.out),
            format: flags.format.or(file.format),
            jobs: flags.jobs.or(file.jobs).unwrap_or(0),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_prime < 2 {
            return Err(ConfigError(format!(
                "max_prime must be at least 2, got {}",
                self.max_prime
            )));
        }
        if self.series_length as u64 <= self.max_prime {
            return Err(ConfigError(format!(
                "series_length ({}) must exceed max_prime ({})",
                self.series_length, self.max_prime
            )));
        }
        if self.kappa_list.is_empty() {
            return Err(ConfigError("kappa list is empty".into()));
        }
        for &k in &self.kappa_list {
            validate_kappa(k).map_err(|e| ConfigError(e.to_string()))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn defaults() {
        let c = RunConfig::resolve(None, Overrides::default()).unwrap();
        assert_eq!(c.max_prime, 541);
        assert_eq!(c.series_length, 542);
        assert_eq!(c.kappa_list, vec![12]);
        assert_eq!(c.format, None);
    }

    #[test]
    fn flags_override_file() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "# sweep\nmax_prime = 97\nformat=csv\nkappa = 12, 14").unwrap();
        let file = read_config_file(f.path()).unwrap();
        let flags = Overrides {
            max_prime: Some(13),
            ..Default::default()
        };
        let c = RunConfig::resolve(Some(file), flags).unwrap();
        assert_eq!(c.max_prime, 13);
        assert_eq!(c.series_length, 14);
        assert_eq!(c.format, Some(Format::Csv));
        assert_eq!(c.kappa_list, vec![12, 14]);
    }

    #[test]
    fn rejects_bad_values() {
        let short = Overrides {
            max_prime: Some(100),
            series_length: Some(100),
            ..Default::default()
        };
        assert!(RunConfig::resolve(None, short).is_err());
        let odd = Overrides {
            kappa: Some(vec![13]),
            ..Default::default()
        };
        assert!(RunConfig::resolve(None, odd).is_err());

        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "colour = blue").unwrap();
        assert!(read_config_file(f.path()).is_err());
    }
}
