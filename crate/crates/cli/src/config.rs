//! Optional TOML configuration named by an environment variable.
//!
//! ```toml
//! max_order = 64
//! multiplier = 1
//! ```

use std::path::Path;

use effcone_core::DEFAULT_MAX_ORDER;
use serde::Deserialize;

use crate::error::{CliError, Result};

pub const CONFIG_ENV: &str = "EFFCONE_CONFIG";

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_order: Option<u32>,
    pub multiplier: Option<u32>,
}

impl Config {
    /// Reads the file named by `EFFCONE_CONFIG`, or the defaults if unset.
    pub fn from_env() -> Result<Config> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Config::load(Path::new(&p)),
            _ => Ok(Config::default()),
        }
    }

    pub fn load(path: &Path) -> Result<Config> {
        let err = |message: String| CliError::Config {
            path: path.to_path_buf(),
            message,
        };
        let text = std::fs::read_to_string(path).map_err(|e| err(e.to_string()))?;
        let cfg: Config = toml::from_str(&text).map_err(|e| err(e.to_string()))?;
        if cfg.multiplier == Some(0) {
            return Err(err("multiplier must be positive".into()));
        }
        Ok(cfg)
    }

    pub fn max_order(&self, flag: Option<u32>) -> u32 {
        flag.or(self.max_order).unwrap_or(DEFAULT_MAX_ORDER)
    }

    pub fn multiplier(&self, flag: Option<u32>) -> u32 {
        flag.or(self.multiplier).unwrap_or(1)
    }
}
