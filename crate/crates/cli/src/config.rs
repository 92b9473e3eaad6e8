use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context};
use opal_core::operad::{DefaultKappa, ExoticKappa, KappaFamily, RightNestedKappa, TableKappa};
use opal_core::shapes::ZObject;
use serde::{Deserialize, Serialize};

/// Which `κ` family to build `U_κH` with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum KappaChoice {
    Default,
    Exotic,
    RightNested,
    File(PathBuf),
}

impl KappaChoice {
    pub fn build(&self) -> anyhow::Result<Box<dyn KappaFamily<ZObject>>> {
        Ok(match self {
            KappaChoice::Default => Box::new(DefaultKappa),
            KappaChoice::Exotic => Box::new(ExoticKappa),
            KappaChoice::RightNested => Box::new(RightNestedKappa),
            KappaChoice::File(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading κ table {}", path.display()))?;
                Box::new(TableKappa::from_json(&text)?)
            }
        })
    }
}

impl FromStr for KappaChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "default" => Ok(KappaChoice::Default),
            "exotic" => Ok(KappaChoice::Exotic),
            "right-nested" => Ok(KappaChoice::RightNested),
            _ => match s.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(KappaChoice::File(path.into())),
                _ => Err(format!(
                    "unknown κ {s:?}; expected default, exotic, right-nested or file:PATH"
                )),
            },
        }
    }
}

impl TryFrom<String> for KappaChoice {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}

impl From<KappaChoice> for String {
    fn from(k: KappaChoice) -> String {
        k.to_string()
    }
}

impl fmt::Display for KappaChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KappaChoice::Default => f.write_str("default"),
            KappaChoice::Exotic => f.write_str("exotic"),
            KappaChoice::RightNested => f.write_str("right-nested"),
            KappaChoice::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

/// Bounds for `verify`. Every field may come from a TOML file; flags win.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub max_tuple_length: usize,
    pub max_width: usize,
    pub max_arity: usize,
    pub seed: u64,
    pub kappa: Vec<KappaChoice>,
    /// Object tuples visited per composition shape before sampling.
    pub per_shape: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_tuple_length: 4,
            max_width: 3,
            max_arity: 3,
            seed: 0,
            kappa: vec![KappaChoice::Default, KappaChoice::Exotic],
            per_shape: 4,
        }
    }
}

impl SuiteConfig {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: SuiteConfig =
            toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))?;
        config.check()?;
        Ok(config)
    }

    pub fn check(&self) -> anyhow::Result<()> {
        if self.kappa.is_empty() {
            bail!("at least one κ family is required");
        }
        if self.per_shape == 0 {
            bail!("per_shape must be positive");
        }
        Ok(())
    }
}
