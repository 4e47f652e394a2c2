//! Feasibility caps that define which instances are "desk scale".

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Caps are stored as base-2 logarithms of the number of enumerated elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest coset (`2^dim B`) searched by plain Gray-code enumeration.
    pub exhaustive_log2: u32,
    /// Largest coset searched by the split-basis (meet-in-the-middle) search.
    pub mitm_log2: u32,
    /// Largest cochain space `2^|X(i)|` enumerated when computing expansion constants and systoles.
    pub enumeration_log2: u32,
    /// Largest group generated by `cayley_clique_complex`.
    pub group_size: usize,
    /// Largest graph handed to the dense eigensolver.
    pub spectrum_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { exhaustive_log2: 24, mitm_log2: 40, enumeration_log2: 24, group_size: 20_000, spectrum_vertices: 4096 }
    }
}

impl Caps {
    /// Defaults overridden by the `HDX_CAPS` environment variable, if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var("HDX_CAPS") {
            Ok(s) => Self::default().with_overrides(&s),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Applies a comma separated `key=value` list, e.g. `exhaustive=20,mitm=36`.
    /// Values for the `*_log2` caps may be written as `k` or `2^k`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::ConfigError(format!("expected key=value in HDX_CAPS, got {part:?}")))?;
            let value = value.trim();
            let log2 = || -> Result<u32> {
                let v = value.strip_prefix("2^").unwrap_or(value);
                v.parse::<u32>()
                    .ok()
                    .filter(|v| *v < 63)
                    .ok_or_else(|| Error::ConfigError(format!("bad cap value {value:?}")))
            };
            let count = || -> Result<usize> {
                value.parse::<usize>().map_err(|_| Error::ConfigError(format!("bad cap value {value:?}")))
            };
            match key.trim() {
                "exhaustive" => self.exhaustive_log2 = log2()?,
                "mitm" => self.mitm_log2 = log2()?,
                "enumeration" => self.enumeration_log2 = log2()?,
                "group" => self.group_size = count()?,
                "spectrum" => self.spectrum_vertices = count()?,
                other => return Err(Error::ConfigError(format!("unknown cap {other:?}"))),
            }
        }
        Ok(self)
    }
}
