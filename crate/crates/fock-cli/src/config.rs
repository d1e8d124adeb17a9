use std::path::PathBuf;

use clap::ValueEnum;
use fock_core::classify::ClassifyOptions;
use fock_core::numerics::NumericsConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
    Csv,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub inner_dim: usize,
    pub outer_pad: Option<usize>,
    pub tol: f64,
    pub unit_circle_eps: f64,
    /// Require exact equality for the critical weight parameter.
    pub exact: bool,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            inner_dim: 64,
            outer_pad: None,
            tol: 1e-8,
            unit_circle_eps: 1e-12,
            exact: false,
            format: None,
            out: None,
        }
    }
}

impl RunConfig {
    pub fn classify_options(&self) -> ClassifyOptions {
        if self.exact {
            ClassifyOptions { unit_circle_eps: self.unit_circle_eps, ..ClassifyOptions::EXACT }
        } else {
            ClassifyOptions { unit_circle_eps: self.unit_circle_eps, ..ClassifyOptions::default() }
        }
    }

    pub fn numerics(&self) -> NumericsConfig {
        NumericsConfig { max_inner: self.inner_dim, outer_pad: self.outer_pad, ..NumericsConfig::default() }
    }

    /// Tolerance floor for checks run below the reference dimension 64.
    pub fn relaxed(&self) -> bool {
        self.inner_dim < 64
    }

    pub fn format_or(&self, fallback: OutputFormat) -> OutputFormat {
        self.format.unwrap_or(fallback)
    }
}
