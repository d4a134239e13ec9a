//! Layered run configuration: command defaults, then a figure recipe, then
//! the config file, then command-line flags.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use dicke_ising::chain::MAX_ABS_ETA;
use dicke_ising::ApproximationTag;
use serde::{Deserialize, Serialize};

use crate::axis::{Axis, SizeAxis};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    IsingSpectrum,
    Polaritons,
    Saturation,
    FnCorrection,
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::IsingSpectrum => "ising-spectrum",
            Command::Polaritons => "polaritons",
            Command::Saturation => "saturation",
            Command::FnCorrection => "fn-correction",
            Command::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureRecipe {
    Fig1,
    Fig2a,
    Fig2b,
    Fig4,
    Fig5,
    Fig6,
}

impl FigureRecipe {
    pub const ALL: [FigureRecipe; 6] = [
        FigureRecipe::Fig1,
        FigureRecipe::Fig2a,
        FigureRecipe::Fig2b,
        FigureRecipe::Fig4,
        FigureRecipe::Fig5,
        FigureRecipe::Fig6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FigureRecipe::Fig1 => "fig1",
            FigureRecipe::Fig2a => "fig2a",
            FigureRecipe::Fig2b => "fig2b",
            FigureRecipe::Fig4 => "fig4",
            FigureRecipe::Fig5 => "fig5",
            FigureRecipe::Fig6 => "fig6",
        }
    }

    pub fn command(self) -> Command {
        match self {
            FigureRecipe::Fig1 | FigureRecipe::Fig2a | FigureRecipe::Fig2b => Command::IsingSpectrum,
            FigureRecipe::Fig4 | FigureRecipe::Fig5 => Command::Polaritons,
            FigureRecipe::Fig6 => Command::Saturation,
        }
    }

    /// Frozen parameter sets.
    pub fn layer(self) -> PartialConfig {
        let mut p = PartialConfig::default();
        match self {
            FigureRecipe::Fig1 => {
                p.chain.n = Some(SizeAxis::Value(1000));
                p.chain.eta = Some(Axis::Range {
                    start: 0.0,
                    stop: -0.25,
                    count: 51,
                });
                p.chain.modes = Some(vec![1]);
            }
            FigureRecipe::Fig2a | FigureRecipe::Fig2b => {
                p.chain.n = Some(SizeAxis::Range {
                    start: 10,
                    stop: 200,
                    count: 191,
                });
                let eta = if self == FigureRecipe::Fig2a { -0.05 } else { -0.2 };
                p.chain.eta = Some(Axis::Value(eta));
                p.chain.modes = Some(vec![1, 2]);
            }
            FigureRecipe::Fig4 | FigureRecipe::Fig5 => {
                let eta = if self == FigureRecipe::Fig4 { -0.05 } else { -0.2 };
                p.chain.eta = Some(Axis::Value(eta));
                p.cavity.nu = Some(Axis::List(vec![0.05, 0.2]));
                p.cavity.delta = Some(Axis::List(vec![4.0, 16.0]));
                p.cavity.k_points = Some(400);
                p.cavity.finite_n = Some(false);
                p.schemes = Some(vec!["B".into(), "Bt".into()]);
            }
            FigureRecipe::Fig6 => {
                p.chain.n = Some(SizeAxis::Value(100));
                p.chain.eta = Some(Axis::Range {
                    start: 0.0,
                    stop: 0.25,
                    count: 26,
                });
            }
        }
        p
    }
}

impl fmt::Display for FigureRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FigureRecipe {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FigureRecipe::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| format!("unknown recipe '{s}'"))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartialChain {
    pub n: Option<SizeAxis>,
    pub eta: Option<Axis>,
    pub omega0: Option<f64>,
    pub modes: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartialCavity {
    pub nu: Option<Axis>,
    pub delta: Option<Axis>,
    pub k_points: Option<usize>,
    pub k_span: Option<f64>,
    pub finite_n: Option<bool>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartialCorrection {
    pub reference_n: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartialOracle {
    pub tolerance: Option<f64>,
    pub soft_tolerance: Option<f64>,
    pub max_sites: Option<usize>,
    pub long_chain: Option<usize>,
    pub dicke_sites: Option<usize>,
    pub dicke_nu: Option<f64>,
    pub cutoff: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartialOutput {
    pub format: Option<Format>,
    pub path: Option<PathBuf>,
}

/// One configuration layer; every field optional.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct PartialConfig {
    pub command: Option<Command>,
    pub recipe: Option<FigureRecipe>,
    pub threads: Option<usize>,
    pub schemes: Option<Vec<String>>,
    pub chain: PartialChain,
    pub cavity: PartialCavity,
    pub correction: PartialCorrection,
    pub oracle: PartialOracle,
    pub output: PartialOutput,
}

impl PartialConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::validation("config", e.message().to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainSection {
    pub n: SizeAxis,
    pub eta: Axis,
    pub omega0: f64,
    pub modes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CavitySection {
    pub nu: Axis,
    pub delta: Axis,
    /// Number of wavevectors per curve in the thermodynamic limit.
    pub k_points: usize,
    /// Sampled interval `(0, k_span k_c]`, capped at `pi`.
    pub k_span: f64,
    /// Pekar grid and finite-`N` first-order solution instead of continuous `k`.
    pub finite_n: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrectionSection {
    /// When set, `delta` is read at this chain length and rescaled to every
    /// `n` at fixed cavity length.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_n: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleSection {
    pub tolerance: f64,
    pub soft_tolerance: f64,
    pub max_sites: usize,
    pub long_chain: usize,
    pub dicke_sites: usize,
    pub dicke_nu: f64,
    pub cutoff: usize,
}

/// Fully resolved configuration. Serialized into every output header; the
/// output path is left out so that headers do not depend on where files go.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<FigureRecipe>,
    /// Worker threads; 0 lets the pool pick.
    pub threads: usize,
    pub schemes: Vec<String>,
    pub chain: ChainSection,
    pub cavity: CavitySection,
    pub correction: CorrectionSection,
    pub oracle: OracleSection,
    #[serde(skip)]
    pub format: Format,
    #[serde(skip)]
    pub out: Option<PathBuf>,
}

impl SweepConfig {
    pub fn defaults(command: Command) -> Self {
        let (n, eta, schemes) = match command {
            Command::IsingSpectrum => (SizeAxis::Value(100), Axis::Value(-0.05), vec!["F", "B", "Bt"]),
            Command::Polaritons => (SizeAxis::Value(100), Axis::Value(-0.05), vec!["B", "Bt"]),
            Command::Saturation => (
                SizeAxis::Value(100),
                Axis::Range {
                    start: 0.0,
                    stop: 0.25,
                    count: 26,
                },
                vec!["B", "Bt"],
            ),
            Command::FnCorrection => (
                SizeAxis::List(vec![10, 100, 1000, 10_000]),
                Axis::Value(0.0),
                vec!["Bc"],
            ),
            Command::Oracle => (
                SizeAxis::List(vec![4, 8, 10, 12]),
                Axis::List(vec![0.0, 0.1, 0.25]),
                vec!["F"],
            ),
        };
        SweepConfig {
            command,
            recipe: None,
            threads: 0,
            schemes: schemes.into_iter().map(String::from).collect(),
            chain: ChainSection {
                n,
                eta,
                omega0: 1.0,
                modes: vec![1],
            },
            cavity: CavitySection {
                nu: Axis::Value(0.05),
                delta: match command {
                    Command::FnCorrection => Axis::List(vec![4.0, 16.0]),
                    _ => Axis::Value(4.0),
                },
                k_points: 400,
                k_span: 2.0,
                finite_n: false,
            },
            correction: CorrectionSection { reference_n: None },
            oracle: OracleSection {
                tolerance: 1e-10,
                soft_tolerance: 1e-2,
                max_sites: 14,
                long_chain: 200,
                dicke_sites: 6,
                dicke_nu: 0.1,
                cutoff: 8,
            },
            format: Format::Csv,
            out: None,
        }
    }

    /// Resolves `defaults(command) <- recipe <- file <- flags`. The recipe is
    /// taken from the flags if given there, else from the file.
    pub fn resolve(
        command: Command,
        file: Option<PartialConfig>,
        flags: PartialConfig,
    ) -> Result<Self, CliError> {
        let file = file.unwrap_or_default();
        for layer in [&file, &flags] {
            if let Some(c) = layer.command {
                if c != command {
                    return Err(CliError::validation(
                        "command",
                        format!("config is for '{}', running '{}'", c.name(), command.name()),
                    ));
                }
            }
        }
        let mut cfg = SweepConfig::defaults(command);
        if let Some(recipe) = flags.recipe.or(file.recipe) {
            if recipe.command() != command {
                return Err(CliError::validation(
                    "recipe",
                    format!("{recipe} belongs to '{}'", recipe.command().name()),
                ));
            }
            cfg.apply(recipe.layer());
            cfg.recipe = Some(recipe);
        }
        cfg.apply(file);
        cfg.apply(flags);
        cfg.validate()?;
        Ok(cfg)
    }

    fn apply(&mut self, p: PartialConfig) {
        fn set<T>(slot: &mut T, v: Option<T>) {
            if let Some(v) = v {
                *slot = v;
            }
        }
        set(&mut self.threads, p.threads);
        set(&mut self.schemes, p.schemes);
        set(&mut self.chain.n, p.chain.n);
        set(&mut self.chain.eta, p.chain.eta);
        set(&mut self.chain.omega0, p.chain.omega0);
        set(&mut self.chain.modes, p.chain.modes);
        set(&mut self.cavity.nu, p.cavity.nu);
        set(&mut self.cavity.delta, p.cavity.delta);
        set(&mut self.cavity.k_points, p.cavity.k_points);
        set(&mut self.cavity.k_span, p.cavity.k_span);
        set(&mut self.cavity.finite_n, p.cavity.finite_n);
        if p.correction.reference_n.is_some() {
            self.correction.reference_n = p.correction.reference_n;
        }
        set(&mut self.oracle.tolerance, p.oracle.tolerance);
        set(&mut self.oracle.soft_tolerance, p.oracle.soft_tolerance);
        set(&mut self.oracle.max_sites, p.oracle.max_sites);
        set(&mut self.oracle.long_chain, p.oracle.long_chain);
        set(&mut self.oracle.dicke_sites, p.oracle.dicke_sites);
        set(&mut self.oracle.dicke_nu, p.oracle.dicke_nu);
        set(&mut self.oracle.cutoff, p.oracle.cutoff);
        set(&mut self.format, p.output.format);
        if p.output.path.is_some() {
            self.out = p.output.path;
        }
    }

    /// Approximation tags, in the order given.
    pub fn tags(&self) -> Vec<ApproximationTag> {
        self.schemes
            .iter()
            .filter_map(|s| ApproximationTag::from_label(s))
            .collect()
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |field: &str, reason: String| Err(CliError::validation(field, reason));
        self.chain.n.check().or_else(|r| bad("chain.n", r))?;
        self.chain.eta.check().or_else(|r| bad("chain.eta", r))?;
        self.cavity.nu.check().or_else(|r| bad("cavity.nu", r))?;
        self.cavity.delta.check().or_else(|r| bad("cavity.delta", r))?;
        if let Some(eta) = self.chain.eta.values().into_iter().find(|e| e.abs() > MAX_ABS_ETA) {
            return bad("chain.eta", format!("|eta| = {} exceeds {MAX_ABS_ETA}", eta.abs()));
        }
        if !(self.chain.omega0 > 0.0) || !self.chain.omega0.is_finite() {
            return bad("chain.omega0", format!("must be finite and > 0, got {}", self.chain.omega0));
        }
        if self.chain.modes.is_empty() || self.chain.modes.contains(&0) {
            return bad("chain.modes", "mode indices start at 1".into());
        }
        if self.schemes.is_empty() {
            return bad("schemes", "at least one scheme is required".into());
        }
        if let Some(s) = self.schemes.iter().find(|s| ApproximationTag::from_label(s).is_none()) {
            return bad("schemes", format!("unknown scheme '{s}' (use F, B, Bt or Bc)"));
        }
        if let Some(nu) = self.cavity.nu.values().into_iter().find(|v| *v < 0.0) {
            return bad("cavity.nu", format!("must be >= 0, got {nu}"));
        }
        if let Some(d) = self.cavity.delta.values().into_iter().find(|v| *v <= 0.0) {
            return bad("cavity.delta", format!("must be > 0, got {d}"));
        }
        if self.cavity.k_points == 0 {
            return bad("cavity.k_points", "must be >= 1".into());
        }
        if !(self.cavity.k_span > 0.0) || !self.cavity.k_span.is_finite() {
            return bad("cavity.k_span", format!("must be finite and > 0, got {}", self.cavity.k_span));
        }
        if self.correction.reference_n == Some(0) {
            return bad("correction.reference_n", "must be >= 1".into());
        }
        let o = &self.oracle;
        if !(o.tolerance > 0.0) || !(o.soft_tolerance > 0.0) {
            return bad("oracle.tolerance", "tolerances must be > 0".into());
        }
        if !(o.dicke_nu >= 0.0) || !o.dicke_nu.is_finite() {
            return bad("oracle.dicke_nu", format!("must be finite and >= 0, got {}", o.dicke_nu));
        }
        if o.cutoff == 0 {
            return bad("oracle.cutoff", "must be >= 1".into());
        }
        Ok(())
    }

    /// TOML rendering of the resolved configuration.
    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("configuration serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layers_apply_in_order() {
        let file = PartialConfig::from_toml("recipe = \"fig5\"\n[cavity]\nk_points = 50\n").unwrap();
        let mut flags = PartialConfig::default();
        flags.cavity.k_points = Some(7);
        let cfg = SweepConfig::resolve(Command::Polaritons, Some(file), flags).unwrap();
        assert_eq!(cfg.recipe, Some(FigureRecipe::Fig5));
        assert_eq!(cfg.chain.eta, Axis::Value(-0.2));
        assert_eq!(cfg.cavity.k_points, 7);
        assert_eq!(cfg.cavity.delta.values(), vec![4.0, 16.0]);
    }

    #[test]
    fn rejects_bad_input_by_field() {
        let err = PartialConfig::from_toml("[chain]\nwidth = 3\n").unwrap_err();
        assert!(err.to_string().contains("width"));
        let mut flags = PartialConfig::default();
        flags.chain.eta = Some(Axis::Value(0.3));
        let err = SweepConfig::resolve(Command::IsingSpectrum, None, flags).unwrap_err();
        assert!(matches!(err, CliError::Validation { ref field, .. } if field == "chain.eta"));
        let mut flags = PartialConfig::default();
        flags.recipe = Some(FigureRecipe::Fig6);
        let err = SweepConfig::resolve(Command::Polaritons, None, flags).unwrap_err();
        assert!(matches!(err, CliError::Validation { ref field, .. } if field == "recipe"));
        let mut flags = PartialConfig::default();
        flags.schemes = Some(vec!["X".into()]);
        assert!(SweepConfig::resolve(Command::Polaritons, None, flags).is_err());
    }

    #[test]
    fn header_round_trips() {
        for recipe in FigureRecipe::ALL {
            let mut flags = PartialConfig::default();
            flags.recipe = Some(recipe);
            let cfg = SweepConfig::resolve(recipe.command(), None, flags).unwrap();
            let again = PartialConfig::from_toml(&cfg.to_toml()).unwrap();
            let cfg2 = SweepConfig::resolve(recipe.command(), Some(again), PartialConfig::default())
                .unwrap();
            assert_eq!(cfg, cfg2);
        }
    }
}
