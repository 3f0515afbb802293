//! Declarative experiment configuration: a JSON file plus CLI overrides.

use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context};
use corr_core::{CorrConfig, FunctionName};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Experiment {
    /// Single optimization runs, one row per trial.
    Optimize,
    /// Error as a function of the sample count, per function.
    Sweep,
    /// Error over a dimension x sample-count grid for one function.
    Scale,
    /// Budget-matched method comparison across dimensions.
    Compare,
    /// Constraint-value profile and surrogate traces for one run.
    MuTrace,
}

/// Method tokens accepted by the CLI and the compare experiment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodToken {
    Corr,
    CorrHybrid,
    RandomSearch,
    SimulatedAnnealing,
    NelderMead,
}

impl MethodToken {
    pub const ALL: [MethodToken; 5] = [
        MethodToken::Corr,
        MethodToken::CorrHybrid,
        MethodToken::RandomSearch,
        MethodToken::SimulatedAnnealing,
        MethodToken::NelderMead,
    ];

    pub fn token(&self) -> &'static str {
        match self {
            MethodToken::Corr => "corr",
            MethodToken::CorrHybrid => "corr_hybrid",
            MethodToken::RandomSearch => "random_search",
            MethodToken::SimulatedAnnealing => "simulated_annealing",
            MethodToken::NelderMead => "nelder_mead",
        }
    }
}

impl FromStr for MethodToken {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        MethodToken::ALL
            .iter()
            .copied()
            .find(|m| m.token() == s)
            .with_context(|| format!("unknown method token `{s}`"))
    }
}

impl std::fmt::Display for MethodToken {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    /// Function tokens; sweep runs all of them, the other experiments the first.
    pub functions: Vec<String>,
    pub dims: Vec<usize>,
    pub t_values: Vec<usize>,
    pub trials: usize,
    pub base_seed: u64,
    /// Methods of the compare experiment, in column order.
    pub methods: Vec<MethodToken>,
    pub mu_grid_points: usize,
    pub refine_iters: usize,
    pub box_bound: f64,
    pub lp_tol: f64,
    pub polish: bool,
    pub polish_budget: usize,
    pub r_override: Option<f64>,
    pub output_dir: PathBuf,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        let corr = CorrConfig::default();
        ExperimentConfig {
            experiment: Experiment::Optimize,
            functions: vec!["salomon".into()],
            dims: vec![1],
            t_values: vec![1000],
            trials: 1,
            base_seed: 42,
            methods: MethodToken::ALL.to_vec(),
            mu_grid_points: corr.mu_grid_points,
            refine_iters: corr.refine_iters,
            box_bound: corr.box_bound,
            lp_tol: corr.lp_tol,
            polish: false,
            polish_budget: corr.polish_budget,
            r_override: None,
            output_dir: PathBuf::from("results"),
        }
    }
}

impl ExperimentConfig {
    pub fn load(path: &std::path::Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let cfg: ExperimentConfig =
            serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        Ok(cfg)
    }

    pub fn function_names(&self) -> anyhow::Result<Vec<FunctionName>> {
        self.functions
            .iter()
            .map(|s| s.parse::<FunctionName>().map_err(anyhow::Error::from))
            .collect()
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.trials == 0 {
            bail!("trials must be at least 1");
        }
        if self.functions.is_empty() {
            bail!("functions list is empty");
        }
        self.function_names()?;
        if self.dims.is_empty() {
            bail!("dims list is empty");
        }
        if self.dims.iter().any(|&d| d == 0) {
            bail!("dims must all be at least 1");
        }
        if self.t_values.is_empty() {
            bail!("t_values list is empty");
        }
        if self.t_values.windows(2).any(|w| w[0] >= w[1]) {
            bail!("t_values must be strictly increasing");
        }
        if self.experiment == Experiment::Compare && self.methods.is_empty() {
            bail!("compare needs a non-empty method list");
        }
        if self.mu_grid_points < 3 {
            bail!("mu_grid_points must be at least 3");
        }
        Ok(())
    }

    /// Per-run optimizer settings for a given sample count and seed.
    pub fn corr_config(&self, t: usize, seed: u64, polish: bool) -> CorrConfig {
        CorrConfig {
            t,
            seed,
            mu_grid_points: self.mu_grid_points,
            refine_iters: self.refine_iters,
            r_override: self.r_override,
            box_bound: self.box_bound,
            lp_tol: self.lp_tol,
            polish,
            polish_budget: self.polish_budget,
        }
    }

    /// Shared evaluation budget for budget-matched comparisons: what a
    /// polished run may spend at most.
    pub fn matched_budget(&self, t: usize) -> usize {
        2 * t + self.mu_grid_points + 2 + self.refine_iters + self.polish_budget
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        ExperimentConfig::default().validate().unwrap();
    }

    #[test]
    fn json_round_trip() {
        let cfg = ExperimentConfig {
            experiment: Experiment::Sweep,
            functions: vec!["langerman".into(), "griewank".into()],
            dims: vec![1, 2],
            t_values: vec![20, 50],
            trials: 4,
            ..ExperimentConfig::default()
        };
        let text = serde_json::to_string_pretty(&cfg).unwrap();
        let back: ExperimentConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(cfg, back);
    }

    #[test]
    fn rejects_bad_grids() {
        let mut cfg = ExperimentConfig::default();
        cfg.t_values = vec![100, 100];
        assert!(cfg.validate().is_err());
        cfg.t_values = vec![100, 50];
        assert!(cfg.validate().is_err());
        cfg.t_values = vec![];
        assert!(cfg.validate().is_err());

        let mut cfg = ExperimentConfig::default();
        cfg.dims = vec![];
        assert!(cfg.validate().is_err());

        let mut cfg = ExperimentConfig::default();
        cfg.functions = vec!["nope".into()];
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn method_tokens_round_trip() {
        for m in MethodToken::ALL {
            assert_eq!(m.token().parse::<MethodToken>().unwrap(), m);
        }
        assert!("quasi_newton".parse::<MethodToken>().is_err());
    }
}
