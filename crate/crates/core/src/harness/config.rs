//! Campaign configuration: a TOML file with the standard protocol pre-filled.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algorithm::Selector;
use crate::harness::{HarnessError, HarnessResult};
use crate::problems;
use crate::rng::derive_seed;
use crate::variation::VariationParams;

/// Environment variable overriding the configured output directory.
pub const OUTPUT_DIR_ENV: &str = "E3A_OUTPUT_DIR";

/// One benchmark instance: a problem id plus an objective count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemSpec {
    pub id: String,
    pub m: usize,
    /// Optional plain-text front file replacing the in-process analytic
    /// sampler as the IGD/HV reference (cross-validation against other
    /// platforms).
    #[serde(default)]
    pub reference_front: Option<PathBuf>,
}

impl ProblemSpec {
    /// Identifier used in seeds, front dumps, and the `fronts` CLI cell key.
    pub fn instance_id(&self) -> String {
        format!("{}_m{}", self.id, self.m)
    }
}

/// Optional overrides for the variation operators; unset fields keep the
/// standard protocol (crossover 1.0, mutation 1/d, both indices 20).
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariationOverrides {
    pub p_crossover: Option<f64>,
    pub p_mutation: Option<f64>,
    pub eta_c: Option<f64>,
    pub eta_m: Option<f64>,
}

impl VariationOverrides {
    pub fn resolve(&self, d: usize) -> VariationParams {
        let mut params = VariationParams::for_dimension(d);
        if let Some(v) = self.p_crossover {
            params.p_crossover = v;
        }
        if let Some(v) = self.p_mutation {
            params.p_mutation = v;
        }
        if let Some(v) = self.eta_c {
            params.eta_c = v;
        }
        if let Some(v) = self.eta_m {
            params.eta_m = v;
        }
        params
    }
}

/// Declarative description of a campaign: every (problem x algorithm x run)
/// cell the runner executes, plus the shared protocol settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub master_seed: u64,
    /// Independent runs per cell.
    #[serde(default = "default_runs")]
    pub runs: u32,
    #[serde(default = "default_generations")]
    pub generations: u32,
    pub problems: Vec<ProblemSpec>,
    /// Selector names: `e3a` or `crowding`.
    pub algorithms: Vec<String>,
    /// `[m, n]` pairs mapping objective counts to population sizes.
    #[serde(default = "default_population_sizes")]
    pub population_sizes: Vec<(usize, usize)>,
    /// IGD reference-set size; defaults to ten times the population size.
    #[serde(default)]
    pub igd_reference_points: Option<usize>,
    #[serde(default = "default_hv_samples")]
    pub hv_samples: u64,
    /// Write each run's final objective matrix under `<output_dir>/fronts/`.
    #[serde(default = "default_true")]
    pub dump_fronts: bool,
    pub output_dir: PathBuf,
    #[serde(default)]
    pub variation: VariationOverrides,
}

fn default_runs() -> u32 {
    30
}

fn default_generations() -> u32 {
    300
}

fn default_population_sizes() -> Vec<(usize, usize)> {
    vec![(3, 105), (5, 126), (10, 230), (15, 240)]
}

fn default_hv_samples() -> u64 {
    1_000_000
}

fn default_true() -> bool {
    true
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> HarnessResult<Self> {
        let text = std::fs::read_to_string(path)?;
        let cfg: ExperimentConfig = toml::from_str(&text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Fails fast on unknown problems or algorithms, missing population
    /// sizes, and degenerate counts.
    pub fn validate(&self) -> HarnessResult<()> {
        if self.runs < 1 {
            return Err(HarnessError::Invalid("runs must be at least 1".into()));
        }
        if self.problems.is_empty() {
            return Err(HarnessError::Invalid("no problems configured".into()));
        }
        if self.algorithms.is_empty() {
            return Err(HarnessError::Invalid("no algorithms configured".into()));
        }
        for spec in &self.problems {
            problems::by_name::<f64>(&spec.id, spec.m)?;
            if self.population_size_for(spec.m).is_none() {
                return Err(HarnessError::Invalid(format!(
                    "no population size configured for m = {}",
                    spec.m
                )));
            }
            if let Some(path) = &spec.reference_front {
                if !path.is_file() {
                    return Err(HarnessError::Invalid(format!(
                        "reference front file {} does not exist",
                        path.display()
                    )));
                }
            }
        }
        for name in &self.algorithms {
            Selector::from_str(name)?;
        }
        Ok(())
    }

    pub fn population_size_for(&self, m: usize) -> Option<usize> {
        self.population_sizes
            .iter()
            .find(|(objectives, _)| *objectives == m)
            .map(|&(_, n)| n)
    }

    pub fn igd_points_for(&self, population_size: usize) -> usize {
        self.igd_reference_points.unwrap_or(10 * population_size)
    }

    /// Per-cell seed: a documented hash of the master seed, the problem
    /// instance, the algorithm name, and the run index.
    pub fn seed_for(&self, problem: &ProblemSpec, algorithm: &str, run: u32) -> u64 {
        derive_seed(
            self.master_seed,
            &[&problem.instance_id(), algorithm, &run.to_string()],
        )
    }

    /// Output directory, honoring the [`OUTPUT_DIR_ENV`] override.
    pub fn resolved_output_dir(&self) -> PathBuf {
        match std::env::var(OUTPUT_DIR_ENV) {
            Ok(dir) if !dir.is_empty() => PathBuf::from(dir),
            _ => self.output_dir.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal_toml() -> &'static str {
        r#"
            master_seed = 42
            output_dir = "results"
            problems = [{ id = "maf1", m = 3 }]
            algorithms = ["e3a", "crowding"]
        "#
    }

    #[test]
    fn defaults_are_the_standard_protocol() {
        let cfg: ExperimentConfig = toml::from_str(minimal_toml()).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.runs, 30);
        assert_eq!(cfg.generations, 300);
        assert_eq!(cfg.population_size_for(3), Some(105));
        assert_eq!(cfg.population_size_for(5), Some(126));
        assert_eq!(cfg.population_size_for(10), Some(230));
        assert_eq!(cfg.population_size_for(15), Some(240));
        assert_eq!(cfg.hv_samples, 1_000_000);
        assert_eq!(cfg.igd_points_for(105), 1050);
        assert!(cfg.dump_fronts);
        let params = cfg.variation.resolve(12);
        assert_eq!(params.p_crossover, 1.0);
        assert_eq!(params.p_mutation, 1.0 / 12.0);
        assert_eq!(params.eta_c, 20.0);
        assert_eq!(params.eta_m, 20.0);
    }

    #[test]
    fn unknown_problem_or_algorithm_fails_fast() {
        let mut cfg: ExperimentConfig = toml::from_str(minimal_toml()).unwrap();
        cfg.problems[0].id = "maf99".into();
        assert!(cfg.validate().is_err());

        let mut cfg: ExperimentConfig = toml::from_str(minimal_toml()).unwrap();
        cfg.algorithms.push("simulated_annealing".into());
        assert!(cfg.validate().is_err());

        let mut cfg: ExperimentConfig = toml::from_str(minimal_toml()).unwrap();
        cfg.problems[0].m = 4; // no population size configured for m = 4
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn seeds_are_deterministic_and_cell_distinct() {
        let cfg: ExperimentConfig = toml::from_str(minimal_toml()).unwrap();
        let spec = &cfg.problems[0];
        let a = cfg.seed_for(spec, "e3a", 0);
        assert_eq!(a, cfg.seed_for(spec, "e3a", 0));
        assert_ne!(a, cfg.seed_for(spec, "e3a", 1));
        assert_ne!(a, cfg.seed_for(spec, "crowding", 0));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = format!("{}\nturbo = true", minimal_toml());
        assert!(toml::from_str::<ExperimentConfig>(&text).is_err());
    }
}
