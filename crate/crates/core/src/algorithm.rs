//! The generational optimization loop: initialize, sort, mate, vary, evaluate,
//! and environmentally select, with a pluggable survivor-selection seam.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dominance::fast_nondominated_sort;
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::scalar::Real;
use crate::selection::{environmental_selection, environmental_selection_crowding};
use crate::solution::{Population, Solution};
use crate::variation::{make_offspring, VariationParams};

/// Survivor-selection strategy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Selector {
    /// Boundary solutions plus greedy shifted-distance selection.
    E3a,
    /// NSGA-II-style crowding-distance truncation (comparative baseline).
    CrowdingBaseline,
}

impl Selector {
    pub fn name(&self) -> &'static str {
        match self {
            Selector::E3a => "e3a",
            Selector::CrowdingBaseline => "crowding",
        }
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e3a" => Ok(Selector::E3a),
            "crowding" | "crowding_baseline" => Ok(Selector::CrowdingBaseline),
            other => Err(Error::InvalidConfig(format!("unknown selector `{other}`"))),
        }
    }
}

/// Settings for one optimization run.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgorithmConfig {
    pub population_size: usize,
    pub max_generations: u32,
    pub variation: VariationParams,
    pub selector: Selector,
    pub seed: u64,
}

impl AlgorithmConfig {
    /// Standard settings for a problem with `d` decision variables.
    pub fn new(population_size: usize, d: usize, seed: u64) -> Self {
        Self {
            population_size,
            max_generations: 300,
            variation: VariationParams::for_dimension(d),
            selector: Selector::E3a,
            seed,
        }
    }

    pub fn with_selector(mut self, selector: Selector) -> Self {
        self.selector = selector;
        self
    }

    pub fn with_generations(mut self, max_generations: u32) -> Self {
        self.max_generations = max_generations;
        self
    }
}

/// Final population and bookkeeping from one run.
#[derive(Debug, Clone)]
pub struct RunOutcome<S> {
    pub population: Population<S>,
    pub generations: u32,
}

/// Runs the generational loop to completion.
pub fn run<S: Real>(problem: &dyn Problem<S>, cfg: &AlgorithmConfig) -> Result<RunOutcome<S>> {
    run_with_observer(problem, cfg, |_, _| {})
}

/// [`run`] invoking `observer(generation, population)` after every
/// environmental selection (generation 0 is the initial population).
pub fn run_with_observer<S: Real>(
    problem: &dyn Problem<S>,
    cfg: &AlgorithmConfig,
    mut observer: impl FnMut(u32, &Population<S>),
) -> Result<RunOutcome<S>> {
    validate(problem, cfg)?;
    cfg.variation.validate()?;

    let mut rng = RngStream::new(cfg.seed);
    let mut population = initialize(problem, cfg.population_size, &mut rng)?;
    observer(0, &population);

    for generation in 1..=cfg.max_generations {
        let fronts = fast_nondominated_sort(&mut population)?;
        let offspring = make_offspring(&population, &fronts, &cfg.variation, problem, &mut rng)?;

        let mut combined = population;
        for child in offspring.iter() {
            combined.push(child.clone())?;
        }
        population = match cfg.selector {
            Selector::E3a => environmental_selection(&mut combined, cfg.population_size)?,
            Selector::CrowdingBaseline => {
                environmental_selection_crowding(&mut combined, cfg.population_size)?
            }
        };
        observer(generation, &population);
    }

    Ok(RunOutcome {
        generations: cfg.max_generations,
        population,
    })
}

fn validate<S: Real>(problem: &dyn Problem<S>, cfg: &AlgorithmConfig) -> Result<()> {
    if cfg.population_size < problem.num_objectives() {
        return Err(Error::InvalidConfig(format!(
            "population size {} is below the objective count {}",
            cfg.population_size,
            problem.num_objectives()
        )));
    }
    if cfg.max_generations < 1 {
        return Err(Error::InvalidConfig("need at least one generation".into()));
    }
    Ok(())
}

fn initialize<S: Real>(
    problem: &dyn Problem<S>,
    n: usize,
    rng: &mut RngStream,
) -> Result<Population<S>> {
    let d = problem.num_variables();
    let mut population = Population::new(problem.id());
    for _ in 0..n {
        let x: Vec<S> = (0..d)
            .map(|i| {
                let lo = problem.lower()[i];
                let hi = problem.upper()[i];
                lo + rng.next_real::<S>() * (hi - lo)
            })
            .collect();
        let objectives = problem.evaluate(&x)?;
        population.push(Solution::new(x, objectives))?;
    }
    Ok(population)
}
