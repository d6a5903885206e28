//! Mating selection and offspring generation: binary rank tournaments,
//! simulated binary crossover, and polynomial mutation.

use serde::{Deserialize, Serialize};

use crate::dominance::FrontPartition;
use crate::error::{Error, Result};
use crate::problems::Problem;
use crate::rng::RngStream;
use crate::scalar::{real, Real};
use crate::solution::{Population, Solution};

/// Variation operator settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VariationParams {
    /// Per-pair crossover probability.
    pub p_crossover: f64,
    /// Per-variable mutation probability.
    pub p_mutation: f64,
    /// SBX distribution index.
    pub eta_c: f64,
    /// Polynomial-mutation distribution index.
    pub eta_m: f64,
}

impl VariationParams {
    /// Standard settings: crossover probability 1, mutation rate `1/d`, both
    /// distribution indices 20.
    pub fn for_dimension(d: usize) -> Self {
        Self {
            p_crossover: 1.0,
            p_mutation: 1.0 / d.max(1) as f64,
            eta_c: 20.0,
            eta_m: 20.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let prob = |p: f64| (0.0..=1.0).contains(&p);
        if !prob(self.p_crossover) || !prob(self.p_mutation) {
            return Err(Error::InvalidConfig(
                "variation probabilities must lie in [0, 1]".into(),
            ));
        }
        if self.eta_c <= 0.0 || self.eta_m <= 0.0 {
            return Err(Error::InvalidConfig(
                "distribution indices must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Binary tournament on nondomination rank.
///
/// Each tournament draws two distinct members uniformly; the lower rank wins,
/// equal ranks toss a fair coin. Tournaments repeat with replacement until
/// `count` parents are drawn.
pub fn mating_selection<S: Real>(
    pop: &Population<S>,
    fronts: &FrontPartition,
    count: usize,
    rng: &mut RngStream,
) -> Result<Vec<usize>> {
    if !count.is_multiple_of(2) {
        return Err(Error::OddParentCount(count));
    }
    if pop.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    let n = pop.len();
    if fronts.total() != n || fronts.fronts().iter().flatten().any(|&i| i >= n) {
        return Err(Error::InvalidConfig(
            "front partition does not cover the population".into(),
        ));
    }
    let mut ranks = vec![0usize; n];
    for (level, front) in fronts.fronts().iter().enumerate() {
        for &i in front {
            ranks[i] = level;
        }
    }
    let rank = |i: usize| ranks[i];

    let mut parents = Vec::with_capacity(count);
    for _ in 0..count {
        if n == 1 {
            parents.push(0);
            continue;
        }
        let a = rng.index(n);
        let mut b = rng.index(n - 1);
        if b >= a {
            b += 1;
        }
        let winner = match rank(a).cmp(&rank(b)) {
            std::cmp::Ordering::Less => a,
            std::cmp::Ordering::Greater => b,
            std::cmp::Ordering::Equal => {
                if rng.next_f64() < 0.5 {
                    a
                } else {
                    b
                }
            }
        };
        parents.push(winner);
    }
    Ok(parents)
}

/// Spread factor `beta(u)` of the crossover: `(2u)^(1/(eta+1))` for
/// `u <= 0.5`, `(1/(2(1-u)))^(1/(eta+1))` otherwise. `beta(0.5) = 1`
/// reproduces the parents.
fn spread_factor(u: f64, eta_c: f64) -> f64 {
    let exponent = 1.0 / (eta_c + 1.0);
    if u <= 0.5 {
        (2.0 * u).powf(exponent)
    } else {
        (1.0 / (2.0 * (1.0 - u))).powf(exponent)
    }
}

/// One variable's child pair under spread factor `beta`, symmetric around the
/// parents' midpoint.
fn sbx_children<S: Real>(x1: S, x2: S, beta: S) -> (S, S) {
    let half = real::<S>(0.5);
    let sum = x1 + x2;
    let diff = x2 - x1;
    (half * (sum - beta * diff), half * (sum + beta * diff))
}

/// Simulated binary crossover on one parent pair.
///
/// With probability `1 - p_crossover` the children are plain copies. Otherwise
/// each variable applies the spread-factor transform with probability 0.5
/// (exponent `1/(eta_c + 1)`) and copies through otherwise. Children are
/// clamped to the box bounds.
pub fn sbx_crossover<S: Real>(
    p1: &[S],
    p2: &[S],
    params: &VariationParams,
    lower: &[S],
    upper: &[S],
    rng: &mut RngStream,
) -> (Vec<S>, Vec<S>) {
    debug_assert_eq!(p1.len(), p2.len());
    let mut c1 = p1.to_vec();
    let mut c2 = p2.to_vec();

    if rng.next_f64() > params.p_crossover {
        return (c1, c2);
    }

    for i in 0..p1.len() {
        if rng.next_f64() >= 0.5 {
            continue;
        }
        let (x1, x2) = (p1[i], p2[i]);
        if (x1 - x2).abs() <= real(1e-14) {
            continue;
        }
        let beta = real::<S>(spread_factor(rng.next_f64(), params.eta_c));
        (c1[i], c2[i]) = sbx_children(x1, x2, beta);
    }
    clamp(&mut c1, lower, upper);
    clamp(&mut c2, lower, upper);
    (c1, c2)
}

/// Polynomial mutation with the bound-aware perturbation.
///
/// Each variable mutates independently with probability `p_mutation`; the
/// perturbation exponent is `1/(eta_m + 1)` and the step is scaled by the
/// variable's box width. The result is clamped to the bounds.
pub fn polynomial_mutation<S: Real>(
    x: &[S],
    params: &VariationParams,
    lower: &[S],
    upper: &[S],
    rng: &mut RngStream,
) -> Vec<S> {
    let mut out = x.to_vec();
    let exponent = 1.0 / (params.eta_m + 1.0);
    for i in 0..out.len() {
        if rng.next_f64() >= params.p_mutation {
            continue;
        }
        let lo = lower[i].to_f64().unwrap();
        let hi = upper[i].to_f64().unwrap();
        let width = hi - lo;
        if width <= 0.0 {
            continue;
        }
        let v = out[i].to_f64().unwrap();
        let u = rng.next_f64();
        let delta = if u <= 0.5 {
            let d1 = (v - lo) / width;
            (2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1).powf(params.eta_m + 1.0)).powf(exponent) - 1.0
        } else {
            let d2 = (hi - v) / width;
            1.0 - (2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2).powf(params.eta_m + 1.0))
                .powf(exponent)
        };
        out[i] = real::<S>(v + delta * width);
    }
    clamp(&mut out, lower, upper);
    out
}

fn clamp<S: Real>(values: &mut [S], lower: &[S], upper: &[S]) {
    for i in 0..values.len() {
        values[i] = values[i].max(lower[i]).min(upper[i]);
    }
}

/// Produces an evaluated offspring population of size `|pop|`.
///
/// Parents come from the rank tournament; consecutive pairs undergo SBX and
/// polynomial mutation. An odd population draws one extra parent and discards
/// the surplus child.
pub fn make_offspring<S: Real>(
    pop: &Population<S>,
    fronts: &FrontPartition,
    params: &VariationParams,
    problem: &dyn Problem<S>,
    rng: &mut RngStream,
) -> Result<Population<S>> {
    params.validate()?;
    let n = pop.len();
    let parent_count = if n.is_multiple_of(2) { n } else { n + 1 };
    let parents = mating_selection(pop, fronts, parent_count, rng)?;

    let mut offspring = Population::new(pop.problem_id());
    'pairs: for pair in parents.chunks_exact(2) {
        let p1 = pop.get(pair[0]).decision();
        let p2 = pop.get(pair[1]).decision();
        let (c1, c2) = sbx_crossover(p1, p2, params, problem.lower(), problem.upper(), rng);
        for child in [c1, c2] {
            if offspring.len() == n {
                break 'pairs;
            }
            let mutated =
                polynomial_mutation(&child, params, problem.lower(), problem.upper(), rng);
            let objectives = problem.evaluate(&mutated)?;
            offspring.push(Solution::new(mutated, objectives))?;
        }
    }
    debug_assert_eq!(offspring.len(), n);
    Ok(offspring)
}
