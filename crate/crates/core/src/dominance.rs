//! Pareto-dominance comparison and fast nondominated sorting.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::solution::Population;

/// Outcome of comparing two objective vectors under minimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceRelation {
    /// `a` is no worse everywhere and strictly better somewhere.
    Dominates,
    /// `b` dominates `a`.
    DominatedBy,
    /// Neither vector dominates the other.
    NonDominated,
    /// The vectors are identical.
    Equal,
}

/// Compares two objective vectors component-wise.
pub fn dominates<S: Real>(a: &[S], b: &[S]) -> Result<DominanceRelation> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let mut a_better = false;
    let mut b_better = false;
    for (&x, &y) in a.iter().zip(b) {
        if x < y {
            a_better = true;
        } else if y < x {
            b_better = true;
        }
        if a_better && b_better {
            return Ok(DominanceRelation::NonDominated);
        }
    }
    Ok(match (a_better, b_better) {
        (true, false) => DominanceRelation::Dominates,
        (false, true) => DominanceRelation::DominatedBy,
        (false, false) => DominanceRelation::Equal,
        (true, true) => unreachable!(),
    })
}

/// Indices of a population grouped by nondomination rank.
///
/// Fronts partition `0..n`; within each front the original population index
/// order is preserved, so downstream tie-breaking is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontPartition {
    fronts: Vec<Vec<usize>>,
}

impl FrontPartition {
    pub fn fronts(&self) -> &[Vec<usize>] {
        &self.fronts
    }

    pub fn front(&self, level: usize) -> &[usize] {
        &self.fronts[level]
    }

    pub fn num_fronts(&self) -> usize {
        self.fronts.len()
    }

    /// Total number of solutions across all fronts.
    pub fn total(&self) -> usize {
        self.fronts.iter().map(Vec::len).sum()
    }
}

/// Sorts a population into nondomination fronts and writes each solution's
/// rank back onto it.
///
/// Equal objective vectors are mutually nondominated and land in the same
/// front. Runs the bookkeeping variant that counts dominators per solution,
/// `O(m n^2)` comparisons.
pub fn fast_nondominated_sort<S: Real>(pop: &mut Population<S>) -> Result<FrontPartition> {
    let n = pop.len();
    if n == 0 {
        return Err(Error::EmptyPopulation);
    }

    let mut domination_count = vec![0usize; n];
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut current: Vec<usize> = Vec::new();

    for i in 0..n {
        for j in (i + 1)..n {
            match dominates(pop.objectives_row(i), pop.objectives_row(j))? {
                DominanceRelation::Dominates => {
                    dominated_by[i].push(j);
                    domination_count[j] += 1;
                }
                DominanceRelation::DominatedBy => {
                    dominated_by[j].push(i);
                    domination_count[i] += 1;
                }
                DominanceRelation::NonDominated | DominanceRelation::Equal => {}
            }
        }
        if domination_count[i] == 0 {
            current.push(i);
        }
    }

    let mut fronts = Vec::new();
    let mut level = 0usize;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            pop.get_mut(p).set_rank(level);
            for &q in &dominated_by[p] {
                domination_count[q] -= 1;
                if domination_count[q] == 0 {
                    next.push(q);
                }
            }
        }
        // Preserve original index order within the front.
        next.sort_unstable();
        fronts.push(std::mem::replace(&mut current, next));
        level += 1;
    }

    Ok(FrontPartition { fronts })
}
