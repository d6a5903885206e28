//! Core domain types: evaluated solutions and populations.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A decision vector together with its evaluated objective values.
///
/// Solutions are immutable once evaluated; the nondomination `rank` is the
/// only annotation that changes, written back by
/// [`crate::dominance::fast_nondominated_sort`].
#[derive(Debug, Clone, PartialEq)]
pub struct Solution<S> {
    decision: Vec<S>,
    objectives: Vec<S>,
    rank: Option<usize>,
}

impl<S: Real> Solution<S> {
    pub fn new(decision: Vec<S>, objectives: Vec<S>) -> Self {
        Self {
            decision,
            objectives,
            rank: None,
        }
    }

    /// A solution carrying objective values only, for selection and metric
    /// contexts where the decision vector is irrelevant.
    pub fn from_objectives(objectives: Vec<S>) -> Self {
        Self::new(Vec::new(), objectives)
    }

    pub fn decision(&self) -> &[S] {
        &self.decision
    }

    pub fn objectives(&self) -> &[S] {
        &self.objectives
    }

    /// Nondomination level from the most recent sort (0-based), if any.
    pub fn rank(&self) -> Option<usize> {
        self.rank
    }

    pub(crate) fn set_rank(&mut self, rank: usize) {
        self.rank = Some(rank);
    }
}

/// Ordered collection of solutions evaluated on one problem.
///
/// Iteration order is insertion order; all members share the same decision
/// and objective dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct Population<S> {
    members: Vec<Solution<S>>,
    problem_id: String,
}

impl<S: Real> Population<S> {
    pub fn new(problem_id: impl Into<String>) -> Self {
        Self {
            members: Vec::new(),
            problem_id: problem_id.into(),
        }
    }

    pub fn with_members(problem_id: impl Into<String>, members: Vec<Solution<S>>) -> Result<Self> {
        let mut pop = Self::new(problem_id);
        for member in members {
            pop.push(member)?;
        }
        Ok(pop)
    }

    /// Convenience constructor from bare objective vectors.
    pub fn from_objective_rows(problem_id: impl Into<String>, rows: Vec<Vec<S>>) -> Result<Self> {
        Self::with_members(
            problem_id,
            rows.into_iter().map(Solution::from_objectives).collect(),
        )
    }

    /// Appends a solution, enforcing dimension consistency with the first member.
    pub fn push(&mut self, solution: Solution<S>) -> Result<()> {
        if let Some(first) = self.members.first() {
            if first.objectives().len() != solution.objectives().len() {
                return Err(Error::DimensionMismatch {
                    left: first.objectives().len(),
                    right: solution.objectives().len(),
                });
            }
            if first.decision().len() != solution.decision().len() {
                return Err(Error::DimensionMismatch {
                    left: first.decision().len(),
                    right: solution.decision().len(),
                });
            }
        }
        self.members.push(solution);
        Ok(())
    }

    pub fn problem_id(&self) -> &str {
        &self.problem_id
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, index: usize) -> &Solution<S> {
        &self.members[index]
    }

    pub(crate) fn get_mut(&mut self, index: usize) -> &mut Solution<S> {
        &mut self.members[index]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Solution<S>> {
        self.members.iter()
    }

    /// Number of objectives per member (0 for an empty population).
    pub fn num_objectives(&self) -> usize {
        self.members.first().map_or(0, |s| s.objectives().len())
    }

    /// Objective values of member `index`.
    pub fn objectives_row(&self, index: usize) -> &[S] {
        self.members[index].objectives()
    }

    /// Copies all objective vectors into an `n x m` matrix.
    pub fn objective_matrix(&self) -> Vec<Vec<S>> {
        self.members
            .iter()
            .map(|s| s.objectives().to_vec())
            .collect()
    }

    /// Component-wise minimum of all objective vectors.
    pub fn ideal_point(&self) -> Result<Vec<S>> {
        self.fold_columns(|a, b| a.min(b))
    }

    /// Component-wise maximum of all objective vectors.
    pub fn nadir_point(&self) -> Result<Vec<S>> {
        self.fold_columns(|a, b| a.max(b))
    }

    fn fold_columns(&self, combine: impl Fn(S, S) -> S) -> Result<Vec<S>> {
        let first = self.members.first().ok_or(Error::EmptyPopulation)?;
        let mut acc = first.objectives().to_vec();
        for member in &self.members[1..] {
            for (slot, &value) in acc.iter_mut().zip(member.objectives()) {
                *slot = combine(*slot, value);
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    fn pop(rows: &[&[f64]]) -> Population<f64> {
        Population::from_objective_rows("test", rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn ideal_point_examples() {
        assert_eq!(
            pop(&[&[1.0, 2.0], &[2.0, 1.0]]).ideal_point().unwrap(),
            vec![1.0, 1.0]
        );
        assert_eq!(pop(&[&[0.5, 0.5]]).ideal_point().unwrap(), vec![0.5, 0.5]);
    }

    #[test]
    fn nadir_point_examples() {
        assert_eq!(
            pop(&[&[1.0, 2.0], &[2.0, 1.0]]).nadir_point().unwrap(),
            vec![2.0, 2.0]
        );
        assert_eq!(
            pop(&[&[0.0, 0.0, 0.0]]).nadir_point().unwrap(),
            vec![0.0, 0.0, 0.0]
        );
    }

    #[test]
    fn empty_population_errors() {
        let empty: Population<f64> = Population::new("test");
        assert_eq!(empty.ideal_point(), Err(Error::EmptyPopulation));
        assert_eq!(empty.nadir_point(), Err(Error::EmptyPopulation));
    }

    #[test]
    fn ideal_and_nadir_match_brute_force_on_random_vectors() {
        let mut rng = RngStream::new(11);
        let rows: Vec<Vec<f64>> = (0..20)
            .map(|_| (0..3).map(|_| rng.uniform(-5.0, 5.0)).collect())
            .collect();
        let mut expected_min = vec![f64::INFINITY; 3];
        let mut expected_max = vec![f64::NEG_INFINITY; 3];
        for row in &rows {
            for i in 0..3 {
                expected_min[i] = expected_min[i].min(row[i]);
                expected_max[i] = expected_max[i].max(row[i]);
            }
        }
        let population = Population::from_objective_rows("test", rows).unwrap();
        assert_eq!(population.ideal_point().unwrap(), expected_min);
        assert_eq!(population.nadir_point().unwrap(), expected_max);
        // ideal <= nadir component-wise
        for (lo, hi) in expected_min.iter().zip(&expected_max) {
            assert!(lo <= hi);
        }
    }

    #[test]
    fn push_rejects_mismatched_dimensions() {
        let mut population = pop(&[&[1.0, 2.0]]);
        let err = population
            .push(Solution::from_objectives(vec![1.0, 2.0, 3.0]))
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
    }
}
