//! Environmental selection: boundary solutions via an axis-aligned modified
//! Tchebycheff scalarizer, then greedy max–min selection on shifted distances,
//! plus a crowding-distance baseline truncator.

use crate::dominance::fast_nondominated_sort;
use crate::error::{Error, Result};
use crate::normalization::{build_context, normalize, NormalizationContext};
use crate::scalar::{real, Real};
use crate::solution::Population;

/// Off-axis component of a boundary weight vector.
pub const AXIS_WEIGHT_EPSILON: f64 = 1e-6;

/// Weight vector pointing almost exactly along one objective axis:
/// component `axis` is 1, every other component is `1e-6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxisWeight {
    axis: usize,
    len: usize,
}

impl AxisWeight {
    pub fn new(axis: usize, len: usize) -> Self {
        assert!(axis < len, "axis out of range");
        Self { axis, len }
    }

    pub fn axis(&self) -> usize {
        self.axis
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Weight component `i`.
    pub fn component<S: Real>(&self, i: usize) -> S {
        debug_assert!(i < self.len);
        if i == self.axis {
            S::one()
        } else {
            real(AXIS_WEIGHT_EPSILON)
        }
    }
}

/// Modified Tchebycheff scalarizer: `max_i (1/w_i) * |x_i - z_min_i|`.
pub fn agg<S: Real>(x: &[S], weight: &AxisWeight, z_min: &[S]) -> S {
    debug_assert_eq!(x.len(), z_min.len());
    x.iter()
        .zip(z_min)
        .enumerate()
        .map(|(i, (&v, &z))| (v - z).abs() / weight.component::<S>(i))
        .fold(S::neg_infinity(), S::max)
}

/// Selects the per-axis boundary solutions of a candidate set.
///
/// For each objective axis the scalarizer runs over ideal-translated
/// objectives (ties to the lowest candidate index); duplicate winners are
/// removed, so the result holds between 1 and `m` distinct indices.
pub fn boundary_selection<S: Real>(
    candidates: &Population<S>,
    ctx: &NormalizationContext<S>,
) -> Vec<usize> {
    boundary_selection_scored(candidates, ctx)
        .into_iter()
        .map(|(index, _, _)| index)
        .collect()
}

/// Boundary selection retaining each winner's scalarizer value and the first
/// axis it won, in first-won-axis order.
fn boundary_selection_scored<S: Real>(
    candidates: &Population<S>,
    ctx: &NormalizationContext<S>,
) -> Vec<(usize, S, usize)> {
    let m = ctx.ideal().len();
    let zeros = vec![S::zero(); m];
    let translated: Vec<Vec<S>> = (0..candidates.len())
        .map(|i| ctx.translate(candidates.objectives_row(i)))
        .collect();

    let mut winners: Vec<(usize, S, usize)> = Vec::new();
    for axis in 0..m {
        let weight = AxisWeight::new(axis, m);
        let mut best = 0usize;
        let mut best_value = agg(&translated[0], &weight, &zeros);
        for (i, row) in translated.iter().enumerate().skip(1) {
            let value = agg(row, &weight, &zeros);
            if value < best_value {
                best = i;
                best_value = value;
            }
        }
        match winners.iter_mut().find(|(index, _, _)| *index == best) {
            Some(entry) => {
                if best_value < entry.1 {
                    entry.1 = best_value;
                }
            }
            None => winners.push((best, best_value, axis)),
        }
    }
    winners
}

/// Shifted copy of `y_hat` relative to `x_hat`: every component of `y_hat`
/// that is better (smaller) than the corresponding component of `x_hat` is
/// raised to it.
pub fn shift<S: Real>(y_hat: &[S], x_hat: &[S]) -> Vec<S> {
    debug_assert_eq!(y_hat.len(), x_hat.len());
    y_hat
        .iter()
        .zip(x_hat)
        .map(|(&y, &x)| if y < x { x } else { y })
        .collect()
}

/// Euclidean distance from `x_hat` to the shifted copy of `y_hat`.
///
/// Only the components where `y_hat` is worse than `x_hat` contribute, so a
/// `y_hat` that dominates `x_hat` is at distance zero.
pub fn shifted_distance<S: Real>(x_hat: &[S], y_hat: &[S]) -> S {
    debug_assert_eq!(x_hat.len(), y_hat.len());
    x_hat
        .iter()
        .zip(y_hat)
        .map(|(&x, &y)| if y > x { (y - x) * (y - x) } else { S::zero() })
        .fold(S::zero(), |acc, v| acc + v)
        .sqrt()
}

/// Minimum shifted distance from `x_hat` to the selected set.
pub fn sd<S: Real>(x_hat: &[S], selected: &[Vec<S>]) -> Result<S> {
    if selected.is_empty() {
        return Err(Error::EmptySelectedSet);
    }
    Ok(selected
        .iter()
        .map(|y| shifted_distance(x_hat, y))
        .fold(S::infinity(), S::min))
}

/// One step of the greedy non-boundary selection: the chosen candidate and
/// its distance score at selection time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreedyPick<S> {
    pub index: usize,
    pub sd: S,
}

/// Growing selected set plus the cached minimum shifted distance of every
/// still-unselected candidate to it.
#[derive(Debug)]
struct SelectionState<S> {
    selected: Vec<usize>,
    /// `sd_cache[i]` is meaningful only while `i` is unselected.
    sd_cache: Vec<S>,
    unselected: Vec<usize>,
}

impl<S: Real> SelectionState<S> {
    fn init(normalized: &[Vec<S>], q0: &[usize]) -> Self {
        let n = normalized.len();
        let unselected: Vec<usize> = (0..n).filter(|i| !q0.contains(i)).collect();
        let mut sd_cache = vec![S::infinity(); n];
        for &i in &unselected {
            for &s in q0 {
                let d = shifted_distance(&normalized[i], &normalized[s]);
                if d < sd_cache[i] {
                    sd_cache[i] = d;
                }
            }
        }
        Self {
            selected: q0.to_vec(),
            sd_cache,
            unselected,
        }
    }

    /// Picks the unselected candidate with maximum cached sd (ties to the
    /// lowest index) and refreshes the remaining caches against it.
    fn pick(&mut self, normalized: &[Vec<S>]) -> GreedyPick<S> {
        // `unselected` is in ascending index order, so a strict comparison
        // keeps the lowest index on ties.
        let mut best_pos = 0usize;
        for pos in 1..self.unselected.len() {
            if self.sd_cache[self.unselected[pos]] > self.sd_cache[self.unselected[best_pos]] {
                best_pos = pos;
            }
        }
        let chosen = self.unselected.remove(best_pos);
        let pick = GreedyPick {
            index: chosen,
            sd: self.sd_cache[chosen],
        };
        self.selected.push(chosen);
        for &i in &self.unselected {
            let d = shifted_distance(&normalized[i], &normalized[chosen]);
            if d < self.sd_cache[i] {
                self.sd_cache[i] = d;
            }
        }
        pick
    }
}

/// Extends the selected set `q0` to exactly `k` members by repeatedly adding
/// the unselected candidate with the largest minimum shifted distance to the
/// current selection.
pub fn nonboundary_selection<S: Real>(
    candidates: &Population<S>,
    ctx: &NormalizationContext<S>,
    q0: &[usize],
    k: usize,
) -> Result<Vec<usize>> {
    nonboundary_selection_traced(candidates, ctx, q0, k).map(|(selected, _)| selected)
}

/// [`nonboundary_selection`] that also reports each greedy pick's sd value.
pub fn nonboundary_selection_traced<S: Real>(
    candidates: &Population<S>,
    ctx: &NormalizationContext<S>,
    q0: &[usize],
    k: usize,
) -> Result<(Vec<usize>, Vec<GreedyPick<S>>)> {
    if k > candidates.len() {
        return Err(Error::BudgetExceedsCandidates {
            requested: k,
            available: candidates.len(),
        });
    }
    if q0.len() > k {
        return Err(Error::InvalidConfig(format!(
            "selected set of size {} already exceeds budget {k}; truncate the boundary set first",
            q0.len()
        )));
    }

    let normalized = normalize(candidates, ctx);
    let mut state = SelectionState::init(&normalized, q0);
    let mut trace = Vec::with_capacity(k - q0.len());
    while state.selected.len() < k {
        trace.push(state.pick(&normalized));
    }
    Ok((state.selected, trace))
}

/// Truncates a candidate set to `k` survivors: boundary solutions first, then
/// greedy non-boundary selection on shifted distances.
///
/// When the deduplicated boundary set itself exceeds `k` (possible only for
/// `k < m`), the `k` boundary solutions with the smallest scalarizer value
/// under their own axis weight are kept, ties broken by objective axis.
pub fn population_maintenance<S: Real>(candidates: &Population<S>, k: usize) -> Result<Vec<usize>> {
    if k == 0 || k >= candidates.len() {
        return Err(Error::NoTruncationNeeded {
            budget: k,
            candidates: candidates.len(),
        });
    }
    let ctx = build_context(candidates)?;
    let mut boundary = boundary_selection_scored(candidates, &ctx);
    if boundary.len() > k {
        boundary.sort_by(|a, b| {
            a.1.partial_cmp(&b.1)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.2.cmp(&b.2))
        });
        boundary.truncate(k);
    }
    let q0: Vec<usize> = boundary.into_iter().map(|(index, _, _)| index).collect();
    nonboundary_selection(candidates, &ctx, &q0, k)
}

/// Survivor selection from a combined parent+offspring population.
///
/// Whole fronts are accepted while they fit; the critical front is truncated
/// with [`population_maintenance`]. Writes nondomination ranks back onto
/// `combined` as a side effect of sorting.
pub fn environmental_selection<S: Real>(
    combined: &mut Population<S>,
    n: usize,
) -> Result<Population<S>> {
    select_survivors(combined, n, population_maintenance)
}

/// Survivor selection truncating the critical front by crowding distance
/// instead of shifted distances (comparative baseline).
pub fn environmental_selection_crowding<S: Real>(
    combined: &mut Population<S>,
    n: usize,
) -> Result<Population<S>> {
    select_survivors(combined, n, crowding_truncation_baseline)
}

fn select_survivors<S: Real>(
    combined: &mut Population<S>,
    n: usize,
    truncate: impl Fn(&Population<S>, usize) -> Result<Vec<usize>>,
) -> Result<Population<S>> {
    if combined.len() < n {
        return Err(Error::InsufficientSolutions {
            requested: n,
            available: combined.len(),
        });
    }
    let partition = fast_nondominated_sort(combined)?;

    let mut accepted: Vec<usize> = Vec::with_capacity(n);
    let mut critical: Option<&[usize]> = None;
    for front in partition.fronts() {
        if accepted.len() + front.len() < n {
            accepted.extend_from_slice(front);
        } else {
            critical = Some(front);
            break;
        }
    }

    if accepted.len() < n {
        let front = critical.expect("critical front exists when budget unfilled");
        let remaining = n - accepted.len();
        if remaining == front.len() {
            accepted.extend_from_slice(front);
        } else {
            let candidates = Population::with_members(
                combined.problem_id(),
                front.iter().map(|&i| combined.get(i).clone()).collect(),
            )?;
            let kept = truncate(&candidates, remaining)?;
            accepted.extend(kept.into_iter().map(|local| front[local]));
        }
    }

    debug_assert_eq!(accepted.len(), n);
    Population::with_members(
        combined.problem_id(),
        accepted.iter().map(|&i| combined.get(i).clone()).collect(),
    )
}

/// Keeps the `k` candidates with the largest NSGA-II crowding distance.
///
/// Per-objective extreme candidates receive infinite distance. Distance ties
/// favor the lower candidate index; the result is in ascending index order.
pub fn crowding_truncation_baseline<S: Real>(
    candidates: &Population<S>,
    k: usize,
) -> Result<Vec<usize>> {
    if k >= candidates.len() {
        return Err(Error::NoTruncationNeeded {
            budget: k,
            candidates: candidates.len(),
        });
    }
    let distances = crowding_distances(candidates);
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by(|&a, &b| {
        distances[b]
            .partial_cmp(&distances[a])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.cmp(&b))
    });
    let mut kept: Vec<usize> = order.into_iter().take(k).collect();
    kept.sort_unstable();
    Ok(kept)
}

fn crowding_distances<S: Real>(candidates: &Population<S>) -> Vec<S> {
    let n = candidates.len();
    let m = candidates.num_objectives();
    let mut distances = vec![S::zero(); n];
    for col in 0..m {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| {
            candidates.objectives_row(a)[col]
                .partial_cmp(&candidates.objectives_row(b)[col])
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.cmp(&b))
        });
        let lo = candidates.objectives_row(order[0])[col];
        let hi = candidates.objectives_row(order[n - 1])[col];
        distances[order[0]] = S::infinity();
        distances[order[n - 1]] = S::infinity();
        let range = hi - lo;
        if range <= S::zero() {
            continue;
        }
        for w in 1..n.saturating_sub(1) {
            let prev = candidates.objectives_row(order[w - 1])[col];
            let next = candidates.objectives_row(order[w + 1])[col];
            distances[order[w]] += (next - prev) / range;
        }
    }
    distances
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;
    use crate::solution::Population;

    fn pop(rows: Vec<Vec<f64>>) -> Population<f64> {
        Population::from_objective_rows("test", rows).unwrap()
    }

    fn identity_ctx(m: usize) -> NormalizationContext<f64> {
        NormalizationContext::new(vec![0.0; m], vec![1.0; m]).unwrap()
    }

    #[test]
    fn agg_examples() {
        let w0 = AxisWeight::new(0, 2);
        let z = [0.0, 0.0];
        assert_eq!(agg(&[0.1, 0.9], &w0, &z), 0.9 / 1e-6);
        assert_eq!(agg(&[1.0, 0.0], &w0, &z), 1.0);
        assert_eq!(agg(&[0.3, 0.7], &w0, &[0.3, 0.7]), 0.0);
    }

    #[test]
    fn boundary_selection_scans_all_candidates() {
        // Axis 0 picks G (smallest off-axis component), axis 1 picks A.
        let candidates = pop(vec![
            vec![0.0, 1.0], // A
            vec![0.2, 0.8], // B
            vec![0.9, 0.9], // C
            vec![1.0, 0.0], // G
        ]);
        let ctx = identity_ctx(2);
        assert_eq!(boundary_selection(&candidates, &ctx), vec![3, 0]);
    }

    #[test]
    fn boundary_selection_deduplicates_single_candidate() {
        let candidates = pop(vec![vec![0.4, 0.6]]);
        let ctx = build_context(&candidates).unwrap();
        assert_eq!(boundary_selection(&candidates, &ctx), vec![0]);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(&[0.2, 0.2], &[0.5, 0.5]), vec![0.5, 0.5]);
        assert_eq!(shift(&[0.8, 0.2], &[0.5, 0.5]), vec![0.8, 0.5]);
        assert_eq!(shift(&[0.3, 0.3], &[0.3, 0.3]), vec![0.3, 0.3]);
    }

    #[test]
    fn shifted_distance_examples() {
        assert_eq!(shifted_distance(&[0.5, 0.5], &[0.2, 0.2]), 0.0);
        assert!((shifted_distance(&[0.5f64, 0.5], &[0.8, 0.2]) - 0.3).abs() < 1e-15);
        assert!((shifted_distance(&[0.0, 0.0], &[1.0, 1.0]) - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn sd_examples() {
        let x = [0.5, 0.5];
        assert_eq!(sd(&x, &[vec![0.5, 0.5]]).unwrap(), 0.0);
        assert_eq!(sd(&x, &[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap(), 0.5);
        // A dominating member forces sd to zero.
        assert_eq!(sd(&x, &[vec![0.9, 0.9], vec![0.1, 0.1]]).unwrap(), 0.0);
        assert_eq!(sd::<f64>(&x, &[]), Err(Error::EmptySelectedSet));
    }

    /// Candidate layout reproducing the documented two-objective walkthrough:
    /// boundary picks A and G, then D, F, B follow with sd 8.5, 4, 3.
    fn walkthrough() -> Population<f64> {
        pop(vec![
            vec![0.0, 20.0],  // A
            vec![2.0, 17.0],  // B
            vec![9.0, 14.0],  // C
            vec![11.5, 10.0], // D
            vec![13.5, 8.0],  // E
            vec![16.0, 6.0],  // F
            vec![20.0, 0.0],  // G
        ])
    }

    #[test]
    fn walkthrough_selection_order_and_sd_sequence() {
        let candidates = walkthrough();
        let ctx = identity_ctx(2);
        let boundary = boundary_selection(&candidates, &ctx);
        assert_eq!(boundary, vec![6, 0]); // G then A

        let (selected, trace) =
            nonboundary_selection_traced(&candidates, &ctx, &boundary, 5).unwrap();
        assert_eq!(selected, vec![6, 0, 3, 5, 1]); // G, A, then D, F, B
        let picks: Vec<(usize, f64)> = trace.iter().map(|p| (p.index, p.sd)).collect();
        assert_eq!(picks, vec![(3, 8.5), (5, 4.0), (1, 3.0)]);
    }

    #[test]
    fn walkthrough_maintenance_preserves_order_under_normalization() {
        // End-to-end maintenance normalizes by intercepts (20, 20); the sd
        // values scale by 1/20 but the selection order is unchanged.
        let candidates = walkthrough();
        let selected = population_maintenance(&candidates, 5).unwrap();
        assert_eq!(selected, vec![6, 0, 3, 5, 1]);
    }

    #[test]
    fn empty_budget_returns_q0_unchanged() {
        let candidates = walkthrough();
        let ctx = identity_ctx(2);
        let q0 = vec![6, 0];
        assert_eq!(
            nonboundary_selection(&candidates, &ctx, &q0, 2).unwrap(),
            q0
        );
    }

    #[test]
    fn budget_above_candidate_count_is_rejected() {
        let candidates = pop(vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        let ctx = identity_ctx(2);
        assert_eq!(
            nonboundary_selection(&candidates, &ctx, &[0], 3).unwrap_err(),
            Error::BudgetExceedsCandidates {
                requested: 3,
                available: 2
            }
        );
    }

    /// From-scratch greedy oracle: recomputes every unselected candidate's sd
    /// against the full selected set at each step.
    fn greedy_oracle(normalized: &[Vec<f64>], q0: &[usize], k: usize) -> Vec<usize> {
        let mut selected: Vec<usize> = q0.to_vec();
        while selected.len() < k {
            let mut best: Option<(usize, f64)> = None;
            for i in 0..normalized.len() {
                if selected.contains(&i) {
                    continue;
                }
                let value = selected
                    .iter()
                    .map(|&s| shifted_distance(&normalized[i], &normalized[s]))
                    .fold(f64::INFINITY, f64::min);
                let better = match best {
                    None => true,
                    Some((_, best_value)) => value > best_value,
                };
                if better {
                    best = Some((i, value));
                }
            }
            selected.push(best.unwrap().0);
        }
        selected
    }

    #[test]
    fn greedy_matches_full_recompute_oracle() {
        let mut rng = RngStream::new(77);
        for case in 0..40 {
            let n = 5 + rng.index(26); // 5..=30
            let m = 2 + rng.index(4); // 2..=5
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..m).map(|_| rng.next_f64()).collect())
                .collect();
            let candidates = pop(rows);
            let ctx = build_context(&candidates).unwrap();
            let q0 = boundary_selection(&candidates, &ctx);
            if q0.len() >= n {
                continue;
            }
            let k = q0.len() + rng.index(n - q0.len() + 1);
            let selected = nonboundary_selection(&candidates, &ctx, &q0, k).unwrap();
            let normalized = normalize(&candidates, &ctx);
            assert_eq!(
                selected,
                greedy_oracle(&normalized, &q0, k),
                "case {case} diverged"
            );
        }
    }

    #[test]
    fn sd_cache_matches_from_scratch_recomputation_and_never_increases() {
        let mut rng = RngStream::new(123);
        let rows: Vec<Vec<f64>> = (0..20)
            .map(|_| (0..3).map(|_| rng.next_f64()).collect())
            .collect();
        let candidates = pop(rows);
        let ctx = build_context(&candidates).unwrap();
        let normalized = normalize(&candidates, &ctx);
        let q0 = boundary_selection(&candidates, &ctx);

        let mut state = SelectionState::init(&normalized, &q0);
        let mut previous: Vec<f64> = state.sd_cache.clone();
        while state.selected.len() < candidates.len() {
            let unselected = state.unselected.clone();
            for &i in &unselected {
                let fresh = sd(
                    &normalized[i],
                    &state
                        .selected
                        .iter()
                        .map(|&s| normalized[s].clone())
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                assert!(
                    (state.sd_cache[i] - fresh).abs() < 1e-12,
                    "cache {} vs fresh {fresh}",
                    state.sd_cache[i]
                );
                assert!(state.sd_cache[i] <= previous[i] + 1e-15);
            }
            previous = state.sd_cache.clone();
            state.pick(&normalized);
        }
    }

    #[test]
    fn maintenance_retains_boundary_and_outputs_distinct_indices() {
        let mut rng = RngStream::new(9);
        for _ in 0..50 {
            let n = 6 + rng.index(20);
            let m = 2 + rng.index(3);
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..m).map(|_| rng.next_f64()).collect())
                .collect();
            let candidates = pop(rows);
            let k = m + rng.index(n - m);
            let selected = population_maintenance(&candidates, k).unwrap();
            assert_eq!(selected.len(), k);
            let mut unique = selected.clone();
            unique.sort_unstable();
            unique.dedup();
            assert_eq!(unique.len(), k);

            let ctx = build_context(&candidates).unwrap();
            for b in boundary_selection(&candidates, &ctx) {
                assert!(selected.contains(&b), "boundary {b} missing");
            }
        }
    }

    #[test]
    fn boundary_overflow_keeps_most_extreme_solutions() {
        // k = 1 < m = 2 with two distinct boundary solutions.
        let candidates = pop(vec![vec![0.0, 1.0], vec![0.5, 0.5], vec![1.0, 0.0]]);
        let selected = population_maintenance(&candidates, 1).unwrap();
        assert_eq!(selected.len(), 1);
        // Both boundary solutions score agg = 1 under their own axis; the tie
        // breaks toward the lower objective axis, which index 2 won (axis 0).
        assert_eq!(selected, vec![2]);
    }

    #[test]
    fn maintenance_rejects_non_truncating_budgets() {
        let candidates = pop(vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(
            population_maintenance(&candidates, 2).unwrap_err(),
            Error::NoTruncationNeeded {
                budget: 2,
                candidates: 2
            }
        );
    }

    #[test]
    fn environmental_selection_exact_fit_is_identity() {
        let rows = vec![vec![0.0, 1.0], vec![1.0, 0.0], vec![0.5, 0.5]];
        let mut combined = pop(rows.clone());
        let survivors = environmental_selection(&mut combined, 3).unwrap();
        assert_eq!(survivors.objective_matrix(), rows);
    }

    #[test]
    fn environmental_selection_takes_whole_fronts_then_truncates() {
        // Front 1: three nondominated points. Front 2: four points dominated
        // by each of them.
        let mut combined = pop(vec![
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![0.4, 0.4],
            vec![2.0, 2.0],
            vec![2.0, 3.0],
            vec![3.0, 2.0],
            vec![2.5, 2.5],
        ]);
        let survivors = environmental_selection(&mut combined, 5).unwrap();
        assert_eq!(survivors.len(), 5);
        let matrix = survivors.objective_matrix();
        for row in [[0.0, 1.0], [1.0, 0.0], [0.4, 0.4]] {
            assert!(matrix.contains(&row.to_vec()));
        }
        // Exactly two of the second front survive.
        assert_eq!(
            matrix
                .iter()
                .filter(|row| row.iter().all(|&v| v >= 2.0))
                .count(),
            2
        );
    }

    #[test]
    fn environmental_selection_insufficient_solutions() {
        let mut combined = pop(vec![vec![0.0, 1.0]]);
        assert_eq!(
            environmental_selection(&mut combined, 2).unwrap_err(),
            Error::InsufficientSolutions {
                requested: 2,
                available: 1
            }
        );
    }

    #[test]
    fn fully_nondominated_union_reduces_to_population_maintenance() {
        let mut rng = RngStream::new(31);
        // Points on a simplex are mutually nondominated.
        let rows: Vec<Vec<f64>> = (0..12)
            .map(|_| {
                let a = rng.next_f64();
                let b = rng.next_f64() * (1.0 - a);
                vec![a, b, 1.0 - a - b]
            })
            .collect();
        let expected: Vec<Vec<f64>> = {
            let candidates = pop(rows.clone());
            population_maintenance(&candidates, 7)
                .unwrap()
                .into_iter()
                .map(|i| rows[i].clone())
                .collect()
        };
        let mut combined = pop(rows);
        let survivors = environmental_selection(&mut combined, 7).unwrap();
        assert_eq!(survivors.objective_matrix(), expected);
    }

    #[test]
    fn crowding_baseline_examples() {
        // Three collinear evenly spaced points: endpoints survive.
        let candidates = pop(vec![vec![0.0, 1.0], vec![0.5, 0.5], vec![1.0, 0.0]]);
        assert_eq!(
            crowding_truncation_baseline(&candidates, 2).unwrap(),
            vec![0, 2]
        );

        // k = n - 1 drops the unique minimum-crowding member: index 1 is
        // squeezed between its neighbors (f1 gap 0.25 vs 0.8 for index 2).
        let candidates = pop(vec![
            vec![0.0, 1.0],
            vec![0.2, 0.8],
            vec![0.25, 0.75],
            vec![1.0, 0.0],
        ]);
        assert_eq!(
            crowding_truncation_baseline(&candidates, 3).unwrap(),
            vec![0, 2, 3]
        );
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn crowding_baseline_matches_textbook_oracle() {
        let mut rng = RngStream::new(55);
        for _ in 0..30 {
            let n = 4 + rng.index(20);
            let m = 2 + rng.index(3);
            let rows: Vec<Vec<f64>> = (0..n)
                .map(|_| (0..m).map(|_| rng.next_f64()).collect())
                .collect();

            // Oracle: recompute crowding distances directly.
            let mut expected_distance = vec![0.0f64; n];
            for col in 0..m {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by(|&a, &b| {
                    rows[a][col]
                        .partial_cmp(&rows[b][col])
                        .unwrap()
                        .then(a.cmp(&b))
                });
                expected_distance[order[0]] = f64::INFINITY;
                expected_distance[order[n - 1]] = f64::INFINITY;
                let range = rows[order[n - 1]][col] - rows[order[0]][col];
                if range > 0.0 {
                    for w in 1..n - 1 {
                        expected_distance[order[w]] +=
                            (rows[order[w + 1]][col] - rows[order[w - 1]][col]) / range;
                    }
                }
            }
            let k = 1 + rng.index(n - 1);
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by(|&a, &b| {
                expected_distance[b]
                    .partial_cmp(&expected_distance[a])
                    .unwrap()
                    .then(a.cmp(&b))
            });
            let mut expected: Vec<usize> = order.into_iter().take(k).collect();
            expected.sort_unstable();

            let candidates = pop(rows);
            assert_eq!(
                crowding_truncation_baseline(&candidates, k).unwrap(),
                expected
            );
        }
    }

    #[test]
    fn dominated_candidate_has_zero_sd_and_is_selected_last() {
        // Index 3 is dominated by index 0 in normalized space.
        let candidates = pop(vec![
            vec![0.1, 0.1],
            vec![0.0, 1.0],
            vec![1.0, 0.0],
            vec![0.2, 0.2],
        ]);
        let ctx = identity_ctx(2);
        let q0 = vec![0];
        let (selected, trace) = nonboundary_selection_traced(&candidates, &ctx, &q0, 4).unwrap();
        assert_eq!(*selected.last().unwrap(), 3);
        assert_eq!(trace.last().unwrap().sd, 0.0);
    }
}
