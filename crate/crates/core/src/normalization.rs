//! Adaptive objective normalization.
//!
//! Objectives are first translated by the ideal point of the candidate set.
//! The per-axis extreme solutions are then located with the axis-aligned
//! scalarizer from [`crate::selection::agg`], and the hyperplane through
//! those extreme points yields one intercept per objective axis. Normalized
//! values are `(f_i - ideal_i) / intercept_i`, mapping the candidate set into
//! approximately the unit hypercube.

use crate::error::{Error, Result};
use crate::scalar::{real, Real};
use crate::selection::{agg, AxisWeight};
use crate::solution::Population;

/// Intercepts below this threshold trigger the degenerate fallback.
pub const MIN_INTERCEPT: f64 = 1e-10;

/// Ideal point and axis intercepts derived from one candidate set.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizationContext<S> {
    ideal: Vec<S>,
    intercepts: Vec<S>,
    extreme_indices: Vec<usize>,
}

impl<S: Real> NormalizationContext<S> {
    /// Builds a context from explicit ideal and intercept vectors.
    ///
    /// `extreme_indices` is empty for hand-built contexts.
    pub fn new(ideal: Vec<S>, intercepts: Vec<S>) -> Result<Self> {
        if ideal.len() != intercepts.len() {
            return Err(Error::DimensionMismatch {
                left: ideal.len(),
                right: intercepts.len(),
            });
        }
        if intercepts.iter().any(|&a| a <= S::zero()) {
            return Err(Error::InvalidConfig(
                "intercepts must be strictly positive".into(),
            ));
        }
        Ok(Self {
            ideal,
            intercepts,
            extreme_indices: Vec::new(),
        })
    }

    pub fn ideal(&self) -> &[S] {
        &self.ideal
    }

    pub fn intercepts(&self) -> &[S] {
        &self.intercepts
    }

    /// Indices of the per-axis extreme solutions in the candidate set the
    /// context was built from (empty for hand-built contexts).
    pub fn extreme_indices(&self) -> &[usize] {
        &self.extreme_indices
    }

    /// Objective vector translated by the ideal point.
    pub fn translate(&self, objectives: &[S]) -> Vec<S> {
        objectives
            .iter()
            .zip(&self.ideal)
            .map(|(&f, &z)| f - z)
            .collect()
    }

    /// Objective vector translated and scaled by the intercepts.
    pub fn normalize_vector(&self, objectives: &[S]) -> Vec<S> {
        objectives
            .iter()
            .zip(&self.ideal)
            .zip(&self.intercepts)
            .map(|((&f, &z), &a)| (f - z) / a)
            .collect()
    }
}

/// Builds the normalization context for a candidate set.
///
/// The extreme solution for axis `j` minimizes the axis-`j` scalarizer over
/// ideal-translated objectives (ties to the lowest index). When the
/// hyperplane through the extremes is singular, yields a non-positive
/// intercept, or an intercept below [`MIN_INTERCEPT`], all intercepts fall
/// back to the per-axis maxima of the translated objectives (1.0 where even
/// that maximum is below the threshold).
pub fn build_context<S: Real>(candidates: &Population<S>) -> Result<NormalizationContext<S>> {
    let ideal = candidates.ideal_point()?;
    let m = ideal.len();
    let n = candidates.len();

    let translated: Vec<Vec<S>> = (0..n)
        .map(|i| {
            candidates
                .objectives_row(i)
                .iter()
                .zip(&ideal)
                .map(|(&f, &z)| f - z)
                .collect()
        })
        .collect();
    let zeros = vec![S::zero(); m];

    let mut extreme_indices = Vec::with_capacity(m);
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
        extreme_indices.push(best);
    }

    let extreme_rows: Vec<&[S]> = extreme_indices
        .iter()
        .map(|&i| translated[i].as_slice())
        .collect();
    let threshold = real::<S>(MIN_INTERCEPT);

    let intercepts = match hyperplane_intercepts(&extreme_rows) {
        Some(values) if values.iter().all(|&a| a.is_finite() && a >= threshold) => values,
        _ => translated_column_maxima(&translated, m, threshold),
    };

    Ok(NormalizationContext {
        ideal,
        intercepts,
        extreme_indices,
    })
}

/// Normalizes every candidate, returning an `n x m` matrix.
///
/// The ideal point maps to the zero vector; the extreme directions map to
/// roughly 1 on their own axis.
pub fn normalize<S: Real>(
    candidates: &Population<S>,
    ctx: &NormalizationContext<S>,
) -> Vec<Vec<S>> {
    (0..candidates.len())
        .map(|i| ctx.normalize_vector(candidates.objectives_row(i)))
        .collect()
}

/// Axis intercepts of the hyperplane through the given points, or `None`
/// when the linear system is singular.
///
/// Solves `E beta = 1` by Gaussian elimination with partial pivoting; the
/// intercept on axis `i` is `1 / beta_i`.
fn hyperplane_intercepts<S: Real>(points: &[&[S]]) -> Option<Vec<S>> {
    let m = points.len();
    let mut a: Vec<Vec<S>> = points.iter().map(|row| row.to_vec()).collect();
    let mut b = vec![S::one(); m];

    for col in 0..m {
        let pivot = (col..m).max_by(|&i, &j| {
            a[i][col]
                .abs()
                .partial_cmp(&a[j][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if a[pivot][col].abs() <= S::epsilon() {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);

        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        let (b_upper, b_lower) = b.split_at_mut(col + 1);
        for (row, b_row) in lower.iter_mut().zip(b_lower.iter_mut()) {
            let factor = row[col] / pivot_row[col];
            for (slot, &pivot_value) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *slot = *slot - factor * pivot_value;
            }
            *b_row = *b_row - factor * b_upper[col];
        }
    }

    let mut beta = vec![S::zero(); m];
    for row in (0..m).rev() {
        let mut sum = b[row];
        for col in (row + 1)..m {
            sum = sum - a[row][col] * beta[col];
        }
        beta[row] = sum / a[row][row];
    }
    Some(beta.into_iter().map(|v| S::one() / v).collect())
}

fn translated_column_maxima<S: Real>(translated: &[Vec<S>], m: usize, threshold: S) -> Vec<S> {
    (0..m)
        .map(|col| {
            let max = translated
                .iter()
                .map(|row| row[col])
                .fold(S::zero(), S::max);
            if max < threshold {
                S::one()
            } else {
                max
            }
        })
        .collect()
}
