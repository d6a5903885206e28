//! Summary statistics over run records and the Friedman rank test.

use std::collections::BTreeMap;

use crate::harness::records::RunRecord;
use crate::harness::{HarnessError, HarnessResult};

/// Mean and standard deviation of one (problem, algorithm) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub problem: String,
    pub m: usize,
    pub algorithm: String,
    pub runs: usize,
    pub igd_mean: f64,
    pub igd_std: f64,
    pub hv_mean: f64,
    pub hv_std: f64,
    /// Single-record cell: the reported standard deviation of 0 carries no
    /// information.
    pub degenerate: bool,
}

/// Per-cell sample mean and sample standard deviation (n - 1 denominator),
/// sorted by (problem, m, algorithm).
pub fn summarize(records: &[RunRecord]) -> Vec<CellSummary> {
    let mut cells: BTreeMap<(String, usize, String), Vec<&RunRecord>> = BTreeMap::new();
    for record in records {
        cells
            .entry((record.problem.clone(), record.m, record.algorithm.clone()))
            .or_default()
            .push(record);
    }
    cells
        .into_iter()
        .map(|((problem, m, algorithm), cell)| {
            let igd: Vec<f64> = cell.iter().map(|r| r.igd).collect();
            let hv: Vec<f64> = cell.iter().map(|r| r.hv).collect();
            let (igd_mean, igd_std) = mean_and_std(&igd);
            let (hv_mean, hv_std) = mean_and_std(&hv);
            CellSummary {
                problem,
                m,
                algorithm,
                runs: cell.len(),
                igd_mean,
                igd_std,
                hv_mean,
                hv_std,
                degenerate: cell.len() < 2,
            }
        })
        .collect()
}

fn mean_and_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let variance = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, variance.sqrt())
}

/// Friedman test outcome: the chi-square statistic and one average rank per
/// algorithm (rank 1 = best, i.e. lowest score).
#[derive(Debug, Clone, PartialEq)]
pub struct FriedmanResult {
    pub statistic: f64,
    pub average_ranks: Vec<f64>,
}

/// Friedman rank test over a problems-by-algorithms score matrix where lower
/// scores are better. Ties within a problem receive average ranks.
pub fn friedman_test(scores: &[Vec<f64>]) -> HarnessResult<FriedmanResult> {
    let n = scores.len();
    if n < 2 {
        return Err(HarnessError::Invalid(
            "Friedman test needs at least 2 problems".into(),
        ));
    }
    let k = scores[0].len();
    if k < 2 {
        return Err(HarnessError::Invalid(
            "Friedman test needs at least 2 algorithms".into(),
        ));
    }
    if scores.iter().any(|row| row.len() != k) {
        return Err(HarnessError::Invalid(
            "score matrix rows have unequal lengths".into(),
        ));
    }

    let mut rank_sums = vec![0.0f64; k];
    for row in scores {
        for (j, rank) in row_ranks(row).into_iter().enumerate() {
            rank_sums[j] += rank;
        }
    }
    let average_ranks: Vec<f64> = rank_sums.iter().map(|s| s / n as f64).collect();

    let center = (k + 1) as f64 / 2.0;
    let spread: f64 = average_ranks
        .iter()
        .map(|r| (r - center) * (r - center))
        .sum();
    let statistic = 12.0 * n as f64 / (k as f64 * (k + 1) as f64) * spread;
    Ok(FriedmanResult {
        statistic,
        average_ranks,
    })
}

/// Ascending ranks (1-based) with ties averaged.
fn row_ranks(row: &[f64]) -> Vec<f64> {
    let k = row.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&a, &b| {
        row[a]
            .partial_cmp(&row[b])
            .unwrap_or(std::cmp::Ordering::Equal)
    });

    let mut ranks = vec![0.0f64; k];
    let mut pos = 0usize;
    while pos < k {
        let mut end = pos;
        while end + 1 < k && row[order[end + 1]] == row[order[pos]] {
            end += 1;
        }
        // Positions pos..=end share the average of ranks pos+1..=end+1.
        let average = (pos + 1 + end + 1) as f64 / 2.0;
        for &index in &order[pos..=end] {
            ranks[index] = average;
        }
        pos = end + 1;
    }
    ranks
}
