//! Quality indicators (IGD, hypervolume) and simplex-lattice reference
//! directions.

use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::scalar::{euclidean_distance, real, Real};

/// Sample of the true Pareto front used as the IGD reference.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceSet<S> {
    points: Vec<Vec<S>>,
}

impl<S: Real> ReferenceSet<S> {
    pub fn new(points: Vec<Vec<S>>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptySet)?;
        let m = first.len();
        if points.iter().any(|p| p.len() != m) {
            return Err(Error::DimensionMismatch {
                left: m,
                right: points.iter().map(Vec::len).find(|&l| l != m).unwrap_or(m),
            });
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Vec<S>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn num_objectives(&self) -> usize {
        self.points[0].len()
    }

    /// Component-wise (minimum, maximum) over all reference points.
    pub fn extremes(&self) -> (Vec<S>, Vec<S>) {
        let m = self.num_objectives();
        let mut lo = self.points[0].clone();
        let mut hi = self.points[0].clone();
        for p in &self.points[1..] {
            for i in 0..m {
                lo[i] = lo[i].min(p[i]);
                hi[i] = hi[i].max(p[i]);
            }
        }
        (lo, hi)
    }

    /// True when no reference point dominates another (test aid).
    pub fn is_mutually_nondominated(&self) -> bool {
        use crate::dominance::{dominates, DominanceRelation};
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i + 1..] {
                match dominates(a, b) {
                    Ok(DominanceRelation::Dominates) | Ok(DominanceRelation::DominatedBy) => {
                        return false
                    }
                    _ => {}
                }
            }
        }
        true
    }

    /// Reads a front file: one objective vector per line, whitespace-separated
    /// decimal values.
    pub fn load(path: &Path) -> std::io::Result<Self> {
        let reader = BufReader::new(std::fs::File::open(path)?);
        let mut points = Vec::new();
        for line in reader.lines() {
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let row: std::result::Result<Vec<S>, _> = trimmed
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<f64>()
                        .map(real::<S>)
                        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))
                })
                .collect();
            points.push(row?);
        }
        Self::new(points)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e.to_string()))
    }

    /// Writes the front file format produced by [`ReferenceSet::load`].
    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let mut file = std::fs::File::create(path)?;
        for point in &self.points {
            let line: Vec<String> = point
                .iter()
                .map(|v| format!("{:.16e}", v.to_f64().unwrap()))
                .collect();
            writeln!(file, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Inverted generational distance: mean distance from each reference point to
/// its nearest solution. Lower is better.
pub fn igd<S: Real>(solutions: &[Vec<S>], refset: &ReferenceSet<S>) -> Result<S> {
    if solutions.is_empty() {
        return Err(Error::EmptySet);
    }
    let m = refset.num_objectives();
    if solutions.iter().any(|s| s.len() != m) {
        return Err(Error::DimensionMismatch {
            left: m,
            right: solutions[0].len(),
        });
    }
    let total: S = refset
        .points()
        .iter()
        .map(|z| {
            solutions
                .iter()
                .map(|s| euclidean_distance(z, s))
                .fold(S::infinity(), S::min)
        })
        .fold(S::zero(), |acc, d| acc + d);
    Ok(total / real(refset.len() as f64))
}

/// Ideal/nadir range of a problem's true front, used to normalize objectives
/// before hypervolume measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontRange<S> {
    pub ideal: Vec<S>,
    pub nadir: Vec<S>,
}

/// Hypervolume estimator settings.
#[derive(Debug, Clone, PartialEq)]
pub struct HvConfig<S> {
    /// Reference point in measurement space (after normalization when a
    /// front range is set).
    pub reference_point: Vec<S>,
    /// Monte Carlo sample count.
    pub samples: u64,
    /// When set, objectives are mapped through this range before measuring.
    pub front_range: Option<FrontRange<S>>,
}

pub const DEFAULT_HV_SAMPLES: u64 = 1_000_000;

impl<S: Real> HvConfig<S> {
    /// Measures in raw objective space against an explicit reference point.
    pub fn raw(reference_point: Vec<S>) -> Self {
        Self {
            reference_point,
            samples: DEFAULT_HV_SAMPLES,
            front_range: None,
        }
    }

    /// Standard protocol: normalize by the front's component range and
    /// measure against 1.1 per axis (1.1 times the normalized nadir).
    pub fn front_normalized(refset: &ReferenceSet<S>) -> Self {
        let (ideal, nadir) = refset.extremes();
        let m = ideal.len();
        Self {
            reference_point: vec![real(1.1); m],
            samples: DEFAULT_HV_SAMPLES,
            front_range: Some(FrontRange { ideal, nadir }),
        }
    }

    pub fn with_samples(mut self, samples: u64) -> Self {
        self.samples = samples;
        self
    }
}

/// Monte Carlo hypervolume estimate.
///
/// Samples uniformly in the box spanned by the component-wise ideal of the
/// solution set and the reference point; the estimate is the dominated
/// fraction times the box volume. Returns 0 when no solution strictly
/// dominates the reference point.
pub fn hv_monte_carlo<S: Real>(
    solutions: &[Vec<S>],
    cfg: &HvConfig<S>,
    rng: &mut RngStream,
) -> Result<S> {
    if solutions.is_empty() {
        return Err(Error::EmptySet);
    }
    let m = cfg.reference_point.len();
    if solutions.iter().any(|s| s.len() != m) {
        return Err(Error::DimensionMismatch {
            left: m,
            right: solutions[0].len(),
        });
    }

    let mapped = map_through_range(solutions, cfg);
    let reference = &cfg.reference_point;

    // Solutions outside the reference box contribute nothing.
    let contributors: Vec<&Vec<S>> = mapped
        .iter()
        .filter(|s| s.iter().zip(reference).all(|(&v, &r)| v < r))
        .collect();
    if contributors.is_empty() {
        return Ok(S::zero());
    }

    let mut lo = mapped[0].clone();
    for s in &mapped[1..] {
        for i in 0..m {
            lo[i] = lo[i].min(s[i]);
        }
    }
    let mut volume = S::one();
    for i in 0..m {
        volume = volume * (reference[i] - lo[i]);
    }

    let mut hits = 0u64;
    let mut sample = vec![S::zero(); m];
    for _ in 0..cfg.samples {
        for i in 0..m {
            sample[i] = lo[i] + rng.next_real::<S>() * (reference[i] - lo[i]);
        }
        if contributors
            .iter()
            .any(|s| s.iter().zip(&sample).all(|(&v, &p)| v <= p))
        {
            hits += 1;
        }
    }
    Ok(volume * real(hits as f64 / cfg.samples as f64))
}

fn map_through_range<S: Real>(solutions: &[Vec<S>], cfg: &HvConfig<S>) -> Vec<Vec<S>> {
    match &cfg.front_range {
        None => solutions.to_vec(),
        Some(range) => solutions
            .iter()
            .map(|s| {
                s.iter()
                    .enumerate()
                    .map(|(i, &v)| {
                        let width = range.nadir[i] - range.ideal[i];
                        let width = if width > S::zero() { width } else { S::one() };
                        (v - range.ideal[i]) / width
                    })
                    .collect()
            })
            .collect(),
    }
}

/// Exact 2-D hypervolume by rectangle decomposition (validation oracle for
/// the Monte Carlo estimator).
pub fn hv_exact_2d<S: Real>(solutions: &[Vec<S>], reference_point: &[S]) -> Result<S> {
    if reference_point.len() != 2 {
        return Err(Error::DimensionUnsupported {
            supported: 2,
            actual: reference_point.len(),
        });
    }
    if let Some(bad) = solutions.iter().find(|s| s.len() != 2) {
        return Err(Error::DimensionUnsupported {
            supported: 2,
            actual: bad.len(),
        });
    }

    let mut points: Vec<(S, S)> = solutions
        .iter()
        .filter(|s| s[0] < reference_point[0] && s[1] < reference_point[1])
        .map(|s| (s[0], s[1]))
        .collect();
    if points.is_empty() {
        return Ok(S::zero());
    }
    points.sort_by(|a, b| {
        a.0.partial_cmp(&b.0)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal))
    });

    // Keep the staircase of nondominated points (strictly decreasing f2).
    let mut staircase: Vec<(S, S)> = Vec::with_capacity(points.len());
    for p in points {
        match staircase.last() {
            Some(&(_, f2)) if p.1 >= f2 => {}
            _ => staircase.push(p),
        }
    }

    let mut area = S::zero();
    for (i, &(f1, f2)) in staircase.iter().enumerate() {
        let next_f1 = staircase.get(i + 1).map_or(reference_point[0], |&(v, _)| v);
        area += (next_f1 - f1) * (reference_point[1] - f2);
    }
    Ok(area)
}

/// All vectors with components in `{0, 1/h, ..., h/h}` summing to 1;
/// `C(h + m - 1, m - 1)` directions in lexicographic order.
pub fn das_dennis<S: Real>(m: usize, h: u32) -> Vec<Vec<S>> {
    assert!(m >= 2, "need at least two objectives");
    assert!(h >= 1, "need at least one division");
    let mut out = Vec::new();
    let mut current = vec![S::zero(); m];
    das_dennis_recurse(&mut out, &mut current, m, h, h, 0);
    out
}

fn das_dennis_recurse<S: Real>(
    out: &mut Vec<Vec<S>>,
    current: &mut Vec<S>,
    m: usize,
    h: u32,
    remaining: u32,
    depth: usize,
) {
    if depth == m - 1 {
        current[depth] = real(remaining as f64 / h as f64);
        out.push(current.clone());
        return;
    }
    for step in 0..=remaining {
        current[depth] = real(step as f64 / h as f64);
        das_dennis_recurse(out, current, m, h, remaining - step, depth + 1);
    }
}

/// Number of directions [`das_dennis`] produces: `C(h + m - 1, m - 1)`.
pub fn das_dennis_count(m: usize, h: u32) -> usize {
    binomial(h as usize + m - 1, m - 1)
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut result = 1u128;
    for i in 0..k {
        result = result * (n - i) as u128 / (i + 1) as u128;
    }
    result as usize
}

/// Two-layer direction set for high objective counts: an outer lattice plus
/// an inner lattice shrunk halfway toward the simplex centroid
/// (`v -> v/2 + 1/(2m)` per component). Exact duplicates are removed.
pub fn two_layer<S: Real>(m: usize, h_outer: u32, h_inner: u32) -> Vec<Vec<S>> {
    let mut directions = das_dennis::<S>(m, h_outer);
    let centroid_part = real::<S>(1.0 / (2.0 * m as f64));
    let half = real::<S>(0.5);
    for inner in das_dennis::<S>(m, h_inner) {
        let shrunk: Vec<S> = inner.iter().map(|&v| v * half + centroid_part).collect();
        if !directions.iter().any(|d| d == &shrunk) {
            directions.push(shrunk);
        }
    }
    directions
}

/// Greedy max–min (farthest point) subsample of `count` indices.
///
/// Starts from index 0; each step adds the point with the largest minimum
/// Euclidean distance to the chosen set, ties to the lowest index.
pub fn farthest_point_subsample<S: Real>(points: &[Vec<S>], count: usize) -> Vec<usize> {
    let n = points.len();
    if count >= n {
        return (0..n).collect();
    }
    let mut chosen = Vec::with_capacity(count);
    let mut is_chosen = vec![false; n];
    let mut min_dist = vec![S::infinity(); n];
    let mut next = 0usize;
    while chosen.len() < count {
        chosen.push(next);
        is_chosen[next] = true;
        let added = next;
        let mut best = S::neg_infinity();
        let mut best_index = None;
        for i in 0..n {
            if is_chosen[i] {
                continue;
            }
            let d = euclidean_distance(&points[i], &points[added]);
            if d < min_dist[i] {
                min_dist[i] = d;
            }
            if min_dist[i] > best {
                best = min_dist[i];
                best_index = Some(i);
            }
        }
        match best_index {
            Some(i) => next = i,
            None => break,
        }
    }
    chosen
}
