//! Benchmark problems: evaluation and analytic Pareto-front samplers.
//!
//! The implemented subset covers linear (DTLZ1), concave (DTLZ2), inverted
//! linear (MaF1), restricted concave (MaF2), degenerate (MaF6), and
//! disconnected (MaF7) front geometries. Further problems plug in behind the
//! same [`Problem`] trait.

use std::f64::consts::PI;

use crate::dominance::{dominates, DominanceRelation};
use crate::error::{Error, Result};
use crate::metrics::{das_dennis, das_dennis_count, farthest_point_subsample, ReferenceSet};
use crate::scalar::{real, Real};

/// A box-constrained minimization problem.
pub trait Problem<S: Real>: Send + Sync {
    fn id(&self) -> &str;
    fn num_objectives(&self) -> usize;
    fn num_variables(&self) -> usize;
    fn lower(&self) -> &[S];
    fn upper(&self) -> &[S];

    /// Raw objective computation; `x` is assumed valid.
    fn objectives(&self, x: &[S]) -> Vec<S>;

    /// Validates the decision vector and evaluates it.
    fn evaluate(&self, x: &[S]) -> Result<Vec<S>> {
        if x.len() != self.num_variables() {
            return Err(Error::InvalidDecisionVector(format!(
                "expected {} variables, got {}",
                self.num_variables(),
                x.len()
            )));
        }
        for (i, &v) in x.iter().enumerate() {
            if !(v >= self.lower()[i] && v <= self.upper()[i]) {
                return Err(Error::InvalidDecisionVector(format!(
                    "variable {i} = {v} outside [{}, {}]",
                    self.lower()[i],
                    self.upper()[i]
                )));
            }
        }
        Ok(self.objectives(x))
    }

    /// Samples `count` points from the analytic Pareto front.
    fn pareto_front(&self, count: usize) -> Result<ReferenceSet<S>> {
        let _ = count;
        Err(Error::NoAnalyticFront(self.id().to_string()))
    }
}

/// Instantiates a problem by name (`dtlz1`, `dtlz2`, `maf1`, `maf2`, `maf6`,
/// `maf7`) with the conventional decision-variable count for `m` objectives.
pub fn by_name<S: Real>(id: &str, m: usize) -> Result<Box<dyn Problem<S>>> {
    if m < 2 {
        return Err(Error::InvalidConfig(format!(
            "problem `{id}` needs at least 2 objectives, got {m}"
        )));
    }
    match id.to_ascii_lowercase().as_str() {
        "dtlz1" => Ok(Box::new(Dtlz1::new(m))),
        "dtlz2" => Ok(Box::new(Dtlz2::new(m))),
        "maf1" => Ok(Box::new(MaF1::new(m))),
        "maf2" => Ok(Box::new(MaF2::new(m))),
        "maf6" => Ok(Box::new(MaF6::new(m))),
        "maf7" => Ok(Box::new(MaF7::new(m))),
        other => Err(Error::InvalidConfig(format!(
            "unknown problem `{other}` (supported: {})",
            SUPPORTED.join(", ")
        ))),
    }
}

/// Names accepted by [`by_name`].
pub const SUPPORTED: [&str; 6] = ["dtlz1", "dtlz2", "maf1", "maf2", "maf6", "maf7"];

// ---------------------------------------------------------------------------
// shared pieces

fn unit_box<S: Real>(d: usize) -> (Vec<S>, Vec<S>) {
    (vec![S::zero(); d], vec![S::one(); d])
}

/// `sum (x_i - 0.5)^2` over the distance variables.
fn squared_distance_g<S: Real>(tail: &[S]) -> S {
    let half = real::<S>(0.5);
    tail.iter()
        .map(|&v| (v - half) * (v - half))
        .fold(S::zero(), |acc, v| acc + v)
}

/// Multimodal distance function `100 (K + sum ((x-0.5)^2 - cos(20 pi (x-0.5))))`.
fn multimodal_g<S: Real>(tail: &[S]) -> S {
    let half = real::<S>(0.5);
    let twenty_pi = real::<S>(20.0 * PI);
    let sum = tail
        .iter()
        .map(|&v| (v - half) * (v - half) - (twenty_pi * (v - half)).cos())
        .fold(S::zero(), |acc, v| acc + v);
    real::<S>(100.0) * (real::<S>(tail.len() as f64) + sum)
}

/// Spherical map from `m - 1` angles in `[0, pi/2]` to a unit vector with
/// nonnegative components.
fn sphere_map<S: Real>(angles: &[S]) -> Vec<S> {
    let m = angles.len() + 1;
    (0..m)
        .map(|i| {
            let cos_factors = m - 1 - i;
            let mut v = S::one();
            for &a in &angles[..cos_factors] {
                v = v * a.cos();
            }
            if i > 0 {
                v = v * angles[m - 1 - i].sin();
            }
            v
        })
        .collect()
}

/// Linear simplex components from `m - 1` position variables in `[0, 1]`;
/// the components are nonnegative and sum to 1.
fn linear_map<S: Real>(position: &[S]) -> Vec<S> {
    let m = position.len() + 1;
    (0..m)
        .map(|i| {
            let prod_len = m - 1 - i;
            let mut v = S::one();
            for &x in &position[..prod_len] {
                v = v * x;
            }
            if i > 0 {
                v = v * (S::one() - position[m - 1 - i]);
            }
            v
        })
        .collect()
}

/// Smallest simplex lattice holding at least `count` directions.
fn lattice_at_least<S: Real>(m: usize, count: usize) -> Vec<Vec<S>> {
    let mut h = 1u32;
    while das_dennis_count(m, h) < count {
        h += 1;
    }
    das_dennis(m, h)
}

/// Reduces `points` to exactly `count` by farthest-point traversal.
fn exact_count<S: Real>(points: Vec<Vec<S>>, count: usize) -> Vec<Vec<S>> {
    if points.len() == count {
        return points;
    }
    farthest_point_subsample(&points, count)
        .into_iter()
        .map(|i| points[i].clone())
        .collect()
}

fn check_front_count(m: usize, count: usize) -> Result<()> {
    if count < m {
        return Err(Error::InvalidConfig(format!(
            "front sample of {count} points is smaller than the objective count {m}"
        )));
    }
    Ok(())
}

/// All points on a `side`-per-axis grid over `[lo, hi]^dims`.
fn box_grid<S: Real>(dims: usize, side: usize, lo: f64, hi: f64) -> Vec<Vec<S>> {
    let step = |k: usize| {
        if side == 1 {
            lo
        } else {
            lo + (hi - lo) * k as f64 / (side - 1) as f64
        }
    };
    let mut out = Vec::with_capacity(side.pow(dims as u32));
    let mut odometer = vec![0usize; dims];
    loop {
        out.push(odometer.iter().map(|&k| real(step(k))).collect());
        let mut digit = 0;
        loop {
            if digit == dims {
                return out;
            }
            odometer[digit] += 1;
            if odometer[digit] < side {
                break;
            }
            odometer[digit] = 0;
            digit += 1;
        }
    }
}

/// Indices of the nondominated subset, in ascending order. Duplicate
/// objective vectors keep only their first occurrence.
fn nondominated_subset<S: Real>(points: &[Vec<S>]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    'outer: for i in 0..points.len() {
        let mut j = 0;
        while j < kept.len() {
            match dominates(&points[kept[j]], &points[i]).expect("equal dimensions") {
                DominanceRelation::Dominates | DominanceRelation::Equal => continue 'outer,
                DominanceRelation::DominatedBy => {
                    kept.swap_remove(j);
                }
                DominanceRelation::NonDominated => j += 1,
            }
        }
        kept.push(i);
    }
    kept.sort_unstable();
    kept
}

// ---------------------------------------------------------------------------
// DTLZ1

/// Linear front `sum f = 0.5` with a multimodal distance function.
pub struct Dtlz1<S> {
    m: usize,
    lower: Vec<S>,
    upper: Vec<S>,
}

impl<S: Real> Dtlz1<S> {
    pub const DISTANCE_VARS: usize = 5;

    pub fn new(m: usize) -> Self {
        assert!(m >= 2);
        let (lower, upper) = unit_box(m + Self::DISTANCE_VARS - 1);
        Self { m, lower, upper }
    }
}

impl<S: Real> Problem<S> for Dtlz1<S> {
    fn id(&self) -> &str {
        "dtlz1"
    }
    fn num_objectives(&self) -> usize {
        self.m
    }
    fn num_variables(&self) -> usize {
        self.lower.len()
    }
    fn lower(&self) -> &[S] {
        &self.lower
    }
    fn upper(&self) -> &[S] {
        &self.upper
    }

    fn objectives(&self, x: &[S]) -> Vec<S> {
        let g = multimodal_g(&x[self.m - 1..]);
        let scale = real::<S>(0.5) * (S::one() + g);
        linear_map(&x[..self.m - 1])
            .into_iter()
            .map(|h| scale * h)
            .collect()
    }

    fn pareto_front(&self, count: usize) -> Result<ReferenceSet<S>> {
        check_front_count(self.m, count)?;
        let half = real::<S>(0.5);
        let points: Vec<Vec<S>> = lattice_at_least::<S>(self.m, count)
            .into_iter()
            .map(|p| p.into_iter().map(|v| v * half).collect())
            .collect();
        ReferenceSet::new(exact_count(points, count))
    }
}

// ---------------------------------------------------------------------------
// DTLZ2

/// Concave front on the unit sphere.
pub struct Dtlz2<S> {
    m: usize,
    lower: Vec<S>,
    upper: Vec<S>,
}

impl<S: Real> Dtlz2<S> {
    pub const DISTANCE_VARS: usize = 10;

    pub fn new(m: usize) -> Self {
        assert!(m >= 2);
        let (lower, upper) = unit_box(m + Self::DISTANCE_VARS - 1);
        Self { m, lower, upper }
    }
}

impl<S: Real> Problem<S> for Dtlz2<S> {
    fn id(&self) -> &str {
        "dtlz2"
    }
    fn num_objectives(&self) -> usize {
        self.m
    }
    fn num_variables(&self) -> usize {
        self.lower.len()
    }
    fn lower(&self) -> &[S] {
        &self.lower
    }
    fn upper(&self) -> &[S] {
        &self.upper
    }

    fn objectives(&self, x: &[S]) -> Vec<S> {
        let g = squared_distance_g(&x[self.m - 1..]);
        let half_pi = real::<S>(PI / 2.0);
        let angles: Vec<S> = x[..self.m - 1].iter().map(|&v| v * half_pi).collect();
        sphere_map(&angles)
            .into_iter()
            .map(|f| (S::one() + g) * f)
            .collect()
    }

    fn pareto_front(&self, count: usize) -> Result<ReferenceSet<S>> {
        check_front_count(self.m, count)?;
        let points: Vec<Vec<S>> = lattice_at_least::<S>(self.m, count)
            .into_iter()
            .map(|p| {
                let norm = p
                    .iter()
                    .map(|&v| v * v)
                    .fold(S::zero(), |acc, v| acc + v)
                    .sqrt();
                p.into_iter().map(|v| v / norm).collect()
            })
            .collect();
        ReferenceSet::new(exact_count(points, count))
    }
}

// ---------------------------------------------------------------------------
// MaF1

/// Inverted linear front `sum f = m - 1`; no single objective can be
/// optimized in isolation.
pub struct MaF1<S> {
    m: usize,
    lower: Vec<S>,
    upper: Vec<S>,
}

impl<S: Real> MaF1<S> {
    pub const DISTANCE_VARS: usize = 10;

    pub fn new(m: usize) -> Self {
        assert!(m >= 2);
        let (lower, upper) = unit_box(m + Self::DISTANCE_VARS - 1);
        Self { m, lower, upper }
    }
}

impl<S: Real> Problem<S> for MaF1<S> {
    fn id(&self) -> &str {
        "maf1"
    }
    fn num_objectives(&self) -> usize {
        self.m
    }
    fn num_variables(&self) -> usize {
        self.lower.len()
    }
    fn lower(&self) -> &[S] {
        &self.lower
    }
    fn upper(&self) -> &[S] {
        &self.upper
    }

    fn objectives(&self, x: &[S]) -> Vec<S> {
        let g = squared_distance_g(&x[self.m - 1..]);
        linear_map(&x[..self.m - 1])
            .into_iter()
            .map(|h| (S::one() + g) * (S::one() - h))
            .collect()
    }

    fn pareto_front(&self, count: usize) -> Result<ReferenceSet<S>> {
        check_front_count(self.m, count)?;
        let points: Vec<Vec<S>> = lattice_at_least::<S>(self.m, count)
            .into_iter()
            .map(|p| p.into_iter().map(|v| S::one() - v).collect())
            .collect();
        ReferenceSet::new(exact_count(points, count))
    }
}

// ---------------------------------------------------------------------------
// MaF2

/// Concave front restricted to angles in `[pi/8, 3pi/8]`, with the distance
/// variables split into one group per objective.
pub struct MaF2<S> {
    m: usize,
    lower: Vec<S>,
    upper: Vec<S>,
}

impl<S: Real> MaF2<S> {
    pub const DISTANCE_VARS: usize = 10;

    pub fn new(m: usize) -> Self {
        assert!(m >= 2);
        let (lower, upper) = unit_box(m + Self::DISTANCE_VARS - 1);
        Self { m, lower, upper }
    }

    /// Distance-variable range feeding objective `i` (0-based).
    fn chunk(&self, i: usize) -> (usize, usize) {
        let d = self.lower.len();
        let k = d - self.m + 1;
        let c = k / self.m;
        let start = (self.m - 1) + i * c;
        let end = if i < self.m - 1 { start + c } else { d };
        (start, end)
    }
}

impl<S: Real> Problem<S> for MaF2<S> {
    fn id(&self) -> &str {
        "maf2"
    }
    fn num_objectives(&self) -> usize {
        self.m
    }
    fn num_variables(&self) -> usize {
        self.lower.len()
    }
    fn lower(&self) -> &[S] {
        &self.lower
    }
    fn upper(&self) -> &[S] {
        &self.upper
    }

    fn objectives(&self, x: &[S]) -> Vec<S> {
        let half = real::<S>(0.5);
        let quarter = real::<S>(0.25);
        let half_pi = real::<S>(PI / 2.0);
        let angles: Vec<S> = x[..self.m - 1]
            .iter()
            .map(|&v| half_pi * (v * half + quarter))
            .collect();
        let sphere = sphere_map(&angles);
        (0..self.m)
            .map(|i| {
                let (start, end) = self.chunk(i);
                let g = x[start..end]
                    .iter()
                    .map(|&v| {
                        let t = (v * half + quarter) - half;
                        t * t
                    })
                    .fold(S::zero(), |acc, v| acc + v);
                (S::one() + g) * sphere[i]
            })
            .collect()
    }

    fn pareto_front(&self, count: usize) -> Result<ReferenceSet<S>> {
        check_front_count(self.m, count)?;
        // Uniform grid over the achievable angle box mapped onto the sphere.
        let dims = self.m - 1;
        let side = (count as f64).powf(1.0 / dims as f64).ceil() as usize;
        let side = side.max(2);
        let angles = box_grid::<S>(dims, side, PI / 8.0, 3.0 * PI / 8.0);
        let points: Vec<Vec<S>> = angles.iter().map(|a| sphere_map(a)).collect();
        ReferenceSet::new(exact_count(points, count))
    }
}

// ---------------------------------------------------------------------------
// MaF6

/// Degenerate front: a curve on the unit sphere (two intrinsic dimensions in
/// decision space, all middle angles squeezed to `pi/4`).
pub struct MaF6<S> {
    m: usize,
    lower: Vec<S>,
    upper: Vec<S>,
}

impl<S: Real> MaF6<S> {
    pub const DISTANCE_VARS: usize = 10;
    /// Front dimensionality parameter of the underlying family.
    pub const FRONT_DIMS: usize = 2;

    pub fn new(m: usize) -> Self {
        assert!(m >= 2);
        let (lower, upper) = unit_box(m + Self::DISTANCE_VARS - 1);
        Self { m, lower, upper }
    }
}

impl<S: Real> Problem<S> for MaF6<S> {
    fn id(&self) -> &str {
        "maf6"
    }
    fn num_objectives(&self) -> usize {
        self.m
    }
    fn num_variables(&self) -> usize {
        self.lower.len()
    }
    fn lower(&self) -> &[S] {
        &self.lower
    }
    fn upper(&self) -> &[S] {
        &self.upper
    }

    fn objectives(&self, x: &[S]) -> Vec<S> {
        let g = squared_distance_g(&x[self.m - 1..]);
        let two = real::<S>(2.0);
        let half_pi = real::<S>(PI / 2.0);
        let angles: Vec<S> = x[..self.m - 1]
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let squeezed = if j + 1 >= Self::FRONT_DIMS {
                    (S::one() + two * g * v) / (two + two * g)
                } else {
                    v
                };
                squeezed * half_pi
            })
            .collect();
        let scale = S::one() + real::<S>(100.0) * g;
        sphere_map(&angles).into_iter().map(|f| scale * f).collect()
    }

    fn pareto_front(&self, count: usize) -> Result<ReferenceSet<S>> {
        check_front_count(self.m, count)?;
        let quarter_pi = real::<S>(PI / 4.0);
        let points: Vec<Vec<S>> = (0..count)
            .map(|k| {
                let phi = real::<S>(PI / 2.0 * k as f64 / (count - 1) as f64);
                let mut angles = vec![quarter_pi; self.m - 1];
                angles[0] = phi;
                sphere_map(&angles)
            })
            .collect();
        ReferenceSet::new(points)
    }
}

// ---------------------------------------------------------------------------
// MaF7

/// Mixed disconnected front with a multimodal last objective.
pub struct MaF7<S> {
    m: usize,
    lower: Vec<S>,
    upper: Vec<S>,
}

impl<S: Real> MaF7<S> {
    pub const DISTANCE_VARS: usize = 20;

    pub fn new(m: usize) -> Self {
        assert!(m >= 2);
        let (lower, upper) = unit_box(m + Self::DISTANCE_VARS - 1);
        Self { m, lower, upper }
    }

    /// Last objective given the leading objectives and the distance value.
    fn last_objective(&self, leading: &[S], g: S) -> S {
        let three_pi = real::<S>(3.0 * PI);
        let sum = leading
            .iter()
            .map(|&f| f / (S::one() + g) * (S::one() + (three_pi * f).sin()))
            .fold(S::zero(), |acc, v| acc + v);
        (S::one() + g) * (real::<S>(self.m as f64) - sum)
    }
}

impl<S: Real> Problem<S> for MaF7<S> {
    fn id(&self) -> &str {
        "maf7"
    }
    fn num_objectives(&self) -> usize {
        self.m
    }
    fn num_variables(&self) -> usize {
        self.lower.len()
    }
    fn lower(&self) -> &[S] {
        &self.lower
    }
    fn upper(&self) -> &[S] {
        &self.upper
    }

    fn objectives(&self, x: &[S]) -> Vec<S> {
        let tail = &x[self.m - 1..];
        let mean = tail.iter().fold(S::zero(), |acc, &v| acc + v) / real::<S>(tail.len() as f64);
        let g = S::one() + real::<S>(9.0) * mean;
        let mut f: Vec<S> = x[..self.m - 1].to_vec();
        f.push(self.last_objective(&x[..self.m - 1], g));
        f
    }

    fn pareto_front(&self, count: usize) -> Result<ReferenceSet<S>> {
        check_front_count(self.m, count)?;
        // Dense grid on the leading objectives, filtered to the nondominated
        // subset of the g = 1 surface, then thinned to the requested count.
        let dims = self.m - 1;
        let mut side = ((count as f64 / 0.2).powf(1.0 / dims as f64).ceil() as usize).max(4);
        loop {
            let leading = box_grid::<S>(dims, side, 0.0, 1.0);
            let surface: Vec<Vec<S>> = leading
                .iter()
                .map(|lead| {
                    let mut f = lead.clone();
                    f.push(self.last_objective(lead, S::one()));
                    f
                })
                .collect();
            let kept = nondominated_subset(&surface);
            if kept.len() >= count {
                let points: Vec<Vec<S>> = kept.into_iter().map(|i| surface[i].clone()).collect();
                return ReferenceSet::new(exact_count(points, count));
            }
            side = side * 3 / 2 + 1;
        }
    }
}
