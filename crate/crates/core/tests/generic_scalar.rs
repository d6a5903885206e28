//! The numeric kernels are generic over the scalar type; run the full
//! pipeline in `f32` next to the default `f64`.

use e3a::algorithm::{run, AlgorithmConfig};
use e3a::metrics::{das_dennis, igd};
use e3a::problems::by_name;
use e3a::selection::population_maintenance;
use e3a::solution::Population;

#[test]
fn full_pipeline_runs_in_f32() {
    let problem = by_name::<f32>("dtlz2", 3).unwrap();
    let cfg = AlgorithmConfig::new(12, problem.num_variables(), 3).with_generations(5);
    let outcome = run(problem.as_ref(), &cfg).unwrap();
    assert_eq!(outcome.population.len(), 12);

    let refset = problem.pareto_front(30).unwrap();
    let quality: f32 = igd(&outcome.population.objective_matrix(), &refset).unwrap();
    assert!(quality.is_finite() && quality >= 0.0);
}

#[test]
fn maintenance_selects_the_same_indices_in_both_precisions() {
    let rows64: Vec<Vec<f64>> = vec![
        vec![0.0, 1.0],
        vec![0.1, 0.85],
        vec![0.3, 0.55],
        vec![0.55, 0.3],
        vec![0.85, 0.1],
        vec![1.0, 0.0],
    ];
    let rows32: Vec<Vec<f32>> = rows64
        .iter()
        .map(|row| row.iter().map(|&v| v as f32).collect())
        .collect();

    let selected64 =
        population_maintenance(&Population::from_objective_rows("p", rows64).unwrap(), 4).unwrap();
    let selected32 =
        population_maintenance(&Population::from_objective_rows("p", rows32).unwrap(), 4).unwrap();
    assert_eq!(selected64, selected32);
}

#[test]
fn directions_agree_across_scalar_types() {
    let single: Vec<Vec<f32>> = das_dennis(3, 4);
    let double: Vec<Vec<f64>> = das_dennis(3, 4);
    assert_eq!(single.len(), double.len());
    for (a, b) in single.iter().zip(&double) {
        for (&x, &y) in a.iter().zip(b) {
            assert!((f64::from(x) - y).abs() < 1e-6);
        }
    }
}
