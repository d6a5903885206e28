//! Campaign execution: every (problem x algorithm x run) cell, seeded
//! deterministically, with incremental CSV output and resume support.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::mpsc;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use crate::algorithm::{self, AlgorithmConfig, Selector};
use crate::harness::config::{ExperimentConfig, ProblemSpec};
use crate::harness::records::{self, RunRecord};
use crate::harness::HarnessResult;
use crate::metrics::{hv_monte_carlo, igd, HvConfig, ReferenceSet};
use crate::problems::{by_name, Problem};
use crate::rng::RngStream;

/// Execution knobs that do not affect results.
#[derive(Debug, Clone)]
pub struct CampaignOptions {
    /// Worker threads running cells concurrently.
    pub jobs: usize,
    /// Skip cells whose records already exist in the results file.
    pub resume: bool,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        Self {
            jobs: 1,
            resume: false,
        }
    }
}

/// Results file inside an output directory.
pub fn results_path(output_dir: &Path) -> PathBuf {
    output_dir.join("results.csv")
}

/// Front dump for one cell.
pub fn front_dump_path(output_dir: &Path, instance: &str, algorithm: &str, run: u32) -> PathBuf {
    output_dir
        .join("fronts")
        .join(format!("{instance}_{algorithm}_run{run}.txt"))
}

/// Shared per-instance state: the problem, its reference front, and the run
/// settings derived from the campaign config.
struct InstanceContext {
    spec: ProblemSpec,
    problem: Box<dyn Problem<f64>>,
    refset: ReferenceSet<f64>,
    population_size: usize,
}

struct Cell {
    instance: Arc<InstanceContext>,
    selector: Selector,
    run: u32,
}

/// Executes the campaign described by `cfg` and returns all records,
/// including pre-existing ones when resuming, in canonical cell order.
pub fn run_campaign(
    cfg: &ExperimentConfig,
    options: &CampaignOptions,
) -> HarnessResult<Vec<RunRecord>> {
    cfg.validate()?;
    let output_dir = cfg.resolved_output_dir();
    std::fs::create_dir_all(&output_dir)?;
    if cfg.dump_fronts {
        std::fs::create_dir_all(output_dir.join("fronts"))?;
    }
    let results = results_path(&output_dir);

    let mut existing: Vec<RunRecord> = Vec::new();
    if options.resume && results.exists() {
        existing = records::read_records(&results)?;
    }
    let done: HashSet<_> = existing.iter().map(RunRecord::cell_key).collect();

    let sink: Box<dyn std::io::Write + Send> = if existing.is_empty() {
        Box::new(std::fs::File::create(&results)?)
    } else {
        Box::new(std::fs::OpenOptions::new().append(true).open(&results)?)
    };
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(sink);
    if existing.is_empty() {
        records::write_header(&mut writer)?;
    }

    // Build one context per problem instance; reference fronts are shared
    // across algorithms and runs.
    let mut instances: Vec<Arc<InstanceContext>> = Vec::new();
    for spec in &cfg.problems {
        let problem = by_name::<f64>(&spec.id, spec.m)?;
        let population_size = cfg
            .population_size_for(spec.m)
            .expect("validated population size");
        let refset = match &spec.reference_front {
            Some(path) => ReferenceSet::load(path)?,
            None => problem.pareto_front(cfg.igd_points_for(population_size))?,
        };
        if refset.num_objectives() != spec.m {
            return Err(crate::harness::HarnessError::Invalid(format!(
                "reference front for {} has {} objectives, expected {}",
                spec.instance_id(),
                refset.num_objectives(),
                spec.m
            )));
        }
        instances.push(Arc::new(InstanceContext {
            spec: spec.clone(),
            problem,
            refset,
            population_size,
        }));
    }

    let mut cells: Vec<Cell> = Vec::new();
    for instance in &instances {
        for algorithm_name in &cfg.algorithms {
            let selector = Selector::from_str(algorithm_name)?;
            for run in 0..cfg.runs {
                let key = (
                    instance.spec.id.clone(),
                    instance.spec.m,
                    selector.name().to_string(),
                    run,
                );
                if done.contains(&key) {
                    continue;
                }
                cells.push(Cell {
                    instance: Arc::clone(instance),
                    selector,
                    run,
                });
            }
        }
    }

    let mut fresh: Vec<RunRecord> = Vec::new();
    if options.jobs <= 1 {
        for cell in cells {
            let (record, front) = run_cell(cfg, &cell)?;
            record.validate()?;
            records::append_record(&mut writer, &record)?;
            if cfg.dump_fronts {
                dump_front(&output_dir, &cell, &front)?;
            }
            fresh.push(record);
        }
    } else {
        let queue = Mutex::new(cells.into_iter());
        let (sender, receiver) = mpsc::channel::<HarnessResult<(Cell, RunRecord, Vec<Vec<f64>>)>>();
        std::thread::scope(|scope| -> HarnessResult<()> {
            for _ in 0..options.jobs {
                let sender = sender.clone();
                let queue = &queue;
                scope.spawn(move || loop {
                    let cell = match queue.lock().unwrap().next() {
                        Some(cell) => cell,
                        None => break,
                    };
                    let outcome = run_cell(cfg, &cell).map(|(record, front)| (cell, record, front));
                    if sender.send(outcome).is_err() {
                        break;
                    }
                });
            }
            drop(sender);
            for outcome in receiver {
                let (cell, record, front) = outcome?;
                record.validate()?;
                records::append_record(&mut writer, &record)?;
                if cfg.dump_fronts {
                    dump_front(&output_dir, &cell, &front)?;
                }
                fresh.push(record);
            }
            Ok(())
        })?;
    }

    let mut all = existing;
    all.append(&mut fresh);
    all.sort_by_key(RunRecord::cell_key);
    Ok(all)
}

fn dump_front(output_dir: &Path, cell: &Cell, front: &[Vec<f64>]) -> HarnessResult<()> {
    let path = front_dump_path(
        output_dir,
        &cell.instance.spec.instance_id(),
        cell.selector.name(),
        cell.run,
    );
    records::write_front(&path, front)
}

/// Runs one cell: the optimization itself, then IGD and HV on the final
/// population. The HV stream is derived from the cell seed so the estimate
/// replays exactly.
fn run_cell(cfg: &ExperimentConfig, cell: &Cell) -> HarnessResult<(RunRecord, Vec<Vec<f64>>)> {
    let instance = &cell.instance;
    let spec = &instance.spec;
    let seed = cfg.seed_for(spec, cell.selector.name(), cell.run);

    let algorithm_cfg = AlgorithmConfig {
        population_size: instance.population_size,
        max_generations: cfg.generations,
        variation: cfg.variation.resolve(instance.problem.num_variables()),
        selector: cell.selector,
        seed,
    };

    let started = Instant::now();
    let outcome = algorithm::run(instance.problem.as_ref(), &algorithm_cfg)?;
    let seconds = started.elapsed().as_secs_f64();

    let matrix = outcome.population.objective_matrix();
    let igd_value = igd(&matrix, &instance.refset)?;
    let hv_cfg = HvConfig::front_normalized(&instance.refset).with_samples(cfg.hv_samples);
    let mut hv_rng = RngStream::new(seed).derive("hv");
    let hv_value = hv_monte_carlo(&matrix, &hv_cfg, &mut hv_rng)?;

    let record = RunRecord {
        problem: spec.id.clone(),
        m: spec.m,
        algorithm: cell.selector.name().to_string(),
        run: cell.run,
        seed,
        igd: igd_value,
        hv: hv_value,
        seconds,
        generations: outcome.generations,
    };
    Ok((record, matrix))
}
