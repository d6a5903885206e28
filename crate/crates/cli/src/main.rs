//! Command-line experiment runner.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use e3a::harness::{
    self, front_dump_path, results_path, run_campaign, CampaignOptions, CellSummary,
    ExperimentConfig,
};

#[derive(Parser)]
#[command(
    name = "e3a",
    about = "Reproducible many-objective optimization experiments",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute every (problem x algorithm x run) cell of a campaign.
    Run {
        /// Campaign description (TOML).
        #[arg(long)]
        config: PathBuf,
        /// Worker threads running cells concurrently.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Skip cells already present in the results file.
        #[arg(long)]
        resume: bool,
    },
    /// Print per-cell mean/std statistics (and Friedman ranks) for a results
    /// directory.
    Summarize {
        /// Directory holding results.csv.
        #[arg(long)]
        input: PathBuf,
    },
    /// Print the final objective vectors of one run.
    Fronts {
        /// Directory holding the fronts/ dumps.
        #[arg(long)]
        input: PathBuf,
        /// Cell key: <problem>,<algorithm>,<run>, e.g. maf1_m3,e3a,0.
        #[arg(long)]
        cell: String,
    },
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Run {
            config,
            jobs,
            resume,
        } => cmd_run(&config, jobs, resume),
        Command::Summarize { input } => cmd_summarize(&input),
        Command::Fronts { input, cell } => cmd_fronts(&input, &cell),
    }
}

fn cmd_run(config: &Path, jobs: usize, resume: bool) -> Result<()> {
    let cfg = ExperimentConfig::load(config)
        .with_context(|| format!("loading campaign config {}", config.display()))?;
    let options = CampaignOptions {
        jobs: jobs.max(1),
        resume,
    };
    let records = run_campaign(&cfg, &options).context("campaign failed")?;
    let output_dir = cfg.resolved_output_dir();
    println!(
        "campaign complete: {} records in {}",
        records.len(),
        results_path(&output_dir).display()
    );
    Ok(())
}

fn cmd_summarize(input: &Path) -> Result<()> {
    let results = results_path(input);
    let records = harness::read_records(&results)
        .with_context(|| format!("reading {}", results.display()))?;
    if records.is_empty() {
        bail!("no records in {}", results.display());
    }
    let summaries = harness::summarize(&records);

    println!(
        "{:<10} {:>3} {:<10} {:>5} {:>12} {:>12} {:>12} {:>12} {:>10}",
        "problem", "m", "algorithm", "runs", "igd_mean", "igd_std", "hv_mean", "hv_std", "flag"
    );
    for cell in &summaries {
        println!(
            "{:<10} {:>3} {:<10} {:>5} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e} {:>10}",
            cell.problem,
            cell.m,
            cell.algorithm,
            cell.runs,
            cell.igd_mean,
            cell.igd_std,
            cell.hv_mean,
            cell.hv_std,
            if cell.degenerate { "degenerate" } else { "" }
        );
    }

    print_friedman(&summaries);
    Ok(())
}

/// Friedman ranks over the (problem, algorithm) mean matrix, when there are
/// at least two problems and two algorithms with complete cells.
fn print_friedman(summaries: &[CellSummary]) {
    let algorithms: Vec<String> = summaries
        .iter()
        .map(|c| c.algorithm.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let instances: Vec<(String, usize)> = summaries
        .iter()
        .map(|c| (c.problem.clone(), c.m))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if algorithms.len() < 2 || instances.len() < 2 {
        return;
    }

    let lookup = |instance: &(String, usize), algorithm: &str| {
        summaries
            .iter()
            .find(|c| c.problem == instance.0 && c.m == instance.1 && c.algorithm == algorithm)
    };
    let matrix: Option<Vec<Vec<f64>>> = instances
        .iter()
        .map(|instance| {
            algorithms
                .iter()
                .map(|algorithm| lookup(instance, algorithm).map(|c| c.igd_mean))
                .collect()
        })
        .collect();
    let Some(matrix) = matrix else {
        return; // incomplete design: some cell has no records
    };
    if let Ok(result) = harness::friedman_test(&matrix) {
        println!();
        println!(
            "friedman (igd): statistic = {:.4}, average ranks:",
            result.statistic
        );
        for (algorithm, rank) in algorithms.iter().zip(&result.average_ranks) {
            println!("  {algorithm:<10} {rank:.3}");
        }
    }
}

fn cmd_fronts(input: &Path, cell: &str) -> Result<()> {
    let parts: Vec<&str> = cell.split(',').collect();
    let [problem, algorithm, run] = parts.as_slice() else {
        bail!("cell must be <problem>,<algorithm>,<run>, e.g. maf1_m3,e3a,0");
    };
    let run: u32 = run.parse().context("run index must be an integer")?;
    let path = front_dump_path(input, problem, algorithm, run);
    let text = std::fs::read_to_string(&path)
        .with_context(|| format!("no front dump at {}", path.display()))?;
    print!("{text}");
    Ok(())
}
