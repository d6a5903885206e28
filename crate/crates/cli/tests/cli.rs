//! End-to-end smoke tests of the binary: run a tiny campaign, summarize it,
//! and dump one front.

use std::path::Path;
use std::process::Command;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_e3a"))
}

fn write_config(dir: &Path) -> std::path::PathBuf {
    let output = dir.join("out");
    let config = dir.join("campaign.toml");
    std::fs::write(
        &config,
        format!(
            r#"
                master_seed = 11
                runs = 2
                generations = 3
                output_dir = "{}"
                problems = [{{ id = "maf1", m = 3 }}]
                algorithms = ["e3a", "crowding"]
                population_sizes = [[3, 12]]
                hv_samples = 1000
                igd_reference_points = 60
            "#,
            output.display()
        ),
    )
    .unwrap();
    config
}

#[test]
fn run_summarize_and_fronts_work_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let output_dir = dir.path().join("out");

    let run = binary()
        .args(["run", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(
        run.status.success(),
        "run failed: {}",
        String::from_utf8_lossy(&run.stderr)
    );

    let results = output_dir.join("results.csv");
    let text = std::fs::read_to_string(&results).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "problem,m,algorithm,run,seed,igd,hv,seconds,generations"
    );
    assert_eq!(lines.count(), 4);

    let summarize = binary()
        .args(["summarize", "--input"])
        .arg(&output_dir)
        .output()
        .unwrap();
    assert!(summarize.status.success());
    let stdout = String::from_utf8_lossy(&summarize.stdout);
    assert!(stdout.contains("maf1"));
    assert!(stdout.contains("e3a"));
    assert!(stdout.contains("crowding"));

    let fronts = binary()
        .args(["fronts", "--input"])
        .arg(&output_dir)
        .args(["--cell", "maf1_m3,e3a,0"])
        .output()
        .unwrap();
    assert!(fronts.status.success());
    let front_text = String::from_utf8_lossy(&fronts.stdout);
    assert_eq!(front_text.lines().count(), 12); // population size
    for line in front_text.lines() {
        assert_eq!(line.split_whitespace().count(), 3); // m objectives
        for token in line.split_whitespace() {
            token.parse::<f64>().unwrap();
        }
    }
}

#[test]
fn resume_reuses_existing_records() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let output_dir = dir.path().join("out");

    let first = binary()
        .args(["run", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(first.status.success());
    let before = std::fs::read_to_string(output_dir.join("results.csv")).unwrap();

    let second = binary()
        .args(["run", "--resume", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(second.status.success());
    let after = std::fs::read_to_string(output_dir.join("results.csv")).unwrap();
    assert_eq!(before, after, "resume must not recompute completed cells");
}

#[test]
fn bad_config_fails_fast() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.toml");
    std::fs::write(
        &config,
        r#"
            master_seed = 1
            output_dir = "out"
            problems = [{ id = "nonexistent", m = 3 }]
            algorithms = ["e3a"]
        "#,
    )
    .unwrap();
    let run = binary()
        .args(["run", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert!(!run.status.success());
    assert!(String::from_utf8_lossy(&run.stderr).contains("nonexistent"));
}
