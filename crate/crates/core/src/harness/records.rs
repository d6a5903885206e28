//! Per-run result records and their CSV representation.

use std::path::Path;

use crate::harness::{HarnessError, HarnessResult};

/// Results CSV column order.
pub const CSV_HEADER: [&str; 9] = [
    "problem",
    "m",
    "algorithm",
    "run",
    "seed",
    "igd",
    "hv",
    "seconds",
    "generations",
];

/// Outcome of one (problem, algorithm, run) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub problem: String,
    pub m: usize,
    pub algorithm: String,
    pub run: u32,
    pub seed: u64,
    pub igd: f64,
    pub hv: f64,
    pub seconds: f64,
    pub generations: u32,
}

impl RunRecord {
    /// Key identifying the cell this record belongs to.
    pub fn cell_key(&self) -> (String, usize, String, u32) {
        (
            self.problem.clone(),
            self.m,
            self.algorithm.clone(),
            self.run,
        )
    }

    /// Indicator values must be finite and nonnegative.
    pub fn validate(&self) -> HarnessResult<()> {
        for (name, value) in [
            ("igd", self.igd),
            ("hv", self.hv),
            ("seconds", self.seconds),
        ] {
            if !value.is_finite() || value < 0.0 {
                return Err(HarnessError::Invalid(format!(
                    "record {}/m{}/{}/run{} has invalid {name} = {value}",
                    self.problem, self.m, self.algorithm, self.run
                )));
            }
        }
        Ok(())
    }

    fn to_fields(&self) -> [String; 9] {
        [
            self.problem.clone(),
            self.m.to_string(),
            self.algorithm.clone(),
            self.run.to_string(),
            self.seed.to_string(),
            format_value(self.igd),
            format_value(self.hv),
            format_value(self.seconds),
            self.generations.to_string(),
        ]
    }
}

/// Scientific notation with 17 significant digits: parses back to the exact
/// `f64` bit pattern.
fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

/// Appends `record` to an open CSV writer.
pub fn append_record<W: std::io::Write>(
    writer: &mut csv::Writer<W>,
    record: &RunRecord,
) -> HarnessResult<()> {
    writer.write_record(record.to_fields())?;
    writer.flush()?;
    Ok(())
}

/// Writes the header row of a fresh results file.
pub fn write_header<W: std::io::Write>(writer: &mut csv::Writer<W>) -> HarnessResult<()> {
    writer.write_record(CSV_HEADER)?;
    writer.flush()?;
    Ok(())
}

/// Reads every record in a results CSV.
pub fn read_records(path: &Path) -> HarnessResult<Vec<RunRecord>> {
    let mut reader = csv::Reader::from_path(path)?;
    {
        let header = reader.headers()?;
        if header.iter().ne(CSV_HEADER) {
            return Err(HarnessError::Invalid(format!(
                "unexpected results header: {header:?}"
            )));
        }
    }
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row?;
        let field = |i: usize| -> HarnessResult<&str> {
            row.get(i)
                .ok_or_else(|| HarnessError::Invalid(format!("short row: {row:?}")))
        };
        let parse_err =
            |what: &str, value: &str| HarnessError::Invalid(format!("bad {what}: `{value}`"));
        records.push(RunRecord {
            problem: field(0)?.to_string(),
            m: field(1)?
                .parse()
                .map_err(|_| parse_err("m", field(1).unwrap_or("")))?,
            algorithm: field(2)?.to_string(),
            run: field(3)?
                .parse()
                .map_err(|_| parse_err("run", field(3).unwrap_or("")))?,
            seed: field(4)?
                .parse()
                .map_err(|_| parse_err("seed", field(4).unwrap_or("")))?,
            igd: field(5)?
                .parse()
                .map_err(|_| parse_err("igd", field(5).unwrap_or("")))?,
            hv: field(6)?
                .parse()
                .map_err(|_| parse_err("hv", field(6).unwrap_or("")))?,
            seconds: field(7)?
                .parse()
                .map_err(|_| parse_err("seconds", field(7).unwrap_or("")))?,
            generations: field(8)?
                .parse()
                .map_err(|_| parse_err("generations", field(8).unwrap_or("")))?,
        });
    }
    Ok(records)
}

/// Writes an objective matrix in the plain-text front format (one vector per
/// line, whitespace-separated).
pub fn write_front(path: &Path, matrix: &[Vec<f64>]) -> HarnessResult<()> {
    use std::io::Write;
    let mut file = std::fs::File::create(path)?;
    for row in matrix {
        let line: Vec<String> = row.iter().map(|v| format_value(*v)).collect();
        writeln!(file, "{}", line.join(" "))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_record() -> RunRecord {
        RunRecord {
            problem: "maf1".into(),
            m: 3,
            algorithm: "e3a".into(),
            run: 4,
            seed: 0xfeed_beef_dead_cafe,
            igd: 4.008e-2,
            hv: 0.2981,
            seconds: 1.75,
            generations: 300,
        }
    }

    fn round_trip(records: &[RunRecord]) -> Vec<RunRecord> {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("results.csv");
        let mut writer = csv::Writer::from_path(&path).unwrap();
        write_header(&mut writer).unwrap();
        for record in records {
            append_record(&mut writer, record).unwrap();
        }
        drop(writer);
        read_records(&path).unwrap()
    }

    #[test]
    fn record_round_trips_through_csv() {
        let record = sample_record();
        assert_eq!(round_trip(std::slice::from_ref(&record)), vec![record]);
    }

    #[test]
    fn validation_rejects_bad_indicators() {
        let mut record = sample_record();
        record.igd = f64::NAN;
        assert!(record.validate().is_err());
        let mut record = sample_record();
        record.hv = -0.5;
        assert!(record.validate().is_err());
        assert!(sample_record().validate().is_ok());
    }

    proptest! {
        #[test]
        fn csv_round_trip_is_exact(
            igd in 0.0f64..10.0,
            hv in 0.0f64..10.0,
            seconds in 0.0f64..1e4,
            seed in any::<u64>(),
            run in 0u32..1000,
        ) {
            let record = RunRecord {
                problem: "dtlz2".into(),
                m: 5,
                algorithm: "crowding".into(),
                run,
                seed,
                igd,
                hv,
                seconds,
                generations: 300,
            };
            let back = round_trip(std::slice::from_ref(&record));
            prop_assert_eq!(back[0].igd.to_bits(), record.igd.to_bits());
            prop_assert_eq!(back[0].hv.to_bits(), record.hv.to_bits());
            prop_assert_eq!(back[0].seconds.to_bits(), record.seconds.to_bits());
            prop_assert_eq!(&back[0], &record);
        }
    }
}
