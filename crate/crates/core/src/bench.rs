//! Timing all counting algorithms over a range of genera.

use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::baselines::{baseline_count, Baseline};
use crate::error::{Error, Result};
use crate::explorer::{count_dfs, count_recursive, CountResult};
use crate::seeds::SeedNode;

pub const CSV_HEADER: &str = "algorithm,variant,genus,count,elapsed_ns,nodes_per_second";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    SeedsDfs,
    SeedsRecursive,
    Apery,
    GenTrack,
    Decomp,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::SeedsDfs,
        Algorithm::SeedsRecursive,
        Algorithm::Apery,
        Algorithm::GenTrack,
        Algorithm::Decomp,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::SeedsDfs => "seeds-dfs",
            Algorithm::SeedsRecursive => "seeds-recursive",
            Algorithm::Apery => "apery",
            Algorithm::GenTrack => "gentrack",
            Algorithm::Decomp => "decomp",
        }
    }

    /// `(algorithm, variant)` as written to the CSV.
    pub fn family_and_variant(self) -> (&'static str, &'static str) {
        match self {
            Algorithm::SeedsDfs => ("seeds", "dfs"),
            Algorithm::SeedsRecursive => ("seeds", "recursive"),
            Algorithm::Apery => ("apery", "dfs"),
            Algorithm::GenTrack => ("gentrack", "dfs"),
            Algorithm::Decomp => ("decomp", "dfs"),
        }
    }

    pub fn count(self, genus: u32) -> Result<CountResult> {
        match self {
            Algorithm::SeedsDfs => count_dfs(&SeedNode::root(), genus),
            Algorithm::SeedsRecursive => count_recursive(&SeedNode::root(), genus),
            Algorithm::Apery => baseline_count(Baseline::Apery, genus),
            Algorithm::GenTrack => baseline_count(Baseline::GenTrack, genus),
            Algorithm::Decomp => baseline_count(Baseline::Decomp, genus),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algorithm: String,
    pub variant: String,
    pub genus: u32,
    pub count: u64,
    pub elapsed_ns: u64,
    pub nodes_per_second: f64,
}

/// Times every algorithm at every genus in `from..=to`, keeping the fastest
/// of `repetitions` runs. Fails on the first genus where two algorithms
/// disagree.
pub fn run(algorithms: &[Algorithm], from: u32, to: u32, repetitions: u32) -> Result<Vec<BenchRecord>> {
    if algorithms.is_empty() {
        return Err(Error::InvalidBenchmark("no algorithms selected".into()));
    }
    if from > to {
        return Err(Error::InvalidBenchmark(format!("genus range {from}..={to} is empty")));
    }
    if repetitions == 0 {
        return Err(Error::InvalidBenchmark("at least one repetition is needed".into()));
    }

    let mut records = Vec::with_capacity(algorithms.len() * (to - from + 1) as usize);
    for genus in from..=to {
        let mut level: Vec<(Algorithm, CountResult, Duration)> = Vec::with_capacity(algorithms.len());
        for &alg in algorithms {
            let mut best: Option<(CountResult, Duration)> = None;
            for _ in 0..repetitions {
                let began = Instant::now();
                let result = alg.count(genus)?;
                let elapsed = began.elapsed();
                if best.as_ref().is_none_or(|(_, b)| elapsed < *b) {
                    best = Some((result, elapsed));
                }
            }
            let (result, elapsed) = best.expect("at least one repetition");
            level.push((alg, result, elapsed));
        }

        let (first_alg, first, _) = &level[0];
        if let Some((alg, other, _)) = level.iter().find(|(_, r, _)| r.count != first.count) {
            return Err(Error::CountMismatch {
                genus,
                first_algorithm: first_alg.name().into(),
                first_count: first.count,
                other_algorithm: alg.name().into(),
                other_count: other.count,
            });
        }

        for (alg, result, elapsed) in level {
            let (family, variant) = alg.family_and_variant();
            let elapsed_ns = (elapsed.as_nanos() as u64).max(1);
            records.push(BenchRecord {
                algorithm: family.into(),
                variant: variant.into(),
                genus,
                count: result.count,
                elapsed_ns,
                nodes_per_second: result.nodes_visited as f64 / (elapsed_ns as f64 * 1e-9),
            });
        }
    }
    Ok(records)
}

pub fn write_csv_to<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    if records.is_empty() {
        return Err(Error::InvalidBenchmark("no records to write".into()));
    }
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for record in records {
        writer.serialize(record)?;
    }
    writer.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn write_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::InvalidBenchmark("no records to write".into()));
    }
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_csv_to(records, io::BufWriter::new(file))
}

pub fn read_csv(path: &Path) -> Result<Vec<BenchRecord>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut reader = csv::Reader::from_reader(file);
    reader.deserialize().map(|r| r.map_err(Error::from)).collect()
}

/// Algorithms at `genus`, fastest first, as `(algorithm-variant, elapsed_ns)`.
pub fn ranking(records: &[BenchRecord], genus: u32) -> Vec<(String, u64)> {
    let mut out: Vec<(String, u64)> = records
        .iter()
        .filter(|r| r.genus == genus)
        .map(|r| (format!("{}-{}", r.algorithm, r.variant), r.elapsed_ns))
        .collect();
    out.sort_by_key(|(_, ns)| *ns);
    out
}
