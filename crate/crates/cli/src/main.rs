//! `seedtree`: count, enumerate and inspect numerical semigroups by genus.

mod verify;

use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seedtree::bench::{self, Algorithm};
use seedtree::explorer::{self, DEFAULT_FRONTIER_DEPTH};
use seedtree::{decode_node, FullSemigroup, SeedNode};

/// Largest genus the fixed-width bit vectors can reach.
const MAX_GENUS: u32 = (seedtree::BitVec::<2>::MAX_CAPACITY as u32 - 2) / 2;

#[derive(Parser)]
#[command(name = "seedtree", version, about = "Numerical semigroups by genus, via seeds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the semigroups of one genus.
    Count {
        #[arg(long, value_parser = genus_parser())]
        genus: u32,
        #[arg(long, default_value = "seeds-dfs", value_parser = algorithm_parser())]
        algorithm: Algorithm,
        /// Threads for the seeds-dfs walk.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        workers: u32,
        /// Depth at which the tree is split into parallel jobs.
        #[arg(long, default_value_t = DEFAULT_FRONTIER_DEPTH)]
        frontier_depth: u32,
    },
    /// Print n_0, ..., n_G.
    Sequence {
        #[arg(long, value_parser = genus_parser())]
        max_genus: u32,
        #[arg(long, value_enum, default_value_t = SequenceFormat::Table)]
        format: SequenceFormat,
    },
    /// List the semigroups of one genus in depth-first order.
    Enumerate {
        #[arg(long, value_parser = genus_parser())]
        genus: u32,
        #[arg(long, value_enum, default_value_t = NodeFormat::Gaps)]
        format: NodeFormat,
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Print the table of seeds of a semigroup.
    SeedsTable(SemigroupSpec),
    /// Render the tree down to a genus.
    Tree {
        #[arg(long, value_parser = genus_parser())]
        max_genus: u32,
        #[arg(long, value_enum, default_value_t = TreeFormat::Dot)]
        format: TreeFormat,
    },
    /// Check the seeds descent against recomputation and the counts against
    /// the baselines.
    Verify {
        #[arg(long, value_parser = genus_parser())]
        max_genus: u32,
    },
    /// Time every algorithm over a range of genera and write CSV.
    Bench {
        #[arg(long, value_parser = genus_parser())]
        from: u32,
        #[arg(long, value_parser = genus_parser())]
        to: u32,
        #[arg(long, value_delimiter = ',', value_parser = algorithm_parser())]
        algorithms: Vec<Algorithm>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        /// Defaults to standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SemigroupSpec {
    /// Comma-separated gaps.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    gaps: Option<Vec<u32>>,
    /// Comma-separated non-zero elements, ending at the conductor.
    #[arg(long, value_delimiter = ',')]
    up_to_conductor: Option<Vec<u32>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SequenceFormat {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum NodeFormat {
    Gaps,
    Strings,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeFormat {
    Dot,
}

fn genus_parser() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(0..=MAX_GENUS as i64)
}

fn algorithm_parser() -> impl TypedValueParser<Value = Algorithm> {
    PossibleValuesParser::new(Algorithm::ALL.map(Algorithm::name))
        .map(|name| name.parse::<Algorithm>().expect("restricted to known names"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::Count {
            genus,
            algorithm,
            workers,
            frontier_depth,
        } => {
            let result = if workers > 1 {
                if algorithm != Algorithm::SeedsDfs {
                    Cli::command()
                        .error(
                            ErrorKind::ArgumentConflict,
                            format!("--workers applies to seeds-dfs only, not {algorithm}"),
                        )
                        .exit();
                }
                explorer::count_parallel(genus, workers as usize, frontier_depth)?
            } else {
                algorithm.count(genus)?
            };
            writeln!(out, "{}", result.count)?;
        }
        Command::Sequence { max_genus, format } => {
            let report = explorer::sequence(max_genus)?;
            write_sequence(&mut out, &report.values(), format)?;
            for g in &report.fibonacci_violations {
                eprintln!("warning: n_{} < n_{} + n_{g}", g + 2, g + 1);
            }
        }
        Command::Enumerate { genus, format, limit } => {
            let mut printed = 0u64;
            let mut failure = None;
            if limit != Some(0) {
                explorer::enumerate_until(&SeedNode::root(), genus, |node| {
                    if let Err(e) = write_node(&mut out, node, format) {
                        failure = Some(e);
                        return ControlFlow::Break(());
                    }
                    printed += 1;
                    if limit.is_some_and(|l| printed >= l) {
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                })?;
            }
            if let Some(e) = failure {
                return Err(e);
            }
        }
        Command::SeedsTable(spec) => {
            let semigroup = match (spec.gaps, spec.up_to_conductor) {
                (Some(gaps), _) => FullSemigroup::from_gaps(gaps),
                (None, Some(elements)) => FullSemigroup::from_elements_to_conductor(&elements),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let semigroup = match semigroup {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::FAILURE);
                }
            };
            write!(out, "{}", semigroup.seeds_table_bruteforce())?;
        }
        Command::Tree { max_genus, format } => match format {
            TreeFormat::Dot => write_dot(&mut out, max_genus)?,
        },
        Command::Verify { max_genus } => {
            out.flush()?;
            drop(out);
            return Ok(match verify::run(max_genus) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("verification failed: {e:#}");
                    ExitCode::FAILURE
                }
            });
        }
        Command::Bench {
            from,
            to,
            algorithms,
            reps,
            output,
        } => {
            if from > to {
                Cli::command()
                    .error(ErrorKind::ValueValidation, format!("--from {from} exceeds --to {to}"))
                    .exit();
            }
            let algorithms = if algorithms.is_empty() {
                Algorithm::ALL.to_vec()
            } else {
                algorithms
            };
            let records = bench::run(&algorithms, from, to, reps)?;
            match &output {
                Some(path) => bench::write_csv(&records, path)?,
                None => bench::write_csv_to(&records, &mut out)?,
            }
            let ranking = bench::ranking(&records, to);
            let line = ranking.iter().fold(String::new(), |mut s, (name, ns)| {
                if !s.is_empty() {
                    s.push_str(" < ");
                }
                let _ = write!(s, "{name} ({:.3} ms)", *ns as f64 / 1e6);
                s
            });
            eprintln!("genus {to}, fastest first: {line}");
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SequenceEntry {
    genus: u32,
    count: u64,
}

fn write_sequence<W: Write>(out: &mut W, counts: &[u64], format: SequenceFormat) -> Result<()> {
    match format {
        SequenceFormat::Table => {
            let width = counts.iter().map(|n| n.to_string().len()).max().unwrap_or(1).max(5);
            writeln!(out, "genus  {:>width$}", "count")?;
            for (g, n) in counts.iter().enumerate() {
                writeln!(out, "{g:>5}  {n:>width$}")?;
            }
        }
        SequenceFormat::Csv => {
            writeln!(out, "genus,count")?;
            for (g, n) in counts.iter().enumerate() {
                writeln!(out, "{g},{n}")?;
            }
        }
        SequenceFormat::Json => {
            let entries: Vec<SequenceEntry> = counts
                .iter()
                .enumerate()
                .map(|(g, &count)| SequenceEntry { genus: g as u32, count })
                .collect();
            serde_json::to_writer(&mut *out, &entries)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn write_node<W: Write>(out: &mut W, node: &SeedNode, format: NodeFormat) -> Result<()> {
    match format {
        NodeFormat::Gaps => {
            let gaps: Vec<String> = node.gap_values().iter().map(u32::to_string).collect();
            writeln!(out, "{}", gaps.join(","))?;
        }
        NodeFormat::Strings => writeln!(out, "{} {}", node.gap_string(), node.seed_string())?,
        NodeFormat::Json => {
            let semigroup = decode_node(node).context("decoding an enumerated node")?;
            serde_json::to_writer(&mut *out, &semigroup.to_json())?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn write_dot<W: Write>(out: &mut W, max_genus: u32) -> Result<()> {
    writeln!(out, "digraph semigroup_tree {{")?;
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];")?;
    let root = SeedNode::root().resized(explorer::capacity_for(max_genus)?)?;
    let mut next_id = 0u64;
    let mut stack = vec![(root, next_id)];
    next_id += 1;
    while let Some((node, id)) = stack.pop() {
        writeln!(
            out,
            "  n{id} [label=\"{}\\n{}\"];",
            node.gap_string(),
            node.seed_string()
        )?;
        if node.genus() == max_genus {
            continue;
        }
        let mut children = Vec::new();
        for (offset, child) in node.children() {
            writeln!(out, "  n{id} -> n{next_id} [label=\"{offset}\"];")?;
            children.push((child, next_id));
            next_id += 1;
        }
        stack.extend(children.into_iter().rev());
    }
    writeln!(out, "}}")?;
    Ok(())
}
