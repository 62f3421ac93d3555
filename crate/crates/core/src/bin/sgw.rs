use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use semigroup_weights::harness::analyze::{self, AnalyzeReport};
use semigroup_weights::harness::sweep::{self, VerifyConfig};
use semigroup_weights::harness::{self, Input, RenderFormat};
use semigroup_weights::tableau::Mode;
use semigroup_weights::tree::{self, EnumerationOptions, GapSetCollector, NullVisitor};

#[derive(Parser)]
#[command(name = "sgw", version, about = "Weights and enumeration of numerical semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Comma-separated integer list.
#[derive(Clone, Debug)]
struct List(Vec<u32>);

fn parse_list(text: &str) -> Result<List, String> {
    harness::parse_list(text).map(List)
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct SemigroupArg {
    /// Generators, comma separated
    #[arg(long, value_parser = parse_list)]
    gens: Option<List>,
    /// Gap set, comma separated
    #[arg(long, value_parser = parse_list)]
    gaps: Option<List>,
}

impl SemigroupArg {
    fn input(&self) -> Input {
        match (&self.gens, &self.gaps) {
            (Some(g), _) => Input::Generators(g.0.clone()),
            (_, Some(g)) => Input::Gaps(g.0.clone()),
            _ => unreachable!("clap enforces one of --gens/--gaps"),
        }
    }
}

#[derive(Args)]
struct Output {
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    S,
    K,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Weights, gamma certificates and bounds of one semigroup
    Analyze {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long)]
        gamma: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustive bound and identity verification
    Verify {
        #[arg(long, default_value_t = 3)]
        gamma_max: u32,
        #[arg(long, default_value_t = 16)]
        genus_max: u32,
        /// Check genera [2 gamma, 2 gamma + span] only
        #[arg(long)]
        genus_span: Option<u32>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = tree::DEFAULT_SERIAL_DEPTH)]
        serial_depth: u32,
        #[arg(long, default_value_t = 10)]
        identity_genus_max: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Count semigroups per genus
    Count {
        #[arg(long)]
        genus_max: u32,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value_t = tree::DEFAULT_SERIAL_DEPTH)]
        serial_depth: u32,
        /// Also tally gamma-hyperelliptic semigroups for these gammas
        #[arg(long, value_parser = parse_list)]
        gammas: Option<List>,
        #[arg(long)]
        json: bool,
    },
    /// Draw the Dyck path / Young tableau
    Render {
        #[command(flatten)]
        semigroup: SemigroupArg,
        #[arg(long, value_enum, default_value = "s", ignore_case = true)]
        mode: ModeArg,
        /// Paint cells missing from the staircase minimizer in red
        #[arg(long)]
        diff_min: bool,
        #[arg(long)]
        gamma: Option<u32>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stream gap sets of every semigroup of a genus (or up to a genus)
    Enumerate {
        #[arg(long, conflicts_with = "genus_max", required_unless_present = "genus_max")]
        genus: Option<u32>,
        #[arg(long)]
        genus_max: Option<u32>,
        /// Only gamma-hyperelliptic semigroups
        #[arg(long)]
        gamma: Option<u32>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        output: Output,
    },
}

fn emit(out: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Analyze {
            semigroup,
            gamma,
            output,
        } => {
            let s = semigroup.input().build()?;
            let report = analyze::analyze(&s, gamma)?;
            let text = if output.json {
                serde_json::to_string_pretty(&report)? + "\n"
            } else if output.csv {
                analyze::to_csv([&report])
            } else {
                analyze::to_text(&report)
            };
            emit(&output.out, &text)?;
        }
        Command::Verify {
            gamma_max,
            genus_max,
            genus_span,
            threads,
            serial_depth,
            identity_genus_max,
            output,
        } => {
            if genus_max == 0 {
                return Err("--genus-max must be at least 1".into());
            }
            let result = sweep::verify(&VerifyConfig {
                gamma_max,
                genus_max,
                genus_span,
                threads,
                serial_depth,
                identity_genus_max,
            })?;
            let text = if output.json {
                serde_json::to_string_pretty(&result)? + "\n"
            } else if output.csv {
                sweep::to_csv(&result)
            } else {
                sweep::to_text(&result)
            };
            emit(&output.out, &text)?;
            if !result.is_clean() {
                for v in result.violations() {
                    eprintln!("violation: {v:?}");
                }
                return Ok(ExitCode::from(1));
            }
        }
        Command::Count {
            genus_max,
            threads,
            serial_depth,
            gammas,
            json,
        } => {
            let opts = EnumerationOptions {
                threads,
                serial_depth,
                gammas: gammas.map(|l| l.0).unwrap_or_default(),
            };
            let (_, stats) = tree::enumerate(genus_max, &opts, || NullVisitor)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&stats)?);
            } else {
                for (g, n) in stats.counts.iter().enumerate() {
                    let extra: Vec<String> = stats
                        .gamma_counts
                        .iter()
                        .map(|(gamma, c)| format!("gamma{gamma}={}", c[g]))
                        .collect();
                    println!("{g:>3} {n:>12} {}", extra.join(" "));
                }
                println!(
                    "total {} in {:.3}s ({:.0} nodes/s, {} threads, {} tasks)",
                    stats.total(),
                    stats.elapsed_secs,
                    stats.nodes_per_sec,
                    stats.threads,
                    stats.tasks
                );
            }
        }
        Command::Render {
            semigroup,
            mode,
            diff_min,
            gamma,
            format,
            out,
        } => {
            let s = semigroup.input().build()?;
            let mode = match mode {
                ModeArg::S => Mode::S,
                ModeArg::K => Mode::K,
            };
            let format = match format {
                FormatArg::Ascii => RenderFormat::Ascii,
                FormatArg::Svg => RenderFormat::Svg,
            };
            emit(&out, &harness::render(&s, mode, format, diff_min, gamma)?)?;
        }
        Command::Enumerate {
            genus,
            genus_max,
            gamma,
            threads,
            output,
        } => {
            let (lo, hi) = match (genus, genus_max) {
                (Some(g), _) => (g, g),
                (None, Some(g)) => (0, g),
                _ => unreachable!("clap enforces --genus or --genus-max"),
            };
            let opts = EnumerationOptions::with_threads(threads);
            let plain = !output.json && !output.csv;
            if plain && gamma.is_none() && output.out.is_none() {
                let mut w = BufWriter::new(io::stdout().lock());
                let mut result = Ok(());
                tree::for_each_semigroup(hi, |node| {
                    if node.genus() >= lo && result.is_ok() {
                        let line: Vec<String> = node.gap_iter().map(|x| x.to_string()).collect();
                        result = writeln!(w, "{}", line.join(","));
                    }
                })?;
                result?;
                w.flush()?;
                return Ok(ExitCode::SUCCESS);
            }
            let (collected, _) = match gamma {
                Some(gm) => tree::enumerate_gamma_hyperelliptic_up_to(gm, hi, &opts, GapSetCollector::default)?,
                None => tree::enumerate(hi, &opts, GapSetCollector::default)?,
            };
            let mut sets: Vec<_> = collected.0.into_iter().filter(|g| g.len() as u32 >= lo).collect();
            sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            let text = if plain {
                sets.iter()
                    .map(|g| g.as_slice().iter().map(u32::to_string).collect::<Vec<_>>().join(",") + "\n")
                    .collect()
            } else {
                let reports: Vec<AnalyzeReport> = sets
                    .iter()
                    .map(|g| analyze::analyze(&g.into(), gamma))
                    .collect::<Result<_, _>>()?;
                if output.json {
                    serde_json::to_string_pretty(&reports)? + "\n"
                } else {
                    analyze::to_csv(&reports)
                }
            };
            emit(&output.out, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
