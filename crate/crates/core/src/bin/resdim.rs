use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use resdim::closed_forms::{parse_generator, parse_range, Family};
use resdim::extremal::{
    extremal_difference, verify_families, verify_source, verify_theorems, GraphSource,
    VerificationReport, MAX_BUILTIN_ORDER,
};
use resdim::report::{
    family_rows, render_extremal_rows, render_family_rows, ExtremalRow, Format, ResultRecord,
};
use resdim::{parse_graph6, Graph, InvariantTag};

/// Exact resolvability invariants of small graphs.
#[derive(Parser, Debug)]
#[command(name = "resdim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// json, csv or table
    #[arg(long, default_value = "table")]
    format: String,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of a single graph
    Compute {
        /// Generator spec, e.g. `path:7`, `bipartite:2,5`, `tprime:9`
        #[arg(long, group = "input")]
        gen: Option<String>,
        /// graph6 string
        #[arg(long, group = "input")]
        graph6: Option<String>,
        /// Edge-list file: `n m` then `u v` per line, 1-based
        #[arg(long, group = "input")]
        edges: Option<PathBuf>,
        /// Comma-separated subset of beta,beta_E,beta_M,psi,mhs_strict,mhs_weak
        #[arg(long)]
        invariants: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Computed values against closed forms over a parameter range
    Families {
        /// path, cycle, star, complete, tprime or bipartite:R
        family: String,
        /// `a..b` or a single value
        range: String,
        #[arg(long)]
        invariants: Option<String>,
        #[command(flatten)]
        output: Output,
    },
    /// Maximum of xi1(G) - xi2(G) over connected graphs of each order
    Extremal {
        xi1: String,
        xi2: String,
        range: String,
        /// graph6 stream (one graph per line) instead of builtin enumeration
        #[arg(long)]
        stream: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Check the extremal theorems and closed forms
    Verify {
        range: String,
        #[arg(long)]
        stream: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

enum Outcome {
    Success,
    ChecksFailed,
}

fn parse_tags(list: Option<&str>) -> anyhow::Result<Vec<InvariantTag>> {
    match list {
        None => Ok(InvariantTag::ALL.to_vec()),
        Some(s) => s
            .split(',')
            .map(|t| t.trim().parse::<InvariantTag>().map_err(Into::into))
            .collect(),
    }
}

fn emit(output: &Output, text: &str) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn sources(range: &str, stream: Option<&PathBuf>) -> anyhow::Result<Vec<GraphSource>> {
    let (lo, hi) = parse_range(range)?;
    match stream {
        Some(path) => {
            if lo != hi {
                bail!("a --stream covers a single order; got range {range}");
            }
            let src = GraphSource::from_graph6_file(path)?;
            if src.order() != lo {
                bail!(
                    "stream {} holds graphs of order {}, not {lo}",
                    path.display(),
                    src.order()
                );
            }
            Ok(vec![src])
        }
        None => {
            if hi > MAX_BUILTIN_ORDER {
                bail!("order {hi} needs a graph6 --stream (builtin enumeration stops at {MAX_BUILTIN_ORDER})");
            }
            (lo..=hi)
                .map(|n| GraphSource::builtin(n).map_err(Into::into))
                .collect()
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Compute {
            gen,
            graph6,
            edges,
            invariants,
            output,
        } => {
            let format: Format = output.format.parse()?;
            let g: Graph = match (gen, graph6, edges) {
                (Some(spec), None, None) => parse_generator(&spec)?,
                (None, Some(s), None) => parse_graph6(&s)?,
                (None, None, Some(path)) => {
                    let text = fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    Graph::parse_edge_list_text(&text)?
                }
                _ => bail!("give exactly one of --gen, --graph6, --edges"),
            };
            let tags = parse_tags(invariants.as_deref())?;
            let rec = ResultRecord::compute(&g, &tags)?;
            emit(&output, &rec.render(format))?;
            Ok(Outcome::Success)
        }
        Command::Families {
            family,
            range,
            invariants,
            output,
        } => {
            let format: Format = output.format.parse()?;
            let fam: Family = family.parse()?;
            let (lo, hi) = parse_range(&range)?;
            let tags = parse_tags(invariants.as_deref())?;
            let rows = family_rows(fam, lo, hi, &tags)?;
            emit(&output, &render_family_rows(&rows, format))?;
            Ok(if rows.iter().all(|r| r.ok) {
                Outcome::Success
            } else {
                Outcome::ChecksFailed
            })
        }
        Command::Extremal {
            xi1,
            xi2,
            range,
            stream,
            output,
        } => {
            let format: Format = output.format.parse()?;
            let (a, b): (InvariantTag, InvariantTag) = (xi1.parse()?, xi2.parse()?);
            let rows = sources(&range, stream.as_ref())?
                .iter()
                .map(|src| Ok(ExtremalRow::new(extremal_difference(a, b, src)?)))
                .collect::<anyhow::Result<Vec<_>>>()?;
            emit(&output, &render_extremal_rows(&rows, format))?;
            Ok(if rows.iter().all(|r| r.ok) {
                Outcome::Success
            } else {
                Outcome::ChecksFailed
            })
        }
        Command::Verify {
            range,
            stream,
            output,
        } => {
            let format: Format = output.format.parse()?;
            let report = match stream {
                Some(path) => {
                    let src = &sources(&range, Some(&path))?[0];
                    let mut report = verify_source(src)?;
                    report.checks.extend(verify_families(src.order())?.checks);
                    report
                }
                None => {
                    let (lo, hi) = parse_range(&range)?;
                    if hi > MAX_BUILTIN_ORDER {
                        bail!("order {hi} needs a graph6 --stream");
                    }
                    verify_theorems(lo, hi)?
                }
            };
            emit(&output, &render_verification(&report, format))?;
            Ok(if report.all_passed() {
                Outcome::Success
            } else {
                Outcome::ChecksFailed
            })
        }
    }
}

fn render_verification(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("serialisable") + "\n",
        Format::Csv => {
            let mut out = String::from("status,n,statement,detail\n");
            for c in &report.checks {
                out.push_str(&format!(
                    "{},{},\"{}\",\"{}\"\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.n,
                    c.statement.replace('"', "\"\""),
                    c.detail.replace('"', "\"\"")
                ));
            }
            out
        }
        Format::Table => report.to_table(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
