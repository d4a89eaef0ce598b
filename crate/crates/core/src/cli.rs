//! Command-line front end. [`run_command`] is the whole program minus the
//! process plumbing, so it can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog::{evaluate, reference_cases, CaseError};
use crate::generators::{family_from_spec, multipartite_parts};
use crate::graph::{parse_graph, render_graph, Graph, GraphFormat};
use crate::reduced::{steiner_wiener_reduced_detailed, sw_complete_multipartite, wiener_reduced};
use crate::steiner::{binomial, steiner_wiener_naive, wiener_index};
use crate::twins::twin_partition;

pub const EXIT_OK: u8 = 0;
pub const EXIT_COMPUTATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VERIFY_FAILED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "twindex",
    version,
    about = "Twin-class decomposition and exact (Steiner) Wiener indices"
)]
struct Cli {
    /// Worker threads for index computations (default: available parallelism)
    #[arg(long, global = true, env = "TWINDEX_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph from a family spec
    Gen {
        /// e.g. power:D12, zdg:Z24, izdg:Z24:I=(8), comax:Z2xZ2xZ4, multipartite:3,3,3, wheel:5
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "edge-list")]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the twin classes of a graph
    Twins {
        #[command(flatten)]
        input: InputArgs,
        /// Also emit the reduced graph in this format
        #[arg(long)]
        reduced_format: Option<GraphFormat>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute W (m = 2) or SW_m
    Index {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Method::Reduced)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Time the naive and reduced methods over a list of families, as CSV
    Bench {
        /// Family specs; repeat the flag or separate with ';'
        #[arg(long = "family", required = true, value_delimiter = ';')]
        families: Vec<String>,
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the published reference values and report PASS/FAIL per row
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Family spec to generate the graph from
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Graph file, or '-' for standard input
    #[arg(long = "in", id = "input")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "edge-list")]
    in_format: GraphFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Method {
    Naive,
    Reduced,
    ClosedForm,
}

impl Method {
    fn as_str(self) -> &'static str {
        match self {
            Method::Naive => "naive",
            Method::Reduced => "reduced",
            Method::ClosedForm => "closed_form",
        }
    }
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn computation(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_COMPUTATION,
            message: message.to_string(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

#[derive(Default)]
struct Streams {
    stdout: String,
    stderr: String,
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return CommandOutput {
                code,
                stdout,
                stderr,
            };
        }
    };
    let mut streams = Streams::default();
    let result = match cli.threads {
        Some(0) => Err(Failure::usage("--threads must be at least 1")),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, &mut streams)),
            Err(e) => Err(Failure::computation(e)),
        },
        None => dispatch(cli.command, &mut streams),
    };
    let code = match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(streams.stderr, "error: {}", failure.message);
            failure.code
        }
    };
    CommandOutput {
        code,
        stdout: streams.stdout,
        stderr: streams.stderr,
    }
}

fn dispatch(command: Command, io: &mut Streams) -> Result<u8, Failure> {
    match command {
        Command::Gen {
            family,
            format,
            out,
        } => {
            let generated = family_from_spec(&family).map_err(Failure::computation)?;
            if let Some(warning) = &generated.warning {
                let _ = writeln!(io.stderr, "warning: {warning}");
            }
            emit(io, out, render_graph(&generated.graph, format))?;
            Ok(EXIT_OK)
        }
        Command::Twins {
            input,
            reduced_format,
            json,
            out,
        } => twins_command(io, &input, reduced_format, json, out),
        Command::Index {
            input,
            m,
            method,
            json,
        } => index_command(io, &input, m, method, json),
        Command::Bench {
            families,
            m,
            reps,
            out,
        } => bench_command(io, &families, m, reps, out),
        Command::VerifyPaper { json } => verify_command(io, json),
    }
}

fn emit(io: &mut Streams, out: Option<PathBuf>, text: String) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::computation(format!("writing {}: {e}", path.display()))),
        None => {
            io.stdout.push_str(&text);
            Ok(())
        }
    }
}

fn load_graph(input: &InputArgs) -> Result<(Graph, String), Failure> {
    if let Some(spec) = &input.family {
        let generated = family_from_spec(spec).map_err(Failure::computation)?;
        return Ok((generated.graph, spec.clone()));
    }
    let (text, name) = match &input.input {
        Some(path) if path.as_os_str() != "-" => (
            std::fs::read_to_string(path)
                .map_err(|e| Failure::computation(format!("reading {}: {e}", path.display())))?,
            path.display().to_string(),
        ),
        _ => {
            let mut text = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut text)
                .map_err(|e| Failure::computation(format!("reading standard input: {e}")))?;
            (text, "-".to_string())
        }
    };
    let graph = parse_graph(&text, input.in_format).map_err(Failure::computation)?;
    Ok((graph, name))
}

fn twins_command(
    io: &mut Streams,
    input: &InputArgs,
    reduced_format: Option<GraphFormat>,
    json: bool,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    let (graph, _) = load_graph(input)?;
    let d = twin_partition(&graph);
    let label_list = |class: &[usize]| -> Vec<String> {
        class.iter().map(|&v| graph.label(v).into_owned()).collect()
    };
    let text = if json {
        let classes: Vec<Value> = d
            .classes()
            .iter()
            .zip(d.kinds())
            .map(|(c, k)| json!({"kind": k.as_str(), "members": label_list(c), "indices": c}))
            .collect();
        let mut record = json!({
            "n": graph.n(),
            "num_classes": d.num_classes(),
            "classes": classes,
        });
        if let Some(format) = reduced_format {
            record["reduced"] = Value::String(render_graph(d.reduced(), format));
        }
        format!("{record}\n")
    } else {
        let mut text = format!("{} vertices, {} twin classes\n", graph.n(), d.num_classes());
        for (i, (c, k)) in d.classes().iter().zip(d.kinds()).enumerate() {
            let _ = writeln!(text, "C{} {} {{{}}}", i + 1, k, label_list(c).join(", "));
        }
        if let Some(format) = reduced_format {
            text.push_str("reduced graph:\n");
            text.push_str(&render_graph(d.reduced(), format));
        }
        text
    };
    emit(io, out, text)?;
    Ok(EXIT_OK)
}

fn index_command(
    io: &mut Streams,
    input: &InputArgs,
    m: usize,
    method: Method,
    json: bool,
) -> Result<u8, Failure> {
    let (graph, name) = load_graph(input)?;
    let mut record = json!({
        "command": "index",
        "input": name,
        "method": method.as_str(),
        "m": m,
    });
    let started = Instant::now();
    let value = match method {
        Method::Naive => {
            let subsets = binomial(graph.n(), m).map_err(Failure::computation)?;
            let _ = writeln!(io.stderr, "naive: evaluating {subsets} subsets of size {m}");
            let value = if m == 2 {
                wiener_index(&graph)
            } else {
                steiner_wiener_naive(&graph, m)
            }
            .map_err(Failure::computation)?;
            let _ = writeln!(
                io.stderr,
                "naive: done in {:.3} ms",
                started.elapsed().as_secs_f64() * 1e3
            );
            value
        }
        Method::Reduced => {
            let d = twin_partition(&graph);
            let eval = steiner_wiener_reduced_detailed(&d, m).map_err(Failure::computation)?;
            if m == 2 {
                let direct = wiener_reduced(&d).map_err(Failure::computation)?;
                if direct != eval.value {
                    return Err(Failure::computation(format!(
                        "internal inconsistency: pairwise class sum {direct} != profile sum {}",
                        eval.value
                    )));
                }
            }
            record["num_classes"] = json!(eval.num_classes);
            record["num_profiles"] = json!(eval.num_profiles);
            record["dh_cache_hits"] = json!(eval.dh_cache_hits);
            eval.value
        }
        Method::ClosedForm => {
            let parts = input
                .family
                .as_deref()
                .and_then(multipartite_parts)
                .ok_or_else(|| {
                    Failure::computation("closed_form needs a multipartite:... or star:... family")
                })?;
            sw_complete_multipartite(&parts, m).map_err(Failure::computation)?
        }
    };
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
    if json {
        record["value"] = json!(value.to_string());
        record["elapsed_ms"] = json!(elapsed_ms);
        let _ = writeln!(io.stdout, "{record}");
    } else {
        let _ = writeln!(io.stdout, "{value}");
    }
    Ok(EXIT_OK)
}

fn bench_command(
    io: &mut Streams,
    families: &[String],
    m: usize,
    reps: usize,
    out: Option<PathBuf>,
) -> Result<u8, Failure> {
    if reps == 0 {
        return Err(Failure::usage("--reps must be at least 1"));
    }
    let mut csv = String::from("family,n,num_classes,m,method,value,elapsed_ms\n");
    let mut mismatch = false;
    for family in families.iter().map(|f| f.trim()).filter(|f| !f.is_empty()) {
        let graph = family_from_spec(family)
            .map_err(Failure::computation)?
            .graph;
        let classes = twin_partition(&graph).num_classes();
        let mut values = Vec::new();
        for method in [Method::Naive, Method::Reduced] {
            let mut best = f64::INFINITY;
            let mut value = 0;
            for _ in 0..reps {
                let started = Instant::now();
                value = match method {
                    Method::Naive => steiner_wiener_naive(&graph, m),
                    _ => {
                        steiner_wiener_reduced_detailed(&twin_partition(&graph), m).map(|e| e.value)
                    }
                }
                .map_err(|e| Failure::computation(format!("{family}: {e}")))?;
                best = best.min(started.elapsed().as_secs_f64() * 1e3);
            }
            values.push(value);
            let _ = writeln!(
                csv,
                "{family},{},{classes},{m},{},{value},{best:.3}",
                graph.n(),
                method.as_str()
            );
        }
        if values[0] != values[1] {
            mismatch = true;
            let _ = writeln!(
                io.stderr,
                "error: {family}: naive {} and reduced {} disagree",
                values[0], values[1]
            );
        }
    }
    emit(io, out, csv)?;
    Ok(if mismatch { EXIT_COMPUTATION } else { EXIT_OK })
}

fn verify_command(io: &mut Streams, json: bool) -> Result<u8, Failure> {
    let mut all_pass = true;
    let mut rows = Vec::new();
    for (i, case) in reference_cases().iter().enumerate() {
        let outcome = evaluate(case);
        let pass = outcome.passed();
        all_pass &= pass;
        let show = |r: &Result<u128, CaseError>| match r {
            Ok(v) => v.to_string(),
            Err(e) => format!("error({e})"),
        };
        if json {
            rows.push(json!({
                "row": i + 1,
                "name": case.name,
                "family": case.family,
                "m": case.m,
                "expected": case.expected.to_string(),
                "naive": show(&outcome.naive),
                "reduced": show(&outcome.reduced),
                "closed_form": outcome.closed_form.as_ref().map(show),
                "elapsed_ms": outcome.elapsed_ms,
                "status": if pass { "PASS" } else { "FAIL" },
            }));
        } else {
            let closed = outcome
                .closed_form
                .as_ref()
                .map(|r| format!(" closed_form={}", show(r)))
                .unwrap_or_default();
            let _ = writeln!(
                io.stdout,
                "{} {:>2} {}: expected={} naive={} reduced={}{}",
                if pass { "PASS" } else { "FAIL" },
                i + 1,
                case.name,
                case.expected,
                show(&outcome.naive),
                show(&outcome.reduced),
                closed
            );
        }
    }
    if json {
        let _ = writeln!(io.stdout, "{}", Value::Array(rows));
    }
    Ok(if all_pass {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}
