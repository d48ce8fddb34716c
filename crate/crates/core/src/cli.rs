//! The `cyclenice` command line.
//!
//! Exit codes: 0 cycle-nice / success, 1 not cycle-nice, 2 out of scope or
//! failed precondition, 3 parse or I/O error (including usage errors),
//! 4 resource limit exceeded, 5 structural and brute-force answers
//! disagree or another internal inconsistency.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cycles::{
    cycle_nice_oracle, ear_decomposition, CycleSpec, OracleVerdict, DEFAULT_EAR_BUDGET,
};
use crate::error::{Error, Result};
use crate::generator::{atlas, generate_instance, GenConfig};
use crate::io::{read_graph_file, to_dot, to_graph6, write_edge_list, RawGraph};
use crate::matching::{has_perfect_matching, is_matching_covered};
use crate::multigraph::Multigraph;
use crate::predicates::{identify_base, is_claw_free, is_planar, BaseTag};
use crate::recognizer::{recognize_with, Options, RejectReason, ScopeReason, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_NICE: i32 = 1;
pub const EXIT_SCOPE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "cyclenice",
    version,
    about = "Recognize and certify cycle-nice graphs"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph is cycle-nice.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Structural)]
        method: Method,
        /// Maximum number of even cycles the brute-force oracle examines.
        #[arg(long, default_value_t = crate::cycles::DEFAULT_CYCLE_CAP)]
        cap: usize,
    },
    /// Print structural properties of a graph.
    Props {
        file: PathBuf,
        /// Also print the graph in DOT format.
        #[arg(long)]
        dot: bool,
    },
    /// Write a construction certificate or a bad even cycle.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = crate::cycles::DEFAULT_CYCLE_CAP)]
        cap: usize,
    },
    /// Compute an ear decomposition starting from a nice even cycle.
    Ears {
        file: PathBuf,
        /// The initial cycle as a comma-separated vertex list.
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
        #[arg(long, default_value_t = DEFAULT_EAR_BUDGET)]
        budget: usize,
    },
    /// Generate random cycle-nice graphs with their certificates.
    Generate {
        /// Base graph (C<2k>, diamond, K4, C6bar); random when omitted.
        #[arg(long)]
        base: Option<BaseTag>,
        #[arg(long, default_value_t = 4)]
        ops: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep only steps whose result is claw-free and planar.
        #[arg(long)]
        claw_free_planar: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 5)]
        max_path_len: usize,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Classify all small 3-connected claw-free planar graphs.
    Atlas {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = crate::cycles::DEFAULT_CYCLE_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Structural,
    Both,
}

/// Runs the command line with the given arguments (including the program
/// name) and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let json = cli.json;
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let code = exit_code(&e);
            if json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string(), "exit": code }));
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Io(_) => EXIT_PARSE,
        Error::CapExceeded(_) | Error::BudgetExceeded(_) | Error::Stuck(_) => EXIT_LIMIT,
        Error::Internal(_) => EXIT_INTERNAL,
        Error::Step { source, .. } => exit_code(source),
        _ => EXIT_SCOPE,
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Check { file, method, cap } => check(&file, method, cap, json, out),
        Command::Props { file, dot } => props(&file, dot, json, out),
        Command::Decompose {
            file,
            out: path,
            cap,
        } => decompose(&file, &path, cap, json, out),
        Command::Ears {
            file,
            cycle,
            budget,
        } => ears(&file, &cycle, budget, json, out),
        Command::Generate {
            base,
            ops,
            seed,
            claw_free_planar,
            out: dir,
            count,
            max_path_len,
            max_vertices,
        } => {
            let cfg = GenConfig {
                base,
                n_ops: ops,
                seed,
                max_path_len,
                require_claw_free_planar: claw_free_planar,
                max_vertices,
                ..GenConfig::default()
            };
            generate(&cfg, &dir, count, json, out)
        }
        Command::Atlas {
            max_n,
            out: path,
            cap,
        } => run_atlas(max_n, path.as_deref(), cap, json, out),
    }
}

fn emit(out: &mut dyn Write, s: impl std::fmt::Display) -> Result<()> {
    writeln!(out, "{s}").map_err(|e| Error::Io(e.to_string()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Loads a graph; `Ok(None)` means the file contains loops.
fn load(path: &Path) -> Result<Option<Multigraph>> {
    let raw: RawGraph = read_graph_file(path)?;
    if raw.has_loops() {
        return Ok(None);
    }
    raw.to_multigraph().map(Some)
}

fn load_loopless(path: &Path) -> Result<Multigraph> {
    load(path)?.ok_or_else(|| Error::Parse("loops are not supported".into()))
}

fn cycle_text(c: &CycleSpec) -> String {
    c.vertices
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("-")
}

fn scope_text(r: ScopeReason) -> &'static str {
    match r {
        ScopeReason::NotClawFree => "not claw-free",
        ScopeReason::NotPlanar => "not planar",
        ScopeReason::Not2Connected => "not 2-connected",
        ScopeReason::HasLoops => "has loops",
    }
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Accept { .. } | Verdict::AcceptOracle { .. } => EXIT_OK,
        Verdict::Reject(_) => EXIT_NOT_NICE,
        Verdict::OutOfScope(_) => EXIT_SCOPE,
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Accept { certificate, .. } => format!(
            "cycle-nice: built from {} in {} steps",
            certificate.base,
            certificate.steps.len()
        ),
        Verdict::AcceptOracle { note } => format!("cycle-nice ({note})"),
        Verdict::Reject(RejectReason::Witness(c)) => {
            format!(
                "not cycle-nice: removing even cycle {} leaves no perfect matching",
                cycle_text(c)
            )
        }
        Verdict::Reject(RejectReason::NotMatchable) => "not cycle-nice: no perfect matching".into(),
        Verdict::OutOfScope(r) => format!("out of scope: {}", scope_text(*r)),
    }
}

fn oracle_text(v: &OracleVerdict) -> String {
    match v {
        OracleVerdict::CycleNice => "cycle-nice".into(),
        OracleVerdict::Witness(c) => {
            format!(
                "not cycle-nice: removing even cycle {} leaves no perfect matching",
                cycle_text(c)
            )
        }
        OracleVerdict::NotMatchable => "not cycle-nice: no perfect matching".into(),
    }
}

fn oracle_code(v: &OracleVerdict) -> i32 {
    if *v == OracleVerdict::CycleNice {
        EXIT_OK
    } else {
        EXIT_NOT_NICE
    }
}

fn structural(g: &Multigraph, cap: usize) -> Result<Verdict> {
    let opts = Options {
        cap,
        ..Options::default()
    };
    recognize_with(g, &opts).map(|(v, _)| v)
}

fn check(file: &Path, method: Method, cap: usize, json: bool, out: &mut dyn Write) -> Result<i32> {
    let Some(g) = load(file)? else {
        let v = Verdict::OutOfScope(ScopeReason::HasLoops);
        if json {
            emit(out, json!({ "structural": v }))?;
        } else {
            emit(out, verdict_text(&v))?;
        }
        return Ok(EXIT_SCOPE);
    };
    match method {
        Method::Structural => {
            let v = structural(&g, cap)?;
            if json {
                emit(out, json!({ "structural": v }))?;
            } else {
                emit(out, verdict_text(&v))?;
            }
            Ok(verdict_code(&v))
        }
        Method::Oracle => {
            let o = cycle_nice_oracle(&g, cap)?;
            if json {
                emit(out, json!({ "oracle": o }))?;
            } else {
                emit(out, oracle_text(&o))?;
            }
            Ok(oracle_code(&o))
        }
        Method::Both => {
            let v = structural(&g, cap)?;
            if let Verdict::OutOfScope(_) = v {
                if json {
                    emit(out, json!({ "structural": v }))?;
                } else {
                    emit(out, verdict_text(&v))?;
                }
                return Ok(EXIT_SCOPE);
            }
            let o = cycle_nice_oracle(&g, cap)?;
            let agree = v.is_accept() == (o == OracleVerdict::CycleNice);
            if json {
                emit(out, json!({ "structural": v, "oracle": o, "agree": agree }))?;
            } else {
                emit(out, format!("structural: {}", verdict_text(&v)))?;
                emit(out, format!("oracle: {}", oracle_text(&o)))?;
                emit(
                    out,
                    if agree {
                        "verdicts agree"
                    } else {
                        "VERDICTS DISAGREE"
                    },
                )?;
            }
            Ok(if agree {
                verdict_code(&v)
            } else {
                EXIT_INTERNAL
            })
        }
    }
}

fn props(file: &Path, dot: bool, json: bool, out: &mut dyn Write) -> Result<i32> {
    let g = load_loopless(file)?;
    let base = identify_base(&g);
    let report = json!({
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "simple": g.is_simple(),
        "connected": g.is_connected(),
        "two_connected": g.is_k_connected(2),
        "three_connected": g.is_k_connected(3),
        "claw_free": is_claw_free(&g),
        "planar": is_planar(&g),
        "perfect_matching": has_perfect_matching(&g),
        "matching_covered": is_matching_covered(&g),
        "base": base.to_string(),
    });
    if json {
        let mut report = report;
        if dot {
            report["dot"] = Value::String(to_dot(&g));
        }
        emit(out, report)?;
    } else {
        for (k, v) in report.as_object().expect("object literal") {
            match v {
                Value::String(s) => emit(out, format!("{k}: {s}"))?,
                other => emit(out, format!("{k}: {other}"))?,
            }
        }
        if dot {
            write!(out, "{}", to_dot(&g)).map_err(|e| Error::Io(e.to_string()))?;
        }
    }
    Ok(EXIT_OK)
}

fn decompose(file: &Path, path: &Path, cap: usize, json: bool, out: &mut dyn Write) -> Result<i32> {
    let v = match load(file)? {
        Some(g) => structural(&g, cap)?,
        None => Verdict::OutOfScope(ScopeReason::HasLoops),
    };
    let code = verdict_code(&v);
    let payload = match &v {
        Verdict::Accept { certificate, .. } => Some(certificate.to_json()),
        Verdict::AcceptOracle { note } => Some(pretty(&json!({ "accept_oracle": note }))),
        Verdict::Reject(RejectReason::Witness(c)) => Some(pretty(&json!({ "witness": c }))),
        Verdict::Reject(RejectReason::NotMatchable) => {
            Some(pretty(&json!({ "not_matchable": true })))
        }
        Verdict::OutOfScope(_) => None,
    };
    if let Some(p) = &payload {
        write_file(path, &format!("{p}\n"))?;
    }
    if json {
        emit(
            out,
            json!({ "verdict": v.class(), "written": payload.is_some().then(|| path.display().to_string()) }),
        )?;
    } else {
        emit(out, verdict_text(&v))?;
        if payload.is_some() {
            emit(out, format!("wrote {}", path.display()))?;
        }
    }
    Ok(code)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn ears(
    file: &Path,
    cycle: &[usize],
    budget: usize,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let g = load_loopless(file)?;
    let initial = CycleSpec::from_vertices(&g, cycle)
        .map_err(|e| Error::PreconditionFailed(format!("initial cycle: {e}")))?;
    let d = ear_decomposition(&g, &initial, budget)?;
    if json {
        emit(out, serde_json::to_string(&d).expect("ears serialize"))?;
    } else {
        emit(out, format!("initial cycle: {}", cycle_text(&d.initial)))?;
        for (i, ear) in d.ears.iter().enumerate() {
            let vs: Vec<String> = ear.vertices.iter().map(|v| v.to_string()).collect();
            emit(out, format!("ear {}: {}", i + 1, vs.join("-")))?;
        }
    }
    Ok(EXIT_OK)
}

fn generate(
    cfg: &GenConfig,
    dir: &Path,
    count: u64,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    cfg.validate()?;
    fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for i in 0..count {
        let (g, seq) = generate_instance(cfg, i)?;
        let stem = dir.join(format!("{}-{i}", cfg.seed));
        let edges = stem.with_extension("edges");
        write_file(&edges, &write_edge_list(&g))?;
        write_file(
            &stem.with_extension("cert.json"),
            &format!("{}\n", seq.to_json()),
        )?;
        if g.is_simple() {
            write_file(&stem.with_extension("g6"), &format!("{}\n", to_graph6(&g)?))?;
        }
        written.push(json!({
            "file": edges.display().to_string(),
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "base": seq.base.to_string(),
            "steps": seq.steps.len(),
        }));
    }
    if json {
        emit(out, Value::Array(written))?;
    } else {
        for w in &written {
            emit(
                out,
                format!(
                    "{} ({} vertices, {} edges, base {}, {} steps)",
                    w["file"].as_str().unwrap_or_default(),
                    w["vertices"],
                    w["edges"],
                    w["base"].as_str().unwrap_or_default(),
                    w["steps"]
                ),
            )?;
        }
    }
    Ok(EXIT_OK)
}

fn run_atlas(
    max_n: usize,
    path: Option<&Path>,
    cap: usize,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let report = atlas(max_n, cap)?;
    let text = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.to_string()
    };
    match path {
        Some(p) => {
            write_file(p, &text)?;
            emit(out, format!("wrote {}", p.display()))?;
        }
        None => write!(out, "{text}").map_err(|e| Error::Io(e.to_string()))?,
    }
    Ok(EXIT_OK)
}
