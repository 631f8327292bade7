//! Command-line front end.
//!
//! Exit codes: 0 = exists/valid/found, 1 = proven nonexistent or invalid,
//! 2 = input error, 3 = oracle budget capped.
//!
//! Machine-readable JSON goes to stdout, a one-line human summary to stderr.
//! Output is byte-deterministic for identical inputs: all maps are ordered
//! and variant orders are fixed.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::graph::{normalize_path_pair, GraphPair, PathPair};
use crate::oracle::{brute_force_svr, SearchBudget, SearchOutcome};
use crate::paths::{algorithm_a, decide_lsvr};
use crate::sat::{
    as_nae, build_rsvr_drawing, build_rsvr_instance, build_ussvr_drawing, build_ussvr_instance,
    decode_rsvr_assignment, decode_ussvr_assignment, parse_dimacs, Assignment, GadgetIndex,
    ReductionKind, SatError,
};
use crate::shape::{Drawing, Family};
use crate::svg::{render_svg, RenderConfig};
use crate::visibility::validate_svr;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPPED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "svr",
    about = "Simultaneous visibility representations of graph pairs",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "usq")]
    Usq,
    #[value(name = "rect")]
    Rect,
    #[value(name = "lshape")]
    Lshape,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Usq => Family::UnitSquare,
            FamilyArg::Rect => Family::Rect,
            FamilyArg::Lshape => Family::LShape,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    #[value(name = "nae-ussvr")]
    NaeUssvr,
    #[value(name = "3sat-rsvr")]
    Cnf3Rsvr,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the path pair has an L-shape SVR; print the drawing
    /// or the per-variant condition violations.
    #[command(name = "decide-lsvr")]
    DecideLsvr {
        /// File with two whitespace-separated vertex sequences: P_v on the
        /// first line, P_H on the second.
        #[arg(long)]
        paths: PathBuf,
        /// Also write the drawing as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run Algorithm A for unit squares or rectangles and validate.
    #[command(name = "algorithm-a")]
    AlgorithmA {
        #[arg(long)]
        paths: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Build a hardness instance from a DIMACS CNF file; with --assign also
    /// the explicit drawing encoding that assignment.
    Reduce {
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        cnf: PathBuf,
        /// Assignment bits, variable 1 first ('1' = true).
        #[arg(long)]
        assign: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Validate a drawing (JSON) against a graph pair (JSON).
    Verify {
        #[arg(long)]
        drawing: PathBuf,
        #[arg(long)]
        pair: PathBuf,
    },
    /// Read a satisfying assignment off a valid reduction drawing.
    Decode {
        #[arg(long)]
        drawing: PathBuf,
        #[arg(long)]
        index: PathBuf,
    },
    /// Exhaustive search for an SVR of a graph pair on the canonical lattice.
    Oracle {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Time limit in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

fn read_paths(path: &Path) -> Result<PathPair, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let lines: Vec<Vec<String>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect();
    if lines.len() != 2 {
        return Err(format!(
            "{}: expected two vertex sequences, found {}",
            path.display(),
            lines.len()
        ));
    }
    normalize_path_pair(&lines[0], &lines[1]).map_err(|e| e.to_string())
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(value: &serde_json::Value) {
    println!("{value}");
}

fn write_svg(path: &Path, d: &Drawing) -> Result<(), String> {
    let svg = render_svg(d, &RenderConfig::default(), true).map_err(|e| e.to_string())?;
    fs::write(path, svg).map_err(|e| format!("{}: {e}", path.display()))
}

fn cmd_decide_lsvr(paths: &Path, svg: Option<&Path>) -> Result<i32, String> {
    let p = read_paths(paths)?;
    let out = decide_lsvr(&p);
    if let (Some(svg), Some(d)) = (svg, out.drawing.as_ref()) {
        write_svg(svg, d)?;
    }
    emit(&serde_json::to_value(&out).map_err(|e| e.to_string())?);
    if out.exists {
        eprintln!("LSVR exists ({} drawing)", out.orientation);
        Ok(EXIT_OK)
    } else {
        eprintln!("no LSVR: condition fails for all four drawings");
        Ok(EXIT_NEGATIVE)
    }
}

fn cmd_algorithm_a(paths: &Path, family: Family, svg: Option<&Path>) -> Result<i32, String> {
    let p = read_paths(paths)?;
    let shared = p.shared_edges();
    if !shared.is_empty() {
        emit(&json!({ "exists": false, "shared_edges": shared }));
        eprintln!("paths share {} edge(s); no drawing exists", shared.len());
        return Ok(EXIT_NEGATIVE);
    }
    let d = algorithm_a(&p, family);
    let report = validate_svr(&d, &p.to_graph_pair()).map_err(|e| e.to_string())?;
    if let Some(svg) = svg {
        write_svg(svg, &d)?;
    }
    emit(&json!({ "exists": true, "drawing": d, "report": report }));
    eprintln!(
        "drawing built; validation {}",
        if report.valid { "passed" } else { "FAILED" }
    );
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_reduce(
    mode: ModeArg,
    cnf: &Path,
    assign: Option<&str>,
    svg: Option<&Path>,
) -> Result<i32, String> {
    let text = fs::read_to_string(cnf).map_err(|e| format!("{}: {e}", cnf.display()))?;
    let formula = parse_dimacs(&text).map_err(|e| e.to_string())?;
    let (pair, idx, drawing): (GraphPair, GadgetIndex, Option<Drawing>) = match mode {
        ModeArg::NaeUssvr => {
            let f = as_nae(&formula).map_err(|e| e.to_string())?;
            let (pair, idx) = build_ussvr_instance(&f);
            let d = assign
                .map(|bits| {
                    let alpha = Assignment::from_bits(bits).map_err(|e| e.to_string())?;
                    build_ussvr_drawing(&f, &alpha).map_err(|e| e.to_string())
                })
                .transpose()?;
            (pair, idx, d)
        }
        ModeArg::Cnf3Rsvr => {
            let (pair, idx) = build_rsvr_instance(&formula);
            let d = assign
                .map(|bits| {
                    let alpha = Assignment::from_bits(bits).map_err(|e| e.to_string())?;
                    build_rsvr_drawing(&formula, &alpha).map_err(|e| e.to_string())
                })
                .transpose()?;
            (pair, idx, d)
        }
    };
    let mut value = json!({ "pair": pair, "index": idx });
    let mut code = EXIT_OK;
    if let Some(d) = &drawing {
        let report = validate_svr(d, &pair).map_err(|e| e.to_string())?;
        if !report.valid {
            code = EXIT_NEGATIVE;
        }
        if let Some(svg) = svg {
            write_svg(svg, d)?;
        }
        value["drawing"] = serde_json::to_value(d).map_err(|e| e.to_string())?;
        value["report"] = serde_json::to_value(&report).map_err(|e| e.to_string())?;
    }
    emit(&value);
    eprintln!(
        "instance with {} vertices{}",
        pair.n,
        if drawing.is_some() {
            "; drawing attached"
        } else {
            ""
        }
    );
    Ok(code)
}

fn cmd_verify(drawing: &Path, pair: &Path) -> Result<i32, String> {
    let d: Drawing = read_json(drawing)?;
    d.validate_shapes().map_err(|e| e.to_string())?;
    let g: GraphPair = read_json(pair)?;
    let report = validate_svr(&d, &g).map_err(|e| e.to_string())?;
    emit(&serde_json::to_value(&report).map_err(|e| e.to_string())?);
    eprintln!(
        "validation {}",
        if report.valid { "passed" } else { "failed" }
    );
    Ok(if report.valid { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_decode(drawing: &Path, index: &Path) -> Result<i32, String> {
    let d: Drawing = read_json(drawing)?;
    let idx: GadgetIndex = read_json(index)?;
    let decoded = match idx.kind {
        ReductionKind::NaeUssvr => decode_ussvr_assignment(&d, &idx),
        ReductionKind::Cnf3Rsvr => decode_rsvr_assignment(&d, &idx),
    };
    match decoded {
        Ok(alpha) => {
            emit(&json!({ "assignment": alpha.to_string(), "values": alpha.values }));
            eprintln!("decoded assignment {alpha}");
            Ok(EXIT_OK)
        }
        Err(
            e @ (SatError::InvalidDrawing(_)
            | SatError::GadgetNotOrdered(_)
            | SatError::DecodedUnsatisfiable(_)),
        ) => {
            emit(&json!({ "error": e.to_string() }));
            eprintln!("decode failed: {e}");
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_oracle(
    pair: &Path,
    family: Family,
    max_nodes: Option<u64>,
    time_limit: Option<u64>,
    svg: Option<&Path>,
) -> Result<i32, String> {
    let g: GraphPair = read_json(pair)?;
    let mut budget = SearchBudget::default();
    if let Some(n) = max_nodes {
        budget.max_nodes = n;
    }
    if let Some(s) = time_limit {
        budget.time_limit = Duration::from_secs(s);
    }
    let res = brute_force_svr(&g, family, budget).map_err(|e| e.to_string())?;
    let mut value = json!({
        "outcome": res.outcome.label(),
        "nodes": res.nodes,
        "seconds": res.seconds,
    });
    let code = match &res.outcome {
        SearchOutcome::Found(d) => {
            if let Some(svg) = svg {
                write_svg(svg, d)?;
            }
            value["drawing"] = serde_json::to_value(d).map_err(|e| e.to_string())?;
            EXIT_OK
        }
        SearchOutcome::Exhausted => EXIT_NEGATIVE,
        SearchOutcome::Capped => EXIT_CAPPED,
    };
    emit(&value);
    eprintln!(
        "oracle: {} after {} nodes in {:.2}s",
        res.outcome.label(),
        res.nodes,
        res.seconds
    );
    Ok(code)
}

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::DecideLsvr { paths, svg } => cmd_decide_lsvr(paths, svg.as_deref()),
        Cmd::AlgorithmA { paths, family, svg } => {
            cmd_algorithm_a(paths, (*family).into(), svg.as_deref())
        }
        Cmd::Reduce {
            mode,
            cnf,
            assign,
            svg,
        } => cmd_reduce(*mode, cnf, assign.as_deref(), svg.as_deref()),
        Cmd::Verify { drawing, pair } => cmd_verify(drawing, pair),
        Cmd::Decode { drawing, index } => cmd_decode(drawing, index),
        Cmd::Oracle {
            pair,
            family,
            max_nodes,
            time_limit,
            svg,
        } => cmd_oracle(pair, (*family).into(), *max_nodes, *time_limit, svg.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}
