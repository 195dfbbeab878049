//! Subcommand definitions and the dispatch loop.
//!
//! Exit-code contract: 0 for success (including reports that only carry
//! flagged discrepancies), 2 when a verification finds a genuine mismatch
//! or counterexample, 1 for usage and domain errors. JSON goes to stdout,
//! diagnostics to stderr.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;

use gainact::codec::{blue_decode, blue_encode, pruefer_decode, pruefer_encode, CodeWord, WordKind};
use gainact::covering::{activity_from_cardinality, cardinality_identity_holds};
use gainact::forest::{enumerate_forests, ClassMode, ForestClass, Statistic};
use gainact::gain::GainGraph;
use gainact::lbs::{conjecture_report, ConjectureVariant};
use gainact::nbc::{activity_vector, characteristic_polys, nbc_bases, nbc_sets};
use gainact::BigInt;

use crate::json::{
    apply_edge_order, poly_strings, vector_strings, CoveringJson, EdgeListJson, TreeJson,
};
use crate::targets;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Parser)]
#[command(
    name = "gainact",
    about = "Exact activity computations for gain graphs, covering systems, and rooted trees",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug)]
struct Interval {
    a: i64,
    b: i64,
}

fn parse_interval(s: &str) -> Result<Interval, String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected a:b, got '{s}'"))?;
    let a = a.trim().parse().map_err(|_| format!("bad bound '{a}'"))?;
    let b = b.trim().parse().map_err(|_| format!("bad bound '{b}'"))?;
    Ok(Interval { a, b })
}

fn parse_class(s: &str) -> Result<ClassMode, String> {
    match s {
        "unrestricted" => Ok(ClassMode::Unrestricted),
        "decreasing" => Ok(ClassMode::Decreasing),
        "increasing" => Ok(ClassMode::Increasing),
        "non-decreasing" => Ok(ClassMode::NonDecreasing),
        "non-increasing" => Ok(ClassMode::NonIncreasing),
        _ => Err(format!(
            "unknown class '{s}' (unrestricted, decreasing, increasing, non-decreasing, non-increasing)"
        )),
    }
}

fn parse_statistic(s: &str) -> Result<Statistic, String> {
    match s {
        "children-of-n" => Ok(Statistic::ChildrenOfN),
        "consecutive" => Ok(Statistic::Consecutive),
        "consecutive-smallest-child" => Ok(Statistic::ConsecutiveSmallestChild),
        _ => Err(format!(
            "unknown statistic '{s}' (children-of-n, consecutive, consecutive-smallest-child)"
        )),
    }
}

fn parse_variant(s: &str) -> Result<ConjectureVariant, String> {
    match s {
        "literal" => Ok(ConjectureVariant::Literal),
        "restricted" => Ok(ConjectureVariant::Restricted),
        _ => Err(format!("unknown variant '{s}' (literal, restricted)")),
    }
}

#[derive(Subcommand)]
enum Command {
    /// NBC report for the complete-interval gain graph on n vertices.
    Nbc {
        #[arg(long)]
        n: u32,
        /// Gain interval a:b.
        #[arg(long, value_parser = parse_interval)]
        interval: Interval,
        /// Edge order: "lex" or "file" (with --order-file).
        #[arg(long, default_value = "lex")]
        order: String,
        /// JSON edge list [[tail, head, gain], ...] fixing the order.
        #[arg(long)]
        order_file: Option<PathBuf>,
    },
    /// Counts and statistic distributions of a colored forest class.
    Trees {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        colors: u32,
        /// Class mode.
        #[arg(long, value_parser = parse_class)]
        class: ClassMode,
        /// Non-free color count (defaults to all colors non-free).
        #[arg(long)]
        k1: Option<u32>,
        /// Count all forests instead of spanning trees only.
        #[arg(long)]
        forests: bool,
        /// Distribution over spanning trees of this statistic.
        #[arg(long, value_parser = parse_statistic)]
        statistic: Option<Statistic>,
    },
    /// Word codecs for rooted labeled trees.
    Codec {
        #[command(subcommand)]
        op: CodecOp,
    },
    /// Covering-system verification from a JSON file.
    Covering {
        #[command(subcommand)]
        action: CoveringAction,
    },
    /// Distribution report for the two conjecture readings.
    Conjecture {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_variant)]
        variant: ConjectureVariant,
    },
    /// Identity verification: one target, or the whole suite.
    Verify {
        /// Target id; omit to run the suite.
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_parser = parse_interval)]
        interval: Option<Interval>,
        /// Suite size bound (suite mode only).
        #[arg(long, default_value_t = 4)]
        scale: u32,
    },
}

#[derive(Subcommand)]
enum CodecOp {
    /// Tree file -> Prüfer-style word.
    PrueferEncode {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Prüfer-style word -> tree JSON.
    PrueferDecode {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        word: String,
    },
    /// Tree file -> blue word.
    BlueEncode {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        tree: PathBuf,
    },
    /// Blue word -> tree JSON.
    BlueDecode {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum CoveringAction {
    /// Verify the system (and activity, when present) in a JSON file.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
}

/// A domain or usage failure: message to stderr, exit 1.
struct CmdError(String);

impl<E: std::fmt::Display> From<E> for CmdError {
    fn from(e: E) -> Self {
        CmdError(e.to_string())
    }
}

type CmdResult = Result<(String, i32), CmdError>;

/// Parses and runs; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((json, code)) => {
            println!("{json}");
            code
        }
        Err(CmdError(message)) => {
            eprintln!("error: {message}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Nbc {
            n,
            interval,
            order,
            order_file,
        } => cmd_nbc(n, interval, &order, order_file),
        Command::Trees {
            n,
            colors,
            class,
            k1,
            forests,
            statistic,
        } => cmd_trees(n, colors, class, k1, forests, statistic),
        Command::Codec { op } => cmd_codec(op),
        Command::Covering {
            action: CoveringAction::Verify { file },
        } => cmd_covering_verify(&file),
        Command::Conjecture { n, variant } => cmd_conjecture(n, variant),
        Command::Verify {
            target,
            n,
            interval,
            scale,
        } => cmd_verify(target, n, interval, scale),
    }
}

#[derive(Serialize)]
struct NbcReport {
    n: u32,
    interval: (i64, i64),
    order: String,
    nbc_count: String,
    basis_count: String,
    activity_vector: Vec<String>,
    alpha: Vec<String>,
    chi_full: Vec<String>,
    chi_reduced: Vec<String>,
    regions: String,
    bounded: String,
}

fn cmd_nbc(n: u32, interval: Interval, order: &str, order_file: Option<PathBuf>) -> CmdResult {
    let graph = GainGraph::complete_interval(n, interval.a, interval.b)?;
    let graph = match (order, order_file) {
        ("lex", None) => graph,
        ("file", Some(path)) => {
            let text = fs::read_to_string(&path)?;
            let order: EdgeListJson = serde_json::from_str(&text)?;
            apply_edge_order(&graph, &order)?
        }
        ("file", None) => return Err(CmdError("--order file needs --order-file".into())),
        (other, _) => return Err(CmdError(format!("unknown order '{other}' (lex, file)"))),
    };
    let sets = nbc_sets(&graph);
    let bases = nbc_bases(&graph)?;
    let vector = activity_vector(&graph)?;
    let alpha = vector.to_polynomial()?;
    let (chi_full, chi_reduced) = characteristic_polys(&graph);
    let report = NbcReport {
        n,
        interval: (interval.a, interval.b),
        order: order.to_string(),
        nbc_count: sets.len().to_string(),
        basis_count: bases.len().to_string(),
        activity_vector: vector_strings(&vector),
        alpha: poly_strings(&alpha),
        chi_full: poly_strings(&chi_full),
        chi_reduced: poly_strings(&chi_reduced),
        regions: alpha.eval(&BigInt::from(2)).to_string(),
        bounded: alpha.eval(&BigInt::from(0)).to_string(),
    };
    Ok((serde_json::to_string_pretty(&report)?, EXIT_OK))
}

#[derive(Serialize)]
struct TreesReport {
    n: u32,
    colors: u32,
    class: String,
    k1: u32,
    k2: u32,
    forests: bool,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    statistic: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    distribution: Option<Vec<String>>,
}

fn cmd_trees(
    n: u32,
    colors: u32,
    mode: ClassMode,
    k1: Option<u32>,
    forests: bool,
    statistic: Option<Statistic>,
) -> CmdResult {
    let k1 = k1.unwrap_or(colors);
    if k1 > colors {
        return Err(CmdError(format!("--k1 {k1} exceeds --colors {colors}")));
    }
    if forests && statistic.is_some() {
        return Err(CmdError(
            "statistic distributions range over spanning trees; drop --forests".into(),
        ));
    }
    let class = ForestClass::new(mode, k1, colors - k1);
    let members = enumerate_forests(n, colors, &class, !forests)?;
    let distribution = match statistic {
        None => None,
        Some(stat) => {
            let v = gainact::forest::tree_statistic_vector(n, colors, &class, stat)?;
            Some(vector_strings(&v))
        }
    };
    let report = TreesReport {
        n,
        colors,
        class: mode.to_string(),
        k1,
        k2: colors - k1,
        forests,
        count: members.len().to_string(),
        statistic: statistic.map(|s| s.to_string()),
        distribution,
    };
    Ok((serde_json::to_string_pretty(&report)?, EXIT_OK))
}

#[derive(Serialize)]
struct WordReport {
    n: u32,
    kind: String,
    word: String,
}

fn cmd_codec(op: CodecOp) -> CmdResult {
    let load_tree = |n: u32, path: &PathBuf| -> Result<gainact::ColoredForest, CmdError> {
        let text = fs::read_to_string(path)?;
        let json: TreeJson = serde_json::from_str(&text)?;
        if json.n != n {
            return Err(CmdError(format!(
                "--n {n} does not match the tree file's n = {}",
                json.n
            )));
        }
        Ok(json.to_forest()?)
    };
    match op {
        CodecOp::PrueferEncode { n, tree } => {
            let word = pruefer_encode(&load_tree(n, &tree)?)?;
            let report = WordReport {
                n,
                kind: "pruefer".into(),
                word: word.to_string(),
            };
            Ok((serde_json::to_string_pretty(&report)?, EXIT_OK))
        }
        CodecOp::BlueEncode { n, tree } => {
            let word = blue_encode(&load_tree(n, &tree)?)?;
            let report = WordReport {
                n,
                kind: "blue".into(),
                word: word.to_string(),
            };
            Ok((serde_json::to_string_pretty(&report)?, EXIT_OK))
        }
        CodecOp::PrueferDecode { n, word } => {
            let word = CodeWord::parse(WordKind::Pruefer { n }, &word)?;
            let tree = pruefer_decode(&word)?;
            Ok((
                serde_json::to_string_pretty(&TreeJson::from_forest(&tree))?,
                EXIT_OK,
            ))
        }
        CodecOp::BlueDecode { n, word } => {
            let word = CodeWord::parse(WordKind::Blue { n }, &word)?;
            let tree = blue_decode(&word)?;
            Ok((
                serde_json::to_string_pretty(&TreeJson::from_forest(&tree))?,
                EXIT_OK,
            ))
        }
    }
}

#[derive(Serialize)]
struct CoveringReport {
    rank: usize,
    ground_size: usize,
    family_size: usize,
    basis_count: usize,
    covering: String,
    cardinality_vector: Vec<String>,
    reconstructed_feasible: bool,
    reconstructed_vector: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    activity: Option<ActivitySection>,
}

#[derive(Serialize)]
struct ActivitySection {
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    activity_vector: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alpha: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cardinality_identity: Option<bool>,
}

fn cmd_covering_verify(file: &PathBuf) -> CmdResult {
    use gainact::covering::{ActivityVerdict, CoveringVerdict};

    let text = fs::read_to_string(file)?;
    let json: CoveringJson = serde_json::from_str(&text)?;
    let (sys, act) = json.to_system()?;

    let covering_verdict = sys.verify();
    let covering = match &covering_verdict {
        CoveringVerdict::Ok => "ok".to_string(),
        CoveringVerdict::Oversized(m) => format!("oversized member {m}"),
        CoveringVerdict::NotCovered(m) => format!("member {m} has no covering basis"),
    };
    let c = sys.cardinality_vector();
    let from_c = activity_from_cardinality(&c, sys.rank())?;

    let mut failed = !covering_verdict.is_ok();
    let activity = match &act {
        None => None,
        Some(assignment) => {
            let verdict = sys.verify_activity(assignment)?;
            let section = match &verdict {
                ActivityVerdict::Ok => {
                    let vector = sys.activity_vector(assignment)?;
                    let alpha = vector.to_polynomial()?;
                    let identity = cardinality_identity_holds(&sys, assignment)?;
                    failed |= !identity;
                    ActivitySection {
                        verdict: "ok".into(),
                        activity_vector: Some(vector_strings(&vector)),
                        alpha: Some(poly_strings(&alpha)),
                        cardinality_identity: Some(identity),
                    }
                }
                other => {
                    failed = true;
                    let text = match other {
                        ActivityVerdict::BadInterval { basis, member } => {
                            format!("interval of basis {basis} leaves the family at {member}")
                        }
                        ActivityVerdict::Uncovered(m) => format!("member {m} is uncovered"),
                        ActivityVerdict::DoublyCovered(m) => {
                            format!("member {m} is covered twice")
                        }
                        ActivityVerdict::Ok => unreachable!(),
                    };
                    ActivitySection {
                        verdict: text,
                        activity_vector: None,
                        alpha: None,
                        cardinality_identity: None,
                    }
                }
            };
            Some(section)
        }
    };

    let report = CoveringReport {
        rank: sys.rank(),
        ground_size: sys.ground().len(),
        family_size: sys.family_len(),
        basis_count: sys.basis_count(),
        covering,
        cardinality_vector: vector_strings(&c),
        reconstructed_feasible: from_c.is_feasible(),
        reconstructed_vector: vector_strings(from_c.vector()),
        activity,
    };
    let code = if failed { EXIT_MISMATCH } else { EXIT_OK };
    Ok((serde_json::to_string_pretty(&report)?, code))
}

#[derive(Serialize)]
struct ConjectureJson {
    n: u32,
    variant: String,
    dist_consecutive: Vec<String>,
    dist_top: Vec<String>,
    equal: bool,
}

fn cmd_conjecture(n: u32, variant: ConjectureVariant) -> CmdResult {
    if n < 1 {
        return Err(CmdError("conjecture needs n >= 1".into()));
    }
    let report = conjecture_report(n, variant)?;
    let json = ConjectureJson {
        n,
        variant: variant.to_string(),
        dist_consecutive: vector_strings(&report.dist_consecutive),
        dist_top: vector_strings(&report.dist_top),
        equal: report.equal,
    };
    Ok((serde_json::to_string_pretty(&json)?, EXIT_OK))
}

fn cmd_verify(
    target: Option<String>,
    n: Option<u32>,
    interval: Option<Interval>,
    scale: u32,
) -> CmdResult {
    let interval = interval.map(|iv| (iv.a, iv.b));
    match target {
        Some(target) => {
            let report = targets::run_target(&target, n, interval)?;
            let code = if report.passed() { EXIT_OK } else { EXIT_MISMATCH };
            Ok((serde_json::to_string_pretty(&report)?, code))
        }
        None => {
            let summary = targets::suite(scale)?;
            let code = if summary.failed == 0 { EXIT_OK } else { EXIT_MISMATCH };
            Ok((serde_json::to_string_pretty(&summary)?, code))
        }
    }
}
