//! Command-line surface of the `sepham` binary.
//!
//! Exit codes: 0 on success, 1 on usage or configuration errors, 2 when a
//! verified family (or bound check) turns out to be invalid.

pub mod file;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{check_inequalities, eval_bounds, BoundsRecord};
use crate::constructions::{
    bipartite_crossing_family, is_hamilton_decomposition, kernel_cycle_family, two_diff_family,
    walecki_decomposition, Mode,
};
use crate::error::Error;
use crate::family::{Family, Kind, Meta};
use crate::greedy::{greedy_family, GreedyConfig, Order};
use crate::limits::Limits;
use crate::objects::{Permutation, Vertex};
use crate::oracle::{oracle_quantity, Quantity};
use crate::relations::Separation;
use crate::structure::{analyze_against, check_lemmas, FollowerCheck};
use crate::universe::Universe;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "sepham",
    version,
    about = "Construct, verify and exactly optimize families of locally separated Hamilton paths"
)]
struct Cli {
    /// Upper bound on worker threads for parallel stages.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    BipartiteCrossing,
    TwoDiff,
    KernelCycles,
    Walecki,
    Greedy,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Greedy,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OrderArg {
    Lex,
    Shuffle,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Md,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family and write it as a family file.
    Construct {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// Seed for shuffled greedy orders.
        #[arg(long)]
        seed: Option<u64>,
        /// Fixed edge for kernel-cycles, as `u,v`.
        #[arg(long, default_value = "1,2")]
        edge: String,
        /// Relation for `--which greedy`.
        #[arg(long)]
        relation: Option<String>,
        /// Universe for `--which greedy`.
        #[arg(long)]
        universe: Option<String>,
        #[arg(long, value_enum, default_value = "lex")]
        order: OrderArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every pair of a family file. `--relation decomposition` checks
    /// an edge partition into Hamilton cycles instead.
    Verify {
        #[arg(long)]
        relation: String,
        #[arg(long)]
        family: PathBuf,
    },
    /// Follower property, runs of big jumps and free positions of a
    /// permutation, relative to the identity or to `--base`.
    Analyze {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        base: Option<String>,
    },
    /// Exact maximum family size by clique search.
    Oracle {
        #[arg(long)]
        quantity: String,
        #[arg(long)]
        n: usize,
        /// Seconds before returning the best family found so far.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form bounds, optionally with the inequality checks.
    Bounds {
        #[arg(long, conflicts_with = "n_range")]
        n: Option<usize>,
        #[arg(long)]
        n_range: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also run the inequality checks; exit 2 if any fails.
        #[arg(long)]
        check: bool,
    },
    /// Markdown tables comparing constructions, greedy, exact values and
    /// bounds over a range of n.
    Report {
        #[arg(long)]
        n_range: String,
        /// Per-cell time limit for the exact oracle, in seconds.
        #[arg(long, default_value_t = 10.0)]
        time_limit: f64,
        /// Largest universe walked by the greedy column.
        #[arg(long, default_value_t = 362_880)]
        max_universe: u128,
    },
}

/// Failure of a subcommand.
enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                EXIT_OK
            } else {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.threads {
        pool = pool.num_threads(k);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    // Output is buffered so the parallel stages never touch the caller's
    // (non-Send) streams.
    let (buf, result) = pool.install(|| {
        let mut buf = Vec::new();
        let r = dispatch(cli.command, &mut buf);
        (buf, r)
    });
    let _ = out.write_all(&buf);
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(out, "{msg}");
            EXIT_INVALID
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> CmdResult {
    let limits = Limits::default();
    match cmd {
        Command::Construct {
            which,
            n,
            mode,
            seed,
            edge,
            relation,
            universe,
            order,
            out: path,
        } => {
            let family = construct(
                which, n, mode, seed, &edge, relation, universe, order, &limits,
            )?;
            emit_family(&family, path, out)
        }
        Command::Verify { relation, family } => verify(&relation, &family, out),
        Command::Analyze { perm, base } => analyze(&perm, base.as_deref(), out),
        Command::Oracle {
            quantity,
            n,
            time_limit,
            out: path,
        } => {
            let q: Quantity = quantity.parse()?;
            let r = oracle_quantity(q, n, seconds(time_limit)?, &limits)?;
            writeln!(out, "{r}")?;
            if let Some(path) = path {
                fs::write(&path, file::serialize(&r.witness))?;
                writeln!(out, "witness written to {}", path.display())?;
            }
            Ok(())
        }
        Command::Bounds {
            n,
            n_range,
            format,
            check,
        } => bounds(n, n_range.as_deref(), format, check, out),
        Command::Report {
            n_range,
            time_limit,
            max_universe,
        } => {
            let range = parse_range(&n_range)?;
            let limits = Limits {
                greedy_universe_cap: max_universe,
                ..limits
            };
            let text = report::markdown(range, seconds(Some(time_limit))?, &limits);
            write!(out, "{text}")?;
            Ok(())
        }
    }
}

fn seconds(s: Option<f64>) -> Result<Option<Duration>, Failure> {
    match s {
        None => Ok(None),
        Some(x) if x.is_finite() && x >= 0.0 => Ok(Some(Duration::from_secs_f64(x))),
        Some(x) => Err(Failure::Usage(format!("bad time limit {x}"))),
    }
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, Failure> {
    let bad = || Failure::Usage(format!("bad range `{s}`, expected A:B"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

fn parse_seq(s: &str) -> Result<Vec<Vertex>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Vertex>()
                .map_err(|_| Failure::Usage(format!("bad vertex `{t}`")))
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn construct(
    which: Which,
    n: usize,
    mode: ModeArg,
    seed: Option<u64>,
    edge: &str,
    relation: Option<String>,
    universe: Option<String>,
    order: OrderArg,
    limits: &Limits,
) -> Result<Family, Failure> {
    let greedy_order = |order: OrderArg| -> Result<Order, Failure> {
        match (order, seed) {
            (OrderArg::Lex, _) => Ok(Order::Lexicographic),
            (OrderArg::Shuffle, Some(s)) => Ok(Order::SeededShuffle(s)),
            (OrderArg::Shuffle, None) => {
                Err(Failure::Usage("--order shuffle requires --seed".into()))
            }
        }
    };
    let mode = match mode {
        ModeArg::Exact => Mode::Exact,
        ModeArg::Greedy => Mode::Greedy(match seed {
            Some(s) => Order::SeededShuffle(s),
            None => greedy_order(order)?,
        }),
    };
    Ok(match which {
        Which::BipartiteCrossing => bipartite_crossing_family(n, mode, limits)?.family,
        Which::TwoDiff => two_diff_family(n, mode, limits)?,
        Which::KernelCycles => {
            let e = parse_seq(edge)?;
            if e.len() != 2 {
                return Err(Failure::Usage(format!("bad edge `{edge}`, expected u,v")));
            }
            kernel_cycle_family(n, e[0] as usize, e[1] as usize, limits)?
        }
        Which::Walecki => {
            let cycles = walecki_decomposition(n)?;
            Family::new(
                n,
                Kind::Cycles,
                cycles.into_iter().map(|c| c.into_vec()).collect(),
                Meta::new("walecki", None),
            )?
        }
        Which::Greedy => {
            let relation: Separation = relation
                .ok_or_else(|| Failure::Usage("--which greedy requires --relation".into()))?
                .parse()?;
            let universe: Universe = match universe {
                Some(u) => u.parse()?,
                None => match relation.kind() {
                    Kind::Paths => Universe::Paths,
                    Kind::Cycles => Universe::Cycles,
                    Kind::Permutations => Universe::Permutations,
                },
            };
            greedy_family(
                &GreedyConfig {
                    order: greedy_order(order)?,
                    relation,
                    universe,
                    n,
                },
                limits,
            )?
        }
    })
}

fn emit_family(f: &Family, path: Option<PathBuf>, out: &mut dyn Write) -> CmdResult {
    let text = file::serialize(f);
    match path {
        Some(p) => {
            fs::write(&p, text)?;
            writeln!(
                out,
                "wrote {} {} (n={}, {}) to {}",
                f.len(),
                f.kind(),
                f.n(),
                f.meta.construction,
                p.display()
            )?;
        }
        None => write!(out, "{text}")?,
    }
    Ok(())
}

fn verify(relation: &str, path: &PathBuf, out: &mut dyn Write) -> CmdResult {
    let text = fs::read_to_string(path)?;
    let family = file::parse(&text)?;
    if relation == "decomposition" {
        if family.kind() != Kind::Cycles {
            return Err(Failure::Usage(
                "a decomposition must be a cycles family".into(),
            ));
        }
        return if is_hamilton_decomposition(family.n(), &family.cycles()) {
            writeln!(
                out,
                "OK: {} cycles partition the {} edges of K_{}",
                family.len(),
                family.n() * (family.n() - 1) / 2,
                family.n()
            )?;
            Ok(())
        } else {
            Err(Failure::Invalid(format!(
                "FAIL: the {} cycles do not partition the edges of K_{}",
                family.len(),
                family.n()
            )))
        };
    }
    let relation: Separation = relation.parse()?;
    let v = family.verify(relation)?;
    match v.failure {
        None => {
            writeln!(out, "OK: {} members, {} pairs verified", v.members, v.pairs)?;
            Ok(())
        }
        Some(fail) => {
            let fmt = |m: &[Vertex]| {
                m.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let (a, b) = (&family.members()[fail.i], &family.members()[fail.j]);
            let why = match fail.witness {
                None => format!("no {relation} witness"),
                Some(w) => format!("{w} did not re-verify"),
            };
            Err(Failure::Invalid(format!(
                "FAIL: members {} and {} ({} | {}): {}",
                fail.i + 1,
                fail.j + 1,
                fmt(a),
                fmt(b),
                why
            )))
        }
    }
}

fn analyze(perm: &str, base: Option<&str>, out: &mut dyn Write) -> CmdResult {
    let p = Permutation::new(parse_seq(perm)?)?;
    let base = match base {
        Some(b) => Permutation::new(parse_seq(b)?)?,
        None => Permutation::identity(p.n())?,
    };
    let (q, check, rs) = analyze_against(&base, &p)?;
    if base != Permutation::identity(p.n())? {
        writeln!(out, "relabeled against base {base}: {q}")?;
    }
    writeln!(out, "permutation: {q}")?;
    match check {
        FollowerCheck::Holds => writeln!(
            out,
            "follower property: holds (not two-separated from the base)"
        )?,
        FollowerCheck::FailsAt(j) => writeln!(
            out,
            "follower property: fails at position {j} (two-separated from the base)"
        )?,
    }
    let runs: Vec<String> = rs
        .runs
        .iter()
        .map(|r| format!("{}..{}", r.head, r.last()))
        .collect();
    writeln!(
        out,
        "runs of big jumps: {}",
        if runs.is_empty() {
            "none".into()
        } else {
            runs.join(", ")
        }
    )?;
    let list = |s: &std::collections::BTreeSet<usize>| {
        s.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "free positions: {}", list(&rs.free))?;
    writeln!(out, "constrained positions: {}", list(&rs.constrained))?;
    if check.holds() {
        let v = check_lemmas(&q);
        if v.is_empty() {
            writeln!(out, "structural lemmas: all hold")?;
        } else {
            return Err(Failure::Invalid(format!(
                "structural lemma violated: {v:?}"
            )));
        }
    }
    Ok(())
}

fn bounds(
    n: Option<usize>,
    range: Option<&str>,
    format: Format,
    check: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let range = match (n, range) {
        (Some(n), None) => n..=n,
        (None, Some(r)) => parse_range(r)?,
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --n or --n-range".into(),
            ))
        }
    };
    let records = range
        .clone()
        .map(eval_bounds)
        .collect::<Result<Vec<BoundsRecord>, Error>>()?;
    match format {
        Format::Text => {
            for r in &records {
                writeln!(out, "{r}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "{}", BoundsRecord::CSV_HEADER)?;
            for r in &records {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        Format::Md => {
            let header: Vec<&str> = BoundsRecord::CSV_HEADER.split(',').collect();
            writeln!(out, "| {} |", header.join(" | "))?;
            writeln!(out, "|{}", "---|".repeat(header.len()))?;
            for r in &records {
                writeln!(
                    out,
                    "| {} |",
                    r.csv_row().split(',').collect::<Vec<_>>().join(" | ")
                )?;
            }
        }
    }
    if check {
        let report = check_inequalities(range)?;
        for c in report.checks.iter().filter(|c| !c.holds) {
            let tag = if c.decisive { "FAIL" } else { "note" };
            writeln!(out, "{tag}: n={} {}: {} vs {}", c.n, c.name, c.lhs, c.rhs)?;
        }
        let failures = report.failures().count();
        if failures > 0 {
            return Err(Failure::Invalid(format!(
                "{failures} inequality check(s) failed"
            )));
        }
        writeln!(
            out,
            "OK: {} checks passed",
            report.checks.iter().filter(|c| c.decisive).count()
        )?;
    }
    Ok(())
}
