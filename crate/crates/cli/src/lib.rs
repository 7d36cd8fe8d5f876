//! Command-line front end for `bck-core`.
//!
//! Every subcommand produces a [`Report`]: a status, a plain-text body and a
//! JSON body built from the same values. The binary prints one of the two
//! bodies and exits with [`Status::code`]. Input problems surface as a
//! [`CliError`] and exit with code 2.

use std::fmt::Write as _;
use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};

use bck_core::constructions::{chain_algebra, commutative_chain, lemma2_algebra, top_extension, ConstructionError};
use bck_core::search::{census, enumerate, Filter, SearchConfig, SearchError};
use bck_core::sequences::{
    commutativity_index, commutativity_witness, find_identity_violation, pair_sequences, prolongation_depth, Depth,
};
use bck_core::table::tables_to_text;
use bck_core::{validate, BckAlgebra, CayleyTable, TableError, ValidationError};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "bck", version, about = "Workbench for finite BCK-algebras")]
pub struct Cli {
    /// Print the structured JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print nothing on success or failure; only the exit code and input
    /// errors remain.
    #[arg(long, short, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a table against the BCK axioms.
    Verify { file: PathBuf },
    /// Print the two BCK-sequences of a pair.
    Seq { file: PathBuf, x: usize, y: usize },
    /// Report how far the interleaved chains of a pair descend.
    Depth { file: PathBuf, x: usize, y: usize },
    /// Report the commutativity index of an algebra.
    Index { file: PathBuf },
    /// Check the identity x_n = y_n for every pair.
    Identity { file: PathBuf, n: usize },
    /// Build a member of a parametric family.
    #[command(subcommand)]
    Construct(Construct),
    /// Enumerate all algebras of a given order.
    Search {
        order: usize,
        /// Comma-joined conjunction of: all, nonprolongable, index=K,
        /// index<=K, identity-fails=N.
        #[arg(long, default_value = "all")]
        filter: Filter,
        /// Keep one canonical representative per isomorphism class.
        #[arg(long)]
        up_to_iso: bool,
        /// Stop after this many results.
        #[arg(long)]
        limit: Option<usize>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit orders above the default ceiling.
        #[arg(long)]
        allow_large: bool,
    },
    /// Emit the Hasse diagram of the order as a DOT digraph.
    Hasse { file: PathBuf },
    /// Count algebras of every order up to N.
    Census {
        max_order: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// The linear algebra on 0..N.
    Chain { n: usize },
    /// The N-chain with a second top element N added beside N-1.
    Lemma2 { n: usize },
    /// The chain 0..N under truncated subtraction.
    Commutative { n: usize },
    /// Adds a new greatest element to the algebra in FILE.
    Extend { file: PathBuf },
}

/// Input problems. All of them exit with code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Table {
        path: PathBuf,
        #[source]
        source: TableError,
    },
    #[error("{}: not a BCK-algebra: {first}", path.display())]
    NotBck { path: PathBuf, first: String },
    #[error("argument {name}: element {value} is out of range for order {order}")]
    Element { name: &'static str, value: usize, order: usize },
    #[error("argument {name}: {message}")]
    Argument { name: &'static str, message: String },
    #[error("argument N: {0}")]
    Construction(#[from] ConstructionError),
    #[error("{0}")]
    Search(#[from] SearchError),
}

/// Whether the checked property holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Holds => 0,
            Status::Fails => 1,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub status: Status,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn new(status: Status, text: String, json: Value) -> Self {
        Report { status, text, json }
    }

    /// The body selected by `--json`, newline terminated.
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.json).expect("reports are plain JSON values");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }
}

pub fn run(command: &Command) -> Result<Report, CliError> {
    match command {
        Command::Verify { file } => verify(file),
        Command::Seq { file, x, y } => seq(file, *x, *y),
        Command::Depth { file, x, y } => depth(file, *x, *y),
        Command::Index { file } => index(file),
        Command::Identity { file, n } => identity(file, *n),
        Command::Construct(c) => construct(c),
        Command::Search {
            order,
            filter,
            up_to_iso,
            limit,
            jobs,
            allow_large,
        } => {
            let config = SearchConfig::new(*order)
                .filter(filter.clone())
                .up_to_iso(*up_to_iso)
                .limit(*limit)
                .workers(workers(*jobs)?)
                .allow_above_ceiling(*allow_large);
            search(&config).map_err(|e| match e {
                CliError::Search(SearchError::AboveCeiling { order, ceiling }) => CliError::Argument {
                    name: "N",
                    message: format!("order {order} is above the search ceiling {ceiling}; pass --allow-large"),
                },
                other => other,
            })
        }
        Command::Hasse { file } => hasse(file),
        Command::Census { max_order, jobs } => census_report(*max_order, workers(*jobs)?),
    }
}

fn workers(jobs: Option<usize>) -> Result<usize, CliError> {
    match jobs {
        Some(0) => Err(CliError::Argument {
            name: "--jobs",
            message: "must be at least 1".into(),
        }),
        Some(j) => Ok(j),
        None => Ok(std::thread::available_parallelism().map_or(1, NonZeroUsize::get)),
    }
}

fn read_table(path: &Path) -> Result<CayleyTable, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_owned(),
        source,
    })?;
    CayleyTable::from_text(&text).map_err(|source| CliError::Table {
        path: path.to_owned(),
        source,
    })
}

fn read_algebra(path: &Path) -> Result<BckAlgebra, CliError> {
    let table = read_table(path)?;
    validate(&table).map_err(|e| CliError::NotBck {
        path: path.to_owned(),
        first: match &e {
            ValidationError::Axioms(v) => v[0].to_string(),
            other => other.to_string(),
        },
    })
}

fn element(a: &BckAlgebra, name: &'static str, value: usize) -> Result<usize, CliError> {
    a.check_element(value).map_err(|e| CliError::Element {
        name,
        value,
        order: e.order,
    })
}

fn joined(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Exit 0 with the order when all axioms hold, exit 1 with every witness
/// (up to the default cap per axiom) otherwise.
pub fn verify(file: &Path) -> Result<Report, CliError> {
    let table = read_table(file)?;
    let order = table.order();
    match validate(&table) {
        Ok(_) => Ok(Report::new(
            Status::Holds,
            format!("BCK-algebra of order {order}\n"),
            json!({ "order": order, "axiom_violations": [] }),
        )),
        Err(e) => {
            let violations = e.violations();
            let mut text = format!("not a BCK-algebra: {} axiom violations\n", violations.len());
            for v in violations {
                let _ = writeln!(text, "  {v}");
            }
            Ok(Report::new(
                Status::Fails,
                text,
                json!({ "order": order, "axiom_violations": violations }),
            ))
        }
    }
}

pub fn seq(file: &Path, x: usize, y: usize) -> Result<Report, CliError> {
    let a = read_algebra(file)?;
    let x = element(&a, "X", x)?;
    let y = element(&a, "Y", y)?;
    let t = pair_sequences(&a, x, y).expect("elements checked");
    let text = format!(
        "x_terms: {}\ny_terms: {}\npreperiod: {}\nperiod: {}\n",
        joined(&t.x_terms),
        joined(&t.y_terms),
        t.preperiod,
        t.period
    );
    let json = json!({
        "order": a.order(),
        "x": x,
        "y": y,
        "x_terms": t.x_terms,
        "y_terms": t.y_terms,
        "preperiod": t.preperiod,
        "period": t.period,
    });
    Ok(Report::new(Status::Holds, text, json))
}

/// Exit 0 when both chains descend forever, exit 1 with the failing link.
pub fn depth(file: &Path, x: usize, y: usize) -> Result<Report, CliError> {
    let a = read_algebra(file)?;
    let x = element(&a, "X", x)?;
    let y = element(&a, "Y", y)?;
    let r = prolongation_depth(&a, x, y).expect("elements checked");
    let mut text = format!("depth of ({x}, {y}): {}\n", r.depth);
    if let Some(w) = &r.witness {
        let _ = writeln!(
            text,
            "witness: chain {} ({}), link {}: upper {}, lower {}, lower·upper = {}, swapped-index product = {}",
            chain_name(w.chain),
            w.chain,
            w.link,
            w.upper,
            w.lower,
            w.product,
            w.swapped_index_product
        );
    }
    let status = match r.depth {
        Depth::Unbounded => Status::Holds,
        Depth::Bounded(_) => Status::Fails,
    };
    let json = json!({
        "order": a.order(),
        "x": x,
        "y": y,
        "depth": r.depth,
        "witness": r.witness,
    });
    Ok(Report::new(status, text, json))
}

fn chain_name(c: bck_core::sequences::Chain) -> &'static str {
    match c {
        bck_core::sequences::Chain::A => "A",
        bck_core::sequences::Chain::B => "B",
    }
}

/// The index together with a comparable pair whose sequence takes that long
/// to settle.
pub fn index(file: &Path) -> Result<Report, CliError> {
    let a = read_algebra(file)?;
    let idx = commutativity_index(&a);
    let witness = commutativity_witness(&a);
    let mut text = format!("commutativity index: {idx}\n");
    if let Some(w) = &witness {
        let _ = writeln!(
            text,
            "witness: terms {} stabilize at index {}",
            joined(&w.terms),
            w.stabilization_index
        );
    }
    let json = json!({ "order": a.order(), "index": idx, "witness": witness });
    Ok(Report::new(Status::Holds, text, json))
}

/// Exit 0 when `x_n = y_n` for every pair, exit 1 with the first failing
/// pair in row-major order.
pub fn identity(file: &Path, n: usize) -> Result<Report, CliError> {
    let a = read_algebra(file)?;
    let v = find_identity_violation(&a, n);
    let (status, text) = match &v {
        None => (Status::Holds, format!("identity x_{n} = y_{n} holds\n")),
        Some(w) => (
            Status::Fails,
            format!(
                "identity x_{n} = y_{n} fails\nwitness: ({}, {}): x_{n} = {}, y_{n} = {}\n",
                w.x, w.y, w.x_n, w.y_n
            ),
        ),
    };
    let json = json!({ "order": a.order(), "n": n, "identity": v.is_none(), "witness": v });
    Ok(Report::new(status, text, json))
}

pub fn construct(c: &Construct) -> Result<Report, CliError> {
    let a = match c {
        Construct::Chain { n } => chain_algebra(*n)?,
        Construct::Lemma2 { n } => lemma2_algebra(*n)?,
        Construct::Commutative { n } => commutative_chain(*n)?,
        Construct::Extend { file } => top_extension(&read_algebra(file)?),
    };
    Ok(table_report(a.table()))
}

fn table_report(t: &CayleyTable) -> Report {
    Report::new(
        Status::Holds,
        t.to_text(),
        json!({ "order": t.order(), "table": t }),
    )
}

/// Writes the matching tables as `#`-separated records followed by a
/// comment line with the count and search statistics, so the text output
/// parses back as a table collection.
pub fn search(config: &SearchConfig) -> Result<Report, CliError> {
    let out = enumerate(config)?;
    let count = out.algebras.len();
    let mut text = tables_to_text(&out.algebras);
    let _ = writeln!(text, "# {count} algebras of order {}; {}", config.order, out.stats.summary());
    let json = json!({
        "order": config.order,
        "count": count,
        "algebras": out.algebras,
        "stats": out.stats,
    });
    Ok(Report::new(Status::Holds, text, json))
}

pub fn census_report(max_order: usize, workers: usize) -> Result<Report, CliError> {
    if max_order == 0 {
        return Err(SearchError::ZeroOrder.into());
    }
    let rows = census(max_order, workers)?;
    let mut text = String::from("order labeled up_to_iso\n");
    for r in &rows {
        let _ = writeln!(text, "{} {} {}", r.order, r.labeled, r.up_to_iso);
    }
    Ok(Report::new(Status::Holds, text, json!(rows)))
}

/// DOT source for the Hasse diagram. Edges run from each element to the
/// elements covering it, in row-major order, and `rankdir=BT` draws them
/// upward.
pub fn emit_hasse(a: &BckAlgebra) -> String {
    let mut out = String::from("digraph bck {\n  rankdir=BT;\n");
    for x in 0..a.order() {
        let _ = writeln!(out, "  {x};");
    }
    for (lo, hi) in a.hasse_covers() {
        let _ = writeln!(out, "  {lo} -> {hi};");
    }
    out.push_str("}\n");
    out
}

pub fn hasse(file: &Path) -> Result<Report, CliError> {
    let a = read_algebra(file)?;
    let json = json!({ "order": a.order(), "edges": a.hasse_covers() });
    Ok(Report::new(Status::Holds, emit_hasse(&a), json))
}
