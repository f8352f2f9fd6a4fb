//! Command dispatch for the `gsg` binary. Everything here is written
//! against `Write` sinks and returns an exit code instead of exiting, so
//! the whole surface is testable in-process:
//!
//! * exit 0 — success (valid / holds / consistent / results printed)
//! * exit 1 — the checked property fails or the conditions disagree
//! * exit 2 — usage, parse, or input-validity errors
//! * exit 3 — an enumeration budget or subset cap was exceeded

pub mod doc;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use gsg_core::search::{
    enumerate_orders, enumerate_tables_with_budget, run_search, EnumerationBudget, OrderMode,
    Predicate, SearchQuery,
};
use gsg_core::structure::OrderedGammaStructure;
use gsg_core::theorem::{self, ConditionId};
use gsg_core::nrel;

use doc::StructureDocument;

#[derive(Parser)]
#[command(
    name = "gsg",
    version,
    about = "Validate, analyze, enumerate, and search finite ordered gamma-semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderModeArg {
    /// Every compatible partial order.
    All,
    /// Only the discrete (equality) order.
    EqualityOnly,
}

impl From<OrderModeArg> for OrderMode {
    fn from(mode: OrderModeArg) -> Self {
        match mode {
            OrderModeArg::All => OrderMode::All,
            OrderModeArg::EqualityOnly => OrderMode::EqualityOnly,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure file for associativity, order, and compatibility violations
    Validate { file: String },
    /// Evaluate equivalence conditions and report failures and witnesses
    Check {
        file: String,
        /// `all` or one of C1..C8, K2, K3
        #[arg(long, default_value = "all")]
        condition: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Report the five regularity properties and the strong witness table
    Classify {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List the filter-equivalence classes with each least filter
    Nclasses {
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print every structure of the given size, in enumeration order
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Expand each structure under every compatible partial order
        #[arg(long)]
        orders: bool,
        /// Print only the number of results
        #[arg(long)]
        count_only: bool,
        /// Raise or lower the table-cell budget (default 18 cells)
        #[arg(long)]
        max_cells: Option<usize>,
    },
    /// Hunt for structures that satisfy some predicates and refute others
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated predicates that must hold
        #[arg(long, value_delimiter = ',')]
        sat: Vec<String>,
        /// Comma-separated predicates that must fail
        #[arg(long, value_delimiter = ',')]
        unsat: Vec<String>,
        /// Stop after this many confirmed hits
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long, value_enum, default_value_t = OrderModeArg::All)]
        order_mode: OrderModeArg,
        /// Raise or lower the table-cell budget (default 18 cells)
        #[arg(long)]
        max_cells: Option<usize>,
    },
}

/// A command failure: what to print on stderr and which code to exit with.
struct CmdError {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> CmdError {
    CmdError {
        code: 2,
        message: message.into(),
    }
}

fn require_positive_size(n: usize, k: usize) -> Result<(), CmdError> {
    if n == 0 || k == 0 {
        return Err(usage("`--n` and `--k` must be at least 1"));
    }
    Ok(())
}

impl From<gsg_core::Error> for CmdError {
    fn from(e: gsg_core::Error) -> Self {
        let code = match e {
            gsg_core::Error::SubsetCapExceeded { .. } | gsg_core::Error::BudgetExceeded { .. } => 3,
            gsg_core::Error::UnknownPredicate(_) | gsg_core::Error::UnknownCondition(_) => 2,
        };
        CmdError {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> Self {
        usage(e.to_string())
    }
}

/// Runs the CLI against explicit argument and output streams, returning the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.message);
            failure.code
        }
    }
}

fn load(file: &str) -> Result<(StructureDocument, OrderedGammaStructure), CmdError> {
    let text = fs::read_to_string(file)
        .map_err(|e| usage(format!("{file}: {e}")))?;
    let document = StructureDocument::parse(&text)
        .map_err(|e| usage(format!("{file}: {e}")))?;
    let structure = document.to_structure();
    Ok((document, structure))
}

/// Loads a file and additionally insists the structure is valid — the
/// analysis commands are meaningless on broken tables or orders, so those
/// are reported as input errors, not as property failures.
fn load_valid(file: &str) -> Result<(StructureDocument, OrderedGammaStructure), CmdError> {
    let (document, structure) = load(file)?;
    let validation = structure.validate();
    if !validation.is_valid() {
        return Err(usage(format!("{file}: structure is invalid\n{validation}")));
    }
    Ok((document, structure))
}

fn parse_condition(raw: &str) -> Result<ConditionId, CmdError> {
    let id = ConditionId::from_str(raw)?;
    if id == ConditionId::K1 {
        return Err(usage(
            "`--condition` accepts all, C1..C8, K2, K3 (K1 states the same property as C1)",
        ));
    }
    Ok(id)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, CmdError> {
    match command {
        Command::Validate { file } => {
            let (_, structure) = load(&file)?;
            let validation = structure.validate();
            if validation.is_valid() {
                Ok(0)
            } else {
                Err(CmdError {
                    code: 1,
                    message: validation.to_string(),
                })
            }
        }
        Command::Check {
            file,
            condition,
            format,
        } => {
            let (document, structure) = load_valid(&file)?;
            let (reports, consistent, holds) = if condition == "all" {
                let verdict = theorem::equivalence_verdict(&structure)?;
                let holds = verdict.consistent;
                (verdict.reports, Some(verdict.consistent), holds)
            } else {
                let id = parse_condition(&condition)?;
                let report = theorem::check(&structure, id)?;
                let holds = report.holds;
                (vec![report], None, holds)
            };
            match format {
                Format::Json => {
                    let envelope = report::check_json(&document, &reports, consistent);
                    writeln!(out, "{}", serde_json::to_string_pretty(&envelope)?)?;
                }
                Format::Text => {
                    write!(out, "{}", report::check_text(&document, &reports, consistent))?;
                }
            }
            Ok(if holds { 0 } else { 1 })
        }
        Command::Classify { file, format } => {
            let (document, structure) = load_valid(&file)?;
            let classification = report::classify(&structure);
            match format {
                Format::Json => {
                    let envelope = report::classify_json(&document, &classification);
                    writeln!(out, "{}", serde_json::to_string_pretty(&envelope)?)?;
                }
                Format::Text => {
                    write!(out, "{}", report::classify_text(&document, &classification))?;
                }
            }
            Ok(0)
        }
        Command::Nclasses { file, format } => {
            let (document, structure) = load_valid(&file)?;
            let rel = nrel::n_relation(&structure);
            match format {
                Format::Json => {
                    let envelope = report::nclasses_json(&document, &structure, &rel);
                    writeln!(out, "{}", serde_json::to_string_pretty(&envelope)?)?;
                }
                Format::Text => {
                    write!(out, "{}", report::nclasses_text(&document, &structure, &rel))?;
                }
            }
            Ok(0)
        }
        Command::Enumerate {
            n,
            k,
            orders,
            count_only,
            max_cells,
        } => {
            require_positive_size(n, k)?;
            let budget = max_cells
                .map(|max_cells| EnumerationBudget { max_cells })
                .unwrap_or_default();
            let tables = enumerate_tables_with_budget(n, k, budget)?;
            let mut emitted = 0usize;
            for structure in tables {
                let ordered: Vec<OrderedGammaStructure> = if orders {
                    enumerate_orders(&structure)
                        .into_iter()
                        .map(|order| {
                            OrderedGammaStructure::new(structure.clone(), order)
                                .expect("enumerated orders match their structure")
                        })
                        .collect()
                } else {
                    vec![gsg_core::fixtures::with_equality(structure.clone())]
                };
                for s in ordered {
                    if !count_only {
                        if emitted > 0 {
                            writeln!(out)?;
                        }
                        writeln!(out, "# {emitted}")?;
                        write!(out, "{}", StructureDocument::from_structure(&s).format())?;
                    }
                    emitted += 1;
                }
            }
            if count_only {
                writeln!(out, "{emitted}")?;
            }
            Ok(0)
        }
        Command::Search {
            n,
            k,
            sat,
            unsat,
            limit,
            order_mode,
            max_cells,
        } => {
            require_positive_size(n, k)?;
            let parse_predicates = |raw: &[String]| -> Result<Vec<Predicate>, CmdError> {
                raw.iter()
                    .filter(|token| !token.is_empty())
                    .map(|token| Predicate::from_str(token).map_err(CmdError::from))
                    .collect()
            };
            let mut query = SearchQuery::new(n, k);
            query.sat = parse_predicates(&sat)?;
            query.unsat = parse_predicates(&unsat)?;
            query.limit = limit;
            query.order_mode = order_mode.into();
            if let Some(max_cells) = max_cells {
                query.budget = EnumerationBudget { max_cells };
            }
            let hits = run_search(&query)?;
            for (i, hit) in hits.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "# match {i}")?;
                let s = OrderedGammaStructure::new(hit.structure.clone(), hit.order.clone())
                    .expect("search hits are well-formed");
                write!(out, "{}", StructureDocument::from_structure(&s).format())?;
            }
            if !hits.is_empty() {
                writeln!(out)?;
            }
            writeln!(out, "matches: {}", hits.len())?;
            Ok(0)
        }
    }
}

impl From<serde_json::Error> for CmdError {
    fn from(e: serde_json::Error) -> Self {
        CmdError {
            code: 2,
            message: format!("failed to serialize report: {e}"),
        }
    }
}
