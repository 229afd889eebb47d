//! Command-line front end for the `seaweed` library.
//!
//! Every command writes to caller-supplied streams and returns a process exit
//! code, so the binary is a thin wrapper and tests can drive commands in-process.

pub mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use seaweed::enumeration::{build_table, CensusLimits};
use seaweed::formulas::IdentityAudit;
use seaweed::genfunc::builtin_gfs;
use seaweed::meander::{build_meander, seaweed_dimension, seaweed_rank};
use seaweed::render::{to_svg, to_tikz};
use seaweed::winding::{wind_down, wind_step, WindState};
use seaweed::{golden, ExactInt, Oracle, RationalGf, SeaweedType, TableKind};

pub const EXIT_OK: i32 = 0;
/// A verification or golden comparison failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Unparseable input or bad usage.
pub const EXIT_USAGE: i32 = 2;
/// A census was refused by its size limit.
pub const EXIT_LIMIT: i32 = 3;
pub const EXIT_IO: i32 = 4;

const LONG_ABOUT: &str = "\
Index, homotopy type and enumeration of seaweed subalgebras of sl(n).

A seaweed type is written TOP/BOTTOM where each side is a composition of the
same n with parts separated by '|', e.g. 2|4/1|2|3 or 15/2|5|1|5|2.

Exit codes: 0 ok, 1 check failed, 2 parse or usage error, 3 size limit
exceeded, 4 I/O error.

Environment:
  SEAWEED_MAX_N                 largest n for full pair and homotopy censuses (default 14)
  SEAWEED_MAX_C22_MEANDER_N     largest n for the meander-oracle C22 census (default 200)";

#[derive(Debug, Parser)]
#[command(name = "seaweed", version, about = "Seaweed index, winding-down and census tool", long_about = LONG_ABOUT)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print index, dimension, rank and meander component counts.
    Index {
        /// Seaweed type, e.g. 2|4/1|2|3.
        #[arg(value_name = "TYPE")]
        seaweed: String,
    },
    /// Wind the meander down; print its signature and homotopy type.
    Wind {
        #[arg(value_name = "TYPE")]
        seaweed: String,
        /// Also print every intermediate state with the move applied to it.
        #[arg(long)]
        trace: bool,
    },
    /// Tabulate index counts by exhaustive census.
    Table {
        #[arg(value_enum)]
        kind: KindArg,
        /// Largest n; defaults to the last row of the matching published table (10, 12 or 11).
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// How C22 cells are computed.
        #[arg(long, value_enum, default_value_t = OracleArg::Gcd)]
        oracle: OracleArg,
        /// Census threads; defaults to available parallelism, or 1 with --check-golden.
        #[arg(long)]
        workers: Option<usize>,
        /// Write here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Compare every generated row that has a published counterpart; exit 1 on any difference.
        #[arg(long)]
        check_golden: bool,
    },
    /// Run a property suite and report each check.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Census threads for suites that enumerate; defaults to available parallelism.
        #[arg(long)]
        workers: Option<usize>,
    },
    /// Draw the meander as SVG or TikZ.
    Render {
        #[arg(value_name = "TYPE")]
        seaweed: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Evaluate both summation identities for n = 1..MAX_N and report each row as CSV.
    Identities {
        #[arg(long, default_value_t = 30)]
        max_n: u32,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Print power-series coefficients of a rational generating function.
    ///
    /// GF is one of the built-ins diag1, diag2, diag3 (the generating functions
    /// of C(n,n-1), C(n,n-2), C(n,n-3)) or a literal (N)/(D) whose denominator
    /// has constant term 1. Polynomials use ascending or any order of terms
    /// like 3, -2x, 4x^2, with optional '*': "(x)/(1 - 2x)".
    Series {
        #[arg(value_name = "GF", allow_hyphen_values = true)]
        gf: String,
        #[arg(long, default_value_t = 30)]
        upto: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// All composition pairs: C(n,k).
    Cnk,
    /// a|b/n: C21(n,k).
    C21,
    /// a|b/c|d: C22(n,k).
    C22,
}

impl From<KindArg> for TableKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Cnk => TableKind::Cnk,
            KindArg::C21 => TableKind::C21,
            KindArg::C22 => TableKind::C22,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    /// `n,k,count` per cell.
    Csv,
    /// `{"kind": ..., "rows": {"<n>": {"<k>": count}}}`.
    Json,
    /// Grid with one row per n.
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    Gcd,
    Meander,
}

impl From<OracleArg> for Oracle {
    fn from(o: OracleArg) -> Self {
        match o {
            OracleArg::Gcd => Oracle::Gcd,
            OracleArg::Meander => Oracle::Meander,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Svg,
    Tikz,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] seaweed::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(seaweed::Error::LimitExceeded { .. }) => EXIT_LIMIT,
            CliError::Core(seaweed::Error::Overflow(_)) => EXIT_CHECK_FAILED,
            CliError::Core(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

fn io_err(path: &str) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.to_string(),
        source,
    }
}

type CliResult<T = i32> = std::result::Result<T, CliError>;

/// Runs one parsed command; errors are reported on `err` and mapped to exit codes.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    match command {
        Command::Index { seaweed } => cmd_index(&seaweed, out),
        Command::Wind { seaweed, trace } => cmd_wind(&seaweed, trace, out),
        Command::Table {
            kind,
            max_n,
            format,
            oracle,
            workers,
            output,
            check_golden,
        } => {
            let workers = workers.unwrap_or(if check_golden { 1 } else { default_workers() });
            let opts = TableOptions {
                kind: kind.into(),
                max_n,
                format,
                oracle: oracle.into(),
                workers,
                check_golden,
            };
            cmd_table(&opts, output.as_deref(), out, err)
        }
        Command::Verify { suite, workers } => {
            let reports = verify::run(suite, workers.unwrap_or_else(default_workers));
            emit(out, None, &verify::render(&reports))?;
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            })
        }
        Command::Render {
            seaweed,
            format,
            output,
        } => {
            let m = build_meander(&parse_type(&seaweed)?);
            let text = match format {
                RenderFormat::Svg => to_svg(&m),
                RenderFormat::Tikz => to_tikz(&m),
            };
            emit(out, output.as_deref(), &text)?;
            Ok(EXIT_OK)
        }
        Command::Identities { max_n, output } => cmd_identities(max_n, output.as_deref(), out, err),
        Command::Series { gf, upto } => cmd_series(&gf, upto, out),
    }
}

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_type(text: &str) -> CliResult<SeaweedType> {
    Ok(text.parse::<SeaweedType>()?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(io_err(&p.display().to_string())),
        None => out.write_all(text.as_bytes()).map_err(io_err("<stdout>")),
    }
}

fn cmd_index(text: &str, out: &mut dyn Write) -> CliResult {
    let st = parse_type(text)?;
    let summary = build_meander(&st).components();
    let report = format!(
        "type       {st}\nindex      {}\ndimension  {}\nrank       {}\ncycles     {}\npaths      {}\n",
        summary.index(),
        seaweed_dimension(&st),
        seaweed_rank(st.n()),
        summary.cycles,
        summary.paths
    );
    emit(out, None, &report)?;
    Ok(EXIT_OK)
}

fn cmd_wind(text: &str, trace: bool, out: &mut dyn Write) -> CliResult {
    let st = parse_type(text)?;
    let mut report = String::new();
    if trace {
        let mut state = WindState::from(&st);
        while !state.is_empty() {
            let (mv, next) = wind_step(&state)?;
            report.push_str(&format!("{state:<24} {mv}\n"));
            state = next;
        }
    }
    let (sig, h) = wind_down(&st);
    report.push_str(&format!("signature  {sig}\nhomotopy   {h}\n"));
    emit(out, None, &report)?;
    Ok(EXIT_OK)
}

pub struct TableOptions {
    pub kind: TableKind,
    pub max_n: Option<u32>,
    pub format: TableFormat,
    pub oracle: Oracle,
    pub workers: usize,
    pub check_golden: bool,
}

fn cmd_table(
    opts: &TableOptions,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let golden = golden::table(opts.kind);
    let max_n = match opts.max_n {
        Some(n) => n,
        None => *golden
            .rows()
            .keys()
            .last()
            .expect("golden tables are non-empty"),
    };
    if max_n < opts.kind.min_n() {
        return Err(seaweed::Error::InvalidArgument(format!(
            "{} table starts at n={}, got --max-n {max_n}",
            opts.kind,
            opts.kind.min_n()
        ))
        .into());
    }
    let limits = CensusLimits::from_env()?;
    let table = build_table(opts.kind, max_n, opts.oracle, opts.workers.max(1), &limits)?;
    let text = match opts.format {
        TableFormat::Csv => table.to_csv(),
        TableFormat::Json => table.to_json(),
        TableFormat::Md => table.to_markdown(),
    };
    emit(out, output, &text)?;
    if !opts.check_golden {
        return Ok(EXIT_OK);
    }
    let compared: Vec<u32> = golden
        .rows()
        .keys()
        .copied()
        .filter(|n| table.row(*n).is_some())
        .collect();
    let cells: usize = compared
        .iter()
        .map(|&n| golden.row(n).map_or(0, <[u64]>::len))
        .sum();
    let mismatches = table.mismatches_against(&golden);
    let w = |err: &mut dyn Write, s: String| writeln!(err, "{s}").map_err(io_err("<stderr>"));
    if compared.is_empty() {
        w(
            err,
            format!(
                "golden check: no generated row has a published counterpart for {}",
                opts.kind
            ),
        )?;
        return Ok(EXIT_CHECK_FAILED);
    }
    let range = format!("n={}..={}", compared[0], compared[compared.len() - 1]);
    if mismatches.is_empty() {
        w(
            err,
            format!(
                "golden check: {} matches {cells} published cells ({range})",
                opts.kind
            ),
        )?;
        Ok(EXIT_OK)
    } else {
        w(
            err,
            format!(
                "golden check: {} differs in {} of {cells} published cells ({range})",
                opts.kind,
                mismatches.len()
            ),
        )?;
        for m in &mismatches {
            w(err, format!("  {m}"))?;
        }
        Ok(EXIT_CHECK_FAILED)
    }
}

fn cmd_identities(
    max_n: u32,
    output: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    if max_n == 0 {
        return Err(seaweed::Error::InvalidArgument("--max-n must be at least 1".into()).into());
    }
    let audit = IdentityAudit::run(max_n);
    emit(out, output, &audit.report())?;
    let holds = |rows: &[seaweed::formulas::IdentityRow]| rows.iter().all(|r| r.holds());
    let verdict = |ok: bool| if ok { "holds" } else { "FAILS" };
    let k2k = holds(&audit.k2k);
    let fitted = holds(&audit.k2_2k_fitted);
    let printed = match audit.first_printed_failure() {
        Some(n) => format!("first differs at n={n}"),
        None => format!("holds for n=1..={max_n}"),
    };
    writeln!(
        err,
        "sum (n-k)2^k = 2^(n+1)-2n-2: {} for n=1..={max_n}\n\
         sum k(n-k)2^(n-k-1) = 4-3*2^n+n*2^n (as printed): {printed}\n\
         sum k(n-k)2^(n-k-1) = (n-3)2^n+n+3 (corrected): {} for n=1..={max_n}",
        verdict(k2k),
        verdict(fitted)
    )
    .map_err(io_err("<stderr>"))?;
    Ok(if k2k && fitted {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn cmd_series(spec: &str, upto: usize, out: &mut dyn Write) -> CliResult {
    let builtin = match spec {
        "diag1" => Some(0),
        "diag2" => Some(1),
        "diag3" => Some(2),
        _ => None,
    };
    let gf: RationalGf = match builtin {
        Some(i) => builtin_gfs::<ExactInt>().swap_remove(i).gf,
        None => spec.parse()?,
    };
    let mut text = format!("# {gf}\nn,coefficient\n");
    for (n, c) in gf.coefficients(upto).iter().enumerate() {
        text.push_str(&format!("{n},{c}\n"));
    }
    emit(out, None, &text)?;
    Ok(EXIT_OK)
}
