//! `ptriv`: classify spaces, print their (co)homology, sweep verification
//! grids and emit verdict tables.
//!
//! Exit codes: `classify` returns 0 for PTrivial, 1 for NotPTrivial and 2
//! for NotCovered. Unparseable input and bad arguments return 64, specs
//! without a closed form return 65, and any other failure returns 70.

pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ptriv_core::classifier::GridBounds;
use ptriv_core::complex::cohomology;
use ptriv_core::spaces::closed_form_cohomology_with;
use ptriv_core::{certify, classify, phi, Coefficients, GradedGroup, ParseError, SpaceError, SpaceSpec, Status};

use table::{table_rows, write_table, Format};
use verify::{render_report, run_verify, Family};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_UNSUPPORTED: i32 = 65;
pub const EXIT_SOFTWARE: i32 = 70;

#[derive(Parser, Debug)]
#[command(
    name = "ptriv",
    version,
    about = "Classify spaces by whether every real vector bundle has trivial Pontrjagin classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a space, e.g. `X(5,2)^3` or `W[S(4),Y(2,0)]`
    Classify { spec: String },
    /// Print (co)homology groups by SNF, closed form, or both
    Cohomology {
        spec: String,
        #[arg(long, default_value = "Z", value_parser = parse_coeff)]
        coeff: Coefficients,
        #[arg(long, group = "method")]
        closed_form: bool,
        #[arg(long, group = "method")]
        snf: bool,
        #[arg(long, group = "method")]
        both: bool,
    },
    /// Run the oracle and invariant checks over a grid
    Verify {
        #[command(flatten)]
        grid: Grid,
    },
    /// Emit a verdict table over a grid
    Table {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adams' phi(m, n); n defaults to 0
    Phi { m: u32, n: Option<u32> },
}

#[derive(Args, Debug)]
struct Grid {
    #[arg(long, default_value_t = 10)]
    m_max: u32,
    /// Defaults to m-max - 1
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long, default_value_t = 4)]
    k_max: u32,
    #[arg(long, value_enum, default_value = "all")]
    family: Family,
}

impl Grid {
    fn bounds(&self) -> GridBounds {
        GridBounds {
            m_max: self.m_max,
            n_max: self.n_max.unwrap_or(self.m_max.saturating_sub(1)),
            k_max: self.k_max,
        }
    }
}

fn parse_coeff(s: &str) -> Result<Coefficients, String> {
    match s {
        "Z" => Ok(Coefficients::Integers),
        "Z2" => Ok(Coefficients::ModQ(2)),
        "Z4" => Ok(Coefficients::ModQ(4)),
        _ => Err(format!("unknown coefficients '{s}', expected Z, Z2 or Z4")),
    }
}

/// Exit code for a verdict status.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::PTrivial => 0,
        Status::NotPTrivial => 1,
        Status::NotCovered => 2,
    }
}

fn parse_spec(text: &str, err: &mut dyn Write) -> Result<SpaceSpec, i32> {
    SpaceSpec::parse(text).map_err(|e: ParseError| {
        let _ = writeln!(err, "error: {e}");
        let _ = writeln!(err, "  {text}");
        let _ = writeln!(err, "  {}^", " ".repeat(e.position));
        EXIT_USAGE
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    if let Err(msg) = cap_threads() {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    dispatch(cli.command, out, err)
}

/// Caps the global pool at `PTRIV_THREADS` threads, if set. Only the first
/// call in a process takes effect.
fn cap_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("PTRIV_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("PTRIV_THREADS must be a positive integer, got '{value}'"))?;
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match command {
        Command::Classify { spec } => cmd_classify(&spec, out, err),
        Command::Cohomology {
            spec,
            coeff,
            closed_form,
            snf: _,
            both,
        } => {
            let method = if both {
                Method::Both
            } else if closed_form {
                Method::ClosedForm
            } else {
                Method::Snf
            };
            cmd_cohomology(&spec, coeff, method, out, err)
        }
        Command::Verify { grid } => cmd_verify(grid.family, grid.bounds(), out),
        Command::Table {
            grid,
            format,
            out: path,
        } => cmd_table(grid.family, grid.bounds(), format, path, out, err),
        Command::Phi { m, n } => match phi(m, n.unwrap_or(0)) {
            Ok(v) => writeln!(out, "{v}").map(|_| 0),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                Ok(EXIT_USAGE)
            }
        },
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        EXIT_SOFTWARE
    })
}

pub fn cmd_classify(text: &str, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    let spec = match parse_spec(text, err) {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let (verdict, cert) = match classify(&spec).and_then(|v| Ok((v, certify(&spec)?))) {
        Ok(x) => x,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_SOFTWARE);
        }
    };
    writeln!(out, "spec: {spec}")?;
    writeln!(out, "status: {}", verdict.status)?;
    writeln!(out, "rule: {}", verdict.rule_id)?;
    writeln!(out, "citation: {}", verdict.citation)?;
    match cert {
        Some(c) => writeln!(out, "certificate: {}", c.kind.as_str())?,
        None => writeln!(out, "certificate: none")?,
    }
    Ok(exit_code(verdict.status))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Snf,
    ClosedForm,
    Both,
}

pub fn cmd_cohomology(
    text: &str,
    coeff: Coefficients,
    method: Method,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let spec = match parse_spec(text, err) {
        Ok(s) => s,
        Err(code) => return Ok(code),
    };
    let snf = || -> Result<GradedGroup, SpaceError> { Ok(cohomology(&spec.build_complex()?, coeff)?) };
    let closed = || closed_form_cohomology_with(&spec, coeff);
    let fail = |e: SpaceError, err: &mut dyn Write| -> io::Result<i32> {
        writeln!(err, "error: {e}")?;
        Ok(match e {
            SpaceError::UnsupportedSpec(_) => EXIT_UNSUPPORTED,
            _ => EXIT_SOFTWARE,
        })
    };
    match method {
        Method::Snf | Method::ClosedForm => {
            let g = if method == Method::Snf { snf() } else { closed() };
            match g {
                Ok(g) => writeln!(out, "{g}").map(|_| 0),
                Err(e) => fail(e, err),
            }
        }
        Method::Both => {
            let (a, b) = match snf().and_then(|a| Ok((a, closed()?))) {
                Ok(x) => x,
                Err(e) => return fail(e, err),
            };
            let top = spec.dimension() as usize;
            let mut all = true;
            writeln!(out, "{:>4}  {:<12} {:<12}", "deg", "snf", "closed-form")?;
            for j in 0..=top {
                let (x, y) = (a.get(j), b.get(j));
                let ok = x == y;
                all &= ok;
                let verdict = if ok { "MATCH" } else { "MISMATCH" };
                writeln!(out, "{j:>4}  {:<12} {:<12} {verdict}", x.to_string(), y.to_string())?;
            }
            writeln!(out, "{a}")?;
            writeln!(out, "{}", if all { "MATCH" } else { "MISMATCH" })?;
            Ok(if all { 0 } else { 1 })
        }
    }
}

pub fn cmd_verify(family: Family, bounds: GridBounds, out: &mut dyn Write) -> io::Result<i32> {
    let report = run_verify(family, bounds);
    write!(out, "{}", render_report(&report))?;
    Ok(if report.failures() == 0 { 0 } else { 1 })
}

pub fn cmd_table(
    family: Family,
    bounds: GridBounds,
    format: Format,
    path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<i32> {
    let rows = match table_rows(family, bounds) {
        Ok(rows) => rows,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_SOFTWARE);
        }
    };
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(&p)?);
            write_table(&rows, format, &mut w)?;
            w.flush()?;
        }
        None => write_table(&rows, format, out)?,
    }
    Ok(0)
}
