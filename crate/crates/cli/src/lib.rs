//! Command-line front end for `chorddia`.
//!
//! Exit codes: 0 success, 1 verification failure or internal inconsistency,
//! 2 usage or domain error, 3 resource cap exceeded.

mod records;
mod svg;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use chorddia::group_algebra::generate_group;
use chorddia::numbers::matchings;
use chorddia::oracle::{self, OracleConfig};
use chorddia::{
    burnside_count, catalan_noncrossing, cyclic_count, dihedral_count, hk_sequences,
    make_standard_group, nu, touchard_polynomial, BigCount, GroupElement, GroupKind, PermGroup,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

pub use records::{to_csv, CountRecord, CSV_HEADER};
pub use svg::render_svg;

#[derive(Debug, Parser)]
#[command(name = "chorddia", version, about = "Count and enumerate chord diagrams up to symmetry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Identity,
    Cyclic,
    Dihedral,
}

impl From<GroupArg> for GroupKind {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Identity => GroupKind::Identity,
            GroupArg::Cyclic => GroupKind::Cyclic,
            GroupArg::Dihedral => GroupKind::Dihedral,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountMethod {
    Formula,
    Burnside,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CrossingMethod {
    Formula,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumerateFormat {
    Jsonl,
    SvgDir,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of diagrams of order N up to the chosen group.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "cyclic", conflicts_with = "group_file")]
        group: GroupArg,
        /// JSON file listing the group's elements as 1-based image arrays.
        #[arg(long)]
        group_file: Option<PathBuf>,
        /// Defaults to `formula` for standard groups, `burnside` for group files.
        #[arg(long, value_enum)]
        method: Option<CountMethod>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Growth table of c_n and d_n with the floors of their lower bounds.
    Table {
        #[arg(long, default_value_t = 3)]
        from: u64,
        #[arg(long, default_value_t = 11)]
        to: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// One canonical representative per orbit.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "cyclic", conflicts_with = "group_file")]
        group: GroupArg,
        #[arg(long)]
        group_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: EnumerateFormat,
        /// Output directory for `svg-dir`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Number of diagrams of order N by number of crossings.
    Crossings {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value = "formula")]
        method: CrossingMethod,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Cumulative and per-order strict diagram counts up to N.
    Strict {
        #[arg(long)]
        n_max: usize,
    },
    /// Cross-check every counting route and report one line per check.
    Verify {
        #[arg(long)]
        n_max: u64,
        /// Largest order checked exhaustively (default: min(n-max, 6)).
        #[arg(long)]
        oracle_max: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(chorddia::Error),
    Io(std::io::Error),
    Verification(usize),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(chorddia::Error::Domain(_)) => 2,
            CliError::Core(chorddia::Error::Resource(_)) => 3,
            CliError::Core(chorddia::Error::Consistency(_)) => 1,
            CliError::Verification(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Verification(failed) => write!(f, "{failed} check(s) failed"),
        }
    }
}

impl From<chorddia::Error> for CliError {
    fn from(e: chorddia::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// Runs the CLI with `argv` (including the program name) against the process
/// streams and returns the exit code.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Like [`run`], writing to the given streams. Output is buffered and written
/// once the command finishes.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut buffer = String::new();
    let result = dispatch(cli.command, &mut buffer);
    let _ = out.write_all(buffer.as_bytes());
    let _ = out.flush();
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "chorddia: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut String) -> CliResult<()> {
    match command {
        Command::Count {
            n,
            group,
            group_file,
            method,
            threads,
        } => cmd_count(n, group, group_file.as_deref(), method, threads, out),
        Command::Table { from, to, format } => cmd_table(from, to, format, out),
        Command::Enumerate {
            n,
            group,
            group_file,
            format,
            out: dir,
            threads,
        } => cmd_enumerate(n, group, group_file.as_deref(), format, dir.as_deref(), threads, out),
        Command::Crossings { n, method, threads } => cmd_crossings(n, method, threads, out),
        Command::Strict { n_max } => cmd_strict(n_max, out),
        Command::Verify {
            n_max,
            oracle_max,
            threads,
        } => cmd_verify(n_max, oracle_max, threads, out),
    }
}

fn require_order(n: u64) -> CliResult<usize> {
    if n == 0 {
        return Err(chorddia::Error::Domain("n must be at least 1".into()).into());
    }
    usize::try_from(n).map_err(|_| CliError::Usage(format!("n = {n} is too large")))
}

fn oracle_config(threads: usize) -> CliResult<OracleConfig> {
    Ok(OracleConfig::from_env()?.with_threads(threads))
}

#[derive(Debug, Deserialize)]
struct GroupFile {
    points: usize,
    elements: Vec<Vec<usize>>,
}

/// Reads a group file and closes its element set under composition.
pub fn load_group_file(path: &Path) -> Result<PermGroup, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_group_file(&text)
}

fn parse_group_file(text: &str) -> Result<PermGroup, String> {
    let file: GroupFile =
        serde_json::from_str(text).map_err(|e| format!("invalid group file: {e}"))?;
    let mut elements = Vec::with_capacity(file.elements.len());
    for images in &file.elements {
        if images.len() != file.points {
            return Err(format!(
                "element {images:?} has {} images, expected {}",
                images.len(),
                file.points
            ));
        }
        elements.push(GroupElement::from_one_based(images).map_err(|e| e.to_string())?);
    }
    generate_group(&elements, file.points).map_err(|e| e.to_string())
}

fn resolve_group(n: usize, group: GroupArg, file: Option<&Path>) -> CliResult<PermGroup> {
    match file {
        Some(path) => {
            let g = load_group_file(path).map_err(CliError::Usage)?;
            if g.points() != 2 * n {
                return Err(CliError::Usage(format!(
                    "group file acts on {} points but n = {n} needs {}",
                    g.points(),
                    2 * n
                )));
            }
            Ok(g)
        }
        None => Ok(make_standard_group(group.into(), 2 * n)?),
    }
}

fn cmd_count(
    n: u64,
    group: GroupArg,
    file: Option<&Path>,
    method: Option<CountMethod>,
    threads: usize,
    out: &mut String,
) -> CliResult<()> {
    let order = require_order(n)?;
    let method = method.unwrap_or(if file.is_some() {
        CountMethod::Burnside
    } else {
        CountMethod::Formula
    });
    let count = match method {
        CountMethod::Formula => {
            if file.is_some() {
                return Err(CliError::Usage(
                    "closed forms exist only for the standard groups; use --method burnside or oracle".into(),
                ));
            }
            match group {
                GroupArg::Identity => matchings(n),
                GroupArg::Cyclic => cyclic_count(n)?,
                GroupArg::Dihedral => dihedral_count(n)?,
            }
        }
        CountMethod::Burnside => burnside_count(order, &resolve_group(order, group, file)?)?,
        CountMethod::Oracle => {
            let cfg = oracle_config(threads)?;
            let g = resolve_group(order, group, file)?;
            oracle::orbit_count(order, &g, &cfg)?.orbit_count
        }
    };
    let _ = writeln!(out, "{count}");
    Ok(())
}

fn cmd_table(from: u64, to: u64, format: TableFormat, out: &mut String) -> CliResult<()> {
    if from == 0 || from > to {
        return Err(CliError::Usage(format!(
            "need 1 <= --from <= --to, got {from}..{to}"
        )));
    }
    let records = (from..=to)
        .map(CountRecord::compute)
        .collect::<chorddia::Result<Vec<_>>>()?;
    match format {
        TableFormat::Csv => out.push_str(&to_csv(&records)),
        TableFormat::Json => {
            let json = serde_json::to_string_pretty(&records)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            out.push_str(&json);
            out.push('\n');
        }
    }
    Ok(())
}

fn cmd_enumerate(
    n: usize,
    group: GroupArg,
    file: Option<&Path>,
    format: EnumerateFormat,
    dir: Option<&Path>,
    threads: usize,
    out: &mut String,
) -> CliResult<()> {
    let n = require_order(n as u64)?;
    let g = resolve_group(n, group, file)?;
    let cfg = oracle_config(threads)?;
    let reps = oracle::representatives(n, &g, &cfg)?;
    match format {
        EnumerateFormat::Jsonl => {
            for d in &reps {
                let line = serde_json::to_string(&d.to_chord_list())
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                out.push_str(&line);
                out.push('\n');
            }
        }
        EnumerateFormat::SvgDir => {
            let dir = dir.ok_or_else(|| CliError::Usage("--format svg-dir needs --out DIR".into()))?;
            std::fs::create_dir_all(dir)?;
            let width = reps.len().to_string().len().max(3);
            for (k, d) in reps.iter().enumerate() {
                let path = dir.join(format!("diagram_{:0width$}.svg", k + 1));
                std::fs::write(&path, render_svg(d))?;
                let _ = writeln!(out, "{}", path.display());
            }
        }
    }
    Ok(())
}

fn cmd_crossings(n: u64, method: CrossingMethod, threads: usize, out: &mut String) -> CliResult<()> {
    let order = require_order(n)?;
    let poly = match method {
        CrossingMethod::Formula => touchard_polynomial(n)?,
        CrossingMethod::Oracle => oracle::crossing_distribution(order, &oracle_config(threads)?)?,
    };
    out.push_str("crossings,diagrams\n");
    for (j, c) in poly.coefficients.iter().enumerate() {
        let _ = writeln!(out, "{j},{c}");
    }
    Ok(())
}

fn cmd_strict(n_max: usize, out: &mut String) -> CliResult<()> {
    let seq = hk_sequences(n_max)?;
    out.push_str("n,a_2n,b_2n\n");
    for n in 1..=n_max {
        let _ = writeln!(
            out,
            "{n},{},{}",
            seq.cumulative(n).expect("n <= n_max"),
            seq.strict(n).expect("n <= n_max")
        );
    }
    Ok(())
}

struct Report<'a> {
    out: &'a mut String,
    failed: usize,
}

impl Report<'_> {
    fn check(&mut self, name: &str, outcome: chorddia::Result<Option<String>>) {
        match outcome {
            Ok(None) => {
                let _ = writeln!(self.out, "PASS {name}");
            }
            Ok(Some(detail)) => {
                self.failed += 1;
                let _ = writeln!(self.out, "FAIL {name}: {detail}");
            }
            Err(e) => {
                self.failed += 1;
                let _ = writeln!(self.out, "FAIL {name}: {e}");
            }
        }
    }
}

fn mismatch(a: &BigCount, b: &BigCount) -> Option<String> {
    (a != b).then(|| format!("{a} != {b}"))
}

fn cmd_verify(n_max: u64, oracle_max: Option<usize>, threads: usize, out: &mut String) -> CliResult<()> {
    let n_max_usize = require_order(n_max)?;
    let cfg = oracle_config(threads)?;
    let oracle_max = oracle_max.unwrap_or(n_max_usize.min(6));
    if oracle_max > cfg.cap() {
        return Err(chorddia::Error::Resource(format!(
            "--oracle-max {oracle_max} exceeds the oracle cap {}",
            cfg.cap()
        ))
        .into());
    }
    let mut report = Report { out, failed: 0 };
    let kinds = [GroupKind::Identity, GroupKind::Cyclic, GroupKind::Dihedral];

    for n in 1..=n_max {
        let order = n as usize;
        for kind in kinds {
            let name = format!("burnside = formula, {kind}, n={n}");
            let outcome = (|| {
                let g = make_standard_group(kind, 2 * order)?;
                let formula = match kind {
                    GroupKind::Identity => matchings(n),
                    GroupKind::Cyclic => cyclic_count(n)?,
                    GroupKind::Dihedral => dihedral_count(n)?,
                };
                Ok(mismatch(&burnside_count(order, &g)?, &formula))
            })();
            report.check(&name, outcome);
        }
        let outcome = (|| {
            let t = touchard_polynomial(n)?;
            Ok(mismatch(&t.total(), &matchings(n))
                .or_else(|| mismatch(&t.constant_term(), &catalan_noncrossing(n).ok()?)))
        })();
        report.check(&format!("crossing polynomial T(0), T(1), n={n}"), outcome);
        let outcome = (|| {
            let total = matchings(n);
            let c_ok = cyclic_count(n)? * (2 * n) >= total;
            let d_ok = dihedral_count(n)? * (4 * n) >= total;
            Ok((!(c_ok && d_ok)).then(|| "count below (2n-1)!!/(2n) or (2n-1)!!/(4n)".to_string()))
        })();
        report.check(&format!("lower bounds, n={n}"), outcome);
    }

    for n in 1..=oracle_max {
        for kind in kinds {
            let name = format!("oracle = formula, {kind}, n={n}");
            let outcome = (|| {
                let g = make_standard_group(kind, 2 * n)?;
                let brute = oracle::orbit_count(n, &g, &cfg)?.orbit_count;
                let n64 = n as u64;
                let formula = match kind {
                    GroupKind::Identity => matchings(n64),
                    GroupKind::Cyclic => cyclic_count(n64)?,
                    GroupKind::Dihedral => dihedral_count(n64)?,
                };
                Ok(mismatch(&brute, &formula))
            })();
            report.check(&name, outcome);
        }
        let outcome = (|| {
            for s in 0..2 * n {
                let g = GroupElement::rotation(2 * n, s)?;
                let fixed = oracle::fixed_diagram_count(n, &g, &cfg)?;
                if let Some(m) = mismatch(&fixed, &nu(n as u64, g.order() as u64)?) {
                    return Ok(Some(format!("rotation by {s}: {m}")));
                }
            }
            Ok(None)
        })();
        report.check(&format!("rotation fixed points = nu, n={n}"), outcome);
        let outcome = (|| {
            let formula = touchard_polynomial(n as u64)?;
            let brute = oracle::crossing_distribution(n, &cfg)?;
            Ok((formula != brute).then(|| format!("{:?} != {:?}", formula.coefficients, brute.coefficients)))
        })();
        report.check(&format!("crossing polynomial = oracle, n={n}"), outcome);
        let outcome = (|| {
            let seq = hk_sequences(n)?;
            let brute = oracle::strict_count(n, &cfg)?;
            Ok(mismatch(seq.strict(n).expect("n <= n_max"), &brute))
        })();
        report.check(&format!("strict count = oracle, n={n}"), outcome);
    }

    match report.failed {
        0 => Ok(()),
        failed => Err(CliError::Verification(failed)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_file_closure() {
        let g = parse_group_file(r#"{"points": 6, "elements": [[2,3,4,5,6,1]]}"#).unwrap();
        assert_eq!(g.order(), 6);
        let g = parse_group_file(r#"{"points": 4, "elements": []}"#).unwrap();
        assert_eq!(g.order(), 1);
        assert!(parse_group_file(r#"{"points": 4, "elements": [[1,2,3]]}"#).is_err());
        assert!(parse_group_file(r#"{"points": 4, "elements": [[1,1,2,3]]}"#).is_err());
        assert!(parse_group_file(r#"{"points": 4, "elements": [[0,1,2,3]]}"#).is_err());
        assert!(parse_group_file("not json").is_err());
    }
}
