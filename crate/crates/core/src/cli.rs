//! Command-line front end: `dims`, `steps`, `q` and `verify`.
//!
//! Exit codes: 0 success, 1 identity failure, 2 usage or configuration error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::identities::{hook_ratios, IdentityId};
use crate::partitions::{parse_partition, step_coordinates};
use crate::tableaux::{ssyt_count, syt_count, FillingDimension};
use crate::verify::{run_sweep, SweepConfig};
use crate::vershik::{q_coefficient, IndexTriple, PairSequence};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hookcontent",
    version,
    about = "Young-diagram counts and exact identity sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hook lengths, contents, SYT count and (with --d) SSYT count of a shape.
    Dims {
        /// Shape as comma-separated parts, e.g. 4,3,1
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Step coordinates, addable corners, contents and hook ratios of a shape.
    Steps {
        #[arg(long, allow_hyphen_values = true)]
        shape: String,
    },
    /// Evaluate Q_j(m, n) on a sequence of positive rationals.
    Q {
        /// Even-length list such as 1,2/3,4,5
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: usize,
    },
    /// Sweep the selected identities and write a report.
    Verify {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// Comma-separated values or inclusive ranges, e.g. 1-6 or 2,3,5
        #[arg(long, default_value = "1-6")]
        d_set: String,
        /// Comma-separated identity names, or ALL
        #[arg(long, default_value = "ALL")]
        identities: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Positive integer or AUTO
        #[arg(long, default_value = "AUTO")]
        workers: String,
        #[arg(long, value_enum, default_value_t = Format::Report)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Report,
    Table,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Dims { shape, d } => {
            let d = d.map(FillingDimension::new).transpose()?;
            cmd_dims(&shape, d, out)?;
            Ok(EXIT_OK)
        }
        Command::Steps { shape } => {
            cmd_steps(&shape, out)?;
            Ok(EXIT_OK)
        }
        Command::Q { seq, m, j, n } => {
            cmd_q(&seq, IndexTriple::new(m, j, n), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            n_max,
            d_set,
            identities,
            seed,
            trials,
            workers,
            format,
            out: path,
        } => {
            let config = SweepConfig {
                n_max,
                d_set: parse_d_set(&d_set)?,
                identities: parse_identities(&identities)?,
                seed,
                trial_count: trials,
                workers: workers.parse()?,
                ..SweepConfig::default()
            };
            let report = run_sweep(&config)?;
            let text = match format {
                Format::Report => report.to_report_text(),
                Format::Table => report.to_table(),
            };
            match path {
                Some(path) => std::fs::write(&path, &text)
                    .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))?,
                None => write_out(out, &text)?,
            }
            let _ = writeln!(
                err,
                "{}: {} failed, {:.3}s",
                report.status,
                report.failed(),
                report.elapsed.as_secs_f64()
            );
            Ok(report.exit_code())
        }
    }
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Config(format!("cannot write output: {e}")))
}

/// `dims`: size, hook and content grids, SYT and optionally SSYT.
pub fn cmd_dims(shape: &str, d: Option<FillingDimension>, out: &mut dyn Write) -> Result<()> {
    let lambda = parse_partition(shape)?;
    let mut text = String::new();
    text += &format!("shape: {lambda}\n");
    text += &format!("n: {}\n", lambda.size());
    text += "hook lengths:\n";
    text += &grid(&lambda.hook_grid());
    text += "contents:\n";
    text += &grid(&lambda.content_grid());
    text += &format!("SYT: {}\n", syt_count(&lambda)?);
    if let Some(d) = d {
        text += &format!("SSYT(d={d}): {}\n", ssyt_count(&lambda, d)?);
    }
    write_out(out, &text)
}

/// `steps`: step coordinates and the addable corners with contents and hook ratios.
pub fn cmd_steps(shape: &str, out: &mut dyn Write) -> Result<()> {
    let lambda = parse_partition(shape)?;
    let sc = step_coordinates(&lambda)?;
    let mut text = String::new();
    text += &format!("shape: {lambda}\n");
    text += &format!("step coordinates: {sc}\n");
    text += "corners:\n";
    for (corner, ratio) in hook_ratios(&lambda) {
        text += &format!(
            "  j={} box={} content={} hook_ratio={} result={}\n",
            corner.index,
            corner.cell,
            corner.cell.content(),
            ratio,
            corner.result
        );
    }
    write_out(out, &text)
}

/// `q`: prints `Q_j(m, n)` as an exact fraction.
pub fn cmd_q(seq: &str, t: IndexTriple, out: &mut dyn Write) -> Result<()> {
    let a: PairSequence = seq.parse()?;
    let q = q_coefficient(&a, t)?;
    write_out(out, &format!("{q}\n"))
}

fn grid<T: std::fmt::Display>(rows: &[Vec<T>]) -> String {
    let width = rows
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut text = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        text += &format!("  {}\n", cells.join(" "));
    }
    text
}

/// `"1-6"`, `"2,3,5"` or a mix such as `"1,3-4"`.
pub fn parse_d_set(text: &str) -> Result<BTreeSet<u32>> {
    let bad = |t: &str| Error::Config(format!("bad d_set entry {t:?}"));
    let mut set = BTreeSet::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match token.split_once('-') {
            Some((lo, hi)) => {
                let lo: u32 = lo.trim().parse().map_err(|_| bad(token))?;
                let hi: u32 = hi.trim().parse().map_err(|_| bad(token))?;
                if lo > hi {
                    return Err(bad(token));
                }
                set.extend(lo..=hi);
            }
            None => {
                set.insert(token.parse().map_err(|_| bad(token))?);
            }
        }
    }
    Ok(set)
}

pub fn parse_identities(text: &str) -> Result<BTreeSet<IdentityId>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.into_iter().collect());
    }
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["hookcontent"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn dims_shows_hooks_and_counts() {
        let (code, out, _) = run_capture(&["dims", "--shape", "4,3,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("n: 8"));
        assert!(out.contains("  6 4 3 1\n"));
        assert!(out.contains("SYT: 70"));

        let (_, out, _) = run_capture(&["dims", "--shape", "1", "--d", "7"]);
        assert!(out.contains("SSYT(d=7): 7"));

        let (_, out, _) = run_capture(&["dims", "--shape", "4,2,1", "--d", "4"]);
        assert!(out.contains("SYT: 35"));
        assert!(out.contains("SSYT(d=4): 140"));
    }

    #[test]
    fn dims_rejects_bad_shapes() {
        assert_eq!(run_capture(&["dims", "--shape", "3,4"]).0, 2);
        assert_eq!(run_capture(&["dims", "--shape", "a"]).0, 2);
        assert_eq!(run_capture(&["dims", "--shape", "2", "--d", "0"]).0, 2);
    }

    #[test]
    fn steps_output() {
        let (code, out, _) = run_capture(&["steps", "--shape", "8,8,4,4,1,1,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("step coordinates: (1,3,3,2,4,2)"));

        let (_, out, _) = run_capture(&["steps", "--shape", "1"]);
        assert!(out.contains("step coordinates: (1,1)"));
        assert!(out.contains("j=0 box=(2,1)"));
        assert!(out.contains("j=1 box=(1,2)"));

        let (_, out, _) = run_capture(&["steps", "--shape", "3,3,2,2"]);
        assert!(out.contains("j=0 box=(5,1) content=-4"));
        assert!(out.contains("j=1 box=(3,3) content=0"));
        assert!(out.contains("j=2 box=(1,4) content=3"));

        assert_eq!(run_capture(&["steps", "--shape", ""]).0, 2);
    }

    #[test]
    fn q_output() {
        assert_eq!(
            run_capture(&["q", "--seq", "1,1", "--m", "0", "--j", "0", "--n", "1"]).1,
            "1/2\n"
        );
        assert_eq!(
            run_capture(&["q", "--seq", "1,2", "--m", "0", "--j", "1", "--n", "1"]).1,
            "2/3\n"
        );
        assert_eq!(
            run_capture(&["q", "--seq", "5,7", "--m", "0", "--j", "0", "--n", "0"]).1,
            "1\n"
        );
        assert_eq!(
            run_capture(&["q", "--seq", "1,2,3", "--m", "0", "--j", "0", "--n", "0"]).0,
            2
        );
        assert_eq!(
            run_capture(&["q", "--seq", "1,-2", "--m", "0", "--j", "0", "--n", "0"]).0,
            2
        );
        assert_eq!(
            run_capture(&["q", "--seq", "1,2", "--m", "0", "--j", "0", "--n", "2"]).0,
            2
        );
    }

    #[test]
    fn verify_small_sweep() {
        let (code, out, err) = run_capture(&[
            "verify",
            "--n-max",
            "1",
            "--identities",
            "FINAL1",
            "--format",
            "table",
        ]);
        assert_eq!(code, 0, "{err}");
        assert!(out.contains("FINAL1"));
        assert!(out.contains("status: pass"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_capture(&["verify", "--identities", "BOGUS"]).0, 2);
        assert_eq!(run_capture(&["verify", "--n-max", "0"]).0, 2);
        assert_eq!(run_capture(&["verify", "--workers", "0"]).0, 2);
        assert_eq!(run_capture(&["verify", "--d-set", "x"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&[]).0, 2);
    }

    #[test]
    fn d_set_parsing() {
        assert_eq!(parse_d_set("1-3").unwrap(), [1, 2, 3].into_iter().collect());
        assert_eq!(
            parse_d_set("2, 5,3-4").unwrap(),
            [2, 3, 4, 5].into_iter().collect()
        );
        assert!(parse_d_set("4-2").is_err());
    }
}
