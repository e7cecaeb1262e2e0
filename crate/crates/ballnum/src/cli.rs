//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, parse or range error, 2 domain rejection
//! (palindromes and the like), 3 verification failure.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use ballnum_core::ball::{ball_number, code_of};
use ballnum_core::codes::{numeral, MAX_CENSUS_WIDTH};
use ballnum_core::digits::DigitString;
use ballnum_core::revdiv::{
    closed_form, sum_decomposition, Family, DEFAULT_SEARCH_DIGITS, LARGE_SEARCH_DIGITS,
};
use ballnum_core::Error;
use clap::{Parser, Subcommand};

use crate::catalog::{self, build_catalog, census_entries, Format, RevDivRow};
use crate::parallel;
use crate::verify::{self, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ballnum",
    version,
    about = "Ball's magic numbers, borrow codes and reverse divisors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Ball number of N with every intermediate value.
    Ball { n: String },
    /// Borrow code of N.
    Code { n: String },
    /// All strict codes of one width, sorted by Ball value.
    Enumerate {
        #[arg(long)]
        width: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Reverse divisors with a given number of digits.
    Revdiv {
        #[arg(long)]
        digits: usize,
        /// Permit 10 to 18 digits, searched by carries.
        #[arg(long)]
        allow_large: bool,
        /// csv or json
        #[arg(long, default_value = "csv")]
        format: Format,
    },
    /// Splits the repunit code 1…10 and the reverse divisor 99 · R_N.
    Decompose {
        #[arg(long)]
        repunit: usize,
    },
    /// Runs a verification suite.
    Verify {
        /// ball99, census, revdiv-complete, squares, decompose or all
        #[arg(long)]
        suite: Suite,
    },
    /// Writes the census for widths 2..=W plus magic reverse divisors.
    Catalog {
        #[arg(long)]
        max_width: usize,
        #[arg(long, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Verify,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Palindrome
            | Error::NotEligible
            | Error::NotACode(_)
            | Error::NotReverseDivisor(_) => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn check_width(what: &str, value: usize, max: usize) -> Result<(), Failure> {
    if (2..=max).contains(&value) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "{what} must be in 2..={max}, got {value}"
        )))
    }
}

fn parse_input(s: &str) -> Result<DigitString, Failure> {
    if s.is_empty() {
        return Err(Failure::Usage("empty input".into()));
    }
    Ok(s.parse::<DigitString>()?)
}

fn cmd_ball(n: &str, out: &mut dyn Write) -> Result<(), Failure> {
    let x = parse_input(n)?;
    let r = ball_number(&x)?;
    writeln!(out, "x  = {}", r.input)?;
    writeln!(out, "x′ = {}", r.reverse)?;
    writeln!(out, "y  = {}", r.difference)?;
    writeln!(out, "y′ = {}", r.difference_reverse)?;
    writeln!(out, "B  = {}", r.ball_value)?;
    writeln!(out, "code = {} ({})", r.code, r.code.kind())?;
    writeln!(out, "truncated code = {}", r.truncated_code_value)?;
    writeln!(out, "{} = 99 × {}", r.ball_value, r.truncated_code_value)?;
    Ok(())
}

fn cmd_code(n: &str, out: &mut dyn Write) -> Result<(), Failure> {
    let x = parse_input(n)?;
    let code = code_of(&x)?;
    writeln!(out, "code = {} ({})", code, code.kind())?;
    writeln!(out, "truncated code = {}", code.truncated_numeral())?;
    Ok(())
}

fn cmd_enumerate(
    width: usize,
    format: Format,
    workers: usize,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    check_width("width", width, MAX_CENSUS_WIDTH)?;
    let census = parallel::enumerate_codes(width, workers)?;
    catalog::write_entries(out, &census_entries(&census), format)?;
    Ok(())
}

fn closed_form_agrees(r: &ballnum_core::RevDivRecord) -> bool {
    match r.family {
        Family::Nine | Family::Four => closed_form(r.family, r.digit_count).is_ok_and(|c| c == *r),
        Family::Other => false,
    }
}

fn cmd_revdiv(
    digits: usize,
    allow_large: bool,
    format: Format,
    workers: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    if digits > DEFAULT_SEARCH_DIGITS && !allow_large {
        return Err(Failure::Usage(format!(
            "{digits} digits is past the exhaustive scan bound of {DEFAULT_SEARCH_DIGITS}; pass --allow-large to use the carry search (up to {LARGE_SEARCH_DIGITS} digits)"
        )));
    }
    check_width(
        "digit count",
        digits,
        if allow_large {
            LARGE_SEARCH_DIGITS
        } else {
            DEFAULT_SEARCH_DIGITS
        },
    )?;
    let recs = parallel::search_reverse_divisors(digits, allow_large, workers)?;
    let rows: Vec<RevDivRow> = recs
        .iter()
        .map(|r| RevDivRow::new(r, closed_form_agrees(r)))
        .collect();
    match format {
        Format::Csv => catalog::write_csv(out, &rows)?,
        Format::Json => catalog::write_json_lines(out, &rows)?,
        Format::Tex => return Err(Failure::Usage("revdiv supports csv and json output".into())),
    }
    let extra = rows
        .iter()
        .filter(|r| r.check == catalog::SEARCH_ONLY)
        .count();
    if extra > 0 {
        writeln!(
            err,
            "note: {extra} reverse divisor(s) lie outside the two closed-form families"
        )?;
    }
    Ok(())
}

fn cmd_decompose(n: usize, out: &mut dyn Write) -> Result<(), Failure> {
    check_width("repunit length", n, ballnum_core::codes::MAX_GENERATED)?;
    let s = sum_decomposition(n)?;
    let c = &s.codes;
    writeln!(out, "repunit code R = {}", c.repunit_code)?;
    writeln!(out, "code A = {} ({})", c.a, c.a.kind())?;
    writeln!(out, "code C = {} ({})", c.c, c.c.kind())?;
    writeln!(
        out,
        "{} = {} + {}",
        c.repunit_code.numeral(),
        c.a.numeral(),
        numeral(c.c.bits())
    )?;
    writeln!(
        out,
        "D = 99 × {} = {}",
        c.repunit_code.truncated_numeral(),
        s.d
    )?;
    writeln!(out, "D = {} + {}", s.b1, s.b2)?;
    let ok = c.sum_is_exact() && s.sum_is_exact() && s.summands_are_ball_numbers();
    writeln!(out, "{}", if ok { "exact" } else { "MISMATCH" })?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn cmd_verify(suite: Suite, workers: usize, out: &mut dyn Write) -> Result<(), Failure> {
    let reports = verify::run(suite, workers);
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    if reports.iter().all(verify::SuiteReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn cmd_catalog(
    max_width: usize,
    format: Format,
    path: &PathBuf,
    workers: usize,
) -> Result<(), Failure> {
    check_width("max width", max_width, MAX_CENSUS_WIDTH)?;
    let censuses = (2..=max_width)
        .map(|w| parallel::enumerate_codes(w, workers))
        .collect::<Result<Vec<_>, _>>()?;
    let mut searched = Vec::new();
    for n in 2..=max_width.min(DEFAULT_SEARCH_DIGITS) {
        searched.extend(parallel::search_reverse_divisors(n, false, workers)?);
    }
    let rows = build_catalog(&censuses, &searched, max_width);
    let mut file = BufWriter::new(File::create(path)?);
    catalog::write_entries(&mut file, &rows, format)?;
    Ok(())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let workers = parallel::worker_count();
    match cli.command {
        Command::Ball { n } => cmd_ball(&n, out),
        Command::Code { n } => cmd_code(&n, out),
        Command::Enumerate { width, format } => cmd_enumerate(width, format, workers, out),
        Command::Revdiv {
            digits,
            allow_large,
            format,
        } => cmd_revdiv(digits, allow_large, format, workers, out, err),
        Command::Decompose { repunit } => cmd_decompose(repunit, out),
        Command::Verify { suite } => cmd_verify(suite, workers, out),
        Command::Catalog {
            max_width,
            format,
            out: path,
        } => cmd_catalog(max_width, format, &path, workers),
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = dispatch(cli, out, err).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_DOMAIN
        }
        Err(Failure::Verify) => {
            let _ = writeln!(err, "verification failed");
            EXIT_VERIFY
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("ballnum").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ball_843() {
        let (code, out, _) = call(&["ball", "843"]);
        assert_eq!(code, 0);
        assert!(out.contains("B  = 1089\n"));
        assert!(out.contains("code = 110 (strict)\n"));
        assert!(out.ends_with("1089 = 99 × 11\n"));
    }

    #[test]
    fn ball_397862() {
        let (code, out, _) = call(&["ball", "397862"]);
        assert_eq!(code, 0);
        assert!(out.contains("1089990 = 99 × 11010"));
        assert!(out.contains("y  = 129069"));
    }

    #[test]
    fn ball_errors() {
        assert_eq!(call(&["ball", "121"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["ball", "7"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["ball", "12a"]).0, EXIT_USAGE);
        assert_eq!(call(&["ball", ""]).0, EXIT_USAGE);
        assert_eq!(call(&["ball"]).0, EXIT_USAGE);
    }

    #[test]
    fn code_command() {
        let (code, out, _) = call(&["code", "58435"]);
        assert_eq!(code, 0);
        assert_eq!(out, "code = 01100 (extended)\ntruncated code = 110\n");
    }

    #[test]
    fn enumerate_two() {
        let (code, out, _) = call(&["enumerate", "--width", "2"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "digits,ball,factor99,code,source\n2,99,1,10,enumerated\n"
        );
        assert_eq!(call(&["enumerate", "--width", "1"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["enumerate", "--width", "4", "--format", "xml"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn revdiv_small() {
        let (code, out, _) = call(&["revdiv", "--digits", "3"]);
        assert_eq!((code, out.as_str()), (0, ""));
        let (code, out, _) = call(&["revdiv", "--digits", "4"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "digits,value,reverse,k,family,check\n\
             4,1089,9801,9,nine,search+closed-form\n\
             4,2178,8712,4,four,search+closed-form\n"
        );
        let (code, _, err) = call(&["revdiv", "--digits", "10"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--allow-large"));
        assert_eq!(
            call(&["revdiv", "--digits", "19", "--allow-large"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["revdiv", "--digits", "4", "--format", "tex"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn decompose_four() {
        let (code, out, _) = call(&["decompose", "--repunit", "4"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("D = 99 × 1111 = 109989\n"));
        assert!(out.contains("D = 99099 + 10890\n"));
        assert_eq!(call(&["decompose", "--repunit", "1"]).0, EXIT_USAGE);
    }

    #[test]
    fn help_and_version_exit_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
        assert_eq!(call(&["--version"]).0, 0);
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    }
}
