//! Catalog rows and their CSV, JSON-lines and TeX renderings.

use std::fmt;
use std::io::{self, Write};

use ballnum_core::ball::{ball_number, ball_witness};
use ballnum_core::codes::{Code, CodeCensus};
use ballnum_core::revdiv::{magic_reverse_divisor, RevDivRecord, DEFAULT_SEARCH_DIGITS};
use ballnum_core::BigUint;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CatalogSource {
    Enumerated,
    ClosedForm,
    Searched,
}

impl fmt::Display for CatalogSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CatalogSource::Enumerated => "enumerated",
            CatalogSource::ClosedForm => "closed-form",
            CatalogSource::Searched => "searched",
        })
    }
}

/// One row of the table of Ball numbers.
///
/// `digits` is the width of the inputs producing `ball`, and `factor99` the
/// truncated code read as a decimal numeral.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub digits: usize,
    pub ball: u128,
    pub factor99: u128,
    pub code: String,
    pub source: CatalogSource,
}

fn to_u128(n: &BigUint) -> u128 {
    u128::try_from(n).expect("catalog values fit in 128 bits")
}

impl CatalogEntry {
    pub fn from_code(code: &Code, source: CatalogSource) -> Self {
        let factor99 = to_u128(&code.truncated_numeral());
        CatalogEntry {
            digits: code.width(),
            ball: 99 * factor99,
            factor99,
            code: code.to_string(),
            source,
        }
    }

    /// Row for a Ball number, using the narrowest input that produces it.
    pub fn from_ball_value(value: &BigUint, source: CatalogSource) -> Option<Self> {
        let x = ball_witness(value)?;
        let r = ball_number(&x).ok()?;
        Some(Self::from_code(&r.code, source))
    }

    pub fn invariants_hold(&self) -> bool {
        let bits = match ballnum_core::codes::parse_bits(&self.code) {
            Ok(b) => b,
            Err(_) => return false,
        };
        let code_ok = ballnum_core::codes::is_code(&bits).unwrap_or(false)
            || ballnum_core::codes::is_extended_code(&bits).unwrap_or(false);
        self.ball == 99 * self.factor99 && code_ok
    }
}

pub fn census_entries(census: &CodeCensus) -> Vec<CatalogEntry> {
    let mut rows: Vec<CatalogEntry> = census
        .codes
        .iter()
        .map(|c| CatalogEntry::from_code(c, CatalogSource::Enumerated))
        .collect();
    rows.sort_by_key(|r| r.ball);
    rows
}

/// Census rows for each width, then reverse divisors of at most `max_width`
/// digits that are Ball numbers: searched ones up to the search bound and
/// the closed form `99 · R_n` past it.
pub fn build_catalog(
    censuses: &[CodeCensus],
    searched: &[RevDivRecord],
    max_width: usize,
) -> Vec<CatalogEntry> {
    let mut rows: Vec<CatalogEntry> = censuses.iter().flat_map(census_entries).collect();
    let mut found: Vec<CatalogEntry> = searched
        .iter()
        .filter(|r| r.digit_count <= max_width)
        .filter_map(|r| CatalogEntry::from_ball_value(&r.value, CatalogSource::Searched))
        .collect();
    found.sort_by_key(|r| (r.ball, r.digits));
    rows.extend(found);
    for digits in DEFAULT_SEARCH_DIGITS + 1..=max_width {
        let d = magic_reverse_divisor(digits - 2).expect("n ≥ 2").value;
        rows.extend(CatalogEntry::from_ball_value(&d, CatalogSource::ClosedForm));
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Tex,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "tex" => Ok(Format::Tex),
            _ => Err(format!("unknown format `{s}` (expected csv, json or tex)")),
        }
    }
}

pub fn write_csv<W: Write, T: Serialize>(out: W, rows: &[T]) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}

/// One JSON object per line.
pub fn write_json_lines<W: Write, T: Serialize>(mut out: W, rows: &[T]) -> io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Five-column table layout: one `\hline` per row, a doubled one between
/// widths.
pub fn write_tex<W: Write>(mut out: W, rows: &[CatalogEntry]) -> io::Result<()> {
    writeln!(out, r"\begin{{tabular}}{{|l|l|l|l|l|}}")?;
    writeln!(out, r"\hline")?;
    writeln!(out, r"\hline")?;
    writeln!(
        out,
        r" n&$B$&factorization & divisor of $B$ (truncated code) & code  \\"
    )?;
    writeln!(out, r" \hline")?;
    writeln!(out, r" \hline")?;
    let mut prev = None;
    for row in rows {
        if prev.is_some_and(|p| p != row.digits) {
            writeln!(out, r" \hline")?;
        }
        writeln!(
            out,
            r" {}&{}& $99\times {}$ & {} &{}\\",
            row.digits, row.ball, row.factor99, row.factor99, row.code
        )?;
        writeln!(out, r" \hline")?;
        prev = Some(row.digits);
    }
    writeln!(out, r" \hline")?;
    writeln!(out, r"\end{{tabular}}")?;
    out.flush()
}

pub fn write_entries<W: Write>(out: W, rows: &[CatalogEntry], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => write_csv(out, rows),
        Format::Json => write_json_lines(out, rows),
        Format::Tex => write_tex(out, rows),
    }
}

/// Marker for reverse-divisor rows.
pub const AGREES_WITH_CLOSED_FORM: &str = "search+closed-form";
pub const SEARCH_ONLY: &str = "search-only";

/// A reverse divisor as emitted by the `revdiv` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RevDivRow {
    pub digits: usize,
    pub value: u128,
    pub reverse: u128,
    pub k: u8,
    pub family: String,
    pub check: &'static str,
}

impl RevDivRow {
    /// `closed_form_agrees` says whether the closed form of this row's family
    /// reproduces the searched value.
    pub fn new(r: &RevDivRecord, closed_form_agrees: bool) -> Self {
        RevDivRow {
            digits: r.digit_count,
            value: to_u128(&r.value),
            reverse: to_u128(&r.reverse_value),
            k: r.quotient,
            family: r.family.to_string(),
            check: if closed_form_agrees {
                AGREES_WITH_CLOSED_FORM
            } else {
                SEARCH_ONLY
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ballnum_core::codes::enumerate_codes;

    fn csv_of(rows: &[CatalogEntry]) -> String {
        let mut buf = Vec::new();
        write_csv(&mut buf, rows).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn width_four_csv() {
        let rows = census_entries(&enumerate_codes(4).unwrap());
        assert_eq!(
            csv_of(&rows),
            "digits,ball,factor99,code,source\n\
             4,9999,101,1010,enumerated\n\
             4,10890,110,1100,enumerated\n\
             4,10989,111,1110,enumerated\n"
        );
        assert!(rows.iter().all(CatalogEntry::invariants_hold));
    }

    #[test]
    fn json_lines() {
        let rows = census_entries(&enumerate_codes(2).unwrap());
        let mut buf = Vec::new();
        write_json_lines(&mut buf, &rows).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"digits\":2,\"ball\":99,\"factor99\":1,\"code\":\"10\",\"source\":\"enumerated\"}\n"
        );
    }

    #[test]
    fn tex_rows() {
        let rows: Vec<_> = (2..=3)
            .flat_map(|w| census_entries(&enumerate_codes(w).unwrap()))
            .collect();
        let mut buf = Vec::new();
        write_tex(&mut buf, &rows).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.contains(r" 2&99& $99\times 1$ & 1 &10\\"));
        assert!(s.contains(r" 3&1089& $99\times 11$ & 11 &110\\"));
        assert!(s.ends_with("\\end{tabular}\n"));
    }

    #[test]
    fn catalog_sources() {
        let censuses: Vec<_> = (2..=12).map(|w| enumerate_codes(w).unwrap()).collect();
        let searched = ballnum_core::revdiv::search_reverse_divisors(7, false).unwrap();
        let rows = build_catalog(&censuses, &searched, 12);
        let searched_rows: Vec<_> = rows
            .iter()
            .filter(|r| r.source == CatalogSource::Searched)
            .collect();
        assert_eq!(searched_rows.len(), 1);
        assert_eq!(searched_rows[0].ball, 1099989);
        let closed: Vec<u128> = rows
            .iter()
            .filter(|r| r.source == CatalogSource::ClosedForm)
            .map(|r| r.ball)
            .collect();
        assert_eq!(closed, [1099999989, 10999999989, 109999999989]);
        assert!(rows.iter().all(CatalogEntry::invariants_hold));
    }

    #[test]
    fn format_parse() {
        assert_eq!("tex".parse::<Format>(), Ok(Format::Tex));
        assert!("xml".parse::<Format>().is_err());
    }
}
