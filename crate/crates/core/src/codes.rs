//! Borrow codes as combinatorial objects.
//!
//! A code `z_0 z_1 … z_n` is the borrow record of `x − x′` for an input whose
//! leading digit exceeds its trailing digit. Such records are exactly the 0/1
//! strings with `z_0 = 1`, `z_n = 0` and the mirrored pair rules checked by
//! [`is_code`]. Bits are kept in reading order: `z_0` is the leading numeral
//! digit.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::error::check_range;
use crate::{Error, Result};

/// Widest census accepted by [`enumerate_codes`].
pub const MAX_CENSUS_WIDTH: usize = 24;

/// Upper bound on the size parameter of generated families.
pub const MAX_GENERATED: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeKind {
    /// `z_0 = 1`, last bit 0, pair rules hold.
    Strict,
    /// A strict code with its final 0 removed.
    Truncated,
    /// A strict code followed by at least one zero, optionally preceded by zeros.
    Extended,
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            CodeKind::Strict => "strict",
            CodeKind::Truncated => "truncated",
            CodeKind::Extended => "extended",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Code {
    bits: Vec<u8>,
    kind: CodeKind,
}

impl Code {
    /// Wraps `bits` after checking they really are of the given kind.
    pub fn new(bits: Vec<u8>, kind: CodeKind) -> Result<Self> {
        let ok = match kind {
            CodeKind::Strict => is_code(&bits)?,
            CodeKind::Truncated => is_truncated_code(&bits)?,
            CodeKind::Extended => is_extended_code(&bits)?,
        };
        if ok {
            Ok(Self { bits, kind })
        } else {
            Err(Error::NotACode(kind))
        }
    }

    pub(crate) fn new_unchecked(bits: Vec<u8>, kind: CodeKind) -> Self {
        debug_assert!(
            Code::new(bits.clone(), kind).is_ok(),
            "{bits:?} is not {kind}"
        );
        Self { bits, kind }
    }

    /// Classifies a bit string, preferring strict, then truncated, then extended.
    pub fn classify(bits: Vec<u8>) -> Result<Option<Self>> {
        let kind = classify_bits(&bits)?;
        Ok(kind.map(|kind| Self { bits, kind }))
    }

    /// Reading-order bits, `z_0` first.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    /// The bits read as a base-10 numeral with `z_0` leading.
    pub fn numeral(&self) -> BigUint {
        numeral(&self.bits)
    }

    /// Bits with the final one removed.
    ///
    /// For a strict or extended code this is the truncated code whose numeral
    /// times 99 is the Ball value.
    pub fn truncated_bits(&self) -> &[u8] {
        &self.bits[..self.bits.len() - 1]
    }

    pub fn truncated_numeral(&self) -> BigUint {
        numeral(self.truncated_bits())
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&render_bits(&self.bits))
    }
}

pub fn render_bits(bits: &[u8]) -> alloc::string::String {
    bits.iter().map(|&b| char::from(b'0' + b)).collect()
}

/// Parses a string of `0`/`1` characters in reading order.
pub fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::InvalidDigit(other)),
        })
        .collect()
}

/// The bits read as a base-10 numeral, first bit leading.
pub fn numeral(bits: &[u8]) -> BigUint {
    if bits.is_empty() {
        return BigUint::zero();
    }
    BigUint::from_radix_be(bits, 10).expect("bits are base-10 digits")
}

fn check_bits(bits: &[u8], min_len: usize) -> Result<()> {
    if bits.len() < min_len {
        return Err(Error::ShortCode(bits.len()));
    }
    match bits.iter().find(|&&b| b > 1) {
        Some(&b) => Err(Error::InvalidBit(b)),
        None => Ok(()),
    }
}

/// Whether `bits` is a strict code.
///
/// With `n = len − 1`: `z_0 = 1`, `z_n = 0`, and for every adjacent pair
/// `(z_i, z_{i+1})` with `0 ≤ i < n`:
/// a rising pair `0,1` forces `z_{n−i−1} = 0` and a falling pair `1,0` forces
/// `z_{n−i−1} = 1`.
pub fn is_code(bits: &[u8]) -> Result<bool> {
    check_bits(bits, 2)?;
    Ok(code_rules_hold(bits))
}

fn code_rules_hold(z: &[u8]) -> bool {
    let n = z.len() - 1;
    if z[0] != 1 || z[n] != 0 {
        return false;
    }
    let ok = (0..n).all(|i| match (z[i], z[i + 1]) {
        (0, 1) => z[n - i - 1] == 0,
        (1, 0) => z[n - i - 1] == 1,
        _ => true,
    });
    if ok && z.len() % 2 == 1 {
        // odd length: the middle bit equals its left neighbour
        let mid = n / 2;
        debug_assert_eq!(z[mid], z[mid - 1], "pair rules imply middle equality");
    }
    ok
}

/// Whether appending a single 0 to `bits` gives a strict code.
pub fn is_truncated_code(bits: &[u8]) -> Result<bool> {
    check_bits(bits, 1)?;
    let mut full = Vec::with_capacity(bits.len() + 1);
    full.extend_from_slice(bits);
    full.push(0);
    Ok(code_rules_hold(&full))
}

/// Whether `bits = 0^a · S · 0^b` for a strict code `S`, `a ≥ 0` and `b ≥ 1`.
///
/// This covers both the symmetric padding `0^j S 0^j` produced by inputs whose
/// outer digits agree and the single trailing zero of `S0`. Leading zeros
/// alone do not make an extended code: `0110` is rejected.
pub fn is_extended_code(bits: &[u8]) -> Result<bool> {
    check_bits(bits, 2)?;
    Ok(extended_core(bits).is_some())
}

/// Splits an extended code into `(leading zeros, strict core, trailing zeros)`.
pub fn extended_core(bits: &[u8]) -> Option<(usize, &[u8], usize)> {
    let lead = bits.iter().position(|&b| b == 1)?;
    let rest = &bits[lead..];
    let trailing_zeros = rest.iter().rev().take_while(|&&b| b == 0).count();
    // the strict core keeps at least one of the trailing zeros
    (1..trailing_zeros).find_map(|pad| {
        let core = &rest[..rest.len() - pad];
        (core.len() >= 2 && code_rules_hold(core)).then_some((lead, core, pad))
    })
}

fn classify_bits(bits: &[u8]) -> Result<Option<CodeKind>> {
    check_bits(bits, 1)?;
    if bits.len() >= 2 && code_rules_hold(bits) {
        Ok(Some(CodeKind::Strict))
    } else if is_truncated_code(bits)? {
        Ok(Some(CodeKind::Truncated))
    } else if bits.len() >= 2 && extended_core(bits).is_some() {
        Ok(Some(CodeKind::Extended))
    } else {
        Ok(None)
    }
}

/// All strict codes of one width, sorted by numeral value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeCensus {
    pub width: usize,
    pub codes: Vec<Code>,
}

impl CodeCensus {
    pub fn count(&self) -> usize {
        self.codes.len()
    }

    /// Ball values `99 × truncated numeral`, in census order.
    pub fn ball_values(&self) -> Vec<BigUint> {
        self.codes
            .iter()
            .map(|c| c.truncated_numeral() * 99u32)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusStrategy {
    /// Test every one of the `2^width` bit strings.
    Filter,
    /// Depth-first construction, pruning as soon as a pair rule is violated.
    Constructive,
}

pub fn enumerate_codes(width: usize) -> Result<CodeCensus> {
    enumerate_codes_with(width, CensusStrategy::Filter)
}

pub fn enumerate_codes_with(width: usize, strategy: CensusStrategy) -> Result<CodeCensus> {
    check_range("code width", width, 2, MAX_CENSUS_WIDTH)?;
    let mut codes = match strategy {
        CensusStrategy::Filter => filter_mask_range(width, 0..1u64 << width),
        CensusStrategy::Constructive => {
            let mut out = Vec::new();
            let mut buf = vec![0u8; width];
            construct(&mut buf, 0, &mut out);
            out
        }
    };
    codes.sort();
    Ok(CodeCensus {
        width,
        codes: codes
            .into_iter()
            .map(|bits| Code::new_unchecked(bits, CodeKind::Strict))
            .collect(),
    })
}

/// Strict codes among the bit strings whose mask lies in `masks`.
///
/// Bit `i` of a mask is `z_i`. The result is unsorted. Disjoint mask ranges
/// can be filtered independently and concatenated.
pub fn filter_mask_range(width: usize, masks: core::ops::Range<u64>) -> Vec<Vec<u8>> {
    assert!((2..=MAX_CENSUS_WIDTH).contains(&width));
    let mut buf = [0u8; MAX_CENSUS_WIDTH];
    let mut out = Vec::new();
    for mask in masks {
        let z = &mut buf[..width];
        for (i, b) in z.iter_mut().enumerate() {
            *b = ((mask >> i) & 1) as u8;
        }
        if code_rules_hold(z) {
            out.push(z.to_vec());
        }
    }
    out
}

fn construct(buf: &mut [u8], pos: usize, out: &mut Vec<Vec<u8>>) {
    let n = buf.len() - 1;
    if pos == buf.len() {
        out.push(buf.to_vec());
        return;
    }
    for bit in 0..=1u8 {
        if (pos == 0 && bit != 1) || (pos == n && bit != 0) {
            continue;
        }
        buf[pos] = bit;
        if rules_complete_at(buf, pos) {
            construct(buf, pos + 1, out);
        }
    }
}

// Checks every pair rule whose three positions are all assigned once `pos` is.
fn rules_complete_at(z: &[u8], pos: usize) -> bool {
    let n = z.len() - 1;
    (0..pos.min(n)).all(|i| {
        let partner = n - i - 1;
        let involves_pos = i + 1 == pos || partner == pos;
        if !involves_pos || partner > pos {
            return true;
        }
        match (z[i], z[i + 1]) {
            (0, 1) => z[partner] == 0,
            (1, 0) => z[partner] == 1,
            _ => true,
        }
    })
}

/// Repunit `R_n = (10^n − 1) / 9`.
pub fn repunit(n: usize) -> Result<BigUint> {
    check_range("repunit length", n, 1, usize::MAX)?;
    Ok(numeral(&vec![1u8; n]))
}

/// The `n`-digit numeral `1010…` starting with 1.
pub fn undulating(n: usize) -> Result<BigUint> {
    check_range("undulating length", n, 1, usize::MAX)?;
    Ok(numeral(&undulating_bits(n)))
}

fn undulating_bits(n: usize) -> Vec<u8> {
    (0..n).map(|i| u8::from(i % 2 == 0)).collect()
}

/// `10^e`.
pub fn pow10(e: usize) -> BigUint {
    Pow::pow(BigUint::from(10u32), e)
}

/// A code `A` and an extended code `C` whose numerals sum to the numeral of
/// the all-ones code `1^n 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepunitDecomposition {
    pub n: usize,
    pub repunit_code: Code,
    pub a: Code,
    pub c: Code,
}

impl RepunitDecomposition {
    pub fn sum_is_exact(&self) -> bool {
        self.a.numeral() + self.c.numeral() == self.repunit_code.numeral()
    }
}

fn all_ones_zero(n: usize) -> Vec<u8> {
    let mut bits = vec![1u8; n];
    bits.push(0);
    bits
}

/// Splits `1^n 0` as `A + C` with `A = 1 0 … 0 1 0` and `C` taken from the
/// interior of the complement of `A`, followed by a 0.
///
/// For `n = 2` no code of the form `1 0 … 1 0` fits in three bits, and the
/// split is `10 + 100`.
pub fn decompose_repunit_code(n: usize) -> Result<RepunitDecomposition> {
    check_range("repunit code length", n, 2, MAX_GENERATED)?;
    let repunit_code = Code::new_unchecked(all_ones_zero(n), CodeKind::Strict);
    let (a, c) = if n == 2 {
        (vec![1, 0], vec![1, 0, 0])
    } else {
        let mut a = vec![0u8; n + 1];
        a[0] = 1;
        a[n - 1] = 1;
        let complement: Vec<u8> = a.iter().map(|&b| 1 - b).collect();
        let mut c = complement[1..n].to_vec();
        debug_assert!(code_rules_hold(&c));
        c.push(0);
        (a, c)
    };
    let out = RepunitDecomposition {
        n,
        repunit_code,
        a: Code::new_unchecked(a, CodeKind::Strict),
        c: Code::new_unchecked(c, CodeKind::Extended),
    };
    debug_assert!(out.sum_is_exact());
    Ok(out)
}

/// The other split, `1^n 0 = 1^(n−1) 0 0 + 10`. Here `C = 10` is itself a
/// strict code.
pub fn decompose_repunit_code_alt(n: usize) -> Result<RepunitDecomposition> {
    check_range("repunit code length", n, 3, MAX_GENERATED)?;
    let mut a = vec![1u8; n - 1];
    a.extend([0, 0]);
    let out = RepunitDecomposition {
        n,
        repunit_code: Code::new_unchecked(all_ones_zero(n), CodeKind::Strict),
        a: Code::new_unchecked(a, CodeKind::Strict),
        c: Code::new_unchecked(vec![1, 0], CodeKind::Strict),
    };
    debug_assert!(out.sum_is_exact());
    Ok(out)
}

/// Families of 0/1 numerals with a known code classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generated {
    /// `1 0^m 1 0`
    OneZerosOneZero(usize),
    /// `1^n 0`
    AllOnesZero(usize),
    /// `11 × uz(n)`
    ElevenTimesUndulating(usize),
    /// `uz(n)`
    Undulating(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedReport {
    pub family: Generated,
    pub numeral: BigUint,
    pub bits: Vec<u8>,
    /// Classification with strict preferred over truncated over extended.
    pub classification: Option<CodeKind>,
    /// The kind the family is known to have.
    pub claimed: CodeKind,
    pub claim_holds: bool,
}

pub fn classify_generated(family: Generated) -> Result<GeneratedReport> {
    let (bits, claimed) = match family {
        Generated::OneZerosOneZero(m) => {
            check_range("zero run", m, 0, MAX_GENERATED)?;
            let mut bits = vec![1u8];
            bits.extend(core::iter::repeat_n(0, m));
            bits.extend([1, 0]);
            (bits, CodeKind::Strict)
        }
        Generated::AllOnesZero(n) => {
            check_range("ones run", n, 1, MAX_GENERATED)?;
            (all_ones_zero(n), CodeKind::Strict)
        }
        Generated::ElevenTimesUndulating(n) => {
            check_range("undulating length", n, 1, MAX_GENERATED)?;
            let value = undulating(n)? * 11u32;
            let bits = value.to_radix_be(10);
            (bits, parity_kind(n))
        }
        Generated::Undulating(n) => {
            check_range("undulating length", n, 1, MAX_GENERATED)?;
            (undulating_bits(n), parity_kind(n))
        }
    };
    let all_binary = bits.iter().all(|&b| b <= 1);
    let classification = if all_binary {
        classify_bits(&bits)?
    } else {
        None
    };
    let claim_holds = all_binary
        && match claimed {
            CodeKind::Strict => bits.len() >= 2 && code_rules_hold(&bits),
            CodeKind::Truncated => is_truncated_code(&bits)?,
            CodeKind::Extended => bits.len() >= 2 && extended_core(&bits).is_some(),
        };
    Ok(GeneratedReport {
        family,
        numeral: numeral(&bits),
        bits,
        classification,
        claimed,
        claim_holds,
    })
}

fn parity_kind(n: usize) -> CodeKind {
    if n.is_multiple_of(2) {
        CodeKind::Strict
    } else {
        CodeKind::Truncated
    }
}

/// Fibonacci numbers with `F_1 = F_2 = 1`.
pub fn fibonacci(j: usize) -> BigUint {
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 0..j {
        let next = &a + &b;
        a = core::mem::replace(&mut b, next);
    }
    a
}

/// `F_{2k} + F_{2(k−1)} + … + F_2` for inputs of `2k + 1` digits.
///
/// Only reported next to census counts; the printed formula does not match
/// the enumerated counts under the usual indexing, so nothing asserts it.
pub fn fibonacci_even_sum(width: usize) -> Option<BigUint> {
    if width < 3 || width.is_multiple_of(2) {
        return None;
    }
    let k = (width - 1) / 2;
    Some((1..=k).map(|j| fibonacci(2 * j)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn bits(s: &str) -> Vec<u8> {
        parse_bits(s).unwrap()
    }

    #[test]
    fn code_predicate_examples() {
        assert!(is_code(&bits("110100")).unwrap());
        assert!(is_code(&bits("1010")).unwrap());
        assert!(!is_code(&bits("1000")).unwrap());
        assert!(is_code(&bits("11110")).unwrap());
        assert!(!is_code(&bits("0110")).unwrap());
        assert_eq!(is_code(&bits("1")), Err(Error::ShortCode(1)));
        assert_eq!(is_code(&[1, 2, 0]), Err(Error::InvalidBit(2)));
    }

    #[test]
    fn extended_examples() {
        assert!(is_extended_code(&bits("1100")).unwrap());
        assert!(is_extended_code(&bits("01101000")).unwrap());
        assert!(!is_extended_code(&bits("0110")).unwrap());
        // a strict code needs padding to count as extended
        assert!(!is_extended_code(&bits("110100")).unwrap());
        assert!(!is_extended_code(&bits("00010")).unwrap());
        assert!(is_extended_code(&bits("0100")).unwrap());
        assert_eq!(is_extended_code(&bits("0")), Err(Error::ShortCode(1)));
    }

    #[test]
    fn census_small_widths() {
        let c4 = enumerate_codes(4).unwrap();
        let rendered: Vec<_> = c4.codes.iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["1010", "1100", "1110"]);
        let c5 = enumerate_codes(5).unwrap();
        let rendered: Vec<_> = c5.codes.iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["10010", "11100", "11110"]);
        let counts: Vec<_> = (2..=7)
            .map(|w| enumerate_codes(w).unwrap().count())
            .collect();
        assert_eq!(counts, [1, 1, 3, 3, 8, 8]);
    }

    #[test]
    fn census_width_bounds() {
        assert!(matches!(enumerate_codes(1), Err(Error::OutOfRange { .. })));
        assert!(matches!(enumerate_codes(25), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn strategies_agree() {
        for w in 2..=16 {
            assert_eq!(
                enumerate_codes_with(w, CensusStrategy::Filter).unwrap(),
                enumerate_codes_with(w, CensusStrategy::Constructive).unwrap(),
                "width {w}"
            );
        }
    }

    #[test]
    fn repunit_and_undulating() {
        assert_eq!(repunit(1).unwrap(), BigUint::from(1u32));
        assert_eq!(repunit(4).unwrap(), BigUint::from(1111u32));
        assert_eq!(repunit(9).unwrap(), BigUint::from(111111111u32));
        assert!(repunit(0).is_err());
        assert_eq!(undulating(5).unwrap(), BigUint::from(10101u32));
        assert_eq!(undulating(11).unwrap(), BigUint::from(10101010101u64));
        assert_eq!(undulating(2).unwrap(), BigUint::from(10u32));
        assert!(undulating(0).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_repunit_code(4).unwrap();
        assert_eq!(d.repunit_code.to_string(), "11110");
        assert_eq!(d.a.to_string(), "10010");
        assert_eq!(d.c.to_string(), "1100");
        let alt = decompose_repunit_code_alt(4).unwrap();
        assert_eq!(alt.a.to_string(), "11100");
        assert_eq!(alt.c.to_string(), "10");
        assert!(alt.sum_is_exact());
        let d2 = decompose_repunit_code(2).unwrap();
        assert_eq!(
            (d2.a.to_string(), d2.c.to_string()),
            ("10".into(), "100".into())
        );
        assert!(decompose_repunit_code(1).is_err());
    }

    #[test]
    fn generated_families() {
        let r = classify_generated(Generated::AllOnesZero(4)).unwrap();
        assert_eq!(render_bits(&r.bits), "11110");
        assert_eq!(r.classification, Some(CodeKind::Strict));
        assert!(r.claim_holds);

        let r = classify_generated(Generated::ElevenTimesUndulating(2)).unwrap();
        assert_eq!(r.numeral, BigUint::from(110u32));
        assert!(r.claim_holds);
        assert_eq!(r.classification, Some(CodeKind::Strict));

        let r = classify_generated(Generated::ElevenTimesUndulating(3)).unwrap();
        assert_eq!(r.numeral, BigUint::from(1111u32));
        assert_eq!(r.claimed, CodeKind::Truncated);
        assert!(r.claim_holds);

        let r = classify_generated(Generated::OneZerosOneZero(2)).unwrap();
        assert_eq!(render_bits(&r.bits), "10010");
        assert!(r.claim_holds);

        assert!(classify_generated(Generated::Undulating(0)).is_err());
        assert!(classify_generated(Generated::AllOnesZero(MAX_GENERATED + 1)).is_err());
    }

    #[test]
    fn fibonacci_values() {
        let f: Vec<_> = (1..=10).map(fibonacci).collect();
        let expected: Vec<BigUint> = [1u32, 1, 2, 3, 5, 8, 13, 21, 34, 55]
            .into_iter()
            .map(BigUint::from)
            .collect();
        assert_eq!(f, expected);
        assert_eq!(fibonacci_even_sum(5), Some(BigUint::from(4u32)));
        assert_eq!(fibonacci_even_sum(4), None);
    }

    #[test]
    fn classify_precedence() {
        assert_eq!(
            Code::classify(bits("110")).unwrap().unwrap().kind(),
            CodeKind::Strict
        );
        assert_eq!(
            Code::classify(bits("1111")).unwrap().unwrap().kind(),
            CodeKind::Truncated
        );
        assert!(Code::classify(bits("0110")).unwrap().is_none());
        assert_eq!(
            Code::classify(bits("01100")).unwrap().unwrap().kind(),
            CodeKind::Extended
        );
        assert_eq!(
            Code::classify(bits("1001")).unwrap().unwrap().kind(),
            CodeKind::Truncated
        );
        assert!(Code::classify(bits("1011")).unwrap().is_none());
    }
}
