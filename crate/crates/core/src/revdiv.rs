//! Reverse divisors (palintuples) and permultiples.
//!
//! `x` is a reverse divisor when its fixed-width reverse is `k · x` for some
//! `2 ≤ k ≤ 9`. The two closed-form families are
//! `11 · (10^(n−2) − 1) = 10 9…9 89` with `k = 9` and twice that,
//! `21 9…9 78`, with `k = 4`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::ball::ball_witness;
use crate::codes::{self, pow10, repunit, Generated, GeneratedReport, RepunitDecomposition};
use crate::digits::{decimal_len, reverse_u64, DigitString};
use crate::error::check_range;
use crate::{Error, Result};

/// Largest digit count searched without an explicit opt-in.
pub const DEFAULT_SEARCH_DIGITS: usize = 9;
/// Largest digit count searched at all. Counts above
/// [`DEFAULT_SEARCH_DIGITS`] use the carry search.
pub const LARGE_SEARCH_DIGITS: usize = 18;
/// Largest digit count for the unpruned reference scan.
pub const UNPRUNED_SEARCH_DIGITS: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `10 9…9 89`, quotient 9
    Nine,
    /// `21 9…9 78`, quotient 4
    Four,
    Other,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Family::Nine => "nine",
            Family::Four => "four",
            Family::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RevDivRecord {
    pub value: BigUint,
    pub reverse_value: BigUint,
    pub quotient: u8,
    pub digit_count: usize,
    pub family: Family,
}

impl RevDivRecord {
    fn new(value: BigUint, quotient: u8) -> Self {
        let digit_count = decimal_len(&value);
        let reverse_value = DigitString::natural(&value).reverse().value();
        debug_assert_eq!(reverse_value, &value * quotient);
        let family = family_of(&value, digit_count);
        Self {
            value,
            reverse_value,
            quotient,
            digit_count,
            family,
        }
    }
}

fn family_of(value: &BigUint, digit_count: usize) -> Family {
    if digit_count < 4 {
        return Family::Other;
    }
    let base = nine_value(digit_count);
    if *value == base {
        Family::Nine
    } else if *value == base * 2u32 {
        Family::Four
    } else {
        Family::Other
    }
}

/// `11 · (10^(n−2) − 1)`
fn nine_value(n: usize) -> BigUint {
    (pow10(n - 2) - 1u32) * 11u32
}

/// The `k` with `reverse(n) = k · n`, if any.
pub fn reverse_quotient(n: &BigUint) -> Result<Option<u8>> {
    let x = DigitString::natural(n);
    if x.width() < 2 || x.is_palindrome() {
        return Err(Error::NotEligible);
    }
    let (q, r) = x.reverse().value().div_rem(n);
    Ok(match q.to_u8() {
        Some(k @ 2..=9) if r.is_zero() => Some(k),
        _ => None,
    })
}

/// `Some(k)` when `b = k · a` with `k ≥ 2` and both have the same digits.
pub fn is_permultiple(a: &BigUint, b: &BigUint) -> Option<u8> {
    let ten = BigUint::from(10u32);
    if *a < ten || *b < ten {
        return None;
    }
    let (q, r) = b.div_rem(a);
    if !r.is_zero() {
        return None;
    }
    let k = q.to_u8().filter(|&k| k >= 2)?;
    let sorted = |n: &BigUint| {
        let mut d = n.to_radix_le(10);
        d.sort_unstable();
        d
    };
    (sorted(a) == sorted(b)).then_some(k)
}

/// One independent slice of the pruned search space.
///
/// Candidates are `leading · 10^(n−1) + m · 10 + units` for `m` in `middle`,
/// tested against the single quotient `quotient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchCell {
    pub digit_count: u32,
    pub quotient: u8,
    pub leading: u8,
    pub units: u8,
    pub middle: Range<u64>,
}

/// `(quotient, leading, units)` combinations that can produce a reverse
/// divisor.
///
/// `k · x` has as many digits as `x`, so the leading digit is at most `9 / k`.
/// The units digit of `k · x` is the leading digit of `x`, and the leading
/// digit of `k · x` (the units digit of `x`) is at least `k` times it.
pub fn candidate_prefixes() -> Vec<(u8, u8, u8)> {
    let mut out = Vec::new();
    for k in 2..=9u8 {
        for a in 1..=9 / k {
            for u in 0..=9u8 {
                if (k * u) % 10 == a && u >= k * a {
                    out.push((k, a, u));
                }
            }
        }
    }
    out
}

fn check_search_digits(digit_count: usize, allow_large: bool) -> Result<()> {
    let max = if allow_large {
        LARGE_SEARCH_DIGITS
    } else {
        DEFAULT_SEARCH_DIGITS
    };
    check_range("digit count", digit_count, 2, max)
}

/// Splits the pruned space into cells of at most `chunk` middle values, in a
/// fixed order. Only digit counts up to [`DEFAULT_SEARCH_DIGITS`] are scanned
/// this way.
pub fn search_cells(digit_count: usize, chunk: u64) -> Result<Vec<SearchCell>> {
    check_range("digit count", digit_count, 2, DEFAULT_SEARCH_DIGITS)?;
    let chunk = chunk.max(1);
    let middle_len = 10u64.pow(digit_count as u32 - 2);
    let mut cells = Vec::new();
    for (quotient, leading, units) in candidate_prefixes() {
        let mut start = 0;
        while start < middle_len {
            let end = (start + chunk).min(middle_len);
            cells.push(SearchCell {
                digit_count: digit_count as u32,
                quotient,
                leading,
                units,
                middle: start..end,
            });
            start = end;
        }
    }
    Ok(cells)
}

/// Reverse divisors inside one cell, ascending.
pub fn scan_cell(cell: &SearchCell) -> Vec<u64> {
    let n = cell.digit_count;
    let k = u64::from(cell.quotient);
    let base = u64::from(cell.leading) * 10u64.pow(n - 1) + u64::from(cell.units);
    cell.middle
        .clone()
        .map(|m| base + m * 10)
        .filter(|&x| reverse_u64(x, n) == k * x)
        .collect()
}

/// Turns raw hits into sorted records.
pub fn collect_hits(
    digit_count: usize,
    hits: impl IntoIterator<Item = (u64, u8)>,
) -> Vec<RevDivRecord> {
    let mut out: Vec<RevDivRecord> = hits
        .into_iter()
        .map(|(x, k)| {
            let rec = RevDivRecord::new(BigUint::from(x), k);
            debug_assert_eq!(rec.digit_count, digit_count);
            rec
        })
        .collect();
    out.sort_by(|a, b| a.value.cmp(&b.value));
    out.dedup();
    out
}

/// All `digit_count`-digit reverse divisors, ascending.
///
/// Up to [`DEFAULT_SEARCH_DIGITS`] digits this scans the pruned space; above
/// that it needs `allow_large` and runs [`carry_search`] instead.
pub fn search_reverse_divisors(digit_count: usize, allow_large: bool) -> Result<Vec<RevDivRecord>> {
    check_search_digits(digit_count, allow_large)?;
    if digit_count > DEFAULT_SEARCH_DIGITS {
        return search_by_carries(digit_count);
    }
    let cells = search_cells(digit_count, u64::MAX)?;
    let hits = cells
        .iter()
        .flat_map(|c| scan_cell(c).into_iter().map(move |x| (x, c.quotient)));
    Ok(collect_hits(digit_count, hits))
}

/// All reverse divisors found by [`carry_search`] over every quotient and
/// units digit.
pub fn search_by_carries(digit_count: usize) -> Result<Vec<RevDivRecord>> {
    check_range("digit count", digit_count, 2, LARGE_SEARCH_DIGITS)?;
    let hits = (2..=9u8).flat_map(|k| {
        (0..=9u8).flat_map(move |u| {
            carry_search(digit_count, k, u)
                .into_iter()
                .map(move |x| (x, k))
        })
    });
    Ok(collect_hits(digit_count, hits))
}

/// `digit_count`-digit numbers `x` with units digit `units` and
/// `reverse(x) = k · x`, ascending.
///
/// Works inwards from both ends of `k · x`, one digit pair at a time. At the
/// low end the carry is known and fixes the partner digit; at the high end
/// the carry coming up from below is whatever makes the column balance, and
/// it must lie in `0..k`. The two carries must agree where the ends meet.
pub fn carry_search(digit_count: usize, k: u8, units: u8) -> Vec<u64> {
    assert!((2..=LARGE_SEARCH_DIGITS).contains(&digit_count) && (2..=9).contains(&k) && units <= 9);
    let mut digits = [0u8; LARGE_SEARCH_DIGITS];
    let mut out = Vec::new();
    let n = digit_count;
    let step = |d_lo: u8, c_lo: u8, c_hi_out: u8| -> Option<(u8, u8, u8)> {
        let t = k * d_lo + c_lo;
        let d_hi = t % 10;
        let c_hi_in = i16::from(d_lo) + 10 * i16::from(c_hi_out) - i16::from(k) * i16::from(d_hi);
        (0..i16::from(k))
            .contains(&c_hi_in)
            .then_some((d_hi, t / 10, c_hi_in as u8))
    };
    let (d_hi, c_lo, c_hi) = match step(units, 0, 0) {
        Some(s) if s.0 != 0 => s,
        _ => return out,
    };
    digits[0] = units;
    digits[n - 1] = d_hi;
    pairs(&mut digits[..n], 1, c_lo, c_hi, k, &step, &mut out);
    out.sort_unstable();
    out
}

fn pairs(
    digits: &mut [u8],
    i: usize,
    c_lo: u8,
    c_hi: u8,
    k: u8,
    step: &impl Fn(u8, u8, u8) -> Option<(u8, u8, u8)>,
    out: &mut Vec<u64>,
) {
    let n = digits.len();
    let value = |d: &[u8]| d.iter().rev().fold(0u64, |acc, &x| acc * 10 + u64::from(x));
    if 2 * i == n {
        if c_lo == c_hi {
            out.push(value(digits));
        }
        return;
    }
    if 2 * i + 1 == n {
        for m in 0..=9u8 {
            if k * m + c_lo == m + 10 * c_hi {
                digits[i] = m;
                out.push(value(digits));
            }
        }
        return;
    }
    for d in 0..=9u8 {
        if let Some((d_hi, next_lo, next_hi)) = step(d, c_lo, c_hi) {
            digits[i] = d;
            digits[n - 1 - i] = d_hi;
            pairs(digits, i + 1, next_lo, next_hi, k, step, out);
        }
    }
}

/// Reference scan of every `digit_count`-digit number, without pruning.
pub fn search_unpruned(digit_count: usize) -> Result<Vec<RevDivRecord>> {
    check_range("digit count", digit_count, 2, UNPRUNED_SEARCH_DIGITS)?;
    let n = digit_count as u32;
    let hits = (10u64.pow(n - 1)..10u64.pow(n)).filter_map(|x| {
        let r = reverse_u64(x, n);
        (r != x && r.is_multiple_of(x) && (2..=9).contains(&(r / x))).then(|| (x, (r / x) as u8))
    });
    Ok(collect_hits(digit_count, hits))
}

pub fn closed_form(family: Family, n: usize) -> Result<RevDivRecord> {
    check_range("digit count", n, 4, codes::MAX_GENERATED)?;
    let nine = nine_value(n);
    let (value, k) = match family {
        Family::Nine => (nine, 9),
        Family::Four => (nine * 2u32, 4),
        Family::Other => return Err(Error::NotReverseDivisor("the other family")),
    };
    Ok(RevDivRecord::new(value, k))
}

/// Rendered closed-form values next to the digit patterns they should match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternReport {
    pub family: Family,
    pub n: usize,
    pub value: String,
    pub value_pattern: String,
    pub reverse: String,
    /// Decimal rendering of `k · value`.
    pub multiple: String,
    pub reverse_pattern: String,
}

impl PatternReport {
    pub fn holds(&self) -> bool {
        self.value == self.value_pattern
            && self.reverse == self.reverse_pattern
            && self.multiple == self.reverse_pattern
    }
}

fn pattern(head: &str, nines: usize, tail: &str) -> String {
    let mut s = String::with_capacity(head.len() + nines + tail.len());
    s.push_str(head);
    s.extend(core::iter::repeat_n('9', nines));
    s.push_str(tail);
    s
}

pub fn check_closed_form_pattern(family: Family, n: usize) -> Result<PatternReport> {
    let rec = closed_form(family, n)?;
    let (vh, vt, rh, rt) = match family {
        Family::Nine => ("10", "89", "98", "01"),
        Family::Four => ("21", "78", "87", "12"),
        Family::Other => unreachable!("closed_form rejects Other"),
    };
    let value = DigitString::natural(&rec.value);
    Ok(PatternReport {
        family,
        n,
        value: alloc::format!("{value}"),
        value_pattern: pattern(vh, n - 4, vt),
        reverse: alloc::format!("{}", value.reverse()),
        multiple: (&rec.value * rec.quotient).to_str_radix(10),
        reverse_pattern: pattern(rh, n - 4, rt),
    })
}

/// `D = 11 · (10^n − 1) = 99 · R_n` with its four checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MagicReverseDivisor {
    pub n: usize,
    pub value: BigUint,
    /// `1^n 0` is a strict code and `D` has a Ball witness
    pub is_ball_number: bool,
    /// `D + reverse(D) = 10 · D`
    pub tenfold_sum: bool,
    /// `reverse_quotient(D) = 9`
    pub quotient_nine: bool,
    /// `reverse_quotient(2D) = 4`
    pub double_quotient_four: bool,
}

impl MagicReverseDivisor {
    pub fn passed(&self) -> bool {
        self.is_ball_number && self.tenfold_sum && self.quotient_nine && self.double_quotient_four
    }
}

pub fn magic_reverse_divisor(n: usize) -> Result<MagicReverseDivisor> {
    check_range("repunit length", n, 2, codes::MAX_GENERATED)?;
    let value = (pow10(n) - 1u32) * 11u32;
    debug_assert_eq!(value, repunit(n)? * 99u32);
    let code_ok = codes::classify_generated(Generated::AllOnesZero(n))?.claim_holds;
    let is_ball_number = code_ok && ball_witness(&value).is_some();
    let reverse = DigitString::natural(&value).reverse().value();
    let tenfold_sum = &value + &reverse == &value * 10u32;
    let quotient_nine = reverse_quotient(&value)? == Some(9);
    let double_quotient_four = reverse_quotient(&(&value * 2u32))? == Some(4);
    Ok(MagicReverseDivisor {
        n,
        value,
        is_ball_number,
        tenfold_sum,
        quotient_nine,
        double_quotient_four,
    })
}

/// `D = 99 · R_n` written as `B1 + B2` with `B1 = 99 · trunc(A)` and
/// `B2 = 99 · trunc(C)` for a code split `1^n 0 = A + C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumDecomposition {
    pub d: BigUint,
    pub b1: BigUint,
    pub b2: BigUint,
    pub codes: RepunitDecomposition,
}

impl SumDecomposition {
    fn from_codes(codes: RepunitDecomposition) -> Result<Self> {
        let d = repunit(codes.n)? * 99u32;
        let b1 = codes.a.truncated_numeral() * 99u32;
        let b2 = codes.c.truncated_numeral() * 99u32;
        Ok(Self { d, b1, b2, codes })
    }

    pub fn sum_is_exact(&self) -> bool {
        &self.b1 + &self.b2 == self.d
    }

    /// Both summands are Ball numbers, checked by constructing inputs.
    pub fn summands_are_ball_numbers(&self) -> bool {
        ball_witness(&self.b1).is_some() && ball_witness(&self.b2).is_some()
    }
}

pub fn sum_decomposition(n: usize) -> Result<SumDecomposition> {
    SumDecomposition::from_codes(codes::decompose_repunit_code(n)?)
}

pub fn sum_decomposition_alt(n: usize) -> Result<SumDecomposition> {
    SumDecomposition::from_codes(codes::decompose_repunit_code_alt(n)?)
}

/// Magic divisors of `D = 11 · (10^(2^n) − 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Power2Divisors {
    pub d: BigUint,
    /// `99 · (10^(2^m) + 1)` for `m = 0..n`, then `D` itself.
    pub divisors: Vec<BigUint>,
    pub all_divide: bool,
    pub all_magic: bool,
}

/// Largest `n` accepted by [`power2_magic_divisors`].
pub const MAX_POWER2_EXPONENT: usize = 12;

pub fn power2_magic_divisors(n: usize) -> Result<Power2Divisors> {
    check_range("exponent", n, 2, MAX_POWER2_EXPONENT)?;
    let d = (pow10(1 << n) - 1u32) * 11u32;
    let mut divisors: Vec<BigUint> = (0..n).map(|m| (pow10(1 << m) + 1u32) * 99u32).collect();
    divisors.push(d.clone());
    let all_divide = divisors.iter().all(|b| d.is_multiple_of(b));
    // 10^(2^m) + 1 is the truncated code 1 0…0 1 of 1 0…0 1 0
    let all_magic = divisors.iter().all(|b| {
        let t = b / 99u32;
        codes::is_truncated_code(&t.to_radix_be(10)).unwrap_or(false) && ball_witness(b).is_some()
    });
    Ok(Power2Divisors {
        d,
        divisors,
        all_divide,
        all_magic,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UzSeed {
    S1089,
    S2178,
}

impl UzSeed {
    pub fn value(self) -> u32 {
        match self {
            UzSeed::S1089 => 1089,
            UzSeed::S2178 => 2178,
        }
    }

    fn quotient(self) -> u8 {
        match self {
            UzSeed::S1089 => 9,
            UzSeed::S2178 => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UzReport {
    pub n: usize,
    pub seed: UzSeed,
    pub value: BigUint,
    pub eleven_uz: GeneratedReport,
    /// An input whose Ball value is `value`, when one exists.
    pub ball_witness: Option<DigitString>,
    pub reverse_quotient: Option<u8>,
    /// Quotient expected for odd `n`.
    pub expected_quotient: Option<u8>,
}

impl UzReport {
    /// `1089 · uz(n)` is a Ball number for every `n`; for odd `n` both seeds
    /// give reverse divisors with their seed's quotient.
    pub fn claims_hold(&self) -> bool {
        let ball_ok = match self.seed {
            UzSeed::S1089 => self.eleven_uz.claim_holds && self.ball_witness.is_some(),
            UzSeed::S2178 => true,
        };
        let rd_ok = self
            .expected_quotient
            .is_none_or(|k| self.reverse_quotient == Some(k));
        ball_ok && rd_ok
    }
}

pub fn uz_family(n: usize, seed: UzSeed) -> Result<UzReport> {
    check_range("undulating length", n, 2, codes::MAX_GENERATED)?;
    let value = codes::undulating(n)? * seed.value();
    let eleven_uz = codes::classify_generated(Generated::ElevenTimesUndulating(n))?;
    let reverse_quotient = match reverse_quotient(&value) {
        Ok(k) => k,
        Err(Error::NotEligible) => None,
        Err(e) => return Err(e),
    };
    Ok(UzReport {
        n,
        seed,
        ball_witness: ball_witness(&value),
        value,
        eleven_uz,
        reverse_quotient,
        expected_quotient: (n % 2 == 1).then(|| seed.quotient()),
    })
}
