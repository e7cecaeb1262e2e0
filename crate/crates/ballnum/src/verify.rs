//! Named verification suites with per-claim tallies.

use std::collections::BTreeSet;
use std::fmt;

use ballnum_core::ball::{ball_number, ball_witness, borrow_mask_u64, verify_ball_identity};
use ballnum_core::codes::{
    decompose_repunit_code, enumerate_codes_with, is_code, CensusStrategy, CodeCensus,
};
use ballnum_core::digits::DigitString;
use ballnum_core::revdiv::{
    check_closed_form_pattern, closed_form, magic_reverse_divisor, power2_magic_divisors,
    search_by_carries, search_unpruned, sum_decomposition, uz_family, Family, RevDivRecord, UzSeed,
    DEFAULT_SEARCH_DIGITS, UNPRUNED_SEARCH_DIGITS,
};
use ballnum_core::squares::{
    check_nonsquare_families, product_square_report, repunit_gcd, square_repdigits, ProductKind,
};
use ballnum_core::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::parallel;

/// Seed for the random Ball sweep.
pub const BALL99_SEED: u64 = 0x00b4_1199;
pub const BALL99_SAMPLES: usize = 100_000;
pub const BALL99_WIDTHS: std::ops::RangeInclusive<usize> = 2..=12;
pub const CENSUS_MAX_WIDTH: usize = 16;
pub const ORACLE_MAX_WIDTH: usize = 7;
pub const CENSUS_PREFIX: [usize; 6] = [1, 1, 3, 3, 8, 8];
pub const GCD_MAX_INDEX: usize = 60;
pub const NONSQUARE_MAX_N: usize = 200;
pub const DECOMPOSE_MAX_N: usize = 20;
pub const PATTERN_MAX_N: usize = 50;
pub const POWER2_EXPONENTS: std::ops::RangeInclusive<usize> = 2..=4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ball99,
    Census,
    RevdivComplete,
    Squares,
    Decompose,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "ball99",
        "census",
        "revdiv-complete",
        "squares",
        "decompose",
        "all",
    ];
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "ball99" => Suite::Ball99,
            "census" => Suite::Census,
            "revdiv-complete" => Suite::RevdivComplete,
            "squares" => Suite::Squares,
            "decompose" => Suite::Decompose,
            "all" => Suite::All,
            _ => {
                return Err(format!(
                    "unknown suite `{s}` (expected one of {})",
                    Suite::NAMES.join(", ")
                ))
            }
        })
    }
}

/// Checks and failures for one claim. `first_failure` describes the first
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tally {
    pub claim: String,
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

impl Tally {
    pub fn new(claim: impl Into<String>) -> Self {
        Tally {
            claim: claim.into(),
            checked: 0,
            failed: 0,
            first_failure: None,
        }
    }

    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok  " } else { "FAIL" };
        write!(
            f,
            "{status} {}: {}/{} passed",
            self.claim,
            self.checked - self.failed,
            self.checked
        )?;
        if let Some(w) = &self.first_failure {
            write!(f, " (first failure: {w})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub tallies: Vec<Tally>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.tallies.iter().all(Tally::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}]", self.suite)?;
        for t in &self.tallies {
            writeln!(f, "  {t}")?;
        }
        write!(f, "  => {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

pub fn run(suite: Suite, workers: usize) -> Vec<SuiteReport> {
    match suite {
        Suite::Ball99 => vec![ball99(BALL99_SAMPLES, BALL99_SEED)],
        Suite::Census => vec![census(workers)],
        Suite::RevdivComplete => vec![revdiv_complete(workers)],
        Suite::Squares => vec![squares(workers)],
        Suite::Decompose => vec![decompose()],
        Suite::All => vec![
            ball99(BALL99_SAMPLES, BALL99_SEED),
            census(workers),
            revdiv_complete(workers),
            squares(workers),
            decompose(),
        ],
    }
}

/// A uniformly random non-palindromic natural number of `width` digits.
pub fn random_non_palindrome(rng: &mut impl Rng, width: usize) -> DigitString {
    loop {
        let mut digits: Vec<u8> = (0..width).map(|_| rng.gen_range(0..10)).collect();
        digits[width - 1] = rng.gen_range(1..10);
        let x = DigitString::from_digits_lsf(digits).expect("width ≥ 1");
        if !x.is_palindrome() {
            return x;
        }
    }
}

pub fn ball99(samples: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut multiple = Tally::new("B mod 99 = 0");
    let mut factor = Tally::new("B = 99 × truncated code");
    let mut identity = Tally::new("B recomputed from plain values");
    let mut swap = Tally::new("x and x′ give the same B and code");
    for _ in 0..samples {
        let width = rng.gen_range(BALL99_WIDTHS);
        let x = random_non_palindrome(&mut rng, width);
        let r = ball_number(&x).expect("non-palindrome");
        multiple.record((&r.ball_value % 99u32) == BigUint::ZERO, || x.to_string());
        factor.record(r.ball_value == &r.truncated_code_value * 99u32, || {
            x.to_string()
        });
        identity.record(verify_ball_identity(&x).is_ok_and(|i| i.passed()), || {
            x.to_string()
        });
        let s = ball_number(&x.reverse()).expect("non-palindrome");
        swap.record(s.ball_value == r.ball_value && s.code == r.code, || {
            x.to_string()
        });
    }
    SuiteReport {
        suite: "ball99",
        tallies: vec![multiple, factor, identity, swap],
    }
}

/// Codes produced by the borrow recursion on every `width`-digit input with
/// leading digit above its trailing digit.
pub fn subtraction_codes(width: usize) -> BTreeSet<Vec<u8>> {
    let w = width as u32;
    let lo = 10u64.pow(w - 1);
    let masks: BTreeSet<u64> = (lo..lo * 10)
        .filter(|x| x / lo > x % 10)
        .map(|x| borrow_mask_u64(x, w))
        .collect();
    masks
        .into_iter()
        .map(|m| (0..width).map(|i| ((m >> i) & 1) as u8).collect())
        .collect()
}

/// Bit strings of one width accepted by the code predicate.
pub fn predicate_codes(width: usize) -> BTreeSet<Vec<u8>> {
    (0..1u64 << width)
        .map(|m| {
            (0..width)
                .map(|i| ((m >> i) & 1) as u8)
                .collect::<Vec<u8>>()
        })
        .filter(|b| is_code(b).unwrap_or(false))
        .collect()
}

pub fn census(workers: usize) -> SuiteReport {
    let mut oracle = Tally::new(format!(
        "predicate = borrow recursion, widths 2..={ORACLE_MAX_WIDTH}"
    ));
    for w in 2..=ORACLE_MAX_WIDTH {
        oracle.record(predicate_codes(w) == subtraction_codes(w), || {
            format!("width {w}")
        });
    }
    let censuses: Vec<CodeCensus> = (2..=CENSUS_MAX_WIDTH)
        .map(|w| parallel::enumerate_codes(w, workers).expect("width in range"))
        .collect();
    let counts: Vec<usize> = censuses.iter().map(CodeCensus::count).collect();
    let mut prefix = Tally::new(format!("counts begin {CENSUS_PREFIX:?}"));
    prefix.record(counts[..CENSUS_PREFIX.len()] == CENSUS_PREFIX, || {
        format!("{counts:?}")
    });
    let mut pairs = Tally::new("count(2k) = count(2k + 1)");
    for w in (2..CENSUS_MAX_WIDTH).step_by(2) {
        let (a, b) = (counts[w - 2], counts[w - 1]);
        pairs.record(a == b, || format!("widths {w}, {}: {a} vs {b}", w + 1));
    }
    let mut strategies = Tally::new("filter census = constructive census");
    let mut witnesses = Tally::new("every strict code is attained");
    for c in &censuses {
        let built =
            enumerate_codes_with(c.width, CensusStrategy::Constructive).expect("width in range");
        strategies.record(built == *c, || format!("width {}", c.width));
        for code in &c.codes {
            let b = code.truncated_numeral() * 99u32;
            let ok = ball_witness(&b)
                .and_then(|x| ball_number(&x).ok())
                .is_some_and(|r| r.code == *code && r.ball_value == b);
            witnesses.record(ok, || code.to_string());
        }
    }
    SuiteReport {
        suite: "census",
        tallies: vec![oracle, prefix, pairs, strategies, witnesses],
    }
}

/// Reverse divisors with `n` digits for `2 ≤ n ≤ 9`, from the parallel search.
pub fn searched_reverse_divisors(workers: usize) -> Vec<(usize, Vec<RevDivRecord>)> {
    (2..=DEFAULT_SEARCH_DIGITS)
        .map(|n| {
            (
                n,
                parallel::search_reverse_divisors(n, false, workers).expect("n in range"),
            )
        })
        .collect()
}

/// The closed-form pair for `n ≥ 4`, empty below.
pub fn expected_reverse_divisors(n: usize) -> Vec<RevDivRecord> {
    if n < 4 {
        return Vec::new();
    }
    vec![
        closed_form(Family::Nine, n).expect("n ≥ 4"),
        closed_form(Family::Four, n).expect("n ≥ 4"),
    ]
}

pub fn revdiv_complete(workers: usize) -> SuiteReport {
    let found = searched_reverse_divisors(workers);
    let mut contains = Tally::new("search finds both closed forms");
    let mut exact = Tally::new("search finds nothing else");
    let mut quotients = Tally::new("quotient is 4 or 9");
    let mut reference = Tally::new(format!("pruned = unpruned, n ≤ {UNPRUNED_SEARCH_DIGITS}"));
    let mut carries = Tally::new("carry search = pruned scan");
    for (n, recs) in &found {
        let expected = expected_reverse_divisors(*n);
        contains.record(expected.iter().all(|e| recs.contains(e)), || {
            format!("n = {n}")
        });
        exact.record(*recs == expected, || {
            let extra: Vec<String> = recs
                .iter()
                .filter(|r| !expected.contains(r))
                .map(|r| format!("{} (k={})", r.value, r.quotient))
                .collect();
            format!("n = {n}: extra {}", extra.join(", "))
        });
        for r in recs {
            quotients.record(r.quotient == 4 || r.quotient == 9, || r.value.to_string());
        }
        carries.record(search_by_carries(*n).as_ref() == Ok(recs), || {
            format!("n = {n}")
        });
        if *n <= UNPRUNED_SEARCH_DIGITS {
            reference.record(search_unpruned(*n).as_ref() == Ok(recs), || {
                format!("n = {n}")
            });
        }
    }
    SuiteReport {
        suite: "revdiv-complete",
        tallies: vec![contains, exact, quotients, reference, carries],
    }
}

pub fn squares(workers: usize) -> SuiteReport {
    let mut families = Tally::new(format!(
        "10^n − 1 ≡ 3 mod 4 and neither it nor R_n is square, n ≤ {NONSQUARE_MAX_N}"
    ));
    let r = check_nonsquare_families(NONSQUARE_MAX_N).expect("n_max ≥ 2");
    families.record(r.passed(), || format!("{r:?}"));
    let mut gcd = Tally::new(format!(
        "gcd(R_m, R_n) = R_gcd(m, n), indices ≤ {GCD_MAX_INDEX}"
    ));
    for m in 1..=GCD_MAX_INDEX {
        for n in 1..=m {
            let g = repunit_gcd(m, n).expect("indices ≥ 1");
            gcd.record(g.identity_holds && g.remainder_step_holds, || {
                format!("({m}, {n})")
            });
        }
    }
    let mut repunit_products = Tally::new("R_m · R_n and (10^m − 1)(10^n − 1) are not squares");
    for m in 3..=GCD_MAX_INDEX {
        for n in 2..m {
            for kind in [
                ProductKind::RepunitPair { m, n },
                ProductKind::PowerPair { m, n },
            ] {
                let ok = product_square_report(kind).is_ok_and(|p| p.holds());
                repunit_products.record(ok, || format!("({m}, {n})"));
            }
        }
    }
    let all: Vec<BigUint> = searched_reverse_divisors(workers)
        .into_iter()
        .flat_map(|(_, recs)| recs)
        .map(|r| r.value)
        .collect();
    let mut own = Tally::new("D × reverse(D) is a square, D ≤ 9 digits");
    let mut pairs = Tally::new("products of distinct reverse divisors are not squares");
    for (i, a) in all.iter().enumerate() {
        let ok = product_square_report(ProductKind::RevDivSelf(a.clone())).is_ok_and(|p| p.holds());
        own.record(ok, || a.to_string());
        for b in &all[i + 1..] {
            let ok = product_square_report(ProductKind::RevDivPair(a.clone(), b.clone()))
                .is_ok_and(|p| p.holds());
            pairs.record(ok, || format!("{a} × {b}"));
        }
    }
    let mut repdigits = Tally::new("no repdigit of 2..=60 digits is a square");
    let sq = square_repdigits(60);
    repdigits.record(sq.is_empty(), || format!("{sq:?}"));
    SuiteReport {
        suite: "squares",
        tallies: vec![families, gcd, repunit_products, own, pairs, repdigits],
    }
}

pub fn decompose() -> SuiteReport {
    let mut split = Tally::new(format!(
        "repunit code = code + extended code, n ≤ {DECOMPOSE_MAX_N}"
    ));
    let mut magic = Tally::new("D = 99 · R_n: D + D′ = 10D, k(D) = 9, k(2D) = 4");
    let mut summands = Tally::new("D is a sum of two Ball numbers");
    for n in 2..=DECOMPOSE_MAX_N {
        split.record(
            decompose_repunit_code(n).is_ok_and(|d| d.sum_is_exact()),
            || format!("n = {n}"),
        );
        magic.record(magic_reverse_divisor(n).is_ok_and(|m| m.passed()), || {
            format!("n = {n}")
        });
        let ok =
            sum_decomposition(n).is_ok_and(|s| s.sum_is_exact() && s.summands_are_ball_numbers());
        summands.record(ok, || format!("n = {n}"));
    }
    let mut patterns = Tally::new(format!(
        "closed-form digit patterns, 4 ≤ n ≤ {PATTERN_MAX_N}"
    ));
    for n in 4..=PATTERN_MAX_N {
        for family in [Family::Nine, Family::Four] {
            let ok = check_closed_form_pattern(family, n).is_ok_and(|p| p.holds());
            patterns.record(ok, || format!("{family}, n = {n}"));
        }
    }
    let mut power2 = Tally::new("99 · (10^(2^m) + 1) divides 11 · (10^(2^n) − 1) and is magic");
    for n in POWER2_EXPONENTS {
        let ok = power2_magic_divisors(n).is_ok_and(|p| p.all_divide && p.all_magic);
        power2.record(ok, || format!("n = {n}"));
    }
    let mut uz = Tally::new("1089 · uz(n) is magic; odd n gives reverse divisors");
    for n in 2..=DECOMPOSE_MAX_N {
        for seed in [UzSeed::S1089, UzSeed::S2178] {
            uz.record(uz_family(n, seed).is_ok_and(|r| r.claims_hold()), || {
                format!("{seed:?}, n = {n}")
            });
        }
    }
    SuiteReport {
        suite: "decompose",
        tallies: vec![split, magic, summands, patterns, power2, uz],
    }
}
