//! Exact square certification for repunits, `10^n − 1` and products of
//! reverse divisors.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::codes::{pow10, repunit};
use crate::error::check_range;
use crate::revdiv::reverse_quotient;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareReport {
    pub value: BigUint,
    pub is_square: bool,
    /// `⌊√value⌋`
    pub root: BigUint,
    /// `root²`
    pub lower: BigUint,
    /// `(root + 1)²`
    pub upper: BigUint,
}

impl SquareReport {
    pub fn bracket_holds(&self) -> bool {
        self.lower <= self.value
            && self.value < self.upper
            && self.is_square == (self.lower == self.value)
    }
}

/// Floor square root by Newton's iteration on integers.
pub fn isqrt(n: &BigUint) -> BigUint {
    if *n < BigUint::from(2u32) {
        return n.clone();
    }
    // 2^⌈bits/2⌉ is at least √n, and the iteration decreases from above
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1u32;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn integer_sqrt(n: &BigUint) -> SquareReport {
    let root = isqrt(n);
    let lower = &root * &root;
    let next = &root + 1u32;
    let upper = &next * &next;
    SquareReport {
        is_square: lower == *n,
        value: n.clone(),
        root,
        lower,
        upper,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonSquareReport {
    pub n_max: usize,
    /// `n` where `10^n − 1 mod 4 ≠ 3`
    pub residue_failures: Vec<usize>,
    /// `n` where `10^n − 1` or `R_n` turned out square
    pub square_failures: Vec<usize>,
}

impl NonSquareReport {
    pub fn passed(&self) -> bool {
        self.residue_failures.is_empty() && self.square_failures.is_empty()
    }
}

/// Checks `10^n − 1 ≡ 3 (mod 4)` and that neither `10^n − 1` nor `R_n` is a
/// square, for `2 ≤ n ≤ n_max`.
pub fn check_nonsquare_families(n_max: usize) -> Result<NonSquareReport> {
    check_range("n_max", n_max, 2, usize::MAX)?;
    let four = BigUint::from(4u32);
    let mut residue_failures = Vec::new();
    let mut square_failures = Vec::new();
    for n in 2..=n_max {
        let nines = pow10(n) - 1u32;
        if &nines % &four != BigUint::from(3u32) {
            residue_failures.push(n);
        }
        if integer_sqrt(&nines).is_square || integer_sqrt(&repunit(n)?).is_square {
            square_failures.push(n);
        }
    }
    Ok(NonSquareReport {
        n_max,
        residue_failures,
        square_failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepunitGcd {
    pub m: usize,
    pub n: usize,
    pub gcd: BigUint,
    /// `gcd(R_m, R_n) = R_gcd(m, n)`
    pub identity_holds: bool,
    /// `R_max mod R_min = R_(max mod min)`, the step that lets Euclid run on
    /// the indices.
    pub remainder_step_holds: bool,
}

fn euclid(a: &BigUint, b: &BigUint) -> BigUint {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = &a % &b;
        a = core::mem::replace(&mut b, r);
    }
    a
}

fn repunit_or_zero(n: usize) -> BigUint {
    if n == 0 {
        BigUint::zero()
    } else {
        repunit(n).expect("n ≥ 1")
    }
}

pub fn repunit_gcd(m: usize, n: usize) -> Result<RepunitGcd> {
    check_range("repunit index", m, 1, usize::MAX)?;
    check_range("repunit index", n, 1, usize::MAX)?;
    let (rm, rn) = (repunit(m)?, repunit(n)?);
    let gcd = euclid(&rm, &rn);
    let identity_holds = gcd == repunit(m.gcd(&n))?;
    let (hi, lo) = if m >= n { (m, n) } else { (n, m) };
    let (r_hi, r_lo) = if m >= n { (&rm, &rn) } else { (&rn, &rm) };
    let remainder_step_holds = r_hi % r_lo == repunit_or_zero(hi % lo);
    Ok(RepunitGcd {
        m,
        n,
        gcd,
        identity_holds,
        remainder_step_holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductKind {
    /// `R_m · R_n`, `m > n > 1`
    RepunitPair { m: usize, n: usize },
    /// `(10^m − 1)(10^n − 1)`, `m > n > 1`
    PowerPair { m: usize, n: usize },
    /// product of two distinct reverse divisors
    RevDivPair(BigUint, BigUint),
    /// `D · reverse(D)` for a reverse divisor `D`
    RevDivSelf(BigUint),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub kind: ProductKind,
    pub product: BigUint,
    pub sqrt: SquareReport,
    /// Only the self product is expected to be a square.
    pub expect_square: bool,
}

impl ProductReport {
    pub fn holds(&self) -> bool {
        self.sqrt.is_square == self.expect_square && self.sqrt.bracket_holds()
    }
}

fn check_pair(m: usize, n: usize) -> Result<()> {
    check_range("smaller index", n, 2, usize::MAX)?;
    check_range("larger index", m, n + 1, usize::MAX)
}

fn require_reverse_divisor(d: &BigUint) -> Result<u8> {
    match reverse_quotient(d) {
        Ok(Some(k)) => Ok(k),
        _ => Err(Error::NotReverseDivisor("operand")),
    }
}

pub fn product_square_report(kind: ProductKind) -> Result<ProductReport> {
    let (product, expect_square) = match &kind {
        ProductKind::RepunitPair { m, n } => {
            check_pair(*m, *n)?;
            (repunit(*m)? * repunit(*n)?, false)
        }
        ProductKind::PowerPair { m, n } => {
            check_pair(*m, *n)?;
            ((pow10(*m) - 1u32) * (pow10(*n) - 1u32), false)
        }
        ProductKind::RevDivPair(a, b) => {
            if a == b {
                return Err(Error::IdenticalPair);
            }
            require_reverse_divisor(a)?;
            require_reverse_divisor(b)?;
            (a * b, false)
        }
        ProductKind::RevDivSelf(d) => {
            let k = require_reverse_divisor(d)?;
            (d * d * k, true)
        }
    };
    Ok(ProductReport {
        sqrt: integer_sqrt(&product),
        product,
        kind,
        expect_square,
    })
}

/// Repdigits `dd…d` with `2 ≤ len ≤ max_len` digits that are perfect squares.
pub fn square_repdigits(max_len: usize) -> Vec<BigUint> {
    let mut out = Vec::new();
    for len in 2..=max_len {
        let r = repunit(len).expect("len ≥ 2");
        for d in 1..=9u32 {
            let v = &r * d;
            if integer_sqrt(&v).is_square {
                out.push(v);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn sqrt_examples() {
        let r = integer_sqrt(&big(1089));
        assert_eq!(r.root, big(33));
        assert!(r.is_square && r.bracket_holds());
        let r = integer_sqrt(&big(999));
        assert_eq!(
            (r.root.clone(), r.lower.clone(), r.upper.clone()),
            (big(31), big(961), big(1024))
        );
        assert!(!r.is_square && r.bracket_holds());
        let r = integer_sqrt(&big(0));
        assert_eq!(r.root, big(0));
        assert!(r.is_square);
        assert!(integer_sqrt(&big(1)).is_square);
        assert_eq!(integer_sqrt(&big(3)).root, big(1));
    }

    #[test]
    fn sqrt_matches_num_integer() {
        for v in (0u64..5000).chain([u64::MAX, u64::MAX - 1, 1 << 62]) {
            assert_eq!(isqrt(&big(v)), num_integer::Roots::sqrt(&big(v)), "{v}");
        }
    }

    #[test]
    fn nonsquare_families() {
        let r = check_nonsquare_families(200).unwrap();
        assert!(r.passed());
        assert!(check_nonsquare_families(1).is_err());
        assert!(!integer_sqrt(&repunit(5).unwrap()).is_square);
    }

    #[test]
    fn gcd_examples() {
        let g = repunit_gcd(6, 4).unwrap();
        assert_eq!(g.gcd, big(11));
        assert!(g.identity_holds && g.remainder_step_holds);
        assert_eq!(repunit_gcd(7, 7).unwrap().gcd, big(1111111));
        assert_eq!(repunit_gcd(7, 5).unwrap().gcd, big(1));
        assert!(repunit_gcd(9, 4).unwrap().remainder_step_holds);
        assert!(repunit_gcd(0, 4).is_err());
    }

    #[test]
    fn products() {
        let r = product_square_report(ProductKind::RevDivSelf(big(1089))).unwrap();
        assert_eq!(r.product, big(10673289));
        assert_eq!(r.sqrt.root, big(3267));
        assert!(r.holds());
        let r = product_square_report(ProductKind::RepunitPair { m: 3, n: 2 }).unwrap();
        assert_eq!(r.product, big(1221));
        assert!(r.holds());
        let r = product_square_report(ProductKind::RevDivPair(big(1089), big(2178))).unwrap();
        assert!(r.holds());
        assert_eq!(
            product_square_report(ProductKind::RevDivPair(big(1089), big(1089))),
            Err(Error::IdenticalPair)
        );
        assert!(product_square_report(ProductKind::RevDivSelf(big(1234))).is_err());
        assert!(product_square_report(ProductKind::PowerPair { m: 2, n: 2 }).is_err());
        assert!(product_square_report(ProductKind::PowerPair { m: 5, n: 3 })
            .unwrap()
            .holds());
    }

    #[test]
    fn no_square_repdigits() {
        assert!(square_repdigits(60).is_empty());
    }
}
