//! One round of reverse, subtract, reverse, add.
//!
//! For a non-palindromic `x` of width `w`: `y = |x − x′|` kept at width `w`,
//! then `B = y + y′`. `B` always equals `99 ×` the numeral of the borrow bits
//! of the subtraction with the last bit dropped.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::codes::{self, Code, CodeKind};
use crate::digits::DigitString;
use crate::error::check_range;
use crate::{Error, Result};

/// Full trace of one round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallResult {
    pub input: DigitString,
    pub reverse: DigitString,
    /// `|x − x′|` at the input width.
    pub difference: DigitString,
    pub difference_reverse: DigitString,
    pub ball_value: BigUint,
    /// Borrow bits of the subtraction, `z_0` first.
    pub code: Code,
    pub truncated_code_value: BigUint,
    /// `true` when the subtraction ran as `x′ − x`.
    pub swapped: bool,
}

/// Orients `x` and `x′` by magnitude. `None` for palindromes.
fn oriented(x: &DigitString) -> Option<(DigitString, DigitString, bool)> {
    if x.is_palindrome() {
        return None;
    }
    let r = x.reverse();
    Some(if x.cmp_value(&r).is_lt() {
        (r, x.clone(), true)
    } else {
        (x.clone(), r, false)
    })
}

pub fn ball_number(x: &DigitString) -> Result<BallResult> {
    let (hi, lo, swapped) = oriented(x).ok_or(Error::Palindrome)?;
    let (difference, borrows) = hi.subtract_with_borrows(&lo)?;
    let difference_reverse = difference.reverse();
    let ball_value = difference.value() + difference_reverse.value();
    let kind = if x.leading() == x.trailing() {
        CodeKind::Extended
    } else {
        CodeKind::Strict
    };
    let code = Code::new_unchecked(borrows.into_bits(), kind);
    let truncated_code_value = code.truncated_numeral();
    debug_assert_eq!(ball_value, &truncated_code_value * 99u32);
    Ok(BallResult {
        input: x.clone(),
        reverse: x.reverse(),
        difference,
        difference_reverse,
        ball_value,
        code,
        truncated_code_value,
        swapped,
    })
}

/// The code of a non-palindromic input.
///
/// Leading digit above trailing digit gives a strict code; below, the code of
/// the reverse (also strict); equal outer digits give an extended code
/// `0^j S 0^j`.
pub fn code_of(x: &DigitString) -> Result<Code> {
    let (hi, lo, _) = oriented(x).ok_or(Error::Palindrome)?;
    let (_, borrows) = hi.subtract_with_borrows(&lo)?;
    let kind = if x.leading() == x.trailing() {
        CodeKind::Extended
    } else {
        CodeKind::Strict
    };
    Ok(Code::new_unchecked(borrows.into_bits(), kind))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub ball_value: BigUint,
    pub truncated_code_value: BigUint,
    /// `B = 99 × truncated code`
    pub identity_holds: bool,
    /// the truncated code divides `B`
    pub divides: bool,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.identity_holds && self.divides
    }
}

/// Recomputes `B` from plain integer values and compares it with the borrow
/// numeral.
pub fn verify_ball_identity(x: &DigitString) -> Result<IdentityReport> {
    let code = code_of(x)?;
    let w = x.width();
    let v = x.value();
    let vr = x.reverse().value();
    let y = if v > vr { &v - &vr } else { &vr - &v };
    let yr = DigitString::from_value(&y, w)?.reverse().value();
    let ball_value = &y + yr;
    let truncated_code_value = code.truncated_numeral();
    let identity_holds = ball_value == &truncated_code_value * 99u32;
    let divides =
        !truncated_code_value.is_zero() && ball_value.is_multiple_of(&truncated_code_value);
    Ok(IdentityReport {
        ball_value,
        truncated_code_value,
        identity_holds,
        divides,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub base: BallResult,
    pub lifted: BallResult,
    /// `B(a·x·a) = 10 · B(x)`
    pub tenfold_holds: bool,
    /// code of `a·x·a` is `0 · code(x) · 0`
    pub code_padding_holds: bool,
    /// `code(x) · 0` is an extended code
    pub trailing_zero_extended: bool,
}

impl LiftReport {
    pub fn passed(&self) -> bool {
        self.tenfold_holds && self.code_padding_holds && self.trailing_zero_extended
    }
}

/// Wraps `x` in the digit `a` on both sides and checks the tenfold relation.
pub fn lift_ball(x: &DigitString, a: u8) -> Result<(DigitString, LiftReport)> {
    check_range("padding digit", usize::from(a), 1, 9)?;
    let base = ball_number(x)?;
    let wrapped = x.wrapped(a)?;
    let lifted = ball_number(&wrapped)?;
    let tenfold_holds = lifted.ball_value == &base.ball_value * 10u32;
    let bits = base.code.bits();
    let lb = lifted.code.bits();
    let code_padding_holds = lb.len() == bits.len() + 2
        && lb[0] == 0
        && lb[lb.len() - 1] == 0
        && &lb[1..lb.len() - 1] == bits;
    let mut with_zero = bits.to_vec();
    with_zero.push(0);
    let trailing_zero_extended = codes::is_extended_code(&with_zero)?;
    Ok((
        wrapped,
        LiftReport {
            base,
            lifted,
            tenfold_holds,
            code_padding_holds,
            trailing_zero_extended,
        },
    ))
}

/// An input whose Ball value is `value`, if `value` is a Ball number.
///
/// Ball numbers are `99 · t · 10^j` where `t0` is a strict code. The digits
/// of a strict code, read as a number, have that same code; wrapping them
/// `j` times in the digit 1 multiplies the value by `10^j`. The smallest `j`
/// is used.
pub fn ball_witness(value: &BigUint) -> Option<DigitString> {
    if value.is_zero() {
        return None;
    }
    let (mut t, rem) = value.div_rem(&BigUint::from(99u32));
    if !rem.is_zero() {
        return None;
    }
    let ten = BigUint::from(10u32);
    let mut lifts = 0;
    loop {
        let mut bits = t.to_radix_be(10);
        bits.push(0);
        if codes::is_code(&bits).ok()? {
            let lsf: alloc::vec::Vec<u8> = bits.into_iter().rev().collect();
            let mut x = DigitString::from_digits_lsf(lsf).ok()?;
            for _ in 0..lifts {
                x = x.wrapped(1).ok()?;
            }
            debug_assert_eq!(ball_number(&x).map(|b| b.ball_value).as_ref(), Ok(value));
            return Some(x);
        }
        let (q, r) = t.div_rem(&ten);
        if !r.is_zero() {
            return None;
        }
        t = q;
        lifts += 1;
    }
}

/// Borrow bits of `x − x′` as a mask (bit `i` = `z_i`), straight from the
/// column recursion, for `x` of `width ≤ 19` digits with `x ≥ x′`.
pub fn borrow_mask_u64(x: u64, width: u32) -> u64 {
    let mut digits = [0u8; 20];
    let mut v = x;
    for d in digits.iter_mut().take(width as usize) {
        *d = (v % 10) as u8;
        v /= 10;
    }
    let n = width as usize - 1;
    let mut mask = 0u64;
    let mut borrow = 0i8;
    for i in 0..=n {
        let t = digits[i] as i8 - digits[n - i] as i8 - borrow;
        borrow = i8::from(t < 0);
        mask |= (borrow as u64) << i;
    }
    mask
}

/// Ball value of a `width`-digit machine integer; `None` for palindromes.
pub fn ball_value_u64(x: u64, width: u32) -> Option<u64> {
    let r = crate::digits::reverse_u64(x, width);
    if r == x {
        return None;
    }
    let y = x.abs_diff(r);
    Some(y + crate::digits::reverse_u64(y, width))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ds(s: &str) -> DigitString {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            ball_number(&ds("71")).unwrap().ball_value,
            BigUint::from(99u32)
        );
        let b = ball_number(&ds("843")).unwrap();
        assert_eq!(b.difference.to_string(), "495");
        assert_eq!(b.difference_reverse.to_string(), "594");
        assert_eq!(b.ball_value, BigUint::from(1089u32));
        let b = ball_number(&ds("397862")).unwrap();
        assert_eq!(b.reverse.to_string(), "268793");
        assert_eq!(b.difference.to_string(), "129069");
        assert_eq!(b.difference_reverse.to_string(), "960921");
        assert_eq!(b.ball_value, BigUint::from(1089990u32));
        assert_eq!(b.truncated_code_value, BigUint::from(11010u32));
        assert_eq!(b.code.to_string(), "110100");
        assert!(!b.swapped);
    }

    #[test]
    fn palindromes_rejected() {
        assert_eq!(ball_number(&ds("121")), Err(Error::Palindrome));
        assert_eq!(code_of(&ds("7")), Err(Error::Palindrome));
        assert_eq!(verify_ball_identity(&ds("4554")), Err(Error::Palindrome));
    }

    #[test]
    fn accd_has_code_1110() {
        for a in 1..=9u8 {
            for d in 0..a {
                for c in 0..=9u8 {
                    let x = DigitString::from_digits_lsf(alloc::vec![d, c, c, a]).unwrap();
                    let code = code_of(&x).unwrap();
                    assert_eq!(code.to_string(), "1110");
                    assert_eq!(code.truncated_numeral(), BigUint::from(111u32));
                }
            }
        }
    }

    #[test]
    fn swap_is_flagged() {
        let b = ball_number(&ds("17")).unwrap();
        assert!(b.swapped);
        assert_eq!(b.reverse.to_string(), "71");
        assert_eq!(b.ball_value, BigUint::from(99u32));
        assert_eq!(b.code.kind(), CodeKind::Strict);
    }

    #[test]
    fn equal_outer_digits_give_extended_code() {
        let c = code_of(&ds("58435")).unwrap();
        assert_eq!(c.to_string(), "01100");
        assert_eq!(c.kind(), CodeKind::Extended);
        // inner number 843 has code 110
        assert_eq!(code_of(&ds("843")).unwrap().to_string(), "110");
        let c = code_of(&ds("0090")).unwrap();
        assert_eq!(c.to_string(), "0100");
        assert_eq!(
            ball_number(&ds("0090")).unwrap().ball_value,
            BigUint::from(990u32)
        );
    }

    #[test]
    fn identity_reports() {
        let r = verify_ball_identity(&ds("397862")).unwrap();
        assert!(r.passed());
        assert_eq!(r.ball_value, BigUint::from(1089990u32));
        let r = verify_ball_identity(&ds("71")).unwrap();
        assert!(r.passed());
        assert_eq!(r.truncated_code_value, BigUint::from(1u32));
    }

    #[test]
    fn lifts() {
        let (x, rep) = lift_ball(&ds("843"), 5).unwrap();
        assert_eq!(x.to_string(), "58435");
        assert_eq!(rep.lifted.ball_value, BigUint::from(10890u32));
        assert!(rep.passed());
        for a in 1..=9 {
            let (_, rep) = lift_ball(&ds("71"), a).unwrap();
            assert_eq!(rep.lifted.ball_value, BigUint::from(990u32));
            assert!(rep.passed());
        }
        assert_eq!(lift_ball(&ds("71"), 1).unwrap().0.to_string(), "1711");
        assert!(lift_ball(&ds("71"), 0).is_err());
        assert!(lift_ball(&ds("71"), 10).is_err());
    }

    #[test]
    fn witnesses() {
        let w = ball_witness(&BigUint::from(990u32)).unwrap();
        assert_eq!(w.to_string(), "1101");
        assert_eq!(ball_number(&w).unwrap().ball_value, BigUint::from(990u32));
        assert!(ball_witness(&BigUint::from(2178u32)).is_none());
        assert!(ball_witness(&BigUint::from(100u32)).is_none());
        assert!(ball_witness(&BigUint::zero()).is_none());
    }

    #[test]
    fn fast_paths_agree() {
        assert_eq!(borrow_mask_u64(397862, 6), 0b001011);
        assert_eq!(ball_value_u64(397862, 6), Some(1089990));
        assert_eq!(ball_value_u64(121, 3), None);
        assert_eq!(ball_value_u64(90, 4), Some(990));
    }
}
