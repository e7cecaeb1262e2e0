//! Fixed-width base-10 digit strings.
//!
//! Digits are stored units-first: index 0 is the least significant column.
//! `Display` renders the most significant digit first, like an ordinary
//! numeral. Borrow records (and the codes built from them) render the other
//! way round, with the units-column bit `z_0` first, because that is how
//! codes are read as numerals.
//!
//! The width is part of the value. `"0090"` and `"90"` are different digit
//! strings with the same numeric value; reversing them gives `"0900"` and
//! `"09"`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    digits: Vec<u8>,
}

/// Borrow bits of a fixed-width subtraction, units-first.
///
/// Bit `i` is 1 when ten was regrouped from column `i + 1` into column `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BorrowRecord {
    bits: Vec<u8>,
}

impl DigitString {
    /// Builds a digit string from units-first digits.
    pub fn from_digits_lsf(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = digits.iter().find(|&&d| d > 9) {
            return Err(Error::InvalidDigit(char::from(b'0'.wrapping_add(bad))));
        }
        Ok(Self { digits })
    }

    /// Zero-pads `n` at the most significant end to exactly `width` digits.
    pub fn from_value(n: &BigUint, width: usize) -> Result<Self> {
        if width == 0 {
            return Err(Error::Empty);
        }
        let mut digits = if n.is_zero() {
            Vec::new()
        } else {
            n.to_radix_le(10)
        };
        if digits.len() > width {
            return Err(Error::WidthTooSmall {
                width,
                needed: digits.len(),
            });
        }
        digits.resize(width, 0);
        Ok(Self { digits })
    }

    pub fn from_u64(n: u64, width: usize) -> Result<Self> {
        Self::from_value(&BigUint::from(n), width)
    }

    /// The shortest digit string for `n` (one digit for zero).
    pub fn natural(n: &BigUint) -> Self {
        let width = decimal_len(n);
        Self::from_value(n, width).expect("decimal_len is exact")
    }

    pub fn width(&self) -> usize {
        self.digits.len()
    }

    /// Units-first digits.
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit in column `i` (0 = units).
    pub fn digit(&self, i: usize) -> u8 {
        self.digits[i]
    }

    /// Most significant digit, `a_{n-1}`.
    pub fn leading(&self) -> u8 {
        self.digits[self.digits.len() - 1]
    }

    /// Units digit, `a_0`.
    pub fn trailing(&self) -> u8 {
        self.digits[0]
    }

    pub fn reverse(&self) -> Self {
        let mut digits = self.digits.clone();
        digits.reverse();
        Self { digits }
    }

    pub fn is_palindrome(&self) -> bool {
        let w = self.width();
        (0..w / 2).all(|i| self.digits[i] == self.digits[w - 1 - i])
    }

    pub fn value(&self) -> BigUint {
        BigUint::from_radix_le(&self.digits, 10).expect("digits are base 10")
    }

    /// The value as `u64`, if it fits.
    pub fn value_u64(&self) -> Option<u64> {
        self.digits.iter().rev().try_fold(0u64, |acc, &d| {
            acc.checked_mul(10)?.checked_add(u64::from(d))
        })
    }

    /// Compares numeric values. Widths may differ.
    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let sig = |d: &[u8]| d.iter().rposition(|&x| x != 0).map_or(0, |p| p + 1);
        let (a, b) = (&self.digits, &other.digits);
        let (la, lb) = (sig(a), sig(b));
        la.cmp(&lb)
            .then_with(|| a[..la].iter().rev().cmp(b[..lb].iter().rev()))
    }

    /// `d·self·d`: the digit `d` prepended and appended.
    pub fn wrapped(&self, d: u8) -> Result<Self> {
        if d > 9 {
            return Err(Error::InvalidDigit(char::from(b'0'.wrapping_add(d))));
        }
        let mut digits = Vec::with_capacity(self.width() + 2);
        digits.push(d);
        digits.extend_from_slice(&self.digits);
        digits.push(d);
        Ok(Self { digits })
    }

    /// Column-by-column subtraction of an equal-width subtrahend.
    pub fn subtract_with_borrows(&self, other: &Self) -> Result<(Self, BorrowRecord)> {
        if self.width() != other.width() {
            return Err(Error::WidthMismatch {
                left: self.width(),
                right: other.width(),
            });
        }
        if self.cmp_value(other) == Ordering::Less {
            return Err(Error::NegativeDifference);
        }
        let mut out = Vec::with_capacity(self.width());
        let mut bits = Vec::with_capacity(self.width());
        let mut borrow = 0i8;
        for (&x, &y) in self.digits.iter().zip(&other.digits) {
            let t = x as i8 - y as i8 - borrow;
            borrow = i8::from(t < 0);
            out.push((t + 10 * borrow) as u8);
            bits.push(borrow as u8);
        }
        debug_assert_eq!(borrow, 0);
        Ok((Self { digits: out }, BorrowRecord { bits }))
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .digits
            .iter()
            .rev()
            .map(|&d| char::from(b'0' + d))
            .collect();
        f.pad(&s)
    }
}

impl FromStr for DigitString {
    type Err = Error;

    /// Parses a decimal numeral; the width is the number of characters, so
    /// leading zeros are kept.
    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .chars()
            .rev()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or(Error::InvalidDigit(c))
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_digits_lsf(digits)
    }
}

impl BorrowRecord {
    /// Units-first bits `z_0, z_1, ...`.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn width(&self) -> usize {
        self.bits.len()
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }
}

impl fmt::Display for BorrowRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.bits.iter().map(|&b| char::from(b'0' + b)).collect();
        f.pad(&s)
    }
}

pub fn to_digit_string(n: &BigUint, width: usize) -> Result<DigitString> {
    DigitString::from_value(n, width)
}

pub fn subtract_with_borrows(
    x: &DigitString,
    y: &DigitString,
) -> Result<(DigitString, BorrowRecord)> {
    x.subtract_with_borrows(y)
}

/// Number of decimal digits of `n` (1 for zero).
pub fn decimal_len(n: &BigUint) -> usize {
    if n.is_zero() {
        1
    } else {
        n.to_radix_le(10).len()
    }
}

/// Fixed-width reversal of a machine integer with `width` digits.
pub fn reverse_u64(mut n: u64, width: u32) -> u64 {
    let mut r = 0;
    for _ in 0..width {
        r = r * 10 + n % 10;
        n /= 10;
    }
    r
}
