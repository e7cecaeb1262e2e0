use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value needs {needed} digits but width is {width}")]
    WidthTooSmall { width: usize, needed: usize },

    #[error("digit string must have at least one digit")]
    Empty,

    #[error("invalid decimal digit {0:?}")]
    InvalidDigit(char),

    #[error("operand widths differ: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("minuend is smaller than subtrahend; orient the operands first")]
    NegativeDifference,

    /// Palindromes produce a zero difference, so the Ball value would be 0.
    #[error("input is a palindrome: its Ball value would be 0")]
    Palindrome,

    #[error("{what} = {value} is outside {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("code needs at least 2 bits, got {0}")]
    ShortCode(usize),

    #[error("bit string is not a {0} code")]
    NotACode(crate::CodeKind),

    #[error("bit value {0} is not 0 or 1")]
    InvalidBit(u8),

    #[error("reverse quotient needs a non-palindromic number with at least 2 digits")]
    NotEligible,

    #[error("{0} is not a reverse divisor")]
    NotReverseDivisor(&'static str),

    #[error("pair members must be distinct")]
    IdenticalPair,
}

pub(crate) fn check_range(
    what: &'static str,
    value: usize,
    min: usize,
    max: usize,
) -> crate::Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what,
            value,
            min,
            max,
        })
    }
}
