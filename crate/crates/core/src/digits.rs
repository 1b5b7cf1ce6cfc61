//! Positional digit words and radix codecs.

use crate::error::{Error, Result};
use rug::Integer;

/// A digit string in some base, most significant digit first. The word for
/// zero is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitWord {
    base: u32,
    digits: Vec<u32>,
}

impl DigitWord {
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        assert!(base >= 2, "base must be at least 2");
        for (position, &digit) in digits.iter().enumerate() {
            if digit >= base {
                return Err(Error::DigitOutOfRange {
                    digit,
                    position,
                    base,
                });
            }
        }
        if let Some(&lead) = digits.first() {
            if lead == 0 && digits.len() > 1 {
                return Err(Error::BadMapShape(
                    "leading digit of a nonzero word must be nonzero".into(),
                ));
            }
            if lead == 0 {
                // canonical zero word is empty
                return Ok(DigitWord {
                    base,
                    digits: vec![],
                });
            }
        }
        Ok(DigitWord { base, digits })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

/// Base-`base` expansion of `n`, most significant digit first.
pub fn to_digits(n: u64, base: u32) -> DigitWord {
    assert!(base >= 2, "base must be at least 2");
    let mut digits = Vec::new();
    let mut n = n;
    while n > 0 {
        digits.push((n % base as u64) as u32);
        n /= base as u64;
    }
    digits.reverse();
    DigitWord { base, digits }
}

/// Value of a digit word.
pub fn from_digits(word: &DigitWord) -> u64 {
    let mut n: u64 = 0;
    for &d in &word.digits {
        n = n * word.base as u64 + d as u64;
    }
    n
}

/// Value of a raw digit slice in `base`, validating each digit.
pub fn value_of_digits(digits: &[u32], base: u32) -> Result<Integer> {
    let mut n = Integer::from(0);
    for (position, &digit) in digits.iter().enumerate() {
        if digit >= base {
            return Err(Error::DigitOutOfRange {
                digit,
                position,
                base,
            });
        }
        n = n * base + digit;
    }
    Ok(n)
}
