//! Canonical base-(m+1) expansions of nonnegative reals.
//!
//! The canonical form excludes a trailing tail of the top digit; long
//! division of a rational produces that form directly. A float input is
//! converted exactly (binary floats are rationals).

use crate::error::{Error, Result};
use rug::{Float, Integer, Rational};

#[derive(Debug, Clone)]
enum Frac {
    Finite(Vec<u32>),
    /// Remainder stream 0 <= num/den < 1; digits come from long division.
    Stream {
        num: Integer,
        den: Integer,
    },
}

/// Integer part plus fractional digit source in a fixed base.
#[derive(Debug, Clone)]
pub struct FractionalExpansion {
    base: u32,
    int_part: u64,
    frac: Frac,
    finite: bool,
}

impl FractionalExpansion {
    /// Expansion of a nonnegative rational.
    pub fn from_rational(x: &Rational, base: u32) -> Result<Self> {
        assert!(base >= 2);
        if x.cmp0() == std::cmp::Ordering::Less {
            return Err(Error::OutOfDomain("expansion requires x >= 0".into()));
        }
        let floor = x.clone().floor();
        let int = floor.numer().to_u64().ok_or_else(|| {
            Error::OutOfDomain("integer part exceeds the supported index range".into())
        })?;
        let frac = x.clone() - floor;
        let (num, den) = frac.into_numer_denom();
        if num.cmp0() == std::cmp::Ordering::Equal {
            return Ok(FractionalExpansion {
                base,
                int_part: int,
                frac: Frac::Finite(vec![]),
                finite: true,
            });
        }
        // finite expansion iff den divides base^k for some k
        let mut d = den.clone();
        loop {
            let g = d.clone().gcd(&Integer::from(base));
            if g == 1 {
                break;
            }
            d /= g;
        }
        let finite = d == 1;
        Ok(FractionalExpansion {
            base,
            int_part: int,
            frac: Frac::Stream { num, den },
            finite,
        })
    }

    /// Exact expansion of a positive binary float.
    pub fn from_float(x: &Float, base: u32) -> Result<Self> {
        let r = x
            .to_rational()
            .ok_or_else(|| Error::OutOfDomain("non-finite float".into()))?;
        Self::from_rational(&r, base)
    }

    /// Finite expansion from explicit fractional digits.
    pub fn from_parts(int_part: u64, digits: Vec<u32>, base: u32) -> Result<Self> {
        for (position, &digit) in digits.iter().enumerate() {
            if digit >= base {
                return Err(Error::DigitOutOfRange {
                    digit,
                    position,
                    base,
                });
            }
        }
        Ok(FractionalExpansion {
            base,
            int_part,
            frac: Frac::Finite(digits),
            finite: true,
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn int_part(&self) -> u64 {
        self.int_part
    }

    /// True iff the canonical expansion terminates.
    pub fn is_finite(&self) -> bool {
        self.finite
    }

    /// First `depth` fractional digits (zero-padded when the expansion is
    /// shorter).
    pub fn digits_prefix(&self, depth: usize) -> Vec<u32> {
        match &self.frac {
            Frac::Finite(ds) => {
                let mut out = ds.clone();
                out.resize(depth, 0);
                out.truncate(depth);
                out
            }
            Frac::Stream { num, den } => {
                let mut out = Vec::with_capacity(depth);
                let mut num = num.clone();
                for _ in 0..depth {
                    if num.cmp0() == std::cmp::Ordering::Equal {
                        out.push(0);
                        continue;
                    }
                    num *= self.base;
                    let (d, rem) = num.div_rem_euc(den.clone());
                    out.push(d.to_u32().expect("digit below base"));
                    num = rem;
                }
                out
            }
        }
    }

    /// Full fractional digit vector when finite, trailing zeros removed.
    pub fn finite_digits(&self) -> Option<Vec<u32>> {
        if !self.finite {
            return None;
        }
        let mut ds = match &self.frac {
            Frac::Finite(ds) => ds.clone(),
            Frac::Stream { num, den } => {
                let mut out = Vec::new();
                let mut num = num.clone();
                while num.cmp0() != std::cmp::Ordering::Equal {
                    num *= self.base;
                    let (d, rem) = num.div_rem_euc(den.clone());
                    out.push(d.to_u32().expect("digit below base"));
                    num = rem;
                }
                out
            }
        };
        while ds.last() == Some(&0) {
            ds.pop();
        }
        Some(ds)
    }

    /// Exact value as a rational.
    pub fn value(&self) -> Rational {
        match &self.frac {
            Frac::Finite(ds) => {
                let mut frac = Rational::new();
                let mut weight = Rational::from((1u32, self.base));
                for &d in ds {
                    frac += weight.clone() * Rational::from(d);
                    weight /= self.base;
                }
                frac + self.int_part
            }
            Frac::Stream { num, den } => {
                Rational::from((num.clone(), den.clone())) + self.int_part
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_thirds_base_two() {
        let x = Rational::from((4, 3));
        let e = FractionalExpansion::from_rational(&x, 2).unwrap();
        assert_eq!(e.int_part(), 1);
        assert!(!e.is_finite());
        assert_eq!(e.digits_prefix(6), vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(e.value(), x);
    }

    #[test]
    fn half_base_three_is_repeating_ones() {
        let x = Rational::from((1, 2));
        let e = FractionalExpansion::from_rational(&x, 3).unwrap();
        assert!(!e.is_finite());
        assert_eq!(e.digits_prefix(5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn dyadic_is_finite_and_canonical() {
        let x = Rational::from((3, 8));
        let e = FractionalExpansion::from_rational(&x, 2).unwrap();
        assert!(e.is_finite());
        assert_eq!(e.finite_digits().unwrap(), vec![0, 1, 1]);
        // never ends in a tail of (base-1)s: 1/2 in base 2 is 0.1, not 0.0111...
        let h = FractionalExpansion::from_rational(&Rational::from((1, 2)), 2).unwrap();
        assert_eq!(h.finite_digits().unwrap(), vec![1]);
    }

    #[test]
    fn float_conversion_is_exact() {
        let x = Float::with_val(64, 1.5f64);
        let e = FractionalExpansion::from_float(&x, 2).unwrap();
        assert_eq!(e.int_part(), 1);
        assert_eq!(e.finite_digits().unwrap(), vec![1]);
    }
}
