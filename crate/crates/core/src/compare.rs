//! Exact-aware comparison of extremum candidates.
//!
//! Every candidate has the shape `num / den^alpha` with a rational
//! numerator and an integer base in the denominator, sharing one alpha.
//! Two candidates are compared exactly when possible (common non-power
//! part of the denominators, or rational alpha) and otherwise by
//! escalating the working precision until MPFR separates them. The escape
//! hatch at the escalation cap declares equality; for the systems covered
//! by the tests every true tie is caught by an exact certificate first.

use crate::hp;
use crate::system::CantorSystem;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;

/// A value of the form `num / den^alpha`, tagged with the index it came
/// from.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub n: u64,
    pub num: Rational,
    pub den: u64,
}

impl Candidate {
    /// C_n / n^alpha.
    pub fn plain(sys: &CantorSystem, n: u64) -> Self {
        Candidate {
            n,
            num: Rational::from(sys.cantor_value(n)),
            den: n,
        }
    }

    /// Limit of the ratio along appended top digits:
    /// (C_n + f(m)/p) / (n+1)^alpha, which is (C_n + 1)/(n+1)^alpha in
    /// theorem scope.
    pub fn inf_form(sys: &CantorSystem, n: u64) -> Self {
        let tail = Rational::from((sys.f_m(), sys.radix() - 1));
        Candidate {
            n,
            num: Rational::from(sys.cantor_value(n)) + tail,
            den: n + 1,
        }
    }

    /// f(eps) / eps^alpha for a single digit.
    pub fn digit(sys: &CantorSystem, eps: u32) -> Self {
        Candidate {
            n: eps as u64,
            num: Rational::from(sys.f(eps)),
            den: eps as u64,
        }
    }

    /// Natural-log score for f64 screening.
    pub fn score_f64(&self, alpha: f64) -> f64 {
        if self.num.cmp0() == Ordering::Equal {
            return f64::NEG_INFINITY;
        }
        self.num.to_f64().ln() - alpha * (self.den as f64).ln()
    }

    /// The candidate value at the given precision.
    pub fn value(&self, sys: &CantorSystem, prec: u32) -> Float {
        let wide = prec + hp::GUARD_BITS;
        let num = hp::float_rat(wide, &self.num);
        let den = hp::pow_u64(self.den, &sys.alpha(wide));
        Float::with_val(prec, num / den)
    }
}

/// Splits `den` into `(m+1)^k * rest` with `rest` not divisible by m+1.
fn strip_base_powers(mut den: u64, base: u64) -> (u32, u64) {
    let mut k = 0;
    while den > 1 && den.is_multiple_of(base) {
        den /= base;
        k += 1;
    }
    (k, den)
}

/// Compares `a` and `b` as values `num/den^alpha`.
pub fn compare(sys: &CantorSystem, a: &Candidate, b: &Candidate, prec: u32) -> Ordering {
    // zero numerators order below everything positive
    match (a.num.cmp0(), b.num.cmp0()) {
        (Ordering::Equal, Ordering::Equal) => return Ordering::Equal,
        (Ordering::Equal, _) => return Ordering::Less,
        (_, Ordering::Equal) => return Ordering::Greater,
        _ => {}
    }

    let base = sys.src_base();
    let (ka, ra) = strip_base_powers(a.den, base);
    let (kb, rb) = strip_base_powers(b.den, base);
    if ra == rb {
        // den_a^alpha / den_b^alpha = radix^(ka - kb) exactly
        let lhs = a.num.clone() * Integer::from(sys.radix()).pow(kb);
        let rhs = b.num.clone() * Integer::from(sys.radix()).pow(ka);
        return lhs.cmp(&rhs);
    }
    if let Some(ra) = sys.alpha_rational() {
        // alpha = num/den: compare num_a^den * den_b^num vs num_b^den * den_a^num
        let s = ra.den;
        let r = ra.num;
        let lhs = a.num.clone().pow(s) * Integer::from(b.den).pow(r);
        let rhs = b.num.clone().pow(s) * Integer::from(a.den).pow(r);
        return lhs.cmp(&rhs);
    }

    // escalate precision on the log-scale difference
    let mut p = prec.max(64);
    for _ in 0..4 {
        let wide = p + hp::GUARD_BITS;
        let alpha = sys.alpha(wide);
        let la = hp::float_rat(wide, &a.num).ln()
            - Float::with_val(wide, &alpha * &hp::ln_u64(wide, a.den));
        let lb = hp::float_rat(wide, &b.num).ln()
            - Float::with_val(wide, &alpha * &hp::ln_u64(wide, b.den));
        let diff = Float::with_val(wide, &la - &lb);
        // rounding of the four log terms stays far below this margin
        let margin = Float::with_val(wide, Float::u_exp(1, -(p as i32) + 8));
        if diff.clone().abs() > margin {
            return if diff.is_sign_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        p *= 2;
    }
    Ordering::Equal
}
