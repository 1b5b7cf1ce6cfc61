//! Base-conversion maps and the integer sequences they induce.
//!
//! A map `f : {0..m} -> {0..p}` turns the base-(m+1) digits of an index
//! `n` into the base-(p+1) digits of the sequence value `C_n`. The growth
//! exponent is `alpha = log(p+1) / log(m+1)`.

use crate::digits::{from_digits, to_digits, DigitWord};
use crate::error::{Error, Result};
use crate::hp;
use rug::{Float, Integer};
use std::fmt;

/// Digit map `f` on `{0..m}` into `{0..p}` with its derived flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseConversionMap {
    m: u32,
    p: u32,
    values: Vec<u32>,
    strict: bool,
    theorem_scope: bool,
}

impl BaseConversionMap {
    /// Validates digit bounds, monotonicity and the non-triviality rule
    /// (`f` equal to the identity with `f(m) = p` is rejected).
    pub fn new(m: u32, p: u32, values: Vec<u32>) -> Result<Self> {
        if m < 1 {
            return Err(Error::BadMapShape("source digit bound m must be >= 1".into()));
        }
        if p <= m {
            return Err(Error::BadMapShape(format!(
                "target digit bound p = {p} must exceed m = {m}"
            )));
        }
        if values.len() != m as usize + 1 {
            return Err(Error::BadMapShape(format!(
                "expected {} map values, got {}",
                m + 1,
                values.len()
            )));
        }
        for (index, &value) in values.iter().enumerate() {
            if value > p {
                return Err(Error::RangeError {
                    index,
                    value: value as i64,
                    p,
                });
            }
        }
        let mut strict = true;
        for index in 1..values.len() {
            if values[index] < values[index - 1] {
                return Err(Error::NonMonotoneMap { index });
            }
            if values[index] == values[index - 1] {
                strict = false;
            }
        }
        let identity = values.iter().enumerate().all(|(i, &v)| v as usize == i);
        if identity && values[m as usize] == p {
            return Err(Error::TrivialMap);
        }
        let theorem_scope = strict && values[0] == 0 && values[m as usize] == p;
        Ok(BaseConversionMap {
            m,
            p,
            values,
            strict,
            theorem_scope,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn apply(&self, digit: u32) -> u32 {
        self.values[digit as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn strict(&self) -> bool {
        self.strict
    }

    pub fn theorem_scope(&self) -> bool {
        self.theorem_scope
    }
}

impl fmt::Display for BaseConversionMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "table:{} p={}", vals.join(","), self.p)
    }
}

/// Quadratic digit map `f(x) = a x^2 + b x` with `p = f(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticFamily {
    a: i64,
    b: i64,
    m: u32,
}

impl QuadraticFamily {
    /// Requires `2ax + b > 0` on `[1, m]` (checked at the endpoints since
    /// the derivative is affine) and a valid induced digit map.
    pub fn new(a: i64, b: i64, m: u32) -> Result<Self> {
        if m < 1 {
            return Err(Error::BadMapShape("m must be >= 1".into()));
        }
        if 2 * a + b <= 0 || 2 * a * m as i64 + b <= 0 {
            return Err(Error::BadMapShape(format!(
                "2ax+b must be positive on [1,{m}] (a={a}, b={b})"
            )));
        }
        let fam = QuadraticFamily { a, b, m };
        fam.map()?;
        Ok(fam)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.a * x * x + self.b * x
    }

    pub fn map(&self) -> Result<BaseConversionMap> {
        let p = self.eval(self.m as i64);
        if p <= self.m as i64 || p > u32::MAX as i64 {
            return Err(Error::BadMapShape(format!(
                "f(m) = {p} does not exceed m = {}",
                self.m
            )));
        }
        let mut values = Vec::with_capacity(self.m as usize + 1);
        for x in 0..=self.m as i64 {
            let v = self.eval(x);
            if v < 0 || v > p {
                return Err(Error::RangeError {
                    index: x as usize,
                    value: v,
                    p: p as u32,
                });
            }
            values.push(v as u32);
        }
        BaseConversionMap::new(self.m, p as u32, values)
    }

    pub fn system(&self) -> Result<CantorSystem> {
        CantorSystem::new(self.map()?)
    }
}

/// Exponent of alpha when it is rational: `alpha = num/den` with
/// `(p+1)^den = (m+1)^num`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalAlpha {
    pub num: u32,
    pub den: u32,
}

/// A validated digit map plus the constants every operation derives from
/// it. Immutable after construction; freely shareable across threads.
#[derive(Debug, Clone)]
pub struct CantorSystem {
    map: BaseConversionMap,
    radix: u64,
    q: u64,
    delta_f: Vec<u32>,
    sum_f: u64,
    alpha_rational: Option<RationalAlpha>,
    verify_cap: u64,
}

/// Default index cap below which sequence values are computed by both
/// strategies and compared.
pub const DEFAULT_VERIFY_CAP: u64 = 100_000;

/// Validates a digit map and derives the system constants.
pub fn validate_system(map: BaseConversionMap) -> Result<CantorSystem> {
    CantorSystem::new(map)
}

impl CantorSystem {
    pub fn new(map: BaseConversionMap) -> Result<Self> {
        let m = map.m();
        let p = map.p();
        let delta_f: Vec<u32> = (1..=m as usize)
            .map(|r| map.values()[r] - map.values()[r - 1])
            .collect();
        let sum_f: u64 = (1..=m as usize).map(|r| map.values()[r] as u64).sum();
        debug_assert_eq!(
            delta_f.iter().map(|&d| d as u64).sum::<u64>() as i64,
            map.values()[m as usize] as i64 - map.values()[0] as i64
        );
        let alpha_rational = rational_log_ratio(m as u64 + 1, p as u64 + 1);
        Ok(CantorSystem {
            q: map.values()[m as usize] as u64 + 1,
            radix: p as u64 + 1,
            delta_f,
            sum_f,
            alpha_rational,
            verify_cap: DEFAULT_VERIFY_CAP,
            map,
        })
    }

    pub fn with_verify_cap(mut self, cap: u64) -> Self {
        self.verify_cap = cap;
        self
    }

    pub fn map(&self) -> &BaseConversionMap {
        &self.map
    }

    pub fn m(&self) -> u32 {
        self.map.m()
    }

    pub fn p(&self) -> u32 {
        self.map.p()
    }

    /// Source base m+1.
    pub fn src_base(&self) -> u64 {
        self.map.m() as u64 + 1
    }

    /// Image base p+1 (the factor in the append recurrence).
    pub fn radix(&self) -> u64 {
        self.radix
    }

    /// f(m) + 1; equals the radix exactly in theorem scope.
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn f(&self, digit: u32) -> u64 {
        self.map.apply(digit) as u64
    }

    pub fn f_m(&self) -> u64 {
        self.map.values()[self.map.m() as usize] as u64
    }

    pub fn delta_f(&self) -> &[u32] {
        &self.delta_f
    }

    /// Sum of f(r) over r = 1..=m.
    pub fn sum_f(&self) -> u64 {
        self.sum_f
    }

    pub fn theorem_scope(&self) -> bool {
        self.map.theorem_scope()
    }

    pub fn require_theorem_scope(&self) -> Result<()> {
        if self.theorem_scope() {
            Ok(())
        } else {
            Err(Error::ScopeError)
        }
    }

    pub fn alpha_rational(&self) -> Option<RationalAlpha> {
        self.alpha_rational
    }

    /// Growth exponent log(p+1)/log(m+1) at the requested precision.
    pub fn alpha(&self, prec: u32) -> Float {
        let wide = prec + hp::GUARD_BITS;
        let num = hp::ln_u64(wide, self.radix);
        let den = hp::ln_u64(wide, self.src_base());
        Float::with_val(prec, num / den)
    }

    pub fn alpha_f64(&self) -> f64 {
        (self.radix as f64).ln() / (self.src_base() as f64).ln()
    }

    pub fn alpha_expr(&self) -> String {
        format!("log({})/log({})", self.radix, self.src_base())
    }

    /// C_n by the digit-map strategy: map each base-(m+1) digit of n and
    /// read the result in base p+1. Below the verify cap the append
    /// recurrence is evaluated independently and must agree.
    pub fn cantor_value(&self, n: u64) -> Integer {
        let value = self.cantor_digit_map(n);
        if n < self.verify_cap {
            let rec = self.cantor_recurrence(n);
            assert_eq!(
                value, rec,
                "digit-map and recurrence strategies disagree at n = {n}"
            );
        }
        value
    }

    /// Digit-map strategy.
    pub fn cantor_digit_map(&self, n: u64) -> Integer {
        let word = to_digits(n, self.src_base() as u32);
        let mut value = Integer::from(0);
        for &d in word.digits() {
            value = value * self.radix + self.map.apply(d);
        }
        value
    }

    /// Append recurrence: C((m+1)n' + r) = (p+1) C(n') + f(r).
    pub fn cantor_recurrence(&self, n: u64) -> Integer {
        if n == 0 {
            return Integer::from(0);
        }
        let b = self.src_base();
        let value = self.cantor_recurrence(n / b);
        value * self.radix + self.map.apply((n % b) as u32)
    }

    /// C_n as u128 when it fits (scan fast path).
    pub fn cantor_u128(&self, n: u64) -> Option<u128> {
        let b = self.src_base();
        let mut digits = [0u32; 128];
        let mut len = 0;
        let mut k = n;
        while k > 0 {
            digits[len] = (k % b) as u32;
            len += 1;
            k /= b;
        }
        let mut value: u128 = 0;
        for i in (0..len).rev() {
            value = value
                .checked_mul(self.radix as u128)?
                .checked_add(self.map.apply(digits[i]) as u128)?;
        }
        Some(value)
    }

    /// C applied to an explicit digit word in base m+1.
    pub fn cantor_of_word(&self, word: &DigitWord) -> Result<Integer> {
        if word.base() != self.src_base() as u32 {
            return Err(Error::BadMapShape(format!(
                "word base {} does not match system base {}",
                word.base(),
                self.src_base()
            )));
        }
        Ok(self.cantor_digit_map(from_digits(word)))
    }

    /// First difference C_n - C_{n-1} by the digit recurrences. Below the
    /// verify cap it is checked against direct subtraction.
    pub fn delta_cantor(&self, n: u64) -> Integer {
        assert!(n >= 1, "delta requires n >= 1");
        let value = self.delta_recurrence(n);
        if n < self.verify_cap {
            let direct = self.cantor_digit_map(n) - self.cantor_digit_map(n - 1);
            assert_eq!(
                value, direct,
                "delta recurrence and subtraction disagree at n = {n}"
            );
        }
        value
    }

    fn delta_recurrence(&self, n: u64) -> Integer {
        let b = self.src_base();
        let r = (n % b) as u32;
        if r >= 1 {
            Integer::from(self.delta_f[r as usize - 1])
        } else {
            self.delta_recurrence(n / b) * self.radix - self.f_m()
        }
    }

    /// C_n / n^alpha at precision `prec`; error within 4 ulp.
    pub fn ratio(&self, n: u64, prec: u32) -> Float {
        assert!(n >= 1, "ratio requires n >= 1");
        let wide = prec + hp::GUARD_BITS;
        let c = Float::with_val(wide, &self.cantor_value(n));
        let den = hp::pow_u64(n, &self.alpha(wide));
        Float::with_val(prec, c / den)
    }

    /// Fast approximate ratio for screening scans.
    pub fn ratio_f64(&self, n: u64) -> f64 {
        let c = match self.cantor_u128(n) {
            Some(v) => v as f64,
            None => self.cantor_digit_map(n).to_f64(),
        };
        c / (n as f64).powf(self.alpha_f64())
    }
}

impl fmt::Display for CantorSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.map)
    }
}

/// If log(b)/log(a) is rational num/den (lowest terms), i.e. both a and b
/// are powers of a common integer, return it.
fn rational_log_ratio(a: u64, b: u64) -> Option<RationalAlpha> {
    if let Some(g) = (2..=a).next() {
        let i = power_exponent(a, g)?;
        // `g` is the smallest base a is a power of, hence primitive.
        return match power_exponent_opt(b, g) {
            Some(j) => {
                let d = gcd(i, j);
                Some(RationalAlpha {
                    num: (j / d) as u32,
                    den: (i / d) as u32,
                })
            }
            None => None,
        };
    }
    None
}

fn power_exponent(a: u64, g: u64) -> Option<u64> {
    power_exponent_opt(a, g)
}

fn power_exponent_opt(mut a: u64, g: u64) -> Option<u64> {
    let mut e = 0;
    while a > 1 {
        if !a.is_multiple_of(g) {
            return None;
        }
        a /= g;
        e += 1;
    }
    Some(e)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
