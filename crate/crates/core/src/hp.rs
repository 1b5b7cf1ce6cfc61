//! High-precision arithmetic plumbing on top of MPFR floats.
//!
//! All numeric operations in this crate run at an explicit mantissa
//! precision in bits. Results are deterministic for a fixed precision:
//! MPFR rounds every elementary operation correctly, so the same inputs
//! produce the same bits on every platform.

use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

/// Default mantissa width in bits.
pub const DEFAULT_PREC: u32 = 128;

/// Extra guard bits used for intermediate powers and logarithms.
pub const GUARD_BITS: u32 = 32;

/// A value together with an absolute error bound.
///
/// Operations that truncate a digit tail or a quadrature attach the bound
/// they can justify; pure arithmetic rounding is covered by a few ulps on
/// top of whatever the bound states.
#[derive(Debug, Clone)]
pub struct Approx {
    pub value: Float,
    pub abs_err: Float,
}

impl Approx {
    pub fn exact(value: Float) -> Self {
        let prec = value.prec();
        Approx {
            value,
            abs_err: Float::with_val(prec, 0),
        }
    }

    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

pub fn float(prec: u32, v: f64) -> Float {
    Float::with_val(prec, v)
}

pub fn float_u64(prec: u32, v: u64) -> Float {
    Float::with_val(prec, v)
}

pub fn float_int(prec: u32, v: &Integer) -> Float {
    Float::with_val(prec, v)
}

pub fn float_rat(prec: u32, v: &Rational) -> Float {
    Float::with_val(prec, v)
}

/// ln(x) for a positive integer argument.
pub fn ln_u64(prec: u32, x: u64) -> Float {
    Float::with_val(prec, x).ln()
}

/// x^e for positive real x via exp(e * ln x), computed with guard bits and
/// rounded back to the precision of `e`.
pub fn pow_real(x: &Float, e: &Float) -> Float {
    let prec = e.prec();
    let wide = prec + GUARD_BITS;
    let ln_x = Float::with_val(wide, x).ln();
    let t = Float::with_val(wide, e * &ln_x);
    let r = t.exp();
    Float::with_val(prec, r)
}

/// n^e for a positive integer n, at the precision of `e` (guarded).
pub fn pow_u64(n: u64, e: &Float) -> Float {
    let prec = e.prec();
    let wide = prec + GUARD_BITS;
    let ln_n = Float::with_val(wide, n).ln();
    let t = Float::with_val(wide, e * &ln_n);
    let r = t.exp();
    Float::with_val(prec, r)
}

/// One ulp of `x` as a positive float (zero maps to the smallest positive
/// representable at the same precision scale; callers only use this on
/// nonzero values).
pub fn ulp(x: &Float) -> Float {
    let prec = x.prec();
    if x.is_zero() {
        return Float::with_val(prec, Float::u_exp(1, -(prec as i32)));
    }
    let exp = x.get_exp().unwrap_or(0);
    Float::with_val(prec, Float::u_exp(1, exp - prec as i32))
}

/// Number of decimal digits that round-trip a binary float of `prec` bits.
pub fn decimal_digits(prec: u32) -> usize {
    (prec as f64 * std::f64::consts::LOG10_2).ceil() as usize + 2
}

/// Deterministic decimal rendering with round-trip significant digits.
pub fn format_float(x: &Float) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let digits = decimal_digits(x.prec());
    let (sign, mantissa, exp) = to_decimal_parts(x, digits);
    // exp is the position of the decimal point relative to the mantissa
    // start (MPFR convention): value = 0.mantissa * 10^exp.
    let mut out = String::new();
    if sign {
        out.push('-');
    }
    if exp >= 1 && (exp as usize) <= digits + 4 {
        let e = exp as usize;
        if e >= mantissa.len() {
            out.push_str(&mantissa);
            out.extend(std::iter::repeat_n('0', e - mantissa.len()));
        } else {
            out.push_str(&mantissa[..e]);
            let frac = mantissa[e..].trim_end_matches('0');
            if !frac.is_empty() {
                out.push('.');
                out.push_str(frac);
            }
        }
    } else if exp <= 0 && exp > -6 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp) as usize));
        out.push_str(mantissa.trim_end_matches('0'));
    } else {
        // scientific: d.ddd...e(exp-1)
        let m = mantissa.trim_end_matches('0');
        let m = if m.is_empty() { "0" } else { m };
        out.push_str(&m[..1]);
        if m.len() > 1 {
            out.push('.');
            out.push_str(&m[1..]);
        }
        out.push('e');
        out.push_str(&(exp - 1).to_string());
    }
    out
}

fn to_decimal_parts(x: &Float, digits: usize) -> (bool, String, i64) {
    let (sign, mantissa, exp) = x.to_sign_string_exp_round(10, Some(digits), Round::Nearest);
    (sign, mantissa, exp.map(|v| v as i64).unwrap_or(0))
}

/// Complex value as a pair of same-precision floats. Only the operations
/// the zeta kernel and Fourier sums need.
#[derive(Debug, Clone)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        debug_assert_eq!(re.prec(), im.prec());
        Complex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Complex::new(Float::with_val(prec, 0), Float::with_val(prec, 0))
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Complex::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn real(re: Float) -> Self {
        let prec = re.prec();
        Complex::new(re, Float::with_val(prec, 0))
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), Float::with_val(self.im.prec(), -&self.im))
    }

    pub fn add(&self, o: &Complex) -> Self {
        let p = self.prec();
        Complex::new(
            Float::with_val(p, &self.re + &o.re),
            Float::with_val(p, &self.im + &o.im),
        )
    }

    pub fn sub(&self, o: &Complex) -> Self {
        let p = self.prec();
        Complex::new(
            Float::with_val(p, &self.re - &o.re),
            Float::with_val(p, &self.im - &o.im),
        )
    }

    pub fn mul(&self, o: &Complex) -> Self {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        Complex::new(Float::with_val(p, re), Float::with_val(p, im))
    }

    pub fn mul_float(&self, f: &Float) -> Self {
        let p = self.prec();
        Complex::new(
            Float::with_val(p, &self.re * f),
            Float::with_val(p, &self.im * f),
        )
    }

    pub fn div(&self, o: &Complex) -> Self {
        let p = self.prec();
        let den = Float::with_val(p, o.re.clone().square() + o.im.clone().square());
        let num = self.mul(&o.conj());
        Complex::new(
            Float::with_val(p, &num.re / &den),
            Float::with_val(p, &num.im / &den),
        )
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        Complex::real(Float::with_val(p, 1)).div(self)
    }

    pub fn abs(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.clone().square() + self.im.clone().square()).sqrt()
    }

    pub fn abs_f64(&self) -> f64 {
        let re = self.re.to_f64();
        let im = self.im.to_f64();
        re.hypot(im)
    }

    /// e^{i theta}.
    pub fn cis(theta: &Float) -> Self {
        let p = theta.prec();
        let (sin, cos) = theta.clone().sin_cos(Float::new(p));
        Complex::new(cos, sin)
    }

    /// exp(z) = e^{re} (cos im + i sin im).
    pub fn exp(&self) -> Self {
        let p = self.prec();
        let mag = self.re.clone().exp();
        let (sin, cos) = self.im.clone().sin_cos(Float::new(p));
        Complex::new(
            Float::with_val(p, &mag * &cos),
            Float::with_val(p, &mag * &sin),
        )
    }

    /// x^z for a positive real base: exp(z ln x).
    pub fn pow_real_base(x: &Float, z: &Complex) -> Self {
        let p = z.prec();
        let wide = p + GUARD_BITS;
        let ln_x = Float::with_val(wide, x).ln();
        let re = Float::with_val(wide, &z.re * &ln_x);
        let im = Float::with_val(wide, &z.im * &ln_x);
        let w = Complex::new(re, im).exp();
        Complex::new(Float::with_val(p, w.re), Float::with_val(p, w.im))
    }
}

/// Powers of a u64 base as exact integers: base^0 .. base^max.
pub fn integer_powers(base: u64, max: usize) -> Vec<Integer> {
    let mut v = Vec::with_capacity(max + 1);
    let mut cur = Integer::from(1);
    for _ in 0..=max {
        v.push(cur.clone());
        cur *= base;
    }
    v
}

/// base^k as an exact rational power (used for tail weights base^{-k}).
pub fn rational_power(base: u64, k: i64) -> Rational {
    if k >= 0 {
        Rational::from(Integer::from(base).pow(k as u32))
    } else {
        Rational::from((Integer::from(1), Integer::from(base).pow((-k) as u32)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_round_trip() {
        let e = Float::with_val(128, 3) / Float::with_val(128, 2);
        let x = pow_u64(4, &e);
        // 4^{3/2} = 8
        let err = Float::with_val(128, &x - 8u32).abs();
        assert!(err < Float::with_val(128, 1e-35));
    }

    #[test]
    fn complex_exp_matches_euler() {
        let prec = 96;
        let theta = Float::with_val(prec, 1.25f64);
        let a = Complex::cis(&theta);
        let b = Complex::new(Float::with_val(prec, 0), theta).exp();
        assert!(a.sub(&b).abs_f64() < 1e-25);
    }

    #[test]
    fn format_is_round_trip_stable() {
        let x = Float::with_val(128, 1) / Float::with_val(128, 3);
        let s = format_float(&x);
        let y = Float::with_val(128, Float::parse(&s).unwrap());
        let diff = Float::with_val(128, &x - &y).abs();
        assert!(diff < ulp(&x) * Float::with_val(128, 4));
        assert_eq!(s, format_float(&x));
    }

    #[test]
    fn format_handles_magnitudes() {
        assert_eq!(format_float(&Float::with_val(64, 0)), "0");
        let s = format_float(&Float::with_val(64, 1048576));
        assert!(s.starts_with("1048576"), "{s}");
        let s = format_float(&Float::with_val(64, 0.001953125));
        assert!(s.starts_with("0.001953125"), "{s}");
    }
}
