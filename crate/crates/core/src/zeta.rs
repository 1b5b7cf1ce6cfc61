//! Hurwitz zeta on complex arguments by Euler-Maclaurin summation.
//!
//! zeta(s, a) = sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//!            + sum_j B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}.
//!
//! The shift N adapts to |Im s| and doubles until the first omitted
//! correction term falls below the target; that first-omitted magnitude is
//! the recorded error estimate (heuristic, not interval-certified).

use crate::error::{Error, Result};
use crate::hp::{self, Complex};
use rug::Float;

/// Bernoulli numbers B_2, B_4, ... B_20 as (numerator, denominator).
const BERNOULLI: [(i64, u64); 10] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
];

#[derive(Debug, Clone)]
pub struct ZetaParams {
    /// Euler-Maclaurin shift; 0 selects max(10, 2|Im s|) automatically.
    pub shift: u32,
    /// number of Bernoulli correction terms (at most 9 so the estimate
    /// can use the next one)
    pub bernoulli_terms: usize,
    /// absolute error target for the first-omitted-term estimate
    pub target_abs_error: f64,
}

impl Default for ZetaParams {
    fn default() -> Self {
        ZetaParams {
            shift: 0,
            bernoulli_terms: 8,
            target_abs_error: 1e-30,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ZetaValue {
    pub value: Complex,
    pub error_estimate: Float,
}

/// Hurwitz zeta for a > 0 and s away from the pole at 1.
pub fn hurwitz_zeta(s: &Complex, a: &Float, params: &ZetaParams, prec: u32) -> Result<ZetaValue> {
    assert!(a.is_sign_positive() && !a.is_zero(), "a must be positive");
    let j_terms = params.bernoulli_terms.clamp(1, BERNOULLI.len() - 1);
    let wide = prec + hp::GUARD_BITS;
    let one = Float::with_val(wide, 1);
    let im_abs = s.im.to_f64().abs();
    let s = Complex::new(Float::with_val(wide, &s.re), Float::with_val(wide, &s.im));
    let a = Float::with_val(wide, a);
    let s_minus_1 = Complex::new(
        Float::with_val(wide, &s.re - &one),
        Float::with_val(wide, &s.im),
    );
    if s_minus_1.abs_f64() < 2f64.powi(-(prec as i32) + 4) {
        return Err(Error::PoleAtOne);
    }

    let mut shift = if params.shift > 0 {
        params.shift.max((im_abs / std::f64::consts::TAU).ceil() as u32)
    } else {
        (2.0 * im_abs).ceil().max(10.0) as u32
    };
    for _ in 0..24 {
        let est = first_omitted_estimate(&s, &a, shift, j_terms);
        if est <= params.target_abs_error {
            break;
        }
        shift = shift.saturating_mul(2);
    }

    let neg_s = Complex::new(
        Float::with_val(wide, -&s.re),
        Float::with_val(wide, -&s.im),
    );
    // partial sum over n < N
    let mut sum = Complex::zero(wide);
    for n in 0..shift {
        let base = Float::with_val(wide, &a + Float::with_val(wide, n));
        sum = sum.add(&Complex::pow_real_base(&base, &neg_s));
    }
    let na = Float::with_val(wide, &a + Float::with_val(wide, shift));
    // (N+a)^{1-s}/(s-1)
    let one_minus_s = Complex::new(
        Float::with_val(wide, &one - &s.re),
        Float::with_val(wide, -&s.im),
    );
    let tail_main = Complex::pow_real_base(&na, &one_minus_s).div(&s_minus_1);
    sum = sum.add(&tail_main);
    // (N+a)^{-s}/2
    let na_pow_neg_s = Complex::pow_real_base(&na, &neg_s);
    sum = sum.add(&na_pow_neg_s.mul_float(&Float::with_val(wide, 0.5f64)));

    // Bernoulli corrections: B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
    let inv_na = Float::with_val(wide, na.recip_ref());
    let mut rising = s.clone(); // (s)_1 = s
    let mut weight = na_pow_neg_s.mul_float(&inv_na); // (N+a)^{-s-1}
    let mut factorial = Float::with_val(wide, 2); // (2j)! at j = 1
    for j in 1..=j_terms {
        let (num, den) = BERNOULLI[j - 1];
        let coeff = Float::with_val(wide, num) / Float::with_val(wide, den) / &factorial;
        sum = sum.add(&rising.mul(&weight).mul_float(&coeff));
        // advance to j+1: rising gains (s+2j-1)(s+2j), weight gains (N+a)^{-2},
        // factorial gains (2j+1)(2j+2)
        let t1 = Complex::new(
            Float::with_val(wide, &s.re + &Float::with_val(wide, 2 * j as u32 - 1)),
            s.im.clone(),
        );
        let t2 = Complex::new(
            Float::with_val(wide, &s.re + &Float::with_val(wide, 2 * j as u32)),
            s.im.clone(),
        );
        rising = rising.mul(&t1).mul(&t2);
        weight = weight.mul_float(&inv_na).mul_float(&inv_na);
        factorial *= ((2 * j + 1) * (2 * j + 2)) as u64;
    }

    let est = first_omitted_estimate(&s, &a, shift, j_terms);
    Ok(ZetaValue {
        value: Complex::new(Float::with_val(prec, &sum.re), Float::with_val(prec, &sum.im)),
        error_estimate: Float::with_val(prec, est),
    })
}

/// log-scale magnitude of the first omitted Bernoulli term.
fn first_omitted_estimate(s: &Complex, a: &Float, shift: u32, j_terms: usize) -> f64 {
    let j = j_terms + 1;
    let (num, den) = BERNOULLI[j - 1];
    let re = s.re.to_f64();
    let im = s.im.to_f64();
    let na = a.to_f64() + shift as f64;
    let mut ln_mag = (num.abs() as f64 / den as f64).ln();
    // ln (2j)!
    let mut ln_fact = 0.0;
    for i in 2..=(2 * j) {
        ln_fact += (i as f64).ln();
    }
    ln_mag -= ln_fact;
    // rising factorial (s)_{2j-1} = prod_{i=0}^{2j-2} |s+i|
    for i in 0..(2 * j - 1) {
        ln_mag += 0.5 * ((re + i as f64).powi(2) + im * im).ln();
    }
    ln_mag += (-re - 2.0 * j as f64 + 1.0) * na.ln();
    ln_mag.exp()
}

/// Riemann zeta: zeta(s, 1).
pub fn riemann_zeta(s: &Complex, params: &ZetaParams, prec: u32) -> Result<ZetaValue> {
    let one = Float::with_val(prec + hp::GUARD_BITS, 1);
    hurwitz_zeta(s, &one, params, prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(prec: u32, re: f64, im: f64) -> Complex {
        Complex::from_f64(prec, re, im)
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let prec = 160;
        let z = riemann_zeta(&c(prec, 2.0, 0.0), &ZetaParams::default(), prec).unwrap();
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let expect = pi.clone().square() / 6u32;
        let diff = Float::with_val(prec, &z.value.re - &expect).abs();
        assert!(diff.to_f64() < 1e-30);
        assert!(z.value.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn zeta_two_at_half_is_pi_squared_over_two() {
        let prec = 160;
        let half = Float::with_val(prec + 32, 0.5f64);
        let z = hurwitz_zeta(&c(prec, 2.0, 0.0), &half, &ZetaParams::default(), prec).unwrap();
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let expect = pi.clone().square() / 2u32;
        let diff = Float::with_val(prec, &z.value.re - &expect).abs();
        assert!(diff.to_f64() < 1e-30);
    }

    #[test]
    fn complex_line_values_match_reference() {
        // gamma_k = log2(3) + 2 pi k i / ln 2 for the ternary system;
        // reference values from an independent multiprecision library
        let prec = 192;
        let cases = [
            (1i64, 1.246_599_323_535_664_3, 0.062_582_287_387_700_64),
            (5, 1.673_468_779_008_716_8, 0.173_087_053_231_579_75),
            (200, 1.661_341_659_268_744_7, -0.034_357_411_533_363_95),
        ];
        for &(k, re, im) in &cases {
            let ln2 = Float::with_val(prec, 2).ln();
            let alpha = Float::with_val(prec, Float::with_val(prec, 3).ln() / &ln2);
            let pi = Float::with_val(prec, rug::float::Constant::Pi);
            let t = Float::with_val(prec, 2 * k) * pi / ln2;
            let s = Complex::new(alpha, t);
            let z = riemann_zeta(&s, &ZetaParams::default(), prec).unwrap();
            assert!(
                (z.value.re.to_f64() - re).abs() < 1e-18 && (z.value.im.to_f64() - im).abs() < 1e-18,
                "k={k}: {} {}",
                z.value.re,
                z.value.im
            );
            // zeta(s, 1/2) = (2^s - 1) zeta(s); on this line 2^s = 3 e^{i...}
            let half = Float::with_val(prec + 32, 0.5f64);
            let zh = hurwitz_zeta(&s, &half, &ZetaParams::default(), prec).unwrap();
            let two_s = Complex::pow_real_base(&Float::with_val(prec + 32, 2), &s);
            let expect = two_s
                .sub(&Complex::from_f64(zh.value.prec(), 1.0, 0.0))
                .mul(&z.value);
            assert!(zh.value.sub(&expect).abs_f64() < 1e-20);
        }
    }

    #[test]
    fn pole_at_one_detected() {
        let prec = 128;
        let one = Float::with_val(prec, 1);
        assert!(matches!(
            hurwitz_zeta(&c(prec, 1.0, 0.0), &one, &ZetaParams::default(), prec),
            Err(Error::PoleAtOne)
        ));
    }

    #[test]
    fn partial_sum_oracle_for_real_s() {
        // independent check: truncated series plus integral tail bracket
        let prec = 96;
        let s = 3.5f64;
        let z = riemann_zeta(&c(prec, s, 0.0), &ZetaParams::default(), prec).unwrap();
        let mut partial = 0.0f64;
        let t = 200000u64;
        for n in (1..=t).rev() {
            partial += (n as f64).powf(-s);
        }
        let tail_lo = ((t + 1) as f64).powf(1.0 - s) / (s - 1.0);
        let tail_hi = (t as f64).powf(1.0 - s) / (s - 1.0);
        let v = z.value.re.to_f64();
        assert!(v > partial + tail_lo - 1e-12 && v < partial + tail_hi + 1e-12);
    }
}
