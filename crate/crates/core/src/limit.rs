//! The limit function lambda, the digit series D, the generalized Cantor
//! function, and pointwise diagnostics (continuity, Hölder probing).
//!
//! lambda(x) = (C_{floor(x)} + D(frac x)) / x^alpha with
//! D = sum_r f(eps_r) (p+1)^{-r}; it is multiplicatively periodic,
//! lambda((m+1) x) = lambda(x), and agrees with C_n/n^alpha at integers.

use crate::error::{Error, Result};
use crate::expansion::FractionalExpansion;
use crate::hp::{self, Approx};
use crate::system::CantorSystem;
use rug::{Float, Integer, Rational};

/// Default digit depth matching a working precision: the digit tail then
/// rounds below the arithmetic error.
pub fn depth_for(sys: &CantorSystem, prec: u32) -> usize {
    let ln2 = std::f64::consts::LN_2;
    ((prec as f64) * ln2 / (sys.radix() as f64).ln()).ceil() as usize + 2
}

/// Exact truncated digit series sum_{r<=R} f(eps_r) radix^{-r}.
pub fn d_value_exact(sys: &CantorSystem, digits: &[u32]) -> Rational {
    let radix = sys.radix();
    let mut acc = Integer::from(0);
    for &d in digits {
        acc = acc * radix + sys.f(d);
    }
    let mut den = Integer::from(1);
    for _ in 0..digits.len() {
        den *= radix;
    }
    Rational::from((acc, den))
}

/// D to depth R with the tail bound radix^{-R} attached.
pub fn d_value(sys: &CantorSystem, digits: &[u32], prec: u32) -> Approx {
    let exact = d_value_exact(sys, digits);
    let value = hp::float_rat(prec, &exact);
    let tail = hp::float_rat(prec, &hp::rational_power(sys.radix(), -(digits.len() as i64)));
    Approx {
        value,
        abs_err: tail,
    }
}

/// Exact numerator C_{int} + D_R and the true point value, shared by the
/// lambda evaluations.
fn lambda_parts(
    sys: &CantorSystem,
    x: &FractionalExpansion,
    depth: usize,
) -> Result<(Rational, Rational, bool)> {
    if x.base() != sys.src_base() as u32 {
        return Err(Error::BadMapShape(format!(
            "expansion base {} does not match system base {}",
            x.base(),
            sys.src_base()
        )));
    }
    let c = sys.cantor_value(x.int_part());
    let digits = x.digits_prefix(depth);
    let num = Rational::from(c) + d_value_exact(sys, &digits);
    let exact_tail = x.is_finite() && x.finite_digits().is_some_and(|d| d.len() <= depth);
    Ok((num, x.value(), exact_tail))
}

/// lambda at a point given by its canonical expansion; for (m+1)-rational
/// x this is the right-continuous value.
pub fn lambda_value(
    sys: &CantorSystem,
    x: &FractionalExpansion,
    depth: usize,
    prec: u32,
) -> Result<Approx> {
    let (num, xval, exact_tail) = lambda_parts(sys, x, depth)?;
    if xval.cmp0() != std::cmp::Ordering::Greater {
        return Err(Error::OutOfDomain("lambda requires x > 0".into()));
    }
    let wide = prec + hp::GUARD_BITS;
    let xf = hp::float_rat(wide, &xval);
    let xa = hp::pow_real(&xf, &sys.alpha(wide));
    let value = Float::with_val(prec, hp::float_rat(wide, &num) / &xa);
    let abs_err = if exact_tail {
        hp::ulp(&value) * Float::with_val(prec, 4)
    } else {
        let tail = hp::float_rat(wide, &hp::rational_power(sys.radix(), -(depth as i64)));
        Float::with_val(prec, tail / &xa) + hp::ulp(&value) * Float::with_val(prec, 4)
    };
    Ok(Approx { value, abs_err })
}

/// lambda at a positive float (converted exactly to its expansion).
pub fn lambda_value_float(
    sys: &CantorSystem,
    x: &Float,
    depth: usize,
    prec: u32,
) -> Result<Approx> {
    let e = FractionalExpansion::from_float(x, sys.src_base() as u32)?;
    lambda_value(sys, &e, depth, prec)
}

/// Digit address of t under the measure's interval subdivision.
#[derive(Debug, Clone)]
pub struct GDescent {
    pub digits: Vec<u32>,
    /// t fell strictly inside a gap; the value is the plateau value.
    pub plateau: bool,
    /// the value carries one extra unit at the cut level (gap plateau, or
    /// t landing exactly on a child's right endpoint)
    pub carry: bool,
    /// the remainder terminated, so the value is exact
    pub exact: bool,
}

/// Greedy digit descent for the measure distribution function on [0, 1]:
/// at each level pick the largest child interval whose left endpoint does
/// not exceed t.
pub fn g_digits(sys: &CantorSystem, t: &Rational, depth: usize) -> Result<GDescent> {
    if t.cmp0() == std::cmp::Ordering::Less || t.clone() > 1u32 {
        return Err(Error::OutOfDomain("g is defined on [0, 1]".into()));
    }
    let radix = sys.radix();
    let m = sys.m();
    let mut cur = t.clone();
    let mut digits = Vec::with_capacity(depth);
    for _ in 0..depth {
        if cur.cmp0() == std::cmp::Ordering::Equal {
            return Ok(GDescent {
                digits,
                plateau: false,
                carry: false,
                exact: true,
            });
        }
        let scaled = cur.clone() * Rational::from(radix);
        let mut d = 0;
        for i in (0..=m).rev() {
            if scaled >= sys.f(i) {
                d = i;
                break;
            }
        }
        let next = scaled - Rational::from(sys.f(d));
        if next > 1u32 {
            digits.push(d);
            return Ok(GDescent {
                digits,
                plateau: true,
                carry: true,
                exact: true,
            });
        }
        digits.push(d);
        if next == 1u32 {
            // right endpoint of the child subtree: the remaining tail is
            // all top digits, which closes to one unit at this level
            return Ok(GDescent {
                digits,
                plateau: false,
                carry: true,
                exact: true,
            });
        }
        cur = next;
    }
    Ok(GDescent {
        digits,
        plateau: false,
        carry: false,
        exact: false,
    })
}

/// Exact rational value of the descent: sum d_r (m+1)^{-r}, plus one unit
/// at the cut level when the descent closed with a carry.
pub fn g_value_exact(sys: &CantorSystem, descent: &GDescent) -> Rational {
    let base = sys.src_base();
    let mut acc = Integer::from(0);
    for &d in &descent.digits {
        acc = acc * base + d;
    }
    if descent.carry {
        acc += 1;
    }
    let mut den = Integer::from(1);
    for _ in 0..descent.digits.len() {
        den *= base;
    }
    Rational::from((acc, den))
}

/// Measure of [0, t] to depth R; error at most (m+1)^{-R} unless the
/// descent terminated exactly.
pub fn cantor_function_g(sys: &CantorSystem, t: &Rational, depth: usize, prec: u32) -> Result<Approx> {
    let desc = g_digits(sys, t, depth)?;
    let value = hp::float_rat(prec, &g_value_exact(sys, &desc));
    let abs_err = if desc.exact {
        Float::with_val(prec, 0)
    } else {
        hp::float_rat(prec, &hp::rational_power(sys.src_base(), -(depth as i64)))
    };
    Ok(Approx { value, abs_err })
}

/// Interval density g(x) / x^{1/alpha} on (0, 1].
pub fn density_d(sys: &CantorSystem, x: &Rational, depth: usize, prec: u32) -> Result<Approx> {
    if x.cmp0() != std::cmp::Ordering::Greater || x.clone() > 1u32 {
        return Err(Error::OutOfDomain("density requires x in (0, 1]".into()));
    }
    let g = cantor_function_g(sys, x, depth, prec)?;
    let wide = prec + hp::GUARD_BITS;
    let inv_alpha = Float::with_val(wide, 1) / sys.alpha(wide);
    let xa = hp::pow_real(&hp::float_rat(wide, x), &inv_alpha);
    let value = Float::with_val(prec, Float::with_val(wide, &g.value) / &xa);
    let abs_err = Float::with_val(prec, Float::with_val(wide, &g.abs_err) / &xa)
        + hp::ulp(&value) * Float::with_val(prec, 4);
    Ok(Approx { value, abs_err })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Continuity {
    LeftAndRight,
    RightOnly,
}

#[derive(Debug, Clone)]
pub struct ContinuityReport {
    pub class: Continuity,
    pub value: Approx,
    pub left_limit: Approx,
    pub jump: Float,
    /// the digit whose increment decides the classification
    pub last_digit: u32,
}

/// Left/right continuity of lambda at an (m+1)-rational point. The left
/// limit is evaluated through the tail-of-top-digit expansion; the jump is
/// (Delta f(eps_n) - 1) radix^{-n} / x^alpha, exactly zero when the
/// increment is 1.
pub fn continuity_probe(sys: &CantorSystem, x0: &FractionalExpansion) -> Result<ContinuityReport> {
    if !x0.is_finite() {
        return Err(Error::NotRational);
    }
    let mut int = x0.int_part();
    let digits = x0.finite_digits().expect("finite expansion");
    let base = sys.src_base();
    if digits.is_empty() {
        // integer point: use multiplicative periodicity to strip trailing
        // zero digits, then probe at the reduced integer
        if int == 0 {
            return Err(Error::OutOfDomain("x0 must be positive".into()));
        }
        while int.is_multiple_of(base) {
            int /= base;
        }
    }
    let prec = 128;
    let wide = prec + hp::GUARD_BITS;
    let xval = x0.value();
    let xa = hp::pow_real(&hp::float_rat(wide, &xval), &sys.alpha(wide));
    let radix = sys.radix();

    let (num_right, num_left, eps_n) = if digits.is_empty() {
        let r = (int % base) as u32;
        let c_right = Rational::from(sys.cantor_value(int));
        let c_left = Rational::from(sys.cantor_value(int - 1))
            + Rational::from((sys.f_m(), radix - 1));
        (c_right, c_left, r)
    } else {
        let n = digits.len();
        let eps_n = *digits.last().unwrap();
        let c = Rational::from(sys.cantor_value(int));
        let d_right = d_value_exact(sys, &digits);
        let mut head = digits.clone();
        head.pop();
        let w = hp::rational_power(radix, -(n as i64));
        let d_left = d_value_exact(sys, &head)
            + Rational::from(sys.f(eps_n - 1)) * w.clone()
            + Rational::from((sys.f_m(), radix - 1)) * w;
        (c.clone() + d_right, c + d_left, eps_n)
    };

    let value = Float::with_val(prec, hp::float_rat(wide, &num_right) / &xa);
    let left = Float::with_val(prec, hp::float_rat(wide, &num_left) / &xa);
    let jump = Float::with_val(prec, &value - &left);
    let err = hp::ulp(&value) * Float::with_val(prec, 8);
    let class = if sys.delta_f()[eps_n as usize - 1] == 1 {
        Continuity::LeftAndRight
    } else {
        Continuity::RightOnly
    };
    Ok(ContinuityReport {
        class,
        value: Approx {
            value,
            abs_err: err.clone(),
        },
        left_limit: Approx {
            value: left,
            abs_err: err,
        },
        jump,
        last_digit: eps_n,
    })
}

/// Per-block occupancy deviation from equidistribution.
#[derive(Debug, Clone)]
pub struct BlockStat {
    pub block_len: usize,
    pub max_deviation: f64,
}

#[derive(Debug, Clone)]
pub struct HolderReport {
    /// least-squares exponent of the digit-series differences
    /// |D(x0+h) - D(x0)| against h (the quantity with the alpha - delta
    /// bound at normal points)
    pub slope_d: f64,
    /// least-squares exponent of |lambda(x0+h) - lambda(x0)|; near 1 at
    /// normal points, where lambda is differentiable
    pub slope_lambda: f64,
    pub points_used: usize,
    /// alpha - delta, the exponent the D-slope is compared against
    pub target_exponent: f64,
    pub block_stats: Vec<BlockStat>,
}

/// Empirical Hölder probe at x0 along a decreasing grid of offsets.
/// Zero differences are dropped; fewer than 4 usable points is an error.
pub fn holder_probe(
    sys: &CantorSystem,
    x0: &FractionalExpansion,
    h_grid: &[Rational],
    delta: f64,
) -> Result<HolderReport> {
    let base = sys.src_base() as u32;
    let x0_val = x0.value();
    // depth: deepest grid point plus guard digits so exact D-differences
    // survive truncation
    let max_depth = h_grid
        .iter()
        .map(|h| rational_depth(h, base))
        .max()
        .unwrap_or(32)
        + 25;
    let d0 = d_value_exact(sys, &x0.digits_prefix(max_depth));
    let c0 = Rational::from(sys.cantor_value(x0.int_part()));
    let lam = |x: &Rational| -> Result<(Rational, f64)> {
        let e = FractionalExpansion::from_rational(x, base)?;
        let num =
            Rational::from(sys.cantor_value(e.int_part())) + d_value_exact(sys, &e.digits_prefix(max_depth));
        let xa = (x.to_f64()).powf(sys.alpha_f64());
        Ok((num.clone(), num.to_f64() / xa))
    };
    let lam0 = (c0.clone() + d0.clone()).to_f64() / x0_val.to_f64().powf(sys.alpha_f64());
    let mut pts_d = Vec::new();
    let mut pts_l = Vec::new();
    for h in h_grid {
        if h.cmp0() != std::cmp::Ordering::Greater {
            return Err(Error::OutOfDomain("h grid must be positive".into()));
        }
        let x = x0_val.clone() + h.clone();
        let (num, lamv) = lam(&x)?;
        let dd = (num - (c0.clone() + d0.clone())).abs().to_f64();
        let dl = (lamv - lam0).abs();
        let lh = h.to_f64().ln();
        if dd > 0.0 {
            pts_d.push((lh, dd.ln()));
        }
        if dl > 0.0 {
            pts_l.push((lh, dl.ln()));
        }
    }
    if pts_d.len() < 4 {
        return Err(Error::DegenerateGrid {
            min: 4,
            got: pts_d.len(),
        });
    }
    let slope_d = least_squares_slope(&pts_d);
    let slope_lambda = if pts_l.len() >= 2 {
        least_squares_slope(&pts_l)
    } else {
        f64::NAN
    };

    // block occupancy over the truncated digit prefix
    let digits = x0.digits_prefix(max_depth.min(64));
    let k = digits.len();
    let mut block_stats = Vec::new();
    for len in 1..=3usize {
        let cells = (base as usize).pow(len as u32);
        let mut counts = vec![0usize; cells];
        for w in digits.windows(len) {
            let mut idx = 0usize;
            for &d in w {
                idx = idx * base as usize + d as usize;
            }
            counts[idx] += 1;
        }
        let expected = 1.0 / cells as f64;
        let max_deviation = counts
            .iter()
            .map(|&c| (c as f64 / k as f64 - expected).abs())
            .fold(0.0, f64::max);
        block_stats.push(BlockStat {
            block_len: len,
            max_deviation,
        });
    }

    Ok(HolderReport {
        slope_d,
        slope_lambda,
        points_used: pts_d.len(),
        target_exponent: sys.alpha_f64() - delta,
        block_stats,
    })
}

fn rational_depth(h: &Rational, base: u32) -> usize {
    // smallest k with h >= base^{-k}, i.e. the digit position h reaches
    let hf = h.to_f64();
    if hf <= 0.0 {
        return 0;
    }
    (-(hf.ln()) / (base as f64).ln()).ceil().max(0.0) as usize
}

fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{validate_system, BaseConversionMap};

    fn ternary() -> CantorSystem {
        validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap()
    }

    fn square() -> CantorSystem {
        validate_system(BaseConversionMap::new(2, 4, vec![0, 1, 4]).unwrap()).unwrap()
    }

    #[test]
    fn d_value_examples() {
        let sys = ternary();
        // .1000... -> f(1)/3 = 2/3
        let d = d_value_exact(&sys, &[1, 0, 0, 0]);
        assert_eq!(d, Rational::from((2, 3)));
        // .010101... -> 1/4
        let e = FractionalExpansion::from_rational(&Rational::from((1, 3)), 2).unwrap();
        let d = d_value_exact(&sys, &e.digits_prefix(60));
        let df = crate::hp::float_rat(96, &d).to_f64();
        assert!((df - 0.25).abs() < 1e-25);
        // all zeros -> 0
        assert_eq!(d_value_exact(&sys, &[0, 0, 0]), Rational::new());
    }

    #[test]
    fn lambda_at_integers_equals_ratio() {
        let sys = ternary();
        for n in [1u64, 2, 3, 5, 9] {
            let e = FractionalExpansion::from_rational(&Rational::from(n), 2).unwrap();
            let l = lambda_value(&sys, &e, 64, 128).unwrap();
            let r = sys.ratio(n, 128);
            let diff = Float::with_val(128, &l.value - &r).abs();
            assert!(diff.to_f64() < 1e-35);
        }
    }

    #[test]
    fn lambda_at_four_thirds() {
        let sys = ternary();
        let e = FractionalExpansion::from_rational(&Rational::from((4, 3)), 2).unwrap();
        let l = lambda_value(&sys, &e, 80, 128).unwrap();
        assert!((l.value.to_f64() - 1.4261306236727794).abs() < 1e-14);
    }

    #[test]
    fn lambda_periodicity() {
        let sys = square();
        for num in [7u32, 11, 25, 1] {
            let x = Rational::from((num, 6));
            let x3 = x.clone() * 3u32;
            let e = FractionalExpansion::from_rational(&x, 3).unwrap();
            let e3 = FractionalExpansion::from_rational(&x3, 3).unwrap();
            let a = lambda_value(&sys, &e, 80, 128).unwrap();
            let b = lambda_value(&sys, &e3, 80, 128).unwrap();
            let diff = Float::with_val(128, &a.value - &b.value).abs();
            let bound = Float::with_val(128, &a.abs_err + &b.abs_err);
            assert!(diff <= bound, "diff {diff} bound {bound}");
        }
    }

    #[test]
    fn cantor_function_middle_thirds() {
        let sys = ternary();
        let g = cantor_function_g(&sys, &Rational::from((1, 3)), 40, 128).unwrap();
        assert_eq!(g.value.to_f64(), 0.5);
        let g = cantor_function_g(&sys, &Rational::from((1, 2)), 40, 128).unwrap();
        assert_eq!(g.value.to_f64(), 0.5); // central gap plateau
        let g = cantor_function_g(&sys, &Rational::from((1, 9)), 40, 128).unwrap();
        assert_eq!(g.value.to_f64(), 0.25);
        let g = cantor_function_g(&sys, &Rational::from(1u32), 40, 128).unwrap();
        assert_eq!(g.value.to_f64(), 1.0);
        let g = cantor_function_g(&sys, &Rational::new(), 40, 128).unwrap();
        assert_eq!(g.value.to_f64(), 0.0);
    }

    #[test]
    fn density_examples() {
        let sys = ternary();
        let d = density_d(&sys, &Rational::from((1, 3)), 60, 128).unwrap();
        assert!((d.value.to_f64() - 1.0).abs() < 1e-30);
        let d = density_d(&sys, &Rational::from(1u32), 60, 128).unwrap();
        assert_eq!(d.value.to_f64(), 1.0);
        // self-similar scaling d(x/(p+1)) = d(x)
        let x = Rational::from((5, 7));
        let a = density_d(&sys, &x, 80, 128).unwrap();
        let b = density_d(&sys, &(x / 3u32), 80, 128).unwrap();
        let diff = Float::with_val(128, &a.value - &b.value).abs();
        let bound = Float::with_val(128, &a.abs_err + &b.abs_err) * 2u32;
        assert!(diff <= bound);
    }

    #[test]
    fn continuity_at_three_halves() {
        let sys = ternary();
        let x = FractionalExpansion::from_rational(&Rational::from((3, 2)), 2).unwrap();
        let r = continuity_probe(&sys, &x).unwrap();
        assert_eq!(r.class, Continuity::RightOnly);
        assert!((r.value.value.to_f64() - 1.4023960826598818).abs() < 1e-14);
        assert!((r.left_limit.value.to_f64() - 1.2270965723273966).abs() < 1e-14);
        assert!((r.jump.to_f64() - 0.17529951033248523).abs() < 1e-14);
    }

    #[test]
    fn continuity_with_unit_increment() {
        let sys = square();
        // [1.1]_3: last digit 1 has Delta f(1) = 1
        let x = FractionalExpansion::from_parts(1, vec![1], 3).unwrap();
        let r = continuity_probe(&sys, &x).unwrap();
        assert_eq!(r.class, Continuity::LeftAndRight);
        assert!(r.jump.clone().abs().to_f64() < 1e-30);
    }

    #[test]
    fn continuity_rejects_irrational() {
        let sys = ternary();
        let x = FractionalExpansion::from_rational(&Rational::from((4, 3)), 2).unwrap();
        assert!(matches!(
            continuity_probe(&sys, &x),
            Err(Error::NotRational)
        ));
    }

    #[test]
    fn holder_probe_slopes() {
        let sys = ternary();
        // seeded pseudo-random digit prefix
        let mut digits = Vec::new();
        let mut state = 42u64;
        for _ in 0..60 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            digits.push((state >> 62) as u32 & 1);
        }
        let x0 = FractionalExpansion::from_parts(1, digits, 2).unwrap();
        let grid: Vec<Rational> = (8..=40).map(|j| hp::rational_power(2, -j)).collect();
        let rep = holder_probe(&sys, &x0, &grid, 0.15).unwrap();
        assert!(rep.slope_d >= rep.target_exponent, "{:?}", rep);
        // lambda itself is differentiable at normal points: slope near 1
        assert!((rep.slope_lambda - 1.0).abs() < 0.35, "{:?}", rep);
        assert_eq!(rep.block_stats.len(), 3);
    }

    #[test]
    fn holder_probe_degenerate_grid() {
        let sys = ternary();
        let x0 = FractionalExpansion::from_parts(1, vec![1, 0, 1], 2).unwrap();
        let grid: Vec<Rational> = (8..=10).map(|j| hp::rational_power(2, -j)).collect();
        assert!(matches!(
            holder_probe(&sys, &x0, &grid, 0.15),
            Err(Error::DegenerateGrid { .. })
        ));
    }

    #[test]
    fn holder_probe_nonnormal_tail_flags() {
        let sys = ternary();
        // all-zero tail: maximally non-normal
        let x0 = FractionalExpansion::from_parts(1, vec![1], 2).unwrap();
        let grid: Vec<Rational> = (8..=40).map(|j| hp::rational_power(2, -j)).collect();
        let rep = holder_probe(&sys, &x0, &grid, 0.15).unwrap();
        // still returns numbers, and the block statistic flags the bias
        assert!(rep.block_stats[0].max_deviation > 0.4);
    }

    #[test]
    fn d_inverts_g_on_finite_addresses() {
        let sys = square();
        // t = f-weighted value of address [1, 2, 1]
        let t = d_value_exact(&sys, &[1, 2, 1]);
        let desc = g_digits(&sys, &t, 40).unwrap();
        assert!(desc.digits.starts_with(&[1, 2, 1]));
        let d_back = d_value_exact(&sys, &desc.digits);
        assert!((d_back.to_f64() - t.to_f64()).abs() < 1e-18);
    }
}
