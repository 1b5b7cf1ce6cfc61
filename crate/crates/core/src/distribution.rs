//! Distribution of the normalized sequence: density in the extremal
//! interval, logarithmic distribution function, pointwise measure density
//! at zero, and the phase-window demonstration that a plain cumulative
//! distribution cannot settle.

use crate::compare::{compare, Candidate};
use crate::error::{Error, Result};
use crate::extrema::{empirical_thresholds, extrema_thm};
use crate::hp;
use crate::limit::density_d;
use crate::system::CantorSystem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;

/// Greedy subsequence construction toward a target value gamma.
#[derive(Debug, Clone)]
pub struct GreedyResult {
    pub indices: Vec<u64>,
    pub ratios: Vec<Float>,
    pub final_distance: Float,
}

/// The proof-recipe construction: start at the smallest digit whose ratio
/// clears gamma, zero-pad through the empirical threshold level, then
/// append the largest digit that keeps the ratio at or above gamma.
///
/// The returned ratios are non-increasing once the thresholds are passed;
/// the final distance is reported, not asserted (targets below the
/// starting digit's tail limit stall above gamma).
pub fn greedy_subsequence(
    sys: &CantorSystem,
    gamma: &Float,
    steps: usize,
    prec: u32,
) -> Result<GreedyResult> {
    assert!(steps >= 1);
    let ext = extrema_thm(sys, prec)?;
    if !(gamma > &ext.infimum && gamma < &ext.supremum) {
        return Err(Error::OutOfInterval {
            gamma: hp::format_float(gamma),
            inf: hp::format_float(&ext.infimum),
            sup: hp::format_float(&ext.supremum),
        });
    }
    let (k0, k1) = empirical_thresholds(sys, sys.src_base().pow(8))?;
    let k2 = k0.max(k1) as usize;
    let base = sys.src_base();

    // n1: smallest digit attaining the least ratio that still clears gamma
    let mut start: Option<(u32, Float)> = None;
    for eps in 1..=sys.m() {
        let r = sys.ratio(eps as u64, prec);
        if &r >= gamma {
            match &start {
                Some((_, best)) if &r >= best => {}
                _ => start = Some((eps, r)),
            }
        }
    }
    let (n1, r1) = start.expect("gamma < supremum guarantees a starting digit");

    let mut n: u64 = n1 as u64;
    let mut c: Integer = sys.cantor_value(n);
    let mut indices = vec![n];
    let mut ratios = vec![r1];
    for k in 2..=steps {
        if n > u64::MAX / (base + 1) {
            break;
        }
        let chosen = if k <= k2 {
            0
        } else {
            let mut pick = 0;
            for eps in (1..=sys.m()).rev() {
                let cand = n * base + eps as u64;
                let r = ratio_of_appended(sys, &c, cand, prec);
                if &r >= gamma {
                    pick = eps;
                    break;
                }
            }
            pick
        };
        n = n * base + chosen as u64;
        c = c * sys.radix() + sys.f(chosen);
        let r = {
            let wide = prec + hp::GUARD_BITS;
            let num = Float::with_val(wide, &c);
            let den = hp::pow_u64(n, &sys.alpha(wide));
            Float::with_val(prec, num / den)
        };
        indices.push(n);
        ratios.push(r);
    }
    let last = ratios.last().unwrap();
    let final_distance = Float::with_val(prec, last - gamma).abs();
    Ok(GreedyResult {
        indices,
        ratios,
        final_distance,
    })
}

fn ratio_of_appended(sys: &CantorSystem, c_parent: &Integer, n: u64, prec: u32) -> Float {
    let digit = (n % sys.src_base()) as u32;
    let c = c_parent.clone() * sys.radix() + sys.f(digit);
    let wide = prec + hp::GUARD_BITS;
    let num = Float::with_val(wide, &c);
    let den = hp::pow_u64(n, &sys.alpha(wide));
    Float::with_val(prec, num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMethod {
    Greedy,
    Scan,
}

#[derive(Debug, Clone)]
pub struct CoverWitness {
    pub gamma: Float,
    pub n: u64,
    pub distance: Float,
    pub method: CoverMethod,
}

#[derive(Debug, Clone)]
pub struct CoverReport {
    pub witnesses: Vec<CoverWitness>,
    pub epsilon: Float,
    pub n_max: u64,
    /// indices into `witnesses` whose distance still exceeds epsilon
    pub failures: Vec<usize>,
}

/// Covers a uniform grid of targets in [inf+eps, sup-eps] by witnesses
/// n <= n_max, greedy construction first, full scan for the leftovers.
/// Failures are reported as data, not errors.
pub fn density_cover(
    sys: &CantorSystem,
    grid_size: usize,
    epsilon: &Float,
    n_max: u64,
    prec: u32,
) -> Result<CoverReport> {
    assert!(grid_size >= 2, "grid must have at least two points");
    let ext = extrema_thm(sys, prec)?;
    let lo = Float::with_val(prec, &ext.infimum + epsilon);
    let hi = Float::with_val(prec, &ext.supremum - epsilon);
    let span = Float::with_val(prec, &hi - &lo);
    let gammas: Vec<Float> = (0..grid_size)
        .map(|j| {
            let t = Float::with_val(prec, j as u64) / Float::with_val(prec, grid_size as u64 - 1);
            Float::with_val(prec, &lo + &(span.clone() * t))
        })
        .collect();

    let steps = {
        let mut k = 0usize;
        let mut pw = 1u64;
        while pw <= n_max / sys.src_base() {
            pw *= sys.src_base();
            k += 1;
        }
        k.max(2)
    };

    let mut witnesses: Vec<CoverWitness> = gammas
        .par_iter()
        .map(|gamma| {
            let g = greedy_subsequence(sys, gamma, steps, prec)
                .expect("grid targets sit strictly inside the interval");
            // best element of the constructed sequence
            let mut best = (g.indices[0], Float::with_val(prec, &g.ratios[0] - gamma).abs());
            for (ix, r) in g.indices.iter().zip(g.ratios.iter()).skip(1) {
                let d = Float::with_val(prec, r - gamma).abs();
                if d < best.1 {
                    best = (*ix, d);
                }
            }
            CoverWitness {
                gamma: gamma.clone(),
                n: best.0,
                distance: best.1,
                method: CoverMethod::Greedy,
            }
        })
        .collect();

    // scan fallback for targets the greedy could not approach
    let missed: Vec<usize> = witnesses
        .iter()
        .enumerate()
        .filter(|(_, w)| w.distance > *epsilon)
        .map(|(i, _)| i)
        .collect();
    if !missed.is_empty() {
        let targets: Vec<(usize, f64)> = missed
            .iter()
            .map(|&i| (i, witnesses[i].gamma.to_f64()))
            .collect();
        let found = scan_nearest(sys, &targets, n_max);
        for ((idx, _), (n, _)) in targets.iter().zip(found) {
            let r = sys.ratio(n, prec);
            let d = Float::with_val(prec, &r - &witnesses[*idx].gamma).abs();
            if d < witnesses[*idx].distance {
                witnesses[*idx] = CoverWitness {
                    gamma: witnesses[*idx].gamma.clone(),
                    n,
                    distance: d,
                    method: CoverMethod::Scan,
                };
            }
        }
    }
    let failures = witnesses
        .iter()
        .enumerate()
        .filter(|(_, w)| w.distance > *epsilon)
        .map(|(i, _)| i)
        .collect();
    Ok(CoverReport {
        witnesses,
        epsilon: epsilon.clone(),
        n_max,
        failures,
    })
}

/// For each target value, the index n <= n_max whose ratio lands nearest
/// (f64 screening; deterministic block merge keeps the lowest index).
fn scan_nearest(sys: &CantorSystem, targets: &[(usize, f64)], n_max: u64) -> Vec<(u64, f64)> {
    let mut sorted: Vec<(usize, f64)> = targets.to_vec();
    sorted.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    let values: Vec<f64> = sorted.iter().map(|t| t.1).collect();
    const BLOCK: u64 = 1 << 18;
    let blocks: Vec<(u64, u64)> = (1..=n_max)
        .step_by(BLOCK as usize)
        .map(|s| (s, (s + BLOCK - 1).min(n_max)))
        .collect();
    let per_block: Vec<Vec<(u64, f64)>> = blocks
        .par_iter()
        .map(|&(s, e)| {
            let mut best: Vec<(u64, f64)> = vec![(0, f64::INFINITY); values.len()];
            for n in s..=e {
                let r = sys.ratio_f64(n);
                let pos = values.partition_point(|&v| v < r);
                for cand in [pos.wrapping_sub(1), pos] {
                    if cand < values.len() {
                        let d = (r - values[cand]).abs();
                        if d < best[cand].1 {
                            best[cand] = (n, d);
                        }
                    }
                }
            }
            best
        })
        .collect();
    let mut merged: Vec<(u64, f64)> = vec![(0, f64::INFINITY); values.len()];
    for b in per_block {
        for (i, (n, d)) in b.into_iter().enumerate() {
            if d < merged[i].1 {
                merged[i] = (n, d);
            }
        }
    }
    // return in the original target order
    let mut out = vec![(0u64, f64::INFINITY); targets.len()];
    for (slot, (orig_idx, _)) in sorted.iter().enumerate() {
        let pos = targets.iter().position(|(i, _)| i == orig_idx).unwrap();
        out[pos] = merged[slot];
    }
    out
}

/// Logarithmic distribution function value with a certified-cell error
/// estimate.
#[derive(Debug, Clone)]
pub struct LogDistResult {
    pub gamma: Float,
    pub l_value: Float,
    pub resolution: u64,
    pub error_estimate: Float,
}

/// Reusable cell table: lambda range per base-(m+1)-rational cell of
/// [1, m+1].
pub struct LogDistTable {
    lam_lo: Vec<f64>,
    lam_hi: Vec<f64>,
    weight: Vec<f64>,
    cells: u64,
    prec: u32,
}

const LOGDIST_SLACK: f64 = 1e-12;

impl LogDistTable {
    pub fn build(sys: &CantorSystem, resolution: u64, prec: u32) -> Self {
        let base = sys.src_base();
        let m = sys.m() as u64;
        let mut depth = 0u32;
        let mut cells = m as u128;
        while cells < resolution as u128 {
            cells *= base as u128;
            depth += 1;
        }
        let pk = base.pow(depth);
        let cells = (m * pk) as usize;
        let alpha = sys.alpha_f64();
        let radix = sys.radix() as f64;
        let ln_base = (base as f64).ln();
        let tail = radix.powi(-(depth as i32)); // bound on the unseen digit tail of D
        let inv_pk = 1.0 / pk as f64;

        let lam: Vec<(f64, f64, f64)> = (0..cells as u64)
            .into_par_iter()
            .map(|j| {
                let idx = pk + j;
                let mut digits = [0u32; 40];
                let mut t = idx;
                let mut len = 0;
                while t > 0 {
                    digits[len] = (t % base) as u32;
                    len += 1;
                    t /= base;
                }
                let int_digit = digits[len - 1];
                let mut d = 0f64;
                for r in 1..len {
                    d += sys.f(digits[len - 1 - r]) as f64 / radix.powi(r as i32);
                }
                let x0 = idx as f64 * inv_pk;
                let x1 = (idx + 1) as f64 * inv_pk;
                let num_lo = sys.f(int_digit) as f64 + d;
                let lo = num_lo / x1.powf(alpha) - LOGDIST_SLACK;
                let hi = (num_lo + tail) / x0.powf(alpha) + LOGDIST_SLACK;
                let w = (1.0 / idx as f64).ln_1p() / ln_base;
                (lo, hi, w)
            })
            .collect();
        LogDistTable {
            lam_lo: lam.iter().map(|c| c.0).collect(),
            lam_hi: lam.iter().map(|c| c.1).collect(),
            weight: lam.iter().map(|c| c.2).collect(),
            cells: cells as u64,
            prec,
        }
    }

    /// L(gamma): certified cells contribute their exact logarithmic
    /// weight, straddling cells go into the error estimate.
    pub fn evaluate(&self, gamma: f64) -> LogDistResult {
        let mut l = 0f64;
        let mut err = 0f64;
        for j in 0..self.lam_lo.len() {
            if self.lam_hi[j] <= gamma {
                l += self.weight[j];
            } else if self.lam_lo[j] <= gamma {
                err += self.weight[j];
            }
        }
        err += self.cells as f64 * 1e-16;
        LogDistResult {
            gamma: Float::with_val(self.prec, gamma),
            l_value: Float::with_val(self.prec, l),
            resolution: self.cells,
            error_estimate: Float::with_val(self.prec, err),
        }
    }
}

/// L(gamma) at the requested resolution (at least 100 cells).
pub fn log_distribution(
    sys: &CantorSystem,
    gamma: &Float,
    resolution: u64,
    prec: u32,
) -> Result<LogDistResult> {
    if resolution < 100 {
        return Err(Error::OutOfDomain(
            "log distribution needs resolution >= 100".into(),
        ));
    }
    let table = LogDistTable::build(sys, resolution, prec);
    Ok(table.evaluate(gamma.to_f64()))
}

/// Pointwise density endpoints of the measure at 0, with a seeded
/// sampling verification along x (f(m)+1)^{-k}.
#[derive(Debug, Clone)]
pub struct ThetaReport {
    pub theta_lower: Float,
    pub theta_upper: Float,
    pub sampled_min: Float,
    pub sampled_max: Float,
    pub samples: usize,
    pub violations: usize,
    pub tolerance: Float,
}

pub fn theta_densities(
    sys: &CantorSystem,
    samples: usize,
    seed: u64,
    tolerance: f64,
    prec: u32,
) -> Result<ThetaReport> {
    let ext = extrema_thm(sys, prec)?;
    let wide = prec + hp::GUARD_BITS;
    let neg_inv_alpha = Float::with_val(wide, -1) / sys.alpha(wide);
    let theta_lower = hp::pow_real(&Float::with_val(wide, &ext.supremum), &neg_inv_alpha);
    let theta_upper = hp::pow_real(&Float::with_val(wide, &ext.infimum), &neg_inv_alpha);
    let theta_lower = Float::with_val(prec, theta_lower);
    let theta_upper = Float::with_val(prec, theta_upper);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth = crate::limit::depth_for(sys, prec).max(48);
    let tol = Float::with_val(prec, tolerance);
    let lo_bound = Float::with_val(prec, &theta_lower - &tol);
    let hi_bound = Float::with_val(prec, &theta_upper + &tol);
    let mut sampled_min: Option<Float> = None;
    let mut sampled_max: Option<Float> = None;
    let mut violations = 0usize;
    for _ in 0..samples {
        // dyadic x in (1/radix, 1], then scaled down k levels
        let mant: u64 = rng.gen_range(1..=1u64 << 48);
        let x0 = Rational::from((mant, 1u64 << 48));
        let x0 = Rational::from((sys.radix() - 1, sys.radix())) * x0
            + Rational::from((1u64, sys.radix()));
        let k = rng.gen_range(0u32..10);
        let x = x0 / hp::rational_power(sys.radix(), k as i64);
        let d = density_d(sys, &x, depth, prec)?;
        if d.value < lo_bound || d.value > hi_bound {
            violations += 1;
        }
        sampled_min = Some(match sampled_min {
            None => d.value.clone(),
            Some(cur) => cur.min(&d.value),
        });
        sampled_max = Some(match sampled_max {
            None => d.value.clone(),
            Some(cur) => cur.max(&d.value),
        });
    }
    Ok(ThetaReport {
        theta_lower,
        theta_upper,
        sampled_min: sampled_min.unwrap_or_else(|| Float::with_val(prec, 0)),
        sampled_max: sampled_max.unwrap_or_else(|| Float::with_val(prec, 0)),
        samples,
        violations,
        tolerance: tol,
    })
}

/// Counting windows for the cumulative-distribution demonstration.
#[derive(Debug, Clone)]
pub struct CdfWindow {
    pub k: u32,
    /// (phase t, window length N, A_N / N)
    pub counts: Vec<(f64, u64, f64)>,
    pub spread: f64,
}

#[derive(Debug, Clone)]
pub struct CdfProbe {
    pub gamma: Float,
    pub windows: Vec<CdfWindow>,
}

/// A_N(gamma)/N along N = floor(t (m+1)^k) for a fixed set of phases t.
/// A spread that stays bounded away from zero as k grows is the
/// oscillation report; no convergence claim is made either way.
pub fn empirical_cdf_probe(
    sys: &CantorSystem,
    gamma: &Float,
    window_exponents: &[u32],
    phases: &[f64],
    prec: u32,
) -> Result<CdfProbe> {
    assert!(!window_exponents.is_empty() && !phases.is_empty());
    let base = sys.src_base();
    let gamma_f64 = gamma.to_f64();
    let k_max = *window_exponents.iter().max().unwrap();
    let t_max = phases.iter().cloned().fold(1.0f64, f64::max);
    let n_top = (t_max * (base as u128).pow(k_max) as f64).floor() as u64;

    // all window endpoints, then one counting pass
    let mut marks: Vec<(u64, usize)> = Vec::new();
    let mut windows: Vec<CdfWindow> = window_exponents
        .iter()
        .map(|&k| CdfWindow {
            k,
            counts: phases
                .iter()
                .map(|&t| (t, (t * (base as u128).pow(k) as f64).floor() as u64, 0.0))
                .collect(),
            spread: 0.0,
        })
        .collect();
    for (wi, w) in windows.iter().enumerate() {
        for (pi, &(_, n, _)) in w.counts.iter().enumerate() {
            marks.push((n, wi * phases.len() + pi));
        }
    }
    marks.sort_unstable();

    let mut count: u64 = 0;
    let mut mark_iter = marks.iter().peekable();
    for n in 1..=n_top {
        let r = sys.ratio_f64(n);
        let below = if (r - gamma_f64).abs() < 1e-12 {
            compare(
                sys,
                &Candidate::plain(sys, n),
                &Candidate {
                    n: 0,
                    num: float_to_rational(gamma),
                    den: 1,
                },
                prec,
            ) != Ordering::Greater
        } else {
            r <= gamma_f64
        };
        if below {
            count += 1;
        }
        while let Some(&&(mark_n, slot)) = mark_iter.peek() {
            if mark_n == n {
                let wi = slot / phases.len();
                let pi = slot % phases.len();
                windows[wi].counts[pi].2 = count as f64 / mark_n as f64;
                mark_iter.next();
            } else {
                break;
            }
        }
    }
    for w in &mut windows {
        let lo = w.counts.iter().map(|c| c.2).fold(f64::INFINITY, f64::min);
        let hi = w.counts.iter().map(|c| c.2).fold(0.0f64, f64::max);
        w.spread = hi - lo;
    }
    Ok(CdfProbe {
        gamma: gamma.clone(),
        windows,
    })
}

fn float_to_rational(x: &Float) -> Rational {
    x.to_rational().unwrap_or_default()
}

/// Default phase grid: eight offsets across [1, m+1).
pub fn default_phases(sys: &CantorSystem) -> Vec<f64> {
    (0..8).map(|i| 1.0 + i as f64 * sys.m() as f64 / 8.0).collect()
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
    fn greedy_reaches_mid_targets() {
        let sys = square();
        let gamma = Float::with_val(128, 1.0f64);
        let g = greedy_subsequence(&sys, &gamma, 24, 128).unwrap();
        assert!(g.final_distance.to_f64() < 1e-3, "{}", g.final_distance);
        // non-increasing after the threshold prefix
        for w in g.ratios.windows(2).skip(1) {
            assert!(w[0] >= w[1] || (w[0].to_f64() - w[1].to_f64()).abs() < 1e-25);
        }
    }

    #[test]
    fn greedy_near_infimum_on_ternary() {
        let sys = ternary();
        let gamma = Float::with_val(128, 1.0001f64);
        let g = greedy_subsequence(&sys, &gamma, 24, 128).unwrap();
        assert!(g.final_distance.to_f64() < 1e-3);
        let last = g.ratios.last().unwrap().to_f64();
        assert!((1.0001 - 1e-12..=1.0001 + 1e-3).contains(&last));
    }

    #[test]
    fn greedy_rejects_outside_targets() {
        let sys = ternary();
        let gamma = Float::with_val(128, 2.1f64);
        assert!(matches!(
            greedy_subsequence(&sys, &gamma, 8, 128),
            Err(Error::OutOfInterval { .. })
        ));
    }

    #[test]
    fn small_cover_grid() {
        let sys = ternary();
        let eps = Float::with_val(128, 0.5f64);
        let report = density_cover(&sys, 2, &eps, 4096, 128).unwrap();
        assert!(report.failures.is_empty());
    }

    #[test]
    fn cover_with_scan_fallback() {
        let sys = square();
        // targets inside the zone the greedy cannot reach from a digit
        let eps = Float::with_val(128, 1e-3);
        let report = density_cover(&sys, 12, &eps, 3u64.pow(12), 128).unwrap();
        assert!(report.failures.is_empty(), "failures: {:?}", report.failures);
        assert!(report
            .witnesses
            .iter()
            .any(|w| w.method == CoverMethod::Scan));
    }

    #[test]
    fn log_distribution_endpoints() {
        let sys = ternary();
        let table = LogDistTable::build(&sys, 1 << 16, 64);
        let below = table.evaluate(0.9);
        assert_eq!(below.l_value.to_f64(), 0.0);
        let at_sup = table.evaluate(2.0);
        assert!((at_sup.l_value.to_f64() - 1.0).abs() <= at_sup.error_estimate.to_f64());
        // monotone sweep
        let mut prev = -1.0;
        for i in 0..=20 {
            let g = 0.95 + i as f64 * 0.055;
            let r = table.evaluate(g);
            assert!(r.l_value.to_f64() >= prev);
            prev = r.l_value.to_f64();
        }
    }

    #[test]
    fn log_distribution_resolution_precondition() {
        let sys = ternary();
        let g = Float::with_val(64, 1.5f64);
        assert!(log_distribution(&sys, &g, 10, 64).is_err());
        assert!(log_distribution(&sys, &g, 200, 64).is_ok());
    }

    #[test]
    fn theta_endpoints_ternary() {
        let sys = ternary();
        let r = theta_densities(&sys, 500, 7, 1e-2, 128).unwrap();
        // Theta_* = 2^{-1/alpha} = 2^{-log_3 2}, Theta^* = 1
        assert!((r.theta_lower.to_f64() - 0.6457601171650976).abs() < 1e-12);
        assert!((r.theta_upper.to_f64() - 1.0).abs() < 1e-12);
        assert_eq!(r.violations, 0);
        assert!(r.sampled_max.to_f64() <= 1.0 + 1e-2);
        assert!(r.sampled_min.to_f64() >= r.theta_lower.to_f64() - 1e-2);
    }

    #[test]
    fn theta_identities_at_precision() {
        let sys = square();
        let prec = 128;
        let r = theta_densities(&sys, 50, 1, 1e-2, prec).unwrap();
        let ext = extrema_thm(&sys, prec).unwrap();
        let wide = prec + hp::GUARD_BITS;
        let inv_alpha = Float::with_val(wide, sys.alpha(wide).recip_ref());
        let lhs = Float::with_val(
            prec,
            &r.theta_lower * &hp::pow_real(&Float::with_val(wide, &ext.supremum), &inv_alpha),
        );
        let diff = Float::with_val(prec, &lhs - 1u32).abs();
        assert!(diff.to_f64() < 1e-36);
    }

    #[test]
    fn cdf_probe_spread() {
        let sys = ternary();
        let gamma = Float::with_val(64, 1.3f64);
        let ks: Vec<u32> = (6..=12).collect();
        let phases = default_phases(&sys);
        let probe = empirical_cdf_probe(&sys, &gamma, &ks, &phases, 64).unwrap();
        for w in &probe.windows {
            assert!(w.spread > 0.01, "k={} spread={}", w.k, w.spread);
        }
        let s8 = probe.windows.iter().find(|w| w.k == 8).unwrap().spread;
        let s12 = probe.windows.iter().find(|w| w.k == 12).unwrap().spread;
        assert!(s12 + 1e-9 >= s8);
    }

    #[test]
    fn cdf_probe_below_infimum_counts_nothing() {
        let sys = ternary();
        let gamma = Float::with_val(64, 0.5f64);
        let probe =
            empirical_cdf_probe(&sys, &gamma, &[6, 8], &default_phases(&sys), 64).unwrap();
        for w in &probe.windows {
            for &(_, _, a) in &w.counts {
                assert_eq!(a, 0.0);
            }
        }
    }
}
