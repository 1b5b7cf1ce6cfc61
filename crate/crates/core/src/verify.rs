//! Cross-module invariant suite behind the `verify` subcommand.
//!
//! Each check returns ok or a failure description; the CLI prints one
//! line per check and exits nonzero when anything fails.

use crate::compare::{compare, Candidate};
use crate::digits::{from_digits, to_digits};
use crate::distribution::theta_densities;
use crate::expansion::FractionalExpansion;
use crate::extrema::{brute_force_extrema, extrema_thm};
use crate::hp::{self, Complex};
use crate::limit::{depth_for, lambda_value};
use crate::mellin::{g_numerator, s_consistency_scan};
use crate::system::CantorSystem;
use crate::zeta::{riemann_zeta, ZetaParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Float, Integer, Rational};
use std::cmp::Ordering;

pub struct Check {
    pub name: &'static str,
    pub outcome: Result<(), String>,
}

fn check(name: &'static str, outcome: Result<(), String>) -> Check {
    Check { name, outcome }
}

/// Runs the invariant suite on one system. `quick` trims scan ranges.
pub fn run_all(sys: &CantorSystem, prec: u32, seed: u64, quick: bool) -> Vec<Check> {
    let n_scan: u64 = if quick { 20_000 } else { 100_000 };
    let mut out = Vec::new();

    out.push(check("digit_round_trip", {
        let cap = if quick { 20_000 } else { 1_000_000 };
        let mut bad = None;
        'outer: for base in 2..=11u32 {
            for n in (0..cap).step_by(7) {
                if from_digits(&to_digits(n, base)) != n {
                    bad = Some((n, base));
                    break 'outer;
                }
            }
        }
        bad.map_or(Ok(()), |(n, b)| Err(format!("n={n} base={b}")))
    }));

    out.push(check("strategy_equality", {
        let mut bad = None;
        for n in 0..n_scan {
            if sys.cantor_digit_map(n) != sys.cantor_recurrence(n) {
                bad = Some(n);
                break;
            }
        }
        bad.map_or(Ok(()), |n| Err(format!("n={n}")))
    }));

    out.push(check("zero_padding_law", {
        let mut bad = None;
        'outer: for u in 1..200u64 {
            let mut expect = sys.cantor_value(u);
            let mut n = u;
            for _ in 1..=8 {
                n = n.saturating_mul(sys.src_base());
                expect *= sys.radix();
                if sys.cantor_value(n) != expect {
                    bad = Some(n);
                    break 'outer;
                }
            }
        }
        bad.map_or(Ok(()), |n| Err(format!("n={n}")))
    }));

    out.push(check("growth_bound", {
        // C_n / n >= (f(m)+m+1)/(2m+1) for n >= m+1
        let bound = Rational::from((sys.f_m() + sys.m() as u64 + 1, 2 * sys.m() as u64 + 1));
        let mut bad = None;
        for n in sys.src_base()..n_scan.min(50_000) {
            let lhs = Rational::from(sys.cantor_value(n)) / Rational::from(n);
            if lhs < bound {
                bad = Some(n);
                break;
            }
        }
        bad.map_or(Ok(()), |n| Err(format!("n={n}")))
    }));

    out.push(check("append_top_digit_monotone", {
        // ratio((m+1)n + m) <= ratio(n) for n >= m+1
        let mut bad = None;
        for n in sys.src_base()..10_000 {
            let a = Candidate::plain(sys, sys.src_base() * n + sys.m() as u64);
            let b = Candidate::plain(sys, n);
            if compare(sys, &a, &b, prec) == Ordering::Greater {
                bad = Some(n);
                break;
            }
        }
        bad.map_or(Ok(()), |n| Err(format!("n={n}")))
    }));

    out.push(check("delta_telescopes", {
        let mut acc = Integer::from(0);
        let mut bad = None;
        for n in 1..n_scan.min(50_000) {
            acc += sys.delta_cantor(n);
            if acc != sys.cantor_value(n) {
                bad = Some(n);
                break;
            }
        }
        bad.map_or(Ok(()), |n| Err(format!("n={n}")))
    }));

    out.push(check("summation_consistency", {
        s_consistency_scan(sys, n_scan.min(100_000)).map_or(Ok(()), |n| Err(format!("n={n}")))
    }));

    if sys.theorem_scope() {
        out.push(check("g_statistic_periodicity", {
            let scale = Rational::from(sys.src_base() * sys.radix());
            let mut bad = None;
            for n in 1..=n_scan.min(100_000) / sys.src_base() {
                let eta = g_numerator(sys, n).expect("theorem scope");
                let eta_b = g_numerator(sys, sys.src_base() * n).expect("theorem scope");
                if eta_b != eta * scale.clone() {
                    bad = Some(n);
                    break;
                }
            }
            bad.map_or(Ok(()), |n| Err(format!("n={n}")))
        }));

        out.push(check("extrema_theorem_vs_brute_force", {
            let ext = extrema_thm(sys, prec).expect("theorem scope");
            let n_max = (sys.src_base() as u128).pow(8).min(1 << 22) as u64;
            let bf = brute_force_extrema(sys, n_max, prec);
            let tol = Float::with_val(prec, Float::u_exp(1, -(prec as i32) + 16));
            let ds = Float::with_val(prec, &ext.supremum - &bf.sup.value).abs();
            let di = Float::with_val(prec, &ext.infimum - &bf.min_inf_form.value).abs();
            if ds > tol {
                Err(format!("sup mismatch {ds}"))
            } else if di > tol {
                Err(format!("inf mismatch {di}"))
            } else {
                Ok(())
            }
        }));

        out.push(check("theta_identities_and_samples", {
            let samples = if quick { 200 } else { 10_000 };
            let r = theta_densities(sys, samples, seed, 1e-2, prec).expect("theorem scope");
            let ext = extrema_thm(sys, prec).expect("scope");
            let wide = prec + hp::GUARD_BITS;
            let inv_alpha = Float::with_val(wide, sys.alpha(wide).recip_ref());
            let lhs = Float::with_val(
                prec,
                &r.theta_lower
                    * &hp::pow_real(&Float::with_val(wide, &ext.supremum), &inv_alpha),
            );
            let rhs = Float::with_val(
                prec,
                &r.theta_upper
                    * &hp::pow_real(&Float::with_val(wide, &ext.infimum), &inv_alpha),
            );
            let tol = Float::with_val(prec, Float::u_exp(1, -(prec as i32) + 12));
            let d1 = Float::with_val(prec, &lhs - 1u32).abs();
            let d2 = Float::with_val(prec, &rhs - 1u32).abs();
            if r.violations > 0 {
                Err(format!("{} samples out of range", r.violations))
            } else if d1 > tol || d2 > tol {
                Err(format!("identity residues {d1} {d2}"))
            } else {
                Ok(())
            }
        }));
    }

    out.push(check("lambda_scaling", {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let depth = depth_for(sys, prec);
        let count = if quick { 100 } else { 1000 };
        let mut worst = 0f64;
        let mut bad = None;
        for _ in 0..count {
            let mant: u64 = rng.gen_range(0..1u64 << 40);
            let x = Rational::from((mant, 1u64 << 40)) * Rational::from(sys.m())
                + Rational::from(1u32);
            let xb = x.clone() * Rational::from(sys.src_base());
            let a = lambda_value(
                sys,
                &FractionalExpansion::from_rational(&x, sys.src_base() as u32).unwrap(),
                depth,
                prec,
            )
            .unwrap();
            let b = lambda_value(
                sys,
                &FractionalExpansion::from_rational(&xb, sys.src_base() as u32).unwrap(),
                depth,
                prec,
            )
            .unwrap();
            let diff = Float::with_val(prec, &a.value - &b.value).abs();
            let bound = Float::with_val(prec, &a.abs_err + &b.abs_err);
            let rel = diff.to_f64() / a.value.to_f64();
            worst = worst.max(rel);
            if diff > bound {
                bad = Some(x.to_f64());
                break;
            }
        }
        let cap = 2f64.powi(-(prec as i32) + 8);
        match bad {
            Some(x) => Err(format!("bound exceeded at x={x}")),
            None if worst > cap => Err(format!("relative spread {worst} above 2^-(P-8)")),
            None => Ok(()),
        }
    }));

    out.push(check("zeta_identities", {
        let z2 = riemann_zeta(
            &Complex::from_f64(prec + 32, 2.0, 0.0),
            &ZetaParams::default(),
            prec,
        )
        .expect("not a pole");
        let pi = Float::with_val(prec, rug::float::Constant::Pi);
        let expect = pi.clone().square() / 6u32;
        let d = Float::with_val(prec, &z2.value.re - &expect).abs();
        if d.to_f64() < 1e-12 {
            Ok(())
        } else {
            Err(format!("zeta(2) off by {d}"))
        }
    }));

    out
}
