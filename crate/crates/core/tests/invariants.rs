//! Cross-module invariants beyond the per-module unit tests.

use cantorlab::compare::{compare, Candidate};
use cantorlab::expansion::FractionalExpansion;
use cantorlab::extrema::{
    brute_force_extrema, ell0, ell0_inequality_holds, empirical_thresholds, extrema_thm,
    infimum_thm, quadratic_inf_closed_form, quadratic_sup_closed_form, supremum_thm,
};
use cantorlab::limit::{cantor_function_g, depth_for, lambda_value};
use cantorlab::{validate_system, BaseConversionMap, CantorSystem, QuadraticFamily};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Float, Rational};
use std::cmp::Ordering;

const PREC: u32 = 128;

fn ternary() -> CantorSystem {
    validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap()
}

fn squares() -> CantorSystem {
    validate_system(BaseConversionMap::new(2, 4, vec![0, 1, 4]).unwrap()).unwrap()
}

/// Every valid quadratic family with |a|, |b| <= 4 and m <= 5: the closed
/// forms agree with the general finite-scan algorithm, and with a
/// brute-force scan to (m+1)^6.
#[test]
fn quadratic_closed_forms_match_general_algorithm() {
    let mut tested = 0;
    for m in 1..=5u32 {
        for a in -4..=4i64 {
            for b in -4..=4i64 {
                let Ok(fam) = QuadraticFamily::new(a, b, m) else {
                    continue;
                };
                let Ok(sys) = fam.system() else { continue };
                if !sys.theorem_scope() {
                    continue;
                }
                tested += 1;
                let sup_cf = quadratic_sup_closed_form(&fam, PREC).unwrap();
                let sup_thm = supremum_thm(&sys, PREC).unwrap();
                let d = Float::with_val(PREC, &sup_cf.value - &sup_thm.value)
                    .abs()
                    .to_f64();
                assert!(d < 1e-30, "sup mismatch {d} for a={a} b={b} m={m}");

                let inf_cf = quadratic_inf_closed_form(&fam, PREC).unwrap();
                let inf_thm = infimum_thm(&sys, PREC).unwrap();
                let d = Float::with_val(PREC, &inf_cf.value - &inf_thm.value)
                    .abs()
                    .to_f64();
                assert!(d < 1e-30, "inf mismatch {d} for a={a} b={b} m={m}");

                let bf = brute_force_extrema(&sys, (m as u64 + 1).pow(6), PREC);
                let d = Float::with_val(PREC, &bf.sup.value - &sup_thm.value)
                    .abs()
                    .to_f64();
                assert!(d < 1e-30, "brute sup mismatch for a={a} b={b} m={m}");
                let d = Float::with_val(PREC, &bf.min_inf_form.value - &inf_thm.value)
                    .abs()
                    .to_f64();
                assert!(d < 1e-30, "brute inf mismatch for a={a} b={b} m={m}");
            }
        }
    }
    println!("quadratic sweep: {tested} valid families agree across all routes");
    assert!(tested >= 40, "expected a substantial family sweep, got {tested}");
}

/// The defining inequality of ell0 fails at ell0 - 1 and holds at ell0.
#[test]
fn ell0_boundary_sanity() {
    for sys in [ternary(), squares()] {
        let l0 = ell0(&sys).unwrap();
        assert!(ell0_inequality_holds(&sys, l0).unwrap());
        if l0 > 1 {
            assert!(!ell0_inequality_holds(&sys, l0 - 1).unwrap());
        }
    }
}

/// min_{n<=N} ratio(n) approaches the infimum from above at rate
/// N^{-(alpha-1)}; the implied constant is reported.
#[test]
fn infimum_convergence_slack() {
    for (name, sys) in [("ternary", ternary()), ("squares", squares())] {
        let ext = extrema_thm(&sys, PREC).unwrap();
        let alpha = sys.alpha_f64();
        let mut c_max = 0f64;
        for k in [4u32, 6, 8, 10] {
            let n_max = sys.src_base().pow(k);
            let bf = brute_force_extrema(&sys, n_max, PREC);
            let gap = Float::with_val(PREC, &bf.min_ratio.value - &ext.infimum).to_f64();
            assert!(gap >= 0.0, "{name}: plain minimum dipped below the infimum");
            let c = gap * (n_max as f64).powf(alpha - 1.0);
            c_max = c_max.max(c);
        }
        println!("{name}: min ratio - inf <= C N^-(alpha-1) with C = {c_max:.3}");
        assert!(c_max.is_finite() && c_max < 100.0);
    }
}

/// Sampled lambda values stay inside [inf - tol, sup + tol].
#[test]
fn lambda_within_extremal_interval() {
    for sys in [ternary(), squares()] {
        let ext = extrema_thm(&sys, PREC).unwrap();
        let depth = depth_for(&sys, PREC);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (inf, sup) = (ext.infimum.to_f64(), ext.supremum.to_f64());
        for _ in 0..500 {
            let mant: u64 = rng.gen_range(0..1u64 << 40);
            let x = Rational::from((mant, 1u64 << 40)) * Rational::from(sys.m())
                + Rational::from(1u32);
            let e = FractionalExpansion::from_rational(&x, sys.src_base() as u32).unwrap();
            let l = lambda_value(&sys, &e, depth, PREC).unwrap().value.to_f64();
            assert!(l >= inf - 1e-9 && l <= sup + 1e-9, "lambda({x}) = {l}");
        }
    }
}

/// The measure distribution function is monotone on a dense grid with the
/// right endpoints.
#[test]
fn g_monotone_on_grid() {
    let sys = squares();
    let mut prev = Float::with_val(PREC, -1);
    let n = 10_000u32;
    for i in 0..=n {
        let t = Rational::from((i, n));
        let g = cantor_function_g(&sys, &t, 40, PREC).unwrap();
        assert!(g.value >= prev, "g not monotone at {i}/{n}");
        prev = g.value;
    }
    assert_eq!(prev.to_f64(), 1.0);
    let g0 = cantor_function_g(&sys, &Rational::new(), 40, PREC).unwrap();
    assert_eq!(g0.value.to_f64(), 0.0);
}

/// Threshold indices never decrease when the verified range grows.
#[test]
fn thresholds_stable_under_growth() {
    for sys in [ternary(), squares()] {
        let (k0a, k1a) = empirical_thresholds(&sys, 3u64.pow(8)).unwrap();
        let (k0b, k1b) = empirical_thresholds(&sys, 2 * 3u64.pow(8)).unwrap();
        assert!(k0b >= k0a && k1b >= k1a);
        // and a sampled search for chain violations above the threshold
        // level comes back empty
        let base = sys.src_base();
        let start = base.pow(k1a.max(1));
        for n in (start..start + 2000).step_by(7) {
            for eps in 1..=sys.m() as u64 {
                let hi = Candidate::plain(&sys, base * n + eps - 1);
                let lo = Candidate::plain(&sys, base * n + eps);
                assert_eq!(compare(&sys, &hi, &lo, PREC), Ordering::Greater);
            }
        }
    }
}

/// The Dirichlet closed form matches a long direct partial sum at a
/// fixed real point well inside the half-plane.
#[test]
fn dirichlet_closed_form_squares_at_three() {
    use cantorlab::hp::Complex;
    use cantorlab::mellin::{delta_dirichlet_partial, delta_dirichlet_series};
    let sys = squares();
    let s = Complex::from_f64(PREC + 32, 3.0, 0.0);
    let closed = delta_dirichlet_series(&sys, &s, 0.1, PREC).unwrap();
    let (partial, tail) = delta_dirichlet_partial(&sys, &s, 1_000_000, PREC);
    let diff = closed.value.sub(&partial).abs_f64();
    assert!(diff < 1e-8, "diff {diff} above 1e-8 (tail bound {tail})");
}

/// lambda extends below 1 through the same digit series (integer part 0).
#[test]
fn lambda_below_one_matches_periodicity() {
    let sys = ternary();
    let depth = depth_for(&sys, PREC);
    // lambda(1/2) = (0 + f(1)/3)/(1/2)^alpha = (2/3) * 3 = 2 = lambda(1)
    let e = FractionalExpansion::from_rational(&Rational::from((1, 2)), 2).unwrap();
    let l = lambda_value(&sys, &e, depth, PREC).unwrap();
    assert!((l.value.to_f64() - 2.0).abs() < 1e-30);
}

/// Limit-form candidates are the monotone limits of appended top digits:
/// ratio([u m^t]) decreases in t toward the candidate value.
#[test]
fn inf_form_is_append_limit() {
    for sys in [ternary(), squares()] {
        let base = sys.src_base();
        let m = sys.m() as u64;
        for u in [1u64, 2, 5, 7, 13] {
            let cand = Candidate::inf_form(&sys, u);
            let target = cand.value(&sys, PREC);
            let mut n = u;
            let mut prev = sys.ratio(u, PREC);
            for _ in 0..30 {
                n = base * n + m;
                let r = sys.ratio(n, PREC);
                assert!(r <= prev);
                prev = r;
            }
            let diff = Float::with_val(PREC, &prev - &target).abs().to_f64();
            assert!(diff < 1e-8, "append limit off by {diff}");
            assert!(prev >= target);
        }
    }
}
