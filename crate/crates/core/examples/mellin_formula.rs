//! The summation function S(n), its exact log-periodic statistic, the
//! Dirichlet-series closed form, and the audit of the stated formula.

use cantorlab::hp::Complex;
use cantorlab::mellin::{
    delta_dirichlet_partial, delta_dirichlet_series, g_statistic, mean_g_check, s_exact,
    s_formula, FluctuationSeries,
};
use cantorlab::{validate_system, BaseConversionMap};
use rug::Float;

fn main() {
    let prec = 128;
    let sys = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();

    println!("S(8) = {}   S(32) = {}", s_exact(&sys, 8), s_exact(&sys, 32));
    println!("exact statistic G(n) = (S(n) + n/2)/n^(alpha+1):");
    for n in [8u64, 16, 24, 48, 96, 1 << 12] {
        println!("  G({n:5}) = {:.15}", g_statistic(&sys, n, prec).unwrap().to_f64());
    }
    println!("(G is exactly invariant under n -> 2n; powers of two give 1/2)");

    // Dirichlet series of the first differences: closed form vs partial sum
    println!();
    let wide = prec + 32;
    let s = Complex::new(
        Float::with_val(wide, sys.alpha(wide) + 1u32),
        Float::with_val(wide, 0),
    );
    let closed = delta_dirichlet_series(&sys, &s, 0.1, prec).unwrap();
    let (partial, tail) = delta_dirichlet_partial(&sys, &s, 100_000, prec);
    println!(
        "sum dC_n n^-s at s = alpha+1: closed {:.12}, partial(1e5) {:.12}, tail bound {:.2e}",
        closed.value.re.to_f64(),
        partial.re.to_f64(),
        tail.to_f64()
    );

    // fluctuation series and the formula audit
    let series = FluctuationSeries::new(&sys, prec).unwrap();
    series.precompute(64).unwrap();
    let c0 = series.coefficient(0).unwrap();
    println!();
    println!("F coefficients: a_0 = {:.12}", c0.re.to_f64());
    for k in [1i64, 2, 8, 32] {
        let a = series.coefficient(k).unwrap();
        println!("  |a_{k}| = {:.3e}", a.abs_f64());
    }

    let check = mean_g_check(&sys, &series, 1 << 12, 1 << 13, 256, prec).unwrap();
    println!(
        "log-uniform mean of G over [2^12, 2^13] = {:.8} vs a_0 = {:.8} (diff {:.2e})",
        check.mean_g.to_f64(),
        check.c0.to_f64(),
        check.difference.to_f64()
    );

    println!();
    println!("stated-formula audit (the polynomial terms are reported as printed):");
    println!(
        "{:>6} {:>14} {:>18} {:>18} {:>10}",
        "n", "S(n)", "formula", "residual", "G(n)"
    );
    for k in [4u32, 6, 8, 10] {
        let n = 1u64 << k;
        let d = s_formula(&sys, &series, n, 64, prec).unwrap();
        println!(
            "{:>6} {:>14} {:>18.3} {:>18.3} {:>10.6}",
            n,
            d.s_exact,
            d.formula_value.to_f64(),
            d.residual.to_f64(),
            d.g_n.to_f64()
        );
    }
    println!("(the residual tracks the disputed -n^2 f(m)/(f(m)-m) term)");
}
