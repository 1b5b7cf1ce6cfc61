//! Logarithmic Fourier coefficients of lambda and Fejér reconstruction.

use cantorlab::expansion::FractionalExpansion;
use cantorlab::fourier::{cesaro_sum, fourier_table};
use cantorlab::limit::{depth_for, lambda_value};
use cantorlab::{validate_system, BaseConversionMap};
use rug::{Float, Rational};

fn main() {
    let prec = 64;
    let sys = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();
    let table = fourier_table(&sys, 512, 1 << 14, prec).unwrap();

    println!("c_0 = {:.10} (+- {:.2e})", table.coefficient(0).value.re.to_f64(),
        table.coefficient(0).quad_error.to_f64());
    for n in [1i64, 2, 5, 50, 200] {
        let c = table.coefficient(n);
        println!(
            "c_{n} = {:.8} + {:.8} i   |n c_n| = {:.6}",
            c.value.re.to_f64(),
            c.value.im.to_f64(),
            n as f64 * c.value.abs_f64()
        );
    }
    let sup_ncn = (1..=512i64)
        .map(|n| n as f64 * table.coefficient(n).value.abs_f64())
        .fold(0.0f64, f64::max);
    println!("sup |n| |c_n| over |n| <= 512: {sup_ncn:.6}");

    // Fejér reconstruction against direct evaluation
    println!();
    let depth = depth_for(&sys, 128);
    for (num, den) in [(17u32, 13u32), (29, 19), (40, 27)] {
        let x = Rational::from((num, den));
        let lam = lambda_value(
            &sys,
            &FractionalExpansion::from_rational(&x, 2).unwrap(),
            depth,
            128,
        )
        .unwrap();
        let xf = Float::with_val(prec, &x);
        let fejer = cesaro_sum(&sys, &xf, &table, 512);
        println!(
            "x = {num}/{den}: lambda = {:.8}, Fejér(512) = {:.8}, err = {:.2e}",
            lam.value.to_f64(),
            fejer.to_f64(),
            (lam.value.to_f64() - fejer.to_f64()).abs()
        );
    }

    // the series is exactly periodic in log x
    let x = Float::with_val(prec, 1.234f64);
    let x2 = Float::with_val(prec, &x * 2u32);
    let a = cesaro_sum(&sys, &x, &table, 256);
    let b = cesaro_sum(&sys, &x2, &table, 256);
    println!();
    println!(
        "Fejér at x and 2x: {:.12} vs {:.12} (diff {:.2e})",
        a.to_f64(),
        b.to_f64(),
        (a.to_f64() - b.to_f64()).abs()
    );
}
