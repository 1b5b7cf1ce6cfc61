//! The Hurwitz zeta kernel on the pole line of the Dirichlet series.

use cantorlab::hp::Complex;
use cantorlab::mellin::dirichlet_numerator;
use cantorlab::zeta::{hurwitz_zeta, riemann_zeta, ZetaParams};
use cantorlab::{validate_system, BaseConversionMap};
use rug::Float;

fn main() {
    let prec = 160;
    let params = ZetaParams::default();

    let z = riemann_zeta(&Complex::from_f64(prec + 32, 2.0, 0.0), &params, prec).unwrap();
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    println!(
        "zeta(2)      = {:.20}  (pi^2/6 = {:.20})",
        z.value.re.to_f64(),
        (pi.clone().square() / 6u32).to_f64()
    );
    let half = Float::with_val(prec + 32, 0.5f64);
    let zh = hurwitz_zeta(&Complex::from_f64(prec + 32, 2.0, 0.0), &half, &params, prec).unwrap();
    println!(
        "zeta(2, 1/2) = {:.20}  (pi^2/2 = {:.20})",
        zh.value.re.to_f64(),
        (pi.square() / 2u32).to_f64()
    );

    // on the line Re s = alpha the values feed the fluctuation series
    let sys = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();
    let wide = prec + 32;
    println!();
    for k in [1i64, 5, 50] {
        let ln2 = Float::with_val(wide, 2).ln();
        let alpha = sys.alpha(wide);
        let t = Float::with_val(wide, 2 * k) * Float::with_val(wide, rug::float::Constant::Pi)
            / ln2;
        let s = Complex::new(alpha, t);
        let z = riemann_zeta(&s, &params, prec).unwrap();
        println!(
            "zeta(alpha + {k} tau i) = {:.15} + {:.15} i (err est {:.1e})",
            z.value.re.to_f64(),
            z.value.im.to_f64(),
            z.error_estimate.to_f64()
        );
    }

    // the numerator of the Dirichlet series stays bounded through s = 1:
    // the zeta poles cancel because the digit increments sum to f(m)
    println!();
    for h in [1e-4f64, 1e-6] {
        let sp = Complex::from_f64(wide, 1.0 + h, 0.0);
        let sm = Complex::from_f64(wide, 1.0 - h, 0.0);
        let np = dirichlet_numerator(&sys, &sp, &params, prec).unwrap();
        let nm = dirichlet_numerator(&sys, &sm, &params, prec).unwrap();
        println!(
            "N(1+{h:.0e}) = {:.12}, N(1-{h:.0e}) = {:.12}",
            np.value.re.to_f64(),
            nm.value.re.to_f64()
        );
    }
    println!("(4 ln 2 = {:.12})", 4.0 * std::f64::consts::LN_2);
}
