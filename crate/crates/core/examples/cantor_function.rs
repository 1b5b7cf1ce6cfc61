//! The generalized Cantor function (measure distribution function) and
//! the interval density, including the pointwise density endpoints at 0.

use cantorlab::distribution::theta_densities;
use cantorlab::limit::{cantor_function_g, density_d, g_digits};
use cantorlab::{validate_system, BaseConversionMap};
use rug::Rational;

fn main() {
    let prec = 128;
    let sys = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();

    // classic middle-thirds values
    for (num, den, expect) in [(1u32, 3u32, 0.5), (1, 2, 0.5), (1, 9, 0.25), (2, 3, 0.5)] {
        let t = Rational::from((num, den));
        let g = cantor_function_g(&sys, &t, 48, prec).unwrap();
        println!("g({num}/{den}) = {} (expected {expect})", g.value.to_f64());
    }

    // the measure gives every level-k cylinder mass 2^-k; the descent
    // digits are the cylinder address
    let t = Rational::from((1, 9));
    let d = g_digits(&sys, &t, 10).unwrap();
    println!("address of 1/9: digits {:?} carry {}", d.digits, d.carry);

    // monotone on a grid, endpoints 0 and 1
    let mut prev = -1.0f64;
    for i in 0..=2000 {
        let t = Rational::from((i as u32, 2000u32));
        let g = cantor_function_g(&sys, &t, 40, prec).unwrap().value.to_f64();
        assert!(g >= prev);
        prev = g;
    }
    println!("g is non-decreasing on a 2001-point grid, g(0) = 0, g(1) = {prev}");

    // interval density d(x) = g(x)/x^{1/alpha} is scale invariant
    println!();
    let x = Rational::from((5, 7));
    for k in 0..4 {
        let xk = x.clone() / Rational::from(3u32.pow(k));
        let d = density_d(&sys, &xk, 64, prec).unwrap();
        println!("d((5/7)/3^{k}) = {:.15}", d.value.to_f64());
    }

    // density endpoints at zero with a sampled verification
    println!();
    let r = theta_densities(&sys, 2000, 7, 1e-2, prec).unwrap();
    println!(
        "Theta_* = {:.12}  Theta^* = {:.12}",
        r.theta_lower.to_f64(),
        r.theta_upper.to_f64()
    );
    println!(
        "sampled d range over {} points: [{:.6}, {:.6}], violations {}",
        r.samples,
        r.sampled_min.to_f64(),
        r.sampled_max.to_f64(),
        r.violations
    );
}
