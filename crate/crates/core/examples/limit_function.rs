//! The limit function lambda: pointwise values, multiplicative
//! periodicity, one-sided continuity at rationals, and the Hölder probe.

use cantorlab::expansion::FractionalExpansion;
use cantorlab::hp;
use cantorlab::limit::{continuity_probe, holder_probe, lambda_value, Continuity};
use cantorlab::{validate_system, BaseConversionMap};
use rug::Rational;

fn main() {
    let prec = 128;
    let sys = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();
    let depth = cantorlab::limit::depth_for(&sys, prec);

    let x = Rational::from((4, 3));
    let e = FractionalExpansion::from_rational(&x, 2).unwrap();
    let l = lambda_value(&sys, &e, depth, prec).unwrap();
    println!("lambda(4/3) = {:.12} (+- {:.2e})", l.value.to_f64(), l.abs_err.to_f64());

    // lambda((m+1) x) = lambda(x)
    for num_den in [(5u32, 4u32), (7, 5), (11, 7)] {
        let x = Rational::from(num_den);
        let a = lambda_value(
            &sys,
            &FractionalExpansion::from_rational(&x, 2).unwrap(),
            depth,
            prec,
        )
        .unwrap();
        let b = lambda_value(
            &sys,
            &FractionalExpansion::from_rational(&(x.clone() * 2u32), 2).unwrap(),
            depth,
            prec,
        )
        .unwrap();
        let diff = (a.value.to_f64() - b.value.to_f64()).abs();
        println!(
            "lambda({}/{}) = {:.12}, doubling changes it by {:.2e}",
            num_den.0, num_den.1, a.value.to_f64(), diff
        );
    }

    // integer points reproduce the plain ratios
    for n in [1u64, 3, 5] {
        let e = FractionalExpansion::from_rational(&Rational::from(n), 2).unwrap();
        let l = lambda_value(&sys, &e, depth, prec).unwrap();
        println!(
            "lambda({n}) = {:.12} vs C_n/n^alpha = {:.12}",
            l.value.to_f64(),
            sys.ratio(n, prec).to_f64()
        );
    }

    // one-sided continuity at x0 = 1.5: the digit increment is 2, so the
    // left limit sits strictly below the value
    println!();
    let x0 = FractionalExpansion::from_rational(&Rational::from((3, 2)), 2).unwrap();
    let r = continuity_probe(&sys, &x0).unwrap();
    println!(
        "continuity at 1.5: {:?}, value {:.6}, left limit {:.6}, jump {:.6}",
        r.class,
        r.value.value.to_f64(),
        r.left_limit.value.to_f64(),
        r.jump.to_f64()
    );

    // a unit-increment system is two-sided continuous at matching digits
    let squares = validate_system(BaseConversionMap::new(2, 4, vec![0, 1, 4]).unwrap()).unwrap();
    let x0 = FractionalExpansion::from_parts(1, vec![1], 3).unwrap();
    let r = continuity_probe(&squares, &x0).unwrap();
    assert_eq!(r.class, Continuity::LeftAndRight);
    println!(
        "continuity at [1.1]_3 for f(x)=x^2: {:?}, jump {:.2e}",
        r.class,
        r.jump.to_f64()
    );

    // Hölder probe at a pseudo-random point: the digit-series differences
    // scale like h^alpha, while lambda itself is differentiable there
    println!();
    let mut digits = Vec::new();
    let mut state = 42u64;
    for _ in 0..60 {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        digits.push((state >> 62) as u32 & 1);
    }
    let x0 = FractionalExpansion::from_parts(1, digits, 2).unwrap();
    let grid: Vec<Rational> = (8..=40).map(|j| hp::rational_power(2, -j)).collect();
    let rep = holder_probe(&sys, &x0, &grid, 0.15).unwrap();
    println!(
        "Hölder probe: digit-series exponent {:.3} (target >= {:.3}), lambda exponent {:.3}",
        rep.slope_d, rep.target_exponent, rep.slope_lambda
    );
    for b in &rep.block_stats {
        println!(
            "  block length {}: max deviation from equidistribution {:.4}",
            b.block_len, b.max_deviation
        );
    }
}
