//! Density of the normalized sequence in its extremal interval: the
//! greedy subsequence construction and a grid cover with witnesses.

use cantorlab::distribution::{density_cover, greedy_subsequence, CoverMethod};
use cantorlab::{validate_system, BaseConversionMap};
use rug::Float;

fn main() {
    let prec = 128;
    let sys = validate_system(BaseConversionMap::new(2, 4, vec![0, 1, 4]).unwrap()).unwrap();

    // one greedy trace toward gamma = 1
    let gamma = Float::with_val(prec, 1.0f64);
    let g = greedy_subsequence(&sys, &gamma, 24, prec).unwrap();
    println!("greedy toward gamma = 1 (f(x)=x^2 system):");
    for (i, (n, r)) in g.indices.iter().zip(g.ratios.iter()).enumerate().take(8) {
        println!("  step {:2}: n = {:8} ratio = {:.10}", i + 1, n, r.to_f64());
    }
    println!(
        "  ... step {}: n = {} ratio = {:.10} (distance {:.2e})",
        g.indices.len(),
        g.indices.last().unwrap(),
        g.ratios.last().unwrap().to_f64(),
        g.final_distance.to_f64()
    );

    // low targets stall on the tail limit of the starting digit; the
    // cover falls back to a scan for those
    let gamma = Float::with_val(prec, 0.70f64);
    let g = greedy_subsequence(&sys, &gamma, 24, prec).unwrap();
    println!(
        "greedy toward gamma = 0.70 stalls at {:.6} (the digit-1 tail limit)",
        g.ratios.last().unwrap().to_f64()
    );

    println!();
    let eps = Float::with_val(prec, 1e-3f64);
    let report = density_cover(&sys, 40, &eps, 3u64.pow(14), prec).unwrap();
    let scanned = report
        .witnesses
        .iter()
        .filter(|w| w.method == CoverMethod::Scan)
        .count();
    println!(
        "cover of 40 targets with epsilon = 1e-3, witnesses <= 3^14: {} failures, {} via scan",
        report.failures.len(),
        scanned
    );
    for w in report.witnesses.iter().step_by(8) {
        println!(
            "  gamma = {:.6}  n = {:9}  distance = {:.2e}  ({})",
            w.gamma.to_f64(),
            w.n,
            w.distance.to_f64(),
            match w.method {
                CoverMethod::Greedy => "greedy",
                CoverMethod::Scan => "scan",
            }
        );
    }
}
