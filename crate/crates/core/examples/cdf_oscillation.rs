//! Phase-window counting: the share of indices with ratio below gamma
//! depends on the window phase and the spread does not die out, which is
//! the empirical face of the missing cumulative distribution function.

use cantorlab::distribution::{default_phases, empirical_cdf_probe};
use cantorlab::{validate_system, BaseConversionMap};
use rug::Float;

fn main() {
    let sys = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();
    let gamma = Float::with_val(64, 1.3f64);
    let ks: Vec<u32> = (6..=12).collect();
    let phases = default_phases(&sys);
    let probe = empirical_cdf_probe(&sys, &gamma, &ks, &phases, 64).unwrap();

    println!("A_N/N with N = floor(t 2^k), gamma = 1.3:");
    print!("{:>4}", "k");
    for t in &phases {
        print!(" {:>8}", format!("t={t:.3}"));
    }
    println!(" {:>8}", "spread");
    for w in &probe.windows {
        print!("{:>4}", w.k);
        for &(_, _, a) in &w.counts {
            print!(" {:>8.4}", a);
        }
        println!(" {:>8.4}", w.spread);
    }
    println!();
    println!("the spread stays an order of magnitude above zero as k grows;");
    println!("near the supremum all phases saturate and the spread closes:");
    let gamma = Float::with_val(64, 1.98f64);
    let probe = empirical_cdf_probe(&sys, &gamma, &[8, 10, 12], &phases, 64).unwrap();
    for w in &probe.windows {
        println!("  gamma=1.98 k={:2}: spread {:.4}", w.k, w.spread);
    }
}
