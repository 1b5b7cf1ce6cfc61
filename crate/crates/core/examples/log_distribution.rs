//! Logarithmic distribution function of the normalized sequence.

use cantorlab::distribution::LogDistTable;
use cantorlab::extrema::extrema_thm;
use cantorlab::{validate_system, BaseConversionMap};

fn main() {
    let prec = 64;
    let sys = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();
    let ext = extrema_thm(&sys, prec).unwrap();
    let (inf, sup) = (ext.infimum.to_f64(), ext.supremum.to_f64());

    let table = LogDistTable::build(&sys, 1_000_000, prec);
    println!("L(gamma) for the ternary no-1s system (resolution 2^20 cells):");
    println!("{:>10} {:>14} {:>12}", "gamma", "L", "error_est");
    for i in 0..=20 {
        let gamma = (inf - 0.05) + i as f64 * (sup - inf + 0.05) / 20.0;
        let r = table.evaluate(gamma);
        println!(
            "{:>10.4} {:>14.8} {:>12.2e}",
            gamma,
            r.l_value.to_f64(),
            r.error_estimate.to_f64()
        );
    }
    let at_sup = table.evaluate(sup);
    println!(
        "L at the supremum: {} (+- {:.2e})",
        at_sup.l_value.to_f64(),
        at_sup.error_estimate.to_f64()
    );
}
