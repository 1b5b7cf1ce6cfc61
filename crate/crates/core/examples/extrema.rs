//! Superior and inferior of C_n/n^alpha by three routes.
//!
//! For each reference system: the finite-scan theorem algorithm, the
//! quadratic closed forms where they apply, and a brute-force scan, all of
//! which must land on the same numbers. Also reports the gap between the
//! theorem's ell0 and the smallest prefix length that already attains the
//! infimum (conjectured to be at most 2; reported, never assumed).

use cantorlab::extrema::{
    brute_force_extrema, ell0, ell_report, extrema_thm, quadratic_inf_closed_form,
    quadratic_sup_closed_form,
};
use cantorlab::{validate_system, BaseConversionMap, QuadraticFamily};

fn main() {
    let prec = 128;
    let ternary = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();
    let ext = extrema_thm(&ternary, prec).unwrap();
    println!("ternary no-1s: ell0 = {}", ell0(&ternary).unwrap());
    println!("  sup = {} at n = {}", ext.supremum.to_f64(), ext.sup_witness);
    println!(
        "  inf = {} at n = {} (limit form)",
        ext.infimum.to_f64(),
        ext.inf_witness
    );
    let bf = brute_force_extrema(&ternary, 3u64.pow(10), prec);
    println!(
        "  brute force to 3^10: sup = {} at {}, limit-form min = {} at {}",
        bf.sup.value.to_f64(),
        bf.sup.n,
        bf.min_inf_form.value.to_f64(),
        bf.min_inf_form.n
    );

    println!();
    let fam = QuadraticFamily::new(1, 0, 2).unwrap();
    let sys = fam.system().unwrap();
    let ext = extrema_thm(&sys, prec).unwrap();
    let sup_cf = quadratic_sup_closed_form(&fam, prec).unwrap();
    let inf_cf = quadratic_inf_closed_form(&fam, prec).unwrap();
    println!("squares f(x)=x^2, m=2: ell0 = {}", ext.ell0);
    println!(
        "  theorem:     sup = {:.15} inf = {:.15}",
        ext.supremum.to_f64(),
        ext.infimum.to_f64()
    );
    println!(
        "  closed form: sup = {:.15} inf = {:.15}",
        sup_cf.value.to_f64(),
        inf_cf.value.to_f64()
    );
    let bf = brute_force_extrema(&sys, 3u64.pow(10), prec);
    println!(
        "  brute force: sup = {:.15} inf = {:.15}",
        bf.sup.value.to_f64(),
        bf.min_inf_form.value.to_f64()
    );

    // outside theorem scope the brute force is the tool; the limit-form
    // minimum hits the interval endpoint f(m)/p = 2/3
    println!();
    let gu = validate_system(BaseConversionMap::new(1, 3, vec![0, 2]).unwrap()).unwrap();
    let bf = brute_force_extrema(&gu, 4u64.pow(8), prec);
    println!("Gawron-Ulas (alpha = 2, outside theorem scope):");
    println!(
        "  sup = {} at n = {}, plain ratio min = {:.10}, limit-form min = {:.10}",
        bf.sup.value.to_f64(),
        bf.sup.n,
        bf.min_ratio.value.to_f64(),
        bf.min_inf_form.value.to_f64()
    );

    println!();
    for (name, sys) in [("ternary", &ternary), ("squares", &sys)] {
        let r = ell_report(sys, prec).unwrap();
        println!(
            "{name}: theorem ell0 = {}, smallest sufficient prefix length = {}",
            r.theorem_ell0, r.observed_ell
        );
    }
}
