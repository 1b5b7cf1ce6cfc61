//! Base-conversion systems and exact sequence values.
//!
//! Builds the three reference systems, prints the first terms with both
//! evaluation strategies, and cross-checks the ternary no-1s sequence
//! against its known closed description.

use cantorlab::{validate_system, BaseConversionMap};

fn main() {
    let ternary = validate_system(BaseConversionMap::new(1, 2, vec![0, 2]).unwrap()).unwrap();
    let square = validate_system(BaseConversionMap::new(2, 4, vec![0, 1, 4]).unwrap()).unwrap();
    let gawron_ulas = validate_system(BaseConversionMap::new(1, 3, vec![0, 2]).unwrap()).unwrap();

    for (name, sys) in [
        ("ternary no-1s (m=1, f=2x, p=2)", &ternary),
        ("squares (m=2, f=x^2, p=4)", &square),
        ("Gawron-Ulas (m=1, f=2x, p=3)", &gawron_ulas),
    ] {
        println!("{name}");
        println!("  alpha = {} = {}", sys.alpha_f64(), sys.alpha_expr());
        println!("  theorem scope: {}", sys.theorem_scope());
        let values: Vec<String> = (0..14).map(|n| sys.cantor_value(n).to_string()).collect();
        println!("  C_0..C_13 = {}", values.join(", "));
        // the two strategies agree everywhere
        for n in 0..2000 {
            assert_eq!(sys.cantor_digit_map(n), sys.cantor_recurrence(n));
        }
        println!("  digit-map and append-recurrence strategies agree on 0..2000");
        println!();
    }

    // ternary no-1s: exactly the integers whose base-3 digits avoid 1
    for n in 0..400u64 {
        let c = ternary.cantor_value(n);
        let mut v = c.clone();
        while v != 0 {
            let d: u32 = v.mod_u(3);
            assert_ne!(d, 1, "C_{n} = {c} has a 1 in base 3");
            v /= 3;
        }
    }
    println!("ternary values 0..400 contain no base-3 digit 1");

    // first differences telescope back to the values
    let mut acc = rug::Integer::from(0);
    for n in 1..=1000 {
        acc += ternary.delta_cantor(n);
        assert_eq!(acc, ternary.cantor_value(n));
    }
    println!("first differences telescope: sum of deltas equals C_n up to 1000");
}
