//! The benchmark catalog: formulas, bounds, known optima, and lookup with
//! suggestions for misspelled names.
//!
//! cargo run --example benchmark_catalog

use natopt::benchmarks::{catalog, lookup, Objective};

fn main() {
    for b in catalog() {
        let n = b.default_dimension();
        let optimum = match b.known_optimum(n) {
            Some((x, f)) => format!("f({x:.4?}) = {f}"),
            None => "unknown".into(),
        };
        println!(
            "{:<16} arity {:<3} {}",
            b.name(),
            b.arity().to_string(),
            b.formula()
        );
        println!(
            "{:<16} bounds {:?}, optimum {optimum}",
            "",
            b.suggested_bounds(n)
        );
    }

    if let Err(e) = lookup("rastrign") {
        println!("\n{e}");
    }
    let ackley = lookup("ackley").unwrap();
    println!("ackley(0, 0) = {:e}", ackley.call(&[0.0, 0.0]).unwrap());
}
