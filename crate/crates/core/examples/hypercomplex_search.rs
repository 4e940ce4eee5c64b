//! Searching over quaternion and octonion coefficients instead of reals.
//!
//! cargo run --release --example hypercomplex_search

use natopt::benchmarks::lookup;
use natopt::hypercomplex::{lift, lifted_run, span_to_real, OCTONION, QUATERNION};
use natopt::search::{optimize, SearchSpace};
use natopt::Technique;

fn main() -> natopt::Result<()> {
    let f = lookup("ackley")?;
    let space = |t| -> natopt::Result<SearchSpace> {
        let mut s = SearchSpace::new(20, 4, t)?;
        s.set_uniform_bounds(-32.768, 32.768).set_iterations(300);
        Ok(s)
    };

    println!(
        "{:<7} {:>12} {:>12} {:>12}",
        "", "real", "quaternion", "octonion"
    );
    for t in Technique::HYPERCOMPLEX
        .into_iter()
        .filter(|t| !t.is_harmony_family())
    {
        let real = optimize(space(t)?, f, 3)?.best_fitness;
        let q = lift(space(t)?, f, QUATERNION, 3)?.best_fitness;
        let o = lift(space(t)?, f, OCTONION, 3)?.best_fitness;
        println!("{:<7} {real:>12.4e} {q:>12.4e} {o:>12.4e}", t.as_str());
    }

    // Each decision variable is the scaled norm of one coefficient row.
    let mut run = lifted_run(space(Technique::Pso)?, f, QUATERNION, 3)?;
    for _ in 0..50 {
        run.step();
    }
    let s = run.space();
    let tensor = s.global_best_tensor().unwrap();
    for (j, row) in tensor.rows().enumerate() {
        println!(
            "x[{j}] = span({row:.3?}) = {:.5}",
            span_to_real(row, s.lower()[j], s.upper()[j])
        );
    }

    if let Err(e) = lift(space(Technique::Mbo)?, f, QUATERNION, 3) {
        println!("{e}");
    }
    Ok(())
}
