//! Minimize your own function: read a model file, build the search space,
//! check it, optimize.
//!
//! cargo run --example minimize_custom_function

use natopt::benchmarks::{Arity, FnObjective};
use natopt::modelfile::parse_model_file;
use natopt::search::{optimize, SearchSpace};
use natopt::Technique;

const MODEL: &str = "\
10 2 100 #<n_particles> <dimension> <max_iterations>
1.7 1.7 #<c1> <c2>
0.7 0.0 0.0 #<w> <w_min> <w_max>
-10 10 #<LB> <UB> x[0]
-10 10 #<LB> <UB> x[1]
";

fn main() -> natopt::Result<()> {
    let f = FnObjective::new("bowl", Arity::Fixed(2), |x: &[f64]| {
        x[0] * x[0] + x[1] * x[1] + 1.0
    });

    let model = parse_model_file(MODEL, Technique::Pso)?;
    let space = SearchSpace::from_model(&model)?;
    let report = space.check();
    if !report.is_valid() {
        eprintln!("{report}");
        std::process::exit(1);
    }

    let result = optimize(space, &f, 42)?;
    println!("best x = {:?}", result.best_position);
    println!("f(x)   = {}", result.best_fitness);
    println!("{} evaluations", result.evaluations);
    Ok(())
}
