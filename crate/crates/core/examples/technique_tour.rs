//! Every technique on the same problem with its default parameters.
//!
//! cargo run --release --example technique_tour [function] [dimension]

use natopt::benchmarks::lookup;
use natopt::search::{optimize, SearchSpace};
use natopt::Technique;

fn main() -> natopt::Result<()> {
    let args: Vec<String> = std::env::args().collect();
    let f = lookup(args.get(1).map_or("rastrigin", String::as_str))?;
    let n: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    let bounds = f.suggested_bounds(n);

    println!(
        "{:<7} {:>14} {:>12} {:>9}",
        "", "best f", "evaluations", "restarts"
    );
    for t in Technique::ALL {
        let mut space = SearchSpace::new(21, n, t)?;
        // One improvisation per iteration: give the harmony family a
        // comparable number of evaluations.
        let iterations = if t.is_harmony_family() { 4000 } else { 200 };
        space.set_iterations(iterations);
        space.set_bounds(
            bounds.iter().map(|b| b.0).collect(),
            bounds.iter().map(|b| b.1).collect(),
        )?;
        let r = optimize(space, f, 1)?;
        println!(
            "{:<7} {:>14.6e} {:>12} {:>9}",
            t.as_str(),
            r.best_fitness,
            r.evaluations,
            r.restarts
        );
    }
    Ok(())
}
