//! Driving a run one iteration at a time and watching technique state:
//! AIWPSO's inertia weight and MBO's leader.
//!
//! cargo run --example stepwise_run

use natopt::algorithms::{current_formation, current_inertia};
use natopt::benchmarks::lookup;
use natopt::search::{Run, SearchSpace};
use natopt::Technique;

fn main() -> natopt::Result<()> {
    let f = lookup("rosenbrock")?;

    let mut space = SearchSpace::new(20, 2, Technique::Aiwpso)?;
    space.set_uniform_bounds(-2.048, 2.048).set_iterations(60);
    let mut run = Run::new(space, f, 11)?;
    while !run.is_finished() {
        let g = run.step();
        let it = run.space().iteration();
        if it % 10 == 0 {
            let w = current_inertia(run.space()).unwrap();
            println!("aiwpso it {it:>3}  gfit {g:>12.4e}  w {w:.3}");
        }
    }

    let mut space = SearchSpace::new(7, 2, Technique::Mbo)?;
    space.set_uniform_bounds(-2.048, 2.048).set_iterations(40);
    let mut run = Run::new(space, f, 11)?;
    while !run.is_finished() {
        let g = run.step();
        let formation = current_formation(run.space()).unwrap();
        if run.space().iteration() % 10 == 0 {
            println!(
                "mbo    it {:>3}  gfit {g:>12.4e}  leader {} left {:?} right {:?}",
                run.space().iteration(),
                formation.leader(),
                formation.left(),
                formation.right()
            );
        }
    }
    let r = run.finish();
    println!(
        "{} evaluations, trace of {} points",
        r.evaluations,
        r.trace.len()
    );
    Ok(())
}
