use std::cell::Cell;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::algorithms::{self, Technique};
use crate::benchmarks::Objective;
use crate::error::{Error, Result};

use super::agent::sanitize_fitness;
use super::space::SearchSpace;
use super::{rng_from_seed, Rng};

/// Objective wrapper that counts calls and sanitizes the returned values.
pub(crate) struct Counted<'a> {
    f: &'a dyn Objective,
    calls: Cell<u64>,
}

impl<'a> Counted<'a> {
    pub(crate) fn new(f: &'a dyn Objective) -> Self {
        Counted {
            f,
            calls: Cell::new(0),
        }
    }

    pub(crate) fn eval(&self, x: &[f64]) -> f64 {
        self.calls.set(self.calls.get() + 1);
        sanitize_fitness(self.f.evaluate(x))
    }

    pub(crate) fn calls(&self) -> u64 {
        self.calls.get()
    }
}

/// Outcome of one optimization run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub technique: Technique,
    pub function: String,
    pub hypercomplex_k: Option<usize>,
    pub best_position: Vec<f64>,
    pub best_fitness: f64,
    /// Global best fitness after each iteration.
    pub trace: Vec<f64>,
    /// Objective evaluations, initialization included.
    pub evaluations: u64,
    /// Evaluations spent re-initializing agents (scouts, abandoned nests,
    /// evaporated rivers, stars swallowed by the black hole).
    pub restarts: u64,
    pub seed: u64,
    /// Wall time in seconds. Not covered by determinism guarantees.
    pub elapsed: f64,
}

/// A run in progress: owns the search space and the generator.
///
/// `Run::new` validates, initializes and evaluates the population; each
/// [`Run::step`] advances one iteration.
pub struct Run<'f> {
    space: SearchSpace,
    objective: Counted<'f>,
    rng: Rng,
    trace: Vec<f64>,
    seed: u64,
    started: Instant,
}

impl<'f> Run<'f> {
    pub fn new(mut space: SearchSpace, f: &'f dyn Objective, seed: u64) -> Result<Self> {
        let validation = space.check_except_budget();
        if !validation.is_valid() {
            return Err(Error::Validation(validation));
        }
        if !f.arity().accepts(space.n()) {
            return Err(Error::Arity {
                function: f.name().to_string(),
                expected: match f.arity() {
                    crate::benchmarks::Arity::Fixed(d) => d,
                    crate::benchmarks::Arity::Any => 1,
                },
                got: space.n(),
            });
        }
        let started = Instant::now();
        let mut rng = rng_from_seed(seed);
        space.initialize(&mut rng)?;
        let objective = Counted::new(f);
        {
            let SearchSpace { agents, domain, .. } = &mut space;
            for a in agents.iter_mut() {
                domain.evaluate(a, &objective);
            }
        }
        space.update_global_best();
        algorithms::prepare(&mut space);
        Ok(Run {
            space,
            objective,
            rng,
            trace: Vec::new(),
            seed,
            started,
        })
    }

    /// Runs one iteration and returns the global best fitness after it.
    pub fn step(&mut self) -> f64 {
        algorithms::step(&mut self.space, &self.objective, &mut self.rng);
        self.space.update_global_best();
        self.space.iteration += 1;
        self.trace.push(self.space.gfit());
        self.space.gfit()
    }

    pub fn is_finished(&self) -> bool {
        self.space.iteration >= self.space.iterations()
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    /// Mutable access between iterations. Agents edited here should be left
    /// with fitness values that match their positions, followed by a call to
    /// [`SearchSpace::update_global_best`].
    pub fn space_mut(&mut self) -> &mut SearchSpace {
        &mut self.space
    }

    pub fn evaluations(&self) -> u64 {
        self.objective.calls()
    }

    pub fn trace(&self) -> &[f64] {
        &self.trace
    }

    /// Runs the remaining iterations and returns the result.
    pub fn run_to_end(mut self) -> RunResult {
        while !self.is_finished() {
            self.step();
        }
        self.finish()
    }

    pub fn finish(self) -> RunResult {
        RunResult {
            technique: self.space.technique(),
            function: self.objective.f.name().to_string(),
            hypercomplex_k: self.space.hypercomplex_k(),
            best_position: self.space.global_best().to_vec(),
            best_fitness: self.space.gfit(),
            trace: self.trace,
            evaluations: self.objective.calls(),
            restarts: self.space.restarts,
            seed: self.seed,
            elapsed: self.started.elapsed().as_secs_f64(),
        }
    }
}

/// Minimizes `f` over `space` for `space.iterations()` iterations.
///
/// The population is initialized from `seed`, so equal inputs produce an
/// identical result (apart from `elapsed`). A zero iteration budget returns
/// the best of the initial population.
pub fn optimize(space: SearchSpace, f: &dyn Objective, seed: u64) -> Result<RunResult> {
    Ok(Run::new(space, f, seed)?.run_to_end())
}
