use std::fmt;

use rand::Rng as _;

use crate::algorithms::{Technique, TechniqueParams, TechniqueState};
use crate::error::{Error, Result};
use crate::hypercomplex::span_to_real;
use crate::modelfile::ModelFile;

use super::agent::{sanitize_fitness, Agent, Extras, Tensor, WORST_FITNESS};
use super::run::Counted;
use super::Rng;

/// Outcome of [`SearchSpace::check`]: every failed rule, in check order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Validation {
    issues: Vec<String>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn issues(&self) -> &[String] {
        &self.issues
    }
}

impl fmt::Display for Validation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for issue in &self.issues {
            writeln!(f, "  - {issue}")?;
        }
        Ok(())
    }
}

/// Box bounds plus the representation agents move in.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Domain {
    pub(crate) lb: Vec<f64>,
    pub(crate) ub: Vec<f64>,
    pub(crate) k: Option<usize>,
    pub(crate) integer: bool,
}

impl Domain {
    pub(crate) fn n(&self) -> usize {
        self.lb.len()
    }

    /// Length of the coordinate vector techniques update.
    pub(crate) fn coord_dim(&self) -> usize {
        self.n() * self.k.unwrap_or(1)
    }

    /// Bounds of search coordinate `c`.
    pub(crate) fn coord_bounds(&self, c: usize) -> (f64, f64) {
        match self.k {
            Some(_) => (0.0, 1.0),
            None => (self.lb[c], self.ub[c]),
        }
    }

    pub(crate) fn coord_range(&self, c: usize) -> f64 {
        let (lo, hi) = self.coord_bounds(c);
        hi - lo
    }

    pub(crate) fn sample_coord(&self, c: usize, rng: &mut Rng) -> f64 {
        let (lo, hi) = self.coord_bounds(c);
        lo + (hi - lo) * rng.random::<f64>()
    }

    fn fit_real(&self, j: usize, v: f64) -> f64 {
        let v = if self.integer { v.round() } else { v };
        v.clamp(self.lb[j], self.ub[j])
    }

    /// Clamps an agent's coordinates into the box and refreshes `x` from them.
    pub(crate) fn settle(&self, a: &mut Agent) {
        match (&mut a.tensor, self.k) {
            (Some(t), Some(_)) => {
                for c in t.as_mut_slice() {
                    *c = c.clamp(0.0, 1.0);
                }
                for (j, row) in t.rows().enumerate() {
                    a.x[j] = self.fit_real(j, span_to_real(row, self.lb[j], self.ub[j]));
                }
            }
            _ => {
                for (j, v) in a.x.iter_mut().enumerate() {
                    *v = self.fit_real(j, *v);
                }
            }
        }
    }

    /// Draws every coordinate uniformly from its bounds, then settles.
    pub(crate) fn sample(&self, a: &mut Agent, rng: &mut Rng) {
        for c in 0..self.coord_dim() {
            let v = self.sample_coord(c, rng);
            a.coords_mut()[c] = v;
        }
        self.settle(a);
    }

    /// Settles `a` and evaluates it, counting the call.
    pub(crate) fn evaluate(&self, a: &mut Agent, f: &Counted<'_>) -> f64 {
        self.settle(a);
        a.fit = f.eval(&a.x);
        a.fit
    }
}

/// The population plus everything a run needs to know about the problem.
#[derive(Debug, Clone)]
pub struct SearchSpace {
    technique: Technique,
    pub(crate) params: TechniqueParams,
    pub(crate) agents: Vec<Agent>,
    pub(crate) domain: Domain,
    n: usize,
    iterations: usize,
    g: Vec<f64>,
    t_g: Option<Tensor>,
    best: usize,
    gfit: f64,
    bounds_set: bool,
    /// Zero-based index of the iteration being executed.
    pub(crate) iteration: usize,
    pub(crate) state: TechniqueState,
    /// Evaluations spent on re-initialized agents (scouts, abandoned nests, ...).
    pub(crate) restarts: u64,
}

impl SearchSpace {
    /// Allocates `m` zeroed agents of `n` variables with `technique`'s state
    /// and default parameters. Bounds must be set before initialization.
    pub fn new(m: usize, n: usize, technique: Technique) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidParameters(format!(
                "m and n must be >= 1, got m={m} n={n}"
            )));
        }
        let params = technique.default_params();
        Ok(SearchSpace {
            technique,
            agents: (0..m)
                .map(|_| Agent::with_params(n, &params, None))
                .collect(),
            params,
            domain: Domain {
                lb: Vec::new(),
                ub: Vec::new(),
                k: None,
                integer: false,
            },
            n,
            iterations: 1,
            g: vec![0.0; n],
            t_g: None,
            best: 0,
            gfit: WORST_FITNESS,
            bounds_set: false,
            iteration: 0,
            state: TechniqueState::None,
            restarts: 0,
        })
    }

    /// Builds a space from a parsed model file.
    pub fn from_model(model: &ModelFile) -> Result<Self> {
        let mut s = SearchSpace::new(model.m, model.n, model.technique)?;
        s.set_params(model.params)?;
        s.set_iterations(model.iterations);
        let (lb, ub) = model.bounds.iter().copied().unzip();
        s.set_bounds(lb, ub)?;
        Ok(s)
    }

    pub fn set_bounds(&mut self, lb: Vec<f64>, ub: Vec<f64>) -> Result<&mut Self> {
        if lb.len() != self.n || ub.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "expected {} bounds, got {} lower and {} upper",
                self.n,
                lb.len(),
                ub.len()
            )));
        }
        self.domain.lb = lb;
        self.domain.ub = ub;
        self.bounds_set = true;
        Ok(self)
    }

    pub fn set_uniform_bounds(&mut self, lb: f64, ub: f64) -> &mut Self {
        self.domain.lb = vec![lb; self.n];
        self.domain.ub = vec![ub; self.n];
        self.bounds_set = true;
        self
    }

    pub fn set_iterations(&mut self, iterations: usize) -> &mut Self {
        self.iterations = iterations;
        self
    }

    pub fn set_params(&mut self, params: TechniqueParams) -> Result<&mut Self> {
        if params.technique() != self.technique {
            return Err(Error::InvalidParameters(format!(
                "{} parameters given to a {} search space",
                params.technique(),
                self.technique
            )));
        }
        self.params = params;
        self.reallocate();
        Ok(self)
    }

    pub fn set_integer_opt(&mut self, integer: bool) -> &mut Self {
        self.domain.integer = integer;
        self
    }

    /// Switches agents to `k`-coefficient hypercomplex coordinates.
    pub(crate) fn set_hypercomplex(&mut self, k: usize) {
        self.domain.k = Some(k);
        self.reallocate();
    }

    fn reallocate(&mut self) {
        let (n, k) = (self.n, self.domain.k);
        for a in &mut self.agents {
            *a = Agent::with_params(n, &self.params, k);
        }
        self.t_g = k.map(|k| Tensor::zeros(n, k));
        self.g = vec![0.0; n];
        self.gfit = WORST_FITNESS;
        self.best = 0;
    }

    pub fn technique(&self) -> Technique {
        self.technique
    }

    pub fn params(&self) -> &TechniqueParams {
        &self.params
    }

    pub fn m(&self) -> usize {
        self.agents.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iterations(&self) -> usize {
        self.iterations
    }

    /// Zero-based index of the next iteration to run.
    pub fn iteration(&self) -> usize {
        self.iteration
    }

    pub fn agents(&self) -> &[Agent] {
        &self.agents
    }

    pub fn lower(&self) -> &[f64] {
        &self.domain.lb
    }

    pub fn upper(&self) -> &[f64] {
        &self.domain.ub
    }

    pub fn is_integer_opt(&self) -> bool {
        self.domain.integer
    }

    pub fn hypercomplex_k(&self) -> Option<usize> {
        self.domain.k
    }

    /// Best position seen so far.
    pub fn global_best(&self) -> &[f64] {
        &self.g
    }

    pub fn global_best_tensor(&self) -> Option<&Tensor> {
        self.t_g.as_ref()
    }

    pub fn gfit(&self) -> f64 {
        self.gfit
    }

    /// Index of the best agent in the current population.
    pub fn best_index(&self) -> usize {
        self.best
    }

    /// Global best in search coordinates.
    pub(crate) fn best_coords(&self) -> &[f64] {
        match &self.t_g {
            Some(t) => t.as_slice(),
            None => &self.g,
        }
    }

    /// Draws every agent uniformly inside the bounds and resets all run state.
    /// Agents are left unevaluated.
    pub fn initialize(&mut self, rng: &mut Rng) -> Result<&mut Self> {
        if !self.bounds_set {
            return Err(Error::BoundsUnset);
        }
        self.reallocate();
        let domain = &self.domain;
        for a in &mut self.agents {
            domain.sample(a, rng);
        }
        self.iteration = 0;
        self.restarts = 0;
        self.state = TechniqueState::None;
        Ok(self)
    }

    /// Validates sizes, bounds, budget and the technique's parameter ranges.
    pub fn check(&self) -> Validation {
        let mut v = self.check_except_budget();
        if self.iterations < 1 {
            v.issues
                .insert(0, "iterations must be >= 1, got 0".to_string());
        }
        v
    }

    pub(crate) fn check_except_budget(&self) -> Validation {
        let mut issues = Vec::new();
        let m = self.m();
        if !self.bounds_set {
            issues.push("bounds have not been set".to_string());
        }
        for (j, (lo, hi)) in self.domain.lb.iter().zip(&self.domain.ub).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                issues.push(format!("bounds of x[{j}] must be finite, got [{lo}, {hi}]"));
            } else if lo >= hi {
                issues.push(format!("LB must be < UB for x[{j}], got [{lo}, {hi}]"));
            }
        }
        if self.technique == Technique::Abc && m < 2 {
            issues.push(format!("abc needs at least 2 food sources, got {m}"));
        }
        if let Some(k) = self.domain.k {
            if k < 1 {
                issues.push("hypercomplex dimension must be >= 1".to_string());
            }
        }
        self.params.check(m, &mut issues);
        Validation { issues }
    }

    /// Clips `a` into the bounds, rounding first in integer mode.
    /// Lifted agents have their tensor clipped to [0, 1] and are re-spanned.
    pub fn clamp_to_bounds(&self, a: &mut Agent) {
        self.domain.settle(a);
    }

    /// Points `best` at the fittest current agent (lowest index on ties) and
    /// records it as global best if it improves on `gfit`.
    pub fn update_global_best(&mut self) {
        let mut best = 0;
        for (i, a) in self.agents.iter().enumerate() {
            if a.fit < self.agents[best].fit {
                best = i;
            }
        }
        self.best = best;
        let a = &self.agents[best];
        if a.fit < self.gfit {
            self.gfit = a.fit;
            self.g.clone_from(&a.x);
            if let (Some(tg), Some(t)) = (&mut self.t_g, &a.tensor) {
                tg.clone_from(t);
            }
        }
    }

    /// Overwrites agent fitness values directly. Test hook for the
    /// global-best protocol.
    #[doc(hidden)]
    pub fn set_fitness(&mut self, fits: &[f64]) {
        for (a, &f) in self.agents.iter_mut().zip(fits) {
            a.fit = sanitize_fitness(f);
        }
    }

    #[doc(hidden)]
    pub fn agents_mut(&mut self) -> &mut [Agent] {
        &mut self.agents
    }

    pub(crate) fn extras_reset(&mut self) {
        let dim = self.domain.coord_dim();
        for a in &mut self.agents {
            a.extras = Extras::for_technique(&self.params, dim);
        }
    }
}
