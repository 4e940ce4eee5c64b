//! The per-iteration update of each technique.
//!
//! Every step works on *search coordinates*: the real position in plain runs
//! or the flattened coefficient tensor in hypercomplex runs (see
//! [`crate::hypercomplex`]). Candidates are clamped and evaluated through the
//! search space's domain, so bounds closure holds for every technique.
//!
//! Per-iteration evaluation schedule, with `m` agents:
//!
//! | technique | evaluations per iteration |
//! |-----------|---------------------------|
//! | pso, aiwpso, ba, fpa, fa, cs | `m` |
//! | bh, wca | `m − 1` |
//! | mbo | `k + (m − 1)(k − x)` |
//! | abc | `2m` |
//! | hs, ihs, psfhs | `1` |
//!
//! On top of that, re-initialized agents (cs abandoned nests, bh stars past
//! the event horizon, abc scouts, wca evaporated rivers) cost one evaluation
//! each and are reported as `restarts`.

mod abc;
mod ba;
mod bh;
mod cs;
mod fa;
mod fpa;
mod harmony;
pub mod levy;
mod mbo;
mod params;
mod pso;
mod wca;

pub use abc::selection_probabilities;
pub use harmony::{ihs_schedule, psfhs_rates, HarmonyOp};
pub use mbo::Formation;
pub use params::*;
pub use pso::adaptive_inertia;
pub use wca::stream_allocation;

use rand::Rng as _;
use rand_distr::StandardNormal;

use crate::search::{Counted, Extras, Rng, SearchSpace};

/// Run-level state some techniques carry between iterations.
#[derive(Debug, Clone, Default)]
pub(crate) enum TechniqueState {
    #[default]
    None,
    Aiwpso {
        w: f64,
    },
    Mbo(Formation),
    Wca {
        d_max: f64,
    },
    Psfhs(Vec<Vec<HarmonyOp>>),
}

impl Technique {
    /// Evaluations one iteration costs, excluding restarts.
    pub fn evaluations_per_iteration(self, m: usize, params: &TechniqueParams) -> u64 {
        let m = m as u64;
        match (self, params) {
            (Technique::Mbo, TechniqueParams::Mbo(p)) => p.k as u64 + (m - 1) * (p.k - p.x) as u64,
            (Technique::Abc, _) => 2 * m,
            (Technique::Bh | Technique::Wca, _) => m - 1,
            (Technique::Hs | Technique::Ihs | Technique::Psfhs, _) => 1,
            _ => m,
        }
    }
}

/// Sets up technique state once the initial population has been evaluated.
pub(crate) fn prepare(space: &mut SearchSpace) {
    space.extras_reset();
    for a in &mut space.agents {
        if let Extras::Particle(p) = &mut a.extras {
            p.best.clear();
            p.best.extend_from_slice(match &a.tensor {
                Some(t) => t.as_slice(),
                None => &a.x,
            });
            p.best_fit = a.fit;
        }
    }
    let m = space.m();
    let dim = space.domain.coord_dim();
    space.state = match space.params {
        TechniqueParams::Aiwpso(p) => TechniqueState::Aiwpso { w: p.w },
        TechniqueParams::Mbo(_) => TechniqueState::Mbo(Formation::new(m)),
        TechniqueParams::Wca(p) => TechniqueState::Wca { d_max: p.d_max },
        TechniqueParams::Psfhs => TechniqueState::Psfhs(vec![vec![HarmonyOp::Random; dim]; m]),
        _ => TechniqueState::None,
    };
}

pub(crate) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng) {
    match space.params {
        TechniqueParams::Pso(p) => {
            pso::step(space, f, rng, &p, p.w);
        }
        TechniqueParams::Aiwpso(p) => pso::aiwpso_step(space, f, rng, &p),
        TechniqueParams::Ba(p) => ba::step(space, f, rng, &p),
        TechniqueParams::Fpa(p) => fpa::step(space, f, rng, &p),
        TechniqueParams::Fa(p) => fa::step(space, f, rng, &p),
        TechniqueParams::Cs(p) => cs::step(space, f, rng, &p),
        TechniqueParams::Bh => bh::step(space, f, rng),
        TechniqueParams::Mbo(p) => mbo::step(space, f, rng, &p),
        TechniqueParams::Abc(p) => abc::step(space, f, rng, &p),
        TechniqueParams::Wca(p) => wca::step(space, f, rng, &p),
        TechniqueParams::Hs(p) => harmony::hs_step(space, f, rng, &p),
        TechniqueParams::Ihs(p) => harmony::ihs_step(space, f, rng, &p),
        TechniqueParams::Psfhs => harmony::psfhs_step(space, f, rng),
    }
}

/// Inertia weight AIWPSO will use in the next iteration.
pub fn current_inertia(space: &SearchSpace) -> Option<f64> {
    match space.state {
        TechniqueState::Aiwpso { w } => Some(w),
        _ => None,
    }
}

/// Current V formation of an MBO run.
pub fn current_formation(space: &SearchSpace) -> Option<&Formation> {
    match &space.state {
        TechniqueState::Mbo(f) => Some(f),
        _ => None,
    }
}

/// Current evaporation distance of a WCA run.
pub fn current_evaporation_distance(space: &SearchSpace) -> Option<f64> {
    match space.state {
        TechniqueState::Wca { d_max } => Some(d_max),
        _ => None,
    }
}

/// Operation memory of a PSFHS run: one row per harmony, one entry per
/// search coordinate.
pub fn operation_memory(space: &SearchSpace) -> Option<&[Vec<HarmonyOp>]> {
    match &space.state {
        TechniqueState::Psfhs(om) => Some(om),
        _ => None,
    }
}

pub(crate) fn unit(rng: &mut Rng) -> f64 {
    rng.random::<f64>()
}

pub(crate) fn normal(rng: &mut Rng) -> f64 {
    rng.sample::<f64, _>(StandardNormal)
}

/// Index of the fittest agent, lowest index on ties.
pub(crate) fn argmin(space: &SearchSpace) -> usize {
    let mut best = 0;
    for (i, a) in space.agents.iter().enumerate() {
        if a.fit < space.agents[best].fit {
            best = i;
        }
    }
    best
}

/// Replaces agent `i`'s coordinates with uniform draws and evaluates it.
pub(crate) fn reinitialize(space: &mut SearchSpace, i: usize, f: &Counted<'_>, rng: &mut Rng) {
    let SearchSpace { agents, domain, .. } = space;
    domain.sample(&mut agents[i], rng);
    domain.evaluate(&mut agents[i], f);
    space.restarts += 1;
}
