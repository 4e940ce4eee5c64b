//! Harmony Search and two variants.
//!
//! The population is the harmony memory (HMS = `m`). Each iteration
//! improvises one new harmony, coordinate by coordinate:
//!
//! ```text
//! rand < HMCR:   take the coordinate from a random harmony in memory
//!   rand < PAR:  then adjust it by ρ·U(−1, 1)·(UB − LB)
//! otherwise:     draw it uniformly in the bounds
//! ```
//!
//! The new harmony replaces the worst one in memory if it is strictly better.
//!
//! * IHS raises PAR linearly from `PAR_min` to `PAR_max` and shrinks ρ
//!   exponentially from `ρ_max` to `ρ_min` over the run.
//! * PSFHS keeps an operation memory recording which of the three choices
//!   produced each coordinate of each stored harmony. Per coordinate,
//!   `HMCR = (#memory + #pitch)/HMS` and `PAR = #pitch/HMS`, both kept within
//!   [0.1, 0.9] so the memory cannot lock itself into pure recombination or
//!   pure random search. During the first HMS iterations the memory is still
//!   being filled, so fixed rates are used.

use rand::Rng as _;

use super::{unit, HsParams, IhsParams, TechniqueState};
use crate::search::{Counted, Rng, SearchSpace};

const PSFHS_HMCR: f64 = 0.9;
const PSFHS_PAR: f64 = 0.3;
const PSFHS_BANDWIDTH: f64 = 0.01;
const RATE_MIN: f64 = 0.1;
const RATE_MAX: f64 = 0.9;

/// How a coordinate of a harmony was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarmonyOp {
    Random,
    Memory,
    Pitch,
}

/// IHS `(PAR, ρ)` at 0-based `iteration` of a run of `total` iterations.
pub fn ihs_schedule(p: &IhsParams, iteration: usize, total: usize) -> (f64, f64) {
    let t = if total > 1 {
        iteration as f64 / (total - 1) as f64
    } else {
        0.0
    };
    let par = p.par_min + (p.par_max - p.par_min) * t;
    let bw = p.bandwidth_max * ((p.bandwidth_min / p.bandwidth_max).ln() * t).exp();
    (par, bw)
}

/// Per-coordinate `(HMCR, PAR)` learned from an operation memory.
pub fn psfhs_rates(om: &[Vec<HarmonyOp>]) -> Vec<(f64, f64)> {
    let hms = om.len() as f64;
    let dim = om.first().map_or(0, Vec::len);
    (0..dim)
        .map(|c| {
            let memory = om.iter().filter(|row| row[c] == HarmonyOp::Memory).count() as f64;
            let pitch = om.iter().filter(|row| row[c] == HarmonyOp::Pitch).count() as f64;
            ((memory + pitch) / hms, pitch / hms)
        })
        .collect()
}

/// Improvises and stores one harmony. `rates` yields `(HMCR, PAR, ρ)` per
/// coordinate. Returns the replaced index and the operations used, if the
/// new harmony entered memory.
fn improvise(
    space: &mut SearchSpace,
    f: &Counted<'_>,
    rng: &mut Rng,
    rates: impl Fn(usize) -> (f64, f64, f64),
) -> Option<(usize, Vec<HarmonyOp>)> {
    let m = space.m();
    let SearchSpace { agents, domain, .. } = &mut *space;
    let mut worst = 0;
    for (i, a) in agents.iter().enumerate() {
        if a.fit > agents[worst].fit {
            worst = i;
        }
    }
    let mut new = agents[worst].clone();
    let mut ops = Vec::with_capacity(domain.coord_dim());
    for c in 0..domain.coord_dim() {
        let (hmcr, par, bw) = rates(c);
        let (v, op) = if unit(rng) < hmcr {
            let v = agents[rng.random_range(0..m)].coords()[c];
            if unit(rng) < par {
                let shift = bw * (2.0 * unit(rng) - 1.0) * domain.coord_range(c);
                (v + shift, HarmonyOp::Pitch)
            } else {
                (v, HarmonyOp::Memory)
            }
        } else {
            (domain.sample_coord(c, rng), HarmonyOp::Random)
        };
        new.coords_mut()[c] = v;
        ops.push(op);
    }
    domain.evaluate(&mut new, f);
    if new.fit < agents[worst].fit {
        agents[worst] = new;
        Some((worst, ops))
    } else {
        None
    }
}

pub(super) fn hs_step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &HsParams) {
    improvise(space, f, rng, |_| (p.hmcr, p.par, p.bandwidth));
}

pub(super) fn ihs_step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &IhsParams) {
    let (par, bw) = ihs_schedule(p, space.iteration(), space.iterations());
    improvise(space, f, rng, |_| (p.hmcr, par, bw));
}

pub(super) fn psfhs_step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng) {
    let TechniqueState::Psfhs(mut om) = std::mem::take(&mut space.state) else {
        unreachable!("psfhs run without operation memory")
    };
    let rates: Vec<(f64, f64)> = if space.iteration() < space.m() {
        vec![(PSFHS_HMCR, PSFHS_PAR); space.domain.coord_dim()]
    } else {
        psfhs_rates(&om)
            .into_iter()
            .map(|(h, p)| (h.clamp(RATE_MIN, RATE_MAX), p.clamp(RATE_MIN, RATE_MAX)))
            .collect()
    };
    if let Some((i, ops)) = improvise(space, f, rng, |c| (rates[c].0, rates[c].1, PSFHS_BANDWIDTH))
    {
        om[i] = ops;
    }
    space.state = TechniqueState::Psfhs(om);
}
