//! Particle Swarm Optimization, global-best topology with inertia weight.
//!
//! ```text
//! v ← w·v + c1·r1·(p − x) + c2·r2·(g − x)      r1, r2 ~ U(0, 1) per coordinate
//! x ← x + v
//! ```
//!
//! `p` is the particle's personal best and `g` the swarm's global best. When
//! clamping moves a coordinate, its velocity is set to the displacement that
//! was actually realized.
//!
//! The adaptive variant (AIWPSO) counts a particle as successful when its new
//! fitness beats its previous personal best and sets the next inertia from
//! the swarm's success rate `Ps`:
//!
//! ```text
//! w ← (w_max − w_min)·Ps + w_min
//! ```

use super::{unit, PsoParams, TechniqueState};
use crate::search::{Counted, Extras, Rng, SearchSpace};

pub fn adaptive_inertia(success_rate: f64, w_min: f64, w_max: f64) -> f64 {
    (w_max - w_min) * success_rate + w_min
}

/// Moves every particle once. Returns how many improved on their personal best.
pub(super) fn step(
    space: &mut SearchSpace,
    f: &Counted<'_>,
    rng: &mut Rng,
    p: &PsoParams,
    w: f64,
) -> usize {
    let g = space.best_coords().to_vec();
    let SearchSpace { agents, domain, .. } = space;
    let mut successes = 0;
    let mut old = Vec::with_capacity(g.len());
    for a in agents.iter_mut() {
        {
            let (coords, extras) = a.coords_and_extras();
            let Extras::Particle(ps) = extras else {
                unreachable!("pso agent without particle state")
            };
            old.clear();
            old.extend_from_slice(coords);
            for c in 0..coords.len() {
                let r1 = unit(rng);
                let r2 = unit(rng);
                ps.velocity[c] = w * ps.velocity[c]
                    + p.c1 * r1 * (ps.best[c] - coords[c])
                    + p.c2 * r2 * (g[c] - coords[c]);
                coords[c] += ps.velocity[c];
            }
        }
        domain.evaluate(a, f);
        let fit = a.fit;
        let (coords, extras) = a.coords_and_extras();
        let Extras::Particle(ps) = extras else {
            unreachable!()
        };
        for c in 0..coords.len() {
            if coords[c] != old[c] + ps.velocity[c] {
                ps.velocity[c] = coords[c] - old[c];
            }
        }
        if fit < ps.best_fit {
            successes += 1;
            ps.best_fit = fit;
            ps.best.copy_from_slice(coords);
        }
    }
    successes
}

pub(super) fn aiwpso_step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &PsoParams) {
    let w = match space.state {
        TechniqueState::Aiwpso { w } => w,
        _ => p.w,
    };
    let successes = step(space, f, rng, p, w);
    let rate = successes as f64 / space.m() as f64;
    space.state = TechniqueState::Aiwpso {
        w: adaptive_inertia(rate, p.w_min, p.w_max),
    };
}
