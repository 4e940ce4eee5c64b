//! Cuckoo Search.
//!
//! Lévy phase, for every nest `i` with `g` the best nest:
//!
//! ```text
//! x' = x_i + α·L ⊙ (x_i − g) ⊙ N(0, 1)       L = Mantegna(β) per coordinate
//! x_i ← x' if f(x') ≤ f(x_i)
//! ```
//!
//! Abandonment phase, for every nest except the current best, with
//! probability `p_a`:
//!
//! ```text
//! x' = x_i + r·(x_p − x_q)                    r ~ U(0, 1), p, q random nests
//! x_i ← x' if f(x') ≤ f(x_i)
//! ```
//!
//! Replacement is greedy in both phases, so the best nest always survives.

use rand::Rng as _;

use super::levy::Mantegna;
use super::{argmin, normal, unit, CsParams};
use crate::search::{Counted, Rng, SearchSpace};

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &CsParams) {
    let g = space.best_coords().to_vec();
    let levy = Mantegna::new(p.beta);
    let m = space.m();
    {
        let SearchSpace { agents, domain, .. } = &mut *space;
        for a in agents.iter_mut() {
            let mut cand = a.clone();
            let coords = cand.coords_mut();
            for c in 0..coords.len() {
                let step = p.alpha * levy.sample(rng) * (coords[c] - g[c]);
                coords[c] += step * normal(rng);
            }
            domain.evaluate(&mut cand, f);
            if cand.fit <= a.fit {
                *a = cand;
            }
        }
    }

    let best = argmin(space);
    let mut abandoned = 0;
    let SearchSpace { agents, domain, .. } = &mut *space;
    for i in 0..m {
        if i == best || unit(rng) >= p.pa {
            continue;
        }
        let a = rng.random_range(0..m);
        let b = rng.random_range(0..m);
        let r = unit(rng);
        let (xa, xb) = (agents[a].coords().to_vec(), agents[b].coords().to_vec());
        let mut cand = agents[i].clone();
        let coords = cand.coords_mut();
        for c in 0..coords.len() {
            coords[c] += r * (xa[c] - xb[c]);
        }
        domain.evaluate(&mut cand, f);
        abandoned += 1;
        if cand.fit <= agents[i].fit {
            agents[i] = cand;
        }
    }
    space.restarts += abandoned;
}
