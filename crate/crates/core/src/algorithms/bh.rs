//! Black Hole Algorithm.
//!
//! The best agent is the black hole and stays put; every other star moves
//! towards it:
//!
//! ```text
//! x_i ← x_i + rand·(x_BH − x_i)                rand ~ U(0, 1) per coordinate
//! ```
//!
//! A star that ends up fitter than the black hole takes over its role. Then
//! the event-horizon radius is
//!
//! ```text
//! R = |f_BH| / Σ_i |f_i|
//! ```
//!
//! and every star closer than `R` to the black hole is swallowed and
//! re-initialized uniformly in the bounds.

use super::{argmin, reinitialize, unit};
use crate::search::{Counted, Rng, SearchSpace};

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng) {
    let hole = argmin(space);
    let target = space.agents[hole].coords().to_vec();
    {
        let SearchSpace { agents, domain, .. } = &mut *space;
        for (i, a) in agents.iter_mut().enumerate() {
            if i == hole {
                continue;
            }
            for (c, v) in a.coords_mut().iter_mut().enumerate() {
                *v += unit(rng) * (target[c] - *v);
            }
            domain.evaluate(a, f);
        }
    }

    let hole = argmin(space);
    let centre = space.agents[hole].coords().to_vec();
    let total: f64 = space.agents.iter().map(|a| a.fit.abs()).sum();
    let radius = if total > 0.0 && total.is_finite() {
        space.agents[hole].fit.abs() / total
    } else {
        0.0
    };
    for i in 0..space.m() {
        if i == hole {
            continue;
        }
        let dist = space.agents[i]
            .coords()
            .iter()
            .zip(&centre)
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt();
        if dist < radius {
            reinitialize(space, i, f, rng);
        }
    }
}
