//! Firefly Algorithm.
//!
//! Each firefly `i` moves towards every brighter firefly `j` (positions taken
//! from the start of the iteration), then takes a random step:
//!
//! ```text
//! x_i ← x_i + β0·e^(−γ r_ij²)·(x_j − x_i)     for each j with f(x_j) < f(x_i)
//! x_i ← x_i + α·(rand − ½)·(UB − LB)           per coordinate
//! ```
//!
//! `r_ij` is measured with every coordinate divided by its range, so `γ`
//! means the same thing on any box.
//!
//! With `α = 0` a firefly only moves by attraction; with `γ → ∞` attraction
//! vanishes and only the random step remains.

use super::{unit, FaParams};
use crate::search::{Counted, Rng, SearchSpace};

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &FaParams) {
    let snapshot: Vec<(Vec<f64>, f64)> = space
        .agents
        .iter()
        .map(|a| (a.coords().to_vec(), a.fit))
        .collect();
    let SearchSpace { agents, domain, .. } = space;
    for (i, a) in agents.iter_mut().enumerate() {
        let fit_i = snapshot[i].1;
        {
            let coords = a.coords_mut();
            for (xj, fit_j) in &snapshot {
                if *fit_j >= fit_i {
                    continue;
                }
                let r2: f64 = coords
                    .iter()
                    .zip(xj)
                    .enumerate()
                    .map(|(c, (a, b))| ((a - b) / domain.coord_range(c)).powi(2))
                    .sum();
                if r2 == 0.0 {
                    continue;
                }
                let beta = p.beta0 * (-p.gamma * r2).exp();
                for c in 0..coords.len() {
                    coords[c] += beta * (xj[c] - coords[c]);
                }
            }
            for (c, v) in coords.iter_mut().enumerate() {
                *v += p.alpha * (unit(rng) - 0.5) * domain.coord_range(c);
            }
        }
        domain.evaluate(a, f);
    }
}
