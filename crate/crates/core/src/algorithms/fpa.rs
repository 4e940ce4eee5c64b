//! Flower Pollination Algorithm.
//!
//! For each flower `i`, with `g` the global best:
//!
//! ```text
//! global (rand < p):  x' = x_i + L ⊙ (g − x_i)          L = 0.01 · Mantegna(β) per coordinate
//! local  (otherwise): x' = x_i + ε·(x_j − x_k)          ε ~ U(0, 1), j, k random flowers
//! x_i ← x' if f(x') ≤ f(x_i)
//! ```

use rand::Rng as _;

use super::levy::Mantegna;
use super::{unit, FpaParams};
use crate::search::{Counted, Rng, SearchSpace};

const LEVY_SCALE: f64 = 0.01;

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &FpaParams) {
    let g = space.best_coords().to_vec();
    let levy = Mantegna::new(p.beta);
    let m = space.m();
    let SearchSpace { agents, domain, .. } = space;
    for i in 0..m {
        let mut cand = agents[i].clone();
        if unit(rng) < p.p {
            let coords = cand.coords_mut();
            for c in 0..coords.len() {
                let l = LEVY_SCALE * levy.sample(rng);
                coords[c] += l * (g[c] - coords[c]);
            }
        } else {
            let j = rng.random_range(0..m);
            let k = rng.random_range(0..m);
            let eps = unit(rng);
            let (xj, xk) = (agents[j].coords().to_vec(), agents[k].coords().to_vec());
            let coords = cand.coords_mut();
            for c in 0..coords.len() {
                coords[c] += eps * (xj[c] - xk[c]);
            }
        }
        domain.evaluate(&mut cand, f);
        if cand.fit <= agents[i].fit {
            agents[i] = cand;
        }
    }
}
