//! Bat Algorithm.
//!
//! For each bat `i` at iteration `t` (1-based), with `x*` the global best:
//!
//! ```text
//! f_i = f_min + (f_max − f_min)·β              β ~ U(0, 1)
//! v_i ← v_i + (x_i − x*)·f_i
//! x'  = x_i + v_i
//! if rand > r_i:  x' = x* + ε·Ā               ε ~ U(−1, 1) per coordinate, Ā mean loudness
//! if f(x') ≤ f(x_i) and rand < A_i:
//!     x_i ← x',  A_i ← α·A_i,  r_i ← r0·(1 − e^(−γt))
//! ```
//!
//! Loudness starts at `A` and pulse rate at 0, so loudness never grows and
//! the pulse rate climbs towards `r0`.

use super::{unit, BaParams};
use crate::search::{Counted, Extras, Rng, SearchSpace};

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &BaParams) {
    let g = space.best_coords().to_vec();
    let t = (space.iteration + 1) as f64;
    let SearchSpace { agents, domain, .. } = space;
    let mean_loudness = agents
        .iter()
        .map(|a| match &a.extras {
            Extras::Bat(b) => b.loudness,
            _ => 0.0,
        })
        .sum::<f64>()
        / agents.len() as f64;

    for a in agents.iter_mut() {
        let mut cand = a.clone();
        let (loudness, pulse_rate) = {
            let (coords, extras) = cand.coords_and_extras();
            let Extras::Bat(bat) = extras else {
                unreachable!("ba agent without bat state")
            };
            bat.frequency = p.f_min + (p.f_max - p.f_min) * unit(rng);
            for c in 0..coords.len() {
                bat.velocity[c] += (coords[c] - g[c]) * bat.frequency;
                coords[c] += bat.velocity[c];
            }
            if unit(rng) > bat.pulse_rate {
                for c in 0..coords.len() {
                    coords[c] = g[c] + (2.0 * unit(rng) - 1.0) * mean_loudness;
                }
            }
            (bat.loudness, bat.pulse_rate)
        };
        domain.evaluate(&mut cand, f);

        // Velocity and frequency persist whether or not the move is accepted.
        let accepted = cand.fit <= a.fit && unit(rng) < loudness;
        let Extras::Bat(new_state) = cand.extras.clone() else {
            unreachable!()
        };
        if accepted {
            *a = cand;
        }
        let Extras::Bat(bat) = &mut a.extras else {
            unreachable!()
        };
        bat.velocity = new_state.velocity;
        bat.frequency = new_state.frequency;
        if accepted {
            bat.loudness = p.alpha * loudness;
            bat.pulse_rate = p.pulse_rate * (1.0 - (-p.gamma * t).exp());
        } else {
            bat.loudness = loudness;
            bat.pulse_rate = pulse_rate;
        }
    }
}
