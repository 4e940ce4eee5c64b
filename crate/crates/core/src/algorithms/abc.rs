//! Artificial Bee Colony.
//!
//! `m` food sources, one employed bee and one onlooker per source.
//!
//! * Employed phase: each source `i` tries `v = x_i` with one random
//!   coordinate `d` replaced by `x_id + φ·(x_id − x_jd)`, `φ ~ U(−1, 1)`, `j ≠ i`.
//!   Greedy selection; the trial counter resets on improvement and
//!   increments otherwise.
//! * Onlooker phase: `m` onlookers pick sources by roulette over
//!   `q_i = 1/(1 + f_i)` (or `1 + |f_i|` for negative fitness), normalized,
//!   and apply the same move.
//! * Scout phase: every source whose counter exceeds `limit` is re-drawn
//!   uniformly in the bounds.

use rand::Rng as _;

use super::{reinitialize, unit, AbcParams};
use crate::search::{Agent, Counted, Domain, Extras, Rng, SearchSpace};

/// Roulette probabilities over a colony's fitness values.
pub fn selection_probabilities(fits: &[f64]) -> Vec<f64> {
    let quality: Vec<f64> = fits
        .iter()
        .map(|&f| {
            if f >= 0.0 {
                1.0 / (1.0 + f)
            } else {
                1.0 + f.abs()
            }
        })
        .collect();
    let total: f64 = quality.iter().sum();
    if total > 0.0 && total.is_finite() {
        quality.iter().map(|q| q / total).collect()
    } else {
        vec![1.0 / fits.len() as f64; fits.len()]
    }
}

fn trials_mut(a: &mut Agent) -> &mut u32 {
    match &mut a.extras {
        Extras::Bee(b) => &mut b.trials,
        _ => unreachable!("abc agent without bee state"),
    }
}

fn forage(agents: &mut [Agent], i: usize, domain: &Domain, f: &Counted<'_>, rng: &mut Rng) {
    let m = agents.len();
    let mut j = rng.random_range(0..m - 1);
    if j >= i {
        j += 1;
    }
    let d = rng.random_range(0..domain.coord_dim());
    let phi = 2.0 * unit(rng) - 1.0;
    let partner = agents[j].coords()[d];
    let mut cand = agents[i].clone();
    let own = cand.coords()[d];
    cand.coords_mut()[d] = own + phi * (own - partner);
    domain.evaluate(&mut cand, f);
    if cand.fit < agents[i].fit {
        *trials_mut(&mut cand) = 0;
        agents[i] = cand;
    } else {
        *trials_mut(&mut agents[i]) += 1;
    }
}

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &AbcParams) {
    let m = space.m();
    {
        let SearchSpace { agents, domain, .. } = &mut *space;
        for i in 0..m {
            forage(agents, i, domain, f, rng);
        }
        let fits: Vec<f64> = agents.iter().map(|a| a.fit).collect();
        let probs = selection_probabilities(&fits);
        for _ in 0..m {
            let r = unit(rng);
            let mut acc = 0.0;
            let mut pick = m - 1;
            for (i, p) in probs.iter().enumerate() {
                acc += p;
                if r < acc {
                    pick = i;
                    break;
                }
            }
            forage(agents, pick, domain, f, rng);
        }
    }
    for i in 0..m {
        if *trials_mut(&mut space.agents[i]) > p.limit {
            reinitialize(space, i, f, rng);
            *trials_mut(&mut space.agents[i]) = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{Technique, TechniqueParams};
    use crate::benchmarks::{lookup, Arity, FnObjective};
    use crate::search::{rng_from_seed, Run};

    #[test]
    fn probabilities_sum_to_one() {
        for fits in [
            vec![0.0, 1.0, 3.0],
            vec![-2.0, 5.0, 0.5, 1e6],
            vec![f64::MAX; 4],
        ] {
            let p = selection_probabilities(&fits);
            assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12, "{fits:?}");
            assert!(p.iter().all(|&v| v >= 0.0));
        }
        let p = selection_probabilities(&[0.0, 1.0]);
        assert!((p[0] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn counter_resets_on_improvement_and_counts_failures() {
        let sphere = lookup("sphere").unwrap();
        let mut s = SearchSpace::new(3, 2, Technique::Abc).unwrap();
        s.set_uniform_bounds(-5.0, 5.0).set_iterations(1);
        let mut run = Run::new(s, sphere, 0).unwrap();
        let counted = Counted::new(sphere);
        let mut rng = rng_from_seed(3);
        let space = run.space_mut();
        for _ in 0..50 {
            let before = space.agents[0].clone();
            let trials_before = *trials_mut(&mut space.agents[0]);
            let SearchSpace { agents, domain, .. } = &mut *space;
            forage(agents, 0, domain, &counted, &mut rng);
            let after = &mut space.agents[0];
            if after.fit < before.fit {
                assert_eq!(*trials_mut(after), 0);
            } else {
                assert_eq!(after.x, before.x);
                assert_eq!(*trials_mut(after), trials_before + 1);
            }
        }
    }

    #[test]
    fn exhausted_sources_become_scouts() {
        // Nothing ever improves on a flat objective, so every source exceeds
        // the limit after limit + 1 employed/onlooker rounds.
        let flat = FnObjective::new("flat", Arity::Any, |_| 2.0);
        let mut s = SearchSpace::new(4, 2, Technique::Abc).unwrap();
        s.set_uniform_bounds(-1.0, 1.0).set_iterations(3);
        s.set_params(TechniqueParams::Abc(AbcParams { limit: 1 }))
            .unwrap();
        let mut run = Run::new(s, &flat, 9).unwrap();
        run.step();
        run.step();
        let r = run.finish();
        assert!(r.restarts >= 4);
        assert_eq!(r.evaluations, 4 + 2 * 8 + r.restarts);
    }
}
