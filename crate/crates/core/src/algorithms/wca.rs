//! Water Cycle Algorithm.
//!
//! Each iteration ranks the population: the best agent is the sea, the next
//! `n_sr − 1` are rivers and the remaining `m − n_sr` are streams. Streams
//! are allotted to the sea and rivers in proportion to
//! `|C_n| / Σ|C|`, `C_n = f_n − f_{n_sr+1}` (largest-remainder rounding so
//! the counts sum to `m − n_sr`). Then, with `C = 2`:
//!
//! ```text
//! stream: x ← x + rand·C·(x_guide − x)       rand ~ U(0, 1) per coordinate
//! river:  x ← x + rand·C·(x_sea − x)
//! ```
//!
//! A river closer than `d_max` to the sea evaporates and rains back as a
//! uniformly drawn agent. `d_max ← d_max − d_max / iterations` afterwards.

use super::{reinitialize, unit, TechniqueState, WcaParams};
use crate::search::{Counted, Rng, SearchSpace};

const FLOW: f64 = 2.0;

/// Streams allotted to the sea and each river.
///
/// `costs` holds the fitness of the sea and rivers, best first;
/// `first_stream` is the fitness of the best stream.
pub fn stream_allocation(costs: &[f64], first_stream: f64, streams: usize) -> Vec<usize> {
    let weights: Vec<f64> = costs.iter().map(|c| (c - first_stream).abs()).collect();
    let total: f64 = weights.iter().sum();
    let shares: Vec<f64> = if total > 0.0 && total.is_finite() {
        weights.iter().map(|w| w / total * streams as f64).collect()
    } else {
        vec![streams as f64 / costs.len() as f64; costs.len()]
    };
    let mut counts: Vec<usize> = shares.iter().map(|s| s.floor() as usize).collect();
    let assigned: usize = counts.iter().sum();
    let mut order: Vec<usize> = (0..costs.len()).collect();
    order.sort_by(|&a, &b| {
        let fa = shares[a] - shares[a].floor();
        let fb = shares[b] - shares[b].floor();
        fb.total_cmp(&fa).then(a.cmp(&b))
    });
    for &i in order.iter().take(streams.saturating_sub(assigned)) {
        counts[i] += 1;
    }
    counts
}

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &WcaParams) {
    let TechniqueState::Wca { d_max } = space.state else {
        unreachable!("wca run without evaporation state")
    };
    let m = space.m();
    let mut rank: Vec<usize> = (0..m).collect();
    rank.sort_by(|&a, &b| {
        space.agents[a]
            .fit
            .total_cmp(&space.agents[b].fit)
            .then(a.cmp(&b))
    });
    let (guides, streams) = rank.split_at(p.n_sr);
    let costs: Vec<f64> = guides.iter().map(|&i| space.agents[i].fit).collect();
    let alloc = stream_allocation(&costs, space.agents[streams[0]].fit, streams.len());
    let guide_pos: Vec<Vec<f64>> = guides
        .iter()
        .map(|&i| space.agents[i].coords().to_vec())
        .collect();

    {
        let SearchSpace { agents, domain, .. } = &mut *space;
        let mut s = streams.iter();
        for (g, &count) in alloc.iter().enumerate() {
            for &i in s.by_ref().take(count) {
                for (c, v) in agents[i].coords_mut().iter_mut().enumerate() {
                    *v += unit(rng) * FLOW * (guide_pos[g][c] - *v);
                }
                domain.evaluate(&mut agents[i], f);
            }
        }
        for &i in &guides[1..] {
            for (c, v) in agents[i].coords_mut().iter_mut().enumerate() {
                *v += unit(rng) * FLOW * (guide_pos[0][c] - *v);
            }
            domain.evaluate(&mut agents[i], f);
        }
    }

    for &i in &guides[1..] {
        let dist = space.agents[i]
            .coords()
            .iter()
            .zip(&guide_pos[0])
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt();
        if dist < d_max {
            reinitialize(space, i, f, rng);
        }
    }

    space.state = TechniqueState::Wca {
        d_max: d_max - d_max / space.iterations().max(1) as f64,
    };
}
