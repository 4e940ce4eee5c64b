//! Migrating Birds Optimization over continuous boxes.
//!
//! Birds fly in a V formation: a leader followed by a left and a right line.
//! One iteration is one tour:
//!
//! 1. The leader draws `k` neighbors and moves to the best one if it improves.
//!    The best `x` unused neighbors go to the head of the left line, the next
//!    `x` to the head of the right line.
//! 2. Each follower draws `k − x` neighbors of its own, pools them with the
//!    `x` it received, moves to the best if it improves, and passes its best
//!    `x` unused neighbors to the bird behind it.
//! 3. Every `period` tours the leader drops to the tail of one line (sides
//!    alternate) and the head of that line takes the lead.
//!
//! A neighbor is a Gaussian perturbation of every coordinate with standard
//! deviation `0.05·(UB − LB)`.

use super::{normal, MboParams, TechniqueState};
use crate::search::{Agent, Counted, Domain, Rng, SearchSpace};

const NEIGHBOR_SCALE: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// Positions of the birds in the V, as agent indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Formation {
    leader: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    tours: usize,
    next_side: Side,
}

impl Formation {
    /// Agent 0 leads; the rest alternate between the left and right lines.
    pub fn new(m: usize) -> Self {
        let (left, right) = (1..m).partition(|i| i % 2 == 1);
        Formation {
            leader: 0,
            left,
            right,
            tours: 0,
            next_side: Side::Left,
        }
    }

    pub fn leader(&self) -> usize {
        self.leader
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }

    pub fn tours(&self) -> usize {
        self.tours
    }

    fn rotate(&mut self) {
        let side = match (self.next_side, self.left.is_empty(), self.right.is_empty()) {
            (_, true, true) => return,
            (Side::Left, false, _) | (Side::Right, false, true) => Side::Left,
            _ => Side::Right,
        };
        let line = match side {
            Side::Left => &mut self.left,
            Side::Right => &mut self.right,
        };
        let new_leader = line.remove(0);
        line.push(self.leader);
        self.leader = new_leader;
        self.next_side = match side {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        };
    }
}

fn neighbors(
    bird: &Agent,
    count: usize,
    domain: &Domain,
    f: &Counted<'_>,
    rng: &mut Rng,
) -> Vec<Agent> {
    (0..count)
        .map(|_| {
            let mut n = bird.clone();
            for (c, v) in n.coords_mut().iter_mut().enumerate() {
                *v += NEIGHBOR_SCALE * domain.coord_range(c) * normal(rng);
            }
            domain.evaluate(&mut n, f);
            n
        })
        .collect()
}

/// Moves `bird` to the best of `pool` if it improves. Returns the unused
/// neighbors, best first.
fn settle_on_best(bird: &mut Agent, mut pool: Vec<Agent>) -> Vec<Agent> {
    pool.sort_by(|a, b| a.fit.total_cmp(&b.fit));
    if !pool.is_empty() && pool[0].fit < bird.fit {
        *bird = pool.remove(0);
    }
    pool
}

pub(super) fn step(space: &mut SearchSpace, f: &Counted<'_>, rng: &mut Rng, p: &MboParams) {
    let TechniqueState::Mbo(mut formation) = std::mem::take(&mut space.state) else {
        unreachable!("mbo run without formation")
    };
    let SearchSpace { agents, domain, .. } = &mut *space;

    let leader = formation.leader;
    let pool = neighbors(&agents[leader], p.k, domain, f, rng);
    let mut unused = settle_on_best(&mut agents[leader], pool).into_iter();
    let to_left: Vec<Agent> = unused.by_ref().take(p.x).collect();
    let to_right: Vec<Agent> = unused.take(p.x).collect();

    for (line, mut shared) in [(&formation.left, to_left), (&formation.right, to_right)] {
        for &bird in line {
            let mut pool = neighbors(&agents[bird], p.k - p.x, domain, f, rng);
            pool.append(&mut shared);
            shared = settle_on_best(&mut agents[bird], pool)
                .into_iter()
                .take(p.x)
                .collect();
        }
    }

    formation.tours += 1;
    if formation.tours % p.period == 0 {
        formation.rotate();
    }
    space.state = TechniqueState::Mbo(formation);
}
