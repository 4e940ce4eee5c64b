use crate::algorithms::{Technique, TechniqueParams};
use crate::benchmarks::Objective;

/// Fitness stored when an objective returns NaN or ±∞.
pub const WORST_FITNESS: f64 = f64::MAX;

/// Maps non-finite objective values to [`WORST_FITNESS`].
pub fn sanitize_fitness(v: f64) -> f64 {
    if v.is_finite() {
        v
    } else {
        WORST_FITNESS
    }
}

/// Row-major `n × k` matrix holding the hypercomplex coefficients of an agent.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    k: usize,
    data: Vec<f64>,
}

impl Tensor {
    pub fn zeros(n: usize, k: usize) -> Self {
        Tensor {
            k,
            data: vec![0.0; n * k],
        }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let k = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == k), "ragged tensor rows");
        Tensor {
            k,
            data: rows.concat(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.data.len().checked_div(self.k).unwrap_or(0)
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.data[j * self.k..(j + 1) * self.k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.k)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ParticleState {
    pub velocity: Vec<f64>,
    /// Personal best, in search coordinates.
    pub best: Vec<f64>,
    pub best_fit: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BatState {
    pub velocity: Vec<f64>,
    pub frequency: f64,
    pub loudness: f64,
    pub pulse_rate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BeeState {
    pub trials: u32,
}

/// Per-technique agent state.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Extras {
    #[default]
    None,
    Particle(ParticleState),
    Bat(BatState),
    Bee(BeeState),
}

impl Extras {
    /// Zeroed state sized for `dim` search coordinates.
    pub(crate) fn for_technique(params: &TechniqueParams, dim: usize) -> Self {
        match params {
            TechniqueParams::Pso(_) | TechniqueParams::Aiwpso(_) => {
                Extras::Particle(ParticleState {
                    velocity: vec![0.0; dim],
                    best: vec![0.0; dim],
                    best_fit: WORST_FITNESS,
                })
            }
            TechniqueParams::Ba(p) => Extras::Bat(BatState {
                velocity: vec![0.0; dim],
                frequency: 0.0,
                loudness: p.loudness,
                pulse_rate: 0.0,
            }),
            TechniqueParams::Abc(_) => Extras::Bee(BeeState { trials: 0 }),
            _ => Extras::None,
        }
    }
}

/// One candidate solution.
#[derive(Debug, Clone, PartialEq)]
pub struct Agent {
    /// Position in the real search space.
    pub x: Vec<f64>,
    /// Fitness of `x`; lower is better.
    pub fit: f64,
    pub extras: Extras,
    /// Hypercomplex coefficients, present only in lifted runs.
    pub tensor: Option<Tensor>,
}

impl Agent {
    /// A zeroed agent with state allocated for `technique`'s default parameters.
    pub fn new(n: usize, technique: Technique) -> Self {
        Self::with_params(n, &technique.default_params(), None)
    }

    pub(crate) fn with_params(n: usize, params: &TechniqueParams, k: Option<usize>) -> Self {
        let dim = n * k.unwrap_or(1);
        Agent {
            x: vec![0.0; n],
            fit: WORST_FITNESS,
            extras: Extras::for_technique(params, dim),
            tensor: k.map(|k| Tensor::zeros(n, k)),
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// The coordinates techniques move: the tensor entries when lifted, else `x`.
    pub fn coords(&self) -> &[f64] {
        match &self.tensor {
            Some(t) => t.as_slice(),
            None => &self.x,
        }
    }

    pub fn coords_mut(&mut self) -> &mut [f64] {
        match &mut self.tensor {
            Some(t) => t.as_mut_slice(),
            None => &mut self.x,
        }
    }

    pub(crate) fn coords_and_extras(&mut self) -> (&mut [f64], &mut Extras) {
        let coords = match &mut self.tensor {
            Some(t) => t.as_mut_slice(),
            None => &mut self.x,
        };
        (coords, &mut self.extras)
    }
}

/// Sets `a.fit = f(a.x)` and returns it. Non-finite values become [`WORST_FITNESS`].
pub fn evaluate_agent<F: Objective + ?Sized>(a: &mut Agent, f: &F) -> f64 {
    a.fit = sanitize_fitness(f.evaluate(&a.x));
    a.fit
}
