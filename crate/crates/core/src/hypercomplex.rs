//! Hypercomplex search spaces.
//!
//! Each decision variable is represented by `k` coefficients (k = 4 for
//! quaternions, k = 8 for octonions, any k ≥ 1 otherwise). Techniques move
//! the coefficients inside the unit box `[0, 1]^{n×k}`; objectives only ever
//! see the real position obtained by spanning every coefficient row onto its
//! variable's interval:
//!
//! ```text
//! x_j = LB_j + (UB_j − LB_j) · ‖q_j‖₂ / √k
//! ```
//!
//! With coefficients confined to `[0, 1]` the norm ratio lies in `[0, 1]`, so
//! the map is total and onto `[LB_j, UB_j]`: the all-zero row spans to `LB_j`
//! and the all-one row to `UB_j`.
//!
//! No hypercomplex algebra is involved; the coefficients are containers.
//! Each technique's own update rules are applied entry-wise to the tensor.

use crate::algorithms::Technique;
use crate::benchmarks::Objective;
use crate::error::{Error, Result};
use crate::search::{Rng, Run, RunResult, SearchSpace};

pub const QUATERNION: usize = 4;
pub const OCTONION: usize = 8;

/// Number of coefficients per decision variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypercomplexConfig {
    k: usize,
}

impl HypercomplexConfig {
    pub fn new(k: usize) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidHypercomplexDim(k));
        }
        Ok(HypercomplexConfig { k })
    }

    pub fn quaternion() -> Self {
        HypercomplexConfig { k: QUATERNION }
    }

    pub fn octonion() -> Self {
        HypercomplexConfig { k: OCTONION }
    }

    pub fn k(self) -> usize {
        self.k
    }
}

/// Spans one coefficient row onto `[lb, ub]`. Coefficients are clipped to
/// `[0, 1]` first.
pub fn span_to_real(row: &[f64], lb: f64, ub: f64) -> f64 {
    let k = row.len() as f64;
    let norm = row
        .iter()
        .map(|c| c.clamp(0.0, 1.0).powi(2))
        .sum::<f64>()
        .sqrt();
    let ratio = (norm / k.sqrt()).min(1.0);
    (lb * (1.0 - ratio) + ub * ratio).clamp(lb, ub)
}

/// Switches `space` to `k`-coefficient tensors and draws every coefficient
/// uniformly from `[0, 1]`. Positions are spanned from the tensors; agents are
/// left unevaluated.
pub fn init_tensor(space: &mut SearchSpace, k: usize, rng: &mut Rng) -> Result<()> {
    let config = HypercomplexConfig::new(k)?;
    check_roster(space.technique())?;
    space.set_hypercomplex(config.k());
    space.initialize(rng)?;
    Ok(())
}

/// Fails unless `technique` has a hypercomplex variant.
pub fn check_roster(technique: Technique) -> Result<()> {
    if technique.supports_hypercomplex() {
        return Ok(());
    }
    let supported = Technique::HYPERCOMPLEX
        .iter()
        .map(|t| t.as_str())
        .collect::<Vec<_>>()
        .join(", ");
    Err(Error::UnsupportedLift {
        technique: technique.to_string(),
        supported,
    })
}

/// Runs `space`'s technique over a `k`-coefficient tensor representation.
///
/// The returned `best_position` is the spanned real vector.
pub fn lift(space: SearchSpace, f: &dyn Objective, k: usize, seed: u64) -> Result<RunResult> {
    Ok(lifted_run(space, f, k, seed)?.run_to_end())
}

/// Like [`lift`], but returns the run so it can be advanced step by step.
pub fn lifted_run<'f>(
    mut space: SearchSpace,
    f: &'f dyn Objective,
    k: usize,
    seed: u64,
) -> Result<Run<'f>> {
    let config = HypercomplexConfig::new(k)?;
    check_roster(space.technique())?;
    space.set_hypercomplex(config.k());
    Run::new(space, f, seed)
}
