use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Identifier of an optimization technique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Technique {
    /// Particle Swarm Optimization.
    Pso,
    /// PSO with Adaptive Inertia Weight.
    Aiwpso,
    /// Bat Algorithm.
    Ba,
    /// Flower Pollination Algorithm.
    Fpa,
    /// Firefly Algorithm.
    Fa,
    /// Cuckoo Search.
    Cs,
    /// Black Hole Algorithm.
    Bh,
    /// Migrating Birds Optimization.
    Mbo,
    /// Artificial Bee Colony.
    Abc,
    /// Water Cycle Algorithm.
    Wca,
    /// Harmony Search.
    Hs,
    /// Improved Harmony Search.
    Ihs,
    /// Parameter-setting-free Harmony Search.
    Psfhs,
}

impl Technique {
    pub const ALL: [Technique; 13] = [
        Technique::Pso,
        Technique::Aiwpso,
        Technique::Ba,
        Technique::Fpa,
        Technique::Fa,
        Technique::Cs,
        Technique::Bh,
        Technique::Mbo,
        Technique::Abc,
        Technique::Wca,
        Technique::Hs,
        Technique::Ihs,
        Technique::Psfhs,
    ];

    /// Techniques with a quaternion/octonion (arbitrary k) variant.
    pub const HYPERCOMPLEX: [Technique; 11] = [
        Technique::Pso,
        Technique::Aiwpso,
        Technique::Ba,
        Technique::Fpa,
        Technique::Fa,
        Technique::Cs,
        Technique::Bh,
        Technique::Abc,
        Technique::Hs,
        Technique::Ihs,
        Technique::Psfhs,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Technique::Pso => "pso",
            Technique::Aiwpso => "aiwpso",
            Technique::Ba => "ba",
            Technique::Fpa => "fpa",
            Technique::Fa => "fa",
            Technique::Cs => "cs",
            Technique::Bh => "bh",
            Technique::Mbo => "mbo",
            Technique::Abc => "abc",
            Technique::Wca => "wca",
            Technique::Hs => "hs",
            Technique::Ihs => "ihs",
            Technique::Psfhs => "psfhs",
        }
    }

    pub fn full_name(self) -> &'static str {
        match self {
            Technique::Pso => "Particle Swarm Optimization",
            Technique::Aiwpso => "Particle Swarm Optimization with Adaptive Inertia Weight",
            Technique::Ba => "Bat Algorithm",
            Technique::Fpa => "Flower Pollination Algorithm",
            Technique::Fa => "Firefly Algorithm",
            Technique::Cs => "Cuckoo Search",
            Technique::Bh => "Black Hole Algorithm",
            Technique::Mbo => "Migrating Birds Optimization",
            Technique::Abc => "Artificial Bee Colony",
            Technique::Wca => "Water Cycle Algorithm",
            Technique::Hs => "Harmony Search",
            Technique::Ihs => "Improved Harmony Search",
            Technique::Psfhs => "Parameter-setting-free Harmony Search",
        }
    }

    pub fn supports_hypercomplex(self) -> bool {
        Self::HYPERCOMPLEX.contains(&self)
    }

    pub fn is_harmony_family(self) -> bool {
        matches!(self, Technique::Hs | Technique::Ihs | Technique::Psfhs)
    }

    /// Canonical parameter values, also used for the example model files.
    pub fn default_params(self) -> TechniqueParams {
        match self {
            Technique::Pso => TechniqueParams::Pso(PsoParams {
                c1: 1.7,
                c2: 1.7,
                w: 0.7,
                w_min: 0.0,
                w_max: 0.0,
            }),
            Technique::Aiwpso => TechniqueParams::Aiwpso(PsoParams {
                c1: 1.7,
                c2: 1.7,
                w: 0.7,
                w_min: 0.4,
                w_max: 0.9,
            }),
            Technique::Ba => TechniqueParams::Ba(BaParams {
                f_min: 0.0,
                f_max: 2.0,
                loudness: 1.0,
                pulse_rate: 0.5,
                alpha: 0.9,
                gamma: 0.9,
            }),
            Technique::Fpa => TechniqueParams::Fpa(FpaParams { p: 0.8, beta: 1.5 }),
            Technique::Fa => TechniqueParams::Fa(FaParams {
                alpha: 0.02,
                beta0: 1.0,
                gamma: 1.0,
            }),
            Technique::Cs => TechniqueParams::Cs(CsParams {
                pa: 0.25,
                alpha: 0.01,
                beta: 1.5,
            }),
            Technique::Bh => TechniqueParams::Bh,
            Technique::Mbo => TechniqueParams::Mbo(MboParams {
                k: 3,
                x: 1,
                period: 10,
            }),
            Technique::Abc => TechniqueParams::Abc(AbcParams { limit: 20 }),
            Technique::Wca => TechniqueParams::Wca(WcaParams {
                n_sr: 4,
                d_max: 0.01,
            }),
            Technique::Hs => TechniqueParams::Hs(HsParams {
                hmcr: 0.9,
                par: 0.3,
                bandwidth: 0.01,
            }),
            Technique::Ihs => TechniqueParams::Ihs(IhsParams {
                hmcr: 0.9,
                par_min: 0.1,
                par_max: 0.9,
                bandwidth_min: 0.0001,
                bandwidth_max: 0.05,
            }),
            Technique::Psfhs => TechniqueParams::Psfhs,
        }
    }
}

impl fmt::Display for Technique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Technique {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.trim().to_ascii_lowercase();
        let lower = lower.trim_matches('_');
        Technique::ALL
            .into_iter()
            .find(|t| t.as_str() == lower)
            .ok_or_else(|| Error::UnknownTechnique(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsoParams {
    pub c1: f64,
    pub c2: f64,
    pub w: f64,
    pub w_min: f64,
    pub w_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BaParams {
    pub f_min: f64,
    pub f_max: f64,
    /// Initial loudness A.
    pub loudness: f64,
    /// Asymptotic pulse emission rate r0.
    pub pulse_rate: f64,
    /// Loudness decay.
    pub alpha: f64,
    /// Pulse-rate growth.
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FpaParams {
    /// Switch probability between global and local pollination.
    pub p: f64,
    /// Lévy exponent.
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FaParams {
    pub alpha: f64,
    pub beta0: f64,
    pub gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsParams {
    /// Probability of abandoning a nest.
    pub pa: f64,
    /// Lévy step scale.
    pub alpha: f64,
    /// Lévy exponent.
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MboParams {
    /// Neighbor solutions generated by the leader.
    pub k: usize,
    /// Neighbor solutions shared with the next bird.
    pub x: usize,
    /// Tours before the leader is replaced.
    pub period: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbcParams {
    pub limit: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WcaParams {
    /// Number of rivers plus the sea.
    pub n_sr: usize,
    /// Evaporation distance.
    pub d_max: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HsParams {
    pub hmcr: f64,
    pub par: f64,
    /// Pitch bandwidth, as a fraction of each variable's range.
    pub bandwidth: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IhsParams {
    pub hmcr: f64,
    pub par_min: f64,
    pub par_max: f64,
    pub bandwidth_min: f64,
    pub bandwidth_max: f64,
}

/// Technique-specific scalars, one variant per technique.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum TechniqueParams {
    Pso(PsoParams),
    Aiwpso(PsoParams),
    Ba(BaParams),
    Fpa(FpaParams),
    Fa(FaParams),
    Cs(CsParams),
    Bh,
    Mbo(MboParams),
    Abc(AbcParams),
    Wca(WcaParams),
    Hs(HsParams),
    Ihs(IhsParams),
    Psfhs,
}

impl TechniqueParams {
    pub fn technique(&self) -> Technique {
        match self {
            TechniqueParams::Pso(_) => Technique::Pso,
            TechniqueParams::Aiwpso(_) => Technique::Aiwpso,
            TechniqueParams::Ba(_) => Technique::Ba,
            TechniqueParams::Fpa(_) => Technique::Fpa,
            TechniqueParams::Fa(_) => Technique::Fa,
            TechniqueParams::Cs(_) => Technique::Cs,
            TechniqueParams::Bh => Technique::Bh,
            TechniqueParams::Mbo(_) => Technique::Mbo,
            TechniqueParams::Abc(_) => Technique::Abc,
            TechniqueParams::Wca(_) => Technique::Wca,
            TechniqueParams::Hs(_) => Technique::Hs,
            TechniqueParams::Ihs(_) => Technique::Ihs,
            TechniqueParams::Psfhs => Technique::Psfhs,
        }
    }

    /// Range checks for each parameter. Every violated rule is reported.
    pub(crate) fn check(&self, m: usize, issues: &mut Vec<String>) {
        let mut req = |ok: bool, msg: String| {
            if !ok {
                issues.push(msg);
            }
        };
        let unit = |v: f64| (0.0..=1.0).contains(&v);
        let levy = |b: f64| b > 0.0 && b < 2.0;
        match *self {
            TechniqueParams::Pso(p) => {
                req(p.c1 > 0.0, format!("c1 must be > 0, got {}", p.c1));
                req(p.c2 > 0.0, format!("c2 must be > 0, got {}", p.c2));
                req(p.w >= 0.0, format!("w must be >= 0, got {}", p.w));
            }
            TechniqueParams::Aiwpso(p) => {
                req(p.c1 > 0.0, format!("c1 must be > 0, got {}", p.c1));
                req(p.c2 > 0.0, format!("c2 must be > 0, got {}", p.c2));
                req(p.w >= 0.0, format!("w must be >= 0, got {}", p.w));
                req(
                    p.w_min >= 0.0,
                    format!("w_min must be >= 0, got {}", p.w_min),
                );
                req(
                    p.w_min < p.w_max,
                    format!("w_min must be < w_max, got {} and {}", p.w_min, p.w_max),
                );
            }
            TechniqueParams::Ba(p) => {
                req(
                    p.f_min >= 0.0,
                    format!("f_min must be >= 0, got {}", p.f_min),
                );
                req(
                    p.f_min <= p.f_max,
                    format!("f_min must be <= f_max, got {} and {}", p.f_min, p.f_max),
                );
                req(
                    p.loudness > 0.0,
                    format!("A must be > 0, got {}", p.loudness),
                );
                req(
                    unit(p.pulse_rate),
                    format!("r must lie in [0, 1], got {}", p.pulse_rate),
                );
                req(
                    p.alpha > 0.0 && p.alpha <= 1.0,
                    format!("alpha must lie in (0, 1], got {}", p.alpha),
                );
                req(p.gamma > 0.0, format!("gamma must be > 0, got {}", p.gamma));
            }
            TechniqueParams::Fpa(p) => {
                req(unit(p.p), format!("p must lie in [0, 1], got {}", p.p));
                req(
                    levy(p.beta),
                    format!("beta must lie in (0, 2), got {}", p.beta),
                );
            }
            TechniqueParams::Fa(p) => {
                req(
                    p.alpha >= 0.0,
                    format!("alpha must be >= 0, got {}", p.alpha),
                );
                req(
                    p.beta0 >= 0.0,
                    format!("beta_0 must be >= 0, got {}", p.beta0),
                );
                req(
                    p.gamma >= 0.0,
                    format!("gamma must be >= 0, got {}", p.gamma),
                );
            }
            TechniqueParams::Cs(p) => {
                req(unit(p.pa), format!("p_a must lie in [0, 1], got {}", p.pa));
                req(p.alpha > 0.0, format!("alpha must be > 0, got {}", p.alpha));
                req(
                    levy(p.beta),
                    format!("beta must lie in (0, 2), got {}", p.beta),
                );
            }
            TechniqueParams::Bh | TechniqueParams::Psfhs => {}
            TechniqueParams::Mbo(p) => {
                req(p.x >= 1, format!("x must be >= 1, got {}", p.x));
                req(
                    p.k > 2 * p.x,
                    format!("k must be >= 2x + 1, got k={} x={}", p.k, p.x),
                );
                req(
                    p.period >= 1,
                    format!("period must be >= 1, got {}", p.period),
                );
            }
            TechniqueParams::Abc(p) => {
                req(p.limit >= 1, format!("limit must be >= 1, got {}", p.limit));
            }
            TechniqueParams::Wca(p) => {
                req(
                    p.n_sr >= 1 && p.n_sr < m,
                    format!("n_sr must lie in [1, m), got {} with m={}", p.n_sr, m),
                );
                req(p.d_max > 0.0, format!("d_max must be > 0, got {}", p.d_max));
            }
            TechniqueParams::Hs(p) => {
                req(
                    unit(p.hmcr),
                    format!("HMCR must lie in [0, 1], got {}", p.hmcr),
                );
                req(
                    unit(p.par),
                    format!("PAR must lie in [0, 1], got {}", p.par),
                );
                req(
                    p.bandwidth > 0.0,
                    format!("bandwidth must be > 0, got {}", p.bandwidth),
                );
            }
            TechniqueParams::Ihs(p) => {
                req(
                    unit(p.hmcr),
                    format!("HMCR must lie in [0, 1], got {}", p.hmcr),
                );
                req(
                    unit(p.par_min),
                    format!("PAR_min must lie in [0, 1], got {}", p.par_min),
                );
                req(
                    unit(p.par_max),
                    format!("PAR_max must lie in [0, 1], got {}", p.par_max),
                );
                req(
                    p.par_min <= p.par_max,
                    format!(
                        "PAR_min must be <= PAR_max, got {} and {}",
                        p.par_min, p.par_max
                    ),
                );
                req(
                    p.bandwidth_min > 0.0,
                    format!("bandwidth_min must be > 0, got {}", p.bandwidth_min),
                );
                req(
                    p.bandwidth_min <= p.bandwidth_max,
                    format!(
                        "bandwidth_min must be <= bandwidth_max, got {} and {}",
                        p.bandwidth_min, p.bandwidth_max
                    ),
                );
            }
        }
    }
}
