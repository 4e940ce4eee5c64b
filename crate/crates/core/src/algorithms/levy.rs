//! Lévy-flight steps via Mantegna's algorithm.
//!
//! ```text
//! σ_u = [ Γ(1+β) sin(πβ/2) / ( Γ((1+β)/2) β 2^((β−1)/2) ) ]^(1/β)
//! u ~ N(0, σ_u²),  v ~ N(0, 1)
//! step = u / |v|^(1/β)
//! ```
//!
//! Steps have a power-law tail, `P(|step| > s) ∝ s^(−β)`.

use std::f64::consts::PI;

use super::normal;
use crate::search::Rng;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mantegna {
    beta: f64,
    sigma_u: f64,
}

impl Mantegna {
    /// `beta` must lie in (0, 2).
    pub fn new(beta: f64) -> Self {
        let num = libm::tgamma(1.0 + beta) * (PI * beta / 2.0).sin();
        let den = libm::tgamma((1.0 + beta) / 2.0) * beta * 2f64.powf((beta - 1.0) / 2.0);
        Mantegna {
            beta,
            sigma_u: (num / den).powf(1.0 / beta),
        }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma_u(&self) -> f64 {
        self.sigma_u
    }

    pub fn sample(&self, rng: &mut Rng) -> f64 {
        let u = normal(rng) * self.sigma_u;
        let v = normal(rng);
        u / v.abs().powf(1.0 / self.beta)
    }
}
