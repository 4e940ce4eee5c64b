//! Agent and search-space data model, validation, bound handling and the
//! run driver shared by every technique.
//!
//! A run follows the read / initialize / check / optimize protocol:
//!
//! ```
//! use natopt::benchmarks::lookup;
//! use natopt::modelfile::parse_model_file;
//! use natopt::search::{optimize, SearchSpace};
//! use natopt::Technique;
//!
//! let text = "10 2 100\n1.7 1.7\n0.7 0.0 0.0\n-10 10\n-10 10\n";
//! let model = parse_model_file(text, Technique::Pso).unwrap();
//! let space = SearchSpace::from_model(&model).unwrap();
//! assert!(space.check().is_valid());
//! let result = optimize(space, lookup("my_function").unwrap(), 42).unwrap();
//! assert!(result.best_fitness < 1.1);
//! ```

mod agent;
mod run;
mod space;

pub use agent::{
    evaluate_agent, sanitize_fitness, Agent, BatState, BeeState, Extras, ParticleState, Tensor,
    WORST_FITNESS,
};
pub use run::{optimize, Run, RunResult};
pub use space::{SearchSpace, Validation};

pub(crate) use run::Counted;
pub(crate) use space::Domain;

/// The one generator used for every stochastic draw.
pub type Rng = rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    use rand::SeedableRng;
    Rng::seed_from_u64(seed)
}
