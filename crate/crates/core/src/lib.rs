//! Nature-inspired metaheuristic optimization.
//!
//! Thirteen population-based techniques share one search-space model, one
//! run driver and one plain-text model-file format. Eleven of them can also
//! search over hypercomplex (quaternion, octonion, ...) coefficient tensors.
//!
//! ```
//! use natopt::benchmarks::lookup;
//! use natopt::search::{optimize, SearchSpace};
//! use natopt::Technique;
//!
//! let mut space = SearchSpace::new(20, 2, Technique::Pso).unwrap();
//! space.set_uniform_bounds(-5.12, 5.12).set_iterations(200);
//! let result = optimize(space, lookup("sphere").unwrap(), 7).unwrap();
//! assert!(result.best_fitness < 1e-6);
//! ```

pub mod algorithms;
pub mod benchmarks;
pub mod cli;
pub mod error;
pub mod hypercomplex;
pub mod modelfile;
pub mod search;

pub use algorithms::{Technique, TechniqueParams};
pub use error::{Error, Result};
