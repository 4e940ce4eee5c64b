//! Objective-function contract and a catalog of classic benchmark functions.
//!
//! Every objective is minimized. Catalog entries carry their formula, arity,
//! suggested box bounds and, where one is known in closed form, the global
//! optimum.

use std::f64::consts::{E, PI};
use std::fmt;

use crate::error::{Error, Result};

/// Number of decision variables an objective accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arity {
    Fixed(usize),
    Any,
}

impl Arity {
    pub fn accepts(self, n: usize) -> bool {
        match self {
            Arity::Fixed(d) => n == d,
            Arity::Any => n >= 1,
        }
    }
}

impl fmt::Display for Arity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arity::Fixed(d) => write!(f, "{d}"),
            Arity::Any => f.write_str("any"),
        }
    }
}

/// A function to be minimized.
///
/// `evaluate` receives a plain position vector whose length the caller has
/// already checked against [`Objective::arity`]. It must be pure.
pub trait Objective: Sync {
    fn name(&self) -> &str;
    fn arity(&self) -> Arity;
    fn evaluate(&self, x: &[f64]) -> f64;

    /// Arity-checked evaluation.
    fn call(&self, x: &[f64]) -> Result<f64> {
        match self.arity() {
            Arity::Fixed(d) if x.len() != d => Err(Error::Arity {
                function: self.name().to_string(),
                expected: d,
                got: x.len(),
            }),
            Arity::Any if x.is_empty() => Err(Error::Arity {
                function: self.name().to_string(),
                expected: 1,
                got: 0,
            }),
            _ => Ok(self.evaluate(x)),
        }
    }
}

/// Wraps a closure as an [`Objective`].
pub struct FnObjective<F> {
    name: String,
    arity: Arity,
    f: F,
}

impl<F> FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    pub fn new(name: impl Into<String>, arity: Arity, f: F) -> Self {
        FnObjective {
            name: name.into(),
            arity,
            f,
        }
    }
}

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn arity(&self) -> Arity {
        self.arity
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }
}

#[derive(Debug, Clone, Copy)]
pub enum SuggestedBounds {
    /// Same interval for every variable.
    Uniform(f64, f64),
    /// One interval per variable (fixed-arity functions only).
    PerVariable(&'static [(f64, f64)]),
}

/// A catalog entry.
pub struct Benchmark {
    name: &'static str,
    formula: &'static str,
    arity: Arity,
    bounds: SuggestedBounds,
    eval: fn(&[f64]) -> f64,
    optimum: fn(usize) -> Option<(Vec<f64>, f64)>,
}

impl Benchmark {
    pub fn formula(&self) -> &'static str {
        self.formula
    }

    pub fn bounds(&self) -> SuggestedBounds {
        self.bounds
    }

    /// Per-variable bounds for an `n`-dimensional instance.
    pub fn suggested_bounds(&self, n: usize) -> Vec<(f64, f64)> {
        match self.bounds {
            SuggestedBounds::Uniform(lo, hi) => vec![(lo, hi); n],
            SuggestedBounds::PerVariable(b) => b.iter().copied().cycle().take(n).collect(),
        }
    }

    /// Global minimizer and minimum for an `n`-dimensional instance, when known.
    pub fn known_optimum(&self, n: usize) -> Option<(Vec<f64>, f64)> {
        if !self.arity.accepts(n) {
            return None;
        }
        (self.optimum)(n)
    }

    /// Dimension used when the caller does not pick one.
    pub fn default_dimension(&self) -> usize {
        match self.arity {
            Arity::Fixed(d) => d,
            Arity::Any => 2,
        }
    }
}

impl Objective for Benchmark {
    fn name(&self) -> &str {
        self.name
    }

    fn arity(&self) -> Arity {
        self.arity
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }
}

impl fmt::Debug for Benchmark {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Benchmark")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .finish_non_exhaustive()
    }
}

/// x0² + x1² + 1 over [-10, 10]², minimum 1 at the origin.
pub fn my_function(x: &[f64]) -> Result<f64> {
    lookup_exact("my_function").call(x)
}

// f(x) = Σ xᵢ²
fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

// f(x) = 10d + Σ [xᵢ² − 10 cos(2π xᵢ)]
fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64
        + x.iter()
            .map(|v| v * v - 10.0 * (2.0 * PI * v).cos())
            .sum::<f64>()
}

// f(x) = Σ_{i<d} [100 (xᵢ₊₁ − xᵢ²)² + (xᵢ − 1)²]
fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

// f(x) = −20 exp(−0.2 √(Σxᵢ²/d)) − exp(Σ cos(2π xᵢ)/d) + 20 + e
fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / d;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

// f(x) = 1 + Σ xᵢ²/4000 − Π cos(xᵢ/√i)
fn griewank(x: &[f64]) -> f64 {
    let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product::<f64>();
    1.0 + sum - prod
}

// f(x) = −(1/d) Σ xᵢ sin(√|xᵢ|)
fn schwefel_226(x: &[f64]) -> f64 {
    -x.iter().map(|v| v * v.abs().sqrt().sin()).sum::<f64>() / x.len() as f64
}

// wᵢ = 1 + (xᵢ − 1)/4
// f(x) = sin²(πw₁) + Σ_{i<d} (wᵢ − 1)² [1 + 10 sin²(πwᵢ + 1)] + (w_d − 1)² [1 + sin²(2πw_d)]
fn levy(x: &[f64]) -> f64 {
    let w: Vec<f64> = x.iter().map(|v| 1.0 + (v - 1.0) / 4.0).collect();
    let last = w[w.len() - 1];
    let head = (PI * w[0]).sin().powi(2);
    let mid: f64 = w[..w.len() - 1]
        .iter()
        .map(|wi| (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2)))
        .sum();
    let tail = (last - 1.0).powi(2) * (1.0 + (2.0 * PI * last).sin().powi(2));
    head + mid + tail
}

// s = Σ 0.5 i xᵢ;  f(x) = Σ xᵢ² + s² + s⁴
fn zakharov(x: &[f64]) -> f64 {
    let sq: f64 = x.iter().map(|v| v * v).sum();
    let s: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| 0.5 * (i + 1) as f64 * v)
        .sum();
    sq + s.powi(2) + s.powi(4)
}

// f(x) = ½ Σ (xᵢ⁴ − 16xᵢ² + 5xᵢ)
fn styblinski_tang(x: &[f64]) -> f64 {
    0.5 * x
        .iter()
        .map(|v| v.powi(4) - 16.0 * v * v + 5.0 * v)
        .sum::<f64>()
}

// f(x) = Σ i xᵢ²
fn sum_squares(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v * v)
        .sum()
}

// f(x) = (x₁ − 1)² + Σ_{i≥2} i (2xᵢ² − xᵢ₋₁)²
fn dixon_price(x: &[f64]) -> f64 {
    (x[0] - 1.0).powi(2)
        + x.windows(2)
            .enumerate()
            .map(|(i, w)| (i + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2))
            .sum::<f64>()
}

// f(x) = −Σ sin(xᵢ) sin²⁰(i xᵢ² / π)
fn michalewicz(x: &[f64]) -> f64 {
    -x.iter()
        .enumerate()
        .map(|(i, v)| v.sin() * ((i + 1) as f64 * v * v / PI).sin().powi(20))
        .sum::<f64>()
}

// f(x, y) = (x + 2y − 7)² + (2x + y − 5)²
fn booth(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (a + 2.0 * b - 7.0).powi(2) + (2.0 * a + b - 5.0).powi(2)
}

// f(x, y) = (1.5 − x + xy)² + (2.25 − x + xy²)² + (2.625 − x + xy³)²
fn beale(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (1.5 - a + a * b).powi(2) + (2.25 - a + a * b * b).powi(2) + (2.625 - a + a * b.powi(3)).powi(2)
}

// f(x, y) = 0.26 (x² + y²) − 0.48 xy
fn matyas(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    0.26 * (a * a + b * b) - 0.48 * a * b
}

// f(x, y) = (x² + y − 11)² + (x + y² − 7)²
fn himmelblau(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (a * a + b - 11.0).powi(2) + (a + b * b - 7.0).powi(2)
}

// f(x, y) = −cos x cos y exp(−((x − π)² + (y − π)²))
fn easom(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -a.cos() * b.cos() * (-((a - PI).powi(2) + (b - PI).powi(2))).exp()
}

// f(x, y) = (y − 5.1x²/(4π²) + 5x/π − 6)² + 10 (1 − 1/(8π)) cos x + 10
fn branin(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let quad = b - 5.1 / (4.0 * PI * PI) * a * a + 5.0 / PI * a - 6.0;
    quad * quad + 10.0 * (1.0 - 1.0 / (8.0 * PI)) * a.cos() + 10.0
}

// f(x, y) = [1 + (x + y + 1)² (19 − 14x + 3x² − 14y + 6xy + 3y²)]
//         × [30 + (2x − 3y)² (18 − 32x + 12x² + 48y − 36xy + 27y²)]
fn goldstein_price(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    let left = 1.0
        + (a + b + 1.0).powi(2)
            * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
    let right = 30.0
        + (2.0 * a - 3.0 * b).powi(2)
            * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
    left * right
}

// f(x, y) = (4 − 2.1x² + x⁴/3) x² + xy + (−4 + 4y²) y²
fn six_hump_camel(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    (4.0 - 2.1 * a * a + a.powi(4) / 3.0) * a * a + a * b + (-4.0 + 4.0 * b * b) * b * b
}

// f(x, y) = x² + y² + 1
fn my_function_eval(x: &[f64]) -> f64 {
    x[0] * x[0] + x[1] * x[1] + 1.0
}

const SCHWEFEL_X: f64 = 420.968_746_359_982_05;
const SCHWEFEL_F: f64 = -418.982_887_272_433_7;
const STYBLINSKI_X: f64 = -2.903_534_027_771_177;
const STYBLINSKI_F: f64 = -39.166_165_703_771_41;

macro_rules! uniform_opt {
    ($x:expr, $f:expr) => {
        |n| Some((vec![$x; n], $f))
    };
}

static CATALOG: [Benchmark; 21] = [
    Benchmark {
        name: "sphere",
        formula: "sum x_i^2",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-5.12, 5.12),
        eval: sphere,
        optimum: uniform_opt!(0.0, 0.0),
    },
    Benchmark {
        name: "rastrigin",
        formula: "10d + sum [x_i^2 - 10 cos(2 pi x_i)]",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-5.12, 5.12),
        eval: rastrigin,
        optimum: uniform_opt!(0.0, 0.0),
    },
    Benchmark {
        name: "rosenbrock",
        formula: "sum_{i<d} [100 (x_{i+1} - x_i^2)^2 + (x_i - 1)^2]",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-2.048, 2.048),
        eval: rosenbrock,
        optimum: uniform_opt!(1.0, 0.0),
    },
    Benchmark {
        name: "ackley",
        formula: "-20 exp(-0.2 sqrt(sum x_i^2 / d)) - exp(sum cos(2 pi x_i) / d) + 20 + e",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-32.768, 32.768),
        eval: ackley,
        optimum: uniform_opt!(0.0, 0.0),
    },
    Benchmark {
        name: "griewank",
        formula: "1 + sum x_i^2 / 4000 - prod cos(x_i / sqrt(i))",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-600.0, 600.0),
        eval: griewank,
        optimum: uniform_opt!(0.0, 0.0),
    },
    Benchmark {
        name: "schwefel_226",
        formula: "-(1/d) sum x_i sin(sqrt(|x_i|))",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-500.0, 500.0),
        eval: schwefel_226,
        optimum: uniform_opt!(SCHWEFEL_X, SCHWEFEL_F),
    },
    Benchmark {
        name: "levy",
        formula: "sin^2(pi w_1) + sum_{i<d} (w_i - 1)^2 [1 + 10 sin^2(pi w_i + 1)] + (w_d - 1)^2 [1 + sin^2(2 pi w_d)], w_i = 1 + (x_i - 1)/4",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-10.0, 10.0),
        eval: levy,
        optimum: uniform_opt!(1.0, 0.0),
    },
    Benchmark {
        name: "zakharov",
        formula: "sum x_i^2 + (sum 0.5 i x_i)^2 + (sum 0.5 i x_i)^4",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-5.0, 10.0),
        eval: zakharov,
        optimum: uniform_opt!(0.0, 0.0),
    },
    Benchmark {
        name: "styblinski_tang",
        formula: "0.5 sum (x_i^4 - 16 x_i^2 + 5 x_i)",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-5.0, 5.0),
        eval: styblinski_tang,
        optimum: |n| Some((vec![STYBLINSKI_X; n], STYBLINSKI_F * n as f64)),
    },
    Benchmark {
        name: "sum_squares",
        formula: "sum i x_i^2",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-10.0, 10.0),
        eval: sum_squares,
        optimum: uniform_opt!(0.0, 0.0),
    },
    Benchmark {
        name: "dixon_price",
        formula: "(x_1 - 1)^2 + sum_{i>=2} i (2 x_i^2 - x_{i-1})^2",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(-10.0, 10.0),
        eval: dixon_price,
        optimum: |n| {
            let x = (1..=n)
                .map(|i| {
                    let p = 2f64.powi(i as i32);
                    2f64.powf(-(p - 2.0) / p)
                })
                .collect();
            Some((x, 0.0))
        },
    },
    Benchmark {
        name: "michalewicz",
        formula: "-sum sin(x_i) sin^20(i x_i^2 / pi)",
        arity: Arity::Any,
        bounds: SuggestedBounds::Uniform(0.0, PI),
        eval: michalewicz,
        optimum: |n| {
            (n == 2).then(|| (vec![2.202_905_520_172_609_3, PI / 2.0], -1.801_303_410_098_552_5))
        },
    },
    Benchmark {
        name: "booth",
        formula: "(x + 2y - 7)^2 + (2x + y - 5)^2",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::Uniform(-10.0, 10.0),
        eval: booth,
        optimum: |_| Some((vec![1.0, 3.0], 0.0)),
    },
    Benchmark {
        name: "beale",
        formula: "(1.5 - x + xy)^2 + (2.25 - x + xy^2)^2 + (2.625 - x + xy^3)^2",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::Uniform(-4.5, 4.5),
        eval: beale,
        optimum: |_| Some((vec![3.0, 0.5], 0.0)),
    },
    Benchmark {
        name: "matyas",
        formula: "0.26 (x^2 + y^2) - 0.48 xy",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::Uniform(-10.0, 10.0),
        eval: matyas,
        optimum: |_| Some((vec![0.0, 0.0], 0.0)),
    },
    Benchmark {
        name: "himmelblau",
        formula: "(x^2 + y - 11)^2 + (x + y^2 - 7)^2",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::Uniform(-5.0, 5.0),
        eval: himmelblau,
        optimum: |_| Some((vec![3.0, 2.0], 0.0)),
    },
    Benchmark {
        name: "easom",
        formula: "-cos(x) cos(y) exp(-((x - pi)^2 + (y - pi)^2))",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::Uniform(-100.0, 100.0),
        eval: easom,
        optimum: |_| Some((vec![PI, PI], -1.0)),
    },
    Benchmark {
        name: "branin",
        formula: "(y - 5.1 x^2 / (4 pi^2) + 5 x / pi - 6)^2 + 10 (1 - 1/(8 pi)) cos(x) + 10",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::PerVariable(&[(-5.0, 10.0), (0.0, 15.0)]),
        eval: branin,
        optimum: |_| Some((vec![PI, 2.275], 10.0 / (8.0 * PI))),
    },
    Benchmark {
        name: "goldstein_price",
        formula: "[1 + (x + y + 1)^2 (19 - 14x + 3x^2 - 14y + 6xy + 3y^2)] [30 + (2x - 3y)^2 (18 - 32x + 12x^2 + 48y - 36xy + 27y^2)]",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::Uniform(-2.0, 2.0),
        eval: goldstein_price,
        optimum: |_| Some((vec![0.0, -1.0], 3.0)),
    },
    Benchmark {
        name: "six_hump_camel",
        formula: "(4 - 2.1 x^2 + x^4 / 3) x^2 + xy + (-4 + 4 y^2) y^2",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::PerVariable(&[(-3.0, 3.0), (-2.0, 2.0)]),
        eval: six_hump_camel,
        optimum: |_| {
            Some((
                vec![0.089_842_013_100_318_06, -0.712_656_403_020_739_6],
                -1.031_628_453_489_877_3,
            ))
        },
    },
    Benchmark {
        name: "my_function",
        formula: "x^2 + y^2 + 1",
        arity: Arity::Fixed(2),
        bounds: SuggestedBounds::Uniform(-10.0, 10.0),
        eval: my_function_eval,
        optimum: |_| Some((vec![0.0, 0.0], 1.0)),
    },
];

/// All registered benchmark functions.
pub fn catalog() -> &'static [Benchmark] {
    &CATALOG
}

fn lookup_exact(name: &str) -> &'static Benchmark {
    CATALOG.iter().find(|b| b.name == name).expect("registered")
}

/// Case-insensitive lookup. Unknown names produce an error listing near matches.
pub fn lookup(name: &str) -> Result<&'static Benchmark> {
    let wanted = name.trim().to_ascii_lowercase().replace('-', "_");
    if let Some(b) = CATALOG.iter().find(|b| b.name == wanted) {
        return Ok(b);
    }
    let mut near: Vec<(usize, &str)> = CATALOG
        .iter()
        .map(|b| (strsim::damerau_levenshtein(&wanted, b.name), b.name))
        .filter(|&(d, candidate)| d <= 2.max(candidate.len() / 4))
        .collect();
    near.sort();
    Err(Error::UnknownFunction {
        name: name.to_string(),
        suggestions: near.into_iter().map(|(_, n)| n.to_string()).collect(),
    })
}
