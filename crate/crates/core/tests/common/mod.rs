//! Shared helpers for the integration tests.
#![allow(dead_code)]

use std::f64::consts::{E, PI};

use natopt::search::{rng_from_seed, Rng};
use rand::Rng as _;

/// Textbook formula for each catalog function, written out independently
/// of the library with explicit 1-based indices.
pub fn oracle(name: &str, x: &[f64]) -> f64 {
    let d = x.len();
    let idx = |i: usize| (i + 1) as f64;
    match name {
        "sphere" => x.iter().map(|v| v.powf(2.0)).sum(),
        "rastrigin" => {
            let mut s = 10.0 * d as f64;
            for v in x {
                s += v * v - 10.0 * (2.0 * PI * v).cos();
            }
            s
        }
        "rosenbrock" => {
            let mut s = 0.0;
            for i in 0..d - 1 {
                s += 100.0 * (x[i + 1] - x[i] * x[i]).powf(2.0) + (1.0 - x[i]).powf(2.0);
            }
            s
        }
        "ackley" => {
            let n = d as f64;
            let sq: f64 = x.iter().map(|v| v * v).sum();
            let cs: f64 = x.iter().map(|v| (2.0 * PI * v).cos()).sum();
            20.0 + E - 20.0 * (-0.2 * (sq / n).sqrt()).exp() - (cs / n).exp()
        }
        "griewank" => {
            let mut sum = 0.0;
            let mut prod = 1.0;
            for (i, v) in x.iter().enumerate() {
                sum += v * v;
                prod *= (v / idx(i).sqrt()).cos();
            }
            sum / 4000.0 - prod + 1.0
        }
        "schwefel_226" => {
            let s: f64 = x.iter().map(|v| v * v.abs().sqrt().sin()).sum();
            -s / d as f64
        }
        "levy" => {
            let w: Vec<f64> = x.iter().map(|v| 1.0 + (v - 1.0) / 4.0).collect();
            let mut s = (PI * w[0]).sin().powi(2);
            for wi in &w[..d - 1] {
                s += (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2));
            }
            let wd = w[d - 1];
            s + (wd - 1.0).powi(2) * (1.0 + (2.0 * PI * wd).sin().powi(2))
        }
        "zakharov" => {
            let a: f64 = x.iter().map(|v| v * v).sum();
            let b: f64 = x.iter().enumerate().map(|(i, v)| 0.5 * idx(i) * v).sum();
            a + b.powi(2) + b.powi(4)
        }
        "styblinski_tang" => x
            .iter()
            .map(|v| (v.powi(4) - 16.0 * v * v + 5.0 * v) / 2.0)
            .sum(),
        "sum_squares" => x.iter().enumerate().map(|(i, v)| idx(i) * v * v).sum(),
        "dixon_price" => {
            let mut s = (x[0] - 1.0).powi(2);
            for i in 1..d {
                s += idx(i) * (2.0 * x[i] * x[i] - x[i - 1]).powi(2);
            }
            s
        }
        "michalewicz" => -x
            .iter()
            .enumerate()
            .map(|(i, v)| v.sin() * (idx(i) * v * v / PI).sin().powi(20))
            .sum::<f64>(),
        "booth" => (x[0] + 2.0 * x[1] - 7.0).powi(2) + (2.0 * x[0] + x[1] - 5.0).powi(2),
        "beale" => {
            let (a, b) = (x[0], x[1]);
            (1.5 - a + a * b).powi(2)
                + (2.25 - a + a * b * b).powi(2)
                + (2.625 - a + a * b.powi(3)).powi(2)
        }
        "matyas" => 0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1],
        "himmelblau" => (x[0] * x[0] + x[1] - 11.0).powi(2) + (x[0] + x[1] * x[1] - 7.0).powi(2),
        "easom" => -x[0].cos() * x[1].cos() * (-((x[0] - PI).powi(2) + (x[1] - PI).powi(2))).exp(),
        "branin" => {
            let (a, b, c) = (1.0, 5.1 / (4.0 * PI * PI), 5.0 / PI);
            let (r, s, t) = (6.0, 10.0, 1.0 / (8.0 * PI));
            a * (x[1] - b * x[0] * x[0] + c * x[0] - r).powi(2) + s * (1.0 - t) * x[0].cos() + s
        }
        "goldstein_price" => {
            let (a, b) = (x[0], x[1]);
            let p = 1.0
                + (a + b + 1.0).powi(2)
                    * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
            let q = 30.0
                + (2.0 * a - 3.0 * b).powi(2)
                    * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
            p * q
        }
        "six_hump_camel" => {
            let (a, b) = (x[0], x[1]);
            (4.0 - 2.1 * a * a + a.powi(4) / 3.0) * a * a + a * b + (-4.0 + 4.0 * b * b) * b * b
        }
        "my_function" => x[0] * x[0] + x[1] * x[1] + 1.0,
        other => panic!("no oracle for {other}"),
    }
}

/// Best of `budget` uniform draws from the box, minimizing `f`.
pub fn random_search(
    f: impl Fn(&[f64]) -> f64,
    bounds: &[(f64, f64)],
    budget: u64,
    seed: u64,
) -> f64 {
    let mut rng: Rng = rng_from_seed(seed ^ 0x5EED_F0AC_1E00);
    let mut best = f64::INFINITY;
    let mut x = vec![0.0; bounds.len()];
    for _ in 0..budget {
        for (v, (lo, hi)) in x.iter_mut().zip(bounds) {
            *v = rng.random_range(*lo..*hi);
        }
        best = best.min(f(&x));
    }
    best
}

pub fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

pub fn models_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("models")
}

pub fn read_model(technique: natopt::Technique) -> natopt::modelfile::ModelFile {
    let path = models_dir().join(format!("{technique}.txt"));
    let text = std::fs::read_to_string(&path).unwrap();
    natopt::modelfile::parse_model_file(&text, technique).unwrap()
}

pub mod strategies {
    use natopt::algorithms::*;
    use natopt::modelfile::ModelFile;
    use proptest::prelude::*;

    fn real() -> impl Strategy<Value = f64> {
        prop_oneof![
            -10.0f64..10.0,
            any::<f64>().prop_filter("finite", |v| v.is_finite()),
            Just(0.0),
            Just(-0.0),
        ]
    }

    fn params(t: Technique) -> impl Strategy<Value = TechniqueParams> {
        (
            proptest::collection::vec(real(), 6),
            proptest::collection::vec(0usize..1_000_000, 3),
            any::<u32>(),
        )
            .prop_map(move |(r, i, limit)| {
                let pso = PsoParams {
                    c1: r[0],
                    c2: r[1],
                    w: r[2],
                    w_min: r[3],
                    w_max: r[4],
                };
                match t {
                    Technique::Pso => TechniqueParams::Pso(pso),
                    Technique::Aiwpso => TechniqueParams::Aiwpso(pso),
                    Technique::Ba => TechniqueParams::Ba(BaParams {
                        f_min: r[0],
                        f_max: r[1],
                        loudness: r[2],
                        pulse_rate: r[3],
                        alpha: r[4],
                        gamma: r[5],
                    }),
                    Technique::Fpa => TechniqueParams::Fpa(FpaParams {
                        p: r[0],
                        beta: r[1],
                    }),
                    Technique::Fa => TechniqueParams::Fa(FaParams {
                        alpha: r[0],
                        beta0: r[1],
                        gamma: r[2],
                    }),
                    Technique::Cs => TechniqueParams::Cs(CsParams {
                        pa: r[0],
                        alpha: r[1],
                        beta: r[2],
                    }),
                    Technique::Bh => TechniqueParams::Bh,
                    Technique::Mbo => TechniqueParams::Mbo(MboParams {
                        k: i[0],
                        x: i[1],
                        period: i[2],
                    }),
                    Technique::Abc => TechniqueParams::Abc(AbcParams { limit }),
                    Technique::Wca => TechniqueParams::Wca(WcaParams {
                        n_sr: i[0],
                        d_max: r[0],
                    }),
                    Technique::Hs => TechniqueParams::Hs(HsParams {
                        hmcr: r[0],
                        par: r[1],
                        bandwidth: r[2],
                    }),
                    Technique::Ihs => TechniqueParams::Ihs(IhsParams {
                        hmcr: r[0],
                        par_min: r[1],
                        par_max: r[2],
                        bandwidth_min: r[3],
                        bandwidth_max: r[4],
                    }),
                    Technique::Psfhs => TechniqueParams::Psfhs,
                }
            })
    }

    fn bound() -> impl Strategy<Value = (f64, f64)> {
        (real(), real())
            .prop_filter("distinct", |(a, b)| a != b)
            .prop_map(|(a, b)| if a < b { (a, b) } else { (b, a) })
    }

    /// Any model file the parser accepts.
    pub fn model_file() -> impl Strategy<Value = ModelFile> {
        (
            proptest::sample::select(Technique::ALL.to_vec()),
            1usize..200,
            1usize..12,
            1usize..100_000,
        )
            .prop_flat_map(|(t, m, n, iterations)| {
                (params(t), proptest::collection::vec(bound(), n)).prop_map(
                    move |(params, bounds)| ModelFile {
                        technique: t,
                        m,
                        n,
                        iterations,
                        params,
                        bounds,
                    },
                )
            })
    }

    /// Edits that must not change a parse: whole-line comments, blank lines,
    /// trailing comments and extra whitespace, at line positions.
    #[derive(Debug, Clone)]
    pub enum Noise {
        CommentLine(String),
        BlankLine(String),
        Trailing(String),
        Indent(String),
    }

    pub fn noise() -> impl Strategy<Value = Vec<(usize, Noise)>> {
        let comment = "[ a-zA-Z0-9<>#.,:_-]{0,20}";
        let space = "[ \t]{0,4}";
        proptest::collection::vec(
            (
                0usize..64,
                prop_oneof![
                    (space, comment).prop_map(|(s, c)| Noise::CommentLine(format!("{s}#{c}"))),
                    space.prop_map(Noise::BlankLine),
                    comment.prop_map(|c| Noise::Trailing(format!(" #{c}"))),
                    "[ \t]{1,4}".prop_map(Noise::Indent),
                ],
            ),
            0..12,
        )
    }

    /// Applies `noise` to `text`, switching to CRLF endings when `crlf`.
    pub fn apply_noise(text: &str, noise: &[(usize, Noise)], crlf: bool) -> String {
        let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
        for (pos, n) in noise {
            let i = pos % (lines.len() + 1);
            match n {
                Noise::CommentLine(c) => lines.insert(i, c.clone()),
                Noise::BlankLine(b) => lines.insert(i, b.clone()),
                Noise::Trailing(c) if i < lines.len() => lines[i].push_str(c),
                Noise::Indent(s) if i < lines.len() => lines[i].insert_str(0, s),
                _ => {}
            }
        }
        let sep = if crlf { "\r\n" } else { "\n" };
        lines.join(sep) + sep
    }
}
