//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails or runs over its time limit.

mod common;

use std::process::ExitCode;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use natopt::algorithms::{Technique, TechniqueParams};
use natopt::benchmarks::{catalog, lookup, Arity, FnObjective, Objective};
use natopt::hypercomplex::{check_roster, lift, span_to_real};
use natopt::modelfile::{parse_model_file, write_model_file};
use natopt::search::{optimize, rng_from_seed, Run, RunResult, SearchSpace};
use natopt::Error;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::Rng as _;

use common::strategies::{apply_noise, model_file, noise};
use common::{median, models_dir, oracle, random_search, read_model};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn model_file_fidelity() -> Outcome {
    let read = |name: &str| std::fs::read_to_string(models_dir().join(name)).unwrap();
    let listing = parse_model_file(&read("pso.txt"), Technique::Pso).map_err(|e| e.to_string())?;
    let expected = TechniqueParams::Pso(natopt::algorithms::PsoParams {
        c1: 1.7,
        c2: 1.7,
        w: 0.7,
        w_min: 0.0,
        w_max: 0.0,
    });
    let bits = |v: &[(f64, f64)]| {
        v.iter()
            .map(|(a, b)| (a.to_bits(), b.to_bits()))
            .collect::<Vec<_>>()
    };
    ensure(
        (listing.m, listing.n, listing.iterations) == (10, 2, 100),
        || format!("header {:?}", (listing.m, listing.n, listing.iterations)),
    )?;
    ensure(listing.params == expected, || {
        format!("params {:?}", listing.params)
    })?;
    if let TechniqueParams::Pso(p) = listing.params {
        ensure(
            [p.c1, p.c2, p.w, p.w_min, p.w_max].map(f64::to_bits)
                == [1.7f64, 1.7, 0.7, 0.0, 0.0].map(f64::to_bits),
            || "params not bit-exact".into(),
        )?;
    }
    ensure(bits(&listing.bounds) == bits(&[(-5.12, 5.12); 2]), || {
        format!("bounds {:?}", listing.bounds)
    })?;

    let variant =
        parse_model_file(&read("pso_model.txt"), Technique::Pso).map_err(|e| e.to_string())?;
    ensure(bits(&variant.bounds) == bits(&[(-10.0, 10.0); 2]), || {
        format!("variant bounds {:?}", variant.bounds)
    })?;
    ensure(
        variant.params == listing.params
            && (variant.m, variant.n, variant.iterations)
                == (listing.m, listing.n, listing.iterations),
        || "variant differs outside bounds".into(),
    )?;
    Ok("listing and ±10 variant parsed bit-exactly".into())
}

fn reproduction_of_my_function() -> Outcome {
    let text = std::fs::read_to_string(models_dir().join("pso_model.txt")).unwrap();
    let model = parse_model_file(&text, Technique::Pso).unwrap();
    let f = lookup("my_function").unwrap();
    let mut runs: Vec<RunResult> = (1..=25)
        .map(|seed| optimize(SearchSpace::from_model(&model).unwrap(), f, seed).unwrap())
        .collect();
    runs.sort_by(|a, b| a.best_fitness.total_cmp(&b.best_fitness));
    let mid = &runs[12];
    let norm = mid.best_position.iter().map(|v| v * v).sum::<f64>().sqrt();
    ensure(
        (mid.best_fitness - 1.0).abs() <= 1e-2 && norm <= 1e-1,
        || format!("median fitness {} at distance {norm}", mid.best_fitness),
    )?;
    Ok(format!(
        "median fitness {:.6} at distance {norm:.2e} from the origin",
        mid.best_fitness
    ))
}

fn invariant_suite() -> Outcome {
    let (m, n, iterations) = (12, 4, 40);
    let mut checked = 0;
    for t in Technique::ALL {
        for name in ["sphere", "rastrigin", "rosenbrock"] {
            let bench = lookup(name).unwrap();
            let bounds = bench.suggested_bounds(n);
            let calls = AtomicU64::new(0);
            let counting = FnObjective::new(name, Arity::Any, |x: &[f64]| {
                calls.fetch_add(1, Ordering::Relaxed);
                bench.evaluate(x)
            });
            for seed in 0..5 {
                let mut space = SearchSpace::new(m, n, t).unwrap();
                space.set_iterations(iterations);
                space
                    .set_bounds(
                        bounds.iter().map(|b| b.0).collect(),
                        bounds.iter().map(|b| b.1).collect(),
                    )
                    .unwrap();
                let tag = format!("{t}/{name}/seed {seed}");

                calls.store(0, Ordering::Relaxed);
                let mut run = Run::new(space.clone(), &counting, seed).unwrap();
                let in_box = |run: &Run| {
                    run.space().agents().iter().all(|a| {
                        a.x.iter()
                            .zip(&bounds)
                            .all(|(v, (lo, hi))| lo <= v && v <= hi)
                    })
                };
                ensure(in_box(&run), || {
                    format!("{tag}: initial population out of bounds")
                })?;
                while !run.is_finished() {
                    run.step();
                    ensure(in_box(&run), || {
                        format!(
                            "{tag}: out of bounds at iteration {}",
                            run.space().iteration()
                        )
                    })?;
                }
                let r = run.finish();
                ensure(r.trace.windows(2).all(|w| w[1] <= w[0]), || {
                    format!("{tag}: trace increases")
                })?;
                ensure(r.trace.len() == iterations, || {
                    format!("{tag}: trace length {}", r.trace.len())
                })?;

                let per = t.evaluations_per_iteration(m, space.params());
                let expected = m as u64 + iterations as u64 * per + r.restarts;
                let counted = calls.load(Ordering::Relaxed);
                ensure(r.evaluations == expected && counted == expected, || {
                    format!(
                        "{tag}: evaluations {} counted {counted} expected {expected}",
                        r.evaluations
                    )
                })?;

                let mut again = optimize(space, &counting, seed).unwrap();
                again.elapsed = r.elapsed;
                let same = again.best_fitness.to_bits() == r.best_fitness.to_bits()
                    && again
                        .trace
                        .iter()
                        .map(|v| v.to_bits())
                        .eq(r.trace.iter().map(|v| v.to_bits()))
                    && again == r;
                ensure(same, || format!("{tag}: rerun differs"))?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} runs: monotone, in bounds, deterministic, evaluations accounted"
    ))
}

fn oracle_dominance() -> Outcome {
    let sphere = lookup("sphere").unwrap();
    let mut configs: Vec<(Technique, Option<usize>)> =
        Technique::ALL.iter().map(|&t| (t, None)).collect();
    configs.extend(Technique::HYPERCOMPLEX.iter().map(|&t| (t, Some(4))));
    let mut worst_ratio: f64 = 0.0;
    for (t, k) in configs {
        let model = read_model(t);
        let mut ours = Vec::new();
        let mut random = Vec::new();
        for seed in 1..=25 {
            let space = SearchSpace::from_model(&model).unwrap();
            let r = match k {
                Some(k) => lift(space, sphere, k, seed).unwrap(),
                None => optimize(space, sphere, seed).unwrap(),
            };
            random.push(random_search(
                |x| sphere.evaluate(x),
                &model.bounds,
                r.evaluations,
                seed,
            ));
            ours.push(r.best_fitness);
        }
        let (a, b) = (median(ours), median(random));
        let label = k.map_or_else(|| t.to_string(), |k| format!("{t} k={k}"));
        ensure(a < b, || format!("{label}: median {a:e} vs random {b:e}"))?;
        worst_ratio = worst_ratio.max(a / b);
    }
    Ok(format!(
        "24 configurations beat random search; worst median ratio {worst_ratio:.2e}"
    ))
}

fn hypercomplex_span() -> Outcome {
    let boxes = [
        (-5.12, 5.12),
        (-10.0, 10.0),
        (0.0, 1.0),
        (-600.0, 600.0),
        (1e-3, 2e-3),
        (-7.0, -3.5),
    ];
    for k in 1..=16 {
        for &(lo, hi) in &boxes {
            ensure(span_to_real(&vec![0.0; k], lo, hi) == lo, || {
                format!("k={k}: zero row ≠ {lo}")
            })?;
            ensure(span_to_real(&vec![1.0; k], lo, hi) == hi, || {
                format!("k={k}: one row ≠ {hi}")
            })?;
        }
    }
    let mut rng = rng_from_seed(2024);
    for i in 0..10_000 {
        let k = rng.random_range(1..=8);
        let row: Vec<f64> = (0..k).map(|_| rng.random_range(1e-9..1.0 - 1e-9)).collect();
        let (lo, hi) = boxes[i % boxes.len()];
        let x = span_to_real(&row, lo, hi);
        ensure(lo < x && x < hi, || {
            format!("{row:?} spans to {x} outside ({lo}, {hi})")
        })?;
    }
    let accepted: Vec<Technique> = Technique::ALL
        .into_iter()
        .filter(|&t| check_roster(t).is_ok())
        .collect();
    ensure(
        accepted == Technique::HYPERCOMPLEX.to_vec() && accepted.len() == 11,
        || format!("accepted {accepted:?}"),
    )?;
    for t in [Technique::Mbo, Technique::Wca] {
        let mut s = SearchSpace::new(11, 2, t).unwrap();
        s.set_uniform_bounds(-1.0, 1.0).set_iterations(1);
        let e = lift(s, lookup("sphere").unwrap(), 4, 0);
        ensure(matches!(e, Err(Error::UnsupportedLift { .. })), || {
            format!("{t} lifted")
        })?;
    }
    Ok("exact endpoints, 10⁴ interior rows, roster of 11".into())
}

fn benchmark_correctness() -> Outcome {
    let mut rng = rng_from_seed(7);
    let mut optima = 0;
    for b in catalog() {
        let dims: Vec<usize> = match b.arity() {
            Arity::Fixed(d) => vec![d],
            Arity::Any => vec![1, 2, 3, 5, 10],
        };
        for &n in &dims {
            if let Some((x, f)) = b.known_optimum(n) {
                let got = b.evaluate(&x);
                ensure((got - f).abs() <= 1e-12, || {
                    format!("{}: f(x*) = {got}, expected {f}", b.name())
                })?;
                let direct = oracle(b.name(), &x);
                ensure((direct - f).abs() <= 1e-9 * f.abs().max(1.0), || {
                    format!("{}: oracle f(x*) = {direct}, catalog optimum {f}", b.name())
                })?;
                optima += 1;
            }
        }
        for _ in 0..100 {
            let n = dims[rng.random_range(0..dims.len())].max(match b.arity() {
                Arity::Any => 2,
                Arity::Fixed(d) => d,
            });
            let x: Vec<f64> = b
                .suggested_bounds(n)
                .iter()
                .map(|&(lo, hi)| rng.random_range(lo..hi))
                .collect();
            let (got, want) = (b.evaluate(&x), oracle(b.name(), &x));
            ensure((got - want).abs() <= 1e-9 * want.abs().max(1.0), || {
                format!("{} at {x:?}: {got} vs oracle {want}", b.name())
            })?;
        }
    }
    Ok(format!(
        "{optima} optima within 1e-12; {} × 100 points match the oracle",
        catalog().len()
    ))
}

fn parser_round_trip() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        ..Config::default()
    });
    runner
        .run(&model_file(), |mf| {
            let text = write_model_file(&mf);
            let back = parse_model_file(&text, mf.technique)
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            if back != mf || write_model_file(&back) != text {
                return Err(TestCaseError::fail(format!("round trip changed\n{text}")));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        ..Config::default()
    });
    runner
        .run(
            &(model_file(), noise(), proptest::bool::ANY),
            |(mf, edits, crlf)| {
                let noisy = apply_noise(&write_model_file(&mf), &edits, crlf);
                match parse_model_file(&noisy, mf.technique) {
                    Ok(back) if back == mf => Ok(()),
                    other => Err(TestCaseError::fail(format!("{other:?}\n{noisy}"))),
                }
            },
        )
        .map_err(|e| e.to_string())?;
    Ok("1000 round trips and 1000 comment/blank-line insertions".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("model-file fidelity", 1, model_file_fidelity),
        ("my_function reproduction", 5, reproduction_of_my_function),
        ("invariant suite", 60, invariant_suite),
        ("oracle dominance", 120, oracle_dominance),
        ("hypercomplex span", 1, hypercomplex_span),
        ("benchmark correctness", 1, benchmark_correctness),
        ("parser round-trip", 30, parser_round_trip),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let (status, detail) = match outcome {
            Ok(d) if took <= Duration::from_secs(limit) => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {limit} s limit")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "{status} {name:<26} {:>8.3} s  {detail}",
            took.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
