//! A techniques × functions × seeds sweep through the library side of the
//! command-line harness, summarized in memory.
//!
//! cargo run --release --example parallel_sweep

use std::path::PathBuf;

use natopt::benchmarks::lookup;
use natopt::cli::{execute, summary_text, Format, RunSpec};
use natopt::modelfile::ModelFile;
use natopt::Technique;

fn main() {
    let mut models = Vec::new();
    for t in [
        Technique::Pso,
        Technique::Abc,
        Technique::Cs,
        Technique::Ihs,
    ] {
        for name in ["sphere", "griewank", "styblinski_tang"] {
            let f = lookup(name).unwrap();
            let iterations = if t.is_harmony_family() { 2000 } else { 100 };
            let mut model = ModelFile::new(t, 20, 3, iterations, 0.0, 1.0);
            model.bounds = f.suggested_bounds(3);
            models.push((model, name));
        }
    }
    let spec = RunSpec {
        models,
        seeds: (1..=10).collect(),
        hypercomplex_k: None,
        out: PathBuf::from("unused"),
        format: Format::Csv,
        jobs: 0,
    };
    match execute(&spec) {
        Ok((results, rows)) => {
            println!("{} runs", results.len());
            print!("{}", summary_text(&rows, Format::Csv));
        }
        Err(e) => eprintln!("{}", e.message),
    }
}
