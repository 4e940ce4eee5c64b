//! Model-file schemas for every technique, and a write/parse round trip.
//!
//! cargo run --example model_files

use natopt::modelfile::{parse_model_file, schema_for, write_model_file, ModelFile};
use natopt::Technique;

fn main() {
    for t in Technique::ALL {
        println!("{:<7} {}", t.as_str(), schema_for(t));
    }

    let mut model = ModelFile::new(Technique::Ihs, 20, 3, 2000, -5.0, 5.0);
    model.bounds[2] = (0.0, 1.0);
    let text = write_model_file(&model);
    println!("\n{text}");

    let noisy = format!("# generated\n\n{}", text.replace('\n', "\r\n"));
    assert_eq!(parse_model_file(&noisy, Technique::Ihs).unwrap(), model);

    match parse_model_file("10 2 100\n1.7 oops\n", Technique::Pso) {
        Err(e) => println!("{e}"),
        Ok(_) => unreachable!(),
    }
}
