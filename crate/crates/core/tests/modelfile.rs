mod common;

use natopt::algorithms::Technique;
use natopt::modelfile::{parse_model_file, schema_for, write_model_file, FieldKind, ModelFile};
use natopt::search::SearchSpace;
use proptest::prelude::*;

use common::strategies::{apply_noise, model_file, noise};
use common::{models_dir, read_model};

#[test]
fn golden_files_parse_and_validate() {
    for t in Technique::ALL {
        let mf = read_model(t);
        assert_eq!(mf.technique, t);
        assert_eq!(mf.bounds, vec![(-5.12, 5.12); 2], "{t}");
        let space = SearchSpace::from_model(&mf).unwrap();
        let v = space.check();
        assert!(v.is_valid(), "{t}: {v}");
        assert_eq!(
            mf.params,
            t.default_params(),
            "{t} golden file drifted from defaults"
        );
    }
}

#[test]
fn golden_file_for_every_technique() {
    let mut names: Vec<String> = std::fs::read_dir(models_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    for t in Technique::ALL {
        assert!(names.contains(&format!("{t}.txt")), "missing {t}.txt");
    }
}

#[test]
fn schema_field_counts_match_written_records() {
    for t in Technique::ALL {
        let mf = ModelFile::new(t, 10, 3, 50, -1.0, 1.0);
        let text = write_model_file(&mf);
        let records: Vec<usize> = text
            .lines()
            .map(|l| l.split('#').next().unwrap().split_whitespace().count())
            .collect();
        let schema = schema_for(t);
        let mut expected = vec![schema.header.len()];
        expected.extend(schema.params.iter().map(|r| r.len()));
        expected.extend(std::iter::repeat_n(schema.bounds.len(), 3));
        assert_eq!(records, expected, "{t}");
    }
}

#[test]
fn integer_fields_reject_decimals() {
    for t in Technique::ALL {
        let schema = schema_for(t);
        for (r, record) in schema.params.iter().enumerate() {
            for (i, field) in record.iter().enumerate() {
                if field.kind != FieldKind::Integer {
                    continue;
                }
                let text = write_model_file(&ModelFile::new(t, 10, 2, 50, -1.0, 1.0));
                let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
                let mut tokens: Vec<String> = lines[r + 1]
                    .split_whitespace()
                    .map(str::to_string)
                    .collect();
                tokens[i] = format!("{}.5", tokens[i]);
                lines[r + 1] = tokens.join(" ");
                let e = parse_model_file(&lines.join("\n"), t).unwrap_err();
                assert_eq!(e.line, r + 2, "{t}: {e}");
                assert!(e.message.contains(field.name), "{t}: {e}");
            }
        }
    }
}

#[test]
fn five_variables_give_five_bounds_lines() {
    let mut mf = ModelFile::new(Technique::Hs, 10, 5, 1000, -2.0, 2.0);
    mf.bounds[4] = (0.0, 0.25);
    let text = write_model_file(&mf);
    assert_eq!(text.lines().filter(|l| l.contains("<LB> <UB>")).count(), 5);
    assert_eq!(parse_model_file(&text, Technique::Hs).unwrap(), mf);
}

#[test]
fn wrong_technique_schema_is_an_error() {
    let text = std::fs::read_to_string(models_dir().join("pso.txt")).unwrap();
    let e = parse_model_file(&text, Technique::Hs).unwrap_err();
    assert_eq!(e.line, 2);
    let e = parse_model_file(&text, Technique::Bh).unwrap_err();
    assert_eq!(e.line, 2);
}

#[test]
fn empty_input_is_an_error() {
    assert!(parse_model_file("", Technique::Pso).is_err());
    assert!(parse_model_file("# only a comment\n\n", Technique::Pso).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn write_then_parse_is_identity(mf in model_file()) {
        let text = write_model_file(&mf);
        prop_assert_eq!(parse_model_file(&text, mf.technique).unwrap(), mf);
    }

    #[test]
    fn comments_and_blank_lines_are_transparent(mf in model_file(), edits in noise(), crlf in any::<bool>()) {
        let noisy = apply_noise(&write_model_file(&mf), &edits, crlf);
        prop_assert_eq!(parse_model_file(&noisy, mf.technique).unwrap(), mf);
    }

    #[test]
    fn errors_point_at_a_real_line(text in "[0-9 .#\\-\n]{0,80}", i in 0usize..13) {
        let lines = text.lines().count().max(1);
        if let Err(e) = parse_model_file(&text, Technique::ALL[i]) {
            prop_assert!(e.line >= 1 && e.line <= lines + 1, "{} for {} lines", e, lines);
        }
    }
}
