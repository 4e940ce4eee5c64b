mod common;

use natopt::benchmarks::{catalog, lookup, my_function, Arity, Objective};
use natopt::Error;
use proptest::prelude::*;

use common::oracle;

#[test]
fn near_miss_names_get_suggestions() {
    match lookup("speher") {
        Err(Error::UnknownFunction { suggestions, .. }) => {
            assert!(suggestions.contains(&"sphere".to_string()))
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(lookup("Six-Hump_Camel").unwrap().name(), "six_hump_camel");
}

#[test]
fn arity_is_enforced() {
    assert!(matches!(
        lookup("booth").unwrap().call(&[1.0, 2.0, 3.0]),
        Err(Error::Arity {
            expected: 2,
            got: 3,
            ..
        })
    ));
    assert!(lookup("sphere").unwrap().call(&[]).is_err());
}

#[test]
fn my_function_is_one_plus_squared_norm() {
    assert_eq!(my_function(&[0.0, 0.0]).unwrap(), 1.0);
    assert_eq!(my_function(&[3.0, -4.0]).unwrap(), 26.0);
    assert!(my_function(&[1.0]).is_err());
}

#[test]
fn catalog_names_are_unique() {
    let mut names: Vec<&str> = catalog().iter().map(|b| b.name()).collect();
    names.sort();
    names.dedup();
    assert_eq!(names.len(), catalog().len());
}

#[test]
fn optima_lie_inside_suggested_bounds() {
    for b in catalog() {
        let n = b.default_dimension();
        if let Some((x, _)) = b.known_optimum(n) {
            for (v, (lo, hi)) in x.iter().zip(b.suggested_bounds(n)) {
                assert!(
                    lo <= *v && *v <= hi,
                    "{}: {v} outside [{lo}, {hi}]",
                    b.name()
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn catalog_matches_direct_formulas(i in 0usize..21, n in 2usize..7, unit in proptest::collection::vec(0.0f64..1.0, 6)) {
        let b = &catalog()[i % catalog().len()];
        let n = match b.arity() { Arity::Fixed(d) => d, Arity::Any => n };
        let x: Vec<f64> = b.suggested_bounds(n).iter().zip(&unit).map(|(&(lo, hi), u)| lo + u * (hi - lo)).collect();
        let (got, want) = (b.evaluate(&x), oracle(b.name(), &x));
        prop_assert!((got - want).abs() <= 1e-9 * want.abs().max(1.0), "{}: {} vs {}", b.name(), got, want);
    }
}
