use gapord::harness::{default_spec, run_suite, suite_names};
use gapord::Error;

#[test]
fn registry_covers_every_module() {
    let names = suite_names();
    for prefix in ["seq-", "ord-", "tree-", "bullet-", "reflect-", "reify-", "motype-", "literal-"] {
        assert!(names.iter().any(|n| n.starts_with(prefix)), "no suite for {prefix}");
    }
    assert!(matches!(default_spec("nope"), Err(Error::UnknownSuite(_))));
}

#[test]
fn remaining_suites_pass_on_defaults() {
    for name in ["seq-order-axioms", "tree-order-axioms", "motype-laws", "literal-roundtrip"] {
        let r = run_suite(name, &default_spec(name).unwrap()).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert!(r.cases > 0);
    }
}

#[test]
fn parallel_and_sequential_runs_render_alike() {
    for name in ["reflect-left-set", "reify-e-reflection", "seq-concat-cancel"] {
        let mut spec = default_spec(name).unwrap();
        spec.samples = 300;
        spec.seed = 17;
        let par = run_suite(name, &spec).unwrap();
        spec.parallel = false;
        let seq = run_suite(name, &spec).unwrap();
        assert_eq!(par.render(), seq.render());
    }
}

#[test]
fn seeds_select_different_samples() {
    let mut spec = default_spec("ord-laws").unwrap();
    spec.samples = 50;
    let a = run_suite("ord-laws", &spec).unwrap();
    spec.seed = 99;
    let b = run_suite("ord-laws", &spec).unwrap();
    assert!(a.passed() && b.passed());
    assert_eq!(a.cases, b.cases);
}

#[test]
fn zero_caps_are_rejected() {
    let mut spec = default_spec("ord-laws").unwrap();
    spec.samples = 0;
    assert!(matches!(run_suite("ord-laws", &spec), Err(Error::PreconditionViolated(_))));
}
