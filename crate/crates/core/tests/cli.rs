use gapord::cli::dispatch;

fn run(args: &[&str]) -> (String, String, i32) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("gapord").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap(), code)
}

#[test]
fn ordinal_commands() {
    assert_eq!(run(&["cmp-ord", "w", "w"]), ("=\n".into(), String::new(), 0));
    assert_eq!(run(&["cmp-ord", "phi(1,0)", "w^w"]).0, ">\n");
    assert_eq!(run(&["normalize", "phi(0,phi(1,0))"]).0, "phi(1,0)\n");
    assert_eq!(run(&["normalize", "1+w"]).0, "w\n");
    assert_eq!(run(&["arith", "add", "w", "1"]).0, "w+1\n");
    assert_eq!(run(&["arith", "nsum", "1", "w"]).0, "w+1\n");
    assert_eq!(run(&["arith", "lsub", "1", "w"]).0, "w\n");
    assert_eq!(run(&["arith", "mul", "2", "w"]).0, "w\n");
    assert_eq!(run(&["motype", "H", "2"]).0, "w^(w^w+1)\n");
}

#[test]
fn parse_errors_exit_two_on_stderr() {
    let (out, err, code) = run(&["normalize", "w+"]);
    assert_eq!((out.as_str(), code), ("", 2));
    assert!(err.contains("offset 2"), "{err}");
    assert_eq!(run(&["frobnicate"]).2, 2);
    assert_eq!(run(&["cmp-seq", "--order", "x", "[]", "[]"]).2, 2);
}

#[test]
fn relations_use_exit_codes() {
    assert_eq!(run(&["cmp-seq", "--order", "w", "[1]", "[0,1]"]), (String::new(), String::new(), 0));
    assert_eq!(run(&["cmp-seq", "--order", "r", "[1]", "[0,1]"]).2, 1);
    assert_eq!(run(&["cmp-seq", "--order", "g", "[0,1]", "[0,2,1]"]).2, 0);
    assert_eq!(run(&["cmp-tree", ".", "(0 . .)"]).2, 0);
    assert_eq!(run(&["cmp-tree", "(1 . .)", "(0 . .)"]).2, 1);
    let (out, _, code) = run(&["--verbose", "cmp-seq", "--order", "s", "[1]", "[1,1]"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("realizer"), "{out}");
}

#[test]
fn embeddings_print_images() {
    let tree = run(&["embed", "seq_to_tree", "--param", "alpha=4", "[2,0,1,0,3]"]);
    assert_eq!(tree.0, "(0 (2 . .) (0 (1 . .) (3 . .)))\n");
    assert_eq!(run(&["embed", "phi_to_gapseq", "--param", "alpha=2", "2"]).0, "[1,0,1]\n");
    assert_eq!(run(&["embed", "strong_to_weak", "--param", "alpha=2", "[1,0]"]).0, "[2,1,0]\n");
    assert_eq!(run(&["embed", "nope", "1"]).2, 2);
    assert_eq!(run(&["embed", "seq_to_tree", "--param", "alpha=2", "[5]"]).2, 2);
}

#[test]
fn reify_prints_descending_values() {
    let (out, _, code) = run(&["reify", "--alpha", "1", "(0 . .); ."]);
    assert_eq!(code, 0);
    let values: Vec<_> = out.lines().map(|l| gapord::text::parse_ord(l).unwrap()).collect();
    assert_eq!(values.len(), 2);
    assert!(values[1] < values[0]);
    let (out, _, code) = run(&["reify", "--alpha", "1", ".; (0 . .)"]);
    assert_eq!(code, 1);
    assert!(out.contains("not bad"));
}

#[test]
fn check_reports_suites() {
    let (out, _, code) = run(&["check", "seq-oracle", "--alphabet", "2", "--len", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out, "ok seq-oracle cases=225 failures=0\n");
    assert_eq!(run(&["check", "no-such-suite"]).2, 2);
    assert!(run(&["suites"]).0.lines().any(|l| l == "reify-descent"));
}
