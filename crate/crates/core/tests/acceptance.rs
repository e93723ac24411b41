//! Acceptance criteria for the library and the command-line tool.
//!
//! Every criterion prints one `PASS` or `FAIL` line with its wall time. The
//! run fails if any criterion fails or exceeds its time budget.

use std::process::Command;
use std::time::{Duration, Instant};

use gapord::harness::{default_spec, run_suite, CheckReport};
use gapord::motype::{F, G, H};
use gapord::text::{parse_ord, print_ord};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_reports(reports: &[CheckReport]) -> Self {
        let cases: u64 = reports.iter().map(|r| r.cases).sum();
        let failures: Vec<String> = reports
            .iter()
            .flat_map(|r| r.failures.iter().take(5).map(move |f| format!("{}: {f}", r.suite)))
            .collect();
        let total: usize = reports.iter().map(|r| r.failures.len()).sum();
        Outcome {
            passed: total == 0,
            detail: if total == 0 {
                format!("{} suites, {cases} cases", reports.len())
            } else {
                format!("{total} violations in {cases} cases; first: {}", failures.join(" | "))
            },
        }
    }
}

fn suites(names: &[&str]) -> Outcome {
    let reports: Vec<CheckReport> = names
        .iter()
        .map(|name| {
            let spec = default_spec(name).expect("registered suite");
            run_suite(name, &spec).expect("valid default spec")
        })
        .collect();
    Outcome::from_reports(&reports)
}

fn pinned_values() -> Outcome {
    let fixture = include_str!("fixtures/pinned_values.txt");
    let mut bad = Vec::new();
    let mut count = 0;
    for line in fixture.lines() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let [func, arg, expected] = fields[..] else {
            panic!("malformed fixture line: {line}");
        };
        let a = parse_ord(arg).expect("fixture argument parses");
        let value = match func {
            "F" => F(&a),
            "G" => G(&a),
            "H" => H(&a),
            other => panic!("unknown function {other} in fixture"),
        };
        count += 1;
        let printed = print_ord(&value);
        let structural = parse_ord(expected).map(|e| e == value).unwrap_or(false);
        if printed != expected || !structural {
            bad.push(format!("{func}({arg}) = {printed}, expected {expected}"));
        }
    }
    Outcome {
        passed: bad.is_empty() && count == 11,
        detail: if bad.is_empty() {
            format!("{count} values")
        } else {
            bad.join(" | ")
        },
    }
}

struct CliCase {
    args: &'static [&'static str],
    stdout: &'static str,
    code: i32,
}

const CLI_CASES: &[CliCase] = &[
    CliCase {
        args: &["cmp-seq", "--order", "s", "[1]", "[0,1]"],
        stdout: "",
        code: 1,
    },
    CliCase {
        args: &["motype", "G", "2"],
        stdout: "w^w^w\n",
        code: 0,
    },
    CliCase {
        args: &["cmp-ord", "0", "1"],
        stdout: "<\n",
        code: 0,
    },
];

fn cli_contract() -> Outcome {
    let mut bad = Vec::new();
    for case in CLI_CASES {
        let out = Command::new(env!("CARGO_BIN_EXE_gapord"))
            .args(case.args)
            .output()
            .expect("binary runs");
        let stdout = String::from_utf8_lossy(&out.stdout);
        let code = out.status.code().unwrap_or(-1);
        if stdout != case.stdout || code != case.code {
            bad.push(format!("{:?}: stdout {stdout:?} exit {code}", case.args));
        }
    }
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} invocations", CLI_CASES.len())
        } else {
            bad.join(" | ")
        },
    }
}

#[test]
fn acceptance_criteria() {
    type Check = fn() -> Outcome;
    let criteria: [(u32, &str, u64, Check); 8] = [
        (1, "sequence order equivalences", 10, || suites(&["seq-equivalence", "seq-oracle"])),
        (2, "cancellation and concatenation", 30, || suites(&["seq-concat-cancel"])),
        (3, "ordinal laws", 60, || suites(&["ord-laws", "ord-exhaustive"])),
        (4, "pinned order types", 1, pinned_values),
        (5, "order reflection of the embeddings", 120, || {
            suites(&[
                "reflect-seq-to-tree",
                "reflect-phi-to-gapseq",
                "reflect-strong-weak",
                "reflect-strong-decompose",
                "reflect-bullet-pipeline",
                "reflect-strong-lower",
                "reflect-veblen",
                "reflect-left-set",
                "reflect-label-split",
            ])
        }),
        (6, "reification descent", 120, || {
            suites(&["reify-descent", "reify-simplify", "reify-e-reflection"])
        }),
        (7, "bullet order", 10, || suites(&["bullet-order"])),
        (8, "command-line contract", 60, cli_contract),
    ];
    let mut failed = Vec::new();
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let wall = start.elapsed();
        let in_time = wall <= Duration::from_secs(budget);
        let ok = outcome.passed && in_time;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {id} {name}: {} ({:.2}s, budget {budget}s)",
            outcome.detail,
            wall.as_secs_f64()
        );
        if !ok {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
