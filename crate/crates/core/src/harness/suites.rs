use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::embed::{
    bullet_leq_slice, bullet_stage, bullet_to_weak, higman_leq_by, left_set_embed, nat_to_bullet_fn,
    phi_to_gapseq_fn, seq_to_tree_fn, strong_decompose_fin_fn, strong_decompose_inf_fn, strong_lower_base,
    strong_lower_combine, strong_to_weak_fn, tree_label_split_fn, veblen_lower, weak_to_strong_fn, Domain,
    EmbedFn, LeftSetVariant, SeqOrder, Value, ValueTree, VeblenTarget,
};
use crate::error::{Error, Result};
use crate::gap_seq::{leq_g_slice, leq_r_slice, leq_s_slice, leq_variant_slice, leq_w_slice, oracle_leq_slice, split_weak_slice, GapVariant};
use crate::gap_tree::{leq_tree, LabTree};
use crate::motype::{higman_star, F, G, H};
use crate::ord::{
    add, base_decompose, cmp_ord, cnf_head, div, hessenberg, lsub, mul, omega_pow, pow, psi, OrdTerm,
};
use crate::reify::{check_term, e, leq_rterm, lift_tree, otype, simplify_type, Reifier, RType};
use crate::text::{parse_ord, parse_seq, parse_unit_tree, print_ord, print_seq};

use super::gen::{
    enum_terms, random_ord, random_rterm, random_rtype, random_tree_over, random_word,
};
use super::{
    all_pairs, check_reflection, enum_phi2_terms, enum_trees, enum_words, grow_bad_trees, report, sample_below,
    CarrierKind, CheckReport, DomainSpec,
};

type SuiteFn = fn(&DomainSpec) -> CheckReport;

struct Suite {
    name: &'static str,
    defaults: fn() -> DomainSpec,
    run: SuiteFn,
}

fn spec(carrier: CarrierKind, alphabet: u32, max_len: usize, max_nodes: usize, max_size: usize, samples: usize) -> DomainSpec {
    DomainSpec {
        carrier,
        alphabet,
        max_len,
        max_nodes,
        max_size,
        samples,
        ..DomainSpec::new(carrier)
    }
}

const SUITES: &[Suite] = &[
    Suite {
        name: "seq-equivalence",
        defaults: || spec(CarrierKind::GapSeqs, 3, 4, 1, 1, 1),
        run: seq_equivalence,
    },
    Suite {
        name: "seq-oracle",
        defaults: || spec(CarrierKind::GapSeqs, 2, 5, 1, 1, 1),
        run: seq_oracle,
    },
    Suite {
        name: "seq-order-axioms",
        defaults: || spec(CarrierKind::GapSeqs, 3, 4, 1, 1, 1),
        run: seq_order_axioms,
    },
    Suite {
        name: "seq-concat-cancel",
        defaults: || spec(CarrierKind::GapSeqs, 3, 4, 1, 1, 100_000),
        run: seq_concat_cancel,
    },
    Suite {
        name: "ord-laws",
        defaults: || spec(CarrierKind::Ordinals, 1, 1, 1, 8, 100_000),
        run: ord_laws,
    },
    Suite {
        name: "ord-exhaustive",
        defaults: || spec(CarrierKind::Ordinals, 1, 1, 1, 6, 1),
        run: ord_exhaustive,
    },
    Suite {
        name: "tree-order-axioms",
        defaults: || spec(CarrierKind::Trees, 3, 1, 9, 1, 1),
        run: tree_order_axioms,
    },
    Suite {
        name: "bullet-order",
        defaults: || spec(CarrierKind::BulletSeqs, 3, 5, 1, 1, 1),
        run: bullet_order,
    },
    Suite {
        name: "reflect-seq-to-tree",
        defaults: || spec(CarrierKind::GapSeqs, 3, 4, 1, 1, 1),
        run: reflect_seq_to_tree,
    },
    Suite {
        name: "reflect-phi-to-gapseq",
        defaults: || spec(CarrierKind::Ordinals, 1, 1, 1, 5, 1),
        run: reflect_phi_to_gapseq,
    },
    Suite {
        name: "reflect-strong-weak",
        defaults: || spec(CarrierKind::GapSeqs, 3, 4, 1, 1, 1),
        run: reflect_strong_weak,
    },
    Suite {
        name: "reflect-strong-decompose",
        defaults: || spec(CarrierKind::GapSeqs, 3, 4, 1, 1, 2000),
        run: reflect_strong_decompose,
    },
    Suite {
        name: "reflect-bullet-pipeline",
        defaults: || spec(CarrierKind::Ordinals, 1, 5, 1, 1, 500),
        run: reflect_bullet_pipeline,
    },
    Suite {
        name: "reflect-strong-lower",
        defaults: || spec(CarrierKind::Ordinals, 1, 1, 1, 1, 500),
        run: reflect_strong_lower,
    },
    Suite {
        name: "reflect-veblen",
        defaults: || spec(CarrierKind::Ordinals, 1, 1, 1, 1, 500),
        run: reflect_veblen,
    },
    Suite {
        name: "reflect-left-set",
        defaults: || spec(CarrierKind::Trees, 2, 1, 7, 1, 10_000),
        run: reflect_left_set,
    },
    Suite {
        name: "reflect-label-split",
        defaults: || spec(CarrierKind::Trees, 2, 1, 9, 1, 10_000),
        run: reflect_label_split,
    },
    Suite {
        name: "reify-descent",
        defaults: || spec(CarrierKind::Trees, 3, 100_000, 12, 1, 1000),
        run: reify_descent,
    },
    Suite {
        name: "reify-simplify",
        defaults: || spec(CarrierKind::ReifyTerms, 3, 1, 1, 6, 10_000),
        run: reify_simplify,
    },
    Suite {
        name: "reify-e-reflection",
        defaults: || spec(CarrierKind::ReifyTerms, 3, 1, 1, 6, 10_000),
        run: reify_e_reflection,
    },
    Suite {
        name: "motype-laws",
        defaults: || spec(CarrierKind::Ordinals, 1, 1, 1, 6, 2000),
        run: motype_laws,
    },
    Suite {
        name: "literal-roundtrip",
        defaults: || spec(CarrierKind::Ordinals, 3, 4, 7, 5, 1),
        run: literal_roundtrip,
    },
];

/// Names of every registered suite, in registry order.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

fn find(name: &str) -> Result<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownSuite(name.to_string()))
}

/// The default domain of a suite.
pub fn default_spec(name: &str) -> Result<DomainSpec> {
    Ok((find(name)?.defaults)())
}

/// Runs a registered suite on `spec`.
pub fn run_suite(name: &str, spec: &DomainSpec) -> Result<CheckReport> {
    let suite = find(name)?;
    spec.validate()?;
    let start = Instant::now();
    let mut r = (suite.run)(spec);
    r.suite = name.to_string();
    r.wall = start.elapsed();
    Ok(r)
}

fn w(xs: &[u32]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn cat(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().chain(b).copied().collect()
}

fn check(out: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        out.push(msg());
    }
}

fn seq_equivalence(spec: &DomainSpec) -> CheckReport {
    let words = enum_words(spec.alphabet, spec.max_len);
    let n = words.len();
    report("seq-equivalence", n * n, spec.parallel, |i| {
        let (s, t) = (&words[i / n], &words[i % n]);
        let mut out = Vec::new();
        let lw = leq_w_slice(s, t);
        let ls = leq_s_slice(s, t);
        let lr = leq_r_slice(s, t);
        let lg = leq_g_slice(s, t);
        let ow = oracle_leq_slice(s, t, GapVariant::Weak);
        let og = oracle_leq_slice(s, t, GapVariant::Gordeev);
        let os = oracle_leq_slice(s, t, GapVariant::StrongRealizer);
        let orr = oracle_leq_slice(s, t, GapVariant::StrongRecursive);
        let tag = || format!("{} {}", w(s), w(t));
        check(&mut out, lg == lw, || format!("g=w {}", tag()));
        check(&mut out, lw == ow && lg == og && ow == og, || format!("w=oracle {}", tag()));
        check(&mut out, ls == lr && ls == os && lr == orr, || format!("s=r=oracle {}", tag()));
        let zs = cat(&[0], s);
        let zt = cat(&[0], t);
        check(&mut out, lw == leq_s_slice(&zs, &zt), || format!("w=s(0*) {}", tag()));
        for beta in 0..spec.alphabet {
            if t.iter().any(|&m| m < beta) {
                continue;
            }
            for gamma in beta..spec.alphabet {
                let ok = lw == leq_s_slice(&cat(&[beta], s), &cat(&[gamma], t));
                check(&mut out, ok, || format!("w=s(b*,g*) b={beta} g={gamma} {}", tag()));
            }
        }
        out
    })
}

fn seq_oracle(spec: &DomainSpec) -> CheckReport {
    let words = enum_words(spec.alphabet, spec.max_len);
    let n = words.len();
    report("seq-oracle", n * n, spec.parallel, |i| {
        let (s, t) = (&words[i / n], &words[i % n]);
        let mut out = Vec::new();
        for v in GapVariant::ALL {
            let ok = leq_variant_slice(s, t, v) == oracle_leq_slice(s, t, v);
            check(&mut out, ok, || format!("{v:?} {} {}", w(s), w(t)));
        }
        out
    })
}

/// Checks reflexivity, antisymmetry and transitivity of a relation matrix row by row.
fn order_axioms(name: &str, m: &[Vec<bool>], label: &(dyn Fn(usize) -> String + Sync), parallel: bool) -> CheckReport {
    let n = m.len();
    report(name, n, parallel, |i| {
        let mut out = Vec::new();
        check(&mut out, m[i][i], || format!("reflexive {}", label(i)));
        for j in 0..n {
            if !m[i][j] {
                continue;
            }
            check(&mut out, i == j || !m[j][i], || format!("antisymmetric {} {}", label(i), label(j)));
            for (k, (&jk, &ik)) in m[j].iter().zip(&m[i]).enumerate() {
                if jk && !ik {
                    out.push(format!("transitive {} {} {}", label(i), label(j), label(k)));
                }
            }
        }
        out
    })
}

fn matrix<T: Sync>(xs: &[T], leq: impl Fn(&T, &T) -> bool + Sync + Send, parallel: bool) -> Vec<Vec<bool>> {
    super::map_cases(xs.len(), parallel, |i| xs.iter().map(|y| leq(&xs[i], y)).collect())
}

fn seq_order_axioms(spec: &DomainSpec) -> CheckReport {
    let words = enum_words(spec.alphabet, spec.max_len);
    let parts: Vec<CheckReport> = GapVariant::ALL
        .iter()
        .map(|&v| {
            let m = matrix(&words, |s, t| leq_variant_slice(s, t, v), spec.parallel);
            order_axioms(&format!("{v:?}"), &m, &|i| w(&words[i]), spec.parallel)
        })
        .collect();
    prefix_merge("seq-order-axioms", parts)
}

fn prefix_merge(suite: &str, parts: Vec<CheckReport>) -> CheckReport {
    let labelled: Vec<CheckReport> = parts
        .into_iter()
        .map(|mut p| {
            let name = p.suite.clone();
            p.failures = p.failures.into_iter().map(|f| format!("{name}: {f}")).collect();
            p
        })
        .collect();
    CheckReport::merge(suite, labelled, Default::default())
}

fn concat_checks(s: &[u32], t: &[u32], out: &mut Vec<String>) {
    for i in 0..=s.len() {
        let (sl, sr) = s.split_at(i);
        for j in 0..=t.len() {
            let (tl, tr) = t.split_at(j);
            let tag = || format!("{}|{} {}|{}", w(sl), w(sr), w(tl), w(tr));
            let head_low = sr.first().is_none_or(|h| tl.iter().all(|m| h <= m));
            if head_low && leq_s_slice(sr, tr) {
                if leq_w_slice(sl, tl) {
                    check(out, leq_w_slice(s, t), || format!("concat-weak {}", tag()));
                }
                if leq_s_slice(sl, tl) {
                    check(out, leq_s_slice(s, t), || format!("concat-strong {}", tag()));
                }
            }
            let tail_low = tr.first().is_none_or(|h| sl.iter().all(|m| h < m));
            if tail_low && leq_s_slice(s, t) {
                check(out, leq_s_slice(sl, tl), || format!("remove-tail {}", tag()));
            }
            if leq_w_slice(s, t) {
                match split_weak_slice(s, tl, tr) {
                    None => out.push(format!("split-missing {}", tag())),
                    Some(k) => {
                        let (a, b) = s.split_at(k);
                        let ok = leq_w_slice(a, tl) && leq_w_slice(b, tr) && (a.is_empty() || leq_s_slice(b, tr));
                        check(out, ok, || format!("split k={k} {}", tag()));
                    }
                }
            }
        }
    }
}

fn head_checks(u: &[u32], s: &[u32], t: &[u32], out: &mut Vec<String>) {
    let (us, ut) = (cat(u, s), cat(u, t));
    let tag = || format!("u={} {} {}", w(u), w(s), w(t));
    if leq_w_slice(&us, &ut) {
        check(out, leq_w_slice(s, t), || format!("remove-head-weak {}", tag()));
    }
    let low = t.first().is_none_or(|h| u.iter().all(|m| h < m));
    if low && leq_s_slice(&us, &ut) {
        check(out, leq_s_slice(s, t), || format!("remove-head-strong {}", tag()));
    }
    if leq_s_slice(s, t) {
        check(out, leq_s_slice(&us, &ut), || format!("prefix-strong {}", tag()));
    }
}

fn seq_concat_cancel(spec: &DomainSpec) -> CheckReport {
    let words = enum_words(spec.alphabet, spec.max_len);
    let short = enum_words(spec.alphabet, 2);
    let n = words.len();
    let exhaustive = report("exhaustive", n * n, spec.parallel, |i| {
        let (s, t) = (&words[i / n], &words[i % n]);
        let mut out = Vec::new();
        concat_checks(s, t, &mut out);
        for k in 1..=s.len().min(t.len()) {
            if s[..k] == t[..k] {
                head_checks(&s[..k], &s[k..], &t[k..], &mut out);
            }
        }
        for u in &short {
            if leq_s_slice(s, t) {
                check(&mut out, leq_s_slice(&cat(u, s), &cat(u, t)), || {
                    format!("prefix-strong u={} {} {}", w(u), w(s), w(t))
                });
            }
            if u.len() <= 1 && leq_w_slice(s, t) {
                for v in short.iter().filter(|v| v.len() <= 1) {
                    let padded = cat(&cat(u, t), v);
                    check(&mut out, leq_w_slice(s, &padded), || {
                        format!("padding {} {} {} {}", w(s), w(u), w(t), w(v))
                    });
                }
            }
        }
        out
    });
    let alphabet = spec.alphabet + 1;
    let len = spec.max_len + 1;
    let sampled = report("sampled", spec.samples, spec.parallel, |i| {
        let mut rng = spec.rng(i as u64);
        let s = random_word(&mut rng, alphabet, len);
        let t = random_word(&mut rng, alphabet, len);
        let u = random_word(&mut rng, alphabet, len);
        let mut out = Vec::new();
        head_checks(&u, &s, &t, &mut out);
        if leq_w_slice(&s, &t) {
            check(&mut out, leq_w_slice(&s, &cat(&cat(&u, &t), &u)), || {
                format!("padding {} {} {}", w(&s), w(&u), w(&t))
            });
        }
        let head_low = u.first().is_none_or(|h| t.iter().all(|m| h <= m));
        if head_low && leq_w_slice(&s, &t) {
            check(&mut out, leq_w_slice(&cat(&s, &u), &cat(&t, &u)), || {
                format!("concat-weak {} {} {}", w(&s), w(&t), w(&u))
            });
        }
        let tail_low = u.first().is_none_or(|h| s.iter().all(|m| h < m));
        if tail_low && leq_s_slice(&cat(&s, &u), &cat(&t, &u)) {
            check(&mut out, leq_s_slice(&s, &t), || format!("remove-tail {} {} {}", w(&s), w(&t), w(&u)));
        }
        out
    });
    let mut pinned = Vec::new();
    check(&mut pinned, leq_s_slice(&[1], &[1]) && !leq_s_slice(&[1], &[0, 1]), || {
        "pinned strong padding counterexample".to_string()
    });
    check(&mut pinned, leq_w_slice(&[1], &[0, 1]), || "pinned weak padding".to_string());
    let pinned = CheckReport {
        suite: "pinned".into(),
        cases: 2,
        failures: pinned,
        wall: Default::default(),
    };
    prefix_merge("seq-concat-cancel", vec![exhaustive, sampled, pinned])
}

fn ord_laws(spec: &DomainSpec) -> CheckReport {
    let size = spec.max_size;
    report("ord-laws", spec.samples, spec.parallel, |i| {
        let mut rng = spec.rng(i as u64);
        let a = random_ord(&mut rng, size);
        let b = random_ord(&mut rng, size);
        let c = random_ord(&mut rng, size);
        let d = random_ord(&mut rng, size);
        let mut out = Vec::new();
        let tag = || format!("{} {} {}", print_ord(&a), print_ord(&b), print_ord(&c));
        order_laws(&a, &b, &c, &mut out, &tag);
        additive_laws(&a, &b, &c, &d, &mut rng, &mut out, &tag);
        hessenberg_laws(&a, &b, &c, &mut rng, &mut out, &tag);
        psi_laws(&a, &b, &c, &d, &mut rng, &mut out, &tag);
        reconstruction_laws(&a, &b, &mut out, &tag);
        out
    })
}

fn order_laws(a: &OrdTerm, b: &OrdTerm, c: &OrdTerm, out: &mut Vec<String>, tag: &dyn Fn() -> String) {
    let sym = a.cmp(b) == b.cmp(a).reverse();
    let eq = (a.cmp(b) == std::cmp::Ordering::Equal) == (a == b);
    check(out, sym && eq, || format!("trichotomy {}", tag()));
    if a <= b && b <= c {
        check(out, a <= c, || format!("transitive {}", tag()));
    }
    if a < b && b < c {
        check(out, a < c, || format!("strict-transitive {}", tag()));
    }
}

fn additive_laws(
    a: &OrdTerm,
    b: &OrdTerm,
    c: &OrdTerm,
    d: &OrdTerm,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<String>,
    tag: &dyn Fn() -> String,
) {
    check(out, add(&add(a, b), c) == add(a, &add(b, c)), || format!("add-assoc {}", tag()));
    if a < b {
        check(out, add(c, a) < add(c, b), || format!("add-monotone {}", tag()));
    }
    if a <= b {
        check(out, add(a, &lsub(a, b)) == *b, || format!("lsub-inverse {}", tag()));
    }
    if a <= b && a <= c && lsub(a, b) <= lsub(a, c) {
        check(out, b <= c, || format!("lsub-a {}", tag()));
    }
    let (lo, hi) = if a <= d { (a, d) } else { (d, a) };
    if lo <= b && hi <= c && lsub(lo, b) <= lsub(hi, c) {
        check(out, b <= c, || format!("lsub-a-two-bases {}", tag()));
    }
    if add(a, b) <= add(a, c) {
        check(out, b <= c, || format!("lsub-b {}", tag()));
    }
    let wa = omega_pow(a);
    let gamma = sample_below(rng, &wa, 3);
    let lhs = add(&wa, b);
    let rho = if rng.gen_bool(0.5) { add(&lhs, d) } else { d.clone() };
    if lhs <= add(&gamma, &rho) {
        check(out, lhs <= rho, || format!("lsub-c gamma={} rho={} {}", print_ord(&gamma), print_ord(&rho), tag()));
    }
}

fn hessenberg_laws(a: &OrdTerm, b: &OrdTerm, c: &OrdTerm, rng: &mut ChaCha8Rng, out: &mut Vec<String>, tag: &dyn Fn() -> String) {
    check(out, hessenberg(&hessenberg(a, b), c) == hessenberg(a, &hessenberg(b, c)), || {
        format!("nsum-assoc {}", tag())
    });
    check(out, hessenberg(a, b) == hessenberg(b, a), || format!("nsum-symmetric {}", tag()));
    if a < c {
        check(out, hessenberg(a, b) < hessenberg(c, b), || format!("nsum-monotone {}", tag()));
    }
    let z = omega_pow(c);
    let x = sample_below(rng, &z, 3);
    let y = sample_below(rng, &z, 3);
    check(out, hessenberg(&x, &y) < z, || {
        format!("nsum-indecomposable x={} y={} z={}", print_ord(&x), print_ord(&y), print_ord(&z))
    });
}

fn positive(a: &OrdTerm) -> OrdTerm {
    if a.is_zero() {
        OrdTerm::one()
    } else {
        a.clone()
    }
}

fn psi_laws(
    a: &OrdTerm,
    b: &OrdTerm,
    c: &OrdTerm,
    d: &OrdTerm,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<String>,
    tag: &dyn Fn() -> String,
) {
    let (al, be, ga) = (positive(a), positive(b), positive(c));
    let p = psi(&al, &be).expect("positive arguments");
    let de = if rng.gen_bool(0.5) { add(&p, &positive(d)) } else { positive(d) };
    let q = psi(&ga, &de).expect("positive arguments");
    let rel = || format!("{} {} {}", print_ord(&al), print_ord(&be), print_ord(&ga));
    if al == ga && be < de {
        check(out, p < q, || format!("psi-a-equal {} {}", rel(), print_ord(&de)));
    }
    if al < ga && be < q {
        check(out, p < q, || format!("psi-a-below {} {}", rel(), print_ord(&de)));
    }
    if al > ga && p < de {
        check(out, p < q, || format!("psi-a-above {} {}", rel(), print_ord(&de)));
    }
    check(out, !p.is_zero(), || format!("psi-b {}", tag()));
    check(out, al < p && be < p, || format!("psi-d-e {}", tag()));
    let s = sample_below(rng, &p, 3);
    let t = sample_below(rng, &p, 3);
    let closed = add(&s, &t) < p && mul(&s, &t) < p && pow(&s, &t) < p;
    check(out, closed, || format!("psi-c s={} t={} {}", print_ord(&s), print_ord(&t), tag()));
}

fn reconstruction_laws(a: &OrdTerm, b: &OrdTerm, out: &mut Vec<String>, tag: &dyn Fn() -> String) {
    if let Ok((g, rest)) = cnf_head(a) {
        check(out, add(&omega_pow(&g), &rest) == *a, || format!("cnf-head {}", tag()));
    }
    let base = if *b >= OrdTerm::nat(2) { b.clone() } else { OrdTerm::nat(2) };
    if !a.is_zero() {
        match base_decompose(a, &base) {
            Ok((beta, kappa, lambda)) => {
                let pb = pow(&base, &beta);
                let ok = add(&mul(&pb, &kappa), &lambda) == *a && !kappa.is_zero() && kappa < base && lambda < pb;
                check(out, ok, || format!("base-decompose base={} {}", print_ord(&base), tag()));
            }
            Err(e) => out.push(format!("base-decompose error {e} {}", tag())),
        }
    }
    let dv = positive(b);
    match div(a, &dv) {
        Ok((q, r)) => check(out, add(&mul(&dv, &q), &r) == *a && r < dv, || format!("div {}", tag())),
        Err(e) => out.push(format!("div error {e} {}", tag())),
    }
}

fn ord_exhaustive(spec: &DomainSpec) -> CheckReport {
    let terms = enum_terms(spec.max_size);
    let n = terms.len();
    report("ord-exhaustive", n * n, spec.parallel, |i| {
        let (a, b) = (&terms[i / n], &terms[i % n]);
        let mut out = Vec::new();
        let sorted = (i / n).cmp(&(i % n)) == a.cmp(b);
        check(&mut out, sorted, || format!("order {} {}", print_ord(a), print_ord(b)));
        check(&mut out, a.cmp(b) == b.cmp(a).reverse(), || {
            format!("antisymmetric {} {}", print_ord(a), print_ord(b))
        });
        out
    })
}

fn tree_order_axioms(spec: &DomainSpec) -> CheckReport {
    let trees = enum_trees(spec.alphabet, spec.max_nodes, false);
    let m = matrix(&trees, leq_tree, spec.parallel);
    let axioms = order_axioms("axioms", &m, &|i| trees[i].to_string(), spec.parallel);
    let strict = enum_trees(spec.alphabet, spec.max_nodes, true);
    let closure = report("closure", trees.len() + strict.len(), spec.parallel, |i| {
        let (t, ls) = if i < trees.len() {
            (&trees[i], false)
        } else {
            (&strict[i - trees.len()], true)
        };
        let mut out = Vec::new();
        check(&mut out, t.is_valid(ls), || format!("valid {t}"));
        for sub in t.subtrees() {
            check(&mut out, sub.is_valid(ls), || format!("subtree {sub} of {t} left_strict={ls}"));
        }
        if ls {
            check(&mut out, trees.contains(t), || format!("suborder {t}"));
        }
        out
    });
    prefix_merge("tree-order-axioms", vec![axioms, closure])
}

fn bullet_order(spec: &DomainSpec) -> CheckReport {
    let mut parts = Vec::new();
    for alphabet in 1..=spec.alphabet {
        let words = enum_words(alphabet, spec.max_len);
        let m = matrix(&words, |s, t| bullet_leq_slice(s, t), spec.parallel);
        parts.push(order_axioms(
            &format!("axioms-{alphabet}"),
            &m,
            &|i| w(&words[i]),
            spec.parallel,
        ));
        let n = words.len();
        let top = alphabet - 1;
        let index = |xs: &[u32]| words.iter().position(|v| v == xs);
        let lookup = |xs: &[u32], ys: &[u32]| match (index(xs), index(ys)) {
            (Some(a), Some(b)) => m[a][b],
            _ => bullet_leq_slice(xs, ys),
        };
        parts.push(report(&format!("lemmas-{alphabet}"), n * n, spec.parallel, |c| {
            let (i, j) = (c / n, c % n);
            let mut out = Vec::new();
            if !m[i][j] {
                return out;
            }
            let (s, t) = (&words[i], &words[j]);
            for k in 0..=t.len() {
                let (tl, tr) = t.split_at(k);
                let found = (0..=s.len()).any(|q| lookup(&s[..q], tl) && lookup(&s[q..], tr));
                check(&mut out, found, || format!("split {} {}|{}", w(s), w(tl), w(tr)));
            }
            if let (Some(p), Some(q)) = (s.iter().position(|&x| x == top), t.iter().position(|&x| x == top)) {
                check(&mut out, lookup(&s[p + 1..], &t[q + 1..]), || format!("top-cancel {} {}", w(s), w(t)));
            }
            let common = s.iter().rev().zip(t.iter().rev()).take_while(|(x, y)| x == y).count();
            for r in 1..=common {
                let ok = lookup(&s[..s.len() - r], &t[..t.len() - r]);
                check(&mut out, ok, || format!("suffix-cancel r={r} {} {}", w(s), w(t)));
            }
            out
        }));
    }
    let mut pinned = Vec::new();
    let witness_ok = bullet_leq_slice(&[0u32, 0, 1], &[1, 1]);
    let higman_rejects = !higman_leq_by(&[0u32, 0, 1], &[1, 1], |x, y| x <= y);
    check(&mut pinned, witness_ok, || "rule-iv witness [0,0,1] [1,1] rejected".into());
    check(&mut pinned, higman_rejects, || "Higman accepts [0,0,1] [1,1]".into());
    parts.push(CheckReport {
        suite: "pinned".into(),
        cases: 2,
        failures: pinned,
        wall: Default::default(),
    });
    prefix_merge("bullet-order", parts)
}

fn nat_values(alphabet: u32, max_len: usize, order: SeqOrder) -> Vec<Value> {
    enum_words(alphabet, max_len)
        .into_iter()
        .map(|w| Value::Seq(order, w.iter().map(|&a| OrdTerm::nat(a as u64)).collect()))
        .collect()
}

fn reflect_seq_to_tree(spec: &DomainSpec) -> CheckReport {
    let xs = nat_values(spec.alphabet, spec.max_len, SeqOrder::Weak);
    let f = seq_to_tree_fn(&OrdTerm::nat(spec.alphabet as u64));
    check_reflection(&f, &all_pairs(&xs), spec.parallel)
}

fn reflect_phi_to_gapseq(spec: &DomainSpec) -> CheckReport {
    let xs: Vec<Value> = enum_phi2_terms(spec.max_size).into_iter().map(Value::Ord).collect();
    let f = phi_to_gapseq_fn(&OrdTerm::nat(2));
    check_reflection(&f, &all_pairs(&xs), spec.parallel)
}

fn reflect_strong_weak(spec: &DomainSpec) -> CheckReport {
    let alpha = OrdTerm::nat(spec.alphabet as u64);
    let strong = nat_values(spec.alphabet, spec.max_len, SeqOrder::Strong);
    let weak = nat_values(spec.alphabet, spec.max_len, SeqOrder::Weak);
    let a = check_reflection(&strong_to_weak_fn(&alpha), &all_pairs(&strong), spec.parallel);
    let b = check_reflection(&weak_to_strong_fn(&alpha), &all_pairs(&weak), spec.parallel);
    prefix_merge("reflect-strong-weak", vec![a, b])
}

fn sampled_pairs(spec: &DomainSpec, salt: u64, sample: impl Fn(&mut ChaCha8Rng) -> Value) -> Vec<(Value, Value)> {
    (0..spec.samples)
        .map(|i| {
            let mut rng = spec.rng((salt << 32) | i as u64);
            let x = sample(&mut rng);
            let y = sample(&mut rng);
            (x, y)
        })
        .collect()
}

fn reflect_strong_decompose(spec: &DomainSpec) -> CheckReport {
    let n = spec.alphabet as u64;
    let strong = nat_values(spec.alphabet, spec.max_len, SeqOrder::Strong);
    let fin = check_reflection(&strong_decompose_fin_fn(n), &all_pairs(&strong), spec.parallel);
    let alpha = add(&OrdTerm::omega(), &OrdTerm::omega());
    let f = strong_decompose_inf_fn(&alpha).expect("infinite bound");
    let len = spec.max_len;
    let pairs = sampled_pairs(spec, 1, |rng| {
        let k = rng.gen_range(0..=len);
        Value::strong((0..k).map(|_| sample_below(rng, &alpha, 3)).collect())
    });
    let inf = check_reflection(&f, &pairs, spec.parallel);
    prefix_merge("reflect-strong-decompose", vec![fin, inf])
}

fn zeros_fn(bound: u64) -> EmbedFn {
    EmbedFn::new(
        "zeros",
        vec![],
        Domain::ordinals(OrdTerm::nat(bound)),
        Domain::seqs(SeqOrder::Weak, OrdTerm::one()),
        |x| {
            let k = x.as_ord()?.to_nat().ok_or_else(|| Error::InputOutOfRange(x.to_string()))?;
            Ok(Value::weak(vec![OrdTerm::zero(); k as usize]))
        },
    )
}

fn reflect_bullet_pipeline(spec: &DomainSpec) -> CheckReport {
    let h1 = nat_to_bullet_fn();
    let h2 = bullet_stage(&h1, None).expect("ordinal source");
    let h3 = bullet_stage(&h2, None).expect("ordinal source");
    let h4 = bullet_to_weak(&zeros_fn(3)).expect("finite target");
    let pipeline = h3.then(&h4);
    let (b2, b3) = (h2.domain.bound.clone(), h3.domain.bound.clone());
    let len = spec.max_len;
    let p2 = check_reflection(&h2, &sampled_pairs(spec, 2, |r| Value::Ord(sample_below(r, &b2, 4))), spec.parallel);
    let p3 = check_reflection(&h3, &sampled_pairs(spec, 3, |r| Value::Ord(sample_below(r, &b3, 4))), spec.parallel);
    let p4 = check_reflection(
        &h4,
        &sampled_pairs(spec, 4, |r| {
            let word = random_word(r, 3, len);
            Value::bullet(word.iter().map(|&a| OrdTerm::nat(a as u64)).collect())
        }),
        spec.parallel,
    );
    let all = check_reflection(
        &pipeline,
        &sampled_pairs(spec, 5, |r| Value::Ord(sample_below(r, &b3, 4))),
        spec.parallel,
    );
    prefix_merge("reflect-bullet-pipeline", vec![p2, p3, p4, all])
}

fn singleton_fn(order: SeqOrder, bound: OrdTerm) -> EmbedFn {
    EmbedFn::new(
        "singleton",
        vec![],
        Domain::ordinals(OrdTerm::omega()),
        Domain::seqs(order, bound),
        move |x| Ok(Value::Seq(order, vec![x.as_ord()?.clone()])),
    )
}

fn reflect_strong_lower(spec: &DomainSpec) -> CheckReport {
    let w = OrdTerm::omega();
    let f = singleton_fn(SeqOrder::Weak, add(&w, &w));
    let g = singleton_fn(SeqOrder::Strong, w.clone());
    let base = strong_lower_base(&f, &OrdTerm::one()).expect("valid base");
    let combined = strong_lower_combine(&base, &g).expect("valid combine");
    let (b1, b2) = (base.domain.bound.clone(), combined.domain.bound.clone());
    let p1 = check_reflection(&base, &sampled_pairs(spec, 6, |r| Value::Ord(sample_below(r, &b1, 4))), spec.parallel);
    let p2 = check_reflection(
        &combined,
        &sampled_pairs(spec, 7, |r| Value::Ord(sample_below(r, &b2, 4))),
        spec.parallel,
    );
    let mut range = Vec::new();
    for (x, _) in sampled_pairs(spec, 8, |r| Value::Ord(sample_below(r, &b1, 4))) {
        match base.apply(&x).and_then(|v| v.into_seq()) {
            Ok(s) => check(&mut range, s.first().is_none_or(|m| *m < w), || format!("range {x}")),
            Err(e) => range.push(format!("range {x}: {e}")),
        }
    }
    let range = CheckReport {
        suite: "range".into(),
        cases: spec.samples as u64,
        failures: range,
        wall: Default::default(),
    };
    prefix_merge("reflect-strong-lower", vec![p1, p2, range])
}

fn reflect_veblen(spec: &DomainSpec) -> CheckReport {
    let plus_one = EmbedFn::new(
        "zeros_plus_one",
        vec![],
        Domain::ordinals(OrdTerm::omega()),
        Domain::seqs(SeqOrder::Weak, OrdTerm::one()),
        |x| {
            let k = x.as_ord()?.to_nat().ok_or_else(|| Error::InputOutOfRange(x.to_string()))?;
            Ok(Value::weak(vec![OrdTerm::zero(); 1 + k as usize]))
        },
    );
    let comb = EmbedFn::new(
        "comb",
        vec![],
        Domain::ordinals(OrdTerm::omega()),
        Domain::trees(OrdTerm::one(), false, None),
        |x| {
            let k = x.as_ord()?.to_nat().ok_or_else(|| Error::InputOutOfRange(x.to_string()))?;
            let mut t = LabTree::leaf(Value::Unit);
            for _ in 0..=k {
                t = LabTree::node_unchecked(OrdTerm::zero(), LabTree::leaf(Value::Unit), t);
            }
            Ok(Value::tree(t))
        },
    );
    let seq = veblen_lower(&plus_one, &OrdTerm::one(), VeblenTarget::Seq).expect("weak target");
    let tree = veblen_lower(&comb, &OrdTerm::zero(), VeblenTarget::Tree).expect("tree target");
    let (b1, b2) = (seq.domain.bound.clone(), tree.domain.bound.clone());
    let p1 = check_reflection(&seq, &sampled_pairs(spec, 9, |r| Value::Ord(sample_below(r, &b1, 4))), spec.parallel);
    let p2 = check_reflection(&tree, &sampled_pairs(spec, 10, |r| Value::Ord(sample_below(r, &b2, 4))), spec.parallel);
    prefix_merge("reflect-veblen", vec![p1, p2])
}

fn tree_labels() -> Vec<OrdTerm> {
    let w = OrdTerm::omega();
    vec![
        OrdTerm::zero(),
        OrdTerm::one(),
        OrdTerm::nat(2),
        w.clone(),
        add(&w, &OrdTerm::one()),
    ]
}

fn random_ord_leaf_tree(rng: &mut ChaCha8Rng, labels: &[OrdTerm], nodes: usize, leaves: u64) -> ValueTree {
    random_tree_over(rng, labels, nodes, false, &mut |r| Value::Ord(OrdTerm::nat(r.gen_range(0..leaves))))
}

fn reflect_left_set(spec: &DomainSpec) -> CheckReport {
    let labels = tree_labels();
    let alpha = add(&OrdTerm::omega(), &OrdTerm::nat(2));
    let space = Domain::trees(alpha, false, Some(OrdTerm::nat(spec.alphabet as u64)));
    let nodes = spec.max_nodes;
    let leaves = spec.alphabet as u64;
    report("reflect-left-set", spec.samples, spec.parallel, |i| {
        let mut rng = spec.rng(i as u64);
        let t = random_ord_leaf_tree(&mut rng, &labels, nodes, leaves);
        let variant = match &t {
            LabTree::Leaf(_) => LeftSetVariant::Leaf,
            LabTree::Node(b, ..) if b.is_zero() && (t.max_inner() == Some(b) || rng.gen_bool(0.5)) => {
                LeftSetVariant::Root
            }
            _ => LeftSetVariant::Shift,
        };
        let f = match left_set_embed(&t, &space, variant) {
            Ok(f) => f,
            Err(e) => return vec![format!("construct {t} {variant:?}: {e}")],
        };
        let draw = |rng: &mut ChaCha8Rng| {
            (0..200).find_map(|_| {
                let x = Value::tree(random_ord_leaf_tree(rng, &labels, nodes, leaves));
                f.domain.contains(&x).then_some(x)
            })
        };
        let (Some(x), Some(y)) = (draw(&mut rng), draw(&mut rng)) else {
            return Vec::new();
        };
        check_reflection(&f, &[(x, y)], false)
            .failures
            .into_iter()
            .map(|m| format!("{variant:?} t={t} {m}"))
            .collect()
    })
}

fn reflect_label_split(spec: &DomainSpec) -> CheckReport {
    let labels = tree_labels();
    let alpha = add(&OrdTerm::omega(), &OrdTerm::nat(2));
    let f = tree_label_split_fn(&alpha, false).expect("positive bound");
    let nodes = spec.max_nodes;
    let pairs = sampled_pairs(spec, 11, |r| {
        Value::tree(random_tree_over(r, &labels, nodes, false, &mut |_| Value::Unit))
    });
    check_reflection(&f, &pairs, spec.parallel)
}

fn reify_descent(spec: &DomainSpec) -> CheckReport {
    let alpha = OrdTerm::nat(spec.alphabet as u64);
    report("reify-descent", spec.samples, spec.parallel, |i| {
        let s = grow_bad_trees(spec, i as u64, spec.max_len);
        let mut r = Reifier::new(RType::b(alpha.clone(), RType::star(RType::E)));
        let mut prev: Option<OrdTerm> = None;
        for (k, t) in s.elements().iter().enumerate() {
            match r.push(lift_tree(t)) {
                Ok(v) => {
                    if let Some(p) = &prev {
                        if cmp_ord(&v, p) != Ok(std::cmp::Ordering::Less) {
                            return vec![format!("step {k} of case {i}: {} !< {} at {t}", print_ord(&v), print_ord(p))];
                        }
                    }
                    prev = Some(v);
                }
                Err(e) => return vec![format!("step {k} of case {i} at {t}: {e}")],
            }
        }
        Vec::new()
    })
}

struct Sampled {
    ty: RType,
    terms: Vec<crate::reify::RTerm>,
}

/// Draws a type and `k` terms such that the first does not embed into the others.
fn sample_excluding(rng: &mut ChaCha8Rng, height: usize, k: usize) -> Option<Sampled> {
    for _ in 0..2000 {
        let ty = random_rtype(rng, 3);
        let Some(a) = random_rterm(rng, &ty, height).filter(|a| a.height() <= height) else {
            continue;
        };
        let mut terms = vec![a];
        for _ in 0..50 {
            if terms.len() == k {
                break;
            }
            if let Some(b) = random_rterm(rng, &ty, height).filter(|b| b.height() <= height) {
                if !leq_rterm(&ty, &terms[0], &b).unwrap_or(true) {
                    terms.push(b);
                }
            }
        }
        if terms.len() == k {
            return Some(Sampled { ty, terms });
        }
    }
    None
}

fn reify_simplify(spec: &DomainSpec) -> CheckReport {
    let height = spec.max_size;
    report("reify-simplify", spec.samples, spec.parallel, |i| {
        let mut rng = spec.rng(i as u64);
        let Some(Sampled { ty, terms }) = sample_excluding(&mut rng, height, 2) else {
            return vec![format!("sampler exhausted at case {i}")];
        };
        let (a, b) = (&terms[0], &terms[1]);
        let mut out = Vec::new();
        match simplify_type(&ty, a) {
            Ok(ta) => check(&mut out, otype(&ta) < otype(&ty), || format!("descent {ty} {a}")),
            Err(err) => out.push(format!("simplify {ty} {a}: {err}")),
        }
        let mut r = Reifier::new(ty.clone());
        match (r.push(a.clone()), r.push(b.clone())) {
            (Ok(one), Ok(two)) => check(&mut out, two < one, || format!("sequence-descent {ty} {a} {b}")),
            (x, y) => out.push(format!("iterate {ty} {a} {b}: {:?} {:?}", x.err(), y.err())),
        }
        out
    })
}

fn reify_e_reflection(spec: &DomainSpec) -> CheckReport {
    let height = spec.max_size;
    report("reify-e-reflection", spec.samples, spec.parallel, |i| {
        let mut rng = spec.rng(i as u64);
        let Some(Sampled { ty, terms }) = sample_excluding(&mut rng, height, 3) else {
            return vec![format!("sampler exhausted at case {i}")];
        };
        let (a, b, c) = (&terms[0], &terms[1], &terms[2]);
        let mut out = Vec::new();
        let ta = match simplify_type(&ty, a) {
            Ok(t) => t,
            Err(err) => return vec![format!("simplify {ty} {a}: {err}")],
        };
        let (eb, ec) = match (e(&ty, a, b), e(&ty, a, c)) {
            (Ok(x), Ok(y)) => (x, y),
            (x, y) => return vec![format!("e {ty} {a} {b} {c}: {:?} {:?}", x.err(), y.err())],
        };
        for (img, src) in [(&eb, b), (&ec, c)] {
            if let Err(err) = check_term(&ta, img) {
                out.push(format!("range {ty} {a} {src}: {err}"));
            }
        }
        let lb = leq_rterm(&ty, b, c).unwrap_or(false);
        let lc = leq_rterm(&ty, c, b).unwrap_or(false);
        if leq_rterm(&ta, &eb, &ec).unwrap_or(false) {
            check(&mut out, lb, || format!("reflect {ty} a={a} b={b} c={c}"));
        }
        if leq_rterm(&ta, &ec, &eb).unwrap_or(false) {
            check(&mut out, lc, || format!("reflect {ty} a={a} b={c} c={b}"));
        }
        out
    })
}

fn motype_laws(spec: &DomainSpec) -> CheckReport {
    let mut fixed = Vec::new();
    for n in 1..=4u64 {
        let g = G(&OrdTerm::nat(n));
        let next = G(&OrdTerm::nat(n + 1));
        check(&mut fixed, next == omega_pow(&omega_pow(&g)), || format!("G({}) recursion", n + 1));
        check(&mut fixed, next == higman_star(&g, false), || format!("G({}) higman", n + 1));
    }
    for n in 0..=5u64 {
        let lhs = H(&OrdTerm::nat(n + 1));
        let rhs = mul(&G(&OrdTerm::nat(n + 1)), &H(&OrdTerm::nat(n)));
        check(&mut fixed, lhs == rhs, || format!("H({}) = G({})*H({n})", n + 1, n + 1));
    }
    let fixed = CheckReport {
        suite: "fixed".into(),
        cases: 10,
        failures: fixed,
        wall: Default::default(),
    };
    let size = spec.max_size;
    let sampled = report("monotone", spec.samples, spec.parallel, |i| {
        let mut rng = spec.rng(i as u64);
        let a = random_ord(&mut rng, size);
        let b = random_ord(&mut rng, size);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let mut out = Vec::new();
        let tag = || format!("{} {}", print_ord(&a), print_ord(&b));
        check(&mut out, F(&a) <= F(&b), || format!("F {}", tag()));
        check(&mut out, G(&a) <= G(&b), || format!("G {}", tag()));
        check(&mut out, H(&a) <= H(&b), || format!("H {}", tag()));
        out
    });
    prefix_merge("motype-laws", vec![fixed, sampled])
}

fn literal_roundtrip(spec: &DomainSpec) -> CheckReport {
    let terms = enum_terms(spec.max_size);
    let words = enum_words(spec.alphabet, spec.max_len);
    let trees = enum_trees(spec.alphabet, spec.max_nodes, false);
    let (nt, nw) = (terms.len(), words.len());
    report("literal-roundtrip", nt + nw + trees.len(), spec.parallel, |i| {
        let mut out = Vec::new();
        if i < nt {
            let a = &terms[i];
            let text = print_ord(a);
            check(&mut out, parse_ord(&text).as_ref() == Ok(a), || format!("ord {text}"));
        } else if i < nt + nw {
            let s: Vec<OrdTerm> = words[i - nt].iter().map(|&x| OrdTerm::nat(x as u64)).collect();
            let text = print_seq(&s);
            check(&mut out, parse_seq(&text).as_ref() == Ok(&s), || format!("seq {text}"));
        } else {
            let t = &trees[i - nt - nw];
            let text = t.to_string();
            check(&mut out, parse_unit_tree(&text).as_ref() == Ok(t), || format!("tree {text}"));
        }
        out
    })
}
