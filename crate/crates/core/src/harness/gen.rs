//! Enumerators and seeded random generators for every carrier.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::gap_tree::{LabTree, UnitTree};
use crate::ord::{add, cnf_head, mk_phi, omega_pow, OrdTerm, Principal};
use crate::reify::{RTerm, RType};

/// All words over `0..alphabet` of length at most `max_len`, length-lexicographic.
pub fn enum_words(alphabet: u32, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet as usize);
        for w in &layer {
            for a in 0..alphabet {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn trees_exact(alphabet: u32, nodes: usize, lo: u32, left_strict: bool) -> Vec<LabTree<()>> {
    if nodes == 1 {
        return vec![LabTree::leaf(())];
    }
    if nodes.is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for b in lo..alphabet {
        let left_lo = if left_strict { b + 1 } else { b };
        for l in (1..nodes - 1).step_by(2) {
            let r = nodes - 1 - l;
            let lefts = trees_exact(alphabet, l, left_lo, left_strict);
            let rights = trees_exact(alphabet, r, b, left_strict);
            for tl in &lefts {
                for tr in &rights {
                    out.push(LabTree::node_unchecked(OrdTerm::nat(b as u64), tl.clone(), tr.clone()));
                }
            }
        }
    }
    out
}

/// All valid trees with inner labels below `alphabet` and at most `max_nodes` nodes, by size.
pub fn enum_trees(alphabet: u32, max_nodes: usize, left_strict: bool) -> Vec<UnitTree> {
    (1..=max_nodes)
        .flat_map(|n| trees_exact(alphabet, n, 0, left_strict))
        .collect()
}

/// Size of a term counting one per φ-symbol, first arguments not counted.
pub fn phi_size(a: &OrdTerm) -> usize {
    a.summands().iter().map(|p| 1 + phi_size(p.second())).sum()
}

/// All terms below `φ(2, 0)` with [`phi_size`] at most `max`.
pub fn enum_phi2_terms(max: usize) -> Vec<OrdTerm> {
    let mut principals: Vec<Vec<Principal>> = vec![Vec::new(); max + 1];
    let mut terms: Vec<Vec<OrdTerm>> = vec![Vec::new(); max + 1];
    terms[0].push(OrdTerm::zero());
    for n in 1..=max {
        let mut ps = Vec::new();
        for d in &terms[n - 1] {
            for g in [OrdTerm::zero(), OrdTerm::one()] {
                if let Ok(p) = Principal::new(g, d.clone()) {
                    ps.push(p);
                }
            }
        }
        principals[n] = ps;
        let mut ts = Vec::new();
        for k in 1..=n {
            for p in &principals[k] {
                for rest in &terms[n - k] {
                    let mut summands = vec![p.clone()];
                    summands.extend(rest.summands().iter().cloned());
                    if let Ok(t) = OrdTerm::from_summands(summands) {
                        ts.push(t);
                    }
                }
            }
        }
        ts.sort();
        ts.dedup();
        terms[n] = ts;
    }
    let mut all: Vec<OrdTerm> = terms.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    all
}

/// All normal-form terms with [`OrdTerm::size`] at most `max`, ascending.
pub fn enum_terms(max: usize) -> Vec<OrdTerm> {
    let mut principals: Vec<Vec<Principal>> = vec![Vec::new(); max + 1];
    let mut terms: Vec<Vec<OrdTerm>> = vec![Vec::new(); max + 1];
    terms[0].push(OrdTerm::zero());
    for n in 1..=max {
        for sg in 0..n {
            for g in &terms[sg] {
                for d in &terms[n - 1 - sg] {
                    if let Ok(p) = Principal::new(g.clone(), d.clone()) {
                        principals[n].push(p);
                    }
                }
            }
        }
        let mut ts = Vec::new();
        for k in 1..=n {
            for p in &principals[k] {
                for rest in &terms[n - k] {
                    let mut summands = vec![p.clone()];
                    summands.extend(rest.summands().iter().cloned());
                    if let Ok(t) = OrdTerm::from_summands(summands) {
                        ts.push(t);
                    }
                }
            }
        }
        terms[n] = ts;
    }
    let mut all: Vec<OrdTerm> = terms.into_iter().flatten().collect();
    all.sort();
    all
}

pub fn random_word(rng: &mut ChaCha8Rng, alphabet: u32, max_len: usize) -> Vec<u32> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..alphabet)).collect()
}

/// A random valid tree with labels drawn from `labels` (sorted ascending) and at most `max_nodes` nodes.
pub fn random_tree_over<L: Clone>(
    rng: &mut ChaCha8Rng,
    labels: &[OrdTerm],
    max_nodes: usize,
    left_strict: bool,
    leaf: &mut impl FnMut(&mut ChaCha8Rng) -> L,
) -> LabTree<L> {
    let inner = rng.gen_range(0..=max_nodes.saturating_sub(1) / 2);
    build_tree(rng, labels, 0, inner, left_strict, leaf)
}

fn build_tree<L: Clone>(
    rng: &mut ChaCha8Rng,
    labels: &[OrdTerm],
    lo: usize,
    inner: usize,
    left_strict: bool,
    leaf: &mut impl FnMut(&mut ChaCha8Rng) -> L,
) -> LabTree<L> {
    if inner == 0 || lo >= labels.len() {
        return LabTree::leaf(leaf(rng));
    }
    let idx = rng.gen_range(lo..labels.len().min(lo + 2));
    let left_inner = rng.gen_range(0..inner);
    let left_lo = if left_strict { idx + 1 } else { idx };
    let l = build_tree(rng, labels, left_lo, left_inner, left_strict, leaf);
    let r = build_tree(rng, labels, idx, inner - 1 - left_inner, left_strict, leaf);
    LabTree::node_unchecked(labels[idx].clone(), l, r)
}

pub fn random_unit_tree(rng: &mut ChaCha8Rng, alphabet: u32, max_nodes: usize, left_strict: bool) -> UnitTree {
    let labels: Vec<OrdTerm> = (0..alphabet as u64).map(OrdTerm::nat).collect();
    random_tree_over(rng, &labels, max_nodes, left_strict, &mut |_| ())
}

/// A random normal-form term whose φ-symbols number at most `max_size`.
pub fn random_ord(rng: &mut ChaCha8Rng, max_size: usize) -> OrdTerm {
    loop {
        let t = random_ord_raw(rng, max_size);
        if t.size() <= max_size {
            return t;
        }
    }
}

fn random_ord_raw(rng: &mut ChaCha8Rng, budget: usize) -> OrdTerm {
    if budget == 0 {
        return OrdTerm::zero();
    }
    match rng.gen_range(0..6) {
        0 => OrdTerm::nat(rng.gen_range(0..=budget.min(4) as u64)),
        1 | 2 => {
            let k = rng.gen_range(1..=budget);
            add(&random_ord_raw(rng, k / 2), &random_ord_raw(rng, budget - k / 2 - 1))
        }
        3 => omega_pow(&random_ord_raw(rng, budget - 1)),
        _ => {
            let split = rng.gen_range(0..budget);
            let g = random_ord_raw(rng, split / 2);
            let d = random_ord_raw(rng, budget - 1 - split / 2);
            mk_phi(&g, &d)
        }
    }
}

fn sample_power(rng: &mut ChaCha8Rng, exp_bound: &OrdTerm, depth: usize) -> OrdTerm {
    let mut exps: Vec<OrdTerm> = (0..rng.gen_range(0..=3))
        .map(|_| sample_below(rng, exp_bound, depth))
        .collect();
    exps.sort_by(|a, b| b.cmp(a));
    exps.iter().fold(OrdTerm::zero(), |acc, e| {
        let c = rng.gen_range(1..=3);
        (0..c).fold(acc, |a, _| add(&a, &omega_pow(e)))
    })
}

/// A random ordinal strictly below a positive `bound`.
pub fn sample_below(rng: &mut ChaCha8Rng, bound: &OrdTerm, depth: usize) -> OrdTerm {
    if let Some(n) = bound.to_nat() {
        return OrdTerm::nat(rng.gen_range(0..n.max(1)));
    }
    if depth == 0 {
        return OrdTerm::nat(rng.gen_range(0..5));
    }
    let (e, _) = cnf_head(bound).expect("infinite bound is positive");
    if &e == bound {
        for _ in 0..20 {
            let t = random_ord(rng, 6);
            if &t < bound {
                return t;
            }
        }
        return OrdTerm::nat(rng.gen_range(0..5));
    }
    for _ in 0..4 {
        let x = sample_power(rng, &e.succ(), depth - 1);
        if &x < bound {
            return x;
        }
    }
    sample_power(rng, &e, depth - 1)
}

pub fn random_rtype(rng: &mut ChaCha8Rng, depth: usize) -> RType {
    let bound = |rng: &mut ChaCha8Rng| OrdTerm::nat(rng.gen_range(0..=3));
    let leafy = depth == 0 || rng.gen_bool(0.3);
    if leafy {
        return if rng.gen_bool(0.15) { RType::E } else { RType::L(bound(rng)) };
    }
    match rng.gen_range(0..4) {
        0 => RType::b(bound(rng), random_rtype(rng, depth - 1)),
        1 => RType::sum(random_rtype(rng, depth - 1), random_rtype(rng, depth - 1)),
        2 => RType::prod(random_rtype(rng, depth - 1), random_rtype(rng, depth - 1)),
        _ => RType::star(random_rtype(rng, depth - 1)),
    }
}

/// A random term of `ty` of height at most `height`, if one is found.
pub fn random_rterm(rng: &mut ChaCha8Rng, ty: &RType, height: usize) -> Option<RTerm> {
    match ty {
        RType::E => None,
        RType::L(b) => {
            let n = b.to_nat().unwrap_or(4);
            (n > 0).then(|| RTerm::Ord(OrdTerm::nat(rng.gen_range(0..n))))
        }
        RType::B(b, leaf) => {
            if height == 0 {
                return None;
            }
            let labels: Vec<OrdTerm> = (0..b.to_nat().unwrap_or(3)).map(OrdTerm::nat).collect();
            let inner = rng.gen_range(0..=height.saturating_sub(1).min(3));
            let mut failed = false;
            let t = build_tree(rng, &labels, 0, inner, false, &mut |r| {
                random_rterm(r, leaf, height.saturating_sub(inner + 1)).unwrap_or_else(|| {
                    failed = true;
                    RTerm::Seq(Vec::new())
                })
            });
            (!failed).then(|| RTerm::tree(t))
        }
        RType::Sum(a, b) => {
            if height == 0 {
                return None;
            }
            let mut order = [0, 1];
            order.shuffle(rng);
            order.iter().find_map(|&i| {
                if i == 0 {
                    random_rterm(rng, a, height - 1).map(RTerm::inj0)
                } else {
                    random_rterm(rng, b, height - 1).map(RTerm::inj1)
                }
            })
        }
        RType::Prod(a, b) => {
            if height == 0 {
                return None;
            }
            let x = random_rterm(rng, a, (height - 1) / 2)?;
            let y = random_rterm(rng, b, (height - 1) / 2)?;
            Some(RTerm::pair(x, y))
        }
        RType::Star(a) => {
            if height == 0 {
                return None;
            }
            let len = rng.gen_range(0..=3);
            let xs: Vec<RTerm> = (0..len).filter_map(|_| random_rterm(rng, a, height - 1)).collect();
            Some(RTerm::Seq(xs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enum_words(3, 4).len(), 121);
        assert_eq!(enum_words(5, 0), vec![Vec::<u32>::new()]);
        assert_eq!(enum_words(1, 2), vec![vec![], vec![0], vec![0, 0]]);
        assert_eq!(enum_trees(1, 1, false).len(), 1);
        assert_eq!(enum_trees(1, 3, false).len(), 2);
        let strict: Vec<String> = enum_trees(2, 3, true).iter().map(|t| t.to_string()).collect();
        assert_eq!(strict, vec![".", "(0 . .)", "(1 . .)"]);
    }

    #[test]
    fn samples_stay_below() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let bound = omega_pow(&omega_pow(&OrdTerm::nat(2)));
        for _ in 0..200 {
            assert!(sample_below(&mut rng, &bound, 4) < bound);
        }
        for _ in 0..200 {
            let t = random_ord(&mut rng, 8);
            assert!(t.size() <= 8);
            t.validate().unwrap();
        }
    }

    #[test]
    fn random_terms_inhabit() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let ty = random_rtype(&mut rng, 3);
            if let Some(a) = random_rterm(&mut rng, &ty, 6) {
                crate::reify::check_term(&ty, &a).unwrap();
            }
        }
    }
}
