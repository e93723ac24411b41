use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gapord::embed::{bullet_leq_slice, higman_leq_by, seq_to_tree};
use gapord::gap_seq::{leq_g_slice, leq_r_slice, leq_s_slice, leq_w_slice, oracle_leq_slice, GapSeq, GapVariant};
use gapord::gap_tree::leq_tree;
use gapord::harness::gen::{random_rterm, random_rtype, random_unit_tree};
use gapord::motype::{F, G, H};
use gapord::ord::{add, base_decompose, cnf_head, hessenberg, lsub, mk_phi, mul, omega_pow, pow, psi, OrdTerm};
use gapord::reify::{check_term, e, leq_rterm, otype, simplify_type, Reifier, RTerm, RType};
use gapord::text::{parse_ord, print_ord};

fn ord_strategy() -> impl Strategy<Value = OrdTerm> {
    let leaf = (0u64..4).prop_map(OrdTerm::nat);
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| add(&a, &b)),
            inner.clone().prop_map(|a| omega_pow(&a)),
            ((0u64..3).prop_map(OrdTerm::nat), inner).prop_map(|(g, d)| mk_phi(&g, &d)),
        ]
    })
}

fn positive(a: OrdTerm) -> OrdTerm {
    if a.is_zero() {
        OrdTerm::one()
    } else {
        a
    }
}

fn word(alphabet: u32, len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0..alphabet, 0..=len)
}

proptest! {
    #[test]
    fn ord_compare_is_a_total_order(a in ord_strategy(), b in ord_strategy(), c in ord_strategy()) {
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a == b, a.cmp(&b).is_eq());
        if a < b && b < c {
            prop_assert!(a < c);
        }
    }

    #[test]
    fn ord_addition_laws(a in ord_strategy(), b in ord_strategy(), c in ord_strategy()) {
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        if a < b {
            prop_assert!(add(&c, &a) < add(&c, &b));
        }
        if add(&c, &a) <= add(&c, &b) {
            prop_assert!(a <= b);
        }
        if c <= a {
            prop_assert_eq!(add(&c, &lsub(&c, &a)), a.clone());
        }
    }

    #[test]
    fn ord_left_subtraction_cancels(beta in ord_strategy(), l in ord_strategy(), r in ord_strategy()) {
        if beta <= l && beta <= r && lsub(&beta, &l) <= lsub(&beta, &r) {
            prop_assert!(l <= r);
        }
    }

    #[test]
    fn hessenberg_laws(x in ord_strategy(), y in ord_strategy(), z in ord_strategy()) {
        prop_assert_eq!(hessenberg(&x, &y), hessenberg(&y, &x));
        prop_assert_eq!(hessenberg(&hessenberg(&x, &y), &z), hessenberg(&x, &hessenberg(&y, &z)));
        if x < z {
            prop_assert!(hessenberg(&x, &y) < hessenberg(&z, &y));
        }
        let w = omega_pow(&z);
        if x < w && y < w {
            prop_assert!(hessenberg(&x, &y) < w);
        }
    }

    #[test]
    fn psi_dominates_and_closes(a in ord_strategy(), b in ord_strategy(), s in ord_strategy(), t in ord_strategy()) {
        let (a, b) = (positive(a), positive(b));
        let p = psi(&a, &b).unwrap();
        prop_assert!(a < p && b < p);
        if s < p && t < p {
            prop_assert!(add(&s, &t) < p);
            prop_assert!(mul(&s, &t) < p);
            prop_assert!(pow(&s, &t) < p);
        }
    }

    #[test]
    fn normal_forms_reconstruct(a in ord_strategy(), base in 2u64..5) {
        if let Ok((g, rest)) = cnf_head(&a) {
            prop_assert_eq!(add(&omega_pow(&g), &rest), a.clone());
            let base = OrdTerm::nat(base);
            let (beta, kappa, lambda) = base_decompose(&a, &base).unwrap();
            prop_assert_eq!(add(&mul(&pow(&base, &beta), &kappa), &lambda), a);
        }
    }

    #[test]
    fn ord_literals_round_trip(a in ord_strategy()) {
        let text = print_ord(&a);
        prop_assert_eq!(parse_ord(&text).unwrap(), a);
    }

    #[test]
    fn order_types_are_monotone(a in ord_strategy(), b in ord_strategy()) {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(F(&a) <= F(&b));
        prop_assert!(G(&a) <= G(&b));
        prop_assert!(H(&a) <= H(&b));
    }

    #[test]
    fn gap_orders_agree_with_oracle(s in word(4, 6), t in word(4, 6)) {
        let w = leq_w_slice(&s, &t);
        prop_assert_eq!(w, leq_g_slice(&s, &t));
        prop_assert_eq!(w, oracle_leq_slice(&s, &t, GapVariant::Weak));
        let strong = leq_s_slice(&s, &t);
        prop_assert_eq!(strong, leq_r_slice(&s, &t));
        prop_assert_eq!(strong, oracle_leq_slice(&s, &t, GapVariant::StrongRealizer));
    }

    #[test]
    fn weak_order_is_strong_below_a_common_head(s in word(4, 6), t in word(4, 6), beta in 0u32..4, lift in 0u32..4) {
        let w = leq_w_slice(&s, &t);
        let zs: Vec<u32> = [0].iter().chain(&s).copied().collect();
        let zt: Vec<u32> = [0].iter().chain(&t).copied().collect();
        prop_assert_eq!(w, leq_s_slice(&zs, &zt));
        if t.iter().all(|&m| beta <= m) {
            let bs: Vec<u32> = [beta].iter().chain(&s).copied().collect();
            let gt: Vec<u32> = [beta + lift].iter().chain(&t).copied().collect();
            prop_assert_eq!(w, leq_s_slice(&bs, &gt));
        }
    }

    #[test]
    fn strong_order_is_stable_under_prefixes(u in word(4, 3), s in word(4, 5), t in word(4, 5)) {
        let us: Vec<u32> = u.iter().chain(&s).copied().collect();
        let ut: Vec<u32> = u.iter().chain(&t).copied().collect();
        if leq_s_slice(&s, &t) {
            prop_assert!(leq_s_slice(&us, &ut));
        }
        if leq_w_slice(&us, &ut) {
            prop_assert!(leq_w_slice(&s, &t));
        }
    }

    #[test]
    fn weak_order_survives_padding(s in word(4, 5), l in word(4, 3), t in word(4, 5), r in word(4, 3)) {
        if leq_w_slice(&s, &t) {
            let padded: Vec<u32> = l.iter().chain(&t).chain(&r).copied().collect();
            prop_assert!(leq_w_slice(&s, &padded));
        }
    }

    #[test]
    fn seq_to_tree_reflects(s in prop::collection::vec(0u64..3, 0..=6), t in prop::collection::vec(0u64..3, 0..=6)) {
        let (gs, gt) = (GapSeq::from_nats(&s, 3).unwrap(), GapSeq::from_nats(&t, 3).unwrap());
        let (ts, tt) = (seq_to_tree(&gs), seq_to_tree(&gt));
        prop_assert!(ts.is_valid(true));
        if leq_tree(&ts, &tt) {
            prop_assert!(leq_w_slice(gs.members(), gt.members()));
        }
    }

    #[test]
    fn bullet_order_extends_higman(s in word(3, 6), t in word(3, 6), u in word(3, 6)) {
        if higman_leq_by(&s, &t, |x, y| x <= y) {
            prop_assert!(bullet_leq_slice(&s, &t));
        }
        if bullet_leq_slice(&s, &t) && bullet_leq_slice(&t, &u) {
            prop_assert!(bullet_leq_slice(&s, &u));
        }
    }

    #[test]
    fn tree_order_is_reflexive_and_subtree_closed(seed in any::<u64>(), left_strict in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = random_unit_tree(&mut rng, 3, 11, left_strict);
        prop_assert!(leq_tree(&t, &t));
        for sub in t.subtrees() {
            prop_assert!(sub.is_valid(left_strict));
        }
    }

    #[test]
    fn tree_order_is_transitive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ts: Vec<_> = (0..3).map(|_| random_unit_tree(&mut rng, 2, 7, false)).collect();
        if leq_tree(&ts[0], &ts[1]) && leq_tree(&ts[1], &ts[2]) {
            prop_assert!(leq_tree(&ts[0], &ts[2]));
        }
    }
}

fn sample_term(rng: &mut ChaCha8Rng, ty: &RType) -> Option<RTerm> {
    (0..20).find_map(|_| random_rterm(rng, ty, 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn simplification_lowers_the_measure(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ty = random_rtype(&mut rng, 3);
        if let Some(a) = sample_term(&mut rng, &ty) {
            prop_assert!(otype(&simplify_type(&ty, &a).unwrap()) < otype(&ty));
        }
    }

    #[test]
    fn e_maps_reflect_and_land_in_the_simplified_type(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ty = random_rtype(&mut rng, 3);
        let terms: Vec<RTerm> = (0..3).filter_map(|_| sample_term(&mut rng, &ty)).collect();
        prop_assume!(terms.len() == 3);
        let (a, b, c) = (&terms[0], &terms[1], &terms[2]);
        prop_assume!(!leq_rterm(&ty, a, b).unwrap() && !leq_rterm(&ty, a, c).unwrap());
        let ta = simplify_type(&ty, a).unwrap();
        let (eb, ec) = (e(&ty, a, b).unwrap(), e(&ty, a, c).unwrap());
        prop_assert!(check_term(&ta, &eb).is_ok() && check_term(&ta, &ec).is_ok());
        if leq_rterm(&ta, &eb, &ec).unwrap() {
            prop_assert!(leq_rterm(&ty, b, c).unwrap());
        }
    }

    #[test]
    fn bad_extensions_descend(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ty = random_rtype(&mut rng, 3);
        let mut r = Reifier::new(ty.clone());
        let mut prev = otype(&ty);
        let mut kept: Vec<RTerm> = Vec::new();
        for _ in 0..6 {
            let Some(x) = sample_term(&mut rng, &ty) else { break };
            if kept.iter().any(|p| leq_rterm(&ty, p, &x).unwrap()) {
                continue;
            }
            let v = r.push(x.clone()).unwrap();
            prop_assert!(v < prev);
            prev = v;
            kept.push(x);
        }
    }
}
