//! Types naming partial orders, their terms, the simplification `A(a)`, the
//! quasi-embeddings `e_A`, the ordinal measure `o`, and the reification of bad
//! sequences of trees.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gap_tree::{leq_tree_by, LabTree, Leq, UnitTree};
use crate::ord::{add, hessenberg, mk_phi, OrdTerm};
use crate::embed::higman_leq_by;

/// A name for a partial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum RType {
    /// The empty order.
    E,
    /// The ordinals below the bound.
    L(OrdTerm),
    /// Trees with inner labels below the bound and leaves of the given type.
    B(OrdTerm, Arc<RType>),
    Sum(Arc<RType>, Arc<RType>),
    Prod(Arc<RType>, Arc<RType>),
    /// Finite sequences under Higman's order.
    Star(Arc<RType>),
}

impl RType {
    pub fn b(bound: OrdTerm, leaf: RType) -> Self {
        RType::B(bound, Arc::new(leaf))
    }

    pub fn sum(a: RType, b: RType) -> Self {
        RType::Sum(Arc::new(a), Arc::new(b))
    }

    pub fn prod(a: RType, b: RType) -> Self {
        RType::Prod(Arc::new(a), Arc::new(b))
    }

    pub fn star(a: RType) -> Self {
        RType::Star(Arc::new(a))
    }

    /// Number of constructors.
    pub fn size(&self) -> usize {
        match self {
            RType::E | RType::L(_) => 1,
            RType::B(_, a) | RType::Star(a) => 1 + a.size(),
            RType::Sum(a, b) | RType::Prod(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl fmt::Display for RType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RType::E => f.write_str("E"),
            RType::L(b) => write!(f, "L({b})"),
            RType::B(b, a) => write!(f, "B({b},{a})"),
            RType::Sum(a, b) => write!(f, "({a}+{b})"),
            RType::Prod(a, b) => write!(f, "({a}x{b})"),
            RType::Star(a) => write!(f, "{a}*"),
        }
    }
}

impl fmt::Debug for RType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A term of some [`RType`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum RTerm {
    Ord(OrdTerm),
    Tree(Box<LabTree<RTerm>>),
    Inj0(Box<RTerm>),
    Inj1(Box<RTerm>),
    Pair(Box<RTerm>, Box<RTerm>),
    Seq(Vec<RTerm>),
}

impl RTerm {
    pub fn tree(t: LabTree<RTerm>) -> Self {
        RTerm::Tree(Box::new(t))
    }

    pub fn inj0(a: RTerm) -> Self {
        RTerm::Inj0(Box::new(a))
    }

    pub fn inj1(a: RTerm) -> Self {
        RTerm::Inj1(Box::new(a))
    }

    pub fn pair(a: RTerm, b: RTerm) -> Self {
        RTerm::Pair(Box::new(a), Box::new(b))
    }

    pub fn height(&self) -> usize {
        match self {
            RTerm::Ord(_) => 0,
            RTerm::Tree(t) => tree_height(t),
            RTerm::Inj0(a) | RTerm::Inj1(a) => a.height() + 1,
            RTerm::Pair(a, b) => a.height() + b.height() + 1,
            RTerm::Seq(xs) => xs.iter().map(RTerm::height).max().unwrap_or(0) + 1,
        }
    }
}

fn tree_height(t: &LabTree<RTerm>) -> usize {
    match t {
        LabTree::Leaf(a) => a.height() + 1,
        LabTree::Node(_, l, r) => tree_height(l) + tree_height(r) + 1,
    }
}

impl fmt::Display for RTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RTerm::Ord(a) => write!(f, "{a}"),
            RTerm::Tree(t) => write!(f, "{t}"),
            RTerm::Inj0(a) => write!(f, "i0({a})"),
            RTerm::Inj1(a) => write!(f, "i1({a})"),
            RTerm::Pair(a, b) => write!(f, "<{a}, {b}>"),
            RTerm::Seq(xs) => {
                let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]", parts.join(","))
            }
        }
    }
}

impl fmt::Debug for RTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl crate::text::LeafLiteral for RTerm {
    fn literal(&self) -> Option<String> {
        Some(self.to_string())
    }
}

/// Structural comparison of two terms assumed to share a type.
fn leq_raw(a: &RTerm, b: &RTerm) -> bool {
    match (a, b) {
        (RTerm::Ord(x), RTerm::Ord(y)) => x <= y,
        (RTerm::Tree(s), RTerm::Tree(t)) => leq_tree_by(s, t, &leq_raw),
        (RTerm::Inj0(x), RTerm::Inj0(y)) | (RTerm::Inj1(x), RTerm::Inj1(y)) => leq_raw(x, y),
        (RTerm::Pair(a1, a2), RTerm::Pair(b1, b2)) => leq_raw(a1, b1) && leq_raw(a2, b2),
        (RTerm::Seq(s), RTerm::Seq(t)) => higman_leq_by(s, t, leq_raw),
        _ => false,
    }
}

impl Leq for RTerm {
    fn leq(&self, other: &Self) -> bool {
        leq_raw(self, other)
    }
}

fn mismatch(ty: &RType, a: &RTerm) -> Error {
    Error::TypeMismatch(format!("{a} is not a term of {ty}"))
}

/// Checks that `a` is a term of `ty`.
pub fn check_term(ty: &RType, a: &RTerm) -> Result<()> {
    match (ty, a) {
        (RType::L(b), RTerm::Ord(g)) if g < b => Ok(()),
        (RType::B(b, leaf), RTerm::Tree(t)) => {
            t.validate(false)?;
            check_tree(b, leaf, t).ok_or_else(|| mismatch(ty, a))?
        }
        (RType::Sum(x, _), RTerm::Inj0(v)) => check_term(x, v),
        (RType::Sum(_, y), RTerm::Inj1(v)) => check_term(y, v),
        (RType::Prod(x, y), RTerm::Pair(u, v)) => {
            check_term(x, u)?;
            check_term(y, v)
        }
        (RType::Star(x), RTerm::Seq(xs)) => xs.iter().try_for_each(|v| check_term(x, v)),
        _ => Err(mismatch(ty, a)),
    }
}

fn check_tree(bound: &OrdTerm, leaf: &RType, t: &LabTree<RTerm>) -> Option<Result<()>> {
    match t {
        LabTree::Leaf(a) => Some(check_term(leaf, a)),
        LabTree::Node(g, l, r) => {
            if g >= bound {
                return None;
            }
            match check_tree(bound, leaf, l)? {
                Ok(()) => check_tree(bound, leaf, r),
                err => Some(err),
            }
        }
    }
}

/// The order of `ty` on two of its terms.
pub fn leq_rterm(ty: &RType, a: &RTerm, b: &RTerm) -> Result<bool> {
    check_term(ty, a)?;
    check_term(ty, b)?;
    Ok(leq_raw(a, b))
}

fn simplify_raw(ty: &RType, a: &RTerm) -> Result<RType> {
    match (ty, a) {
        (RType::L(_), RTerm::Ord(g)) => Ok(RType::L(g.clone())),
        (RType::B(beta, leaf), RTerm::Tree(t)) => match &**t {
            LabTree::Leaf(x) => Ok(RType::b(beta.clone(), simplify_raw(leaf, x)?)),
            LabTree::Node(g, tl, tr) => {
                let left = simplify_raw(ty, &RTerm::tree((**tl).clone()))?;
                let right = simplify_raw(ty, &RTerm::tree((**tr).clone()))?;
                let lb = Arc::new(RType::L(beta.clone()));
                let parts = RType::Sum(
                    leaf.clone(),
                    Arc::new(RType::sum(
                        RType::Prod(lb.clone(), Arc::new(left)),
                        RType::Prod(lb, Arc::new(right)),
                    )),
                );
                Ok(RType::b(g.clone(), RType::star(parts)))
            }
        },
        (RType::Sum(x, y), RTerm::Inj0(v)) => Ok(RType::Sum(Arc::new(simplify_raw(x, v)?), y.clone())),
        (RType::Sum(x, y), RTerm::Inj1(v)) => Ok(RType::Sum(x.clone(), Arc::new(simplify_raw(y, v)?))),
        (RType::Prod(x, y), RTerm::Pair(u, v)) => Ok(RType::sum(
            RType::Prod(Arc::new(simplify_raw(x, u)?), y.clone()),
            RType::Prod(x.clone(), Arc::new(simplify_raw(y, v)?)),
        )),
        (RType::Star(x), RTerm::Seq(xs)) => match xs.split_first() {
            None => Ok(RType::E),
            Some((head, rest)) => {
                let xa = Arc::new(RType::star(simplify_raw(x, head)?));
                let tail = simplify_raw(ty, &RTerm::Seq(rest.to_vec()))?;
                Ok(RType::Sum(
                    xa.clone(),
                    Arc::new(RType::Prod(xa, Arc::new(RType::Prod(x.clone(), Arc::new(tail))))),
                ))
            }
        },
        _ => Err(mismatch(ty, a)),
    }
}

/// The type `A(a)` into which the terms `b` of `A` with `a ≰ b` embed.
pub fn simplify_type(ty: &RType, a: &RTerm) -> Result<RType> {
    check_term(ty, a)?;
    simplify_raw(ty, a)
}

fn e_leaf(leaf_ty: &RType, x: &RTerm, t: &LabTree<RTerm>) -> Result<LabTree<RTerm>> {
    match t {
        LabTree::Leaf(y) => Ok(LabTree::leaf(e_raw(leaf_ty, x, y)?)),
        LabTree::Node(g, l, r) => Ok(LabTree::node_unchecked(
            g.clone(),
            e_leaf(leaf_ty, x, l)?,
            e_leaf(leaf_ty, x, r)?,
        )),
    }
}

fn e_spine(ty: &RType, sl: &LabTree<RTerm>, sr: &LabTree<RTerm>, t: &LabTree<RTerm>, out: &mut Vec<RTerm>) -> Result<()> {
    match t {
        LabTree::Leaf(y) => {
            out.push(RTerm::inj0(y.clone()));
            Ok(())
        }
        LabTree::Node(d, tl, tr) => {
            let d = RTerm::Ord(d.clone());
            let as_term = |x: &LabTree<RTerm>| RTerm::tree(x.clone());
            if !leq_tree_by(sl, tl, &leq_raw) {
                let inner = e_raw(ty, &as_term(sl), &as_term(tl))?;
                out.push(RTerm::inj1(RTerm::inj0(RTerm::pair(d, inner))));
                e_spine(ty, sl, sr, tr, out)
            } else {
                let inner = e_raw(ty, &as_term(sr), &as_term(tr))?;
                out.push(RTerm::inj1(RTerm::inj1(RTerm::pair(d, inner))));
                e_spine(ty, sl, sr, tl, out)
            }
        }
    }
}

fn e_node(
    ty: &RType,
    g: &OrdTerm,
    sl: &LabTree<RTerm>,
    sr: &LabTree<RTerm>,
    t: &LabTree<RTerm>,
) -> Result<LabTree<RTerm>> {
    match t {
        LabTree::Node(d, tl, tr) if d < g => Ok(LabTree::node_unchecked(
            d.clone(),
            e_node(ty, g, sl, sr, tl)?,
            e_node(ty, g, sl, sr, tr)?,
        )),
        _ => {
            let mut out = Vec::new();
            e_spine(ty, sl, sr, t, &mut out)?;
            Ok(LabTree::leaf(RTerm::Seq(out)))
        }
    }
}

fn e_raw(ty: &RType, a: &RTerm, b: &RTerm) -> Result<RTerm> {
    match (ty, a, b) {
        (RType::L(_), RTerm::Ord(_), RTerm::Ord(_)) => Ok(b.clone()),
        (RType::B(_, leaf), RTerm::Tree(s), RTerm::Tree(t)) => match &**s {
            LabTree::Leaf(x) => Ok(RTerm::tree(e_leaf(leaf, x, t)?)),
            LabTree::Node(g, sl, sr) => Ok(RTerm::tree(e_node(ty, g, sl, sr, t)?)),
        },
        (RType::Sum(x, _), RTerm::Inj0(u), RTerm::Inj0(v)) => Ok(RTerm::inj0(e_raw(x, u, v)?)),
        (RType::Sum(_, y), RTerm::Inj1(u), RTerm::Inj1(v)) => Ok(RTerm::inj1(e_raw(y, u, v)?)),
        (RType::Sum(..), RTerm::Inj0(_), RTerm::Inj1(v)) => Ok(RTerm::inj1((**v).clone())),
        (RType::Sum(..), RTerm::Inj1(_), RTerm::Inj0(v)) => Ok(RTerm::inj0((**v).clone())),
        (RType::Prod(x, y), RTerm::Pair(a1, a2), RTerm::Pair(b1, b2)) => {
            if !leq_raw(a1, b1) {
                Ok(RTerm::inj0(RTerm::pair(e_raw(x, a1, b1)?, (**b2).clone())))
            } else {
                Ok(RTerm::inj1(RTerm::pair((**b1).clone(), e_raw(y, a2, b2)?)))
            }
        }
        (RType::Star(x), RTerm::Seq(xs), RTerm::Seq(ys)) => {
            let (head, rest) = xs.split_first().ok_or(Error::DominancePreconditionViolated)?;
            let lowered = |zs: &[RTerm]| -> Result<RTerm> {
                Ok(RTerm::Seq(zs.iter().map(|z| e_raw(x, head, z)).collect::<Result<_>>()?))
            };
            match ys.iter().position(|y| leq_raw(head, y)) {
                None => Ok(RTerm::inj0(lowered(ys)?)),
                Some(k) => {
                    let tail = e_raw(ty, &RTerm::Seq(rest.to_vec()), &RTerm::Seq(ys[k + 1..].to_vec()))?;
                    Ok(RTerm::inj1(RTerm::pair(
                        lowered(&ys[..k])?,
                        RTerm::pair(ys[k].clone(), tail),
                    )))
                }
            }
        }
        _ => Err(mismatch(ty, a)),
    }
}

/// `e_A(a, b)`, a term of `A(a)`, defined when `a ≰ b`.
pub fn e(ty: &RType, a: &RTerm, b: &RTerm) -> Result<RTerm> {
    if leq_rterm(ty, a, b)? {
        return Err(Error::DominancePreconditionViolated);
    }
    e_raw(ty, a, b)
}

/// The ordinal measure of a type.
pub fn otype(ty: &RType) -> OrdTerm {
    otype_memo(ty, &mut HashMap::new())
}

/// Shared subtypes are measured once, keyed by address.
fn otype_memo(ty: &RType, memo: &mut HashMap<*const RType, OrdTerm>) -> OrdTerm {
    let key = ty as *const RType;
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let two_plus = |b: &OrdTerm| add(&OrdTerm::nat(2), b);
    let v = match ty {
        RType::E => OrdTerm::zero(),
        RType::L(b) => mk_phi(&two_plus(b), &OrdTerm::zero()),
        RType::B(b, a) => mk_phi(&two_plus(b), &otype_memo(a, memo).succ()),
        RType::Sum(a, b) => hessenberg(&otype_memo(a, memo), &otype_memo(b, memo)),
        RType::Prod(a, b) => mk_phi(&OrdTerm::zero(), &hessenberg(&otype_memo(a, memo), &otype_memo(b, memo))),
        RType::Star(a) => mk_phi(&OrdTerm::one(), &otype_memo(a, memo).succ()),
    };
    memo.insert(key, v.clone());
    v
}

/// A nonempty finite sequence with `s_i ≰ s_j` for all `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BadSeq<T> {
    elements: Vec<T>,
}

impl<T> BadSeq<T> {
    pub fn new(elements: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::PreconditionViolated("a bad sequence is nonempty".into()));
        }
        check_bad(&elements, leq)?;
        Ok(BadSeq { elements })
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }
}

/// The first pair `i < j` with `s_i ≤ s_j`, as an error.
pub fn check_bad<T>(s: &[T], leq: impl Fn(&T, &T) -> bool) -> Result<()> {
    for j in 0..s.len() {
        for i in 0..j {
            if leq(&s[i], &s[j]) {
                return Err(Error::NotBad(i, j));
            }
        }
    }
    Ok(())
}

/// Incremental `A[s]`: each pushed element is sent through the `e`-maps of
/// the earlier heads and then simplifies the current type.
#[derive(Clone, Debug)]
pub struct Reifier {
    originals: Vec<RTerm>,
    stages: Vec<(RType, RTerm)>,
    current: RType,
}

impl Reifier {
    pub fn new(ty: RType) -> Self {
        Reifier {
            originals: Vec::new(),
            stages: Vec::new(),
            current: ty,
        }
    }

    /// The type `A[s]` for the elements pushed so far.
    pub fn current(&self) -> &RType {
        &self.current
    }

    /// Appends `t`, returning `o(A[s * ⟨t⟩])`.
    pub fn push(&mut self, t: RTerm) -> Result<OrdTerm> {
        let ty = self.stages.first().map_or(&self.current, |(ty, _)| ty);
        check_term(ty, &t)?;
        let j = self.originals.len();
        if let Some(i) = self.originals.iter().position(|p| leq_raw(p, &t)) {
            return Err(Error::NotBad(i, j));
        }
        let mut x = t.clone();
        for (ty, head) in &self.stages {
            if leq_raw(head, &x) {
                return Err(Error::DominancePreconditionViolated);
            }
            x = e_raw(ty, head, &x)?;
        }
        let next = simplify_raw(&self.current, &x)?;
        let prev = std::mem::replace(&mut self.current, next);
        self.stages.push((prev, x));
        self.originals.push(t);
        Ok(otype(&self.current))
    }
}

/// `A[s]`: simplify by the head, then continue with the `e`-images of the rest.
pub fn iterate_type(ty: &RType, s: &[RTerm]) -> Result<RType> {
    for x in s {
        check_term(ty, x)?;
    }
    check_bad(s, leq_raw)?;
    let mut r = Reifier::new(ty.clone());
    for x in s {
        r.push(x.clone())?;
    }
    Ok(r.current)
}

/// A unit-leaf tree as a term of `B(α, E*)`, the leaf becoming `⟨⟩ ⋆ []`.
pub fn lift_tree(t: &UnitTree) -> RTerm {
    RTerm::tree(t.map_leaves(&|_| RTerm::Seq(Vec::new())))
}

/// The reification value `o(B(α, E*)[s])` of a nonempty bad sequence of trees.
pub fn reify_tree_badseq(s: &[UnitTree], alpha: &OrdTerm) -> Result<OrdTerm> {
    if s.is_empty() {
        return Err(Error::PreconditionViolated("a bad sequence is nonempty".into()));
    }
    for t in s {
        t.validate(false)?;
        if t.inner_labels().iter().any(|b| *b >= alpha) {
            return Err(Error::TypeMismatch(format!("{t} has a label outside {alpha}")));
        }
    }
    let lifted: Vec<RTerm> = s.iter().map(lift_tree).collect();
    let ty = RType::b(alpha.clone(), RType::star(RType::E));
    Ok(otype(&iterate_type(&ty, &lifted)?))
}

/// The reification value of every nonempty prefix.
pub fn reify_prefixes(s: &[UnitTree], alpha: &OrdTerm) -> Result<Vec<OrdTerm>> {
    for t in s {
        t.validate(false)?;
        if t.inner_labels().iter().any(|b| *b >= alpha) {
            return Err(Error::TypeMismatch(format!("{t} has a label outside {alpha}")));
        }
    }
    check_bad(s, crate::gap_tree::leq_tree)?;
    let mut r = Reifier::new(RType::b(alpha.clone(), RType::star(RType::E)));
    s.iter().map(|t| r.push(lift_tree(t))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ord, parse_unit_trees, print_ord};

    fn n(k: u64) -> OrdTerm {
        OrdTerm::nat(k)
    }

    fn ord(k: u64) -> RTerm {
        RTerm::Ord(n(k))
    }

    #[test]
    fn orders() {
        assert!(leq_rterm(&RType::L(n(3)), &ord(1), &ord(2)).unwrap());
        let sum = RType::sum(RType::L(n(3)), RType::L(n(3)));
        assert!(!leq_rterm(&sum, &RTerm::inj0(ord(0)), &RTerm::inj1(ord(2))).unwrap());
        let star = RType::star(RType::star(RType::E));
        assert!(leq_rterm(&star, &RTerm::Seq(vec![]), &RTerm::Seq(vec![RTerm::Seq(vec![])])).unwrap());
        assert!(leq_rterm(&RType::L(n(3)), &ord(1), &ord(3)).is_err());
    }

    #[test]
    fn simplification() {
        assert_eq!(simplify_type(&RType::L(n(5)), &ord(3)).unwrap(), RType::L(n(3)));
        let star = RType::star(RType::L(n(2)));
        assert_eq!(simplify_type(&star, &RTerm::Seq(vec![])).unwrap(), RType::E);
        let sum = RType::sum(RType::L(n(4)), RType::E);
        assert_eq!(
            simplify_type(&sum, &RTerm::inj0(ord(1))).unwrap(),
            RType::sum(RType::L(n(1)), RType::E)
        );
    }

    #[test]
    fn e_examples() {
        assert_eq!(e(&RType::L(n(5)), &ord(3), &ord(1)).unwrap(), ord(1));
        let leaf_ty = RType::L(n(4));
        let b = RType::b(n(2), leaf_ty.clone());
        let a = RTerm::tree(LabTree::leaf(ord(3)));
        let t = RTerm::tree(LabTree::leaf(ord(1)));
        assert_eq!(e(&b, &a, &t).unwrap(), RTerm::tree(LabTree::leaf(ord(1))));

        let b2 = RType::b(n(2), RType::star(RType::E));
        let unit = || LabTree::leaf(RTerm::Seq(vec![]));
        let s = RTerm::tree(LabTree::node_unchecked(n(0), unit(), unit()));
        let out = e(&b2, &s, &RTerm::tree(unit())).unwrap();
        let expect = RTerm::tree(LabTree::leaf(RTerm::Seq(vec![RTerm::inj0(RTerm::Seq(vec![]))])));
        assert_eq!(out, expect);
        check_term(&simplify_type(&b2, &s).unwrap(), &out).unwrap();
        assert_eq!(e(&b2, &RTerm::tree(unit()), &s), Err(Error::DominancePreconditionViolated));
    }

    #[test]
    fn measures() {
        assert_eq!(otype(&RType::E), n(0));
        assert_eq!(print_ord(&otype(&RType::star(RType::E))), "phi(1,1)");
        assert_eq!(print_ord(&otype(&RType::L(n(0)))), "phi(2,0)");
    }

    #[test]
    fn iteration() {
        let l5 = RType::L(n(5));
        assert_eq!(iterate_type(&l5, &[]).unwrap(), l5);
        assert_eq!(iterate_type(&l5, &[ord(3)]).unwrap(), RType::L(n(3)));
        assert_eq!(iterate_type(&l5, &[ord(3), ord(1)]).unwrap(), RType::L(n(1)));
        assert_eq!(iterate_type(&l5, &[ord(1), ord(3)]), Err(Error::NotBad(0, 1)));
    }

    #[test]
    fn tree_reification() {
        let leaf = parse_unit_trees(".").unwrap();
        assert_eq!(reify_tree_badseq(&leaf, &n(1)).unwrap(), parse_ord("phi(3,1)").unwrap());
        let s = parse_unit_trees("(0 (0 . .) .); (0 . (0 . .)); (0 . .)").unwrap();
        let r = reify_prefixes(&s, &n(1)).unwrap();
        assert!(r.windows(2).all(|w| w[1] < w[0]));
        let not_bad = parse_unit_trees("(0 . .); (0 (0 . .) .)").unwrap();
        assert_eq!(reify_prefixes(&not_bad, &n(1)), Err(Error::NotBad(0, 1)));
    }
}
