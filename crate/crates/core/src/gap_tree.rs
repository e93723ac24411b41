//! Binary trees with weakly ascending inner labels and their embeddability order.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ord::OrdTerm;
use crate::text::LeafLiteral;

/// A quasi-order on leaf labels.
pub trait Leq {
    fn leq(&self, other: &Self) -> bool;
}

impl Leq for () {
    fn leq(&self, _: &Self) -> bool {
        true
    }
}

impl Leq for OrdTerm {
    fn leq(&self, other: &Self) -> bool {
        self <= other
    }
}

impl Leq for u32 {
    fn leq(&self, other: &Self) -> bool {
        self <= other
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum LabTree<L> {
    Leaf(L),
    Node(OrdTerm, Box<LabTree<L>>, Box<LabTree<L>>),
}

pub type UnitTree = LabTree<()>;

impl<L> LabTree<L> {
    pub fn leaf(label: L) -> Self {
        LabTree::Leaf(label)
    }

    /// Builds a node without validation.
    pub fn node_unchecked(b: OrdTerm, l: LabTree<L>, r: LabTree<L>) -> Self {
        LabTree::Node(b, Box::new(l), Box::new(r))
    }

    pub fn root_label(&self) -> Option<&OrdTerm> {
        match self {
            LabTree::Leaf(_) => None,
            LabTree::Node(b, _, _) => Some(b),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, LabTree::Leaf(_))
    }

    /// Total number of nodes, leaves included.
    pub fn nodes(&self) -> usize {
        match self {
            LabTree::Leaf(_) => 1,
            LabTree::Node(_, l, r) => 1 + l.nodes() + r.nodes(),
        }
    }

    /// All inner labels, preorder.
    pub fn inner_labels(&self) -> Vec<&OrdTerm> {
        let mut out = Vec::new();
        self.collect_inner(&mut out);
        out
    }

    fn collect_inner<'a>(&'a self, out: &mut Vec<&'a OrdTerm>) {
        if let LabTree::Node(b, l, r) = self {
            out.push(b);
            l.collect_inner(out);
            r.collect_inner(out);
        }
    }

    pub fn max_inner(&self) -> Option<&OrdTerm> {
        self.inner_labels().into_iter().max()
    }

    pub fn min_inner(&self) -> Option<&OrdTerm> {
        self.root_label()
    }

    /// Checks the ascending invariant everywhere, and left-strictness if asked.
    pub fn validate(&self, left_strict: bool) -> Result<()> {
        if let LabTree::Node(b, l, r) = self {
            check_node(b, l, r, left_strict)?;
            l.validate(left_strict)?;
            r.validate(left_strict)?;
        }
        Ok(())
    }

    pub fn is_valid(&self, left_strict: bool) -> bool {
        self.validate(left_strict).is_ok()
    }

    /// Applies `f` to every inner label.
    pub fn map_labels(&self, f: &impl Fn(&OrdTerm) -> OrdTerm) -> LabTree<L>
    where
        L: Clone,
    {
        match self {
            LabTree::Leaf(x) => LabTree::Leaf(x.clone()),
            LabTree::Node(b, l, r) => LabTree::node_unchecked(f(b), l.map_labels(f), r.map_labels(f)),
        }
    }

    /// Replaces every leaf through `f`.
    pub fn map_leaves<M>(&self, f: &impl Fn(&L) -> M) -> LabTree<M> {
        match self {
            LabTree::Leaf(x) => LabTree::Leaf(f(x)),
            LabTree::Node(b, l, r) => LabTree::node_unchecked(b.clone(), l.map_leaves(f), r.map_leaves(f)),
        }
    }

    /// Every subtree, preorder, the tree itself first.
    pub fn subtrees(&self) -> Vec<&LabTree<L>> {
        let mut out = vec![self];
        if let LabTree::Node(_, l, r) = self {
            out.extend(l.subtrees());
            out.extend(r.subtrees());
        }
        out
    }
}

fn check_node<L>(b: &OrdTerm, l: &LabTree<L>, r: &LabTree<L>, left_strict: bool) -> Result<()> {
    let violation = |offending: &OrdTerm, which| Error::AscendingViolation {
        label: b.to_string(),
        offending: offending.to_string(),
        which,
    };
    if let Some(lb) = l.root_label() {
        if lb < b {
            return Err(violation(lb, "left subtree"));
        }
        if left_strict && lb == b {
            return Err(violation(lb, "left subtree, strict"));
        }
    }
    if let Some(rb) = r.root_label() {
        if rb < b {
            return Err(violation(rb, "right subtree"));
        }
    }
    Ok(())
}

/// Validating constructor; `left_strict` additionally demands `b` below the left subtree.
pub fn mk_node<L>(b: OrdTerm, l: LabTree<L>, r: LabTree<L>, left_strict: bool) -> Result<LabTree<L>> {
    check_node(&b, &l, &r, left_strict)?;
    Ok(LabTree::node_unchecked(b, l, r))
}

struct TreeMemo {
    table: HashMap<(usize, usize), bool>,
}

fn key<L>(s: &LabTree<L>, t: &LabTree<L>) -> (usize, usize) {
    (s as *const _ as usize, t as *const _ as usize)
}

fn leq_memo<L>(s: &LabTree<L>, t: &LabTree<L>, leaf_leq: &impl Fn(&L, &L) -> bool, memo: &mut TreeMemo) -> bool {
    let k = key(s, t);
    if let Some(&v) = memo.table.get(&k) {
        return v;
    }
    let v = match (s, t) {
        (LabTree::Leaf(x), LabTree::Leaf(y)) => leaf_leq(x, y),
        (_, LabTree::Node(c, tl, tr)) => {
            let direct = match s {
                LabTree::Node(b, sl, sr) => {
                    b <= c && leq_memo(sl, tl, leaf_leq, memo) && leq_memo(sr, tr, leaf_leq, memo)
                }
                LabTree::Leaf(_) => false,
            };
            direct || leq_memo(s, tl, leaf_leq, memo) || leq_memo(s, tr, leaf_leq, memo)
        }
        (LabTree::Node(..), LabTree::Leaf(_)) => false,
    };
    memo.table.insert(k, v);
    v
}

/// Tree embeddability with an explicit leaf order.
pub fn leq_tree_by<L>(s: &LabTree<L>, t: &LabTree<L>, leaf_leq: &impl Fn(&L, &L) -> bool) -> bool {
    let mut memo = TreeMemo { table: HashMap::new() };
    leq_memo(s, t, leaf_leq, &mut memo)
}

pub fn leq_tree<L: Leq>(s: &LabTree<L>, t: &LabTree<L>) -> bool {
    leq_tree_by(s, t, &|x: &L, y: &L| x.leq(y))
}

impl<L: Leq> Leq for LabTree<L> {
    fn leq(&self, other: &Self) -> bool {
        leq_tree(self, other)
    }
}

impl<L: LeafLiteral> fmt::Display for LabTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabTree::Leaf(x) => match x.literal() {
                None => f.write_str("."),
                Some(s) => write!(f, "leaf({s})"),
            },
            LabTree::Node(b, l, r) => write!(f, "({b} {l} {r})"),
        }
    }
}

impl<L: LeafLiteral> fmt::Debug for LabTree<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> OrdTerm {
        OrdTerm::nat(k)
    }
    fn leaf() -> UnitTree {
        LabTree::leaf(())
    }

    #[test]
    fn constructor_checks() {
        let inner = mk_node(n(0), leaf(), leaf(), false).unwrap();
        assert!(matches!(
            mk_node(n(1), inner.clone(), leaf(), false),
            Err(Error::AscendingViolation { .. })
        ));
        assert!(mk_node(n(0), inner.clone(), leaf(), false).is_ok());
        assert!(mk_node(n(0), inner, leaf(), true).is_err());
    }

    #[test]
    fn embedding_examples() {
        let one = mk_node(n(1), leaf(), leaf(), false).unwrap();
        let t = mk_node(n(0), one.clone(), leaf(), false).unwrap();
        assert!(leq_tree(&t, &t));
        assert!(leq_tree(&leaf(), &t));
        assert!(leq_tree(&one, &t));
        assert!(!leq_tree(&t, &one));
    }
}
