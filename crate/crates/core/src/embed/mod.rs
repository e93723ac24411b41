//! Quasi-embeddings between ordinals, gap sequences, trees and the bullet order.
//!
//! Every construction is available as a typed function and as an [`EmbedFn`]
//! value that carries its source and target descriptors, so that the harness
//! can sample a domain and check order reflection uniformly.

mod bullet;
mod lower;
mod seqs;
mod trees;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gap_seq::{leq_s_slice, leq_w_slice, GapSeq};
use crate::gap_tree::{leq_tree_by, LabTree, Leq};
use crate::ord::OrdTerm;
use crate::text::{print_list, print_ord, print_seq, LeafLiteral};

pub use bullet::{bullet_leq, bullet_leq_slice, bullet_stage, bullet_to_weak, nat_to_bullet, nat_to_bullet_fn, BulletSeq};
pub use lower::{strong_lower_base, strong_lower_combine, veblen_lower, VeblenTarget};
pub use seqs::{
    phi_to_gapseq, phi_to_gapseq_fn, seq_to_tree, seq_to_tree_fn, strong_decompose_fin, strong_decompose_fin_fn,
    strong_decompose_inf, strong_decompose_inf_fn, strong_to_weak, strong_to_weak_fn, weak_to_strong,
    weak_to_strong_fn,
};
pub use trees::{left_set_embed, tree_label_split, tree_label_split_fn, LeftSetVariant};

/// How a sequence value is ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqOrder {
    Weak,
    Strong,
    Bullet,
}

/// A tree whose leaves are themselves values.
pub type ValueTree = LabTree<Value>;

/// A dynamically typed element of some source or target order.
///
/// The order on a value is determined by its shape: ordinals by size,
/// sequences by their [`SeqOrder`], trees by embeddability with the value
/// order on leaves, tags by equal tag and inner order, pairs componentwise
/// and lists by Higman's order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Unit,
    Ord(OrdTerm),
    Seq(SeqOrder, Vec<OrdTerm>),
    Tree(Box<ValueTree>),
    Tag(u8, Box<Value>),
    Pair(Box<Value>, Box<Value>),
    List(Vec<Value>),
}

impl Value {
    pub fn weak(members: Vec<OrdTerm>) -> Self {
        Value::Seq(SeqOrder::Weak, members)
    }

    pub fn strong(members: Vec<OrdTerm>) -> Self {
        Value::Seq(SeqOrder::Strong, members)
    }

    pub fn bullet(members: Vec<OrdTerm>) -> Self {
        Value::Seq(SeqOrder::Bullet, members)
    }

    pub fn tree(t: ValueTree) -> Self {
        Value::Tree(Box::new(t))
    }

    pub fn tag(i: u8, v: Value) -> Self {
        Value::Tag(i, Box::new(v))
    }

    pub fn pair(a: Value, b: Value) -> Self {
        Value::Pair(Box::new(a), Box::new(b))
    }

    pub fn as_ord(&self) -> Result<&OrdTerm> {
        match self {
            Value::Ord(a) => Ok(a),
            other => Err(Error::TypeMismatch(format!("expected an ordinal, got {other}"))),
        }
    }

    pub fn as_seq(&self) -> Result<&[OrdTerm]> {
        match self {
            Value::Seq(_, s) => Ok(s),
            other => Err(Error::TypeMismatch(format!("expected a sequence, got {other}"))),
        }
    }

    pub fn as_tree(&self) -> Result<&ValueTree> {
        match self {
            Value::Tree(t) => Ok(t),
            other => Err(Error::TypeMismatch(format!("expected a tree, got {other}"))),
        }
    }

    pub fn into_seq(self) -> Result<Vec<OrdTerm>> {
        match self {
            Value::Seq(_, s) => Ok(s),
            other => Err(Error::TypeMismatch(format!("expected a sequence, got {other}"))),
        }
    }

    pub fn into_tree(self) -> Result<ValueTree> {
        match self {
            Value::Tree(t) => Ok(*t),
            other => Err(Error::TypeMismatch(format!("expected a tree, got {other}"))),
        }
    }
}

/// Higman's order with an arbitrary element order; greedy leftmost matching.
pub fn higman_leq_by<T>(s: &[T], t: &[T], le: impl Fn(&T, &T) -> bool) -> bool {
    let mut j = 0;
    for x in s {
        while j < t.len() && !le(x, &t[j]) {
            j += 1;
        }
        if j == t.len() {
            return false;
        }
        j += 1;
    }
    true
}

/// The order carried by the shapes of `a` and `b`; differently shaped values are incomparable.
pub fn value_leq(a: &Value, b: &Value) -> bool {
    match (a, b) {
        (Value::Unit, Value::Unit) => true,
        (Value::Ord(x), Value::Ord(y)) => x <= y,
        (Value::Seq(o, s), Value::Seq(p, t)) if o == p => match o {
            SeqOrder::Weak => leq_w_slice(s, t),
            SeqOrder::Strong => leq_s_slice(s, t),
            SeqOrder::Bullet => bullet_leq_slice(s, t),
        },
        (Value::Tree(s), Value::Tree(t)) => leq_tree_by(s, t, &value_leq),
        (Value::Tag(i, x), Value::Tag(j, y)) => i == j && value_leq(x, y),
        (Value::Pair(a1, a2), Value::Pair(b1, b2)) => value_leq(a1, b1) && value_leq(a2, b2),
        (Value::List(s), Value::List(t)) => higman_leq_by(s, t, value_leq),
        _ => false,
    }
}

impl Leq for Value {
    fn leq(&self, other: &Self) -> bool {
        value_leq(self, other)
    }
}

impl LeafLiteral for Value {
    fn literal(&self) -> Option<String> {
        match self {
            Value::Unit => None,
            other => Some(other.to_string()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => f.write_str("()"),
            Value::Ord(a) => f.write_str(&print_ord(a)),
            Value::Seq(_, s) => f.write_str(&print_seq(s)),
            Value::Tree(t) => write!(f, "{t}"),
            Value::Tag(i, v) => write!(f, "i{i}({v})"),
            Value::Pair(a, b) => write!(f, "<{a}, {b}>"),
            Value::List(xs) => f.write_str(&print_list(xs.iter().map(|x| x.to_string()))),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// What kind of elements a [`Domain`] holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Carrier {
    /// Ordinals below the bound.
    Ordinals,
    /// Sequences with members below the bound.
    Seqs(SeqOrder),
    /// Trees with inner labels below the bound; leaves are units or ordinals below `leaf_bound`.
    Trees {
        left_strict: bool,
        leaf_bound: Option<OrdTerm>,
    },
    /// A structured carrier described in words.
    Other(String),
}

/// A source or target descriptor.
///
/// Tree domains may exclude everything above a fixed tree: with `avoid = Some(t)`
/// the domain holds the trees `u` with `t ≰ u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    pub carrier: Carrier,
    pub bound: OrdTerm,
    pub avoid: Option<Value>,
}

impl Domain {
    pub fn ordinals(bound: OrdTerm) -> Self {
        Domain {
            carrier: Carrier::Ordinals,
            bound,
            avoid: None,
        }
    }

    pub fn seqs(order: SeqOrder, bound: OrdTerm) -> Self {
        Domain {
            carrier: Carrier::Seqs(order),
            bound,
            avoid: None,
        }
    }

    pub fn trees(bound: OrdTerm, left_strict: bool, leaf_bound: Option<OrdTerm>) -> Self {
        Domain {
            carrier: Carrier::Trees {
                left_strict,
                leaf_bound,
            },
            bound,
            avoid: None,
        }
    }

    pub fn other(desc: impl Into<String>, bound: OrdTerm) -> Self {
        Domain {
            carrier: Carrier::Other(desc.into()),
            bound,
            avoid: None,
        }
    }

    pub fn avoiding(mut self, t: Value) -> Self {
        self.avoid = Some(t);
        self
    }

    /// Membership; structured carriers accept every value.
    pub fn contains(&self, x: &Value) -> bool {
        let inside = match (&self.carrier, x) {
            (Carrier::Ordinals, Value::Ord(a)) => *a < self.bound,
            (Carrier::Seqs(o), Value::Seq(p, s)) => o == p && s.iter().all(|m| *m < self.bound),
            (
                Carrier::Trees {
                    left_strict,
                    leaf_bound,
                },
                Value::Tree(t),
            ) => {
                t.is_valid(*left_strict)
                    && t.inner_labels().iter().all(|b| **b < self.bound)
                    && leaves_within(t, leaf_bound.as_ref())
            }
            (Carrier::Other(_), _) => true,
            _ => false,
        };
        inside && self.avoid.as_ref().is_none_or(|t| !value_leq(t, x))
    }
}

fn leaves_within(t: &ValueTree, leaf_bound: Option<&OrdTerm>) -> bool {
    match t {
        LabTree::Leaf(Value::Unit) => leaf_bound.is_none(),
        LabTree::Leaf(Value::Ord(a)) => leaf_bound.is_some_and(|b| a < b),
        LabTree::Leaf(_) => false,
        LabTree::Node(_, l, r) => leaves_within(l, leaf_bound) && leaves_within(r, leaf_bound),
    }
}

pub type MapFn = Arc<dyn Fn(&Value) -> Result<Value> + Send + Sync>;
pub type LeqFn = Arc<dyn Fn(&Value, &Value) -> bool + Send + Sync>;

/// An executable quasi-embedding with its descriptors.
#[derive(Clone)]
pub struct EmbedFn {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub domain: Domain,
    pub codomain: Domain,
    pub source_leq: LeqFn,
    pub target_leq: LeqFn,
    map: MapFn,
}

impl EmbedFn {
    pub fn new(
        name: impl Into<String>,
        params: Vec<(String, String)>,
        domain: Domain,
        codomain: Domain,
        map: impl Fn(&Value) -> Result<Value> + Send + Sync + 'static,
    ) -> Self {
        EmbedFn {
            name: name.into(),
            params,
            domain,
            codomain,
            source_leq: Arc::new(value_leq),
            target_leq: Arc::new(value_leq),
            map: Arc::new(map),
        }
    }

    pub fn apply(&self, x: &Value) -> Result<Value> {
        (self.map)(x)
    }

    /// Applies the map to an ordinal and returns the resulting sequence.
    pub fn apply_ord_seq(&self, x: &OrdTerm) -> Result<Vec<OrdTerm>> {
        self.apply(&Value::Ord(x.clone()))?.into_seq()
    }

    /// Same map on a smaller ordinal domain.
    pub fn restrict(&self, bound: OrdTerm) -> Result<EmbedFn> {
        if self.domain.carrier != Carrier::Ordinals || bound > self.domain.bound {
            return Err(Error::PreconditionViolated(format!(
                "cannot restrict {} to {}",
                self.name, bound
            )));
        }
        let mut out = self.clone();
        out.domain.bound = bound;
        Ok(out)
    }

    /// `g ∘ self`, with the source of `self` and the target of `g`.
    pub fn then(&self, g: &EmbedFn) -> EmbedFn {
        let (f, h) = (self.clone(), g.clone());
        let mut out = EmbedFn::new(
            format!("{}>{}", self.name, g.name),
            vec![param("first", &self.name), param("second", &g.name)],
            self.domain.clone(),
            g.codomain.clone(),
            move |x| h.apply(&f.apply(x)?),
        );
        out.source_leq = self.source_leq.clone();
        out.target_leq = g.target_leq.clone();
        out
    }

    /// `target_leq(f(x), f(y)) ⇒ source_leq(x, y)` on one pair.
    pub fn reflects(&self, x: &Value, y: &Value) -> Result<bool> {
        let (fx, fy) = (self.apply(x)?, self.apply(y)?);
        Ok(!(self.target_leq)(&fx, &fy) || (self.source_leq)(x, y))
    }
}

impl fmt::Debug for EmbedFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EmbedFn")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("domain", &self.domain)
            .field("codomain", &self.codomain)
            .finish()
    }
}

pub(crate) fn param(key: &str, value: impl fmt::Display) -> (String, String) {
    (key.to_string(), value.to_string())
}

pub(crate) fn seq_value(order: SeqOrder, s: GapSeq) -> Value {
    Value::Seq(order, s.members().to_vec())
}

/// Memberwise left-addition `β + s`.
pub fn shift_seq(beta: &OrdTerm, s: &[OrdTerm]) -> Vec<OrdTerm> {
    s.iter().map(|m| crate::ord::add(beta, m)).collect()
}

/// Memberwise left subtraction `−β + s`.
pub fn unshift_seq(beta: &OrdTerm, s: &[OrdTerm]) -> Vec<OrdTerm> {
    s.iter().map(|m| crate::ord::lsub(beta, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> OrdTerm {
        OrdTerm::nat(k)
    }

    #[test]
    fn higman_greedy() {
        assert!(higman_leq_by(&[1, 3], &[0, 2, 1, 4], |a, b| a <= b));
        assert!(!higman_leq_by(&[3, 3], &[0, 2, 4], |a, b| a <= b));
        assert!(higman_leq_by::<u32>(&[], &[], |a, b| a <= b));
    }

    #[test]
    fn shapes_are_ordered_by_kind() {
        let a = Value::weak(vec![n(1)]);
        let b = Value::strong(vec![n(1)]);
        assert!(!value_leq(&a, &b));
        assert!(value_leq(&Value::tag(0, Value::Ord(n(1))), &Value::tag(0, Value::Ord(n(2)))));
        assert!(!value_leq(&Value::tag(0, Value::Ord(n(1))), &Value::tag(1, Value::Ord(n(2)))));
        let d = Domain::ordinals(n(3));
        assert!(d.contains(&Value::Ord(n(2))));
        assert!(!d.contains(&Value::Ord(n(3))));
    }
}
