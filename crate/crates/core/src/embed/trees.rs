use crate::error::{Error, Result};
use crate::gap_tree::{leq_tree, LabTree};
use crate::ord::{cnf_head, lsub, omega_pow, OrdTerm};

use super::{param, Carrier, Domain, EmbedFn, Value, ValueTree};

/// Which clause of the left-set construction to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeftSetVariant {
    /// The excluded tree is a leaf `x ⋆ []`; the map is the identity.
    Leaf,
    /// The excluded tree has root label 0; trees become tagged sequences.
    Root,
    /// The excluded tree has a positive inner label; small labels stay, large subtrees become leaves.
    Shift,
}

impl std::str::FromStr for LeftSetVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "leaf" => Ok(LeftSetVariant::Leaf),
            "root" => Ok(LeftSetVariant::Root),
            "shift" => Ok(LeftSetVariant::Shift),
            other => Err(Error::PreconditionViolated(format!("unknown left-set variant {other}"))),
        }
    }
}

/// Cuts `s` at the first inner label below `w`; maximal subtrees with all labels
/// at or above `w` become leaves carrying their `w`-shifted selves.
fn split_at(s: &ValueTree, w: &OrdTerm) -> ValueTree {
    if s.inner_labels().iter().all(|b| *b >= w) {
        return LabTree::leaf(Value::tree(s.map_labels(&|b| lsub(w, b))));
    }
    match s {
        LabTree::Node(b, l, r) => LabTree::node_unchecked(b.clone(), split_at(l, w), split_at(r, w)),
        LabTree::Leaf(_) => unreachable!("a leaf has no inner labels"),
    }
}

/// The map `B_{α,1} → B_{ω^γ, B_{δ,1}}` for `α =_NF ω^γ + δ`.
pub fn tree_label_split(t: &ValueTree, alpha: &OrdTerm) -> Result<ValueTree> {
    let (gamma, _) = cnf_head(alpha).map_err(|_| Error::ZeroBound)?;
    Ok(split_at(t, &omega_pow(&gamma)))
}

pub fn tree_label_split_fn(alpha: &OrdTerm, left_strict: bool) -> Result<EmbedFn> {
    let (gamma, delta) = cnf_head(alpha).map_err(|_| Error::ZeroBound)?;
    let w = omega_pow(&gamma);
    Ok(EmbedFn::new(
        "tree_label_split",
        vec![param("alpha", alpha), param("left_strict", left_strict)],
        Domain::trees(alpha.clone(), left_strict, None),
        Domain::other(format!("B_{{{w}, B_{{{delta},1}}}}"), w.clone()),
        move |x| Ok(Value::tree(split_at(x.as_tree()?, &w))),
    ))
}

fn root_encode(s: &ValueTree, tl: &ValueTree, out: &mut Vec<Value>) {
    match s {
        LabTree::Leaf(x) => out.push(Value::tag(0, x.clone())),
        LabTree::Node(b, sl, sr) => {
            let b = Value::Ord(b.clone());
            if !leq_tree(tl, sl) {
                out.push(Value::tag(1, Value::pair(b, Value::tree((**sl).clone()))));
                root_encode(sr, tl, out);
            } else {
                out.push(Value::tag(2, Value::pair(b, Value::tree((**sr).clone()))));
                root_encode(sl, tl, out);
            }
        }
    }
}

/// The quasi-embedding of the left set `{u : t ≰ u}` of a tree space.
///
/// `space` must be a tree domain; the returned map has `space` minus the
/// upward closure of `t` as its domain.
pub fn left_set_embed(t: &ValueTree, space: &Domain, variant: LeftSetVariant) -> Result<EmbedFn> {
    let Carrier::Trees { leaf_bound, .. } = &space.carrier else {
        return Err(Error::PreconditionViolated("left_set_embed needs a tree space".into()));
    };
    let alpha = space.bound.clone();
    let domain = space.clone().avoiding(Value::tree(t.clone()));
    let params = vec![param("t", t), param("variant", format!("{variant:?}").to_lowercase())];
    match variant {
        LeftSetVariant::Leaf => {
            let LabTree::Leaf(x) = t else {
                return Err(Error::PreconditionViolated("leaf clause needs a leaf".into()));
            };
            let codomain = match (x, leaf_bound) {
                (Value::Ord(x), Some(_)) => Domain::trees(alpha, false, Some(x.clone())),
                _ => Domain::other(format!("B_{{{alpha}, L({x})}}"), alpha),
            };
            Ok(EmbedFn::new("left_set_leaf", params, domain, codomain, |x| Ok(x.clone())))
        }
        LeftSetVariant::Root => {
            let LabTree::Node(b, tl, _) = t else {
                return Err(Error::PreconditionViolated("root clause needs an inner node".into()));
            };
            if !b.is_zero() {
                return Err(Error::PreconditionViolated("root clause needs root label 0".into()));
            }
            let tl = (**tl).clone();
            Ok(EmbedFn::new(
                "left_set_root",
                params,
                domain,
                Domain::other("(X ⊕ α⊗L(t_l) ⊕ α⊗L(t_r))*", alpha),
                move |x| {
                    let mut out = Vec::new();
                    root_encode(x.as_tree()?, &tl, &mut out);
                    Ok(Value::List(out))
                },
            ))
        }
        LeftSetVariant::Shift => {
            let top = t
                .max_inner()
                .filter(|b| !b.is_zero())
                .ok_or_else(|| Error::PreconditionViolated("shift clause needs a positive inner label".into()))?;
            let (gamma0, _) = cnf_head(top)?;
            let w = omega_pow(&gamma0);
            Ok(EmbedFn::new(
                "left_set_shift",
                params,
                domain,
                Domain::other(format!("B_{{{w}, L(−{w} + t)}}"), w.clone()),
                move |x| Ok(Value::tree(split_at(x.as_tree()?, &w))),
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: u64) -> OrdTerm {
        OrdTerm::nat(k)
    }

    fn unit() -> ValueTree {
        LabTree::leaf(Value::Unit)
    }

    fn node(b: OrdTerm, l: ValueTree, r: ValueTree) -> ValueTree {
        LabTree::node_unchecked(b, l, r)
    }

    #[test]
    fn label_split_cases() {
        let w = OrdTerm::omega();
        let alpha = crate::ord::add(&w, &n(2));
        let big = node(w.clone(), unit(), node(crate::ord::add(&w, &n(1)), unit(), unit()));
        let out = tree_label_split(&big, &alpha).unwrap();
        assert_eq!(out.to_string(), "leaf((0 . (1 . .)))");
        assert_eq!(tree_label_split(&unit(), &alpha).unwrap().to_string(), "leaf(.)");
        let mixed = node(n(0), big.clone(), unit());
        assert_eq!(
            tree_label_split(&mixed, &alpha).unwrap().to_string(),
            "(0 leaf((0 . (1 . .))) leaf(.))"
        );
        assert_eq!(tree_label_split(&mixed, &n(0)), Err(Error::ZeroBound));
    }

    #[test]
    fn left_set_variants() {
        let space = Domain::trees(n(3), false, Some(n(2)));
        let x = LabTree::leaf(Value::Ord(n(1)));
        let id = left_set_embed(&x, &space, LeftSetVariant::Leaf).unwrap();
        let u = Value::tree(node(n(1), LabTree::leaf(Value::Ord(n(0))), LabTree::leaf(Value::Ord(n(0)))));
        assert_eq!(id.apply(&u).unwrap(), u);
        assert!(id.domain.contains(&u));

        let t = node(n(0), node(n(1), x.clone(), x.clone()), x.clone());
        let root = left_set_embed(&t, &space, LeftSetVariant::Root).unwrap();
        let leaf0 = Value::tree(LabTree::leaf(Value::Ord(n(0))));
        assert_eq!(root.apply(&leaf0).unwrap(), Value::List(vec![Value::tag(0, Value::Ord(n(0)))]));

        let shift = left_set_embed(&t, &space, LeftSetVariant::Shift).unwrap();
        let high = node(n(1), LabTree::leaf(Value::Ord(n(0))), LabTree::leaf(Value::Ord(n(0))));
        let out = shift.apply(&Value::tree(high)).unwrap();
        assert!(out.as_tree().unwrap().is_leaf());
        assert!(left_set_embed(&x, &space, LeftSetVariant::Shift).is_err());
        assert!(left_set_embed(&x, &space, LeftSetVariant::Root).is_err());
    }
}
