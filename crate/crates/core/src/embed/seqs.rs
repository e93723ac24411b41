use crate::error::{Error, Result};
use crate::gap_seq::GapSeq;
use crate::gap_tree::{LabTree, UnitTree};
use crate::ord::{cnf_head, lsub, mk_phi, omega_pow, OrdTerm};

use super::{param, seq_value, shift_seq, unshift_seq, Domain, EmbedFn, SeqOrder, Value};

fn seq_to_tree_slice(s: &[OrdTerm]) -> UnitTree {
    let Some(min) = s.iter().min() else {
        return LabTree::leaf(());
    };
    let k = s.iter().position(|m| m == min).expect("minimum occurs");
    LabTree::node_unchecked(min.clone(), seq_to_tree_slice(&s[..k]), seq_to_tree_slice(&s[k + 1..]))
}

/// Splits at the first occurrence of the minimum; the result is left-strict.
pub fn seq_to_tree(s: &GapSeq) -> UnitTree {
    seq_to_tree_slice(s.members())
}

pub fn seq_to_tree_fn(alpha: &OrdTerm) -> EmbedFn {
    EmbedFn::new(
        "seq_to_tree",
        vec![param("alpha", alpha)],
        Domain::seqs(SeqOrder::Weak, alpha.clone()),
        Domain::trees(alpha.clone(), true, None),
        |x| Ok(Value::tree(seq_to_tree_slice(x.as_seq()?).map_leaves(&|_| Value::Unit))),
    )
}

fn phi_members(x: &OrdTerm, alpha: &OrdTerm) -> Result<Vec<OrdTerm>> {
    let xs = x.summands();
    match xs.len() {
        0 => Ok(vec![OrdTerm::zero()]),
        1 => {
            let p = &xs[0];
            if p.first() >= alpha {
                return Err(Error::IndexOutOfRange(p.first().to_string()));
            }
            let inner = phi_members(p.second(), alpha)?;
            Ok(shift_seq(&omega_pow(p.first()), &inner))
        }
        _ => {
            let head = OrdTerm::from_summands_unchecked(vec![xs[0].clone()]);
            let rest = OrdTerm::from_summands_unchecked(xs[1..].to_vec());
            let mut out = phi_members(&head, alpha)?;
            out.push(OrdTerm::zero());
            out.extend(phi_members(&rest, alpha)?);
            Ok(out)
        }
    }
}

/// The map from `φ(α, 0)` into weak gap sequences below `ω^α`.
pub fn phi_to_gapseq(x: &OrdTerm, alpha: &OrdTerm) -> Result<GapSeq> {
    GapSeq::new(phi_members(x, alpha)?, omega_pow(alpha))
}

pub fn phi_to_gapseq_fn(alpha: &OrdTerm) -> EmbedFn {
    let a = alpha.clone();
    EmbedFn::new(
        "phi_to_gapseq",
        vec![param("alpha", alpha)],
        Domain::ordinals(mk_phi(alpha, &OrdTerm::zero())),
        Domain::seqs(SeqOrder::Weak, omega_pow(alpha)),
        move |x| Ok(seq_value(SeqOrder::Weak, phi_to_gapseq(x.as_ord()?, &a)?)),
    )
}

pub fn weak_to_strong(s: &GapSeq) -> GapSeq {
    s.clone()
}

/// Prepends the top element `α` and enlarges the bound to `α + 1`.
pub fn strong_to_weak(s: &GapSeq) -> GapSeq {
    let top = s.bound().clone();
    s.with_bound(top.succ())
        .and_then(|t| t.prepend(top))
        .expect("members stay below the enlarged bound")
}

pub fn weak_to_strong_fn(alpha: &OrdTerm) -> EmbedFn {
    EmbedFn::new(
        "weak_to_strong",
        vec![param("alpha", alpha)],
        Domain::seqs(SeqOrder::Weak, alpha.clone()),
        Domain::seqs(SeqOrder::Strong, alpha.clone()),
        |x| Ok(Value::strong(x.as_seq()?.to_vec())),
    )
}

pub fn strong_to_weak_fn(alpha: &OrdTerm) -> EmbedFn {
    let a = alpha.clone();
    EmbedFn::new(
        "strong_to_weak",
        vec![param("alpha", alpha)],
        Domain::seqs(SeqOrder::Strong, alpha.clone()),
        Domain::seqs(SeqOrder::Weak, alpha.succ()),
        move |x| {
            let s = GapSeq::new(x.as_seq()?.to_vec(), a.clone())?;
            Ok(seq_value(SeqOrder::Weak, strong_to_weak(&s)))
        },
    )
}

/// `s = s_l * s_r` with `s_l` the longest all-positive prefix, mapped to `(−1 + s_l, s_r)`.
pub fn strong_decompose_fin(s: &GapSeq) -> Result<(GapSeq, GapSeq)> {
    let bound = s.bound();
    let Some(n1) = bound.to_nat().filter(|&k| k > 0) else {
        return Err(Error::PreconditionViolated(format!(
            "strong_decompose_fin needs a positive finite bound, got {bound}"
        )));
    };
    let xs = s.members();
    let k = xs.iter().position(|m| m.is_zero()).unwrap_or(xs.len());
    let left = GapSeq::new(unshift_seq(&OrdTerm::one(), &xs[..k]), OrdTerm::nat(n1 - 1))?;
    let right = GapSeq::new(xs[k..].to_vec(), bound.clone())?;
    Ok((left, right))
}

pub fn strong_decompose_fin_fn(n1: u64) -> EmbedFn {
    let bound = OrdTerm::nat(n1);
    let b = bound.clone();
    EmbedFn::new(
        "strong_decompose_fin",
        vec![param("bound", n1)],
        Domain::seqs(SeqOrder::Strong, bound.clone()),
        Domain::other("S^s_n ⊗ S^w_{n+1}", bound),
        move |x| {
            let (l, r) = strong_decompose_fin(&GapSeq::new(x.as_seq()?.to_vec(), b.clone())?)?;
            Ok(Value::pair(seq_value(SeqOrder::Strong, l), seq_value(SeqOrder::Weak, r)))
        },
    )
}

/// The tagged encoding of a strong sequence that is empty or starts below `ω^γ`.
///
/// Tag 0 carries a weak gap sequence and tag 1 an ordinal below `−1 + γ`.
fn tagged_tail(s: &[OrdTerm]) -> Vec<Value> {
    let mut out = Vec::new();
    let mut cur = s.to_vec();
    let one = OrdTerm::one();
    while let Some(min) = cur.iter().min().cloned() {
        if let Some(k) = cur.iter().position(|m| m.is_zero()) {
            out.push(Value::tag(0, Value::weak(cur[k..].to_vec())));
            cur = unshift_seq(&one, &cur[..k]);
        } else if min.is_finite() {
            out.push(Value::tag(0, Value::weak(Vec::new())));
            cur = unshift_seq(&one, &cur);
        } else {
            let (rho0, _) = cnf_head(&min).expect("positive minimum");
            out.push(Value::tag(1, Value::Ord(lsub(&one, &rho0))));
            cur = unshift_seq(&omega_pow(&rho0), &cur);
        }
    }
    out
}

/// For `α =_NF ω^γ + δ` infinite: the shifted longest prefix at or above `ω^γ`
/// together with the tagged encoding of the remainder.
pub fn strong_decompose_inf(s: &GapSeq) -> Result<(GapSeq, Vec<Value>)> {
    let bound = s.bound();
    if bound.is_finite() {
        return Err(Error::NotInfiniteBound(bound.to_string()));
    }
    let (gamma, delta) = cnf_head(bound)?;
    let w = omega_pow(&gamma);
    let xs = s.members();
    let k = xs.iter().position(|m| *m < w).unwrap_or(xs.len());
    let left = GapSeq::new(unshift_seq(&w, &xs[..k]), delta)?;
    Ok((left, tagged_tail(&xs[k..])))
}

pub fn strong_decompose_inf_fn(alpha: &OrdTerm) -> Result<EmbedFn> {
    if alpha.is_finite() {
        return Err(Error::NotInfiniteBound(alpha.to_string()));
    }
    let a = alpha.clone();
    Ok(EmbedFn::new(
        "strong_decompose_inf",
        vec![param("alpha", alpha)],
        Domain::seqs(SeqOrder::Strong, alpha.clone()),
        Domain::other("S^s_δ ⊗ (S^w_α ⊕ (−1 + γ))*", alpha.clone()),
        move |x| {
            let (l, tags) = strong_decompose_inf(&GapSeq::new(x.as_seq()?.to_vec(), a.clone())?)?;
            Ok(Value::pair(seq_value(SeqOrder::Strong, l), Value::List(tags)))
        },
    ))
}
