//! Gap-condition orders on finite sequences over a well order.
//!
//! The slice functions are generic over any `Ord` alphabet so that the
//! harness can run them on small integers; [`GapSeq`] wraps them for
//! ordinal members with an explicit bound.

use std::fmt;

use crate::error::{Error, Result};
use crate::ord::OrdTerm;

/// A finite sequence of ordinals below `bound`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GapSeq {
    members: Vec<OrdTerm>,
    bound: OrdTerm,
}

/// A strictly increasing map from source positions to target positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    pub map: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GapVariant {
    Weak,
    Gordeev,
    StrongRealizer,
    StrongRecursive,
}

impl GapVariant {
    pub const ALL: [GapVariant; 4] = [
        GapVariant::Weak,
        GapVariant::Gordeev,
        GapVariant::StrongRealizer,
        GapVariant::StrongRecursive,
    ];
}

impl GapSeq {
    pub fn new(members: Vec<OrdTerm>, bound: OrdTerm) -> Result<Self> {
        if let Some(m) = members.iter().find(|m| **m >= bound) {
            return Err(Error::MemberOutOfBound {
                member: m.to_string(),
                bound: bound.to_string(),
            });
        }
        Ok(GapSeq { members, bound })
    }

    pub fn from_nats(members: &[u64], bound: u64) -> Result<Self> {
        GapSeq::new(
            members.iter().map(|&k| OrdTerm::nat(k)).collect(),
            OrdTerm::nat(bound),
        )
    }

    pub fn members(&self) -> &[OrdTerm] {
        &self.members
    }

    pub fn bound(&self) -> &OrdTerm {
        &self.bound
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Concatenation; both operands must share the bound.
    pub fn concat(&self, other: &GapSeq) -> Result<GapSeq> {
        same_bound(self, other)?;
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        Ok(GapSeq {
            members,
            bound: self.bound.clone(),
        })
    }

    /// `⟨m⟩ * self`.
    pub fn prepend(&self, m: OrdTerm) -> Result<GapSeq> {
        let mut members = Vec::with_capacity(self.len() + 1);
        members.push(m);
        members.extend(self.members.iter().cloned());
        GapSeq::new(members, self.bound.clone())
    }

    pub fn with_bound(&self, bound: OrdTerm) -> Result<GapSeq> {
        GapSeq::new(self.members.clone(), bound)
    }
}

impl fmt::Display for GapSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_seq(&self.members))
    }
}

impl fmt::Debug for GapSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} < {}", self, self.bound)
    }
}

fn same_bound(s: &GapSeq, t: &GapSeq) -> Result<()> {
    if s.bound != t.bound {
        return Err(Error::BoundMismatch(s.bound.to_string(), t.bound.to_string()));
    }
    Ok(())
}

/// The recursive strong order as a suffix-pair table over positions.
fn leq_r_by(n: usize, m: usize, le: impl Fn(usize, usize) -> bool) -> bool {
    if n == 0 {
        return true;
    }
    // row[j] holds the answer for the current source suffix against t[j..]
    let mut next = vec![true; m + 1];
    let mut row = vec![false; m + 1];
    for i in (0..n).rev() {
        row[m] = false;
        for j in (0..m).rev() {
            row[j] = le(i, j) && (next[j + 1] || row[j + 1]);
        }
        std::mem::swap(&mut next, &mut row);
    }
    next[0]
}

pub fn leq_r_slice<T: Ord>(s: &[T], t: &[T]) -> bool {
    leq_r_by(s.len(), t.len(), |i, j| s[i] <= t[j])
}

/// Strong gap order; coincides with the recursive order.
pub fn leq_s_slice<T: Ord>(s: &[T], t: &[T]) -> bool {
    leq_r_slice(s, t)
}

fn lowered<T>(xs: &[T], i: usize) -> Option<&T> {
    if i == 0 {
        None
    } else {
        Some(&xs[i - 1])
    }
}

fn with_bottom<T>(xs: &[T]) -> Vec<Option<&T>> {
    std::iter::once(None).chain(xs.iter().map(Some)).collect()
}

/// Weak gap order, decided as the strong order after prepending a fresh least element.
pub fn leq_w_slice<T: Ord>(s: &[T], t: &[T]) -> bool {
    leq_r_by(s.len() + 1, t.len() + 1, |i, j| lowered(s, i) <= lowered(t, j))
}

pub fn leq_g_slice<T: Ord>(s: &[T], t: &[T]) -> bool {
    leq_w_slice(s, t)
}

/// Decides `variant` by its definition rather than the reductions.
pub fn leq_variant_slice<T: Ord>(s: &[T], t: &[T], variant: GapVariant) -> bool {
    match variant {
        GapVariant::Weak | GapVariant::Gordeev => leq_w_slice(s, t),
        GapVariant::StrongRealizer | GapVariant::StrongRecursive => leq_r_slice(s, t),
    }
}

/// Checks whether `f` realizes `s ≤ t` for the given variant.
pub fn is_realizer<T: Ord>(s: &[T], t: &[T], f: &[usize], variant: GapVariant) -> bool {
    if f.len() != s.len() || f.windows(2).any(|w| w[0] >= w[1]) || f.iter().any(|&j| j >= t.len()) {
        return false;
    }
    if s.iter().zip(f).any(|(x, &j)| *x > t[j]) {
        return false;
    }
    for i in 0..s.len().saturating_sub(1) {
        for tj in &t[f[i] + 1..f[i + 1]] {
            let ok = match variant {
                GapVariant::Gordeev => s[i] <= *tj || s[i + 1] <= *tj,
                _ => s[i + 1] <= *tj,
            };
            if !ok {
                return false;
            }
        }
    }
    if matches!(variant, GapVariant::StrongRealizer | GapVariant::StrongRecursive)
        && !s.is_empty()
        && t[..f[0]].iter().any(|tj| s[0] > *tj)
    {
        return false;
    }
    true
}

/// Brute force over all strictly increasing maps; returns the first realizer found.
pub fn oracle_realizer<T: Ord>(s: &[T], t: &[T], variant: GapVariant) -> Option<Realizer> {
    fn go<T: Ord>(
        s: &[T],
        t: &[T],
        variant: GapVariant,
        f: &mut Vec<usize>,
        from: usize,
    ) -> bool {
        if f.len() == s.len() {
            return is_realizer(s, t, f, variant);
        }
        let need = s.len() - f.len();
        for j in from..=t.len().saturating_sub(need) {
            if t.len() < need {
                break;
            }
            f.push(j);
            if go(s, t, variant, f, j + 1) {
                return true;
            }
            f.pop();
        }
        false
    }
    if s.len() > t.len() {
        return None;
    }
    let mut f = Vec::with_capacity(s.len());
    go(s, t, variant, &mut f, 0).then_some(Realizer { map: f })
}

/// The recursive clauses evaluated literally, without a table.
fn naive_recursive<T: Ord>(s: &[T], t: &[T]) -> bool {
    match (s.split_first(), t.split_first()) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some((b, s1)), Some((g, t1))) => b <= g && (naive_recursive(s1, t1) || naive_recursive(s, t1)),
    }
}

pub fn oracle_leq_slice<T: Ord>(s: &[T], t: &[T], variant: GapVariant) -> bool {
    match variant {
        GapVariant::StrongRecursive => naive_recursive(s, t),
        _ => oracle_realizer(s, t, variant).is_some(),
    }
}

/// Split index `k` with `s[..k] ≤_s tl` and `s[k..] ≤_s tr`, following the proof
/// by recursion on `tl` and on the derivation of `s ≤_s tl * tr`.
fn split_strong_at<T: Ord>(s: &[T], tl: &[T], tr: &[T]) -> usize {
    if tl.is_empty() || s.is_empty() {
        return 0;
    }
    let rest: Vec<&T> = tl[1..].iter().chain(tr).collect();
    let s_refs: Vec<&T> = s.iter().collect();
    if s[0] <= tl[0] && leq_r_slice(&s_refs[1..], &rest) {
        1 + split_strong_at(&s[1..], &tl[1..], tr)
    } else {
        split_strong_at(s, &tl[1..], tr)
    }
}

/// Splits `s ≤_w tl * tr` into `s_l ≤_w tl` and `s_r ≤_w tr`, returning the split index.
pub fn split_weak_slice<T: Ord>(s: &[T], tl: &[T], tr: &[T]) -> Option<usize> {
    let whole: Vec<&T> = tl.iter().chain(tr).collect();
    let s_refs: Vec<&T> = s.iter().collect();
    if !leq_w_slice(&s_refs, &whole) {
        return None;
    }
    let tr_ext: Vec<Option<&T>> = tr.iter().map(Some).collect();
    let k = split_strong_at(&with_bottom(s), &with_bottom(tl), &tr_ext);
    Some(k.saturating_sub(1))
}

pub fn leq_r(s: &GapSeq, t: &GapSeq) -> Result<bool> {
    same_bound(s, t)?;
    Ok(leq_r_slice(&s.members, &t.members))
}

pub fn leq_s(s: &GapSeq, t: &GapSeq) -> Result<bool> {
    leq_r(s, t)
}

/// `s ≤_w t` iff `⟨0⟩ * s ≤_s ⟨0⟩ * t`.
pub fn leq_w(s: &GapSeq, t: &GapSeq) -> Result<bool> {
    same_bound(s, t)?;
    if s.bound.is_zero() {
        return Ok(true);
    }
    leq_s(&s.prepend(OrdTerm::zero())?, &t.prepend(OrdTerm::zero())?)
}

pub fn leq_g(s: &GapSeq, t: &GapSeq) -> Result<bool> {
    leq_w(s, t)
}

pub fn oracle_leq(s: &GapSeq, t: &GapSeq, variant: GapVariant) -> Result<bool> {
    same_bound(s, t)?;
    Ok(oracle_leq_slice(&s.members, &t.members, variant))
}

/// Witness of the splitting lemma.
pub fn split_weak(s: &GapSeq, tl: &GapSeq, tr: &GapSeq) -> Result<(GapSeq, GapSeq)> {
    same_bound(s, tl)?;
    same_bound(s, tr)?;
    let k = split_weak_slice(&s.members, &tl.members, &tr.members)
        .ok_or_else(|| Error::NotDominated(s.to_string()))?;
    let part = |xs: &[OrdTerm]| GapSeq {
        members: xs.to_vec(),
        bound: s.bound.clone(),
    };
    Ok((part(&s.members[..k]), part(&s.members[k..])))
}
