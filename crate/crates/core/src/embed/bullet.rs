use crate::error::{Error, Result};
use crate::gap_seq::GapSeq;
use crate::ord::{div, pow, OrdTerm};

use super::{param, shift_seq, Carrier, Domain, EmbedFn, SeqOrder, Value};

/// A sequence over an ordinal alphabet, compared with [`bullet_leq`].
pub type BulletSeq = GapSeq;

/// The bullet order.
///
/// `row[i]` answers `s[i..] ≤ t[j..]` for the current `j`. Every rule consumes
/// the head of `t`, so the table is filled from the last position of `t`.
pub fn bullet_leq_slice<T: Ord>(s: &[T], t: &[T]) -> bool {
    let n = s.len();
    let mut next: Vec<bool> = (0..=n).map(|i| i == n).collect();
    for y in t.iter().rev() {
        let mut row = vec![false; n + 1];
        row[n] = true;
        for i in 0..n {
            let matched = s[i] <= *y && next[i + 1];
            let dropped = (i..=n)
                .take_while(|&k| k == i || s[k - 1] < *y)
                .any(|k| next[k]);
            row[i] = matched || dropped;
        }
        next = row;
    }
    next[0]
}

pub fn bullet_leq(s: &BulletSeq, t: &BulletSeq) -> Result<bool> {
    if s.bound() != t.bound() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(bullet_leq_slice(s.members(), t.members()))
}

/// The length-`n` sequence over the one-letter alphabet.
pub fn nat_to_bullet(n: u64) -> BulletSeq {
    GapSeq::new(vec![OrdTerm::zero(); n as usize], OrdTerm::one()).expect("zero is below one")
}

pub fn nat_to_bullet_fn() -> EmbedFn {
    EmbedFn::new(
        "nat_to_bullet",
        vec![],
        Domain::ordinals(OrdTerm::omega()),
        Domain::seqs(SeqOrder::Bullet, OrdTerm::one()),
        |x| {
            let a = x.as_ord()?;
            let n = a.to_nat().ok_or_else(|| Error::InputOutOfRange(a.to_string()))?;
            Ok(Value::bullet(nat_to_bullet(n).members().to_vec()))
        },
    )
}

fn bullet_alphabet(f: &EmbedFn) -> Result<OrdTerm> {
    match f.codomain.carrier {
        Carrier::Seqs(SeqOrder::Bullet) => Ok(f.codomain.bound.clone()),
        _ => Err(Error::TypeMismatch(format!("{} does not map into a bullet order", f.name))),
    }
}

/// From `g: β → α^•`, the stage map `β^n → (α+1)^•` with `α` as separator.
///
/// With `stages = None` the number of digits is read off the input's base-`β`
/// expansion, which yields a map on `β^ω`.
pub fn bullet_stage(g: &EmbedFn, stages: Option<u64>) -> Result<EmbedFn> {
    let alpha = bullet_alphabet(g)?;
    if g.domain.carrier != Carrier::Ordinals {
        return Err(Error::TypeMismatch(format!("{} is not defined on ordinals", g.name)));
    }
    let beta = g.domain.bound.clone();
    if beta.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let bound = match stages {
        Some(k) => pow(&beta, &OrdTerm::nat(k)),
        None => pow(&beta, &OrdTerm::omega()),
    };
    let stage_name = stages.map_or("w".to_string(), |k| k.to_string());
    let (g, b, top) = (g.clone(), bound.clone(), alpha.clone());
    Ok(EmbedFn::new(
        "bullet_stage",
        vec![param("g", &g.name), param("n", stage_name)],
        Domain::ordinals(bound),
        Domain::seqs(SeqOrder::Bullet, alpha.succ()),
        move |x| {
            let mut rest = x.as_ord()?.clone();
            if rest >= b {
                return Err(Error::InputOutOfRange(format!("{rest} is not below {b}")));
            }
            let mut out = Vec::new();
            let mut step = 0;
            while stages.map_or(!rest.is_zero(), |k| step < k) {
                let (q, r) = div(&rest, &beta)?;
                out.extend(g.apply_ord_seq(&r)?);
                out.push(top.clone());
                rest = q;
                step += 1;
            }
            Ok(Value::bullet(out))
        },
    ))
}

/// From `f: α → S^w_n`, the map `α^• → S^w_{n+1}` sending each letter `a` to `(1 + f(a)) * ⟨0⟩`.
pub fn bullet_to_weak(f: &EmbedFn) -> Result<EmbedFn> {
    let n = match (&f.domain.carrier, &f.codomain.carrier) {
        (Carrier::Ordinals, Carrier::Seqs(SeqOrder::Weak)) => f.codomain.bound.clone(),
        _ => {
            return Err(Error::TypeMismatch(format!(
                "{} must map ordinals to weak gap sequences",
                f.name
            )))
        }
    };
    if !n.is_finite() {
        return Err(Error::PreconditionViolated(format!("target bound {n} must be finite")));
    }
    let inner = f.clone();
    Ok(EmbedFn::new(
        "bullet_to_weak",
        vec![param("f", &f.name)],
        Domain::seqs(SeqOrder::Bullet, f.domain.bound.clone()),
        Domain::seqs(SeqOrder::Weak, n.succ()),
        move |x| {
            let mut out = Vec::new();
            for a in x.as_seq()? {
                out.extend(shift_seq(&OrdTerm::one(), &inner.apply_ord_seq(a)?));
                out.push(OrdTerm::zero());
            }
            Ok(Value::weak(out))
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ord, print_seq};

    fn b(xs: &[u64], alphabet: u64) -> BulletSeq {
        GapSeq::from_nats(xs, alphabet).unwrap()
    }

    fn zeros_fn() -> EmbedFn {
        EmbedFn::new(
            "zeros",
            vec![],
            Domain::ordinals(OrdTerm::omega()),
            Domain::seqs(SeqOrder::Weak, OrdTerm::one()),
            |x| Ok(Value::weak(vec![OrdTerm::zero(); x.as_ord()?.to_nat().unwrap() as usize])),
        )
    }

    #[test]
    fn bullet_examples() {
        assert!(bullet_leq(&b(&[], 2), &b(&[1, 0], 2)).unwrap());
        assert!(bullet_leq(&b(&[0, 0, 1], 2), &b(&[1, 1], 2)).unwrap());
        assert!(!bullet_leq(&b(&[1, 0], 2), &b(&[0, 1], 2)).unwrap());
        assert!(!bullet_leq(&nat_to_bullet(4), &nat_to_bullet(3)).unwrap());
        assert_eq!(bullet_leq(&b(&[], 2), &b(&[], 3)), Err(Error::AlphabetMismatch));
        assert_eq!(nat_to_bullet(3).members().len(), 3);
        assert!(nat_to_bullet(0).is_empty());
    }

    #[test]
    fn stage_examples() {
        let h1 = bullet_stage(&nat_to_bullet_fn(), Some(1)).unwrap();
        let v = h1.apply(&Value::Ord(OrdTerm::nat(3))).unwrap();
        assert_eq!(v.to_string(), "[0,0,0,1]");
        let h2 = bullet_stage(&nat_to_bullet_fn(), Some(2)).unwrap();
        let v = h2.apply(&Value::Ord(parse_ord("w*2+3").unwrap())).unwrap();
        assert_eq!(v.to_string(), "[0,0,0,1,0,0,1]");
        assert_eq!(h2.apply(&Value::Ord(OrdTerm::zero())).unwrap().to_string(), "[1,1]");
        assert!(matches!(
            h2.apply(&Value::Ord(parse_ord("w^2").unwrap())),
            Err(Error::InputOutOfRange(_))
        ));
        let hw = bullet_stage(&nat_to_bullet_fn(), None).unwrap();
        assert_eq!(hw.domain.bound, parse_ord("w^w").unwrap());
        assert_eq!(hw.apply(&Value::Ord(OrdTerm::zero())).unwrap().to_string(), "[]");
    }

    #[test]
    fn to_weak_examples() {
        let g = bullet_to_weak(&zeros_fn()).unwrap();
        let run = |xs: &[u64]| {
            let v = Value::bullet(xs.iter().map(|&k| OrdTerm::nat(k)).collect());
            print_seq(g.apply(&v).unwrap().as_seq().unwrap())
        };
        assert_eq!(run(&[]), "[]");
        assert_eq!(run(&[2]), "[1,1,0]");
        assert_eq!(run(&[2, 1]), "[1,1,0,1,0]");
    }
}
