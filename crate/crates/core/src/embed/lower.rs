use crate::error::{Error, Result};
use crate::gap_tree::LabTree;
use crate::ord::{add, base_decompose, cnf_head, div, lsub, mk_phi, mul, omega_pow, pow, OrdTerm};

use super::{param, shift_seq, Carrier, Domain, EmbedFn, SeqOrder, Value, ValueTree};

fn ordinal_source(f: &EmbedFn) -> Result<OrdTerm> {
    if f.domain.carrier != Carrier::Ordinals {
        return Err(Error::TypeMismatch(format!("{} is not defined on ordinals", f.name)));
    }
    Ok(f.domain.bound.clone())
}

fn seq_target(f: &EmbedFn, order: SeqOrder) -> Result<OrdTerm> {
    if f.codomain.carrier != Carrier::Seqs(order) {
        return Err(Error::TypeMismatch(format!("{} does not map into {order:?} gap sequences", f.name)));
    }
    Ok(f.codomain.bound.clone())
}

fn below(x: &OrdTerm, bound: &OrdTerm) -> Result<()> {
    if x >= bound {
        return Err(Error::InputOutOfRange(format!("{x} is not below {bound}")));
    }
    Ok(())
}

/// From `f: α → S^w_{ω^γ+δ}`, the map `α^{ω^γ} → S^s_{ω^γ+δ}` sending
/// `α^β·κ + λ` to `(β + ⟨0⟩ * f(κ)) * g(λ)`; images are empty or start below `ω^γ`.
pub fn strong_lower_base(f: &EmbedFn, gamma: &OrdTerm) -> Result<EmbedFn> {
    let alpha = ordinal_source(f)?;
    let target = seq_target(f, SeqOrder::Weak)?;
    if alpha < OrdTerm::nat(2) {
        return Err(Error::BaseTooSmall);
    }
    if cnf_head(&target)?.0 != *gamma {
        return Err(Error::PreconditionViolated(format!(
            "target bound {target} does not start with ω^{gamma}"
        )));
    }
    let w = omega_pow(gamma);
    let bound = pow(&alpha, &w);
    let (inner, b) = (f.clone(), bound.clone());
    Ok(EmbedFn::new(
        "strong_lower_base",
        vec![param("f", &f.name), param("gamma", gamma)],
        Domain::ordinals(bound),
        Domain::seqs(SeqOrder::Strong, target),
        move |x| {
            let mut rest = x.as_ord()?.clone();
            below(&rest, &b)?;
            let mut out = Vec::new();
            while !rest.is_zero() {
                let (beta, kappa, lambda) = base_decompose(&rest, &alpha)?;
                let mut block = vec![OrdTerm::zero()];
                block.extend(inner.apply_ord_seq(&kappa)?);
                out.extend(shift_seq(&beta, &block));
                rest = lambda;
            }
            if out.first().is_some_and(|m| *m >= w) {
                return Err(Error::RangePropertyViolated(format!("image of {x} starts at {}", out[0])));
            }
            Ok(Value::strong(out))
        },
    ))
}

/// From `f: α → S^s_{ω^γ+δ}` with images empty or starting below `ω^γ` and
/// `g: β → S^s_δ`, the map `α·β → S^s_{ω^γ+δ}` sending `α·β' + α'` to
/// `(ω^γ + g(β')) * f(α')`.
pub fn strong_lower_combine(f: &EmbedFn, g: &EmbedFn) -> Result<EmbedFn> {
    let alpha = ordinal_source(f)?;
    let beta = ordinal_source(g)?;
    let target = seq_target(f, SeqOrder::Strong)?;
    let inner = seq_target(g, SeqOrder::Strong)?;
    let (gamma, delta) = cnf_head(&target)?;
    if inner > delta {
        return Err(Error::PreconditionViolated(format!(
            "{} maps below {inner}, which exceeds {delta}",
            g.name
        )));
    }
    let w = omega_pow(&gamma);
    let bound = mul(&alpha, &beta);
    let (ff, gg, b) = (f.clone(), g.clone(), bound.clone());
    Ok(EmbedFn::new(
        "strong_lower_combine",
        vec![param("f", &f.name), param("g", &g.name)],
        Domain::ordinals(bound),
        Domain::seqs(SeqOrder::Strong, target),
        move |x| {
            let x = x.as_ord()?;
            below(x, &b)?;
            let (q, r) = div(x, &alpha)?;
            let mut out = shift_seq(&w, &gg.apply_ord_seq(&q)?);
            let tail = ff.apply_ord_seq(&r)?;
            if tail.first().is_some_and(|m| *m >= w) {
                return Err(Error::RangePropertyViolated(format!("image of {r} starts at {}", tail[0])));
            }
            out.extend(tail);
            Ok(Value::strong(out))
        },
    ))
}

/// Target of [`veblen_lower`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VeblenTarget {
    /// `φ_α(β) → S^w_{ω^α+ρ}` from `f: β → S^w_ρ ∖ {⟨⟩}`.
    Seq,
    /// `φ_{1+α}(β) → B_{ω^α+ρ,1}` from `f: β → B_{ρ,1} ∖ {0 ⋆ []}`.
    Tree,
}

struct Veblen {
    f: EmbedFn,
    alpha: OrdTerm,
    beta: OrdTerm,
}

impl Veblen {
    fn top(&self, d: &OrdTerm) -> Result<Value> {
        if *d >= self.beta {
            return Err(Error::IndexOutOfRange(format!("{d} is not below {}", self.beta)));
        }
        self.f.apply(&Value::Ord(d.clone()))
    }

    fn top_seq(&self, d: &OrdTerm) -> Result<Vec<OrdTerm>> {
        let s = self.top(d)?.into_seq()?;
        if s.is_empty() {
            return Err(Error::ExcludedValueInRange(d.to_string()));
        }
        Ok(shift_seq(&omega_pow(&self.alpha), &s))
    }

    fn seq(&self, x: &OrdTerm) -> Result<Vec<OrdTerm>> {
        let xs = x.summands();
        match xs.len() {
            0 => Ok(vec![OrdTerm::zero()]),
            1 => {
                let (g, d) = (xs[0].first(), xs[0].second());
                if *g < self.alpha {
                    Ok(shift_seq(&omega_pow(g), &self.seq(d)?))
                } else if *g == self.alpha {
                    self.top_seq(d)
                } else {
                    self.top_seq(x)
                }
            }
            _ => {
                let head = OrdTerm::from_summands_unchecked(vec![xs[0].clone()]);
                let rest = OrdTerm::from_summands_unchecked(xs[1..].to_vec());
                let mut out = self.seq(&head)?;
                out.push(OrdTerm::zero());
                out.extend(self.seq(&rest)?);
                Ok(out)
            }
        }
    }

    fn top_tree(&self, d: &OrdTerm) -> Result<ValueTree> {
        let t = self.top(d)?.into_tree()?;
        if t.is_leaf() {
            return Err(Error::ExcludedValueInRange(d.to_string()));
        }
        let w = omega_pow(&self.alpha);
        Ok(t.map_labels(&|b| add(&w, b)))
    }

    fn tree(&self, x: &OrdTerm) -> Result<ValueTree> {
        let unit = || LabTree::leaf(Value::Unit);
        let xs = x.summands();
        if xs.is_empty() {
            return Ok(LabTree::node_unchecked(OrdTerm::zero(), unit(), unit()));
        }
        let (g, d) = (xs[0].first(), xs[0].second());
        if xs.len() > 1 || g.is_zero() {
            let rest = OrdTerm::from_summands_unchecked(xs[1..].to_vec());
            return Ok(LabTree::node_unchecked(
                OrdTerm::zero(),
                self.tree(&xs[0].exponent())?,
                self.tree(&rest)?,
            ));
        }
        let gamma = lsub(&OrdTerm::one(), g);
        if gamma < self.alpha {
            let w = omega_pow(&gamma);
            Ok(self.tree(d)?.map_labels(&|b| add(&w, b)))
        } else if gamma == self.alpha {
            self.top_tree(d)
        } else {
            self.top_tree(x)
        }
    }
}

/// Lifts `f` on `β` to the Veblen value `φ_α(β)` (sequences) or `φ_{1+α}(β)` (trees).
///
/// A principal term whose index exceeds the top index is a fixed point below
/// `β` and is sent through `f` directly.
pub fn veblen_lower(f: &EmbedFn, alpha: &OrdTerm, target: VeblenTarget) -> Result<EmbedFn> {
    let beta = ordinal_source(f)?;
    let rho = f.codomain.bound.clone();
    let w = omega_pow(alpha);
    let (index, codomain) = match target {
        VeblenTarget::Seq => {
            seq_target(f, SeqOrder::Weak)?;
            (alpha.clone(), Domain::seqs(SeqOrder::Weak, add(&w, &rho)))
        }
        VeblenTarget::Tree => {
            if !matches!(f.codomain.carrier, Carrier::Trees { leaf_bound: None, .. }) {
                return Err(Error::TypeMismatch(format!("{} does not map into unit-leaf trees", f.name)));
            }
            (add(&OrdTerm::one(), alpha), Domain::trees(add(&w, &rho), false, None))
        }
    };
    let bound = mk_phi(&index, &beta);
    let v = Veblen {
        f: f.clone(),
        alpha: alpha.clone(),
        beta,
    };
    let b = bound.clone();
    Ok(EmbedFn::new(
        "veblen_lower",
        vec![
            param("f", &f.name),
            param("alpha", alpha),
            param("target", format!("{target:?}").to_lowercase()),
        ],
        Domain::ordinals(bound),
        codomain,
        move |x| {
            let x = x.as_ord()?;
            below(x, &b)?;
            match target {
                VeblenTarget::Seq => Ok(Value::weak(v.seq(x)?)),
                VeblenTarget::Tree => Ok(Value::tree(v.tree(x)?)),
            }
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ord, print_seq};

    fn p(s: &str) -> OrdTerm {
        parse_ord(s).unwrap()
    }

    fn singleton(order: SeqOrder, bound: OrdTerm) -> EmbedFn {
        EmbedFn::new(
            "singleton",
            vec![],
            Domain::ordinals(OrdTerm::omega()),
            Domain::seqs(order, bound),
            move |x| Ok(Value::Seq(order, vec![x.as_ord()?.clone()])),
        )
    }

    fn image(f: &EmbedFn, x: &str) -> String {
        print_seq(f.apply(&Value::Ord(p(x))).unwrap().as_seq().unwrap())
    }

    #[test]
    fn strong_lower_examples() {
        let f = singleton(SeqOrder::Weak, OrdTerm::omega());
        let g = strong_lower_base(&f, &OrdTerm::one()).unwrap();
        assert_eq!(image(&g, "0"), "[]");
        assert_eq!(image(&g, "3"), "[0,3]");
        assert_eq!(image(&g, "w*2+3"), "[1,3,0,3]");
        assert_eq!(g.domain.bound, p("w^w"));

        let f2 = singleton(SeqOrder::Weak, p("w*2"));
        let base = strong_lower_base(&f2, &OrdTerm::one()).unwrap().restrict(OrdTerm::omega()).unwrap();
        let inner = singleton(SeqOrder::Strong, OrdTerm::omega());
        let h = strong_lower_combine(&base, &inner).unwrap();
        assert_eq!(image(&h, "w+3"), "[w+1,0,3]");
        assert_eq!(image(&h, "0"), "[w]");
        assert!(strong_lower_base(&singleton(SeqOrder::Weak, OrdTerm::omega()), &OrdTerm::zero()).is_err());
    }

    #[test]
    fn veblen_lower_examples() {
        let zeros = EmbedFn::new(
            "zeros",
            vec![],
            Domain::ordinals(OrdTerm::omega()),
            Domain::seqs(SeqOrder::Weak, OrdTerm::one()),
            |x| Ok(Value::weak(vec![OrdTerm::zero(); 1 + x.as_ord()?.to_nat().unwrap() as usize])),
        );
        let g = veblen_lower(&zeros, &OrdTerm::one(), VeblenTarget::Seq).unwrap();
        assert_eq!(image(&g, "0"), "[0]");
        assert_eq!(image(&g, "2"), "[1,0,1]");
        assert_eq!(image(&g, "phi(1,2)"), "[w,w,w]");
        assert!(matches!(g.apply(&Value::Ord(p("phi(1,w)"))), Err(Error::InputOutOfRange(_))));

        let comb = EmbedFn::new(
            "comb",
            vec![],
            Domain::ordinals(OrdTerm::omega()),
            Domain::trees(OrdTerm::one(), false, None),
            |x| {
                let mut t = LabTree::leaf(Value::Unit);
                for _ in 0..=x.as_ord()?.to_nat().unwrap() {
                    t = LabTree::node_unchecked(OrdTerm::zero(), LabTree::leaf(Value::Unit), t);
                }
                Ok(Value::tree(t))
            },
        );
        let g = veblen_lower(&comb, &OrdTerm::zero(), VeblenTarget::Tree).unwrap();
        assert_eq!(g.apply(&Value::Ord(p("0"))).unwrap().to_string(), "(0 . .)");
        assert_eq!(g.apply(&Value::Ord(p("1"))).unwrap().to_string(), "(0 (0 . .) (0 . .))");
        assert_eq!(
            g.apply(&Value::Ord(p("phi(1,0)"))).unwrap().to_string(),
            "(1 . .)"
        );
    }
}
