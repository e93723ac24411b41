//! Ordinal notations below Γ₀ in Veblen normal form.
//!
//! A term is a weakly descending list of principal terms `φ(g, d)`, each
//! satisfying `d < φ(g, d)`. The empty list is `0`. Structural equality
//! coincides with ordinal equality on normal forms.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Three-way comparison outcome.
pub type Ordering3 = Ordering;

/// An ordinal below Γ₀ in Veblen normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct OrdTerm {
    summands: Vec<Principal>,
}

/// `φ(first, second)`, an additively indecomposable ordinal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Principal {
    first: Arc<OrdTerm>,
    second: Arc<OrdTerm>,
}

impl Principal {
    /// Builds `φ(first, second)`, rejecting it unless `second < φ(first, second)`.
    pub fn new(first: OrdTerm, second: OrdTerm) -> Result<Self> {
        let p = Principal {
            first: Arc::new(first),
            second: Arc::new(second),
        };
        if !p.is_normal() {
            return Err(Error::MalformedTerm(format!(
                "φ({}, {}) is a fixed point",
                p.first, p.second
            )));
        }
        Ok(p)
    }

    pub fn first(&self) -> &OrdTerm {
        &self.first
    }

    pub fn second(&self) -> &OrdTerm {
        &self.second
    }

    fn is_normal(&self) -> bool {
        match self.second.as_single() {
            Some(q) => q.first <= self.first,
            None => true,
        }
    }

    /// The Cantor normal form exponent: `ω^exponent = self`.
    pub fn exponent(&self) -> OrdTerm {
        if self.first.is_zero() {
            (*self.second).clone()
        } else {
            OrdTerm::from(self.clone())
        }
    }
}

impl From<Principal> for OrdTerm {
    fn from(p: Principal) -> Self {
        OrdTerm { summands: vec![p] }
    }
}

impl OrdTerm {
    pub fn zero() -> Self {
        OrdTerm::default()
    }

    pub fn one() -> Self {
        OrdTerm::from(Principal {
            first: Arc::new(OrdTerm::zero()),
            second: Arc::new(OrdTerm::zero()),
        })
    }

    pub fn omega() -> Self {
        mk_phi(&OrdTerm::zero(), &OrdTerm::one())
    }

    pub fn nat(n: u64) -> Self {
        let one = Principal {
            first: Arc::new(OrdTerm::zero()),
            second: Arc::new(OrdTerm::zero()),
        };
        OrdTerm {
            summands: vec![one; n as usize],
        }
    }

    /// Builds a term from summands, validating both normal-form invariants.
    pub fn from_summands(summands: Vec<Principal>) -> Result<Self> {
        let t = OrdTerm { summands };
        t.validate()?;
        Ok(t)
    }

    /// Builds a term without validation; comparisons on malformed terms are meaningless.
    pub fn from_summands_unchecked(summands: Vec<Principal>) -> Self {
        OrdTerm { summands }
    }

    /// `φ(first, second)` as a principal without checking the fixed-point condition.
    pub fn phi_unchecked(first: OrdTerm, second: OrdTerm) -> Self {
        OrdTerm::from(Principal {
            first: Arc::new(first),
            second: Arc::new(second),
        })
    }

    pub fn summands(&self) -> &[Principal] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.summands.len() == 1 && self.summands[0].first.is_zero() && self.summands[0].second.is_zero()
    }

    pub fn as_single(&self) -> Option<&Principal> {
        match self.summands.as_slice() {
            [p] => Some(p),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.summands
            .iter()
            .all(|p| p.first.is_zero() && p.second.is_zero())
    }

    pub fn to_nat(&self) -> Option<u64> {
        self.is_finite().then_some(self.summands.len() as u64)
    }

    /// Number of φ-symbols in the term, counted recursively.
    pub fn size(&self) -> usize {
        self.summands
            .iter()
            .map(|p| 1 + p.first.size() + p.second.size())
            .sum()
    }

    /// Checks every normal-form invariant, recursively.
    pub fn validate(&self) -> Result<()> {
        self.validate_shared(&mut HashSet::new())
    }

    /// Shared subterms are checked once, keyed by address.
    fn validate_shared(&self, seen: &mut HashSet<*const OrdTerm>) -> Result<()> {
        for p in &self.summands {
            for arg in [&p.first, &p.second] {
                if seen.insert(Arc::as_ptr(arg)) {
                    arg.validate_shared(seen)?;
                }
            }
            if !p.is_normal() {
                return Err(Error::MalformedTerm(format!(
                    "φ({}, {}) is a fixed point",
                    p.first, p.second
                )));
            }
        }
        for w in self.summands.windows(2) {
            if cmp_principal(&w[0], &w[1]) == Ordering::Less {
                return Err(Error::MalformedTerm("summands are not descending".into()));
            }
        }
        Ok(())
    }

    /// Successor `self + 1`.
    pub fn succ(&self) -> OrdTerm {
        add(self, &OrdTerm::one())
    }

    /// Largest finite tail, i.e. the `n` in `λ + n` with `λ` zero or a limit.
    pub fn finite_part(&self) -> u64 {
        self.summands
            .iter()
            .rev()
            .take_while(|p| p.first.is_zero() && p.second.is_zero())
            .count() as u64
    }
}

impl PartialOrd for OrdTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OrdTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        for (x, y) in self.summands.iter().zip(&other.summands) {
            match cmp_principal(x, y) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        self.summands.len().cmp(&other.summands.len())
    }
}

impl PartialOrd for Principal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Principal {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_principal(self, other)
    }
}

/// Compares `x` against the single principal `p` viewed as a term.
fn cmp_with_principal(x: &OrdTerm, p: &Principal) -> Ordering {
    match x.summands.first() {
        None => Ordering::Less,
        Some(x0) => match cmp_principal(x0, p) {
            Ordering::Equal if x.summands.len() > 1 => Ordering::Greater,
            o => o,
        },
    }
}

fn cmp_principal(a: &Principal, b: &Principal) -> Ordering {
    if Arc::ptr_eq(&a.first, &b.first) && Arc::ptr_eq(&a.second, &b.second) {
        return Ordering::Equal;
    }
    match a.first.cmp(&b.first) {
        Ordering::Equal => a.second.cmp(&b.second),
        Ordering::Less => match cmp_with_principal(&a.second, b) {
            Ordering::Less => Ordering::Less,
            _ => Ordering::Greater,
        },
        Ordering::Greater => match cmp_with_principal(&b.second, a) {
            Ordering::Less => Ordering::Greater,
            _ => Ordering::Less,
        },
    }
}

/// Validating comparison.
pub fn cmp_ord(a: &OrdTerm, b: &OrdTerm) -> Result<Ordering3> {
    a.validate()?;
    b.validate()?;
    Ok(a.cmp(b))
}

/// Normalizing constructor for `φ_g(d)`.
pub fn mk_phi(g: &OrdTerm, d: &OrdTerm) -> OrdTerm {
    if let Some(q) = d.as_single() {
        if *q.first > *g {
            return d.clone();
        }
    }
    OrdTerm::from(Principal {
        first: Arc::new(g.clone()),
        second: Arc::new(d.clone()),
    })
}

/// `ω^e`.
pub fn omega_pow(e: &OrdTerm) -> OrdTerm {
    mk_phi(&OrdTerm::zero(), e)
}

/// Ordinary (non-commutative) ordinal sum.
pub fn add(a: &OrdTerm, b: &OrdTerm) -> OrdTerm {
    let Some(y0) = b.summands.first() else {
        return a.clone();
    };
    let keep = a.summands.iter().take_while(|x| *x >= y0).count();
    let mut summands = a.summands[..keep].to_vec();
    summands.extend(b.summands.iter().cloned());
    OrdTerm { summands }
}

/// Left subtraction `−a + b`: the unique `g` with `a + g = b`, or `0` if `a > b`.
pub fn lsub(a: &OrdTerm, b: &OrdTerm) -> OrdTerm {
    if a > b {
        return OrdTerm::zero();
    }
    let k = a
        .summands
        .iter()
        .zip(&b.summands)
        .take_while(|(x, y)| x == y)
        .count();
    OrdTerm {
        summands: b.summands[k..].to_vec(),
    }
}

/// Hessenberg (natural) sum.
pub fn hessenberg(a: &OrdTerm, b: &OrdTerm) -> OrdTerm {
    let mut summands = Vec::with_capacity(a.summands.len() + b.summands.len());
    let (mut i, mut j) = (0, 0);
    while i < a.summands.len() && j < b.summands.len() {
        if a.summands[i] >= b.summands[j] {
            summands.push(a.summands[i].clone());
            i += 1;
        } else {
            summands.push(b.summands[j].clone());
            j += 1;
        }
    }
    summands.extend_from_slice(&a.summands[i..]);
    summands.extend_from_slice(&b.summands[j..]);
    OrdTerm { summands }
}

/// Hessenberg (natural) product.
pub fn nat_product(a: &OrdTerm, b: &OrdTerm) -> OrdTerm {
    let mut summands: Vec<Principal> = Vec::with_capacity(a.summands.len() * b.summands.len());
    for x in &a.summands {
        let ex = x.exponent();
        for y in &b.summands {
            let e = hessenberg(&ex, &y.exponent());
            summands.extend(omega_pow(&e).summands);
        }
    }
    summands.sort_by(|x, y| y.cmp(x));
    OrdTerm { summands }
}

/// Ordinary ordinal product.
pub fn mul(a: &OrdTerm, b: &OrdTerm) -> OrdTerm {
    let Some(a0) = a.summands.first() else {
        return OrdTerm::zero();
    };
    let lead = a0.exponent();
    let mut acc = OrdTerm::zero();
    for q in &b.summands {
        let f = q.exponent();
        let term = if f.is_zero() {
            a.clone()
        } else {
            omega_pow(&add(&lead, &f))
        };
        acc = add(&acc, &term);
    }
    acc
}

/// Ordinary ordinal exponentiation.
pub fn pow(a: &OrdTerm, b: &OrdTerm) -> OrdTerm {
    if b.is_zero() {
        return OrdTerm::one();
    }
    if a.is_zero() {
        return OrdTerm::zero();
    }
    if a.is_one() {
        return OrdTerm::one();
    }
    let finite = a.is_finite();
    let lead = a.summands[0].exponent();
    let mut acc = OrdTerm::one();
    for q in &b.summands {
        let f = q.exponent();
        let factor = if f.is_zero() {
            a.clone()
        } else if finite {
            omega_pow(&omega_pow(&lsub(&OrdTerm::one(), &f)))
        } else {
            omega_pow(&mul(&lead, &omega_pow(&f)))
        };
        acc = mul(&acc, &factor);
    }
    acc
}

/// Splits `a = ω^γ + δ` with `δ < ω^{γ+1}`.
pub fn cnf_head(a: &OrdTerm) -> Result<(OrdTerm, OrdTerm)> {
    let p = a.summands.first().ok_or(Error::ZeroHasNoHead)?;
    Ok((
        p.exponent(),
        OrdTerm {
            summands: a.summands[1..].to_vec(),
        },
    ))
}

/// Cantor normal form with coefficients: `Σ ω^e · n`, exponents strictly descending.
pub fn cnf(a: &OrdTerm) -> Vec<(OrdTerm, u64)> {
    let mut out: Vec<(OrdTerm, u64)> = Vec::new();
    let mut i = 0;
    while i < a.summands.len() {
        let mut j = i;
        while j < a.summands.len() && a.summands[j] == a.summands[i] {
            j += 1;
        }
        out.push((a.summands[i].exponent(), (j - i) as u64));
        i = j;
    }
    out
}

/// Inverse of [`cnf`].
pub fn from_cnf(terms: &[(OrdTerm, u64)]) -> OrdTerm {
    let mut summands = Vec::new();
    for (e, n) in terms {
        let p = omega_pow(e).summands.pop().expect("ω-power is principal");
        summands.extend(std::iter::repeat_n(p, *n as usize));
    }
    OrdTerm { summands }
}

/// Left division: `s = d·q + r` with `r < d`.
pub fn div(s: &OrdTerm, d: &OrdTerm) -> Result<(OrdTerm, OrdTerm)> {
    if d.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if s < d {
        return Ok((OrdTerm::zero(), s.clone()));
    }
    let dc = cnf(d);
    let (d0, cd) = (&dc[0].0, dc[0].1);
    let mut high = Vec::new();
    let mut low = Vec::new();
    for (e, n) in cnf(s) {
        if e > *d0 {
            high.push((lsub(d0, &e), n));
        } else {
            low.push((e, n));
        }
    }
    let s_low = from_cnf(&low);
    let mut k = match low.first() {
        Some((e, n)) if e == d0 => n / cd,
        _ => 0,
    };
    while k > 0 && mul(d, &OrdTerm::nat(k)) > s_low {
        k -= 1;
    }
    let q = add(&from_cnf(&high), &OrdTerm::nat(k));
    let r = lsub(&mul(d, &q), s);
    debug_assert!(r < *d && add(&mul(d, &q), &r) == *s);
    Ok((q, r))
}

/// Largest `β` with `base^β ≤ s`, for `base ≥ 2` and `s > 0`.
pub fn log(s: &OrdTerm, base: &OrdTerm) -> Result<OrdTerm> {
    if *base < OrdTerm::nat(2) {
        return Err(Error::BaseTooSmall);
    }
    if s.is_zero() {
        return Err(Error::ZeroHasNoHead);
    }
    let beta = if let Some(n) = base.to_nat() {
        let ilog = |m: u64| {
            let (mut k, mut p) = (0u64, n);
            while p <= m {
                k += 1;
                p = p.saturating_mul(n);
            }
            k
        };
        match s.to_nat() {
            Some(m) => OrdTerm::nat(ilog(m)),
            None => {
                let (e0, c) = cnf(s)[0].clone();
                add(&mul(&OrdTerm::omega(), &e0), &OrdTerm::nat(ilog(c)))
            }
        }
    } else {
        let e0 = cnf_head(s)?.0;
        let b0 = cnf_head(base)?.0;
        let (q, _) = div(&e0, &b0)?;
        if pow(base, &q) <= *s {
            q
        } else {
            let mut summands = q.summands;
            summands.pop();
            OrdTerm { summands }
        }
    };
    debug_assert!(pow(base, &beta) <= *s && pow(base, &beta.succ()) > *s);
    Ok(beta)
}

/// Leading base-`base` digit: `s = base^β·κ + λ`, `0 < κ < base`, `λ < base^β`.
pub fn base_decompose(s: &OrdTerm, base: &OrdTerm) -> Result<(OrdTerm, OrdTerm, OrdTerm)> {
    let beta = log(s, base)?;
    let (kappa, lambda) = div(s, &pow(base, &beta))?;
    Ok((beta, kappa, lambda))
}

/// The ψ function on positive arguments.
pub fn psi(a: &OrdTerm, b: &OrdTerm) -> Result<OrdTerm> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    if *b >= mk_phi(&a.succ(), &OrdTerm::zero()) {
        Ok(mk_phi(a, &b.succ()))
    } else if b.is_one() && *a < mk_phi(a, &OrdTerm::zero()) {
        Ok(mk_phi(a, &OrdTerm::zero()))
    } else {
        Ok(mk_phi(a, b))
    }
}

pub fn is_indecomposable(a: &OrdTerm) -> bool {
    a.summands.len() == 1
}

pub fn is_epsilon(a: &OrdTerm) -> bool {
    a.as_single().is_some_and(|p| !p.first.is_zero())
}

impl fmt::Display for OrdTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::print_ord(self))
    }
}

impl fmt::Debug for OrdTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for Principal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "φ({}, {})", self.first, self.second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> OrdTerm {
        OrdTerm::omega()
    }
    fn n(k: u64) -> OrdTerm {
        OrdTerm::nat(k)
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(cmp_ord(&n(0), &n(1)).unwrap(), Ordering::Less);
        assert_eq!(cmp_ord(&n(2), &w()).unwrap(), Ordering::Less);
        let eps0 = mk_phi(&n(1), &n(0));
        assert_eq!(cmp_ord(&eps0, &omega_pow(&w())).unwrap(), Ordering::Greater);
    }

    #[test]
    fn malformed_rejected() {
        let eps0 = mk_phi(&n(1), &n(0));
        let bad = OrdTerm::phi_unchecked(n(0), eps0);
        assert!(matches!(cmp_ord(&bad, &n(0)), Err(Error::MalformedTerm(_))));
        let ascending = OrdTerm::from_summands_unchecked(vec![
            n(1).summands[0].clone(),
            w().summands[0].clone(),
        ]);
        assert!(ascending.validate().is_err());
    }

    #[test]
    fn phi_collapse() {
        let eps0 = mk_phi(&n(1), &n(0));
        assert_eq!(mk_phi(&n(0), &eps0), eps0);
        assert_eq!(mk_phi(&n(0), &n(0)), n(1));
        assert_ne!(mk_phi(&n(1), &n(1)), n(1));
    }

    #[test]
    fn addition() {
        assert_eq!(add(&n(1), &w()), w());
        assert_eq!(add(&add(&w(), &n(1)), &w()), mul(&w(), &n(2)));
        assert_eq!(add(&w(), &n(0)), w());
    }

    #[test]
    fn left_subtraction() {
        assert_eq!(lsub(&n(5), &n(3)), n(0));
        assert_eq!(lsub(&w(), &add(&w(), &n(1))), n(1));
        assert_eq!(lsub(&n(3), &w()), w());
    }

    #[test]
    fn natural_operations() {
        let w1 = add(&w(), &n(1));
        assert_eq!(hessenberg(&w1, &w()), add(&mul(&w(), &n(2)), &n(1)));
        assert_eq!(nat_product(&w(), &w()), omega_pow(&n(2)));
        assert_eq!(nat_product(&w1, &n(2)), add(&mul(&w(), &n(2)), &n(2)));
    }

    #[test]
    fn products_and_powers() {
        assert_eq!(pow(&w(), &w()), omega_pow(&omega_pow(&n(1))));
        assert_eq!(pow(&n(2), &w()), w());
        assert_eq!(pow(&n(2), &n(5)), n(32));
        assert_eq!(mul(&add(&w(), &n(1)), &w()), omega_pow(&n(2)));
        assert_eq!(pow(&add(&w(), &n(1)), &n(2)), add(&add(&omega_pow(&n(2)), &w()), &n(1)));
    }

    #[test]
    fn heads_and_digits() {
        assert_eq!(cnf_head(&n(1)).unwrap(), (n(0), n(0)));
        let x = add(&omega_pow(&w()), &w());
        assert_eq!(cnf_head(&x).unwrap(), (w(), w()));
        assert_eq!(cnf_head(&n(0)), Err(Error::ZeroHasNoHead));
        let s = add(&mul(&w(), &n(2)), &n(3));
        assert_eq!(base_decompose(&s, &w()).unwrap(), (n(1), n(2), n(3)));
        assert_eq!(base_decompose(&w(), &w()).unwrap(), (n(1), n(1), n(0)));
        assert_eq!(base_decompose(&n(5), &n(2)).unwrap(), (n(2), n(1), n(1)));
        assert_eq!(base_decompose(&n(5), &n(1)), Err(Error::BaseTooSmall));
    }

    #[test]
    fn psi_cases() {
        assert_eq!(psi(&n(1), &n(1)).unwrap(), mk_phi(&n(1), &n(0)));
        assert_eq!(psi(&n(1), &n(2)).unwrap(), mk_phi(&n(1), &n(2)));
        let gamma2 = mk_phi(&n(2), &n(0));
        assert_eq!(psi(&n(1), &gamma2).unwrap(), mk_phi(&n(1), &gamma2.succ()));
        assert_eq!(psi(&n(0), &n(1)), Err(Error::ZeroArgument));
    }

    #[test]
    fn psi_above_index_needs_the_lower_value_below_delta() {
        let high = psi(&n(2), &n(1)).unwrap();
        let low = psi(&n(1), &n(2)).unwrap();
        assert_eq!(high, mk_phi(&n(2), &n(0)));
        assert_eq!(low, mk_phi(&n(1), &n(2)));
        assert!(n(1) < low && high > low);
    }

    #[test]
    fn epsilon_detection() {
        assert!(is_indecomposable(&w()));
        assert!(!is_indecomposable(&w().succ()));
        assert!(is_epsilon(&mk_phi(&n(1), &n(0))));
        assert!(!is_epsilon(&omega_pow(&w())));
    }
}
