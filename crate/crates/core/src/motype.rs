//! Maximal order types of the tree and sequence orders, and of Higman's `X*`.

use crate::ord::{add, cnf_head, is_epsilon, mk_phi, mul, omega_pow, pow, OrdTerm};

fn one() -> OrdTerm {
    OrdTerm::one()
}

/// Order type of `B_{α,1}`.
#[allow(non_snake_case)]
pub fn F(a: &OrdTerm) -> OrdTerm {
    let Ok((gamma, delta)) = cnf_head(a) else {
        return one();
    };
    let idx = add(&one(), &gamma);
    if delta.is_zero() && gamma < mk_phi(&gamma, &OrdTerm::zero()) {
        mk_phi(&idx, &OrdTerm::zero())
    } else {
        mk_phi(&idx, &F(&delta))
    }
}

/// Order type of `S^w_α`, `S^g_α` and `B^l_{α,1}`.
#[allow(non_snake_case)]
pub fn G(a: &OrdTerm) -> OrdTerm {
    if a.is_zero() {
        return one();
    }
    if a.is_one() {
        return OrdTerm::omega();
    }
    if let Some(k) = a.to_nat() {
        return omega_pow(&omega_pow(&G(&OrdTerm::nat(k - 1))));
    }
    let (gamma, delta) = cnf_head(a).expect("positive");
    if delta.is_zero() && !gamma.is_zero() && gamma < mk_phi(&gamma, &OrdTerm::zero()) {
        mk_phi(&gamma, &OrdTerm::zero())
    } else {
        mk_phi(&gamma, &G(&delta))
    }
}

/// Order type of `S^s_α`.
#[allow(non_snake_case)]
pub fn H(a: &OrdTerm) -> OrdTerm {
    let Ok((gamma, delta)) = cnf_head(a) else {
        return one();
    };
    mul(&pow(&G(a), &omega_pow(&gamma)), &H(&delta))
}

/// Order type of `X*` given `x = o(X)`; `empty` marks the empty order.
pub fn higman_star(x: &OrdTerm, empty: bool) -> OrdTerm {
    if empty {
        return one();
    }
    let e = if let Some(k) = x.to_nat() {
        OrdTerm::nat(k.saturating_sub(1))
    } else {
        let tail = x.finite_part();
        let xs = x.summands();
        let limit = OrdTerm::from_summands_unchecked(xs[..xs.len() - tail as usize].to_vec());
        if is_epsilon(&limit) {
            x.succ()
        } else {
            x.clone()
        }
    };
    omega_pow(&omega_pow(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ord, print_ord};

    fn p(s: &str) -> OrdTerm {
        parse_ord(s).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(print_ord(&G(&p("0"))), "1");
        assert_eq!(print_ord(&G(&p("1"))), "w");
        assert_eq!(print_ord(&G(&p("2"))), "w^w^w");
        assert_eq!(print_ord(&F(&p("1"))), "phi(1,0)");
        assert_eq!(print_ord(&H(&p("2"))), "w^(w^w+1)");
        assert_eq!(print_ord(&H(&p("0"))), "1");
    }

    #[test]
    fn higman() {
        assert_eq!(higman_star(&p("5"), true), p("1"));
        assert_eq!(higman_star(&p("3"), false), p("w^w^2"));
        assert_eq!(higman_star(&p("phi(1,0)"), false), p("w^w^(phi(1,0)+1)"));
        assert_eq!(higman_star(&p("phi(1,0)+2"), false), p("w^w^(phi(1,0)+3)"));
        assert_eq!(higman_star(&p("w"), false), p("w^w^w"));
    }
}
