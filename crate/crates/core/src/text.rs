//! Text literals for ordinals, sequences and trees.
//!
//! ```text
//! T    ::= term ("+" term)*
//! term ::= atom ("*" NAT)*
//! atom ::= NAT | "w" ("^" atom)? | "phi(" T "," T ")" | "(" T ")"
//! seq  ::= "[" (T ("," T)*)? "]"
//! tree ::= "." | "leaf(" X ")" | "(" T tree tree ")"
//! ```

use crate::error::{Error, Result};
use crate::gap_tree::LabTree;
use crate::ord::{add, mk_phi, mul, OrdTerm, Principal};

/// How a leaf label renders inside `leaf(...)`; `None` renders as `.`.
pub trait LeafLiteral {
    fn literal(&self) -> Option<String>;
}

impl LeafLiteral for () {
    fn literal(&self) -> Option<String> {
        None
    }
}

impl LeafLiteral for OrdTerm {
    fn literal(&self) -> Option<String> {
        Some(print_ord(self))
    }
}

impl<L: LeafLiteral> LeafLiteral for LabTree<L> {
    fn literal(&self) -> Option<String> {
        Some(self.to_string())
    }
}

/// A cursor over literal text; offsets are byte offsets into the input.
pub struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub fn offset(&self) -> usize {
        self.pos
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    pub fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            msg: msg.into(),
        }
    }

    pub fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    pub fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("trailing input")),
        }
    }

    fn nat(&mut self) -> Result<u64> {
        self.skip_ws();
        let digits = self.src[self.pos..]
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let text = &self.src[self.pos..self.pos + digits];
        let n = text.parse().map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(n)
    }

    pub fn ord(&mut self) -> Result<OrdTerm> {
        let mut acc = self.term()?;
        while self.eat("+") {
            let rhs = self.term()?;
            acc = add(&acc, &rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<OrdTerm> {
        let mut acc = self.atom()?;
        while self.eat("*") {
            let k = self.nat()?;
            acc = mul(&acc, &OrdTerm::nat(k));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<OrdTerm> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(OrdTerm::nat(self.nat()?)),
            Some('(') => {
                self.expect("(")?;
                let t = self.ord()?;
                self.expect(")")?;
                Ok(t)
            }
            _ if self.eat("phi") => {
                self.expect("(")?;
                let g = self.ord()?;
                self.expect(",")?;
                let d = self.ord()?;
                self.expect(")")?;
                Ok(mk_phi(&g, &d))
            }
            _ if self.eat("w") => {
                if self.eat("^") {
                    let e = self.atom()?;
                    Ok(mk_phi(&OrdTerm::zero(), &e))
                } else {
                    Ok(OrdTerm::omega())
                }
            }
            _ => Err(self.error("expected an ordinal")),
        }
    }

    /// A bracketed list whose items are read by `item`.
    pub fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect("[")?;
        let mut out = Vec::new();
        if self.eat("]") {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat("]") {
                return Ok(out);
            }
            self.expect(",")?;
        }
    }

    pub fn seq(&mut self) -> Result<Vec<OrdTerm>> {
        self.list(|p| p.ord())
    }

    /// A tree whose labeled leaves `leaf(X)` are read by `leaf`; `.` yields `unit`.
    pub fn tree_with<L: Clone>(
        &mut self,
        unit: Option<L>,
        leaf: &mut impl FnMut(&mut Self) -> Result<L>,
    ) -> Result<LabTree<L>> {
        match self.peek() {
            Some('.') => {
                self.expect(".")?;
                unit.map(LabTree::Leaf)
                    .ok_or_else(|| self.error("unit leaf not allowed here"))
            }
            Some('(') => {
                self.expect("(")?;
                let b = self.ord()?;
                let l = self.tree_with(unit.clone(), leaf)?;
                let r = self.tree_with(unit, leaf)?;
                self.expect(")")?;
                Ok(LabTree::node_unchecked(b, l, r))
            }
            _ if self.eat("leaf") => {
                self.expect("(")?;
                let x = leaf(self)?;
                self.expect(")")?;
                Ok(LabTree::Leaf(x))
            }
            _ => Err(self.error("expected a tree")),
        }
    }

    pub fn unit_tree(&mut self) -> Result<LabTree<()>> {
        self.tree_with(Some(()), &mut |p: &mut Self| Err(p.error("labeled leaf in a unit tree")))
    }
}

pub fn parse_ord(text: &str) -> Result<OrdTerm> {
    let mut p = Parser::new(text);
    let t = p.ord()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_seq(text: &str) -> Result<Vec<OrdTerm>> {
    let mut p = Parser::new(text);
    let s = p.seq()?;
    p.finish()?;
    Ok(s)
}

/// Parses a unit-leaf tree without validating the ascending invariant.
pub fn parse_unit_tree(text: &str) -> Result<LabTree<()>> {
    let mut p = Parser::new(text);
    let t = p.unit_tree()?;
    p.finish()?;
    Ok(t)
}

/// Parses `tree; tree; …`.
pub fn parse_unit_trees(text: &str) -> Result<Vec<LabTree<()>>> {
    let mut p = Parser::new(text);
    let mut out = vec![p.unit_tree()?];
    while p.eat(";") {
        out.push(p.unit_tree()?);
    }
    p.finish()?;
    Ok(out)
}

fn print_principal(p: &Principal) -> String {
    if p.first().is_zero() {
        let e = p.second();
        if e.is_zero() {
            "1".to_string()
        } else if e.is_one() {
            "w".to_string()
        } else {
            format!("w^{}", print_exponent(e))
        }
    } else {
        format!("phi({},{})", print_ord(p.first()), print_ord(p.second()))
    }
}

fn print_exponent(e: &OrdTerm) -> String {
    if e.is_finite() || e.summands().len() == 1 {
        print_ord(e)
    } else {
        format!("({})", print_ord(e))
    }
}

/// Canonical form: descending summands, runs as `*k`, finite tail as a numeral.
pub fn print_ord(a: &OrdTerm) -> String {
    if a.is_zero() {
        return "0".to_string();
    }
    let xs = a.summands();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < xs.len() {
        let mut j = i;
        while j < xs.len() && xs[j] == xs[i] {
            j += 1;
        }
        let p = &xs[i];
        if p.first().is_zero() && p.second().is_zero() {
            parts.push((j - i).to_string());
        } else if j - i > 1 {
            parts.push(format!("{}*{}", print_principal(p), j - i));
        } else {
            parts.push(print_principal(p));
        }
        i = j;
    }
    parts.join("+")
}

pub fn print_seq(xs: &[OrdTerm]) -> String {
    print_list(xs.iter().map(print_ord))
}

pub fn print_list(items: impl IntoIterator<Item = String>) -> String {
    format!("[{}]", items.into_iter().collect::<Vec<_>>().join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ord::omega_pow;

    #[test]
    fn parse_examples() {
        let w = OrdTerm::omega();
        assert_eq!(parse_ord("w^w+1").unwrap(), add(&omega_pow(&w), &OrdTerm::one()));
        assert_eq!(print_ord(&parse_ord("phi(0,phi(1,0))").unwrap()), "phi(1,0)");
        assert_eq!(
            parse_ord("w+"),
            Err(Error::Parse {
                offset: 2,
                msg: "expected an ordinal".into()
            })
        );
    }

    #[test]
    fn printing() {
        for (src, want) in [
            ("0", "0"),
            ("3", "3"),
            ("w*2+3", "w*2+3"),
            ("w^w^w", "w^w^w"),
            ("w^(w+1)", "w^(w+1)"),
            ("w^2*3+w", "w^2*3+w"),
            ("phi(1,0)^w", ""),
        ] {
            if want.is_empty() {
                assert!(parse_ord(src).is_err());
            } else {
                assert_eq!(print_ord(&parse_ord(src).unwrap()), want);
            }
        }
    }

    #[test]
    fn trees_and_sequences() {
        let t = parse_unit_tree("(0 (2 . .) (0 (1 . .) (3 . .)))").unwrap();
        assert_eq!(t.to_string(), "(0 (2 . .) (0 (1 . .) (3 . .)))");
        assert_eq!(print_seq(&parse_seq("[ 1, w , 0]").unwrap()), "[1,w,0]");
        assert_eq!(parse_seq("[]").unwrap(), vec![]);
        assert_eq!(parse_unit_trees(". ; (0 . .)").unwrap().len(), 2);
    }
}
