//! Group expressions: `C6`, `D4`, `Dic3`, `S4`, `A5`, products such as
//! `C2xC3` or `(C2xC2)xD3`, and `file:PATH` for a group file. A `file:` path
//! runs to the next `)` or the end of the input.
//!
//! Orders are predicted before anything is built, so an expression above the
//! cap fails fast with [`Error::SizeLimit`].

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::group::{make_cyclic, make_dicyclic, make_dihedral, make_direct_product, GroupTable};
use crate::group::perm::{make_alternating_with_cap, make_symmetric_with_cap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupExpr {
    Cyclic(usize),
    Dihedral(usize),
    Dicyclic(usize),
    Symmetric(usize),
    Alternating(usize),
    File(PathBuf),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    /// The order, without building anything. `None` for files or on overflow.
    pub fn predicted_order(&self) -> Option<usize> {
        let fact = |n: usize| (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
        match self {
            GroupExpr::Cyclic(n) => Some(*n),
            GroupExpr::Dihedral(n) => n.checked_mul(2),
            GroupExpr::Dicyclic(n) => n.checked_mul(4),
            GroupExpr::Symmetric(n) => fact(*n),
            GroupExpr::Alternating(n) => fact(*n).map(|f| f.div_ceil(2)),
            GroupExpr::File(_) => None,
            GroupExpr::Product(a, b) => a.predicted_order()?.checked_mul(b.predicted_order()?),
        }
    }

    /// Builds the group, refusing anything whose order exceeds `cap`.
    pub fn build(&self, cap: usize) -> Result<GroupTable> {
        if let Some(n) = self.predicted_order() {
            if n > cap {
                return Err(Error::SizeLimit { order: n, cap });
            }
        } else if !self.has_file() {
            return Err(Error::SizeLimit { order: usize::MAX, cap });
        }
        let g = match self {
            GroupExpr::Cyclic(n) => make_cyclic(*n)?,
            GroupExpr::Dihedral(n) => make_dihedral(*n)?,
            GroupExpr::Dicyclic(n) => make_dicyclic(*n)?,
            GroupExpr::Symmetric(n) => make_symmetric_with_cap(*n, cap)?,
            GroupExpr::Alternating(n) => make_alternating_with_cap(*n, cap)?,
            GroupExpr::File(path) => crate::io::load_group_file(path, cap)?,
            GroupExpr::Product(a, b) => make_direct_product(&a.build(cap)?, &b.build(cap)?)?,
        };
        if g.order() > cap {
            return Err(Error::SizeLimit { order: g.order(), cap });
        }
        Ok(g)
    }

    fn has_file(&self) -> bool {
        match self {
            GroupExpr::File(_) => true,
            GroupExpr::Product(a, b) => a.has_file() || b.has_file(),
            _ => false,
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut lhs = self.term()?;
        while self.eat("x") {
            let rhs = self.term()?;
            lhs = GroupExpr::Product(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        if self.eat("(") {
            let e = self.expr()?;
            if !self.eat(")") {
                return self.err("expected ')'");
            }
            return Ok(e);
        }
        if self.eat("file:") {
            let len = self.rest().find(')').unwrap_or(self.rest().len());
            let path = self.rest()[..len].trim();
            if path.is_empty() {
                return self.err("empty file path");
            }
            self.pos += len;
            return Ok(GroupExpr::File(PathBuf::from(path)));
        }
        type Ctor = fn(usize) -> GroupExpr;
        let atoms: [(&str, Ctor); 5] = [
            ("Dic", GroupExpr::Dicyclic),
            ("C", GroupExpr::Cyclic),
            ("D", GroupExpr::Dihedral),
            ("S", GroupExpr::Symmetric),
            ("A", GroupExpr::Alternating),
        ];
        for (prefix, ctor) in atoms {
            if self.rest().starts_with(prefix) {
                self.pos += prefix.len();
                return Ok(ctor(self.number()?));
            }
        }
        self.err("expected C, D, Dic, S, A, '(' or file:")
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a number");
        }
        let n = self.rest()[..digits].parse().or_else(|_| self.err("number too large"))?;
        self.pos += digits;
        Ok(n)
    }
}

pub fn parse(src: &str) -> Result<GroupExpr> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parses and builds in one step.
pub fn build_group(src: &str, cap: usize) -> Result<GroupTable> {
    parse(src)?.build(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{is_abelian, is_cyclic, DEFAULT_MAX_ORDER};

    #[test]
    fn atoms_and_products() {
        let g = build_group("C6", DEFAULT_MAX_ORDER).unwrap();
        assert!(is_cyclic(&g));
        let g = build_group("C2xC3", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 6);
        assert!(is_cyclic(&g));
        let g = build_group("Dic2", DEFAULT_MAX_ORDER).unwrap();
        assert_eq!(g.order(), 8);
        assert!(!is_abelian(&g));
        assert_eq!(parse("(C2 x C2) x D3").unwrap().predicted_order(), Some(24));
        assert_eq!(g.recipe().to_string(), "Dic2");
    }

    #[test]
    fn errors() {
        assert_eq!(parse("C"), Err(Error::Parse { pos: 1, msg: "expected a number".into() }));
        assert!(matches!(parse("C2y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse("(C2"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse("Q8"), Err(Error::Parse { pos: 0, .. })));
        assert_eq!(build_group("S8", DEFAULT_MAX_ORDER), Err(Error::SizeLimit { order: 40320, cap: 5040 }));
        assert_eq!(build_group("C100xC100", 5040), Err(Error::SizeLimit { order: 10000, cap: 5040 }));
        assert!(matches!(build_group("C0", 10), Err(Error::InvalidOrder { .. })));
    }
}
