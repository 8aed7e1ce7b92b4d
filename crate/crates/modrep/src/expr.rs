//! Constructor expressions for representations.
//!
//! ```text
//! expr    := "sym:" N | "natural" | "dual(" expr ")" | "tensor(" expr "," expr ")"
//!          | "twist:" B "(" expr ")" | "ext(" expr "," expr "," I ")"
//! ```
//!
//! `ext(V, W, i)` is the extension `0 -> W -> E -> V -> 0` given by the
//! `i`-th basis class of `Ext^1(V, W)`. Whitespace is allowed between tokens.

use std::fmt;
use std::sync::Arc;

use modrep_core::cohom::{build_extension, z1_basis};
use modrep_core::rep::sym_power_sl2;
use modrep_core::{Error, Field, GroupTable, Rep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Sym(u32),
    Natural,
    Dual(Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Twist(u32, Box<Expr>),
    Ext(Box<Expr>, Box<Expr>, usize),
}

/// A parsed expression; `start` is the byte offset of the node in the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: Kind,
    pub start: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at offset {}", self.message, self.offset)
    }
}

impl std::error::Error for ParseError {}

/// A core error raised while evaluating the node at `offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError {
    pub offset: usize,
    pub source: Error,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (expression offset {})", self.source, self.offset)
    }
}

impl std::error::Error for EvalError {}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(|c: char| c.is_whitespace()) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected '{tok}'"))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let digits = self.src[self.pos..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a non-negative integer");
        }
        let text = &self.src[self.pos..self.pos + digits];
        let n = text.parse::<u64>().or_else(|_| self.err("integer too large"))?;
        self.pos += digits;
        Ok(n)
    }

    fn small(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let n = self.number()?;
        u32::try_from(n).map_err(|_| ParseError { offset: start, message: "integer too large".into() })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let kind = if self.eat("sym:") {
            Kind::Sym(self.small()?)
        } else if self.eat("natural") {
            Kind::Natural
        } else if self.eat("dual(") {
            let e = self.expr()?;
            self.expect(")")?;
            Kind::Dual(Box::new(e))
        } else if self.eat("tensor(") {
            let a = self.expr()?;
            self.expect(",")?;
            let b = self.expr()?;
            self.expect(")")?;
            Kind::Tensor(Box::new(a), Box::new(b))
        } else if self.eat("twist:") {
            let b = self.small()?;
            self.expect("(")?;
            let e = self.expr()?;
            self.expect(")")?;
            Kind::Twist(b, Box::new(e))
        } else if self.eat("ext(") {
            let a = self.expr()?;
            self.expect(",")?;
            let b = self.expr()?;
            self.expect(",")?;
            let i = self.number()? as usize;
            self.expect(")")?;
            Kind::Ext(Box::new(a), Box::new(b), i)
        } else {
            return self.err("expected one of sym:N, natural, dual(, tensor(, twist:B(, ext(");
        };
        Ok(Expr { kind, start })
    }
}

/// Parse a complete expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != src.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    /// Build the representation of `group` over `target`.
    pub fn eval(&self, group: &Arc<GroupTable>, target: &Field) -> Result<Rep, EvalError> {
        let at = |source: Error| EvalError { offset: self.start, source };
        match &self.kind {
            Kind::Sym(n) => sym_power_sl2(group, *n, target).map_err(at),
            Kind::Natural => {
                let gens = group.gens().iter().map(|g| g.with_field(target)).collect::<Result<Vec<_>, _>>();
                let gens = gens.map_err(at)?;
                if group.field() != target && group.field().k() != 1 {
                    return Err(at(Error::FieldMismatch));
                }
                Rep::from_generators(group, target, gens).map_err(at)
            }
            Kind::Dual(e) => Ok(e.eval(group, target)?.dual()),
            Kind::Tensor(a, b) => {
                let (a, b) = (a.eval(group, target)?, b.eval(group, target)?);
                a.tensor(&b).map_err(at)
            }
            Kind::Twist(b, e) => e.eval(group, target)?.twist(*b).map_err(at),
            Kind::Ext(v, w, i) => {
                let (v, w) = (v.eval(group, target)?, w.eval(group, target)?);
                let basis = z1_basis(&Rep::hom(&v, &w).map_err(at)?);
                let c = basis.h1.get(*i).ok_or(at(Error::IndexOutOfRange(*i)))?;
                build_extension(&v, &w, c).map_err(at)
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Sym(n) => write!(f, "sym:{n}"),
            Kind::Natural => write!(f, "natural"),
            Kind::Dual(e) => write!(f, "dual({e})"),
            Kind::Tensor(a, b) => write!(f, "tensor({a},{b})"),
            Kind::Twist(b, e) => write!(f, "twist:{b}({e})"),
            Kind::Ext(a, b, i) => write!(f, "ext({a},{b},{i})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nested_forms() {
        let e = parse(" ext( sym:1 , dual(twist:1(sym:2)), 0 )").unwrap();
        assert_eq!(e.to_string(), "ext(sym:1,dual(twist:1(sym:2)),0)");
        assert_eq!(e.start, 1);
        assert_eq!(parse("tensor(sym:1,natural)").unwrap().to_string(), "tensor(sym:1,natural)");
    }

    #[test]
    fn reports_offsets() {
        assert_eq!(parse("tensor(sym:1 sym:2)").unwrap_err().offset, 13);
        assert_eq!(parse("sym:").unwrap_err().offset, 4);
        assert_eq!(parse("sym:1)").unwrap_err().offset, 5);
        assert_eq!(parse("wedge(sym:1)").unwrap_err().offset, 0);
    }

    #[test]
    fn roundtrip_is_stable() {
        for s in ["sym:0", "dual(sym:3)", "twist:0(natural)", "ext(sym:3,sym:3,0)"] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap().to_string(), s);
        }
    }
}
