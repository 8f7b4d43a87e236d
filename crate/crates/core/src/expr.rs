//! A small expression language for ring elements.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' nat)?
//! atom   := nat | symbol | '(' expr ')'
//! symbol := 'u' | 'g' nat | 'a' nat
//! ```
//!
//! Symbols are resolved only at evaluation time, against the target ring.

use std::fmt;

use num_bigint::BigInt;

use crate::chenruan::{CrElement, CrRing};
use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::kawasaki::{KawasakiElement, KawasakiRing};
use crate::orbifold::{OrbifoldElement, OrbifoldRing};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(BigInt),
    Sym(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Nat(n) => write!(f, "number {n}"),
            Tok::Ident(s) => write!(f, "symbol {s}"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek().filter(|(_, d)| d.is_ascii_digit()) {
                    s.push(d);
                    chars.next();
                }
                out.push((pos, Tok::Nat(s.parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars
                    .peek()
                    .filter(|(_, d)| d.is_ascii_alphanumeric() || *d == '_')
                {
                    s.push(d);
                    chars.next();
                }
                out.push((pos, Tok::Ident(s)));
                continue;
            }
            other => {
                return Err(ParseError {
                    kind: ParseErrorKind::Lexical,
                    position: pos,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn error(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".into(),
        };
        ParseError {
            kind: ParseErrorKind::Syntax,
            position: self.offset(),
            message: format!("expected {expected}, found {found}"),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat(&Tok::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let exp = match self.peek() {
                Some(Tok::Nat(n)) => u32::try_from(n.clone())
                    .map_err(|_| self.error("an exponent that fits in 32 bits"))?,
                _ => return Err(self.error("a non-negative integer exponent")),
            };
            self.pos += 1;
            if self.peek() == Some(&Tok::Caret) {
                return Err(self.error("no second '^' (use parentheses)"));
            }
            return Ok(Expr::Pow(Box::new(base), exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Nat(n)) => {
                self.pos += 1;
                Ok(Expr::Lit(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Sym(s))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.error("')'"));
                }
                Ok(e)
            }
            _ => Err(self.error("a number, symbol or '('")),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(input)?,
        pos: 0,
        end: input.len(),
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(..) => 3,
            Expr::Pow(..) => 4,
            Expr::Lit(_) | Expr::Sym(_) => 5,
        }
    }

    fn write_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    /// Prints with the minimum parentheses needed to re-parse to the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(n) => write!(f, "{n}"),
            Expr::Sym(s) => f.write_str(s),
            Expr::Neg(x) => {
                f.write_str("-")?;
                x.write_child(f, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.write_child(f, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) {
                    " + "
                } else {
                    " - "
                })?;
                b.write_child(f, 2)
            }
            Expr::Mul(a, b) => {
                a.write_child(f, 2)?;
                f.write_str("*")?;
                b.write_child(f, 3)
            }
            Expr::Pow(x, e) => {
                x.write_child(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

/// Resolved symbol name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    U,
    Gamma(usize),
    Alpha(usize),
}

impl Symbol {
    pub fn parse(name: &str) -> Option<Symbol> {
        if name == "u" {
            return Some(Symbol::U);
        }
        let (head, digits) = name.split_at(1.min(name.len()));
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let idx = digits.parse().ok()?;
        match head {
            "g" => Some(Symbol::Gamma(idx)),
            "a" => Some(Symbol::Alpha(idx)),
            _ => None,
        }
    }
}

/// A ring that expressions can be evaluated in.
pub trait EvalRing {
    type Element: Clone;

    /// Short name used in error messages.
    fn describe(&self) -> String;
    fn integer(&self, n: BigInt) -> Self::Element;
    fn symbol(&self, sym: Symbol) -> Result<Self::Element>;
    fn add(&self, x: &Self::Element, y: &Self::Element) -> Result<Self::Element>;
    fn neg(&self, x: &Self::Element) -> Result<Self::Element>;
    fn mul(&self, x: &Self::Element, y: &Self::Element) -> Result<Self::Element>;

    fn pow(&self, x: &Self::Element, e: u32) -> Result<Self::Element> {
        let mut acc = self.integer(1.into());
        for _ in 0..e {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }
}

pub fn eval<R: EvalRing>(expr: &Expr, ring: &R) -> Result<R::Element> {
    match expr {
        Expr::Lit(n) => Ok(ring.integer(n.clone())),
        Expr::Sym(name) => {
            let sym = Symbol::parse(name).ok_or_else(|| {
                Error::Eval(format!("unknown symbol {name:?} in {}", ring.describe()))
            })?;
            ring.symbol(sym)
        }
        Expr::Neg(x) => ring.neg(&eval(x, ring)?),
        Expr::Add(a, b) => ring.add(&eval(a, ring)?, &eval(b, ring)?),
        Expr::Sub(a, b) => ring.add(&eval(a, ring)?, &ring.neg(&eval(b, ring)?)?),
        Expr::Mul(a, b) => ring.mul(&eval(a, ring)?, &eval(b, ring)?),
        Expr::Pow(x, e) => ring.pow(&eval(x, ring)?, *e),
    }
}

/// Parses and evaluates in one step.
pub fn eval_str<R: EvalRing>(input: &str, ring: &R) -> Result<R::Element> {
    eval(&parse(input)?, ring)
}

fn unavailable(sym: Symbol, ring: &impl EvalRing) -> Error {
    let name = match sym {
        Symbol::U => "u".to_string(),
        Symbol::Gamma(k) => format!("g{k}"),
        Symbol::Alpha(j) => format!("a{j}"),
    };
    Error::Eval(format!(
        "symbol {name} is not available in {}",
        ring.describe()
    ))
}

impl EvalRing for KawasakiRing {
    type Element = KawasakiElement;

    fn describe(&self) -> String {
        format!(
            "the Kawasaki ring of {} (generators g0..g{})",
            self.weights(),
            self.dim()
        )
    }

    fn integer(&self, n: BigInt) -> KawasakiElement {
        KawasakiRing::integer(self, n)
    }

    fn symbol(&self, sym: Symbol) -> Result<KawasakiElement> {
        match sym {
            Symbol::Gamma(k) if k <= self.dim() => self.gamma(k),
            _ => Err(unavailable(sym, self)),
        }
    }

    fn add(&self, x: &KawasakiElement, y: &KawasakiElement) -> Result<KawasakiElement> {
        KawasakiRing::add(self, x, y)
    }

    fn neg(&self, x: &KawasakiElement) -> Result<KawasakiElement> {
        KawasakiRing::neg(self, x)
    }

    fn mul(&self, x: &KawasakiElement, y: &KawasakiElement) -> Result<KawasakiElement> {
        self.multiply(x, y)
    }
}

impl EvalRing for OrbifoldRing {
    type Element = OrbifoldElement;

    fn describe(&self) -> String {
        format!(
            "the orbifold ring {self} of {} (generator u)",
            self.weights()
        )
    }

    fn integer(&self, n: BigInt) -> OrbifoldElement {
        OrbifoldRing::integer(self, n)
    }

    fn symbol(&self, sym: Symbol) -> Result<OrbifoldElement> {
        match sym {
            Symbol::U => Ok(self.u()),
            _ => Err(unavailable(sym, self)),
        }
    }

    fn add(&self, x: &OrbifoldElement, y: &OrbifoldElement) -> Result<OrbifoldElement> {
        OrbifoldRing::add(self, x, y)
    }

    fn neg(&self, x: &OrbifoldElement) -> Result<OrbifoldElement> {
        OrbifoldRing::neg(self, x)
    }

    fn mul(&self, x: &OrbifoldElement, y: &OrbifoldElement) -> Result<OrbifoldElement> {
        self.multiply(x, y)
    }
}

impl EvalRing for CrRing {
    type Element = CrElement;

    fn describe(&self) -> String {
        format!(
            "the Chen-Ruan ring of {} (generators u, a0..a{})",
            self.weights(),
            self.ell() - 1
        )
    }

    fn integer(&self, n: BigInt) -> CrElement {
        CrRing::integer(self, n)
    }

    fn symbol(&self, sym: Symbol) -> Result<CrElement> {
        match sym {
            Symbol::U => Ok(self.u()),
            Symbol::Alpha(j) if j < self.ell() => self.alpha(j),
            _ => Err(unavailable(sym, self)),
        }
    }

    fn add(&self, x: &CrElement, y: &CrElement) -> Result<CrElement> {
        CrRing::add(self, x, y)
    }

    fn neg(&self, x: &CrElement) -> Result<CrElement> {
        CrRing::neg(self, x)
    }

    fn mul(&self, x: &CrElement, y: &CrElement) -> Result<CrElement> {
        self.star(x, y)
    }
}
