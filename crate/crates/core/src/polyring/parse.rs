//! Text form of polynomials.
//!
//! The canonical grammar is what [`Polynomial`]'s `Display` prints: terms
//! joined by `+`/`-`, each an optional integer coefficient followed by
//! `*`-separated powers such as `x[2][3]^4`. Auxiliary variables are spelled
//! `s`, `t`, `t[i]`, `u[i]`, `v`, `z`, `w`. The parser also accepts
//! parenthesized sub-expressions raised to powers, e.g. `(x[1][0] - s)^3`,
//! and rational literals `a/b` when parsing over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::coeff::{Coefficient, Domain};
use super::{Monomial, Polynomial, VarId};
use crate::error::{Error, Result};

/// Which variable names are acceptable, and the coefficient domain.
#[derive(Clone, Debug)]
pub struct ParseContext {
    pub domain: Domain,
    /// Block sizes `n_i`; when set, `x[i][j]` must satisfy
    /// `1 <= i <= d` and `j <= n_i`.
    pub blocks: Option<Vec<u32>>,
    pub allow_params: bool,
}

impl Default for ParseContext {
    fn default() -> Self {
        ParseContext {
            domain: Domain::Integer,
            blocks: None,
            allow_params: true,
        }
    }
}

impl ParseContext {
    pub fn new(domain: Domain) -> Self {
        ParseContext {
            domain,
            ..Default::default()
        }
    }

    /// Only the scroll variables of the given block sizes are accepted.
    pub fn for_blocks(domain: Domain, blocks: &[u32]) -> Self {
        ParseContext {
            domain,
            blocks: Some(blocks.to_vec()),
            allow_params: false,
        }
    }
}

pub fn parse_poly(text: &str, ctx: &ParseContext) -> Result<Polynomial> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ctx,
    };
    let poly = p.expr()?;
    let t = p.peek();
    if t.kind != Tok::End {
        return Err(t.error(format!("unexpected {}", t.kind.describe())));
    }
    Ok(poly)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number {v}"),
            Tok::Ident(s) => format!("identifier '{s}'"),
            Tok::End => "end of input".into(),
            Tok::LBracket => "'['".into(),
            Tok::RBracket => "']'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    kind: Tok,
    line: usize,
    column: usize,
}

impl Token {
    fn error(&self, message: String) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message,
        }
    }
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (tl, tc) = (line, column);
        let push = |out: &mut Vec<Token>, kind| {
            out.push(Token {
                kind,
                line: tl,
                column: tc,
            })
        };
        if ch == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if ch.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                digits.push(d);
                chars.next();
                column += 1;
            }
            push(&mut out, Tok::Int(digits.parse().expect("ascii digits")));
            continue;
        }
        if ch.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_alphanumeric() && d != '_' {
                    break;
                }
                name.push(d);
                chars.next();
                column += 1;
            }
            push(&mut out, Tok::Ident(name));
            continue;
        }
        let kind = match ch {
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            other => {
                return Err(Error::Parse {
                    line,
                    column,
                    message: format!("unexpected character '{other}'"),
                })
            }
        };
        chars.next();
        column += 1;
        push(&mut out, kind);
    }
    out.push(Token {
        kind: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ctx: &'a ParseContext,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.kind != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, kind: Tok) -> Result<Token> {
        let t = self.next();
        if t.kind == kind {
            Ok(t)
        } else {
            Err(t.error(format!(
                "expected {}, found {}",
                kind.describe(),
                t.kind.describe()
            )))
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ctx.domain);
        let mut negate = match self.peek().kind {
            Tok::Minus => {
                self.next();
                true
            }
            Tok::Plus => {
                self.next();
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek().kind {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                _ => return Ok(acc),
            }
            self.next();
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek().kind == Tok::Star {
            self.next();
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek().kind != Tok::Caret {
            return Ok(base);
        }
        self.next();
        let t = self.next();
        let Tok::Int(e) = &t.kind else {
            return Err(t.error(format!("expected exponent, found {}", t.kind.describe())));
        };
        let e: u32 = e
            .try_into()
            .map_err(|_| t.error(format!("exponent overflow: {e}")))?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.next();
        match &t.kind {
            Tok::Int(v) => {
                let c = if self.peek().kind == Tok::Slash {
                    self.next();
                    let dt = self.next();
                    let Tok::Int(den) = &dt.kind else {
                        return Err(dt.error("expected denominator".into()));
                    };
                    if self.ctx.domain != Domain::Rational {
                        return Err(dt.error(format!(
                            "rational literal outside Q (domain {})",
                            self.ctx.domain
                        )));
                    }
                    if den.is_zero() {
                        return Err(dt.error("zero denominator".into()));
                    }
                    Coefficient::Rational(BigRational::new(v.clone(), den.clone()))
                } else {
                    self.ctx.domain.from_bigint(v)
                };
                Ok(Polynomial::constant(c))
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let v = self.variable(&t, name)?;
                Ok(Polynomial::term(self.ctx.domain.one(), Monomial::var(v)))
            }
            other => Err(t.error(format!("unexpected {}", other.describe()))),
        }
    }

    fn index(&mut self) -> Result<u32> {
        self.expect(Tok::LBracket)?;
        let t = self.next();
        let Tok::Int(v) = &t.kind else {
            return Err(t.error(format!("expected index, found {}", t.kind.describe())));
        };
        let v: u32 = v
            .try_into()
            .map_err(|_| t.error(format!("index overflow: {v}")))?;
        self.expect(Tok::RBracket)?;
        Ok(v)
    }

    fn variable(&mut self, at: &Token, name: &str) -> Result<VarId> {
        let v = match name {
            "x" => {
                let block = self.index()?;
                let slot = self.index()?;
                if block == 0 {
                    return Err(at.error("block index starts at 1".into()));
                }
                if let Some(blocks) = &self.ctx.blocks {
                    let ok = blocks.get(block as usize - 1).is_some_and(|&n| slot <= n);
                    if !ok {
                        return Err(at.error(format!("unknown variable x[{block}][{slot}]")));
                    }
                }
                return Ok(VarId::x(block, slot));
            }
            "s" => VarId::s(),
            "v" => VarId::v(),
            "z" => VarId::z(),
            "w" => VarId::w(),
            "t" if self.peek().kind == Tok::LBracket => VarId::t_col(self.index()?),
            "t" => VarId::t(),
            "u" => VarId::u(self.index()?),
            other => return Err(at.error(format!("unknown variable '{other}'"))),
        };
        if !self.ctx.allow_params {
            return Err(at.error(format!("unknown variable '{v}'")));
        }
        Ok(v)
    }
}
