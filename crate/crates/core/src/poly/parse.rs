//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' digits)?
//! atom  := digits | name | '(' expr ')'
//! ```
//!
//! `^` binds tightest, then unary minus, then `*`, then binary `+`/`-`, so
//! `-z1^2` is `-(z1^2)`. Exponents are decimal literals below 2^16.

use num_bigint::BigInt;
use thiserror::Error;

use super::{Alphabet, Monomial, MultiPoly};

pub const MAX_EXPONENT: u32 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("exponent {value} at byte {pos} exceeds the limit of {MAX_EXPONENT}")]
    ExponentOverflow { value: String, pos: usize },
}

/// Parses `text` over the variables `z1..z{nvars}`.
pub fn parse_poly(text: &str, nvars: usize) -> Result<MultiPoly, ParseError> {
    parse_with(text, &Alphabet::z(nvars))
}

/// Parses `text` over an arbitrary alphabet.
pub fn parse_with(text: &str, alphabet: &Alphabet) -> Result<MultiPoly, ParseError> {
    let tokens = lex(text)?;
    let mut parser = Parser {
        tokens,
        cursor: 0,
        alphabet,
        end: text.len(),
    };
    let out = parser.expr()?;
    match parser.peek() {
        None => Ok(out),
        Some(tok) => Err(ParseError::Syntax {
            pos: tok.pos,
            message: format!("unexpected {}", tok.kind.describe()),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Number(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl TokenKind {
    fn describe(&self) -> String {
        match self {
            TokenKind::Number(s) => format!("number `{s}`"),
            TokenKind::Name(s) => format!("name `{s}`"),
            TokenKind::Plus => "`+`".into(),
            TokenKind::Minus => "`-`".into(),
            TokenKind::Star => "`*`".into(),
            TokenKind::Caret => "`^`".into(),
            TokenKind::LParen => "`(`".into(),
            TokenKind::RParen => "`)`".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        let kind = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '+' => TokenKind::Plus,
            '-' => TokenKind::Minus,
            '*' => TokenKind::Star,
            '^' => TokenKind::Caret,
            '(' => TokenKind::LParen,
            ')' => TokenKind::RParen,
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                tokens.push(Token {
                    kind: TokenKind::Number(s),
                    pos,
                });
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while let Some(&(_, d)) = chars.peek() {
                    if !(d.is_alphanumeric() || d == '_') {
                        break;
                    }
                    s.push(d);
                    chars.next();
                }
                tokens.push(Token {
                    kind: TokenKind::Name(s),
                    pos,
                });
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        chars.next();
        tokens.push(Token { kind, pos });
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    cursor: usize,
    alphabet: &'a Alphabet,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.cursor)
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if self.peek().is_some_and(|t| &t.kind == kind) {
            self.cursor += 1;
            true
        } else {
            false
        }
    }

    fn pos(&self) -> usize {
        self.peek().map_or(self.end, |t| t.pos)
    }

    fn nvars(&self) -> usize {
        self.alphabet.len()
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&TokenKind::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&TokenKind::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.unary()?;
        while self.eat(&TokenKind::Star) {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, ParseError> {
        if self.eat(&TokenKind::Minus) {
            return Ok(-self.unary()?);
        }
        if self.eat(&TokenKind::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat(&TokenKind::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        match self.peek().map(|t| t.kind.clone()) {
            Some(TokenKind::Number(digits)) => {
                self.cursor += 1;
                let value = digits
                    .parse::<u32>()
                    .ok()
                    .filter(|&v| v < MAX_EXPONENT)
                    .ok_or(ParseError::ExponentOverflow { value: digits, pos })?;
                Ok(base.pow(value))
            }
            _ => Err(ParseError::Syntax {
                pos,
                message: "expected a non-negative integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, ParseError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(ParseError::Syntax {
                pos,
                message: "unexpected end of input".into(),
            });
        };
        self.cursor += 1;
        match tok.kind {
            TokenKind::Number(digits) => {
                let c: BigInt = digits.parse().expect("lexer only yields digits");
                Ok(MultiPoly::constant(self.nvars(), c))
            }
            TokenKind::Name(name) => match self.alphabet.index_of(&name) {
                Some(i) => Ok(MultiPoly::term(Monomial::variable(self.nvars(), i), 1)),
                None => Err(ParseError::UnknownVariable { name, pos }),
            },
            TokenKind::LParen => {
                let inner = self.expr()?;
                if !self.eat(&TokenKind::RParen) {
                    return Err(ParseError::Syntax {
                        pos: self.pos(),
                        message: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            other => Err(ParseError::Syntax {
                pos,
                message: format!("unexpected {}", other.describe()),
            }),
        }
    }
}
