//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (multiplication is always explicit):
//!
//! ```text
//! expr       := ['-'] term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := primary ['^' natural]
//! primary    := rational | identifier | '(' expr ')'
//! rational   := natural ['/' natural]        (zero denominator rejected)
//! identifier := [a-z][a-z0-9]*
//! ```
//!
//! Identifiers must be declared variables or bound parameters; parameters
//! are substituted by their rational values before the polynomial is
//! constructed. Errors carry the byte position of the offending token.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use socle_core::poly::{Polynomial, Rat};

/// A syntax or resolution error, with the byte offset it occurred at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { position, message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".to_string(),
            Tok::Minus => "`-`".to_string(),
            Tok::Star => "`*`".to_string(),
            Tok::Caret => "`^`".to_string(),
            Tok::Slash => "`/`".to_string(),
            Tok::LParen => "`(`".to_string(),
            Tok::RParen => "`)`".to_string(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0usize;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: BigInt = text[start..i].parse().expect("digit run parses");
                out.push((start, Tok::Int(value)));
            }
            'a'..='z' => {
                let start = i;
                i += 1;
                while i < bytes.len()
                    && (bytes[i].is_ascii_lowercase() || bytes[i].is_ascii_digit())
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            other => return err(i, format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    nvars: usize,
    var_index: BTreeMap<&'a str, usize>,
    params: &'a BTreeMap<String, Rat>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn constant(&self, c: Rat) -> Polynomial {
        Polynomial::constant(self.nvars, c)
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if negate {
            acc = acc.scale(&-Rat::from_integer(BigInt::from(1)));
        }
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.term()?;
                acc = &acc + &rhs;
            } else if self.eat(&Tok::Minus) {
                let rhs = self.term()?;
                acc = &acc - &rhs;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.primary()?;
        if self.eat(&Tok::Caret) {
            let at = self.here();
            match self.bump() {
                Some((_, Tok::Int(n))) => {
                    let e: u32 = n
                        .to_string()
                        .parse()
                        .map_err(|_| ParseError {
                            position: at,
                            message: format!("exponent {n} out of range"),
                        })?;
                    Ok(base.pow(e))
                }
                _ => err(at, "expected a natural-number exponent after `^`"),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial, ParseError> {
        let at = self.here();
        match self.bump() {
            Some((_, Tok::Int(n))) => {
                // Optional `/ natural` continues a rational literal.
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let dat = self.here();
                    match self.bump() {
                        Some((_, Tok::Int(d))) => {
                            if d.is_zero() {
                                return err(dat, "zero denominator literal");
                            }
                            Ok(self.constant(Rat::new(n, d)))
                        }
                        _ => err(dat, "expected an integer denominator after `/`"),
                    }
                } else {
                    Ok(self.constant(Rat::from_integer(n)))
                }
            }
            Some((_, Tok::Ident(name))) => {
                if let Some(&idx) = self.var_index.get(name.as_str()) {
                    Ok(Polynomial::variable(self.nvars, idx))
                } else if let Some(value) = self.params.get(&name) {
                    Ok(self.constant(value.clone()))
                } else {
                    err(at, format!("unknown identifier `{name}`"))
                }
            }
            Some((_, Tok::LParen)) => {
                let inner = self.expr()?;
                if self.eat(&Tok::RParen) {
                    Ok(inner)
                } else {
                    err(self.here(), "expected `)`")
                }
            }
            Some((_, tok)) => err(at, format!("unexpected token {}", tok.describe())),
            None => err(at, "unexpected end of input"),
        }
    }
}

/// Parse `text` over the ordered variable list, substituting parameters.
pub fn parse_polynomial(
    text: &str,
    variables: &[String],
    parameters: &BTreeMap<String, Rat>,
) -> Result<Polynomial, ParseError> {
    if variables.is_empty() {
        return err(0, "no variables declared");
    }
    let mut var_index = BTreeMap::new();
    for (i, v) in variables.iter().enumerate() {
        if parameters.contains_key(v) {
            return err(0, format!("`{v}` is both a variable and a parameter"));
        }
        if var_index.insert(v.as_str(), i).is_some() {
            return err(0, format!("duplicate variable `{v}`"));
        }
    }
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(0, "empty expression");
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        nvars: variables.len(),
        var_index,
        params: parameters,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return err(p.here(), "trailing input after expression");
    }
    Ok(poly)
}

/// All distinct identifiers in `text`, in natural order (alphabetic
/// prefix, then numeric suffix) — the default variable list once bound
/// parameter names are removed.
pub fn scan_identifiers(text: &str) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = Vec::new();
    for (_, tok) in lex(text)? {
        if let Tok::Ident(name) = tok {
            if !names.contains(&name) {
                names.push(name);
            }
        }
    }
    names.sort_by_key(|n| natural_key(n));
    Ok(names)
}

fn natural_key(name: &str) -> (String, u64, String) {
    let split = name.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (prefix, digits) = name.split_at(split);
    let number = digits.parse::<u64>().unwrap_or(0);
    (prefix.to_string(), number, name.to_string())
}
