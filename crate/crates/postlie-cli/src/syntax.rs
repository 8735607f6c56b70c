//! Surface syntax for trees, envelope words, and their combinations.
//!
//! Grammar:
//!
//! ```text
//! word   := expr (";" expr)*
//! expr   := term ("+" term)*
//! term   := [rational "*"] factor+
//! factor := "Xi" | "1" | "X_" idx | "X^" nvec | "I[" nvec "](" expr ")"
//! nvec   := "(" int ("," int)* ")"
//! ```
//!
//! Whitespace is insignificant between tokens. A rational is
//! `["-"] digits ["/" digits]`. The formatters in this module emit the
//! canonical spelling of every element: parsing a formatted element gives it
//! back exactly.

use num::{BigInt, BigRational};
use postlie::envelope::{EnvWord, Gen};
use postlie::lincomb::LinComb;
use postlie::tree::{DecoratedTree, EdgeDec};
use postlie::tree_postlie::PlantedGen;
use std::fmt;

/// A syntax error, with the byte offset into the input where it occurred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// One multiplicative factor of a term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// The noise symbol `Xi`.
    Xi,
    /// The empty tree `1`.
    One,
    /// A single direction `X_i`.
    X(usize),
    /// A monomial `X^(n)`.
    XPow(Vec<u32>),
    /// A planted tree `I[(a)](expr)`.
    Plant(Vec<u32>, Expr),
}

/// A term: a rational coefficient times a product of factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: BigRational,
    pub factors: Vec<Factor>,
}

/// A sum of terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
}

/// Parses a single expression.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut c = Cursor::new(src);
    let e = c.expr()?;
    c.finish()?;
    Ok(e)
}

/// Parses a `;`-separated envelope word; a single expression is a
/// one-letter word.
pub fn parse_word(src: &str) -> Result<Vec<Expr>, ParseError> {
    let mut c = Cursor::new(src);
    let mut letters = vec![c.expr()?];
    while c.eat(b';') {
        letters.push(c.expr()?);
    }
    c.finish()?;
    Ok(letters)
}

/// Parses a standalone decoration vector `(n0,...,nd)`.
pub fn parse_dec(src: &str) -> Result<Vec<u32>, ParseError> {
    let mut c = Cursor::new(src);
    let n = c.nvec()?;
    c.finish()?;
    Ok(n)
}

// ---------------------------------------------------------------------------
// The cursor shared by this grammar and the multi-index one.

pub(crate) struct Cursor<'a> {
    b: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor {
            b: src.as_bytes(),
            pos: 0,
        }
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    pub(crate) fn ws(&mut self) {
        while self
            .b
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    /// The next byte after whitespace, without consuming it.
    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.b.get(self.pos).copied()
    }

    /// Consumes `c` if it is next (after whitespace).
    pub(crate) fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected '{}'", c as char)),
        }
    }

    /// An unsigned decimal integer.
    pub(crate) fn uint<T: std::str::FromStr>(&mut self, what: &str) -> Result<T, ParseError> {
        self.ws();
        let start = self.pos;
        while self.b.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(format!("expected {what}"));
        }
        let text = std::str::from_utf8(&self.b[start..self.pos]).unwrap();
        text.parse().or_else(|_| {
            self.pos = start;
            self.err(format!("{what} out of range: {text}"))
        })
    }

    /// A decoration vector `(n0,...,nd)` of nonnegative components.
    pub(crate) fn nvec(&mut self) -> Result<Vec<u32>, ParseError> {
        self.expect(b'(')?;
        let mut out = Vec::new();
        loop {
            if self.peek() == Some(b'-') {
                return self.err("decoration components are nonnegative");
            }
            out.push(self.uint::<u32>("a decoration component")?);
            if !self.eat(b',') {
                break;
            }
        }
        self.expect(b')')?;
        Ok(out)
    }

    /// `["-"] digits ["/" digits]`, reduced.
    pub(crate) fn rational(&mut self) -> Result<BigRational, ParseError> {
        self.ws();
        let neg = self.eat(b'-');
        let start = self.pos;
        while self.b.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let mut numer: BigInt = std::str::from_utf8(&self.b[start..self.pos])
            .unwrap()
            .parse()
            .unwrap();
        if neg {
            numer = -numer;
        }
        let mut denom = BigInt::from(1);
        if self.eat(b'/') {
            let dstart = self.pos;
            while self.b.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            if dstart == self.pos {
                return self.err("expected a denominator");
            }
            denom = std::str::from_utf8(&self.b[dstart..self.pos])
                .unwrap()
                .parse()
                .unwrap();
            if denom == BigInt::from(0) {
                self.pos = dstart;
                return self.err("zero denominator");
            }
        }
        Ok(BigRational::new(numer, denom))
    }

    /// `[rational "*"]` — a coefficient is only committed when the `*`
    /// follows, so a bare `1` stays available as the empty-tree factor.
    pub(crate) fn coefficient(&mut self) -> Result<BigRational, ParseError> {
        if matches!(self.peek(), Some(c) if c == b'-' || c.is_ascii_digit()) {
            let save = self.pos;
            let r = self.rational()?;
            if self.eat(b'*') {
                return Ok(r);
            }
            self.pos = save;
        }
        Ok(BigRational::from(BigInt::from(1)))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut terms = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }
        Ok(Expr { terms })
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let coef = self.coefficient()?;
        let mut factors = vec![self.factor()?];
        while matches!(self.peek(), Some(b'X' | b'I' | b'1')) {
            factors.push(self.factor()?);
        }
        Ok(Term { coef, factors })
    }

    fn factor(&mut self) -> Result<Factor, ParseError> {
        match self.peek() {
            Some(b'X') => {
                self.pos += 1;
                match self.b.get(self.pos) {
                    Some(b'i') => {
                        self.pos += 1;
                        Ok(Factor::Xi)
                    }
                    Some(b'_') => {
                        self.pos += 1;
                        Ok(Factor::X(self.uint("a direction index")?))
                    }
                    Some(b'^') => {
                        self.pos += 1;
                        Ok(Factor::XPow(self.nvec()?))
                    }
                    _ => self.err("expected 'i', '_', or '^' after 'X'"),
                }
            }
            Some(b'I') => {
                self.pos += 1;
                self.expect(b'[')?;
                let a = self.nvec()?;
                self.expect(b']')?;
                self.expect(b'(')?;
                let body = self.expr()?;
                self.expect(b')')?;
                Ok(Factor::Plant(a, body))
            }
            Some(b'1') => {
                self.pos += 1;
                if self
                    .b
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_digit() || *c == b'/')
                {
                    self.pos -= 1;
                    return self.err("a coefficient must be followed by '*'");
                }
                Ok(Factor::One)
            }
            _ => self.err("expected a factor: Xi, 1, X_i, X^(..), or I[(..)](..)"),
        }
    }
}

// ---------------------------------------------------------------------------
// Canonical formatting.

/// `(n0,...,nd)`.
pub fn format_dec(n: &[u32]) -> String {
    let body: Vec<String> = n.iter().map(u32::to_string).collect();
    format!("({})", body.join(","))
}

/// The canonical factor spelling `X^ℓ Ξ^m ∏ I_a(τ)` of a tree; the empty
/// tree is `1`.
pub fn format_tree(t: &DecoratedTree) -> String {
    let mut parts = Vec::new();
    if t.dec.iter().any(|&c| c != 0) {
        parts.push(format!("X^{}", format_dec(&t.dec)));
    }
    for (e, child) in &t.children {
        match e {
            EdgeDec::Noise => parts.push("Xi".to_string()),
            EdgeDec::Kernel(a) => {
                parts.push(format!("I[{}]({})", format_dec(a), format_tree(child)))
            }
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// A generator: `X_i` or `I[a](body)`.
pub fn format_gen(g: &Gen<PlantedGen>) -> String {
    match g {
        Gen::X(i) => format!("X_{i}"),
        Gen::Ab(p) => format!("I[{}]({})", format_dec(&p.a), format_tree(&p.tree)),
    }
}

/// A PBW word `X^m t₁ ⋯ tₙ` as a single product; the empty word is `1`.
pub fn format_env_word(w: &EnvWord<PlantedGen>) -> String {
    let mut parts = Vec::new();
    if w.x.iter().any(|&c| c != 0) {
        parts.push(format!("X^{}", format_dec(&w.x)));
    }
    for p in &w.factors {
        parts.push(format!("I[{}]({})", format_dec(&p.a), format_tree(&p.tree)));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join(" ")
    }
}

/// A coproduct term `w1 (x) w2`.
pub fn format_tensor(pair: &(EnvWord<PlantedGen>, EnvWord<PlantedGen>)) -> String {
    format!(
        "{} (x) {}",
        format_env_word(&pair.0),
        format_env_word(&pair.1)
    )
}

/// Text form of a combination: `0` when empty, otherwise `+`-joined terms
/// with coefficients printed only when they differ from 1.
pub fn format_lincomb<B: Ord + Clone>(l: &LinComb<B>, f: impl Fn(&B) -> String) -> String {
    if l.is_zero() {
        return "0".to_string();
    }
    let one = BigRational::from(BigInt::from(1));
    l.terms()
        .map(|(b, c)| {
            if *c == one {
                f(b)
            } else {
                format!("{c} * {}", f(b))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// JSON form: `{"terms":[{"coef":"p/q","elem":"..."}]}`, terms in canonical
/// order, byte-stable for equal inputs.
pub fn json_lincomb<B: Ord + Clone>(l: &LinComb<B>, f: impl Fn(&B) -> String) -> String {
    let terms: Vec<serde_json::Value> = l
        .terms()
        .map(|(b, c)| {
            serde_json::json!({
                "coef": c.to_string(),
                "elem": f(b),
            })
        })
        .collect();
    serde_json::json!({ "terms": terms }).to_string()
}
