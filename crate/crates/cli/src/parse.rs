//! Expression front-end.
//!
//! One grammar covers every sort the engine renders:
//!
//! ```text
//! expr    := wedge (('+' | '-') wedge)*
//! wedge   := product ('^' product)*            -- '^' not followed by an integer
//! product := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' int)*
//! atom    := int | ident | '(' expr ')' | '[' expr ']_q'
//! ```
//!
//! Identifiers: `s`, `q`, `i`, registered root names; `a`, `a*`, `as`, `c`, `c*`, `cs`;
//! `E`, `F`, `K`; `w-`, `w+`, `wz`, `w0`. `a*` is the adjoint unless the `*` is followed by
//! something that can start an operand, in which case it is a product (`a*c` is `a·c`).

use num_bigint::BigInt;
use std::fmt;
use suq2::exterior::Form;
use suq2::scalars::lookup_root;
use suq2::{AlgElement, Half, Idx, Pbw, Scalar, UqElement};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sort {
    Scalar,
    Alg,
    Uq,
    Form,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::Scalar => "scalar",
            Sort::Alg => "algebra element",
            Sort::Uq => "U_q(su(2)) element",
            Sort::Form => "form",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdent { pos: usize, name: String },
    #[error("mixed-sort expression at position {pos}: cannot combine {left} with {right}")]
    MixedSort { pos: usize, left: Sort, right: Sort },
    #[error("at position {pos}: {msg}")]
    Invalid { pos: usize, msg: String },
}

/// A parsed value of any sort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(Scalar),
    Alg(AlgElement),
    Uq(UqElement),
    Form(Form),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(x) => write!(f, "{}", x),
            Value::Alg(x) => write!(f, "{}", x),
            Value::Uq(x) => write!(f, "{}", x),
            Value::Form(x) => write!(f, "{}", x),
        }
    }
}

impl Value {
    pub fn sort(&self) -> Sort {
        match self {
            Value::Scalar(_) => Sort::Scalar,
            Value::Alg(_) => Sort::Alg,
            Value::Uq(_) => Sort::Uq,
            Value::Form(_) => Sort::Form,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(x) => x.is_zero(),
            Value::Alg(x) => x.is_zero(),
            Value::Uq(x) => x.is_zero(),
            Value::Form(x) => x.is_zero(),
        }
    }

    /// Lift into `target`, if the embedding exists.
    pub fn promote(&self, target: Sort) -> Option<Value> {
        Some(match (self, target) {
            (v, t) if v.sort() == t => v.clone(),
            (Value::Scalar(x), Sort::Alg) => Value::Alg(AlgElement::from_scalar(x.clone())),
            (Value::Scalar(x), Sort::Uq) => Value::Uq(UqElement::from_scalar(x.clone())),
            (Value::Scalar(x), Sort::Form) => Value::Form(Form::from_alg(AlgElement::from_scalar(x.clone()))),
            (Value::Alg(x), Sort::Form) => Value::Form(Form::from_alg(x.clone())),
            _ => return None,
        })
    }

    /// Equality up to the sort embeddings (`(x) 1` parses back as an algebra element).
    pub fn same_as(&self, o: &Value) -> bool {
        let top = self.sort().max(o.sort());
        match (self.promote(top), o.promote(top)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        }
    }

    pub fn into_scalar(self) -> Option<Scalar> {
        match self {
            Value::Scalar(x) => Some(x),
            Value::Alg(x) => x.as_scalar().or_else(|| x.is_zero().then(Scalar::zero)),
            _ => None,
        }
    }
}

fn unify(a: Value, b: Value, pos: usize) -> Result<(Value, Value), ParseError> {
    let top = a.sort().max(b.sort());
    let (sa, sb) = (a.sort(), b.sort());
    match (a.promote(top), b.promote(top)) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(ParseError::MixedSort { pos, left: sa, right: sb }),
    }
}

fn add(a: Value, b: Value, pos: usize) -> Result<Value, ParseError> {
    Ok(match unify(a, b, pos)? {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x + y),
        (Value::Alg(x), Value::Alg(y)) => Value::Alg(x + y),
        (Value::Uq(x), Value::Uq(y)) => Value::Uq(x + y),
        (Value::Form(x), Value::Form(y)) => Value::Form(x + y),
        _ => unreachable!("unify returns equal sorts"),
    })
}

fn neg(a: Value) -> Value {
    match a {
        Value::Scalar(x) => Value::Scalar(-x),
        Value::Alg(x) => Value::Alg(-x),
        Value::Uq(x) => Value::Uq(x.neg_ref()),
        Value::Form(x) => Value::Form(x.neg_ref()),
    }
}

fn scale(v: Value, c: &Scalar) -> Value {
    match v {
        Value::Scalar(x) => Value::Scalar(x * c.clone()),
        Value::Alg(x) => Value::Alg(x.scale(c)),
        Value::Uq(x) => Value::Uq(x.scale(c)),
        Value::Form(x) => Value::Form(x.scale(c)),
    }
}

fn mul(a: Value, b: Value, pos: usize) -> Result<Value, ParseError> {
    Ok(match (a, b) {
        (Value::Scalar(c), v) => scale(v, &c),
        (v, Value::Scalar(c)) => scale(v, &c),
        (Value::Alg(x), Value::Alg(y)) => Value::Alg(x * y),
        (Value::Uq(x), Value::Uq(y)) => Value::Uq(x * y),
        (Value::Alg(x), Value::Form(f)) => Value::Form(f.left_mul(&x)),
        (Value::Form(f), Value::Alg(x)) => Value::Form(f.right_mul(&x)),
        (Value::Form(f), Value::Form(g)) => Value::Form(f.wedge(&g)),
        (a, b) => return Err(ParseError::MixedSort { pos, left: a.sort(), right: b.sort() }),
    })
}

fn wedge(a: Value, b: Value, pos: usize) -> Result<Value, ParseError> {
    let (sa, sb) = (a.sort(), b.sort());
    match (a.promote(Sort::Form), b.promote(Sort::Form)) {
        (Some(Value::Form(f)), Some(Value::Form(g))) => Ok(Value::Form(f.wedge(&g))),
        _ => Err(ParseError::MixedSort { pos, left: sa, right: sb }),
    }
}

fn inverse(v: Value, pos: usize) -> Result<Value, ParseError> {
    let fail = || ParseError::Invalid { pos, msg: "negative power of a non-invertible element".into() };
    match v {
        Value::Scalar(x) => x.inv().map(Value::Scalar).map_err(|_| fail()),
        Value::Uq(u) => {
            let mut terms = u.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if m.f == 0 && m.e == 0 => {
                    let ci = c.inv().map_err(|_| fail())?;
                    Ok(Value::Uq(UqElement::monomial(Pbw { k: -m.k, ..Pbw::ONE }).scale(&ci)))
                }
                _ => Err(fail()),
            }
        }
        Value::Alg(x) => match x.as_scalar() {
            Some(c) => c.inv().map(|c| Value::Alg(AlgElement::from_scalar(c))).map_err(|_| fail()),
            None => Err(fail()),
        },
        Value::Form(_) => Err(fail()),
    }
}

fn power(v: Value, k: i64, pos: usize) -> Result<Value, ParseError> {
    let base = if k < 0 { inverse(v, pos)? } else { v };
    let mut out = Value::Scalar(Scalar::one());
    for _ in 0..k.unsigned_abs() {
        out = mul(out, base.clone(), pos)?;
    }
    Ok(out)
}

// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    /// `a*` or `c*` read as the adjoint.
    Star(char),
    Plus,
    Minus,
    Times,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    /// `]_q`
    QClose,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek_operand_start(&self, mut p: usize) -> bool {
        while p < self.src.len() && self.src[p].is_ascii_whitespace() {
            p += 1;
        }
        p < self.src.len() && {
            let c = self.src[p];
            c.is_ascii_alphanumeric() || c == b'_' || c == b'(' || c == b'['
        }
    }

    fn tokens(mut self) -> Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let start = self.pos;
            let Some(&c) = self.src.get(self.pos) else { break };
            let tok = match c {
                b'0'..=b'9' => {
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                    Tok::Int(text.parse().expect("digits parse"))
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident").to_string();
                    let next = self.src.get(self.pos).copied();
                    match (name.as_str(), next) {
                        ("w", Some(b'-')) | ("w", Some(b'+')) => {
                            self.pos += 1;
                            Tok::Ident(format!("w{}", next.unwrap() as char))
                        }
                        ("a" | "c", Some(b'*')) if !self.peek_operand_start(self.pos + 1) => {
                            self.pos += 1;
                            Tok::Star(name.chars().next().unwrap())
                        }
                        _ => Tok::Ident(name),
                    }
                }
                b']' => {
                    if self.src[self.pos..].starts_with(b"]_q") {
                        self.pos += 3;
                        Tok::QClose
                    } else {
                        return Err(ParseError::Syntax { pos: start, msg: "expected `]_q`".into() });
                    }
                }
                _ => {
                    self.pos += 1;
                    match c {
                        b'+' => Tok::Plus,
                        b'-' => Tok::Minus,
                        b'*' => Tok::Times,
                        b'/' => Tok::Slash,
                        b'^' => Tok::Caret,
                        b'(' => Tok::LParen,
                        b')' => Tok::RParen,
                        b'[' => Tok::LBracket,
                        _ => {
                            let ch = std::str::from_utf8(&self.src[start..]).ok().and_then(|s| s.chars().next()).unwrap_or('?');
                            return Err(ParseError::Syntax { pos: start, msg: format!("unexpected character `{}`", ch) });
                        }
                    }
                }
            };
            out.push((tok, start));
        }
        Ok(out)
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    i: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.1).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|t| t.0.clone());
        self.i += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => Err(ParseError::Syntax { pos, msg: format!("expected {}", what) }),
        }
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut v = self.wedge()?;
        while let Some(t) = self.peek() {
            let pos = self.pos();
            match t {
                Tok::Plus => {
                    self.i += 1;
                    let r = self.wedge()?;
                    v = add(v, r, pos)?;
                }
                Tok::Minus => {
                    self.i += 1;
                    let r = self.wedge()?;
                    v = add(v, neg(r), pos)?;
                }
                _ => break,
            }
        }
        Ok(v)
    }

    /// `^` followed by an optional minus and an integer is a power, handled in `power`.
    fn caret_is_power(&self) -> bool {
        match (self.toks.get(self.i + 1).map(|t| &t.0), self.toks.get(self.i + 2).map(|t| &t.0)) {
            (Some(Tok::Int(_)), _) => true,
            (Some(Tok::Minus), Some(Tok::Int(_))) => true,
            _ => false,
        }
    }

    fn wedge(&mut self) -> Result<Value, ParseError> {
        let mut v = self.product()?;
        while self.peek() == Some(&Tok::Caret) && !self.caret_is_power() {
            let pos = self.pos();
            self.i += 1;
            let r = self.product()?;
            v = wedge(v, r, pos)?;
        }
        Ok(v)
    }

    fn starts_operand(t: &Tok) -> bool {
        matches!(t, Tok::Int(_) | Tok::Ident(_) | Tok::Star(_) | Tok::LParen | Tok::LBracket)
    }

    fn product(&mut self) -> Result<Value, ParseError> {
        let mut v = self.unary()?;
        loop {
            let pos = self.pos();
            match self.peek() {
                Some(Tok::Times) => {
                    self.i += 1;
                    let r = self.unary()?;
                    v = mul(v, r, pos)?;
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    let r = self.unary()?;
                    let sort = r.sort();
                    let d = r.into_scalar().ok_or(ParseError::MixedSort { pos, left: v.sort(), right: sort })?;
                    let inv = d.inv().map_err(|_| ParseError::Invalid { pos, msg: "division by zero".into() })?;
                    v = scale(v, &inv);
                }
                Some(t) if Self::starts_operand(t) => {
                    let r = self.unary()?;
                    v = mul(v, r, pos)?;
                }
                _ => break,
            }
        }
        Ok(v)
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            return Ok(neg(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let mut v = self.atom()?;
        while self.peek() == Some(&Tok::Caret) && self.caret_is_power() {
            let pos = self.pos();
            self.i += 1;
            let negative = self.peek() == Some(&Tok::Minus);
            if negative {
                self.i += 1;
            }
            let Some(Tok::Int(k)) = self.bump() else { unreachable!("checked by caret_is_power") };
            let k: i64 = i64::try_from(k).map_err(|_| ParseError::Invalid { pos, msg: "exponent out of range".into() })?;
            v = power(v, if negative { -k } else { k }, pos)?;
        }
        Ok(v)
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Value::Scalar(Scalar::from_rational(n.into()))),
            Some(Tok::Star(g)) => Ok(Value::Alg(if g == 'a' { AlgElement::astar() } else { AlgElement::cstar() })),
            Some(Tok::Ident(name)) => ident(&name, pos),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            Some(Tok::LBracket) => {
                let v = self.expr()?;
                self.expect(Tok::QClose, "`]_q`")?;
                qnum_sugar(v, pos)
            }
            Some(_) => Err(ParseError::Syntax { pos, msg: "expected an operand".into() }),
            None => Err(ParseError::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }
}

fn qnum_sugar(v: Value, pos: usize) -> Result<Value, ParseError> {
    let bad = || ParseError::Invalid { pos, msg: "[x]_q needs a half-integer x".into() };
    let two_x = Scalar::from_int(2) * v.into_scalar().ok_or_else(bad)?;
    let twice = (-64..=64).find(|k| two_x == Scalar::from_int(*k)).ok_or_else(bad)?;
    Ok(Value::Scalar(Scalar::qnum(Half(twice))))
}

fn ident(name: &str, pos: usize) -> Result<Value, ParseError> {
    let form = |a: Idx| Ok(Value::Form(Form::omega(a)));
    match name {
        "s" => Ok(Value::Scalar(Scalar::s())),
        "q" => Ok(Value::Scalar(Scalar::q())),
        "i" => Ok(Value::Scalar(Scalar::i())),
        "a" => Ok(Value::Alg(AlgElement::a())),
        "as" => Ok(Value::Alg(AlgElement::astar())),
        "c" => Ok(Value::Alg(AlgElement::c())),
        "cs" => Ok(Value::Alg(AlgElement::cstar())),
        "E" => Ok(Value::Uq(UqElement::e())),
        "F" => Ok(Value::Uq(UqElement::f())),
        "K" => Ok(Value::Uq(UqElement::k())),
        "w-" => form(Idx::Minus),
        "w+" => form(Idx::Plus),
        "wz" => form(Idx::Z),
        "w0" => form(Idx::Zero),
        _ => match lookup_root(name) {
            Some(id) => Ok(Value::Scalar(Scalar::root(id))),
            None => Err(ParseError::UnknownIdent { pos, name: name.to_string() }),
        },
    }
}

/// Parse an expression of any sort.
pub fn parse_expr(text: &str) -> Result<Value, ParseError> {
    let toks = Lexer { src: text.as_bytes(), pos: 0 }.tokens()?;
    if toks.is_empty() {
        return Err(ParseError::Syntax { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, i: 0, end: text.len() };
    let v = p.expr()?;
    if p.i < p.toks.len() {
        return Err(ParseError::Syntax { pos: p.pos(), msg: "unexpected trailing input".into() });
    }
    Ok(v)
}

/// Parse an expression that must be a scalar.
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let v = parse_expr(text)?;
    let sort = v.sort();
    v.into_scalar().ok_or(ParseError::MixedSort { pos: 0, left: Sort::Scalar, right: sort })
}
