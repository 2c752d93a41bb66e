//! The line-oriented ring/ideal text format.
//!
//! ```text
//! ring
//!   field GF(32003) | QQ
//!   rank <k>
//!   var <name> deg (<q1>,...,<qk>)
//! ideal
//!   gen <polynomial>
//! ```
//!
//! `#` starts a comment. Degree entries are rationals `a` or `a/b`;
//! polynomial coefficients are integers, with `a/b` also accepted so that
//! printed output always parses back. The `ideal` block may be absent or
//! empty, in which case only the ring is returned.

use std::fmt::{self, Write as _};

use stillman_core::exactmath::{DegreeVector, Rational};
use stillman_core::polyring::{
    CoefficientField, GradingSpec, IdealPresentation, MGPolyRing, Monomial, Polynomial, RingError,
};
use thiserror::Error;

/// A syntax or validation error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) | Tok::Int(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
        }
    }
}

/// Tokens of one line, each with its 1-based column.
struct Line {
    number: usize,
    toks: Vec<(Tok, usize)>,
    end: usize,
    pos: usize,
}

impl Line {
    fn lex(number: usize, text: &str) -> Result<Line, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(chars[start..i].iter().collect()), col));
            } else if "(),/^*+-".contains(c) {
                toks.push((Tok::Sym(c), col));
                i += 1;
            } else {
                return Err(ParseError {
                    line: number,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                });
            }
        }
        let end = chars.len() + 1;
        Ok(Line {
            number,
            toks,
            end,
            pos: 0,
        })
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err(&self, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.number,
            column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn next(&mut self) -> Option<(Tok, usize)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expected(&self, what: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.err(self.col(), format!("expected {what}, found {t}")),
            None => self.err(self.col(), format!("expected {what}, found end of line")),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.expected(&format!("`{c}`")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        let hit = self.peek() == Some(&Tok::Sym(c));
        if hit {
            self.pos += 1;
        }
        hit
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        match self.peek() {
            Some(Tok::Ident(_)) => match self.next() {
                Some((Tok::Ident(s), c)) => Ok((s, c)),
                _ => unreachable!(),
            },
            _ => Err(self.expected(what)),
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == word => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.expected(&format!("`{word}`"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<(String, usize), ParseError> {
        match self.peek() {
            Some(Tok::Int(_)) => match self.next() {
                Some((Tok::Int(s), c)) => Ok((s, c)),
                _ => unreachable!(),
            },
            _ => Err(self.expected(what)),
        }
    }

    fn usize(&mut self, what: &str) -> Result<usize, ParseError> {
        let (s, col) = self.int(what)?;
        s.parse().map_err(|_| self.err(col, format!("{s} is too large")))
    }

    /// `[+|-] a [/ b]`
    fn rational(&mut self) -> Result<Rational, ParseError> {
        let col = self.col();
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let q = self.unsigned_rational(col)?;
        Ok(if negative { -q } else { q })
    }

    fn unsigned_rational(&mut self, col: usize) -> Result<Rational, ParseError> {
        let (num, _) = self.int("a rational")?;
        let mut text = num;
        if self.eat('/') {
            let (den, _) = self.int("a denominator")?;
            text = format!("{text}/{den}");
        }
        stillman_core::monoid::parse_rational(&text).map_err(|m| self.err(col, m))
    }

    fn end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(self.err(self.col(), format!("unexpected {t} after the end of the statement"))),
        }
    }
}

fn parse_field(line: &mut Line) -> Result<CoefficientField, ParseError> {
    let (name, col) = line.ident("`GF(p)` or `QQ`")?;
    match name.as_str() {
        "QQ" => Ok(CoefficientField::Rationals),
        "GF" => {
            line.sym('(')?;
            let (p, pcol) = line.int("a prime")?;
            line.sym(')')?;
            let p: u64 = p.parse().map_err(|_| line.err(pcol, format!("{p} is too large")))?;
            CoefficientField::prime(p).map_err(|e| line.err(pcol, e.to_string()))
        }
        other => Err(line.err(col, format!("unknown field `{other}`, expected `GF(p)` or `QQ`"))),
    }
}

fn parse_tuple(line: &mut Line, rank: usize) -> Result<DegreeVector, ParseError> {
    let col = line.col();
    line.sym('(')?;
    let mut entries = Vec::new();
    if !line.eat(')') {
        loop {
            entries.push(line.rational()?);
            if line.eat(')') {
                break;
            }
            line.sym(',')?;
        }
    }
    if entries.len() != rank {
        return Err(line.err(
            col,
            format!("degree has {} entries but the rank is {rank}", entries.len()),
        ));
    }
    Ok(DegreeVector::new(entries))
}

/// `[+|-] term ((+|-) term)*` with `term = factor (* factor)*` and
/// `factor = coefficient | name [^ exponent]`.
fn parse_polynomial(line: &mut Line, names: &[String]) -> Result<Polynomial, ParseError> {
    let mut poly = Polynomial::zero();
    let mut negative = if line.eat('-') {
        true
    } else {
        line.eat('+');
        false
    };
    loop {
        let (m, c) = parse_term(line, names)?;
        poly.add_term(m, if negative { -c } else { c });
        if line.eat('+') {
            negative = false;
        } else if line.eat('-') {
            negative = true;
        } else {
            break;
        }
    }
    Ok(poly)
}

fn parse_term(line: &mut Line, names: &[String]) -> Result<(Monomial, Rational), ParseError> {
    let mut coef = Rational::from_integer(1.into());
    let mut mono = Monomial::one();
    loop {
        match line.peek() {
            Some(Tok::Int(_)) => {
                let col = line.col();
                coef *= line.unsigned_rational(col)?;
            }
            Some(Tok::Ident(_)) => {
                let (name, col) = line.ident("a variable")?;
                let v = names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| line.err(col, format!("unknown variable `{name}`")))?;
                let mut e = 1u32;
                if line.eat('^') {
                    let (s, ecol) = line.int("an exponent")?;
                    e = s
                        .parse()
                        .map_err(|_| line.err(ecol, format!("exponent {s} is too large")))?;
                }
                mono = mono.mul(&Monomial::from_pairs([(v, e)]));
            }
            _ => return Err(line.expected("a coefficient or variable")),
        }
        if !line.eat('*') {
            return Ok((mono, coef));
        }
    }
}

#[derive(PartialEq)]
enum Block {
    None,
    Ring,
    Ideal,
}

/// Parse a field descriptor, `QQ` or `GF(p)`.
pub fn parse_field_descriptor(text: &str) -> Result<CoefficientField, ParseError> {
    let mut line = Line::lex(1, text)?;
    let field = parse_field(&mut line)?;
    line.end()?;
    Ok(field)
}

/// Parse a ring and, when an `ideal` block with generators is present, the
/// ideal.
pub fn parse_input(text: &str) -> Result<(MGPolyRing, Option<IdealPresentation>), ParseError> {
    let mut block = Block::None;
    let mut field: Option<CoefficientField> = None;
    let mut rank: Option<usize> = None;
    let mut names: Vec<String> = Vec::new();
    let mut degrees: Vec<DegreeVector> = Vec::new();
    let mut ring: Option<MGPolyRing> = None;
    let mut gens: Vec<(Polynomial, usize)> = Vec::new();
    let mut last_line = 0;

    let finish_ring = |line: usize,
                       field: Option<CoefficientField>,
                       rank: Option<usize>,
                       names: &[String],
                       degrees: &[DegreeVector]|
     -> Result<MGPolyRing, ParseError> {
        let at = |message: &str| ParseError {
            line,
            column: 1,
            message: message.to_string(),
        };
        let field = field.ok_or_else(|| at("the ring block has no `field` line"))?;
        let rank = rank.ok_or_else(|| at("the ring block has no `rank` line"))?;
        let grading = GradingSpec::new(rank, degrees.to_vec()).map_err(|e| at(&e.to_string()))?;
        MGPolyRing::new(names.to_vec(), grading, field).map_err(|e| at(&e.to_string()))
    };

    for (i, raw) in text.lines().enumerate() {
        let mut line = Line::lex(i + 1, raw)?;
        last_line = i + 1;
        if line.toks.is_empty() {
            continue;
        }
        let (word, col) = line.ident("a keyword")?;
        match (word.as_str(), &block) {
            ("ring", Block::None) => block = Block::Ring,
            ("field", Block::Ring) => {
                if field.is_some() {
                    return Err(line.err(col, "duplicate `field` line"));
                }
                field = Some(parse_field(&mut line)?);
            }
            ("rank", Block::Ring) => {
                if rank.is_some() {
                    return Err(line.err(col, "duplicate `rank` line"));
                }
                rank = Some(line.usize("the grading rank")?);
            }
            ("var", Block::Ring) => {
                let k = rank.ok_or_else(|| line.err(col, "`rank` must come before the first `var`"))?;
                let (name, ncol) = line.ident("a variable name")?;
                if names.contains(&name) {
                    return Err(line.err(ncol, format!("duplicate variable `{name}`")));
                }
                line.keyword("deg")?;
                degrees.push(parse_tuple(&mut line, k)?);
                names.push(name);
            }
            ("ideal", Block::Ring) => {
                ring = Some(finish_ring(line.number, field, rank, &names, &degrees)?);
                block = Block::Ideal;
            }
            ("gen", Block::Ideal) => {
                let start = line.col();
                let f = parse_polynomial(&mut line, &names)?;
                if f.is_zero() {
                    return Err(line.err(start, "generator is zero"));
                }
                line.end()?;
                gens.push((f, line.number));
                continue;
            }
            (other, Block::None) => return Err(line.err(col, format!("expected `ring`, found `{other}`"))),
            (other, _) => return Err(line.err(col, format!("unexpected keyword `{other}`"))),
        }
        line.end()?;
    }

    let ring = match (ring, block) {
        (Some(r), _) => r,
        (None, Block::Ring) => finish_ring(last_line.max(1), field, rank, &names, &degrees)?,
        _ => {
            return Err(ParseError {
                line: last_line.max(1),
                column: 1,
                message: "input has no `ring` block".into(),
            })
        }
    };
    if gens.is_empty() {
        return Ok((ring, None));
    }
    let polys = gens.iter().map(|(f, _)| f.clone()).collect();
    let ideal = IdealPresentation::new(ring.clone(), polys).map_err(|e: RingError| ParseError {
        line: gens[0].1,
        column: 1,
        message: e.to_string(),
    })?;
    Ok((ring, Some(ideal)))
}

/// Render in the input format; [`parse_input`] reads it back unchanged.
pub fn print_input(ring: &MGPolyRing, ideal: Option<&IdealPresentation>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ring");
    let _ = writeln!(out, "  field {}", ring.field());
    let _ = writeln!(out, "  rank {}", ring.grading().rank());
    for (name, d) in ring.variables().iter().zip(ring.grading().degrees()) {
        let _ = writeln!(out, "  var {name} deg {d}");
    }
    if let Some(ideal) = ideal {
        let _ = writeln!(out, "ideal");
        for g in ideal.generators() {
            let _ = writeln!(out, "  gen {}", ring.format(g));
        }
    }
    out
}
