//! The job language.
//!
//! ```text
//! ring Z <x,y> deglex(x>y) bound 3;
//! ideal 2*x, 3*y;
//! option reduce;
//! ```

use std::fmt;

use ibig::IBig;
use ncgb_core::coeff::{bigint_to_ibig, ibig_to_bigint, CoeffRing, Rationals};
use ncgb_core::{Alphabet, DomainKind, FreeAlgebra, MonomialOrder, OrderKind, Poly};
use num_rational::BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    NegativeExponent,
    MissingBound,
    InvalidRing(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.col)?;
        match &self.kind {
            ParseErrorKind::Syntax(m) => write!(f, "syntax error: {m}"),
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            ParseErrorKind::NegativeExponent => write!(f, "negative exponent"),
            ParseErrorKind::MissingBound => write!(f, "missing bound in ring declaration"),
            ParseErrorKind::InvalidRing(m) => write!(f, "invalid ring: {m}"),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(IBig),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let bump = |c: char, line: &mut usize, col: &mut usize| {
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            bump(c, &mut line, &mut col);
            i += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
                col += 1;
            }
            continue;
        }
        let (l0, c0) = (line, col);
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
                col += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: l0, col: c0 });
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
                col += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), line: l0, col: c0 });
        } else if "; < > ( ) , * ^ + - / [ ]".contains(c) {
            out.push(Token { tok: Tok::Sym(c), line: l0, col: c0 });
            i += 1;
            col += 1;
        } else {
            return Err(ParseError { line, col, kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")) });
        }
    }
    out.push(Token { tok: Tok::Eof, line, col });
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Ring {
    pub domain: DomainKind,
    pub alphabet: Alphabet,
    pub order: MonomialOrder,
}

impl Ring {
    /// The algebra over Q used to hold parsed generators exactly.
    pub fn rational_algebra(&self) -> FreeAlgebra<Rationals> {
        FreeAlgebra::new(Rationals, self.alphabet.clone(), self.order.clone())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobOptions {
    pub reduce: bool,
    pub tail_reduce: bool,
    pub stats: bool,
    pub monomial_basis_upto: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Job {
    pub ring: Ring,
    pub bound: usize,
    /// Generators with exact rational coefficients; integral unless the
    /// domain is Q.
    pub generators: Vec<Poly<Rationals>>,
    pub options: JobOptions,
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    alg: Option<FreeAlgebra<Rationals>>,
    domain: Option<DomainKind>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err_at(t: &Token, kind: ParseErrorKind) -> ParseError {
        ParseError { line: t.line, col: t.col, kind }
    }

    fn syntax<T>(&self, what: &str) -> PResult<T> {
        let t = self.peek();
        Err(Self::err_at(t, ParseErrorKind::Syntax(format!("expected {what}, found {}", t.tok))))
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == kw)
    }

    fn expect_sym(&mut self, c: char) -> PResult<Token> {
        if self.is_sym(c) {
            Ok(self.next())
        } else {
            self.syntax(&format!("`{c}`"))
        }
    }

    fn expect_kw(&mut self, kw: &str) -> PResult<()> {
        if self.is_kw(kw) {
            self.next();
            Ok(())
        } else {
            self.syntax(&format!("`{kw}`"))
        }
    }

    fn ident(&mut self) -> PResult<(String, Token)> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => Ok((s, self.next())),
            _ => self.syntax("an identifier"),
        }
    }

    fn nat(&mut self) -> PResult<(IBig, Token)> {
        match self.peek().tok.clone() {
            Tok::Int(n) => Ok((n, self.next())),
            _ => self.syntax("a natural number"),
        }
    }

    fn small_nat(&mut self) -> PResult<usize> {
        let (n, t) = self.nat()?;
        usize::try_from(n).map_err(|_| Self::err_at(&t, ParseErrorKind::Syntax("number too large".into())))
    }

    fn ring_decl(&mut self) -> PResult<(Ring, usize)> {
        self.expect_kw("ring")?;
        let (dname, dtok) = self.ident()?;
        let domain = match dname.as_str() {
            "Z" | "ZZ" => DomainKind::Integers,
            "Q" | "QQ" => DomainKind::Rationals,
            "Zmod" => {
                let (m, t) = self.nat()?;
                let m = u64::try_from(m)
                    .map_err(|_| Self::err_at(&t, ParseErrorKind::InvalidRing("modulus too large".into())))?;
                DomainKind::residue(m).map_err(|e| Self::err_at(&t, ParseErrorKind::InvalidRing(e.to_string())))?
            }
            other => {
                return Err(Self::err_at(&dtok, ParseErrorKind::InvalidRing(format!("unknown domain `{other}`"))));
            }
        };
        let lt = self.expect_sym('<')?;
        let mut names = vec![self.ident()?.0];
        while self.is_sym(',') {
            self.next();
            names.push(self.ident()?.0);
        }
        self.expect_sym('>')?;
        let (oname, otok) = self.ident()?;
        let (kind, weights) = match oname.as_str() {
            "deglex" => (OrderKind::DegLeftLex, None),
            "degrevlexR" | "degrightlex" => (OrderKind::DegRightLex, None),
            "wdeglex" => {
                self.expect_sym('(')?;
                let mut w = vec![self.small_nat()? as u32];
                while self.is_sym(',') {
                    self.next();
                    w.push(self.small_nat()? as u32);
                }
                self.expect_sym(')')?;
                (OrderKind::WeightedDegLeftLex, Some(w))
            }
            other => {
                return Err(Self::err_at(&otok, ParseErrorKind::InvalidRing(format!("unknown ordering `{other}`"))));
            }
        };
        let alphabet = match weights {
            None => Alphabet::new(&names),
            Some(w) => Alphabet::with_weights(&names, w),
        }
        .map_err(|e| Self::err_at(&lt, ParseErrorKind::InvalidRing(e.to_string())))?;
        let rt = self.expect_sym('(')?;
        let mut ranking = Vec::new();
        loop {
            let (v, t) = self.ident()?;
            let l = alphabet.index_of(&v).ok_or_else(|| Self::err_at(&t, ParseErrorKind::UnknownVariable(v)))?;
            ranking.push(l);
            if self.is_sym('>') {
                self.next();
            } else {
                break;
            }
        }
        self.expect_sym(')')?;
        let order = MonomialOrder::new(kind, &alphabet, &ranking)
            .map_err(|e| Self::err_at(&rt, ParseErrorKind::InvalidRing(e.to_string())))?;
        if !self.is_kw("bound") {
            let t = self.peek();
            return Err(Self::err_at(t, ParseErrorKind::MissingBound));
        }
        self.next();
        let bt = self.peek().clone();
        let bound = self.small_nat()?;
        if bound < 1 {
            return Err(Self::err_at(&bt, ParseErrorKind::InvalidRing("bound must be at least 1".into())));
        }
        Ok((Ring { domain, alphabet, order }, bound))
    }

    fn alg(&self) -> &FreeAlgebra<Rationals> {
        self.alg.as_ref().expect("ring declared")
    }

    fn expr(&mut self) -> PResult<Poly<Rationals>> {
        let mut acc = self.term()?;
        loop {
            if self.is_sym('+') {
                self.next();
                let t = self.term()?;
                acc = self.alg().add(&acc, &t);
            } else if self.is_sym('-') {
                self.next();
                let t = self.term()?;
                acc = self.alg().sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<Poly<Rationals>> {
        let mut acc = self.factor()?;
        loop {
            if self.is_sym('*') {
                self.next();
                let f = self.factor()?;
                acc = self.alg().mul(&acc, &f);
            } else if self.is_sym('/') {
                let slash = self.next();
                if self.domain != Some(DomainKind::Rationals) {
                    return Err(Self::err_at(&slash, ParseErrorKind::Syntax("division is only allowed over Q".into())));
                }
                let f = self.factor()?;
                let c = match f.terms() {
                    [(c, w)] if w.is_empty() => c.clone(),
                    _ => {
                        return Err(Self::err_at(
                            &slash,
                            ParseErrorKind::Syntax("divisor must be a nonzero constant".into()),
                        ));
                    }
                };
                acc = self.alg().scale(&c.recip(), &acc);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> PResult<Poly<Rationals>> {
        if self.is_sym('-') {
            self.next();
            let f = self.factor()?;
            return Ok(self.alg().neg(&f));
        }
        if self.is_sym('+') {
            self.next();
            return self.factor();
        }
        let base = self.atom()?;
        if self.is_sym('^') {
            self.next();
            if self.is_sym('-') {
                let t = self.peek().clone();
                return Err(Self::err_at(&t, ParseErrorKind::NegativeExponent));
            }
            let e = self.small_nat()?;
            return Ok(self.alg().pow(&base, e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Poly<Rationals>> {
        let t = self.peek().clone();
        match t.tok.clone() {
            Tok::Int(n) => {
                self.next();
                let c = BigRational::from_integer(ibig_to_bigint(&n));
                Ok(self.alg().constant(c))
            }
            Tok::Ident(name) => {
                self.next();
                let l = self
                    .alg()
                    .alphabet()
                    .index_of(&name)
                    .ok_or_else(|| Self::err_at(&t, ParseErrorKind::UnknownVariable(name)))?;
                Ok(self.alg().variable(l))
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                self.expect_sym(')')?;
                Ok(e)
            }
            Tok::Sym('[') => {
                self.next();
                let a = self.expr()?;
                self.expect_sym(',')?;
                let b = self.expr()?;
                self.expect_sym(']')?;
                let alg = self.alg();
                Ok(alg.sub(&alg.mul(&a, &b), &alg.mul(&b, &a)))
            }
            _ => self.syntax("a polynomial"),
        }
    }

    fn poly_list(&mut self, out: &mut Vec<Poly<Rationals>>) -> PResult<()> {
        out.push(self.expr()?);
        while self.is_sym(',') {
            self.next();
            out.push(self.expr()?);
        }
        Ok(())
    }
}

fn parser(text: &str) -> PResult<Parser> {
    Ok(Parser { toks: lex(text)?, pos: 0, alg: None, domain: None })
}

/// Parse a complete job.
pub fn parse_job(text: &str) -> Result<Job, ParseError> {
    let mut p = parser(text)?;
    let (ring, bound) = p.ring_decl()?;
    p.expect_sym(';')?;
    p.alg = Some(ring.rational_algebra());
    p.domain = Some(ring.domain.clone());
    let mut generators = Vec::new();
    let mut options = JobOptions::default();
    while p.peek().tok != Tok::Eof {
        let (kw, t) = p.ident()?;
        match kw.as_str() {
            "ideal" => p.poly_list(&mut generators)?,
            "option" => {
                let (name, nt) = p.ident()?;
                match name.as_str() {
                    "reduce" | "redSB" => options.reduce = true,
                    "tail_reduce" | "redTail" => options.tail_reduce = true,
                    "stats" => options.stats = true,
                    "monomials" => options.monomial_basis_upto = Some(p.small_nat()?),
                    other => {
                        return Err(Parser::err_at(&nt, ParseErrorKind::Syntax(format!("unknown option `{other}`"))));
                    }
                }
            }
            other => {
                return Err(Parser::err_at(
                    &t,
                    ParseErrorKind::Syntax(format!("expected `ideal` or `option`, found `{other}`")),
                ));
            }
        }
        p.expect_sym(';')?;
    }
    Ok(Job { ring, bound, generators, options })
}

/// Parse a list of polynomials over an already declared ring, separated by
/// commas, semicolons or newlines (a comma may end a line). Blank lines and
/// `#` comments are skipped, and reading stops at a line starting with
/// `flag:` so that the text output of a run can be fed back in.
pub fn parse_poly_list(ring: &Ring, text: &str) -> Result<Vec<Poly<Rationals>>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.starts_with("flag:") {
            break;
        }
        let line = line.trim_end().trim_end_matches(',');
        let mut p = parser(line).map_err(|e| ParseError { line: lineno + 1, ..e })?;
        p.alg = Some(ring.rational_algebra());
        p.domain = Some(ring.domain.clone());
        let shift = |e: ParseError| ParseError { line: lineno + 1, ..e };
        while p.peek().tok != Tok::Eof {
            p.poly_list(&mut out).map_err(shift)?;
            if p.is_sym(';') {
                p.next();
            } else if p.peek().tok != Tok::Eof {
                return p.syntax("`,`, `;` or end of line").map_err(shift);
            }
        }
    }
    Ok(out)
}

/// Parse one polynomial over the ring.
pub fn parse_poly(ring: &Ring, text: &str) -> Result<Poly<Rationals>, ParseError> {
    let mut p = parser(text)?;
    p.alg = Some(ring.rational_algebra());
    p.domain = Some(ring.domain.clone());
    let e = p.expr()?;
    if p.peek().tok != Tok::Eof {
        return p.syntax("end of input");
    }
    Ok(e)
}

/// The integer value of a rational that is known to be integral.
pub fn integral(c: &BigRational) -> IBig {
    debug_assert!(c.is_integer());
    bigint_to_ibig(c.numer())
}

/// Map a rational-coefficient polynomial into another coefficient domain
/// through its integer coefficients.
pub fn to_ring<R: CoeffRing>(src: &FreeAlgebra<Rationals>, dst: &FreeAlgebra<R>, f: &Poly<Rationals>) -> Poly<R> {
    src.map_into(dst, f, |c| dst.ring().from_int(&integral(c)))
}
