//! The form DSL.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := atom ['^' uint]
//! atom    := int | var | '(' expr ')'
//! var     := 'x' | 'y' | 'z' | 'w'
//! ```
//!
//! Whitespace is ignored. After expansion the form is classified:
//! univariate addends become a [`Combiner::Sum`]; one addend that is a
//! product of a factor in u and a factor in v (with u, v used nowhere else)
//! becomes the multiplicative pair; anything else in two variables falls
//! back to [`Combiner::Mixed`].

use super::{RepError, RepResult};
use crate::poly::{BivarPoly, Domain, IntPoly};
use std::collections::BTreeMap;
use std::fmt;

const VARS: [char; 4] = ['x', 'y', 'z', 'w'];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormPart {
    pub var: char,
    pub poly: IntPoly,
    pub domain: Domain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Combiner {
    /// Σ P_i(x_i).
    Sum,
    /// P_0(u)·P_1(v).
    ProductPair,
    /// Σ P_i(x_i) over all but the last two parts, plus P_{k-2}(u)·P_{k-1}(v).
    SumThenProductPair,
    /// A general polynomial in the two variables of `parts`.
    Mixed(BivarPoly),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSpec {
    pub parts: Vec<FormPart>,
    pub combiner: Combiner,
    pub constant: i64,
}

type Mono = [u32; 4];
type MultiPoly = BTreeMap<Mono, i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> RepError {
    RepError::FormSyntax { pos, msg: msg.into() }
}

fn tokenize(src: &str) -> RepResult<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v = src[start..i].parse::<i64>().map_err(|_| syntax(start, "integer too large"))?;
                out.push((start, Tok::Int(v)));
                continue;
            }
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c => match VARS.iter().position(|&v| v == c) {
                Some(k) => Tok::Var(k),
                None => return Err(syntax(i, format!("unexpected character '{c}'"))),
            },
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Atom {
    Int(i64),
    Var(usize),
    Group(Vec<Term>),
}

#[derive(Debug, Clone)]
struct Factor {
    atom: Atom,
    exp: u32,
}

#[derive(Debug, Clone)]
struct Term {
    sign: i64,
    factors: Vec<Factor>,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|&(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |&(p, _)| p)
    }

    fn expr(&mut self) -> RepResult<Vec<Term>> {
        let mut terms = Vec::new();
        let mut sign = 1;
        if self.peek() == Some(Tok::Minus) {
            self.at += 1;
            sign = -1;
        }
        loop {
            terms.push(Term { sign, factors: self.term()? });
            match self.peek() {
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                _ => return Ok(terms),
            }
            self.at += 1;
        }
    }

    fn term(&mut self) -> RepResult<Vec<Factor>> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(Tok::Star) {
            self.at += 1;
            factors.push(self.factor()?);
        }
        Ok(factors)
    }

    fn factor(&mut self) -> RepResult<Factor> {
        let pos = self.pos();
        let atom = match self.peek() {
            Some(Tok::Int(v)) => Atom::Int(v),
            Some(Tok::Var(k)) => Atom::Var(k),
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(Tok::RParen) {
                    return Err(syntax(self.pos(), "expected ')'"));
                }
                Atom::Group(inner)
            }
            _ => return Err(syntax(pos, "expected an integer, a variable or '('")),
        };
        self.at += 1;
        let mut exp = 1;
        if self.peek() == Some(Tok::Caret) {
            self.at += 1;
            match self.peek() {
                Some(Tok::Int(e)) => {
                    exp = u32::try_from(e).map_err(|_| syntax(self.pos(), "exponent too large"))?;
                    self.at += 1;
                }
                _ => return Err(syntax(self.pos(), "expected an unsigned exponent")),
            }
        }
        Ok(Factor { atom, exp })
    }
}

fn overflow() -> RepError {
    syntax(0, "coefficient overflow")
}

fn poly_mul(a: &MultiPoly, b: &MultiPoly) -> RepResult<MultiPoly> {
    let mut out = MultiPoly::new();
    for (ma, &ca) in a {
        for (mb, &cb) in b {
            let m = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]];
            let c = ca.checked_mul(cb).ok_or_else(overflow)?;
            let e = out.entry(m).or_insert(0);
            *e = e.checked_add(c).ok_or_else(overflow)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

fn poly_add(acc: &mut MultiPoly, p: &MultiPoly, sign: i64) -> RepResult<()> {
    for (m, &c) in p {
        let e = acc.entry(*m).or_insert(0);
        *e = e.checked_add(c.checked_mul(sign).ok_or_else(overflow)?).ok_or_else(overflow)?;
    }
    acc.retain(|_, c| *c != 0);
    Ok(())
}

fn constant_poly(c: i64) -> MultiPoly {
    let mut p = MultiPoly::new();
    if c != 0 {
        p.insert([0; 4], c);
    }
    p
}

fn expand_factor(f: &Factor) -> RepResult<MultiPoly> {
    let base = match &f.atom {
        Atom::Int(v) => constant_poly(*v),
        Atom::Var(k) => {
            let mut m = [0; 4];
            m[*k] = 1;
            MultiPoly::from([(m, 1)])
        }
        Atom::Group(terms) => expand_terms(terms)?,
    };
    let mut out = constant_poly(1);
    for _ in 0..f.exp {
        out = poly_mul(&out, &base)?;
    }
    Ok(out)
}

fn expand_term(t: &Term) -> RepResult<MultiPoly> {
    let mut out = constant_poly(t.sign);
    for f in &t.factors {
        out = poly_mul(&out, &expand_factor(f)?)?;
    }
    Ok(out)
}

fn expand_terms(terms: &[Term]) -> RepResult<MultiPoly> {
    let mut acc = MultiPoly::new();
    for t in terms {
        poly_add(&mut acc, &expand_term(t)?, 1)?;
    }
    Ok(acc)
}

fn vars_of(p: &MultiPoly) -> Vec<usize> {
    (0..4).filter(|&k| p.keys().any(|m| m[k] > 0)).collect()
}

/// The univariate polynomial in variable `k` (all other exponents are zero).
fn univariate(p: &MultiPoly, k: usize) -> IntPoly {
    let terms: Vec<(u32, i64)> = p.iter().map(|(m, &c)| (m[k], c)).collect();
    IntPoly::from_terms(&terms)
}

impl FormSpec {
    /// Parses a form; every variable starts over ℤ.
    pub fn parse(src: &str) -> RepResult<FormSpec> {
        let toks = tokenize(src)?;
        if toks.is_empty() {
            return Err(syntax(0, "empty form"));
        }
        let mut p = Parser { toks, at: 0, end: src.len() };
        let terms = p.expr()?;
        if p.at < p.toks.len() {
            return Err(syntax(p.pos(), "unexpected trailing input"));
        }
        Self::classify(&terms)
    }

    fn classify(terms: &[Term]) -> RepResult<FormSpec> {
        let mut pure: BTreeMap<usize, MultiPoly> = BTreeMap::new();
        let mut constant = MultiPoly::new();
        let mut products = Vec::new();
        for t in terms {
            let p = expand_term(t)?;
            match vars_of(&p).as_slice() {
                [] => poly_add(&mut constant, &p, 1)?,
                [k] => poly_add(pure.entry(*k).or_default(), &p, 1)?,
                _ => products.push(t),
            }
        }
        let constant = constant.get(&[0; 4]).copied().unwrap_or(0);
        let mut parts: Vec<FormPart> = Vec::new();
        for (&k, p) in &pure {
            let poly = univariate(p, k);
            if !poly.is_zero() {
                parts.push(FormPart { var: VARS[k], poly, domain: Domain::AllIntegers });
            }
        }
        match products.as_slice() {
            [] if parts.is_empty() => Err(syntax(0, "the form has no variables")),
            [] => Ok(FormSpec { parts, combiner: Combiner::Sum, constant }),
            [t] => match Self::split_product(t)? {
                Some((u, f, v, g)) if !pure.contains_key(&u) && !pure.contains_key(&v) => {
                    let combiner = if parts.is_empty() { Combiner::ProductPair } else { Combiner::SumThenProductPair };
                    parts.push(FormPart { var: VARS[u], poly: f, domain: Domain::AllIntegers });
                    parts.push(FormPart { var: VARS[v], poly: g, domain: Domain::AllIntegers });
                    Ok(FormSpec { parts, combiner, constant })
                }
                _ => Self::mixed(terms),
            },
            _ => Self::mixed(terms),
        }
    }

    /// `t` as c·f(u)·g(v) when every factor involves at most one variable.
    fn split_product(t: &Term) -> RepResult<Option<(usize, IntPoly, usize, IntPoly)>> {
        let mut by_var: BTreeMap<usize, MultiPoly> = BTreeMap::new();
        let mut coeff = constant_poly(t.sign);
        for f in &t.factors {
            let p = expand_factor(f)?;
            match vars_of(&p).as_slice() {
                [] => coeff = poly_mul(&coeff, &p)?,
                [k] => {
                    let e = by_var.entry(*k).or_insert_with(|| constant_poly(1));
                    *e = poly_mul(e, &p)?;
                }
                _ => return Ok(None),
            }
        }
        let mut it = by_var.into_iter();
        match (it.next(), it.next(), it.next()) {
            (Some((u, f)), Some((v, g)), None) => {
                let f = poly_mul(&f, &coeff)?;
                Ok(Some((u, univariate(&f, u), v, univariate(&g, v))))
            }
            _ => Ok(None),
        }
    }

    fn mixed(terms: &[Term]) -> RepResult<FormSpec> {
        let p = expand_terms(terms)?;
        let vars = vars_of(&p);
        let [a, b] = vars.as_slice() else {
            return Err(syntax(0, "general forms are supported in exactly two variables"));
        };
        let mut constant = 0;
        let mut bterms = Vec::new();
        for (m, &c) in &p {
            if m[*a] == 0 && m[*b] == 0 {
                constant = c;
            } else {
                bterms.push((m[*a], m[*b], c));
            }
        }
        let part = |k: usize| FormPart { var: VARS[k], poly: IntPoly::default(), domain: Domain::AllIntegers };
        Ok(FormSpec { parts: vec![part(*a), part(*b)], combiner: Combiner::Mixed(BivarPoly::new(&bterms)), constant })
    }

    /// Applies `x=Z,y=N1`-style domain assignments.
    pub fn with_domains(mut self, spec: &str) -> RepResult<FormSpec> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (var, dom) = item.split_once('=').ok_or_else(|| RepError::BadDomain(item.to_string()))?;
            let dom = Domain::parse(dom).ok_or_else(|| RepError::BadDomain(item.to_string()))?;
            let var = var.trim();
            let part = self
                .parts
                .iter_mut()
                .find(|p| p.var.to_string() == var)
                .ok_or_else(|| RepError::BadDomain(format!("{var} is not a variable of the form")))?;
            part.domain = dom;
        }
        Ok(self)
    }

    /// Same form with every variable over `domain`.
    pub fn all_over(mut self, domain: Domain) -> FormSpec {
        for p in &mut self.parts {
            p.domain = domain;
        }
        self
    }

    /// Σ P_i(x_i) + constant with the given parts.
    pub fn sum(parts: Vec<FormPart>, constant: i64) -> FormSpec {
        FormSpec { parts, combiner: Combiner::Sum, constant }
    }

    /// Number of sum parts preceding the product pair.
    pub fn sum_len(&self) -> usize {
        match self.combiner {
            Combiner::Sum => self.parts.len(),
            Combiner::ProductPair => 0,
            Combiner::SumThenProductPair => self.parts.len() - 2,
            Combiner::Mixed(_) => 0,
        }
    }

    /// Value of the form at `xs` (one entry per part).
    pub fn eval(&self, xs: &[i64]) -> i128 {
        let k = self.sum_len();
        let mut v: i128 = self.constant as i128;
        for (p, &x) in self.parts[..k].iter().zip(xs) {
            v = v.saturating_add(p.poly.eval(x));
        }
        match &self.combiner {
            Combiner::Sum => v,
            Combiner::ProductPair | Combiner::SumThenProductPair => {
                let f = self.parts[k].poly.eval(xs[k]);
                let g = self.parts[k + 1].poly.eval(xs[k + 1]);
                v.saturating_add(f.saturating_mul(g))
            }
            Combiner::Mixed(b) => v.saturating_add(b.eval(xs[0], xs[1])),
        }
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.sum_len();
        let mut pieces: Vec<String> = self.parts[..k].iter().map(|p| p.poly.fmt_in(&p.var.to_string())).collect();
        match &self.combiner {
            Combiner::Sum => {}
            Combiner::ProductPair | Combiner::SumThenProductPair => {
                let (a, b) = (&self.parts[k], &self.parts[k + 1]);
                pieces.push(format!("({})*({})", a.poly.fmt_in(&a.var.to_string()), b.poly.fmt_in(&b.var.to_string())));
            }
            Combiner::Mixed(b) => {
                let s = b.to_string();
                let (u, v) = (self.parts[0].var, self.parts[1].var);
                pieces.push(s.chars().map(|c| if c == 'x' { u } else if c == 'y' { v } else { c }).collect());
            }
        }
        if self.constant != 0 {
            pieces.push(self.constant.to_string());
        }
        write!(f, "{}", pieces.join(" + ").replace("+ -", "- "))?;
        let doms: Vec<String> = self.parts.iter().map(|p| format!("{}={}", p.var, p.domain)).collect();
        write!(f, " over {}", doms.join(","))
    }
}
